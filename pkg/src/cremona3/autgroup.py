"""Automorphisms of affine n-space as validated generator words.

A word is a list of generators in functional order (leftmost applied
last); ``evaluate`` multiplies the word out to an explicit polynomial
map via substitution.  Composition follows (f o g)(a) = f(g(a)), i.e.
``compose(f, g)`` substitutes g's components into f.

Validity is enforced when a generator is constructed, never re-derived
from a raw map: affine parts must be invertible, triangular components
must have the shape c_i*x_i + h_i(x_{i+1}..x_n) with c_i != 0, exponents
must lie in the kernel of a locally nilpotent derivation, scalars must
be nonzero.  Inversion is defined on words (each generator has a
closed-form inverse); raw maps are never inverted.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import grammar
from .derivation import DEFAULT_BOUND, Derivation, Nilpotency
from .errors import DimensionMismatch, InvalidGenerator
from .exactpoly import Polynomial


class PolyMap:
    """An explicit polynomial self-map of affine n-space.

    Carries no invertibility promise; invertible maps arrive as words.
    """

    __slots__ = ("_components",)

    def __init__(self, components: Sequence[Polynomial]):
        components = tuple(components)
        if not components:
            raise DimensionMismatch("a map needs at least one component")
        n = len(components)
        for c in components:
            if c.dimension != n:
                raise DimensionMismatch(
                    f"component dimension {c.dimension} != map dimension {n}"
                )
        self._components = components

    @classmethod
    def identity(cls, dimension: int) -> "PolyMap":
        return cls(tuple(Polynomial.variable(i, dimension) for i in range(dimension)))

    @property
    def dimension(self) -> int:
        return len(self._components)

    @property
    def components(self) -> tuple[Polynomial, ...]:
        return self._components

    def compose(self, other: "PolyMap") -> "PolyMap":
        """self o other: apply other first."""
        if self.dimension != other.dimension:
            raise DimensionMismatch(
                f"cannot compose maps of dimensions {self.dimension} and {other.dimension}"
            )
        return PolyMap(tuple(c.substitute(other._components) for c in self._components))

    def is_identity(self) -> bool:
        return self == PolyMap.identity(self.dimension)

    def __eq__(self, other):
        if isinstance(other, PolyMap):
            return self._components == other._components
        return NotImplemented

    def __hash__(self):
        return hash(self._components)

    def __str__(self):
        return grammar.format_map(self._components)

    def __repr__(self):
        return f"PolyMap({str(self)!r})"


def compose(f: PolyMap, g: PolyMap) -> PolyMap:
    return f.compose(g)


def commutes(f: PolyMap, g: PolyMap) -> bool:
    """True iff f o g equals g o f exactly."""
    if f.dimension != g.dimension:
        raise DimensionMismatch(
            f"cannot compare maps of dimensions {f.dimension} and {g.dimension}"
        )
    return f.compose(g) == g.compose(f)


def parse_poly_map(text: str, dimension: Optional[int] = None) -> PolyMap:
    """Parse a "(e1, ..., en)" literal into a PolyMap."""
    return PolyMap(grammar.parse_map(text, dimension))


# -- exact linear algebra over the rationals ---------------------------


def _determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(rows)
    m = [list(map(Fraction, row)) for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def _matrix_inverse(rows: Sequence[Sequence[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(rows)
    m = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            raise InvalidGenerator("affine matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        inv = Fraction(1) / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


# -- generators ---------------------------------------------------------


class GeneratorShape(Enum):
    AFFINE = "affine"
    TRIANGULAR = "triangular"
    NEITHER = "neither"


class AffineGenerator:
    """x -> A x + b with A invertible."""

    __slots__ = ("matrix", "translation")

    def __init__(self, matrix: Sequence[Sequence], translation: Sequence):
        matrix = tuple(tuple(Fraction(v) for v in row) for row in matrix)
        translation = tuple(Fraction(v) for v in translation)
        n = len(matrix)
        if n == 0 or any(len(row) != n for row in matrix) or len(translation) != n:
            raise InvalidGenerator("affine generator needs a square matrix and a matching vector")
        if not _determinant(matrix):
            raise InvalidGenerator("affine matrix is singular")
        self.matrix = matrix
        self.translation = translation

    @property
    def dimension(self) -> int:
        return len(self.matrix)

    def to_map(self) -> PolyMap:
        n = self.dimension
        xs = [Polynomial.variable(j, n) for j in range(n)]
        comps = []
        for i in range(n):
            comp = Polynomial.constant(n, self.translation[i])
            for j in range(n):
                if self.matrix[i][j]:
                    comp = comp + xs[j] * self.matrix[i][j]
            comps.append(comp)
        return PolyMap(comps)

    def inverse(self) -> "AffineGenerator":
        inv = _matrix_inverse(self.matrix)
        shift = tuple(
            -sum((inv[i][j] * self.translation[j] for j in range(self.dimension)), Fraction(0))
            for i in range(self.dimension)
        )
        return AffineGenerator(inv, shift)

    def __eq__(self, other):
        if isinstance(other, AffineGenerator):
            return self.matrix == other.matrix and self.translation == other.translation
        return NotImplemented

    def __repr__(self):
        return f"AffineGenerator({self.matrix!r}, {self.translation!r})"


class TriangularGenerator:
    """Components c_i * x_i + h_i where h_i involves only later variables."""

    __slots__ = ("components", "_diagonal", "_tails")

    def __init__(self, components: Sequence[Polynomial]):
        components = tuple(components)
        n = len(components)
        diagonal = []
        tails = []
        for i, comp in enumerate(components):
            if comp.dimension != n:
                raise DimensionMismatch(
                    f"component dimension {comp.dimension} != generator dimension {n}"
                )
            xi = Polynomial.variable(i, n)
            ci = comp.terms.get(tuple(1 if j == i else 0 for j in range(n)), Fraction(0))
            if not ci:
                raise InvalidGenerator(f"component {i} has no x_{i + 1} term")
            tail = comp - xi * ci
            if not tail.depends_only_on(range(i + 1, n)):
                raise InvalidGenerator(
                    f"component {i} must depend on x_{i + 1} linearly and otherwise only on later variables"
                )
            diagonal.append(ci)
            tails.append(tail)
        self.components = components
        self._diagonal = tuple(diagonal)
        self._tails = tuple(tails)

    @property
    def dimension(self) -> int:
        return len(self.components)

    def to_map(self) -> PolyMap:
        return PolyMap(self.components)

    def inverse(self) -> "TriangularGenerator":
        # Back-substitution from the last component upward.
        n = self.dimension
        xs = [Polynomial.variable(i, n) for i in range(n)]
        inverse_components: list[Polynomial] = list(xs)
        for i in range(n - 1, -1, -1):
            images = xs[: i + 1] + inverse_components[i + 1 :]
            shifted_tail = self._tails[i].substitute(images)
            inverse_components[i] = (xs[i] - shifted_tail) / self._diagonal[i]
        return TriangularGenerator(inverse_components)

    def __eq__(self, other):
        if isinstance(other, TriangularGenerator):
            return self.components == other.components
        return NotImplemented

    def __repr__(self):
        return f"TriangularGenerator({grammar.format_map(self.components)!r})"


class ExponentialGenerator:
    """exp(scale * q * D) for q in ker D, D locally nilpotent."""

    __slots__ = ("q", "derivation", "scale")

    def __init__(self, q: Polynomial, derivation: Derivation, scale=1, bound: int = DEFAULT_BOUND):
        if q.dimension != derivation.dimension:
            raise DimensionMismatch(
                f"exponent dimension {q.dimension} != derivation dimension {derivation.dimension}"
            )
        if not derivation.apply(q).is_zero():
            raise InvalidGenerator("exponent must lie in the kernel of the derivation")
        report = derivation.is_locally_nilpotent(bound)
        if report.verdict is not Nilpotency.LOCALLY_NILPOTENT_UP_TO_BOUND:
            raise InvalidGenerator(
                f"derivation is not verifiably locally nilpotent within bound {bound}"
            )
        self.q = q
        self.derivation = derivation
        self.scale = Fraction(scale)

    @property
    def dimension(self) -> int:
        return self.q.dimension

    def to_map(self) -> PolyMap:
        return PolyMap(self.derivation.scaled_by(self.q * self.scale).exp_map())

    def inverse(self) -> "ExponentialGenerator":
        return ExponentialGenerator(self.q, self.derivation, -self.scale)

    def __eq__(self, other):
        if isinstance(other, ExponentialGenerator):
            return (
                self.q == other.q
                and self.derivation == other.derivation
                and self.scale == other.scale
            )
        return NotImplemented

    def __repr__(self):
        return f"ExponentialGenerator({self.q!r}, scale={self.scale})"


class ScalarGenerator:
    """x -> (a*x_1, ..., a*x_n) with a != 0."""

    __slots__ = ("alpha", "_dimension")

    def __init__(self, alpha, dimension: int = 3):
        alpha = Fraction(alpha)
        if not alpha:
            raise InvalidGenerator("scalar generator needs a nonzero ratio")
        self.alpha = alpha
        self._dimension = dimension

    @property
    def dimension(self) -> int:
        return self._dimension

    def to_map(self) -> PolyMap:
        n = self._dimension
        return PolyMap(tuple(Polynomial.variable(i, n) * self.alpha for i in range(n)))

    def inverse(self) -> "ScalarGenerator":
        return ScalarGenerator(Fraction(1) / self.alpha, self._dimension)

    def __eq__(self, other):
        if isinstance(other, ScalarGenerator):
            return self.alpha == other.alpha and self._dimension == other._dimension
        return NotImplemented

    def __repr__(self):
        return f"ScalarGenerator({self.alpha}, dimension={self._dimension})"


Generator = (AffineGenerator, TriangularGenerator, ExponentialGenerator, ScalarGenerator)


class AutWord:
    """An automorphism as an ordered list of generators.

    Factors are written left to right in functional order:
    ``AutWord(n, [g1, g2, g3])`` evaluates to g1 o g2 o g3.
    """

    __slots__ = ("dimension", "factors")

    def __init__(self, dimension: int, factors: Iterable = ()):
        factors = tuple(factors)
        for g in factors:
            if not isinstance(g, Generator):
                raise InvalidGenerator(f"not a generator: {g!r}")
            if g.dimension != dimension:
                raise DimensionMismatch(
                    f"generator dimension {g.dimension} != word dimension {dimension}"
                )
        self.dimension = dimension
        self.factors = factors

    def evaluate(self) -> PolyMap:
        result = PolyMap.identity(self.dimension)
        for g in self.factors:
            result = result.compose(g.to_map())
        return result

    def inverse(self) -> "AutWord":
        return AutWord(self.dimension, tuple(g.inverse() for g in reversed(self.factors)))

    def concat(self, other: "AutWord") -> "AutWord":
        if self.dimension != other.dimension:
            raise DimensionMismatch("cannot concatenate words of different dimensions")
        return AutWord(self.dimension, self.factors + other.factors)

    def __mul__(self, other):
        if isinstance(other, AutWord):
            return self.concat(other)
        return NotImplemented

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __repr__(self):
        return f"AutWord({self.dimension}, {list(self.factors)!r})"


def evaluate(word: AutWord) -> PolyMap:
    return word.evaluate()


def invert_word(word: AutWord) -> AutWord:
    return word.inverse()


def is_tame_generator(m: PolyMap) -> GeneratorShape:
    """Classify the shape of an explicit map.

    This checks generator *shape* only; a map classified NEITHER can
    still be a product of tame generators.
    """
    n = m.dimension
    degrees = [c.total_degree() for c in m.components]
    if all(d <= 1 for d in degrees):
        matrix = [
            [
                c.terms.get(tuple(1 if j == k else 0 for k in range(n)), Fraction(0))
                for j in range(n)
            ]
            for c in m.components
        ]
        if _determinant(matrix):
            return GeneratorShape.AFFINE
    try:
        TriangularGenerator(m.components)
    except (InvalidGenerator, DimensionMismatch):
        return GeneratorShape.NEITHER
    return GeneratorShape.TRIANGULAR
