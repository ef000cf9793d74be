"""The fixed three-variable cast around the Nagata automorphism.

``standard_objects`` returns the derivation D with x -> y -> z -> 0, the
x-derivative E, the invariant quadric p = xz - y^2/2, the Nagata map
h = exp(pD) and the degree-one shear h' = exp(D).

The unipotent elements handled here are exp(q(z,p) D) with q stored in
kernel coordinates (Z, P), where membership tests and character-degree
extraction are monomial inspections: q lies in p*C[p z^2] exactly when
every monomial Z^a P^b has b >= 1 and a = 2(b-1).

The torus (b^2/g * x, b * y, g * z) acts on these by conjugation and
rescales exp(s * p(pz^2)^k D) by the character (b*g)^(2k+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from .autgroup import PolyMap, compose
from .derivation import (
    Derivation,
    from_kernel_coordinates,
    kernel_coordinates,
    nagata_derivation,
    nagata_invariant,
    partial_derivation,
)
from .errors import (
    DimensionMismatch,
    DomainError,
    InvalidGenerator,
    NotInKerEKerD,
    NotInKernelRing,
    NotMonomialInK,
)
from .exactpoly import Polynomial


class StandardObjects(NamedTuple):
    D: Derivation
    E: Derivation
    p: Polynomial
    h: PolyMap
    h_prime: PolyMap


@lru_cache(maxsize=1)
def standard_objects() -> StandardObjects:
    """The shared cast; values are immutable and safe to reuse."""
    D = nagata_derivation()
    E = partial_derivation(0, 3)
    p = nagata_invariant()
    h = PolyMap(D.scaled_by(p).exp_map())
    h_prime = PolyMap(D.exp_map())
    return StandardObjects(D=D, E=E, p=p, h=h, h_prime=h_prime)


@dataclass(frozen=True)
class TorusElement:
    """The diagonal map (beta^2/gamma * x, beta * y, gamma * z)."""

    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        beta = Fraction(self.beta)
        gamma = Fraction(self.gamma)
        if not beta or not gamma:
            raise InvalidGenerator("torus parameters must be nonzero")
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", gamma)

    def weights(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.beta ** 2 / self.gamma, self.beta, self.gamma)

    def to_map(self) -> PolyMap:
        return PolyMap(
            tuple(Polynomial.variable(i, 3) * w for i, w in enumerate(self.weights()))
        )

    def inverse(self) -> "TorusElement":
        return TorusElement(Fraction(1) / self.beta, Fraction(1) / self.gamma)


@dataclass(frozen=True)
class UnipotentElement:
    """exp(scale * q(z, p) * D), with q kept in kernel coordinates."""

    q: Polynomial
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        if self.q.dimension != 2:
            raise DimensionMismatch(
                f"unipotent exponent must be a kernel polynomial in (Z, P), got dimension {self.q.dimension}"
            )
        object.__setattr__(self, "scale", Fraction(self.scale))

    def kernel_part(self) -> Polynomial:
        """The full exponent scale * q as a kernel polynomial."""
        return self.q * self.scale

    def to_map(self) -> PolyMap:
        objs = standard_objects()
        exponent = from_kernel_coordinates(self.kernel_part())
        return PolyMap(objs.D.scaled_by(exponent).exp_map())

    def __eq__(self, other):
        # Two elements are the same automorphism iff the full exponents agree.
        if isinstance(other, UnipotentElement):
            return self.kernel_part() == other.kernel_part()
        return NotImplemented

    def __hash__(self):
        return hash(self.kernel_part())


def f2_element(w: Polynomial) -> PolyMap:
    """The x-translation (x + w(z), y, z) for w in C[z].

    Raises NotInKerEKerD when w involves x or y, since only z-dependent
    shifts are killed by both the x-derivative and the shear derivation.
    """
    if w.dimension != 3:
        raise DimensionMismatch(f"expected a polynomial in x, y, z; got dimension {w.dimension}")
    if not w.depends_only_on({2}):
        raise NotInKerEKerD("the shift must depend on z alone")
    x, y, z = (Polynomial.variable(i, 3) for i in range(3))
    return PolyMap((x + w, y, z))


def k_monomial(k: int) -> Polynomial:
    """p * (p z^2)^k in kernel coordinates: the monomial Z^(2k) P^(k+1)."""
    if not isinstance(k, int) or k < 0:
        raise DomainError(f"character index must be a non-negative integer, got {k!r}")
    return Polynomial(2, {(2 * k, k + 1): Fraction(1)})


def is_in_K(q: Polynomial) -> bool:
    """True iff q = c(z, p) with c in P*C[P Z^2]."""
    if q.dimension != 3:
        raise DimensionMismatch(f"expected a polynomial in x, y, z; got dimension {q.dimension}")
    try:
        c = kernel_coordinates(q)
    except NotInKernelRing:
        return False
    return all(b >= 1 and a == 2 * (b - 1) for a, b in c.terms)


def character_lambda(k: int, t: TorusElement) -> Fraction:
    """The torus character (beta * gamma)^(2k+1)."""
    if not isinstance(k, int) or k < 0:
        raise DomainError(f"character index must be a non-negative integer, got {k!r}")
    return (t.beta * t.gamma) ** (2 * k + 1)


def torus_conjugate(t: TorusElement, u: UnipotentElement) -> UnipotentElement:
    """Conjugate the unipotent element by the torus element.

    The result is again exp(q'D) for a kernel exponent q'; on the
    one-parameter subgroup through exp(s * p(pz^2)^k D) the conjugation
    rescales the exponent by exactly character_lambda(k, t).
    """
    m = compose(t.inverse().to_map(), compose(u.to_map(), t.to_map()))
    y = Polynomial.variable(1, 3)
    shifted = (m.components[1] - y).divided_by_power(2, 1)
    if shifted is None:
        raise DomainError("conjugate is not a kernel shear; this cannot happen for torus elements")
    return UnipotentElement(kernel_coordinates(shifted), Fraction(1))


def scale_unipotent(a, u: UnipotentElement) -> UnipotentElement:
    """The vector-space action exp(qD) -> exp(a q D)."""
    return UnipotentElement(u.q, Fraction(a) * u.scale)


def lambda_degree(q: Polynomial) -> int:
    """The k with q proportional to p*(p z^2)^k.

    Raises NotMonomialInK when q mixes distinct k-monomials or does not
    lie in P*C[P Z^2] at all; such a q does not span a torus-normalized
    one-parameter subgroup.
    """
    if q.dimension != 3:
        raise DimensionMismatch(f"expected a polynomial in x, y, z; got dimension {q.dimension}")
    try:
        c = kernel_coordinates(q)
    except NotInKernelRing as exc:
        raise NotMonomialInK(str(exc)) from exc
    if len(c.terms) != 1:
        raise NotMonomialInK(
            f"exponent has {len(c.terms)} kernel monomials; need exactly one"
        )
    ((a, b),) = c.terms
    if b < 1 or a != 2 * (b - 1):
        raise NotMonomialInK(f"Z^{a} P^{b} is not of the form Z^(2k) P^(k+1)")
    return b - 1


def commutes_with_weight_scaling(m: PolyMap, weights: Sequence[int]) -> bool:
    """True iff m commutes with (l^w1 x_1, ..., l^wn x_n) for formal l.

    Exact symbolic criterion: comparing coefficients of the formal scale
    factor, commutation holds iff every monomial of component i has
    weighted degree equal to weights[i].
    """
    if m.dimension != len(weights):
        raise DimensionMismatch(
            f"map dimension {m.dimension} != number of weights {len(weights)}"
        )
    for target, comp in zip(weights, m.components):
        for exps in comp.terms:
            if sum(w * e for w, e in zip(weights, exps)) != target:
                return False
    return True


#: Weights of the one-parameter group (a^3 x, a y, a^-1 z) that cuts out
#: the subgroup H inside the centralizer.
H_WEIGHTS = (3, 1, -1)
