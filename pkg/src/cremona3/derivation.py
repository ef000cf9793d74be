"""Derivations of the polynomial ring and their exponentials.

A derivation is determined by its images of the coordinate functions,
``D(f) = sum_i D(x_i) * df/dx_i``.  Local nilpotency (every polynomial is
killed by some iterate) makes the exponential series terminate, giving a
polynomial automorphism; ``formal_flow`` adjoins a formal parameter t as
a fresh last variable and returns the one-parameter family exp(tD).

``kernel_coordinates`` is specialized to the fixed three-variable
derivation with images (y, z, 0): its kernel is the polynomial ring in z
and the invariant quadric p = xz - y^2/2, and the function rewrites a
kernel element in those two coordinates (raising NotInKernelRing when
the input does not lie in the kernel ring).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import BoundExceeded, DimensionMismatch, NotInKernelRing
from .exactpoly import Polynomial

#: Iteration budget used when no explicit bound is passed.  The
#: derivations this package manipulates terminate within three steps.
DEFAULT_BOUND = 64

#: Display names for kernel coordinates (z and the invariant quadric).
KERNEL_VARIABLE_NAMES = ("Z", "P")


class Nilpotency(Enum):
    LOCALLY_NILPOTENT_UP_TO_BOUND = "locally nilpotent up to bound"
    NOT_NILPOTENT_WITNESS = "not nilpotent (witness found)"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class NilpotencyReport:
    """Outcome of the semi-decision procedure for local nilpotency.

    ``witness`` is ``(variable index, iteration count)`` for the
    non-nilpotent and inconclusive verdicts; ``reason`` names the
    certificate ("cycle" or "degree growth") when one was found.
    """

    verdict: Nilpotency
    witness: Optional[tuple[int, int]] = None
    reason: Optional[str] = None


@dataclass(frozen=True)
class Derivation:
    """A derivation of C[x_1..x_n], stored as the images D(x_i)."""

    images: tuple[Polynomial, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise DimensionMismatch("a derivation needs at least one image")
        for img in images:
            if img.dimension != n:
                raise DimensionMismatch(
                    f"image {img!r} has dimension {img.dimension}, expected {n}"
                )

    @property
    def dimension(self) -> int:
        return len(self.images)

    def apply(self, f: Polynomial) -> Polynomial:
        """D(f); linear in f and satisfies the Leibniz rule."""
        if f.dimension != self.dimension:
            raise DimensionMismatch(
                f"polynomial dimension {f.dimension} != derivation dimension {self.dimension}"
            )
        out = Polynomial.zero(self.dimension)
        for i, img in enumerate(self.images):
            if img.is_zero():
                continue
            out = out + img * f.partial_derivative(i)
        return out

    def scaled_by(self, q: Polynomial) -> "Derivation":
        """The derivation q * D."""
        return Derivation(tuple(q * img for img in self.images))

    def nilpotency_index(self, f: Polynomial, bound: int = DEFAULT_BOUND) -> int:
        """Least m with D^m(f) = 0, if m <= bound."""
        g = f
        for m in range(bound + 1):
            if g.is_zero():
                return m
            g = self.apply(g)
        raise BoundExceeded(f"D^{bound}(f) is still nonzero; f may not be annihilated")

    def is_locally_nilpotent(self, bound: int = DEFAULT_BOUND) -> NilpotencyReport:
        """Check D^m(x_i) = 0 for every generator within the bound.

        Vanishing on the generators is enough for local nilpotency on the
        whole ring (Leibniz).  A generator whose chain revisits an earlier
        iterate can never vanish, which certifies non-nilpotency; so does
        a degree that never decreased over the last ``dimension`` steps at
        bound exhaustion.  Otherwise exhaustion is inconclusive.
        """
        n = self.dimension
        inconclusive: Optional[NilpotencyReport] = None
        for i in range(n):
            g = Polynomial.variable(i, n)
            seen = {g}
            degrees = [g.total_degree()]
            vanished = False
            for step in range(1, bound + 1):
                g = self.apply(g)
                if g.is_zero():
                    vanished = True
                    break
                if g in seen:
                    return NilpotencyReport(
                        Nilpotency.NOT_NILPOTENT_WITNESS, witness=(i, step), reason="cycle"
                    )
                seen.add(g)
                degrees.append(g.total_degree())
            if vanished:
                continue
            tail = degrees[-(n + 1) :]
            if len(tail) == n + 1 and all(a <= b for a, b in zip(tail, tail[1:])):
                return NilpotencyReport(
                    Nilpotency.NOT_NILPOTENT_WITNESS, witness=(i, bound), reason="degree growth"
                )
            inconclusive = NilpotencyReport(Nilpotency.INCONCLUSIVE, witness=(i, bound))
        if inconclusive is not None:
            return inconclusive
        return NilpotencyReport(Nilpotency.LOCALLY_NILPOTENT_UP_TO_BOUND)

    def exp_map(self, bound: int = DEFAULT_BOUND) -> tuple[Polynomial, ...]:
        """The exponential automorphism (sum_k D^k(x_i)/k!, ...).

        Each series must terminate within the bound, else BoundExceeded.
        """
        components = []
        for i in range(self.dimension):
            g = Polynomial.variable(i, self.dimension)
            acc = g
            k = 0
            while True:
                g = self.apply(g)
                if g.is_zero():
                    break
                k += 1
                if k > bound:
                    raise BoundExceeded(
                        f"exponential series for variable {i} did not terminate within {bound} steps"
                    )
                acc = acc + g * Fraction(1, math.factorial(k))
            components.append(acc)
        return tuple(components)

    def formal_flow(self, bound: int = DEFAULT_BOUND) -> tuple[Polynomial, ...]:
        """exp(tD) with t adjoined as a fresh last variable.

        Returns n polynomials in n+1 variables; specializing t to 1
        recovers ``exp_map`` and t to 0 the identity.
        """
        n = self.dimension
        components = []
        for i in range(n):
            g = Polynomial.variable(i, n)
            acc = g.extend(1)
            k = 0
            while True:
                g = self.apply(g)
                if g.is_zero():
                    break
                k += 1
                if k > bound:
                    raise BoundExceeded(
                        f"flow series for variable {i} did not terminate within {bound} steps"
                    )
                t_power = Polynomial(n + 1, {(0,) * n + (k,): Fraction(1, math.factorial(k))})
                acc = acc + g.extend(1) * t_power
            components.append(acc)
        return tuple(components)


def partial_derivation(index: int, dimension: int) -> Derivation:
    """The coordinate derivation d/dx_index."""
    images = [Polynomial.zero(dimension) for _ in range(dimension)]
    images[index] = Polynomial.one(dimension)
    return Derivation(tuple(images))


@lru_cache(maxsize=1)
def nagata_derivation() -> Derivation:
    """The triangular derivation with x -> y -> z -> 0 (z d/dy + y d/dx)."""
    return Derivation(
        (
            Polynomial.variable(1, 3),
            Polynomial.variable(2, 3),
            Polynomial.zero(3),
        )
    )


@lru_cache(maxsize=1)
def nagata_invariant() -> Polynomial:
    """The kernel quadric p = xz - y^2/2."""
    x, y, z = (Polynomial.variable(i, 3) for i in range(3))
    return x * z - Fraction(1, 2) * y * y


def kernel_coordinates(f: Polynomial) -> Polynomial:
    """Rewrite f as c(Z, P) with c(z, xz - y^2/2) = f.

    Recurses on d = deg_x(f): the x^d coefficient of any element of the
    kernel ring is c_d(z) * z^d, so it must be y-free and divisible by
    z^d; subtract c_d(z) * p^d and repeat.  Raises NotInKernelRing as
    soon as a step fails.
    """
    if f.dimension != 3:
        raise DimensionMismatch(f"kernel coordinates need dimension 3, got {f.dimension}")
    p = nagata_invariant()
    out: dict[tuple[int, int], Fraction] = {}
    work = f
    while not work.is_zero():
        d = work.degree_in(0)
        lead = work.coefficient_of_power(0, d)
        if not lead.depends_only_on({2}):
            raise NotInKernelRing(
                f"the x^{d} coefficient involves y, so the input is not in the kernel ring"
            )
        if d == 0:
            for exps, coeff in lead.terms.items():
                out[(exps[2], 0)] = out.get((exps[2], 0), Fraction(0)) + coeff
            break
        quotient = lead.divided_by_power(2, d)
        if quotient is None:
            raise NotInKernelRing(
                f"the x^{d} coefficient is not divisible by z^{d}"
            )
        for exps, coeff in quotient.terms.items():
            key = (exps[2], d)
            out[key] = out.get(key, Fraction(0)) + coeff
        work = work - quotient * p ** d
    return Polynomial(2, {k: v for k, v in out.items() if v})


def from_kernel_coordinates(c: Polynomial) -> Polynomial:
    """Evaluate c(Z, P) at Z = z, P = xz - y^2/2."""
    if c.dimension != 2:
        raise DimensionMismatch(f"kernel polynomial must have dimension 2, got {c.dimension}")
    return c.substitute([Polynomial.variable(2, 3), nagata_invariant()])
