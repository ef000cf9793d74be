"""End-to-end verification of the identities the package is built on.

Each check re-derives one published identity (or a whole family of them
on random samples) and reports PASS/FAIL with a counterexample component
on failure.  The command line exposes the suite as ``verify-paper``; the
acceptance tests run the same checks at their full sample counts.

Sampling uses ``random.Random`` seeded explicitly, so a given seed
reproduces the exact run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .autgroup import (
    AffineGenerator,
    AutWord,
    PolyMap,
    TriangularGenerator,
    compose,
)
from .centralizer import Decomposition, decompose, reconstruct, verify_theorem_identities
from .derivation import Derivation, Nilpotency, from_kernel_coordinates, kernel_coordinates
from .errors import NotMonomialInK
from .exactpoly import Polynomial
from .grammar import format_polynomial, parse_polynomial
from .nagata import (
    TorusElement,
    UnipotentElement,
    character_lambda,
    k_monomial,
    lambda_degree,
    standard_objects,
    torus_conjugate,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Profile:
    """Sample counts for the randomized checks."""

    kernel_roundtrips: int
    decomposition_roundtrips: int
    normality_samples: int
    character_samples: int
    flow_samples: int
    word_samples: int
    parser_roundtrips: int


#: Full counts used by the acceptance suite.
FULL = Profile(
    kernel_roundtrips=100,
    decomposition_roundtrips=200,
    normality_samples=50,
    character_samples=20,
    flow_samples=50,
    word_samples=100,
    parser_roundtrips=500,
)

#: Reduced counts so one ``verify-paper`` run stays comfortably fast.
QUICK = Profile(
    kernel_roundtrips=40,
    decomposition_roundtrips=40,
    normality_samples=12,
    character_samples=8,
    flow_samples=12,
    word_samples=30,
    parser_roundtrips=150,
)


# -- samplers ------------------------------------------------------------


def random_rational(rng: random.Random, magnitude: int = 4) -> Fraction:
    return Fraction(rng.randint(-magnitude, magnitude), rng.choice((1, 1, 1, 2, 3)))


def random_nonzero_rational(rng: random.Random, magnitude: int = 4) -> Fraction:
    while True:
        value = random_rational(rng, magnitude)
        if value:
            return value


def random_polynomial(
    rng: random.Random, dimension: int = 3, max_degree: int = 6, max_terms: int = 6
) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        while True:
            exps = tuple(rng.randint(0, max_degree) for _ in range(dimension))
            if sum(exps) <= max_degree:
                break
        terms[exps] = terms.get(exps, Fraction(0)) + random_rational(rng)
    return Polynomial(dimension, terms)


def random_z_polynomial(rng: random.Random, max_degree: int = 4) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0, 3)):
        exps = (0, 0, rng.randint(0, max_degree))
        terms[exps] = terms.get(exps, Fraction(0)) + random_rational(rng)
    return Polynomial(3, terms)


def random_kernel_polynomial(rng: random.Random, max_degree: int = 3) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0, 3)):
        a = rng.randint(0, max_degree)
        b = rng.randint(0, max_degree - a)
        terms[(a, b)] = terms.get((a, b), Fraction(0)) + random_rational(rng, 3)
    return Polynomial(2, terms)


_ALPHAS = (
    Fraction(1),
    Fraction(-1),
    Fraction(2),
    Fraction(-2),
    Fraction(3),
    Fraction(-3),
    Fraction(1, 2),
)


def random_decomposition(rng: random.Random) -> Decomposition:
    return Decomposition(
        alpha=rng.choice(_ALPHAS),
        w=random_z_polynomial(rng, max_degree=4),
        q=random_kernel_polynomial(rng, max_degree=3),
    )


def random_torus(rng: random.Random) -> TorusElement:
    return TorusElement(random_nonzero_rational(rng), random_nonzero_rational(rng))


def random_affine_generator(rng: random.Random, dimension: int = 3) -> AffineGenerator:
    while True:
        matrix = [
            [Fraction(rng.randint(-2, 2)) for _ in range(dimension)] for _ in range(dimension)
        ]
        try:
            return AffineGenerator(matrix, [Fraction(rng.randint(-2, 2)) for _ in range(dimension)])
        except Exception:
            continue


def random_triangular_generator(
    rng: random.Random,
    dimension: int = 3,
    max_tail_degree: int = 3,
    tail_degrees: Optional[Sequence[int]] = None,
) -> TriangularGenerator:
    """Random triangular generator; ``tail_degrees`` caps each component."""
    if tail_degrees is None:
        tail_degrees = [rng.randint(0, max_tail_degree) for _ in range(dimension - 1)] + [0]
    components = []
    for i in range(dimension):
        comp = Polynomial.variable(i, dimension) * rng.choice((1, -1, 2, Fraction(1, 2)))
        cap = tail_degrees[i] if i < dimension - 1 else 0
        for _ in range(rng.randint(0, 2)):
            exps = [0] * dimension
            budget = rng.randint(0, cap) if cap else 0
            for j in range(i + 1, dimension):
                exps[j] = rng.randint(0, budget)
                budget -= exps[j]
            comp = comp + Polynomial(dimension, {tuple(exps): random_rational(rng, 2)})
        components.append(comp)
    return TriangularGenerator(components)


def _triangular_cost(tail_degrees: Sequence[int]) -> int:
    # Degree contributed to the evaluated word times the degree its
    # inverse contributes: the inverse of component i substitutes the
    # later inverses into a degree-d_i tail, so inverse degrees compound
    # bottom-up while the forward degree is just the largest tail.
    forward = max([1, *tail_degrees])
    inverse = 1
    for d in reversed(tail_degrees):
        inverse = max(inverse, d * inverse, 1)
    return forward * inverse


def random_tame_word(
    rng: random.Random,
    dimension: int = 3,
    max_length: int = 6,
    max_tail_degree: int = 3,
    cost_budget: int = 400,
) -> AutWord:
    """A random word in affine and triangular generators.

    Affine factors are free; triangular factors are budgeted by the
    product of the degrees they contribute to the evaluated word and to
    the evaluated inverse word (six stacked cubic tails would reach
    composed degree 729 and inverse degree in the hundreds of thousands).
    The group laws hold for every word; the cap only bounds test cost.
    """
    factors = []
    cost = 1
    for _ in range(rng.randint(1, max_length)):
        if rng.random() < 0.5:
            factors.append(random_affine_generator(rng, dimension))
            continue
        tails = [rng.randint(0, max_tail_degree) for _ in range(dimension - 1)] + [0]
        while cost * _triangular_cost(tails) > cost_budget and any(tails):
            largest = max(range(dimension), key=lambda i: tails[i])
            tails[largest] -= 1
        cost *= _triangular_cost(tails)
        factors.append(random_triangular_generator(rng, dimension, tail_degrees=tails))
    return AutWord(dimension, factors)


# -- individual checks ---------------------------------------------------


def check_nagata_formula() -> CheckResult:
    """exp(pD) equals the displayed quintic triple, term for term."""
    name = "nagata-formula"
    objs = standard_objects()
    x, y, z = (Polynomial.variable(i, 3) for i in range(3))
    p = x * z - Fraction(1, 2) * y ** 2
    expected = PolyMap(
        (
            x + y * p + Fraction(1, 2) * z * p ** 2,
            y + z * p,
            z,
        )
    )
    computed = PolyMap(objs.D.scaled_by(objs.p).exp_map())
    if computed != expected:
        return CheckResult(name, False, f"got {computed}")
    degrees = tuple(c.total_degree() for c in computed.components)
    if degrees != (5, 3, 1):
        return CheckResult(name, False, f"component degrees {degrees}, expected (5, 3, 1)")
    return CheckResult(name, True)


def check_kernel_ring(rng: random.Random, trials: int) -> CheckResult:
    """D kills p, and kernel coordinates round-trip random c(Z, P)."""
    name = "kernel-ring"
    objs = standard_objects()
    if not objs.D.apply(objs.p).is_zero():
        return CheckResult(name, False, "D(p) != 0")
    for _ in range(trials):
        c = random_kernel_polynomial(rng, max_degree=4)
        expanded = from_kernel_coordinates(c)
        if not objs.D.apply(expanded).is_zero():
            return CheckResult(name, False, f"c(z,p) escapes the kernel for c = {c!r}")
        back = kernel_coordinates(expanded)
        if back != c:
            return CheckResult(
                name,
                False,
                f"round trip failed: {format_polynomial(c, ('Z', 'P'))} came back as "
                f"{format_polynomial(back, ('Z', 'P'))}",
            )
    return CheckResult(name, True)


def check_decomposition_roundtrip(rng: random.Random, trials: int) -> CheckResult:
    """decompose o reconstruct and reconstruct o decompose are identities."""
    name = "centralizer-decomposition"
    objs = standard_objects()
    h_triple = decompose(objs.h)
    if (h_triple.alpha, h_triple.w, h_triple.q) != (
        Fraction(1),
        Polynomial.zero(3),
        Polynomial(2, {(0, 1): 1}),
    ):
        return CheckResult(name, False, f"decompose(h) gave alpha={h_triple.alpha}, w={h_triple.w}, q={h_triple.q}")
    for _ in range(trials):
        d = random_decomposition(rng)
        f = reconstruct(d)
        d_back = decompose(f)
        if d_back != d:
            return CheckResult(name, False, f"triple round trip failed for alpha={d.alpha}")
        if reconstruct(d_back) != f:
            return CheckResult(name, False, f"map round trip failed for alpha={d.alpha}")
    return CheckResult(name, True)


def check_semidirect_normality(rng: random.Random, trials: int) -> CheckResult:
    """Conjugation keeps each factor of C |x (F2 |x F1) in place."""
    name = "semidirect-normality"
    zero_w = Polynomial.zero(3)
    zero_q = Polynomial.zero(2)
    for _ in range(trials):
        alpha = rng.choice(_ALPHAS)
        w = random_z_polynomial(rng)
        q = random_kernel_polynomial(rng)
        scalar = reconstruct(Decomposition(alpha, zero_w, zero_q))
        scalar_inv = reconstruct(Decomposition(Fraction(1) / alpha, zero_w, zero_q))
        shift = reconstruct(Decomposition(Fraction(1), w, zero_q))
        shift_inv = reconstruct(Decomposition(Fraction(1), -w, zero_q))
        shear = reconstruct(Decomposition(Fraction(1), zero_w, q))

        conj = decompose(compose(scalar, compose(shift, scalar_inv)))
        if conj.alpha != 1 or not conj.q.is_zero():
            return CheckResult(name, False, "conjugating an x-shift by a scalar left F2")

        conj = decompose(compose(scalar, compose(shear, scalar_inv)))
        if conj.alpha != 1 or not conj.w.is_zero():
            return CheckResult(name, False, "conjugating a kernel shear by a scalar left F1")

        conj = decompose(compose(shift, compose(shear, shift_inv)))
        if conj.alpha != 1 or not conj.w.is_zero():
            return CheckResult(name, False, "conjugating a kernel shear by an x-shift left F1")
    return CheckResult(name, True)


def check_torus_characters(rng: random.Random, trials: int) -> CheckResult:
    """Conjugation scales exp(s p(pz^2)^k D) by exactly (bg)^(2k+1)."""
    name = "torus-characters"
    for k in range(4):
        for _ in range(trials):
            t = random_torus(rng)
            s = random_nonzero_rational(rng)
            u = UnipotentElement(k_monomial(k), s)
            conjugated = torus_conjugate(t, u)
            expected = UnipotentElement(k_monomial(k), s * character_lambda(k, t))
            if conjugated != expected or conjugated.to_map() != expected.to_map():
                return CheckResult(
                    name,
                    False,
                    f"k={k}, beta={t.beta}, gamma={t.gamma}, s={s}: got exponent "
                    f"{format_polynomial(conjugated.kernel_part(), ('Z', 'P'))}",
                )
    return CheckResult(name, True)


def check_theorem_chain() -> CheckResult:
    """The exact identity chain that pins the scale factor to 1."""
    name = "conjugation-chain"
    report = verify_theorem_identities()
    if report.all_passed:
        return CheckResult(name, True)
    failure = report.first_failure
    return CheckResult(name, False, f"{failure.name}: {failure.detail}")


def check_flow_commutation(rng: random.Random, trials: int) -> CheckResult:
    """Every sampled commuting map also commutes with the formal flow."""
    name = "flow-commutation"
    objs = standard_objects()
    t = Polynomial.variable(3, 4)
    flow = PolyMap(tuple(objs.D.formal_flow()) + (t,))
    for _ in range(trials):
        f = reconstruct(random_decomposition(rng))
        lifted = PolyMap(tuple(c.extend(1) for c in f.components) + (t,))
        if compose(lifted, flow) != compose(flow, lifted):
            return CheckResult(name, False, f"map {f} does not commute with the flow")
    return CheckResult(name, True)


def check_group_laws(rng: random.Random, trials: int) -> CheckResult:
    """Word evaluation is a homomorphism and word inverses are two-sided."""
    name = "group-laws"
    for _ in range(trials):
        word = random_tame_word(rng)
        forward = word.evaluate()
        backward = word.inverse().evaluate()
        if not compose(forward, backward).is_identity():
            return CheckResult(name, False, f"right inverse failed for a word of length {len(word)}")
        if not compose(backward, forward).is_identity():
            return CheckResult(name, False, f"left inverse failed for a word of length {len(word)}")
        cut = rng.randint(0, len(word))
        prefix = AutWord(word.dimension, word.factors[:cut])
        suffix = AutWord(word.dimension, word.factors[cut:])
        if compose(prefix.evaluate(), suffix.evaluate()) != forward:
            return CheckResult(name, False, "evaluation is not a homomorphism under concatenation")
    return CheckResult(name, True)


def check_parser_roundtrip(rng: random.Random, trials: int) -> CheckResult:
    """parse o format is the identity and formatting is deterministic."""
    name = "parser-roundtrip"
    for _ in range(trials):
        p = random_polynomial(rng, dimension=3, max_degree=6)
        text = format_polynomial(p)
        if format_polynomial(p) != text:
            return CheckResult(name, False, "formatter is not deterministic")
        if parse_polynomial(text, 3) != p:
            return CheckResult(name, False, f"round trip failed for {text!r}")
    return CheckResult(name, True)


def check_negative_controls() -> CheckResult:
    """Known non-members and non-identities are detected as such."""
    name = "negative-controls"
    from .centralizer import is_in_centralizer

    objs = standard_objects()
    x, y, z = (Polynomial.variable(i, 3) for i in range(3))
    if is_in_centralizer(PolyMap((x + y, y, z))):
        return CheckResult(name, False, "(x+y, y, z) was accepted into the centralizer")
    try:
        lambda_degree(objs.p + objs.p ** 2 * z ** 2)
    except NotMonomialInK:
        pass
    else:
        return CheckResult(name, False, "a mixed exponent was accepted as a single character monomial")
    euler = Derivation((x, Polynomial.zero(3), Polynomial.zero(3)))
    report = euler.is_locally_nilpotent(10)
    if report.verdict is not Nilpotency.NOT_NILPOTENT_WITNESS or report.witness is None:
        return CheckResult(name, False, "x d/dx was not recognized as non-nilpotent")
    exp_z = PolyMap(objs.D.scaled_by(z).exp_map())
    exp_2z = PolyMap(objs.D.scaled_by(z * 2).exp_map())
    if exp_z == exp_2z:
        return CheckResult(name, False, "exp(2zD) compared equal to exp(zD)")
    return CheckResult(name, True)


#: Stable ordering of the suite; one output line per entry.
SUITE: tuple[tuple[str, Callable[..., CheckResult]], ...] = (
    ("nagata-formula", lambda rng, prof: check_nagata_formula()),
    ("kernel-ring", lambda rng, prof: check_kernel_ring(rng, prof.kernel_roundtrips)),
    (
        "centralizer-decomposition",
        lambda rng, prof: check_decomposition_roundtrip(rng, prof.decomposition_roundtrips),
    ),
    (
        "semidirect-normality",
        lambda rng, prof: check_semidirect_normality(rng, prof.normality_samples),
    ),
    ("torus-characters", lambda rng, prof: check_torus_characters(rng, prof.character_samples)),
    ("conjugation-chain", lambda rng, prof: check_theorem_chain()),
    ("flow-commutation", lambda rng, prof: check_flow_commutation(rng, prof.flow_samples)),
    ("group-laws", lambda rng, prof: check_group_laws(rng, prof.word_samples)),
    ("parser-roundtrip", lambda rng, prof: check_parser_roundtrip(rng, prof.parser_roundtrips)),
    ("negative-controls", lambda rng, prof: check_negative_controls()),
)


def run_suite(seed: int = 0, profile: Profile = QUICK) -> list[CheckResult]:
    results = []
    for name, runner in SUITE:
        rng = random.Random(f"{seed}:{name}")
        results.append(runner(rng, profile))
    return results
