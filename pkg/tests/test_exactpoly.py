"""Exact polynomial arithmetic: examples, errors, and algebraic laws."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cremona3 import (
    ArityMismatch,
    DimensionMismatch,
    IndexOutOfRange,
    MINUS_INFINITY,
    Polynomial,
    variables,
)
from oracle import (
    as_dict,
    from_poly,
    normalize,
    o_add,
    o_mul,
    o_partial,
    o_substitute,
    o_total_degree,
)

X, Y, Z = variables(3)
HALF = Fraction(1, 2)
P = X * Z - HALF * Y ** 2
SHEAR = (X + Y + HALF * Z, Y + Z, Z)  # exp of the x->y->z->0 derivation


def rationals(max_num=9, max_den=4):
    return st.builds(
        Fraction, st.integers(-max_num, max_num), st.integers(1, max_den)
    )


@st.composite
def polynomials(draw, dimension=3, max_degree=4, max_terms=5):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = tuple(
            draw(st.integers(0, max_degree)) for _ in range(dimension)
        )
        terms[exps] = terms.get(exps, Fraction(0)) + draw(rationals())
    return Polynomial(dimension, terms)


# -- construction and canonical form ------------------------------------


def test_construction_merges_and_drops_zeros():
    p = Polynomial(2, [((1, 0), 2), ((1, 0), -2), ((0, 1), 3)])
    assert dict(p.terms) == {(0, 1): Fraction(3)}


def test_construction_rejects_wrong_exponent_length():
    with pytest.raises(DimensionMismatch):
        Polynomial(3, {(1, 0): 1})


def test_construction_rejects_negative_exponents():
    with pytest.raises(DimensionMismatch):
        Polynomial(2, {(-1, 0): 1})


def test_zero_is_canonical_and_tagged_with_dimension():
    zero = Polynomial.zero(3)
    assert zero.is_zero()
    assert zero.dimension == 3
    assert zero == X - X
    with pytest.raises(DimensionMismatch):
        Polynomial.zero(2) + zero


def test_equality_is_term_map_equality():
    assert X * Z - HALF * Y * Y == P
    assert X + Y != X - Y
    assert Polynomial.constant(3, Fraction(5)) == 5
    assert hash(X * Z - HALF * Y * Y) == hash(P)


def test_coefficients_are_reduced_rationals():
    # The coefficient field keeps the invariants: reduced, positive
    # denominator, zero unique as 0/1.
    p = Polynomial(1, {(1,): Fraction(2, 4), (0,): Fraction(-1, -2)})
    assert dict(p.terms) == {(1,): Fraction(1, 2), (0,): Fraction(1, 2)}
    assert Fraction(0, 7) == Fraction(0, 1)


# -- add -----------------------------------------------------------------


def test_add_cancellation():
    assert (X + Y) + (X - Y) == 2 * X


def test_add_identity():
    for f in (P, X ** 3, Polynomial.zero(3)):
        assert f + Polynomial.zero(3) == f


def test_add_recovers_xz():
    assert P + HALF * Y ** 2 == X * Z
    expected = normalize(o_add(from_poly(P), from_poly(HALF * Y ** 2)))
    assert as_dict(P + HALF * Y ** 2) == expected


def test_add_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        X + Polynomial.variable(0, 2)


# -- mul -----------------------------------------------------------------


def test_mul_difference_of_squares():
    assert (X + Y) * (X - Y) == X ** 2 - Y ** 2


def test_mul_identity():
    one = Polynomial.one(3)
    for f in (P, X + 1, Polynomial.zero(3)):
        assert f * one == f


def test_mul_square_of_p():
    expected = X ** 2 * Z ** 2 - X * Y ** 2 * Z + Fraction(1, 4) * Y ** 4
    assert P * P == expected
    assert as_dict(P * P) == normalize(o_mul(from_poly(P), from_poly(P)))


def test_mul_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        X * Polynomial.variable(1, 2)


def test_scalar_arithmetic():
    assert 2 * P == P + P
    assert P / 2 == HALF * P
    assert P - 1 == P + Polynomial.constant(3, -1)
    assert -P == -1 * P
    assert (X + 1) ** 3 == X ** 3 + 3 * X ** 2 + 3 * X + 1


# -- substitute ----------------------------------------------------------


def test_substitute_shear_invariance():
    # p is invariant under the degree-one shear.
    assert P.substitute(list(SHEAR)) == P
    oracle_result = normalize(
        o_substitute(from_poly(P), [from_poly(s) for s in SHEAR], 3)
    )
    assert oracle_result == as_dict(P)


def test_substitute_identity():
    for f in (P, X ** 2 * Y, Polynomial.zero(3)):
        assert f.substitute([X, Y, Z]) == f


def test_substitute_swap():
    assert (X ** 2).substitute([Y, X, Z]) == Y ** 2


def test_substitute_arity_mismatch():
    with pytest.raises(ArityMismatch):
        P.substitute([X, Y])


def test_substitute_mixed_image_dimensions():
    with pytest.raises(DimensionMismatch):
        P.substitute([X, Y, Polynomial.variable(0, 2)])


def test_substitute_changes_dimension():
    u, v = variables(2)
    f = (X + Z).substitute([u, v, u * v])
    assert f == u + u * v


# -- partial derivative ----------------------------------------------------


def test_partial_derivative_of_p():
    assert P.partial_derivative(0) == Z
    assert P.partial_derivative(1) == -Y
    assert as_dict(P.partial_derivative(1)) == normalize(o_partial(from_poly(P), 1))


def test_partial_derivative_of_constant():
    assert Polynomial.constant(3, Fraction(7, 3)).partial_derivative(0).is_zero()


def test_partial_derivative_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        P.partial_derivative(3)


# -- total degree ----------------------------------------------------------


def test_total_degree_of_p():
    assert P.total_degree() == 2


def test_total_degree_of_zero():
    assert Polynomial.zero(3).total_degree() == MINUS_INFINITY


def test_total_degree_of_nagata_first_component():
    component = X + Y * P + HALF * Z * P ** 2
    assert component.total_degree() == 5
    oracle_terms = o_add(
        [(Fraction(1), (1, 0, 0))],
        o_add(
            o_mul([(Fraction(1), (0, 1, 0))], from_poly(P)),
            o_mul(
                [(HALF, (0, 0, 1))],
                o_mul(from_poly(P), from_poly(P)),
            ),
        ),
    )
    assert o_total_degree(oracle_terms) == 5


# -- structure helpers -----------------------------------------------------


def test_coefficient_of_power():
    f = X ** 2 * Z + X * Y + Z
    assert f.coefficient_of_power(0, 2) == Z
    assert f.coefficient_of_power(0, 1) == Y
    assert f.coefficient_of_power(0, 0) == Z


def test_divided_by_power():
    f = X * Z ** 2 + Z ** 3
    assert f.divided_by_power(2, 2) == X + Z
    assert f.divided_by_power(2, 3) is None
    assert Polynomial.zero(3).divided_by_power(2, 5) == Polynomial.zero(3)


def test_depends_only_on():
    assert (Z ** 3 + 1).depends_only_on({2})
    assert not (Y + Z).depends_only_on({2})
    assert Polynomial.zero(3).depends_only_on(set())


def test_extend():
    lifted = P.extend(1)
    assert lifted.dimension == 4
    assert lifted.degree_in(3) == 0
    assert lifted.substitute([*variables(3), Polynomial.zero(3)]) == P


def test_constant_helpers():
    from cremona3 import rational

    assert rational("3/4") == Fraction(3, 4)
    assert rational(2, 6) == Fraction(1, 3)
    five = Polynomial.constant(3, 5)
    assert five.is_constant() and five.constant_term() == 5
    assert Polynomial.zero(3).is_constant()
    assert not P.is_constant()
    assert P.constant_term() == 0
    assert (P + 7).constant_term() == 7


def test_used_variables():
    assert P.used_variables() == {0, 1, 2}
    assert (Z ** 4).used_variables() == {2}
    assert Polynomial.zero(3).used_variables() == frozenset()


# -- algebraic laws --------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(polynomials(), polynomials(), polynomials())
def test_add_associative_mul_distributive(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h


@settings(max_examples=60, deadline=None)
@given(polynomials(), polynomials())
def test_mul_commutes_and_matches_oracle(f, g):
    assert f * g == g * f
    assert as_dict(f * g) == normalize(o_mul(from_poly(f), from_poly(g)))


@settings(max_examples=30, deadline=None)
@given(
    polynomials(max_degree=3, max_terms=4),
    polynomials(max_degree=3, max_terms=4),
    st.tuples(
        polynomials(max_degree=2, max_terms=3),
        polynomials(max_degree=2, max_terms=3),
        polynomials(max_degree=2, max_terms=3),
    ),
)
def test_substitute_is_a_ring_homomorphism(f, g, images):
    images = list(images)
    assert (f * g).substitute(images) == f.substitute(images) * g.substitute(images)
    assert (f + g).substitute(images) == f.substitute(images) + g.substitute(images)


@settings(max_examples=60, deadline=None)
@given(polynomials(), polynomials(), st.integers(0, 2))
def test_partial_derivative_leibniz(f, g, index):
    lhs = (f * g).partial_derivative(index)
    rhs = f.partial_derivative(index) * g + f * g.partial_derivative(index)
    assert lhs == rhs
