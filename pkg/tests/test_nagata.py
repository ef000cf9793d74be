"""The fixed three-variable cast: standard objects, subgroups, characters."""

import random
from fractions import Fraction

import pytest

from cremona3 import (
    DomainError,
    NotInKerEKerD,
    NotMonomialInK,
    PolyMap,
    Polynomial,
    TorusElement,
    UnipotentElement,
    character_lambda,
    commutes,
    commutes_with_weight_scaling,
    compose,
    f2_element,
    from_kernel_coordinates,
    is_in_K,
    k_monomial,
    lambda_degree,
    scale_unipotent,
    standard_objects,
    torus_conjugate,
    variables,
    H_WEIGHTS,
)
from cremona3.errors import InvalidGenerator
from cremona3.verify import random_kernel_polynomial, random_nonzero_rational, random_torus

X, Y, Z = variables(3)
HALF = Fraction(1, 2)
OBJS = standard_objects()


def exp_of_kernel(q3):
    return PolyMap(OBJS.D.scaled_by(q3).exp_map())


# -- standard objects ----------------------------------------------------------


def test_h_matches_displayed_formula():
    p = X * Z - HALF * Y ** 2
    expected = PolyMap((X + Y * p + HALF * Z * p ** 2, Y + Z * p, Z))
    assert OBJS.h == expected


def test_h_prime_is_three_term_series():
    assert OBJS.h_prime == PolyMap((X + Y + HALF * Z, Y + Z, Z))


def test_p_lies_in_the_kernel():
    assert OBJS.D.apply(OBJS.p).is_zero()


def test_standard_objects_are_shared():
    assert standard_objects() is OBJS


# -- F2 elements ----------------------------------------------------------------


def test_f2_element_cubic_shift():
    assert f2_element(Z ** 3) == PolyMap((X + Z ** 3, Y, Z))


def test_f2_element_zero_is_identity():
    assert f2_element(Polynomial.zero(3)).is_identity()


def test_f2_element_rejects_y():
    with pytest.raises(NotInKerEKerD):
        f2_element(Y)


# -- K membership ----------------------------------------------------------------


def test_p_is_in_K():
    assert is_in_K(OBJS.p)


def test_p_squared_z_squared_is_in_K():
    assert is_in_K(OBJS.p ** 2 * Z ** 2)


def test_p_times_z_is_not_in_K():
    assert not is_in_K(OBJS.p * Z)


def test_non_kernel_elements_are_not_in_K():
    assert not is_in_K(Y)


def test_zero_is_in_K():
    assert is_in_K(Polynomial.zero(3))


def test_k_monomial_expands_to_p_times_powers():
    for k in range(4):
        expanded = from_kernel_coordinates(k_monomial(k))
        assert expanded == OBJS.p * (OBJS.p * Z ** 2) ** k
        assert is_in_K(expanded)


# -- characters ----------------------------------------------------------------


def test_character_values():
    t = TorusElement(Fraction(2), Fraction(3))
    assert character_lambda(0, t) == 6
    assert character_lambda(1, t) == 216
    assert character_lambda(2, TorusElement(Fraction(1), Fraction(1))) == 1


def test_character_rejects_negative_index():
    with pytest.raises(DomainError):
        character_lambda(-1, TorusElement(Fraction(2), Fraction(3)))


def test_torus_element_rejects_zero_parameters():
    with pytest.raises(InvalidGenerator):
        TorusElement(Fraction(0), Fraction(1))


def test_torus_map_and_inverse():
    t = TorusElement(Fraction(2), Fraction(3))
    assert t.to_map() == PolyMap((Fraction(4, 3) * X, 2 * Y, 3 * Z))
    assert compose(t.to_map(), t.inverse().to_map()).is_identity()


# -- torus conjugation ------------------------------------------------------------


def test_torus_conjugate_scales_nagata_exponent_by_six():
    t = TorusElement(Fraction(2), Fraction(3))
    u = UnipotentElement(k_monomial(0), Fraction(1))
    conjugated = torus_conjugate(t, u)
    assert conjugated.kernel_part() == 6 * k_monomial(0)
    assert conjugated.to_map() == exp_of_kernel(6 * OBJS.p)


def test_torus_conjugate_by_identity_torus():
    u = UnipotentElement(random_kernel_polynomial(random.Random(1), 3), Fraction(2))
    assert torus_conjugate(TorusElement(Fraction(1), Fraction(1)), u) == u


def test_torus_conjugate_k1_scales_by_216():
    t = TorusElement(Fraction(2), Fraction(3))
    u = UnipotentElement(k_monomial(1), Fraction(1))
    assert torus_conjugate(t, u).kernel_part() == 216 * k_monomial(1)


def test_character_consistency_on_random_torus_elements():
    rng = random.Random(99)
    for _ in range(50):
        k = rng.randint(0, 3)
        t = random_torus(rng)
        s = random_nonzero_rational(rng)
        u = UnipotentElement(k_monomial(k), s)
        conjugated = torus_conjugate(t, u)
        expected = UnipotentElement(k_monomial(k), s * character_lambda(k, t))
        assert conjugated == expected
        assert conjugated.to_map() == expected.to_map()


def test_characters_separate_distinct_indices():
    # If two character indices agree on every sampled torus element they
    # must be equal; t = (beta=2, gamma=1) already separates all of them.
    rng = random.Random(7)
    samples = [random_torus(rng) for _ in range(20)]
    samples.append(TorusElement(Fraction(2), Fraction(1)))
    for k in range(4):
        for k_other in range(4):
            agree = all(
                character_lambda(k, t) == character_lambda(k_other, t) for t in samples
            )
            assert agree == (k == k_other)


# -- scaling the one-parameter subgroup ----------------------------------------------


def test_scale_unipotent_by_one_is_identity_action():
    u = UnipotentElement(k_monomial(0), Fraction(1))
    assert scale_unipotent(1, u) == u


def test_scale_unipotent_by_zero_gives_identity_map():
    u = UnipotentElement(k_monomial(2), Fraction(5))
    assert scale_unipotent(0, u).to_map().is_identity()


def test_scale_unipotent_by_two():
    u = UnipotentElement(k_monomial(0), Fraction(1))
    doubled = scale_unipotent(2, u)
    p = OBJS.p
    assert doubled.to_map() == PolyMap((X + 2 * p * Y + 2 * p ** 2 * Z, Y + 2 * p * Z, Z))


def test_scale_unipotent_is_multiplicative():
    u = UnipotentElement(k_monomial(1), Fraction(3, 2))
    assert scale_unipotent(2, scale_unipotent(3, u)) == scale_unipotent(6, u)


def test_unipotent_equality_ignores_factorization():
    assert UnipotentElement(2 * k_monomial(0), Fraction(1)) == UnipotentElement(
        k_monomial(0), Fraction(2)
    )


# -- lambda degree ----------------------------------------------------------------


def test_lambda_degree_of_p():
    assert lambda_degree(OBJS.p) == 0


def test_lambda_degree_of_scaled_monomial():
    assert lambda_degree(-HALF * OBJS.p ** 2 * Z ** 2) == 1


def test_lambda_degree_rejects_mixed_monomials():
    with pytest.raises(NotMonomialInK):
        lambda_degree(OBJS.p + OBJS.p ** 2 * Z ** 2)


def test_lambda_degree_rejects_non_K_monomials():
    with pytest.raises(NotMonomialInK):
        lambda_degree(Z)
    with pytest.raises(NotMonomialInK):
        lambda_degree(Polynomial.zero(3))
    with pytest.raises(NotMonomialInK):
        lambda_degree(Y)


# -- subgroup containment and weights --------------------------------------------


def test_subgroup_elements_commute_with_the_shear():
    rng = random.Random(13)
    h_prime = OBJS.h_prime
    members = [
        PolyMap((3 * X, 3 * Y, 3 * Z)),
        f2_element(Z ** 4 - 2 * Z),
        exp_of_kernel(from_kernel_coordinates(random_kernel_polynomial(rng, 3))),
        exp_of_kernel(OBJS.p * (OBJS.p * Z ** 2) ** 2),
    ]
    for m in members:
        assert commutes(m, h_prime)


def test_K_elements_commute_with_the_weight_torus():
    rng = random.Random(19)
    for k in range(3):
        u = exp_of_kernel(from_kernel_coordinates(k_monomial(k)) * random_nonzero_rational(rng))
        assert commutes_with_weight_scaling(u, H_WEIGHTS)
        for _ in range(5):
            a = random_nonzero_rational(rng)
            s_a = PolyMap((a ** 3 * X, a * Y, (Fraction(1) / a) * Z))
            assert commutes(u, s_a)


def test_p_is_invariant_under_kernel_exponentials():
    rng = random.Random(23)
    assert OBJS.p.substitute(list(OBJS.h.components)) == OBJS.p
    for _ in range(10):
        q3 = from_kernel_coordinates(random_kernel_polynomial(rng, 3))
        flow_map = exp_of_kernel(q3)
        assert OBJS.p.substitute(list(flow_map.components)) == OBJS.p
