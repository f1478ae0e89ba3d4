import random

import pytest
from hypothesis import given, settings, strategies as st

from icosolve.errors import DegenerateReduction, LiftAmbiguity, LiftCollision
from icosolve.heymann import normalized_discriminant
from icosolve.numeric import polyval
from icosolve.oracle import aberth_roots, match_root_sets, poly_from_roots
from icosolve.reduction import (
    DepressedQuintic,
    GeneralQuintic,
    PrincipalQuintic,
    TschirnhausRecord,
    coefficients_from_power_sums,
    delta_squared,
    depress,
    discriminant,
    lift_roots,
    power_sums,
    principalize,
    reciprocal_transform,
    taylor_shift,
)

from conftest import disk_point

coef = st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False)


def random_general(rng, radius=2.0, min_p=1e-3):
    while True:
        g = GeneralQuintic(*(disk_point(rng, radius) for _ in range(5)))
        if abs(depress(g)[0].p) > min_p:
            return g


def test_depress_without_quartic_term_is_identity():
    g = GeneralQuintic(0, 1, 2 - 1j, 3, 4j)
    d, shift = depress(g)
    assert shift == 0
    assert (d.p, d.q, d.r_coef, d.s_coef) == (1, 2 - 1j, 3, 4j)


def test_depress_expansion():
    # (z-1)^5 + 5(z-1)^4 = z^5 - 10z^3 + 20z^2 - 15z + 4
    d, shift = depress(GeneralQuintic(5, 0, 0, 0, 0))
    assert shift == 1
    assert d.coefficients() == [1, 0, -10, 20, -15, 4]


@given(st.lists(coef, min_size=5, max_size=5))
def test_depress_removes_quartic_term(cs):
    g = GeneralQuintic(*cs)
    d, shift = depress(g)
    full = taylor_shift(g.coefficients(), -shift)
    assert abs(full[1]) < 1e-14
    for x in (0.3, -1 + 0.5j):
        assert abs(d(x + shift) - g(x)) < 1e-10


@given(st.lists(coef, min_size=3, max_size=6), coef, coef)
def test_taylor_shift_matches_evaluation(cs, h, t):
    shifted = taylor_shift(cs, h)
    assert abs(polyval(shifted, t) - polyval(cs, t + h)) < 1e-9 * (1 + sum(abs(c) for c in cs)) * 50


def test_power_sums_round_trip():
    roots = [1, -2j, 0.5 + 0.5j, 3, -1]
    coeffs = poly_from_roots(roots)
    P = power_sums(coeffs, 8)
    for k in range(9):
        assert abs(P[k] - sum(r ** k for r in roots)) < 1e-9
    back = coefficients_from_power_sums(P, 5)
    assert max(abs(a - b) for a, b in zip(back, coeffs)) < 1e-12


def test_principalize_shortcut_when_already_principal():
    pq, rec = principalize(DepressedQuintic(0, 0, 3 - 1j, 2))
    assert (pq.alpha, pq.beta, pq.gamma) == (0, (3 - 1j) / 5, 2)
    assert rec.identity
    pq, rec = principalize(DepressedQuintic(0, 5j, -12, 1 - 1j))
    assert (pq.alpha, pq.beta, pq.gamma) == (1j, -2.4, 1 - 1j)
    assert rec.identity


def test_identity_lift_only_translates():
    rec = TschirnhausRecord(0.5 + 0j, 0j, 0j, 0j, identity=True)
    d = DepressedQuintic(0, 5j, -12, 1 - 1j)
    assert lift_roots(rec, [1, 2j], d) == [0.5, -0.5 + 2j]


def test_principalize_rejects_ill_conditioned_p():
    with pytest.raises(DegenerateReduction):
        principalize(DepressedQuintic(1e-8, 1, 1, 1))


def _images(d, rec):
    zs = aberth_roots(d.coefficients()).values
    return [z * z - rec.a * z - rec.b for z in zs]


def test_principalize_worked_depression():
    d = DepressedQuintic(-10, 20, -15, 4)
    pq, rec = principalize(d)
    for y in _images(d, rec):
        assert abs(pq(y)) < 1e-8 * pq.scale


@pytest.mark.parametrize("branch", [1, -1])
def test_principalize_images_are_principal(branch):
    rng = random.Random(11)
    for _ in range(30):
        d = depress(random_general(rng))[0]
        pq, rec = principalize(d, delta_branch=branch)
        assert rec.b == -2 * d.p / 5
        assert abs(rec.a - (3 * d.q / (2 * d.p) + branch * rec.delta)) < 1e-12 * abs(rec.a)
        assert abs(rec.delta ** 2 - delta_squared(d)) <= 1e-12 * abs(delta_squared(d))
        # a solves a^2 - (3q/p) a - (3p/5 - 2r/p) = 0
        a = rec.a
        quad = a * a - 3 * d.q / d.p * a - (3 * d.p / 5 - 2 * d.r_coef / d.p)
        assert abs(quad) < 1e-9 * max(1, abs(a) ** 2)
        ys = _images(d, rec)
        assert abs(sum(ys)) < 1e-9 * pq.scale
        assert abs(sum(y * y for y in ys)) < 1e-9 * pq.scale
        assert max(abs(pq(y)) for y in ys) < 1e-8 * pq.scale


def test_delta_squared_formula():
    d = DepressedQuintic(2 - 1j, 0.5j, 3, 1)
    p, q, r = d.p, d.q, d.r_coef
    assert delta_squared(d) == 9 * q * q / (4 * p * p) + 3 * p / 5 - 2 * r / p


def _depressed_from_roots(zs):
    c = poly_from_roots(zs)
    assert abs(c[1]) < 1e-14
    return DepressedQuintic(c[2], c[3], c[4], c[5])


def test_lift_square_root_selection():
    zs = [2, 0.5 + 1j, -1.2 - 0.4j, -0.7 + 0.2j, -0.6 - 0.8j]
    d = _depressed_from_roots(zs)
    rec = TschirnhausRecord(0j, 0j, 0j, 0j)
    lifted = lift_roots(rec, [z * z for z in zs], d)
    assert lifted[0] == 2
    assert match_root_sets(lifted, zs) < 1e-12


def test_lift_shift_only_translates():
    zs = [2, 0.5 + 1j, -1.2 - 0.4j, -0.7 + 0.2j, -0.6 - 0.8j]
    d = _depressed_from_roots(zs)
    rec = TschirnhausRecord(1 + 0j, 0j, 0j, 0j)
    lifted = lift_roots(rec, [z * z for z in zs], d)
    assert match_root_sets(lifted, [z - 1 for z in zs]) < 1e-12


def test_lift_collision_when_two_roots_share_an_image():
    zs = [2, 1j, -1j, -1 + 0.3j, -1 - 0.3j]
    d = _depressed_from_roots(zs)
    with pytest.raises(LiftCollision):
        lift_roots(TschirnhausRecord(0j, 0j, 0j, 0j), [z * z for z in zs], d)


def test_lift_ambiguity_on_foreign_value():
    zs = [2, 0.5 + 1j, -1.2 - 0.4j, -0.7 + 0.2j, -0.6 - 0.8j]
    d = _depressed_from_roots(zs)
    ys = [z * z for z in zs]
    ys[2] += 0.3
    with pytest.raises(LiftAmbiguity):
        lift_roots(TschirnhausRecord(0j, 0j, 0j, 0j), ys, d)


def test_reduction_round_trip_against_oracle():
    rng = random.Random(5)
    for _ in range(25):
        g = random_general(rng)
        d, shift = depress(g)
        pq, rec = principalize(d)
        rec = TschirnhausRecord(shift, rec.a, rec.b, rec.delta, rec.delta_branch)
        ys = aberth_roots(pq.coefficients()).values
        xs = lift_roots(rec, ys, d)
        assert match_root_sets(xs, aberth_roots(g.coefficients()).values) < 1e-6
        assert max(abs(g(x)) for x in xs) < 1e-8 * max(1, max(abs(c) for c in g.coefficients()))


def test_discriminant_examples():
    assert discriminant(PrincipalQuintic(0, 0, 2)) == 50000
    assert discriminant(PrincipalQuintic(0, -1, 0)) == -800000


def test_discriminant_matches_central_quadratic_on_example():
    pq = PrincipalQuintic(1j, -2.4, 1 - 1j)
    delta = discriminant(pq)
    assert abs(normalized_discriminant(1j, -2.4, 1 - 1j) - delta / 3125) < 1e-10 * abs(delta / 3125)


def test_discriminant_vanishes_on_repeated_root():
    # (y-1)^2 (y^3 + 2y^2 + 3y + 4) has no y^4 or y^3 term
    c = poly_from_roots([1, 1] + list(aberth_roots([1, 2, 3, 4]).values))
    assert abs(c[1]) < 1e-12 and abs(c[2]) < 1e-12
    pq = PrincipalQuintic(c[3] / 5, c[4] / 5, c[5])
    assert abs(discriminant(pq)) < 1e-8


def test_reciprocal_transform_roots():
    g = GeneralQuintic(1, -2, 0.5j, 3, -1)
    tau = 0.5
    u = aberth_roots(reciprocal_transform(g, tau).coefficients()).values
    x = aberth_roots(g.coefficients()).values
    assert match_root_sets(u, [1 / (xi - tau) for xi in x]) < 1e-10


def test_reciprocal_transform_refuses_root_at_tau():
    g = GeneralQuintic.from_coefficients(poly_from_roots([0.5, 1, 2, 3, 4]))
    with pytest.raises(DegenerateReduction):
        reciprocal_transform(g, 0.5)


def test_general_quintic_normalizes_leading_coefficient():
    g = GeneralQuintic.from_coefficients([2, 2, 4, 6, 8, 10])
    assert g.coefficients() == [1, 1, 2, 3, 4, 5]
    with pytest.raises(ValueError):
        GeneralQuintic.from_coefficients([0, 1, 2, 3, 4, 5])
    with pytest.raises(ValueError):
        GeneralQuintic.from_coefficients([1, 2, 3])
