"""Exact determinants: elimination, the factored S4 form, representations."""

import random

import pytest

from gdet import (
    EisensteinInt,
    build_group,
    default_rep_table,
    det_exact,
    det_int,
    identity_element,
    rep_factor_check,
    rep_is_homomorphism,
    ring_element,
    s4_det_fast,
    s4_factors,
    valuation,
)
from gdet.detcalc import RepTable, quadratic_form, s4_cubic_matrices


def test_det_int_small_cases():
    assert det_int([[5]]) == 5
    assert det_int([[1, 2], [3, 4]]) == -2
    assert det_int([[0, 1], [1, 0]]) == -1
    assert det_int([[2, 0, 0], [0, 3, 0], [0, 0, 4]]) == 24
    assert det_int([[1, 2], [2, 4]]) == 0


def test_det_int_pivoting():
    # leading zeros force row swaps with sign tracking
    assert det_int([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1
    assert det_int([[0, 2], [3, 0]]) == -6


def test_det_int_matches_cofactor_expansion_3x3():
    rng = random.Random(5)
    for _ in range(200):
        m = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)]
        (a, b, c), (d, e, f), (g, h, i) = m
        cofactor = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
        assert det_int(m) == cofactor


def test_det_int_rejects_non_square():
    with pytest.raises(ValueError):
        det_int([[1, 2, 3], [4, 5, 6]])


@pytest.mark.parametrize("kind", ["Z1", "Z2", "Z4", "K4", "D8", "A4", "S4"])
def test_identity_element_has_determinant_one(kind):
    g = build_group(kind)
    assert det_exact(g, identity_element(g)) == 1


def test_s4_determinant_examples(s4, make_elem):
    assert det_exact(s4, make_elem(a1=1, a5=1)) == 256
    assert det_exact(s4, make_elem(a1=1, a3=1, b3=1)) == -27
    assert det_exact(s4, make_elem(a2=1, a5=1, a9=1, b11=1)) == 4096


def test_factor_profile_constant_family(make_elem):
    p = s4_factors(make_elem(a1=1))
    assert (p.l1, p.l2, p.q1, p.d1, p.d2) == (1, 1, 1, 1, 1)
    assert p.det == 1


def test_factor_profile_residue_five(make_elem):
    p = s4_factors(make_elem(a2=1, a5=1, a9=1, b3=1, b5=1))
    assert (p.l1, p.l2, p.q1) == (5, 1, -1)
    assert (p.d1, p.d2) == (1, 1)  # determinants of the two displayed matrices
    assert p.det == 5


def test_factor_profile_two_to_ten(make_elem):
    p = s4_factors(make_elem(a1=-1, a5=1, a6=1, b5=1, b10=-1))
    assert (p.l1, p.l2, p.q1) == (1, 1, 4)
    assert p.det == -(2**10)
    assert (p.val2, p.val3) == (10, 0)


def test_factor_profile_zero_marks_infinite_valuation(s4):
    p = s4_factors(ring_element(s4, [0] * 24))
    assert p.det == 0
    assert p.val2 is None and p.val3 is None


def test_profile_linear_relations(s4):
    rng = random.Random(23)
    for _ in range(100):
        e = ring_element(s4, [rng.randint(-9, 9) for _ in range(24)])
        p = s4_factors(e)
        assert p.u == p.u1 + p.u2 + p.u3 == sum(e.coeffs[:12])
        assert p.v == p.v1 + p.v2 + p.v3 == sum(e.coeffs[12:])
        assert p.l1 == p.u + p.v and p.l2 == p.u - p.v
        assert p.q1 == quadratic_form(p.u1, p.u2, p.u3) - quadratic_form(p.v1, p.v2, p.v3)
        assert p.det == p.l1 * p.l2 * p.q1**2 * p.d1**3 * p.d2**3


def test_fast_equals_exact_on_random_box(s4):
    rng = random.Random(99)
    for _ in range(300):
        e = ring_element(s4, [rng.randint(-9, 9) for _ in range(24)])
        assert s4_det_fast(e) == det_exact(s4, e)


def test_congruences_hold_on_profiles(s4):
    rng = random.Random(31)
    for _ in range(300):
        p = s4_factors(ring_element(s4, [rng.randint(-6, 6) for _ in range(24)]))
        assert (p.l1 - p.l2) % 2 == 0
        assert (p.d1 - p.d2) % 2 == 0
        assert (p.q1 - p.l1 * p.l2) % 3 == 0


def test_zero_determinant_requires_zero_factor(s4, make_elem):
    e = make_elem(a1=1, b1=1)  # l2 = 0
    p = s4_factors(e)
    assert p.l2 == 0 and p.det == 0
    assert det_exact(s4, e) == 0


# -- the displayed cubic-factor matrices of the witness constructions

DISPLAYED = {
    "res5": ([[-1, 0, -2], [0, 0, -1], [-2, -1, 2]], [[-1, 2, 0], [2, -2, -1], [0, -1, 0]]),
    "res13": ([[-2, 0, -1], [-1, 4, 0], [0, -1, 0]], [[2, 4, -1], [-1, 0, 0], [0, -1, 0]]),
    "res17": ([[1, 0, 0], [0, 0, 1], [-2, 1, 2]], [[-3, 2, 2], [-2, 2, 1], [0, 1, 0]]),
    "neg27": ([[0, -1, 0], [-1, 2, 0], [0, 0, 1]], [[0, 1, 0], [1, 2, 0], [0, 0, -1]]),
    "pos81": ([[0, 0, -1], [1, 0, 0], [0, -1, 2]], [[0, 0, -1], [1, 0, 0], [0, -1, 2]]),
    "pow2_8": ([[1, 0, -1], [1, 1, 0], [0, -1, 1]], [[1, 0, -1], [1, 1, 0], [0, -1, 1]]),
    "neg2_10": ([[-2, 0, -1], [0, 0, 1], [-1, -1, -1]], [[0, 0, 1], [0, -2, -1], [1, -3, -1]]),
    "pos2_12": ([[-2, 1, -1], [1, -1, 0], [-1, -2, 1]], [[0, 1, -1], [1, -1, -2], [-1, 0, 1]]),
    "neg2_12": ([[0, -2, 1], [0, 0, 1], [1, 1, 1]], [[0, 0, 1], [-2, 0, 1], [1, 1, 3]]),
    "pos2_13": ([[1, 1, 2], [0, 1, 1], [1, -2, 3]], [[-1, -1, 0], [-2, -1, 3], [-1, 0, 1]]),
    "neg2_13": ([[-1, 2, -1], [2, 1, -1], [-1, -1, 0]], [[-1, 0, -1], [0, -3, -1], [-1, -1, -2]]),
}


@pytest.mark.parametrize("family_id", sorted(DISPLAYED))
def test_cubic_matrices_match_displayed(family_id):
    from gdet import family

    elem, _ = family(family_id, 1)
    m1, m2 = s4_cubic_matrices(elem)
    want1, want2 = DISPLAYED[family_id]
    assert m1 == want1
    assert m2 == want2


# -- Eisenstein integers and the quadratic factor


def test_eisenstein_arithmetic():
    w = EisensteinInt(0, 1)
    w2 = w * w
    assert w2 == EisensteinInt(-1, -1)
    assert w * w2 == EisensteinInt(1, 0)  # w^3 = 1
    assert (EisensteinInt(1, 0) + w + w2) == EisensteinInt(0, 0)
    assert EisensteinInt(2, 3).norm() == 4 - 6 + 9


def test_eisenstein_norm_nonnegative():
    rng = random.Random(17)
    for _ in range(500):
        z = EisensteinInt(rng.randint(-50, 50), rng.randint(-50, 50))
        assert z.norm() >= 0


def test_q1_via_eisenstein_norm(s4):
    rng = random.Random(41)
    w = EisensteinInt(0, 1)
    w2 = w * w
    for _ in range(200):
        e = ring_element(s4, [rng.randint(-9, 9) for _ in range(24)])
        p = s4_factors(e)
        zu = EisensteinInt(p.u1, 0) + w.scale(p.u2) + w2.scale(p.u3)
        zv = EisensteinInt(p.v1, 0) + w.scale(p.v2) + w2.scale(p.v3)
        assert p.q1 == zu.norm() - zv.norm()


def test_valuation():
    assert valuation(48, 2) == 4
    assert valuation(-54, 3) == 3
    assert valuation(7, 2) == 0
    assert valuation(0, 2) is None


# -- representation tables


def test_rep_tables_are_homomorphisms():
    assert rep_is_homomorphism(default_rep_table())


def test_rho3_is_sign_times_rho2():
    t = default_rep_table()
    for i in range(24):
        sign = 1 if i < 12 else -1
        want = tuple(tuple(sign * x for x in row) for row in t.rho2[i])
        assert t.rho3[i] == want


def test_rep_factor_check_accepts_correct_tables():
    assert rep_factor_check()


def test_rep_factor_check_detects_swapped_entries():
    t = default_rep_table()
    rho2 = list(t.rho2)
    rho2[20], rho2[21] = rho2[21], rho2[20]  # swap the (12) and (34) matrices
    broken = RepTable(rho1=t.rho1, rho2=tuple(rho2), rho3=t.rho3)
    assert not rep_factor_check(broken)


def test_rep_factor_check_detects_sign_flip():
    t = default_rep_table()
    rho2 = list(t.rho2)
    rho2[5] = tuple(tuple(-x for x in row) for row in rho2[5])
    broken = RepTable(rho1=t.rho1, rho2=tuple(rho2), rho3=t.rho3)
    assert not rep_is_homomorphism(broken)
    assert not rep_factor_check(broken)
