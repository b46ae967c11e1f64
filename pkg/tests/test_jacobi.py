import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import naive_jacobi_terms
from rmdesigns.errors import CapacityError, InputError, VerificationError
from rmdesigns.gf2code import dual, extended_hamming, make_code, reed_muller_1, weight_enumerator
from rmdesigns.jacobi import (
    T_DEP,
    T_INDEP,
    TClass,
    canonical_four_set,
    classify_four_set,
    design_coefficient,
    jacobi,
    jacobi_design_test,
    jacobi_difference_closed,
    jacobi_transform,
    lemma_profile,
    random_four_set,
    restriction_profile,
    rm1_dual_jacobi_closed,
    rm1_dual_jacobi_printed,
    rm1_jacobi_closed,
)
from rmdesigns.poly import W, X, Y, Z, Poly4, substitute

INDEP, DEP = TClass.INDEPENDENT, TClass.DEPENDENT


@st.composite
def code_and_T(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=n))
    T = draw(st.sets(st.integers(0, n - 1), max_size=min(4, n)))
    return make_code(n, rows), tuple(sorted(T))


def test_empty_T_is_weight_enumerator():
    code = reed_muller_1(3)
    J = jacobi(code, ())
    assert J == Poly4({(0, 0, e[2], e[3]): c for e, c in J.terms.items()})
    assert J == weight_enumerator(code)


def test_m3_examples():
    rm3 = reed_muller_1(3)
    assert jacobi(rm3, T_INDEP) == (W**4 * X**4 + 4 * W**3 * Z * X * Y**3 + 6 * W**2 * Z**2 * X**2 * Y**2
                                    + 4 * W * Z**3 * X**3 * Y + Z**4 * Y**4)
    assert jacobi(rm3, T_DEP) == (W**4 * X**4 + W**4 * Y**4 + 12 * W**2 * Z**2 * X**2 * Y**2
                                  + Z**4 * X**4 + Z**4 * Y**4)


@given(code_and_T())
@settings(max_examples=60, deadline=None)
def test_jacobi_matches_naive(case):
    code, T = case
    assert jacobi(code, T) == Poly4(naive_jacobi_terms(code, T))


@given(code_and_T(max_n=14))
@settings(max_examples=50, deadline=None)
def test_jacobi_transform_gives_dual(case):
    code, T = case
    J = jacobi(code, T)
    assert jacobi(dual(code), T) == jacobi_transform(J, code.size)
    assert jacobi_transform(jacobi_transform(J, code.size), 1 << (code.n - code.k)) == J


@given(code_and_T())
@settings(max_examples=40, deadline=None)
def test_specialization_and_count(case):
    code, T = case
    J = jacobi(code, T)
    assert substitute(J, {"w": X, "z": Y}) == weight_enumerator(code)
    assert J.evaluate(1, 1, 1, 1) == code.size


def test_transform_examples():
    we = weight_enumerator(reed_muller_1(3))
    assert jacobi_transform(we, 16) == we
    with pytest.raises(VerificationError):
        jacobi_transform(X, 2)
    with pytest.raises(InputError):
        jacobi_transform(X, 0)
    assert not jacobi_transform(X, 2, require_integral=False).is_integral()


def test_jacobi_rejects_bad_T():
    with pytest.raises(InputError):
        jacobi(reed_muller_1(3), (0, 8))
    with pytest.raises(InputError):
        jacobi(reed_muller_1(3), (1, 1))


def test_classify_examples():
    assert classify_four_set(3, (0, 1, 2, 3)) is DEP
    assert classify_four_set(3, (0, 1, 2, 4)) is INDEP
    assert classify_four_set(3, (1, 2, 4, 7)) is DEP
    assert jacobi(reed_muller_1(3), (1, 2, 4, 7)) == rm1_jacobi_closed(3, DEP)
    with pytest.raises(InputError):
        classify_four_set(3, (0, 1, 2))


def test_closed_form_examples():
    assert rm1_jacobi_closed(3, INDEP) == jacobi(reed_muller_1(3), T_INDEP)
    assert rm1_jacobi_closed(4, DEP).coeff((2, 2, 6, 6)) == 24
    assert rm1_jacobi_closed(3, DEP).coeff((0, 4, 4, 0)) == 1
    for m in range(3, 11):
        for cls in TClass:
            assert rm1_jacobi_closed(m, cls).evaluate() == 2 ** (m + 1)
    with pytest.raises(InputError):
        rm1_jacobi_closed(2, INDEP)


@pytest.mark.parametrize("m", range(3, 9))
def test_closed_form_matches_enumeration_random_T(m):
    rng = random.Random(m)
    code = reed_muller_1(m)
    for cls in TClass:
        for _ in range(5):
            T = random_four_set(m, cls, rng)
            assert classify_four_set(m, T) is cls
            assert jacobi(code, T) == rm1_jacobi_closed(m, cls)


@pytest.mark.parametrize("m", range(3, 7))
def test_translation_invariance(m):
    rng = random.Random(100 + m)
    code = reed_muller_1(m)
    for _ in range(4):
        T = tuple(rng.sample(range(1 << m), 4))
        v = rng.randrange(1 << m)
        assert jacobi(code, T) == jacobi(code, [t ^ v for t in T])


def test_dual_closed_examples():
    for cls in TClass:
        assert rm1_dual_jacobi_closed(3, cls) == rm1_jacobi_closed(3, cls)
        assert rm1_dual_jacobi_closed(4, cls) == jacobi(extended_hamming(4), canonical_four_set(cls))


@pytest.mark.slow
def test_dual_closed_m5_enumeration():
    assert jacobi(extended_hamming(5), T_INDEP) == rm1_dual_jacobi_closed(5, INDEP)


@pytest.mark.parametrize("m", range(3, 8))
def test_printed_dual_formula(m):
    # dependent case holds as printed; the independent case needs (x-y) in place of a bare y
    assert rm1_dual_jacobi_printed(m, DEP) == rm1_dual_jacobi_closed(m, DEP)
    assert rm1_dual_jacobi_printed(m, INDEP, corrected=True) == rm1_dual_jacobi_closed(m, INDEP)
    assert rm1_dual_jacobi_printed(m, INDEP) != rm1_dual_jacobi_closed(m, INDEP)


@pytest.mark.parametrize("m", range(3, 9))
def test_restriction_profile(m):
    code = reed_muller_1(m)
    ones = (1 << (1 << m)) - 1
    rng = random.Random(m)
    for cls in TClass:
        expected = lemma_profile(m, cls)
        for T in (canonical_four_set(cls), random_four_set(m, cls, rng)):
            assert restriction_profile(code, T, exclude={0, ones}) == expected


def test_restriction_profile_empty_T():
    assert restriction_profile(reed_muller_1(3), (), exclude={0, 255}) == {0: 14}


@pytest.mark.parametrize("m", range(3, 11))
def test_difference_identities(m):
    assert rm1_jacobi_closed(m, INDEP) - rm1_jacobi_closed(m, DEP) == jacobi_difference_closed(m, "code")
    assert rm1_dual_jacobi_closed(m, INDEP) - rm1_dual_jacobi_closed(m, DEP) == jacobi_difference_closed(m, "dual")


def test_difference_m3():
    assert jacobi_difference_closed(3, "code") == -((W * Y - X * Z) ** 4)
    with pytest.raises(InputError):
        jacobi_difference_closed(3, "other")


def test_design_test_examples():
    r = jacobi_design_test(reed_muller_1(3), 4, 3)
    assert r.is_design and r.lam == 1
    r = jacobi_design_test(extended_hamming(4), 4, 3)
    assert r.is_design and r.lam == 140 * comb(4, 3) // comb(16, 3) == 1
    empty = jacobi_design_test(reed_muller_1(3), 3, 2)
    assert not empty.is_design and empty.note.startswith("vacuous")


@pytest.mark.parametrize("m", [3, 4, 5])
def test_middle_shell_not_4_design(m):
    h = 1 << (m - 1)
    n = 1 << m
    r = jacobi_design_test(reed_muller_1(m), h, 4)
    assert not r.is_design
    a, b = r.witness["counts"]
    assert a != b
    # the two canonical witnesses differ by the closed-form gap
    gi = design_coefficient(rm1_jacobi_closed(m, INDEP), n, h, 4)
    gd = design_coefficient(rm1_jacobi_closed(m, DEP), n, h, 4)
    assert gd - gi == 2 ** (m - 3)


def test_design_test_sampling():
    r = jacobi_design_test(reed_muller_1(4), 8, 3, mode="sample", count=20, seed=1)
    assert r.is_design and r.lam == 3 and "sampled" in r.note
    r = jacobi_design_test(reed_muller_1(5), 16, 4, mode="sample", count=200, seed=1)
    assert not r.is_design
    with pytest.raises(InputError):
        jacobi_design_test(reed_muller_1(3), 4, 3, mode="bogus")


def test_design_test_capacity():
    with pytest.raises(CapacityError):
        jacobi_design_test(reed_muller_1(6), 32, 4, cap=1000)


def test_random_four_set_needs_m3():
    with pytest.raises(InputError):
        random_four_set(2, INDEP, random.Random(0))
