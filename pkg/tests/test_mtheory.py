from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mcurves.errors import DegreeTooSmall, OutOfRange, UnsupportedMultiplicity
from mcurves.mtheory import (PoincarePolynomial, WeakCombinatorics, addition_never_free_advisory,
                             admissible_traces, bezout_check, char_check, check_all,
                             deletion_identity_check, enumerate_one_conic, m_exponents,
                             m_one_conic_exponents, m_reg_values, m_target,
                             mdr_lower_bound_lines, mvp_allowed, one_conic_check, poincare_cl,
                             poincare_curve, poincare_from_exponents, poincare_of_deletion,
                             splits_rationally, tau_max, tau_of)

W = WeakCombinatorics.from_sequence


def test_tau_of():
    assert tau_of(W(9, 1, [6, 4, 6])) == 76
    assert tau_of(W(3, 2, [1, 0, 3])) == 28
    assert tau_of(W(3, 0, [3])) == 3


def test_bezout_examples():
    v = bezout_check(W(6, 1, [3, 0, 4]))
    assert v.satisfied and v.lhs == 27 and v.rhs == 27
    assert bezout_check(W(7, 1, [5, 4, 3])).satisfied
    assert bezout_check(W(2, 0, [1])).satisfied


def test_char_examples():
    v = char_check(W(7, 1, [5, 4, 3]))
    assert not v.satisfied and (v.lhs, v.rhs) == (22, 21)
    v = char_check(W(3, 2, [1, 0, 3]))
    assert v.satisfied and v.lhs == 10
    assert char_check(W(6, 1, [3, 0, 4])).rhs == 15
    with pytest.raises(UnsupportedMultiplicity):
        char_check(W(6, 1, [0, 0, 0, 1]))
    with pytest.raises(OutOfRange):
        char_check(W(6, 0, [3]))


def test_one_conic_examples():
    a, b = one_conic_check(W(6, 1, [3, 0, 4]))
    assert (a.lhs, a.rhs, b.lhs, b.rhs) == (3, 3, 12, 12)
    a, b = one_conic_check(W(7, 1, [5, 2, 4]))
    assert a.satisfied and b.satisfied
    a, b = one_conic_check(W(7, 1, [5, 4, 3]))
    assert not b.satisfied and (b.lhs, b.rhs) == (13, 14)
    with pytest.raises(OutOfRange):
        one_conic_check(W(3, 2, [1, 0, 3]))


def test_enumeration_examples():
    assert enumerate_one_conic(6) == {(3, 0, 4), (0, 3, 3)}
    assert enumerate_one_conic(4) == set()
    assert enumerate_one_conic(7) == {(5, 2, 4), (2, 5, 3)}
    with pytest.raises(OutOfRange):
        enumerate_one_conic(2)


@pytest.mark.parametrize("d", range(3, 13))
def test_enumeration_against_box_search(d):
    ell = d // 2
    first, second = (3 * ell - 6, ell * ell + 3) if d % 2 == 0 else (3 * ell - 2, ell * ell + ell + 2)
    n2, n3, n4 = np.meshgrid(*[np.arange(d * d + 1)] * 3, indexing="ij")
    mask = (n2 + n3 == first) & (n3 + 3 * n4 == second)
    hits = {tuple(int(v) for v in t) for t in zip(n2[mask], n3[mask], n4[mask])}
    assert enumerate_one_conic(d) == hits
    for t in hits:
        assert all(v.satisfied for v in one_conic_check(W(d, 1, list(t))))


@pytest.mark.parametrize("d", range(3, 21))
def test_char_and_bezout_equivalent_to_one_conic_system(d):
    B = comb(d, 2) + 2 * d
    for n3 in range(0, B // 3 + 1):
        for n4 in range(0, B // 6 + 1):
            n2 = B - 3 * n3 - 6 * n4
            if n2 < 0:
                continue
            wc = W(d, 1, [n2, n3, n4])
            assert bezout_check(wc).satisfied
            assert char_check(wc).satisfied == all(v.satisfied for v in one_conic_check(wc))
    for n2, n3, n4 in enumerate_one_conic(d):
        wc = W(d, 1, [n2, n3, n4])
        assert bezout_check(wc).satisfied and char_check(wc).satisfied


def test_mvp_examples():
    assert mvp_allowed(6, 4).satisfied
    assert mvp_allowed(7, 6).satisfied and mvp_allowed(7, 6).lhs == 3
    v = mvp_allowed(6, 10)
    assert v.satisfied and v.note
    assert not mvp_allowed(6, 6).satisfied
    assert not mvp_allowed(6, 5).satisfied
    assert admissible_traces(6) == [1, 2, 3, 4, 10]
    with pytest.raises(OutOfRange):
        mvp_allowed(2, 1)


def test_never_free_advisory():
    assert addition_never_free_advisory(6, 12)
    assert not addition_never_free_advisory(6, 4)
    assert addition_never_free_advisory(7, 14)
    assert "never gives a free curve" in mvp_allowed(6, 12).note


def test_poincare_examples():
    assert poincare_cl(W(6, 1, [3, 0, 4])) == PoincarePolynomial(7, 10)
    assert poincare_cl(W(9, 1, [6, 4, 6])) == PoincarePolynomial(10, 24)
    assert poincare_cl(WeakCombinatorics(0, 1, {})) == PoincarePolynomial(1, 1)
    assert str(PoincarePolynomial(5, 6)) == "6t^2 + 5t + 1"
    assert splits_rationally(PoincarePolynomial(8, 15)) == (3, 5)
    assert splits_rationally(PoincarePolynomial(8, 18)) is None
    assert splits_rationally(PoincarePolynomial(2, 1)) == (1, 1)
    assert splits_rationally(PoincarePolynomial(7, 10)) == (2, 5)
    with pytest.raises(ValueError):
        PoincarePolynomial(1, 1, c0=2)


def test_poincare_of_deletion_examples():
    assert poincare_of_deletion(6, 4) == PoincarePolynomial(5, 6)
    assert splits_rationally(poincare_of_deletion(6, 4)) == (2, 3)
    assert poincare_of_deletion(7, 6) == PoincarePolynomial(6, 9)
    assert poincare_of_deletion(9, 6) == PoincarePolynomial(8, 18)


def test_deletion_identity_examples():
    assert deletion_identity_check(PoincarePolynomial(7, 10), PoincarePolynomial(5, 6), 4).satisfied
    assert deletion_identity_check(PoincarePolynomial(10, 24), PoincarePolynomial(8, 18), 6).satisfied
    assert not deletion_identity_check(PoincarePolynomial(7, 10), PoincarePolynomial(5, 6), 5).satisfied


def test_deletion_identity_for_all_d_and_r():
    for d in range(3, 51):
        d1, d2 = m_one_conic_exponents(d)
        full = poincare_from_exponents(d1, d2)
        assert d1 + d2 == d + 1
        for r in range(1, 2 * d + 1):
            p = poincare_of_deletion(d, r)
            assert (p.c1, p.c2) == (full.c1 - 2, full.c2 - r)
            assert deletion_identity_check(full, p, r).satisfied


def test_poincare_cl_matches_curve_polynomial_for_m_combinatorics():
    # for ordinary points of multiplicity <= 4 the two Poincare polynomials agree
    for d in range(3, 15):
        for t in enumerate_one_conic(d):
            wc = W(d, 1, list(t))
            assert poincare_cl(wc) == poincare_curve(d + 2, tau_of(wc))
            assert splits_rationally(poincare_cl(wc)) == m_one_conic_exponents(d)


def test_mdr_bound_and_refutation():
    assert mdr_lower_bound_lines(6) == 1
    assert mdr_lower_bound_lines(9) == 3
    for ell in range(3, 20):
        d = 2 * ell
        split = splits_rationally(poincare_of_deletion(d, 2 * ell + 4))
        assert split[0] == ell - 3 < mdr_lower_bound_lines(d)


def test_m_targets_and_regularity():
    assert m_target(8) == 39 and m_target(9) == 49 and m_target(11) == 76 and m_target(7) == 28
    assert m_exponents(8) == (2, 5) and m_exponents(11) == (4, 6)
    assert m_reg_values(8) == {"reg_M": 10, "reg_AR": 5}
    assert m_reg_values(9) == {"reg_M": 11, "reg_AR": 5}
    assert m_reg_values(11) == {"reg_M": 14, "reg_AR": 6}
    with pytest.raises(DegreeTooSmall):
        m_target(4)
    for D in range(5, 40):
        d1, d2 = m_exponents(D)
        assert m_target(D) == tau_max(D, d1) == (D - 1) * (D - d1 - 1) + d1 * d1


def test_tau_max_non_free_branch():
    assert tau_max(4, 1) == 7
    assert tau_max(4, 3) == 9 - 6


counts = st.dictionaries(st.integers(2, 4), st.integers(0, 30), max_size=3)


@given(st.integers(3, 30), st.integers(1, 3), counts, st.randoms())
def test_order_of_counts_is_irrelevant(d, k, cs, rnd):
    items = list(cs.items())
    rnd.shuffle(items)
    a, b = WeakCombinatorics(d, k, cs), WeakCombinatorics(d, k, dict(items))
    assert tau_of(a) == tau_of(b)
    assert char_check(a) == char_check(b)
    assert bezout_check(a) == bezout_check(b)


def test_check_all():
    assert [v.rule for v in check_all(W(6, 1, [3, 0, 4]))] == [
        "bezout", "char(i)", "one_conic(i).1", "one_conic(i).2"]
    assert [v.rule for v in check_all(W(3, 0, [3]))] == ["bezout"]
