from fractions import Fraction

import pytest

from xxz_efp import closedforms as cf


def test_asm_counts():
    assert [cf.asm_count(n) for n in range(1, 7)] == [1, 2, 7, 42, 429, 7436]


def test_aht_counts():
    assert [cf.aht_count(N) for N in range(1, 8)] == [1, 2, 3, 10, 25, 140, 588]


def test_ratio_anchors():
    assert cf.efp_ratio_closed("recurE--", 2, 1) == Fraction(5, 2)
    assert cf.efp_ratio_closed("EFPee*", 2, 2) == 5
    assert cf.efp_ratio_closed("recurE--", 2, 2) == 10
    assert cf.efp_value_closed("recurE--", 2, 1) == Fraction(2, 5)
    assert cf.efp_value_closed("recurE--", 2, 2) == Fraction(1, 25)
    assert cf.efp_value_closed("EFPee*", 2, 2) == Fraction(1, 10)
    with pytest.raises(ValueError):
        cf.efp_ratio_closed("recurE--", 2, 3)


def test_telescoping_to_counting_constants():
    for n in range(1, 11):
        assert cf.efp_value_closed("recurE--", n, n) \
            == Fraction(1, cf.aht_count(2 * n + 1))
        assert cf.efp_value_closed("EFP++", n, n + 1) \
            == Fraction(1, cf.aht_count(2 * n + 1))
        assert cf.efp_value_closed("EFPee*", n, n) \
            == Fraction(1, cf.aht_count(2 * n))
        assert abs(cf.efp_value_closed("EFPee", n, n)) \
            == Fraction(1, cf.asm_count(n) ** 2)


def test_path_count_matrix():
    assert cf.path_count_entry(2, 2) == 4
    assert cf.binom(3, -1) == 0
    assert cf.binom(2, 5) == 0
    assert cf.lgv_count(2, 1) == 4
    assert cf.lgv_count(2, 0) == 4
    assert cf.lgv_count(1, 0) == 1 and cf.lgv_count(1, 1) == 1


def test_lgv_equals_product_formula():
    for n in range(0, 9):
        for k in range(0, n + 1):
            assert cf.lgv_count(n, k) == cf.cssc_product(n, k)


def test_zero_puncture_is_squared_asm():
    for n in range(1, 9):
        assert cf.lgv_count(n, 0) == cf.asm_count(n) ** 2


def test_pseudo_ratio_links():
    for n in range(1, 8):
        for k in range(1, n + 1):
            link = cf.pseudo_ratio_link(n, k)
            assert link.ok, (n, k)
    assert cf.pseudo_ratio_link(2, 1).lhs == 1
    assert cf.pseudo_ratio_link(2, 2).lhs == 4


def test_thermo_limit():
    assert abs(cf.thermo_limit(1) - 0.5) < 1e-12
    assert cf.thermo_limit(0) == 1.0
    vals = [cf.thermo_limit(k) for k in range(6)]
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_finite_size_approach():
    for k in (1, 2, 3):
        limit = cf.thermo_limit(k)
        diffs = [abs(float(cf.efp_value_closed("recurE--", N // 2, k)) - limit)
                 for N in range(5, 50, 4) if N // 2 >= k]
        assert all(b <= a + 1e-9 for a, b in zip(diffs, diffs[1:]))
