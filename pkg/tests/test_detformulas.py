import random
from fractions import Fraction

import pytest

from xxz_efp import detformulas as df
from xxz_efp.multipoly import MultiPoly, poly_ring
from xxz_efp.qkz import OMEGA
from xxz_efp.rings import QQ, Cyclotomic3, CYC3


def at_ones(p, value=Fraction(1)):
    for v in p.vars:
        p = p.subs_scalar(v, value)
    return p.constant_value()


def test_staircase_families():
    assert df.staircase(0, 6) == (0, 1, 3, 4, 6, 7)
    assert df.staircase(1, 6) == (0, 2, 3, 5, 6, 8)
    assert df.staircase(2, 6) == (1, 2, 4, 5, 7, 8)
    assert df.lambda_partition(4, 1) == (0, 1, 1, 2)
    assert df.partition_to_exponents((0, 1, 1, 2)) == (0, 2, 3, 5)
    assert df.exponents_to_partition((0, 2, 3, 5)) == (0, 1, 1, 2)


def test_schur_examples():
    s = df.schur(df.lambda_partition(2, 1), ("z1", "z2"))
    assert s.encode() == "(1)*z2 + (1)*z1"
    s0 = df.schur(df.lambda_partition(3, 0), ("z1", "z2", "z3"))
    assert s0 == MultiPoly.one(QQ, ("z1", "z2", "z3"))
    s1 = df.schur(df.lambda_partition(3, 1), ("z1", "z2", "z3"))
    assert at_ones(s1) == 3
    # symmetric under any variable swap
    assert s1 == s1.swap_vars("z1", "z3")


def test_schur_principal_specialization_norm():
    # S_{l(3,0)}(1,1,1) S_{l(3,1)}(1,1,1) = 9: the squared norm of (1,1,1)
    a = at_ones(df.schur(df.lambda_partition(3, 0), ("z1", "z2", "z3")))
    b = at_ones(df.schur(df.lambda_partition(3, 1), ("z1", "z2", "z3")))
    assert a * b == 9


def test_coupled_paths_agree():
    for (r1, r2, r, s) in ((0, 1, 2, 1), (0, 2, 1, 1), (1, 2, 2, 1),
                           (0, 2, 2, 2)):
        rep = df.verify_coupled_paths(df.staircase(r1, r + s),
                                      df.staircase(r2, r + s), r, s)
        assert rep.ok, rep


def test_coupled_s0_factorizes():
    r = 3
    got = df.coupled_schur(df.staircase(0, r), df.staircase(1, r), r, 0)
    roster = got.vars
    sa = df.schur(df.staircase(0, r), roster, roster, QQ, from_exponents=True)
    sb = df.schur(df.staircase(1, r), roster, roster, QQ, from_exponents=True)
    assert got == sa * sb


def test_coupled_vanishes_at_equal_z_y():
    m = df.coupled_matrix(df.staircase(0, 2), df.staircase(1, 2), 1, 1)
    from xxz_efp.linalg import RingMatrix, det_laplace
    rows = [[x.subs_monomial("z1", "y1", 1) for x in row] for row in m.rows]
    assert det_laplace(RingMatrix(QQ, rows)).is_zero()


def test_initial_coupled_products():
    # S^(l0,l2)(k,k) = (-1)^C(k,2) prod z_i prod (z^2 + zz + z^2)
    for k in (1, 2):
        got = df.coupled_schur(df.staircase(0, 2 * k), df.staircase(2, 2 * k),
                               k, k)
        roster = got.vars
        want = MultiPoly.one(QQ, roster)
        for i in range(1, k + 1):
            want = want * MultiPoly.variable(QQ, roster, f"z{i}")
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                zi = MultiPoly.variable(QQ, roster, f"z{i}")
                zj = MultiPoly.variable(QQ, roster, f"z{j}")
                want = want * (zi * zi + zi * zj + zj * zj)
        if (k * (k - 1) // 2) % 2:
            want = -want
        assert got == want


def test_schur_staircase_recursion():
    for (m, r) in ((2, 0), (3, 0), (3, 1), (4, 1)):
        rep = df.schur_staircase_recursion_check(m, r)
        assert rep.ok, rep


def test_coupled_recursion():
    rep = df.coupled_recursion_check(0, 1, 3, 1)
    assert rep.ok, rep


def test_det_rep_against_qkz(qkz_solution):
    from xxz_efp.efp import inhom_efp, inhom_pseudo_efp
    from xxz_efp.suites import expected_det_rep_factor
    for (mu, pseudo, n) in (("-", False, 1), ("+", False, 1), ("e", False, 1),
                            ("e", True, 1), ("e", False, 2), ("e", True, 2),
                            ("-", False, 2)):
        N = 2 * n + 1 if mu in "+-" else 2 * n
        sol = qkz_solution(mu, N, "omega")
        build = inhom_pseudo_efp if pseudo else inhom_efp
        for k in range(0, n + 1):
            e = build(mu, N, k, OMEGA, sol=sol)
            got = df.det_rep_discrepancy(e.poly, mu, pseudo, N, k)
            assert got is not None, (mu, pseudo, n, k)
            coeff, exps = got
            assert not exps
            assert coeff == expected_det_rep_factor(mu, pseudo, n, k)


def _random_spec(rng, ell, r, s):
    def frac():
        return Fraction(rng.randint(1, 9), rng.randint(1, 9))
    lam = frac()
    while lam == 1:
        lam = frac()
    taken = {lam}
    vals = []
    while len(vals) < ell + 2:
        x = frac()
        if x not in taken and x not in vals:
            vals.append(x)
    a1, a2 = vals[0], vals[1]
    return df.PowerBlockSpec(ell, r, s, tuple(vals[2:]), lam, a1, a2)


def test_power_block_closed_form_random():
    rng = random.Random(99)
    one = Fraction(1)
    for _ in range(40):
        ell, r, s = rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)
        if ell + r + s == 0:
            continue
        spec = _random_spec(rng, ell, r, s)
        assert df.power_block_det_exact(spec, one) \
            == df.power_block_det_closed(spec, one, QQ.exact_div)


def test_power_block_rank_deficiency():
    spec = df.PowerBlockSpec(2, -1, 2, (Fraction(2), Fraction(3)),
                             Fraction(5, 7), Fraction(1, 2), Fraction(4))
    assert df.power_block_det_exact(spec, Fraction(1)) == 0


def test_power_block_triangular_specialization():
    rng = random.Random(4)
    one = Fraction(1)
    for _ in range(10):
        r, s = rng.randint(0, 3), rng.randint(0, 3)
        if r + s == 0:
            continue
        lam = Fraction(rng.randint(2, 9), rng.randint(1, 9))
        a2 = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        spec = df.PowerBlockSpec(0, r, s, (), lam, a2 * lam ** s, a2)
        assert df.power_block_det_exact(spec, one) \
            == df.power_block_det_at_lambda_power(r, s, lam, a2, one)


def test_power_block_ratio_and_v_independence():
    one = Fraction(1)
    div = QQ.exact_div
    lam, a1, a2 = Fraction(3, 2), Fraction(2, 5), Fraction(7, 3)
    for vset in ((Fraction(2),), (Fraction(5, 9),)):
        spec = df.PowerBlockSpec(1, 0, 1, vset, lam, a1, a2)
        spec2 = df.PowerBlockSpec(1, 1, 0, vset, lam, a1, a2)
        got = df.power_block_det_exact(spec, one) \
            / df.power_block_det_exact(spec2, one)
        want = df.power_block_ratio_closed(1, 0, 1, lam, a1, a2, one, div)
        assert got == want


def test_d_ratio_product_formula():
    one = Fraction(1)
    div = QQ.exact_div
    for lam in (Fraction(2), Fraction(5, 3)):
        for (r, s) in ((0, 1), (1, 1), (2, 1), (0, 2), (1, 2), (2, 2),
                       (0, 3), (1, 3)):
            lhs = div(df.d_factor(r, s, lam, one, div),
                      df.d_factor(r + 1, s - 1, lam, one, div))
            assert lhs == df.d_factor_ratio_product(r, s, lam, one, div)


def test_tilde_variant_same_det_up_to_sign():
    rng = random.Random(21)
    one = Fraction(1)
    from xxz_efp.linalg import det_field
    for _ in range(10):
        ell, r, s = rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2)
        if ell + r + s == 0:
            continue
        spec = _random_spec(rng, ell, r, s)
        d = df.power_block_det_exact(spec, one)
        dt = det_field(df.power_block_matrix_tilde(spec, one))
        if d:
            assert dt / d in (1, -1)
        else:
            assert dt == 0


def test_t_efp_values_and_double_ratio():
    # E^e_2(0; t) should be the principal specialization of z1 + z2 up to the
    # frozen unit: here exactly 1 + t
    e = df.t_efp("e", False, 2, 0)
    assert e == df.t_one() + df.t_var(1)
    # degenerate empty chain
    assert df.t_efp("e", True, 0, 0) == df.t_one()
    for k in (1, 2):
        a = df.t_efp("-", False, 2 * k + 3, k + 1)
        b = df.t_efp("-", False, 2 * k + 1, k)
        c = df.t_efp("-", False, 2 * k - 1, k - 1)
        num = df.t_var(2 * k) * (df.t_var(3 * (k + 1)) - df.t_one())
        den = (df.t_var(k + 1) - df.t_one()).scale(3)
        assert a * c * den == -(b * b * num)


def test_t_efp_matches_principal_specialization(qkz_solution):
    from xxz_efp.efp import inhom_efp
    from xxz_efp.suites import expected_det_rep_factor
    sol = qkz_solution("e", 4, "omega")
    e = inhom_efp("e", 4, 1, OMEGA, sol=sol)
    p = e.poly
    for i in (1, 2, 3):
        p = p.subs_monomial(f"z{i}", "t", i - 1)
    for j in (1, 2):
        p = p.subs_monomial(f"y{j}", "t", 3 + j - 1)
    rhs = df.t_efp("e", False, 4, 1).map_coeffs(Cyclotomic3, CYC3)
    ratio = p.monomial_ratio(rhs.with_vars(p.vars))
    assert ratio == (expected_det_rep_factor("e", False, 2, 1), {})


def test_t_ratio_at_one_reproduces_counting():
    from xxz_efp import closedforms as cf
    assert df.t_ratio_at_one("recurE--", 2, 1) == Fraction(5, 2)
    assert df.t_ratio_at_one("EFPee*", 2, 1) == 2
    assert df.t_ratio_at_one("EFPee", 1, 1) == 1
    for n in (1, 2, 3, 4):
        for k in range(1, n + 1):
            for fam in df.T_RATIO_FAMILIES:
                assert df.t_ratio_at_one(fam, n, k) \
                    == cf.efp_ratio_closed(fam, n, k)
