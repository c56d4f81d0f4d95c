import pytest

from xxz_efp.multipoly import MultiPoly, poly_ring
from xxz_efp.qkz import (GENERIC_Q, OMEGA, base_component, exchange_down,
                         exchange_up, inversions, sector_size,
                         specialize_homogeneous, verify_inverse_line,
                         verify_recursion, verify_size_links,
                         verify_structure)
from xxz_efp.rings import CYC3, Cyclotomic3
from xxz_efp.spinchain import config_from_bits


def poly_eq_str(p, s):
    return p.encode() == s


def test_base_components():
    ctx = GENERIC_Q
    assert base_component("e", 2, ctx) == MultiPoly.one(ctx.ring, ("z1", "z2"))
    # (-, 3): (q z2 - z3/q)/(q - 1/q)
    ring = ctx.ring
    _, z1, z2, z3 = poly_ring(ring, "z1", "z2", "z3")
    want = (z2.scale(ctx.q(1)) - z3.scale(ctx.q(-1))).coeff_exact_div(
        ctx.q_min_qinv())
    assert base_component("-", 3, ctx) == want
    # (+, 3): (q z1 - z2/q)/(q - 1/q) * z3
    want_p = (z1.scale(ctx.q(1)) - z2.scale(ctx.q(-1))).coeff_exact_div(
        ctx.q_min_qinv()) * z3
    assert base_component("+", 3, ctx) == want_p


def test_solve_small_chains(qkz_solution):
    s2 = qkz_solution("e", 2, "generic")
    assert s2.components[config_from_bits("10")].encode() == "(1)"
    assert s2.components[config_from_bits("01")].encode() == "(-q^-1)"
    s3 = qkz_solution("-", 3, "generic")
    ctx = s3.ctx
    _, z1, z2, z3 = poly_ring(ctx.ring, "z1", "z2", "z3")
    dud = s3.components[config_from_bits("010")]
    want = -(z1.scale(ctx.q(2)) - z3.scale(ctx.q(-2))).coeff_exact_div(
        ctx.q_min_qinv())
    assert dud == want


def test_omega_point_components(qkz_solution):
    s3 = qkz_solution("-", 3, "omega")
    vals = set()
    for c, p in s3.components.items():
        v = p
        for i in (1, 2, 3):
            v = v.subs_scalar(f"z{i}", CYC3.one)
        vals.add(v.constant_value())
    assert vals == {Cyclotomic3(1)}


def test_inversion_ordering():
    assert inversions(config_from_bits("110"), 3) == 0
    assert inversions(config_from_bits("011"), 3) == 1
    assert inversions(config_from_bits("0011"), 4) == 4


def test_exchange_lines_mutually_inverse(qkz_solution):
    sol = qkz_solution("e", 4, "generic")
    rep = verify_inverse_line(sol)
    assert rep.ok, rep


def test_structure_generic(qkz_solution):
    for mu, N in (("e", 2), ("e", 4), ("-", 3), ("+", 3), ("-", 5), ("+", 5)):
        rep = verify_structure(qkz_solution(mu, N, "generic"))
        assert rep.ok, rep


def test_structure_includes_rotation_at_omega(qkz_solution):
    for mu, N in (("-", 5), ("e", 4), ("e", 2), ("+", 3)):
        rep = verify_structure(qkz_solution(mu, N, "omega"))
        assert rep.ok, rep


def test_corrupted_component_caught(qkz_solution):
    sol = qkz_solution("e", 4, "generic")
    bad = dict(sol.components)
    key = config_from_bits("0101")
    bad[key] = bad[key].scale(sol.ctx.q(2))
    from xxz_efp.qkz import QkzSolution
    broken = QkzSolution(mu="e", N=4, ctx=sol.ctx, components=bad)
    rep = verify_structure(broken)
    assert not rep.ok
    assert any("0101" in f for f in rep.failures)


def test_recursion_all_positions(qkz_solution):
    for mu, N in (("-", 5), ("+", 5), ("e", 4), ("-", 3)):
        big = qkz_solution(mu, N, "generic")
        small = qkz_solution(mu, N - 2, "generic")
        for i in range(1, N):
            rep = verify_recursion(big, small, i)
            assert rep.ok, rep


def test_size_links(qkz_solution):
    rep = verify_size_links(qkz_solution("+", 3, "generic"),
                            qkz_solution("e", 4, "generic"))
    assert rep.ok, rep
    rep = verify_size_links(qkz_solution("-", 3, "generic"),
                            qkz_solution("e", 2, "generic"))
    assert rep.ok, rep
    rep = verify_size_links(qkz_solution("-", 5, "generic"),
                            qkz_solution("e", 4, "generic"))
    assert rep.ok, rep
    with pytest.raises(ValueError):
        verify_size_links(qkz_solution("-", 5, "generic"),
                          qkz_solution("e", 6, "generic"))


def test_specialize_homogeneous_matches_kernel(qkz_solution):
    for mu, N in (("-", 3), ("+", 3), ("e", 2), ("e", 4), ("-", 5)):
        sv = specialize_homogeneous(qkz_solution(mu, N, "omega"))
        assert sv.sector == sector_size(mu, N)


def test_degree_bounds(qkz_solution):
    sol = qkz_solution("e", 4, "generic")
    for p in sol.components.values():
        for v in sol.vars:
            assert p.degree(v) <= 1  # n - 1 with n = 2
    sol5 = qkz_solution("-", 5, "generic")
    for p in sol5.components.values():
        for v in sol5.vars:
            assert p.degree(v) <= 2


def test_path_independence_is_enforced(qkz_solution):
    # the breadth-first solver asserts agreement of all predecessor paths;
    # reaching N = 6 exercises configurations with up to three predecessors
    sol = qkz_solution("e", 6, "generic")
    assert len(sol.components) == 20


def test_solution_json(qkz_solution):
    blob = qkz_solution("e", 2, "generic").to_json()
    assert blob["ring"] == "generic"
    assert set(blob["components"]) == {"10", "01"}
