import json
from fractions import Fraction

import pytest

from torcrys.crystal import (WindowError, check_shift_automorphism,
                             check_twist, e_tilde, f_tilde, generate,
                             is_extremal, row_stats, stats, sub_crystal)
from torcrys.lattice import RootSystem, Weight
from torcrys.monomial import (from_variables, monomial_from_json,
                              phi_exponents, psi_exponents)


def rs1():
    return RootSystem.for_fundamental(3, 1)


def M0(rs):
    return from_variables(rs, [(1, 0, 1), (0, 1, -1)], rs.varpi(1))


def brute_stats(row, lo=-50, hi=50):
    # direct scan over an explicit L-range, straight from the defining sums
    phis = {L: sum(u for l, u in row.items() if l <= L) for L in range(lo, hi)}
    epss = {L: -sum(u for l, u in row.items() if l >= L) for L in range(lo, hi)}
    phi = max(0, max(phis.values()))
    eps = max(0, max(epss.values()))
    p = max((L for L, v in epss.items() if v == eps), default=None) if eps else None
    qq = min((L for L, v in phis.items() if v == phi), default=None) if phi else None
    return eps, phi, p, qq


def test_stats_examples():
    rs = rs1()
    st = stats(rs, M0(rs), 1)
    assert (st.eps, st.phi, st.p, st.qq) == (0, 1, None, 0)
    m2 = from_variables(rs, [(2, 1, 1), (1, 2, -1)], rs.varpi(1) - rs.alpha(1))
    st = stats(rs, m2, 1)
    assert (st.eps, st.phi, st.p) == (1, 0, 2)
    from torcrys.monomial import identity_monomial
    st = stats(rs, identity_monomial(rs), 2)
    assert (st.eps, st.phi) == (0, 0)


def test_stats_against_scan_oracle():
    import random
    rng = random.Random(7)
    for _ in range(200):
        row = {}
        for _ in range(rng.randint(0, 5)):
            row[2 * rng.randint(-6, 6)] = rng.randint(-3, 3)
        row = {l: u for l, u in row.items() if u}
        st = row_stats(row)
        assert (st.eps, st.phi, st.p, st.qq) == brute_stats(row)


def test_kashiwara_operators_paper_chain():
    rs = rs1()
    m = M0(rs)
    f1 = f_tilde(rs, m, 1)
    assert str(f1) == "Y(1,2)^-1*Y(2,1)"
    assert e_tilde(rs, f1, 1) == m
    assert e_tilde(rs, m, 1) is None
    rs2 = RootSystem.for_fundamental(3, 2)
    mb = from_variables(rs2, [(2, 0, 1), (0, 2, -1)], rs2.varpi(2))
    assert str(f_tilde(rs2, mb, 2)) == "Y(0,2)^-1*Y(1,1)*Y(2,2)^-1*Y(3,1)"


def test_generate_fundamental_window():
    rs = rs1()
    g = generate(rs, [M0(rs)], (-8, 12))
    assert len(g) == 20  # five shift periods of the four-element cycle
    base = {"Y(0,1)^-1*Y(1,0)", "Y(1,2)^-1*Y(2,1)", "Y(2,3)^-1*Y(3,2)",
            "Y(0,3)*Y(3,4)^-1"}
    names = {str(m) for m in g.nodes}
    assert base <= names
    # tau_{4,-delta} translates of the period are present
    per0 = sorted(str(m) for m in g.nodes if m.weight.delta == 0)
    per1 = sorted(str(m) for m in g.nodes if m.weight.delta == -1)
    assert len(per0) == 4 and len(per1) == 4


def test_generate_single_node_window():
    rs = rs1()
    m = M0(rs)
    g = generate(rs, [m], (0, 1))
    assert len(g) == 1 and not g.f_edges and not g.e_edges
    assert g.interior == [False]


def test_generate_rejects_bad_anchor():
    rs = rs1()
    with pytest.raises(WindowError):
        generate(rs, [M0(rs)], (5, 9))


def test_sub_crystal_counts():
    from math import comb
    rs = RootSystem.for_fundamental(5, 2)
    m = from_variables(rs, [(2, 0, 1), (0, 2, -1)], rs.varpi(2))
    g = generate(rs, [m], (-10, 12))
    sc = sub_crystal(g, m, range(1, 6))
    assert len(sc) == comb(6, 2)
    empty = sub_crystal(g, m, [])
    assert len(empty) == 1


def test_extremality():
    rs = rs1()
    g = generate(rs, [M0(rs)], (-16, 16))
    rep = is_extremal(rs, M0(rs), 4, (-30, 30))
    assert rep.verdict == "extremal"
    # a node with both eps and phi positive in one direction (a row with a
    # positive power below a negative one) is not extremal at step 0
    rs5 = RootSystem(3, parity=0)
    mid = from_variables(rs5, [(0, -2, 1), (0, 2, -1), (1, 1, 1), (3, -1, -1)],
                         Weight((0, 1, 0, -1), Fraction(0)))
    rep2 = is_extremal(rs5, mid, 3, (-30, 30))
    assert rep2.verdict == "not-extremal"
    assert rep2.witness_direction == 0
    # extremal anchor of the doubled-weight family at s = 1
    rs5 = RootSystem(3, parity=0)
    ms = from_variables(rs5, [(1, 1, 1), (1, -5, 1), (0, 2, -1), (0, -4, -1)],
                        Weight((-2, 2, 0, 0), Fraction(1)))
    assert is_extremal(rs5, ms, 4, (-40, 40)).verdict == "extremal"


def test_extremality_window_inconclusive():
    rs = rs1()
    rep = is_extremal(rs, M0(rs), 4, (-2, 3))
    assert rep.verdict == "inconclusive-window"


def test_check_twist_promotion():
    rs = rs1()
    g = generate(rs, [M0(rs)], (-10, 14))
    bad = check_twist(g, lambda e: phi_exponents(rs, e), lambda i: i + 1)
    assert bad == []
    # identity map with shifted labels must violate on a nontrivial crystal
    bad2 = check_twist(g, lambda e: dict(e), lambda i: i + 1)
    assert bad2


def test_check_twist_psi():
    rs = rs1()
    g = generate(rs, [M0(rs)], (-10, 14))
    bad = check_twist(g, lambda e: psi_exponents(rs, e), lambda i: -i)
    assert bad == []


def test_local_inverses_and_weight_identity():
    rs = RootSystem.for_fundamental(3, 2)
    m = from_variables(rs, [(2, 0, 1), (0, 2, -1)], rs.varpi(2))
    g = generate(rs, [m], (-8, 10))
    for idx in g.interior_indices():
        node = g.nodes[idx]
        for i in rs.nodes:
            st = stats(rs, node, i)
            assert st.phi - st.eps == node.weight.pair(i)
            fm = f_tilde(rs, node, i)
            if fm is not None:
                assert e_tilde(rs, fm, i) == node
            em = e_tilde(rs, node, i)
            if em is not None:
                assert f_tilde(rs, em, i) == node


def test_shift_equivariance_and_z_ell():
    rs = rs1()
    g = generate(rs, [M0(rs)], (-12, 16))
    assert check_shift_automorphism(g, -(rs.n + 1)) == []
    rs2 = RootSystem.for_fundamental(3, 2)
    g2 = generate(rs2, [from_variables(rs2, [(2, 0, 1), (0, 2, -1)], rs2.varpi(2))],
                  (-12, 16))
    assert check_shift_automorphism(g2, -2) == []


def test_graph_exports():
    rs = rs1()
    g = generate(rs, [M0(rs)], (-4, 8))
    dot = g.to_dot()
    assert dot.startswith("digraph") and 'label="1"' in dot
    data = g.to_json()
    assert len(data["nodes"]) == len(g)
    assert all(len(e) == 3 for e in data["edges"])
    # bit-exact round trip of the node list
    again = [monomial_from_json(d) for d in json.loads(json.dumps(data))["nodes"]]
    assert again == g.nodes
