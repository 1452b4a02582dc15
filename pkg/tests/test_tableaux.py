from math import comb

import pytest

from torcrys.crystal import f_tilde, e_tilde, generate, sub_crystal
from torcrys.closedness import fundamental_anchor
from torcrys.lattice import RootSystem
from torcrys.monomial import exp_key, phi_exponents, tau
from torcrys.tableaux import (all_tableaux, box_exponents, enumerate_monomials,
                              tab_exponents, tab_kashiwara, tab_monomial,
                              tab_promotion)


def test_box_examples():
    rs = RootSystem.for_fundamental(3, 1)
    assert box_exponents(rs, 1, 0) == {(0, 1): -1, (1, 0): 1}
    assert box_exponents(rs, 4, 0) == {(3, 4): -1, (0, 3): 1}
    with pytest.raises(ValueError):
        box_exponents(rs, 5, 0)
    # adjacent boxes cancel their shared row
    rs2 = RootSystem.for_fundamental(3, 2)
    from torcrys.monomial import exp_mul
    prod = exp_mul(box_exponents(rs2, 2, 1), box_exponents(rs2, 3, -1))
    assert all(i != 2 for (i, _) in prod)


def test_tab_monomial_examples():
    rs = RootSystem.for_fundamental(3, 2)
    assert str(tab_monomial(rs, 2, (1, 2), 0)) == "Y(0,2)^-1*Y(2,0)"
    m1 = tab_monomial(rs, 2, (1, 2), 1)
    assert str(m1) == "Y(0,4)^-1*Y(2,2)"
    assert m1.weight.delta == -1
    assert m1 == tau(rs, tab_monomial(rs, 2, (1, 2), 0), 2, -rs.delta_weight())
    assert str(tab_monomial(rs, 2, (2, 3), 0)) == "Y(1,3)^-1*Y(3,1)"


def test_tab_monomial_shift_extension():
    rs = RootSystem.for_fundamental(3, 2)
    for T in all_tableaux(rs, 2):
        for j in range(0, 3):
            lhs = tab_monomial(rs, 2, T, j + 2)
            rhs = tau(rs, tab_monomial(rs, 2, T, j), 4,
                      rs.delta_weight().scaled(-2))
            assert lhs == rhs


def test_tab_kashiwara_rules():
    rs = RootSystem.for_fundamental(3, 2)
    assert tab_kashiwara(rs, 2, (1, 3), 0, 1, lower=True) == ((2, 3), 0)
    assert tab_kashiwara(rs, 2, (1, 3), 5, 0, lower=False) == ((3, 4), 4)
    assert tab_kashiwara(rs, 2, (1, 3), 0, 0, lower=True) is None
    assert tab_kashiwara(rs, 2, (1, 2), 0, 1, lower=True) is None
    assert tab_kashiwara(rs, 2, (2, 4), 0, 0, lower=True) == ((1, 2), 1)


def test_tab_kashiwara_matches_crystal_operators():
    for (n, ell) in ((3, 1), (3, 2), (5, 2), (5, 3)):
        rs = RootSystem.for_fundamental(n, ell)
        for T in all_tableaux(rs, ell):
            for j in (0, 1):
                m = tab_monomial(rs, ell, T, j)
                for i in rs.nodes:
                    out = tab_kashiwara(rs, ell, T, j, i, lower=True)
                    img = f_tilde(rs, m, i)
                    if out is None:
                        assert img is None
                    else:
                        assert img == tab_monomial(rs, ell, out[0], out[1])
                    out = tab_kashiwara(rs, ell, T, j, i, lower=False)
                    img = e_tilde(rs, m, i)
                    if out is None:
                        assert img is None
                    else:
                        assert img == tab_monomial(rs, ell, out[0], out[1])


def test_tab_promotion():
    rs = RootSystem.for_fundamental(3, 2)
    assert tab_promotion(rs, (1, 2), 0) == ((2, 3), 0)
    assert tab_promotion(rs, (2, 4), 0) == ((1, 3), 1)
    T, j = (1, 3), 0
    for _ in range(4):
        T, j = tab_promotion(rs, T, j)
    assert (T, j) == ((1, 3), 2)  # order n+1 with j advanced by ell


def test_promotion_coherence_with_phi():
    for (n, ell) in ((3, 1), (3, 2), (5, 2)):
        rs = RootSystem.for_fundamental(n, ell)
        for T in all_tableaux(rs, ell):
            for j in range(-1, 3):
                lhs = phi_exponents(rs, tab_exponents(rs, ell, T, j))
                T2, j2 = tab_promotion(rs, T, j)
                rhs = tab_exponents(rs, ell, T2, j2)
                assert exp_key(lhs) == exp_key(rhs)


def test_enumerate_counts():
    rs = RootSystem.for_fundamental(3, 1)
    ms = enumerate_monomials(rs, 1, range(0, 4))
    assert len(ms) == 16
    rs2 = RootSystem.for_fundamental(3, 2)
    ms2 = enumerate_monomials(rs2, 2, [0, 1])
    # 12 distinct monomials: one full shift period of the ell=2 crystal
    assert len(ms2) == 12
    with pytest.raises(ValueError):
        enumerate_monomials(rs2, 4, [0])


def test_oracle_equivalence_with_bfs():
    # the I_0-subcrystal from M_j equals {m_{T;j}} as a set, for each j
    for (n, ell) in ((3, 1), (3, 2), (5, 2), (5, 3)):
        rs = RootSystem.for_fundamental(n, ell)
        window = (-2 * (n + 1), 2 * (n + 1))
        g = generate(rs, [fundamental_anchor(rs, ell)], window)
        for j in range(ell):
            Mj = tab_monomial(rs, ell, tuple(range(1, ell + 1)), j)
            sc = sub_crystal(g, Mj, range(1, n + 1))
            expected = {tab_monomial(rs, ell, T, j) for T in all_tableaux(rs, ell)}
            assert set(sc.nodes) == expected


def test_remprom_counts():
    # apart from node 0 and node 1, the subcrystal of M_0 has C(n, ell-1)
    # monomials, all with tableaux starting at 1
    for n in (3, 5, 7):
        rs_r = (n - 1) // 2
        for ell in range(1, rs_r + 2):
            rs = RootSystem.for_fundamental(n, ell)
            g = generate(rs, [fundamental_anchor(rs, ell)],
                         (-2 * (n + 1), 2 * (n + 1)))
            J = [i for i in rs.nodes if i not in (0, 1)]
            sc = sub_crystal(g, fundamental_anchor(rs, ell), J)
            assert len(sc) == comb(n, ell - 1)
            expected = {tab_monomial(rs, ell, (1,) + T, 0)
                        for T in all_tableaux(rs, ell - 1)
                        if not T or T[0] > 1}
            expected = {m for m in expected}
            assert set(sc.nodes) == expected


def test_inverse_promotion_for_large_ell():
    # psi . phi . psi^{-1} acts as Y_{i,l} -> Y_{i-1,l+1}; computationally it
    # intertwines the operators with the label shift i -> i-1
    from torcrys.crystal import check_twist
    from torcrys.monomial import from_variables
    rs = RootSystem.for_fundamental(3, 3)
    anchor = from_variables(rs, [(3, 0, 1), (0, 1, -1)], rs.varpi(3))
    g = generate(rs, [anchor], (-10, 14))

    def inv_promotion(exps):
        return {(rs.mod(i - 1), l + 1): u for (i, l), u in exps.items()}

    assert check_twist(g, inv_promotion, lambda i: i - 1) == []
