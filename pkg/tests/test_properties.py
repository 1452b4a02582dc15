"""Randomized property suites: ring axioms, crystal local structure,
weight bookkeeping, and serialization round-trips.  Each suite runs at
least 500 cases from a fixed seed."""

import random

from torcrys.crystal import e_tilde, f_tilde, generate, stats
from torcrys.closedness import fundamental_anchor
from torcrys.lattice import RootSystem
from torcrys.monomial import (monomial_from_json_str, monomial_to_json_str,
                              phi_exponents, psi_exponents, tau)
from torcrys.qcoeff import (LaurentPoly, QSeries, RQ_ONE, RationalQ,
                            series_exp, series_log)

N_CASES = 500


def rand_poly(rng, terms=4, span=6, coeff=9):
    return LaurentPoly({rng.randint(-span, span): rng.randint(-coeff, coeff)
                        for _ in range(rng.randint(0, terms))})


def rand_rational(rng):
    num = rand_poly(rng)
    den = LaurentPoly({0: 0})
    while den.is_zero():
        den = rand_poly(rng)
    return RationalQ(num, den)


def test_laurent_ring_axioms():
    rng = random.Random(2024)
    for _ in range(N_CASES):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * LaurentPoly({0: 1}) == a


def test_rational_field_axioms():
    rng = random.Random(99)
    for _ in range(N_CASES):
        a, b, c = (rand_rational(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert (a - a).is_zero()
        if not b.is_zero():
            assert (a / b) * b == a
        # canonicalization is idempotent and value preserving
        ca = a.canonical()
        assert ca == a and ca.canonical().num == ca.num


def test_series_exp_log_round_trip():
    rng = random.Random(512)
    for _ in range(50):
        order = rng.randint(1, 5)
        coeffs = [RQ_ONE] + [rand_rational(rng) for _ in range(order)]
        s = QSeries(rng.choice((1, -1)), coeffs, order)
        assert series_exp(series_log(s)) == s


def pool_of_nodes():
    pool = []
    for (n, ell) in ((3, 1), (3, 2), (5, 3)):
        rs = RootSystem.for_fundamental(n, ell)
        g = generate(rs, [fundamental_anchor(rs, ell)],
                     (-2 * (n + 1), 2 * (n + 1)))
        pool.extend((rs, g.nodes[k]) for k in g.interior_indices())
    return pool


def test_crystal_local_inverse_and_weight_identity():
    pool = pool_of_nodes()
    rng = random.Random(7)
    for _ in range(N_CASES):
        rs, m = rng.choice(pool)
        i = rng.choice(rs.nodes)
        st = stats(rs, m, i)
        assert st.phi - st.eps == m.weight.pair(i)
        fm = f_tilde(rs, m, i)
        if fm is not None:
            assert e_tilde(rs, fm, i) == m
            assert fm.weight == m.weight - rs.alpha(i)
        em = e_tilde(rs, m, i)
        if em is not None:
            assert f_tilde(rs, em, i) == m
            assert em.weight == m.weight + rs.alpha(i)


def test_weight_column_sum_consistency():
    pool = pool_of_nodes()
    rng = random.Random(13)
    for _ in range(N_CASES):
        rs, m = rng.choice(pool)
        sums = [0] * (rs.n + 1)
        for (i, _), u in m.exps:
            sums[i] += u
        assert tuple(sums) == m.weight.h


def test_tau_commutes_with_twists_at_exponent_level():
    pool = pool_of_nodes()
    rng = random.Random(21)
    for _ in range(N_CASES):
        rs, m = rng.choice(pool)
        p = 2 * rng.randint(-3, 3)
        shifted = {(i, l + p): u for (i, l), u in m.exps}
        assert phi_exponents(rs, shifted) == \
            {(i, l + p): u for (i, l), u in phi_exponents(rs, m.exp_dict()).items()}
        assert psi_exponents(rs, shifted) == \
            {(i, l + p): u for (i, l), u in psi_exponents(rs, m.exp_dict()).items()}


def test_serialization_round_trip():
    pool = pool_of_nodes()
    rng = random.Random(34)
    for _ in range(N_CASES):
        rs, m = rng.choice(pool)
        shifted = tau(rs, m, 2 * rng.randint(-5, 5),
                      rs.delta_weight().scaled(rng.randint(-3, 3)))
        assert monomial_from_json_str(monomial_to_json_str(shifted)) == shifted


def test_a_monomial_intertwined_by_phi():
    from torcrys.monomial import a_exponents
    for parity in (0, 1):
        rs = RootSystem(3, parity=parity)
        for i in rs.nodes:
            for l in range(-6, 7):
                if l % 2 != (rs.s(i) + 1) % 2:
                    continue
                lhs = phi_exponents(rs, a_exponents(rs, i, l))
                rhs = a_exponents(rs, rs.mod(i + 1), l + 1)
                assert lhs == rhs


def test_qbinom_at_one_random():
    from math import comb
    from torcrys.qcoeff import qbinom
    rng = random.Random(55)
    for _ in range(N_CASES):
        m = rng.randint(0, 8)
        k = rng.randint(0, m)
        assert qbinom(m, k).eval_at_one() == comb(m, k)


def test_series_times_denominator_recovers_numerator():
    rng = random.Random(808)
    from torcrys.qcoeff import series_of_rational
    for _ in range(50):
        deg_n, deg_d = rng.randint(0, 3), rng.randint(0, 3)
        num = {k: rand_rational(rng) for k in range(deg_n + 1)}
        den = {k: rand_rational(rng) for k in range(1, deg_d + 1)}
        den[0] = RQ_ONE
        order = 6
        s = series_of_rational(num, den, 1, order)
        # multiply the truncated series back by the denominator
        for k in range(order + 1 - deg_d):
            acc = None
            for j, dj in den.items():
                if 0 <= k - j <= order:
                    term = dj * s.coeff(k - j)
                    acc = term if acc is None else acc + term
            expect = num.get(k)
            if expect is None:
                assert acc is None or acc.is_zero()
            else:
                assert acc == expect


def test_gamma_tau_periodicity():
    from torcrys.monomial import gamma
    pool = pool_of_nodes()
    rng = random.Random(606)
    for _ in range(200):
        rs, m = rng.choice(pool)
        N = rng.choice((4, 6, 8))
        t = N * rng.randint(-2, 2)
        shifted = tau(rs, m, t, rs.delta_weight().scaled(rng.randint(-2, 2)))
        assert gamma(rs, shifted, N).exps == gamma(rs, m, N).exps
