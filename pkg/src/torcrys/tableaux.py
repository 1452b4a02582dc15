"""Single-row Young tableau model of the level-zero fundamental
crystals: boxes, the monomials m_{T;j}, tableau-level Kashiwara rules,
promotion, and enumeration.

This model is an independent oracle for the BFS crystal engine: both
must produce the same node sets and edges.  The explicit formulas below
hold for ell <= (n+1)/2; larger ell is reached through the diagram flip.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .lattice import RootSystem, Weight
from .monomial import Monomial, exp_key, exp_mul


def box_exponents(rs: RootSystem, k: int, p: int) -> dict:
    """Exponents of the box monomial Y_{k-1,p+k}^-1 Y_{k,p+k-1} for
    1 <= k <= n+1, with Y_{n+1,*} read as Y_{0,*}."""
    if not 1 <= k <= rs.n + 1:
        raise ValueError(f"box entry {k} out of range 1..{rs.n + 1}")
    return exp_mul({(rs.mod(k), p + k - 1): 1}, {(rs.mod(k - 1), p + k): 1}, sign=-1)


def _check_tableau(rs: RootSystem, ell: int, T) -> tuple:
    T = tuple(T)
    if len(T) != ell:
        raise ValueError(f"tableau {T} does not have length {ell}")
    if any(not 1 <= t <= rs.n + 1 for t in T) or any(a >= b for a, b in zip(T, T[1:])):
        raise ValueError(f"{T} is not strictly increasing in 1..{rs.n + 1}")
    return T


def tab_exponents(rs: RootSystem, ell: int, T, j: int) -> dict:
    """Exponents of m_{T;j}; arbitrary j via the shift extension
    m_{T;j+ell} = tau_{n+1,-ell*delta}(m_{T;j})."""
    T = _check_tableau(rs, ell, T)
    t, j0 = divmod(j, ell)
    out: dict = {}
    for p in range(1, j0 + 1):
        out = exp_mul(out, box_exponents(rs, T[p - 1], rs.n - ell - 2 * p + 2 * j0 + 2))
    for p in range(j0 + 1, ell + 1):
        out = exp_mul(out, box_exponents(rs, T[p - 1], ell + 1 - 2 * p + 2 * j0))
    if t:
        out = {(i, l + t * (rs.n + 1)): u for (i, l), u in out.items()}
    return out


def tab_monomial(rs: RootSystem, ell: int, T, j: int) -> Monomial:
    """The monomial of (T; j) with its full weight.

    The h-part is forced by the column sums; the delta-part is -j,
    anchored at wt(m_{(1..ell);0}) = varpi_ell and propagated by the
    shift automorphism, which moves the weight by -delta per step of j.
    """
    if not 1 <= ell <= rs.r + 1:
        raise ValueError("tab_monomial needs ell <= r+1; use the diagram flip beyond")
    exps = tab_exponents(rs, ell, T, j)
    h = [0] * (rs.n + 1)
    for (i, _), u in exps.items():
        h[i] += u
    return Monomial(exp_key(exps), Weight(tuple(h), Fraction(-j)))


def tab_kashiwara(rs: RootSystem, ell: int, T, j: int, i: int, lower: bool):
    """Tableau form of the Kashiwara operators: returns (T', j') or None.

    For i != 0, f~_i replaces i by i+1 and e~_i replaces i+1 by i.  The
    affine operators rotate the tableau and move j by one.
    """
    T = _check_tableau(rs, ell, T)
    s = set(T)
    i = rs.mod(i)
    if i != 0:
        if lower:
            if i not in s or i + 1 in s:
                return None
            return tuple(sorted(s - {i} | {i + 1})), j
        if i + 1 not in s or i in s:
            return None
        return tuple(sorted(s - {i + 1} | {i})), j
    if lower:
        if T[0] == 1 or T[-1] != rs.n + 1:
            return None
        return (1,) + T[:-1], j + 1
    if T[0] != 1 or T[-1] == rs.n + 1:
        return None
    return T[1:] + (rs.n + 1,), j - 1


def tab_promotion(rs: RootSystem, T, j: int):
    """Promotion: add one to every entry; an entry n+1 wraps to 1 and
    bumps j by one."""
    T = tuple(T)
    if T and T[-1] == rs.n + 1:
        return (1,) + tuple(t + 1 for t in T[:-1]), j + 1
    return tuple(t + 1 for t in T), j


def all_tableaux(rs: RootSystem, ell: int):
    return list(combinations(range(1, rs.n + 2), ell))


def enumerate_monomials(rs: RootSystem, ell: int, j_range) -> list:
    """All m_{T;j} for T over the C(n+1,ell) tableaux and j in j_range,
    without duplicates, in canonical order."""
    out = {}
    for j in j_range:
        for T in all_tableaux(rs, ell):
            m = tab_monomial(rs, ell, T, j)
            out[m] = (T, j)
    return sorted(out, key=Monomial.sort_key)
