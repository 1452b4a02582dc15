"""Loop weight modules over the rational-function field in q: the thin
modules attached to closed fundamental crystals, the pasted module for
twice the first fundamental level-zero weight (n = 3), q-characters,
and exact verification of the quantum toroidal defining relations on
windows.

Scalars are RationalQ throughout; every residual test is exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .closedness import fundamental_anchor
from .crystal import CrystalGraph, WindowError, generate, row_stats
from .lattice import RootSystem, Weight
from .monomial import Monomial, a_exponents, exp_key, exp_mul, from_variables
from .qcoeff import (Q_MINUS_QINV, RQ_ONE, RQ_ZERO, LaurentPoly, QSeries,
                     RationalQ, qfact, qint, series_log, series_of_rational)


class ClosednessRefusal(ValueError):
    """Module construction refused: the crystal is not closed."""

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class ConstructionError(ValueError):
    """A node configuration matches no action template."""


# ---------------------------------------------------------------------------
# modules
# ---------------------------------------------------------------------------

@dataclass
class LoopModule:
    rs: RootSystem
    graph: CrystalGraph
    flavor: str                 # "thin" | "doubled"
    minus_edges: dict = field(default_factory=dict)  # i -> [entries per node]
    plus_edges: dict = field(default_factory=dict)
    twist: int = 0              # spectral twist t_b with b = q^twist
    _phi_cache: dict = field(default_factory=dict)
    _h_cache: dict = field(default_factory=dict)
    _x_cache: dict = field(default_factory=dict)

    # edge entry: (dst_index_or_None, step_position, base_coefficient)

    def __len__(self):
        return len(self.graph.nodes)

    def node(self, idx: int) -> Monomial:
        return self.graph.nodes[idx]

    def twisted(self, k: int) -> "LoopModule":
        """Twist by the spectral automorphism sending x_{i,r} to q^{kr} x_{i,r}."""
        return LoopModule(self.rs, self.graph, self.flavor,
                          self.minus_edges, self.plus_edges, self.twist + k)

    # -- generator actions -----------------------------------------------------

    def x_on_basis(self, sign: int, i: int, r: int, idx: int):
        key = (sign, i, r, idx)
        out = self._x_cache.get(key)
        if out is None:
            table = self.plus_edges if sign > 0 else self.minus_edges
            entries = []
            for dst, l, c0 in table[i][idx]:
                if dst is None:
                    raise WindowError(
                        f"x action leaves the window at node {self.node(idx)}")
                entries.append((dst, c0.mul_qpow(r * (l + self.twist))
                                if r else c0))
            out = tuple(entries)
            self._x_cache[key] = out
        return out

    def act_x(self, sign: int, i: int, r: int, vec: dict) -> dict:
        out = {}
        for idx, c in vec.items():
            for dst, c0 in self.x_on_basis(sign, i, r, idx):
                s = out.get(dst)
                s = c * c0 if s is None else s + c * c0
                if s.is_zero():
                    out.pop(dst, None)
                else:
                    out[dst] = s
        return out

    def divided_power_x(self, sign: int, i: int, k: int, vec: dict) -> dict:
        for _ in range(k):
            vec = self.act_x(sign, i, 0, vec)
        if k >= 2:
            inv = RationalQ(LaurentPoly.from_int(1), qfact(k))
            vec = {idx: c * inv for idx, c in vec.items()}
        return vec

    def act_k(self, hvec, vec: dict) -> dict:
        """k_h for h = sum hvec[i] h_i (+ hvec[n+1] d when given)."""
        out = {}
        for idx, c in vec.items():
            w = self.node(idx).weight
            e = sum(hvec[i] * w.h[i] for i in range(self.rs.n + 1))
            if len(hvec) > self.rs.n + 1 and hvec[-1]:
                d = hvec[-1] * w.delta
                if d.denominator != 1:
                    raise ValueError("fractional k_d eigenvalue")
                e += int(d)
            out[idx] = c.mul_qpow(e)
        return out

    # -- diagonal loop-Cartan data ----------------------------------------------

    def phi_series(self, idx: int, i: int, sign: int, order: int) -> QSeries:
        """Eigenvalue series of phi_i^{+-}(z) on the basis vector.

        Thin flavor: the crystal-statistics formula.  Section-5 flavor:
        the rational form read from the node's own row.
        """
        key = (idx, i, sign)
        cached = self._phi_cache.get(key)
        if cached is not None and len(cached) >= order + 1:
            return QSeries(sign, cached[: order + 1], order)
        if self.flavor == "thin":
            coeffs = self._phi_actmod(idx, i, sign, order)
        else:
            row = self.node(idx).row(i)
            coeffs = list(fr_phi_series(row, sign, order, twist=self.twist).coeffs)
        self._phi_cache[key] = coeffs
        return QSeries(sign, coeffs, order)

    def _phi_actmod(self, idx, i, sign, order):
        st = row_stats(self.node(idx).row(i))
        w = st.phi - st.eps
        coeffs = [RationalQ.q_power(sign * w)]
        qmq = RationalQ(Q_MINUS_QINV)
        for s in range(1, order + 1):
            val = RQ_ZERO
            if st.phi:
                val = val + RationalQ.from_int(st.phi).mul_qpow(
                    sign * s * (st.qq + 1 + self.twist))
            if st.eps:
                val = val - RationalQ.from_int(st.eps).mul_qpow(
                    sign * s * (st.p - 1 + self.twist))
            if sign > 0:
                coeffs.append(qmq * val)
            else:
                coeffs.append(-(qmq * val))
        return coeffs

    def phi_component(self, idx: int, i: int, t: int) -> RationalQ:
        """Eigenvalue of phi^+_{i,t} (t >= 0) or phi^-_{i,t} (t <= 0)."""
        s = self.phi_series(idx, i, 1 if t >= 0 else -1, abs(t))
        return s.coeff(abs(t))

    def pairing_value(self, idx: int, i: int, t: int) -> RationalQ:
        """(phi^+_{i,t} - phi^-_{i,t})/(q - q^-1) as needed by the
        [x^+, x^-] relation."""
        if t > 0:
            num = self.phi_component(idx, i, t)
        elif t < 0:
            num = -self.phi_component(idx, i, t)
        else:
            w = row_stats(self.node(idx).row(i))
            return RationalQ(qint(w.phi - w.eps))
        return num / RationalQ(Q_MINUS_QINV)

    def h_eigenvalue(self, idx: int, i: int, m: int) -> RationalQ:
        """Eigenvalue of h_{i,m} (m != 0), extracted from the formal
        logarithm of the module's own phi-series."""
        if m == 0:
            raise ValueError("h_{i,0} is not a generator")
        key = (idx, i, m)
        out = self._h_cache.get(key)
        if out is None:
            sign = 1 if m > 0 else -1
            s = self.phi_series(idx, i, sign, abs(m))
            c0 = s.coeff(0)
            unit = [c / c0 for c in s.coeffs]
            lg = series_log(QSeries(sign, unit, abs(m)))
            out = lg.coeff(abs(m)) / RationalQ(Q_MINUS_QINV)
            if sign < 0:
                out = -out
            self._h_cache[key] = out
        return out

    def act_h(self, i: int, m: int, vec: dict) -> dict:
        out = {}
        for idx, c in vec.items():
            val = self.h_eigenvalue(idx, i, m)
            if not val.is_zero():
                out[idx] = c * val
        return out

    def act_phi(self, i: int, t: int, vec: dict) -> dict:
        out = {}
        for idx, c in vec.items():
            val = self.phi_component(idx, i, t)
            if not val.is_zero():
                out[idx] = c * val
        return out

    # -- q-character --------------------------------------------------------------

    def qcharacter(self) -> dict:
        """Multiplicity map of l-weights; multiplicity one throughout."""
        out = {}
        for m in self.graph.nodes:
            if m in out:
                raise AssertionError("duplicate l-weight in module basis")
            out[m] = 1
        return out


# ---------------------------------------------------------------------------
# Frenkel-Reshetikhin rational form of an l-weight
# ---------------------------------------------------------------------------

def fr_phi_series(row: dict, sign: int, order: int, twist: int = 0) -> QSeries:
    """Series of q^{deg Q - deg R} Q(zq^-1) R(zq) / (Q(zq) R(zq^-1))
    where Q collects the positive and R the negative exponents of the
    row.  This is the l-weight attached to the monomial by the
    classical correspondence."""
    w = sum(row.values())
    num = {0: RationalQ.q_power(w)}
    den = {0: RQ_ONE}
    for l, u in sorted(row.items()):
        ls = l + twist
        for _ in range(abs(u)):
            if u > 0:
                num = _zpoly_mul(num, {0: RQ_ONE, 1: -RationalQ.q_power(ls - 1)})
                den = _zpoly_mul(den, {0: RQ_ONE, 1: -RationalQ.q_power(ls + 1)})
            else:
                num = _zpoly_mul(num, {0: RQ_ONE, 1: -RationalQ.q_power(ls + 1)})
                den = _zpoly_mul(den, {0: RQ_ONE, 1: -RationalQ.q_power(ls - 1)})
    return series_of_rational(num, den, sign, order)


def _zpoly_mul(a: dict, b: dict) -> dict:
    out = {}
    for i, c in a.items():
        for j, d in b.items():
            cur = out.get(i + j)
            cur = c * d if cur is None else cur + c * d
            out[i + j] = cur
    return {k: v for k, v in out.items() if not v.is_zero()}


def fr_consistency_report(mod: LoopModule, order: int = 6, nodes=None):
    """Compare the module's own phi-series against the rational form on
    every (node, direction, sign); returns the list of discrepancies."""
    bad = []
    idxs = nodes if nodes is not None else range(len(mod))
    for idx in idxs:
        m = mod.node(idx)
        for i in mod.rs.nodes:
            row = m.row(i)
            for sign in (1, -1):
                lhs = mod.phi_series(idx, i, sign, order)
                rhs = fr_phi_series(row, sign, order, twist=mod.twist)
                if lhs != rhs:
                    bad.append((m, i, sign))
    return bad


# ---------------------------------------------------------------------------
# thin modules
# ---------------------------------------------------------------------------

def build_thin(n: int, ell: int, window=None) -> LoopModule:
    """The extremal fundamental loop weight module for ell in
    {1, r+1, n}; other ell are refused with a closedness witness."""
    rs = RootSystem.for_fundamental(n, ell)
    if ell not in (1, rs.r + 1, n):
        from .monomial import a_monomial
        from .tableaux import tab_monomial
        ellp = ell if ell <= rs.r + 1 else n + 1 - ell
        wit = tab_monomial(RootSystem.for_fundamental(n, ellp), ellp,
                           tuple(range(1, ellp + 1)), 1)
        from .monomial import a_monomial as _am
        wit = wit * _am(RootSystem.for_fundamental(n, ellp), 1, ellp)
        raise ClosednessRefusal(
            f"the fundamental crystal for n={n}, ell={ell} is not closed; "
            f"a required monomial such as {wit} is missing", witness=wit)
    if window is None:
        window = (-4 * (n + 1), 4 * (n + 1))
    g = generate(rs, [fundamental_anchor(rs, ell)], window)
    mod = LoopModule(rs, g, "thin")
    for i in rs.nodes:
        minus, plus = [], []
        for idx, m in enumerate(g.nodes):
            st = row_stats(m.row(i))
            ment, pent = [], []
            if st.phi:
                dst = g.f_edges.get((idx, i))
                ment.append((dst, st.qq + 1, RQ_ONE))
            if st.eps:
                dst = g.e_edges.get((idx, i))
                pent.append((dst, st.p - 1, RQ_ONE))
            minus.append(tuple(ment))
            plus.append(tuple(pent))
        mod.minus_edges[i] = minus
        mod.plus_edges[i] = plus
    return mod


# ---------------------------------------------------------------------------
# the pasted module for 2*varpi_1 at n = 3
# ---------------------------------------------------------------------------

def doubled_anchor(rs: RootSystem, s: int) -> Monomial:
    return from_variables(
        rs, [(1, 1, 1), (1, -1 - 4 * s, 1), (0, 2, -1), (0, -4 * s, -1)],
        Weight((-2, 2, 0, 0), Fraction(s)))


def _pair_letters(row: dict):
    """Classify a two-variable row inside the four-element orbit of a
    tensor block with letters (a, b): returns (a, b, position)."""
    items = sorted(row.items())
    (l1, u1), (l2, u2) = items
    if u1 == 1 and u2 == 1:
        return l1, l2, "top"
    if u1 == -1 and u2 == -1:
        return l1 - 2, l2 - 2, "bottom"
    pos = l1 if u1 == 1 else l2
    neg = l1 if u1 == -1 else l2
    a, b = sorted((pos, neg - 2))
    if pos < neg - 2:
        return a, b, "mid-b"      # Y_a present, Y_{b+2}^{-1} present
    if pos > neg - 2:
        return a, b, "mid-a"      # Y_{a+2}^{-1} present, Y_b present
    raise ConstructionError(f"degenerate row {row} cancels")


def _tensor_coeffs(a: int, b: int):
    """Branching coefficients of the four-dimensional tensor block with
    letters (a, b): c_a = (q^{b-1}-q^{a+1})/(q^b-q^a) and
    c_b = (q^{b+1}-q^{a-1})/(q^b-q^a)."""
    den = LaurentPoly({b: 1}) - LaurentPoly({a: 1})
    ca = RationalQ(LaurentPoly({b - 1: 1}) - LaurentPoly({a + 1: 1}), den)
    cb = RationalQ(LaurentPoly({b + 1: 1}) - LaurentPoly({a - 1: 1}), den)
    return ca, cb


def build_doubled(smax: int, window=None) -> LoopModule:
    """The module whose q-character is the union of the crystals of the
    anchors e^{2 varpi_1 + s delta} Y_{1,1} Y_{1,-1-4s} Y_{0,2}^-1 Y_{0,-4s}^-1
    for 0 <= s <= smax (n = 3).

    Directional actions come from local templates matched on the row of
    each node: empty row (zero action), single variable (crystal rule),
    or a two-variable tensor/string block with the branching
    coefficients above.  Any other configuration is a hard error.
    """
    rs = RootSystem(3, parity=0)
    if smax < 0:
        raise ValueError("smax must be >= 0")
    if window is None:
        window = (-4 * (smax + 2), 4 * (smax + 2))
    anchors = [doubled_anchor(rs, s) for s in range(smax + 1)]
    g = generate(rs, anchors, window)
    mod = LoopModule(rs, g, "doubled")
    by_exps = {}
    for idx, m in enumerate(g.nodes):
        if m.exps in by_exps:
            raise AssertionError("exponent collision across components")
        by_exps[m.exps] = idx

    def target(m, i, l, lower):
        exps = exp_mul(m.exp_dict(), a_exponents(rs, i, l),
                       sign=-1 if lower else 1)
        alpha = rs.alpha(i)
        t = Monomial(exp_key(exps), m.weight - alpha if lower else m.weight + alpha)
        return g.index.get(t)

    for i in rs.nodes:
        minus, plus = [], []
        for idx, m in enumerate(g.nodes):
            row = m.row(i)
            ment, pent = [], []
            if not row:
                pass
            elif len(row) == 1:
                ((c, u),) = row.items()
                if u == 1:
                    ment.append((target(m, i, c + 1, True), c + 1, RQ_ONE))
                elif u == -1:
                    pent.append((target(m, i, c - 1, False), c - 1, RQ_ONE))
                else:
                    raise ConstructionError(
                        f"node {m}: row {i} has an exponent beyond +-1")
            elif len(row) == 2 and all(abs(u) == 1 for u in row.values()):
                a, b, pos = _pair_letters(row)
                ca, cb = _tensor_coeffs(a, b)
                if pos == "top":
                    if not ca.is_zero():
                        ment.append((target(m, i, a + 1, True), a + 1, ca))
                    ment.append((target(m, i, b + 1, True), b + 1, cb))
                elif pos == "mid-a":
                    pent.append((target(m, i, a + 1, False), a + 1, RQ_ONE))
                    ment.append((target(m, i, b + 1, True), b + 1, RQ_ONE))
                elif pos == "mid-b":
                    pent.append((target(m, i, b + 1, False), b + 1, RQ_ONE))
                    ment.append((target(m, i, a + 1, True), a + 1, RQ_ONE))
                else:
                    if not ca.is_zero():
                        pent.append((target(m, i, b + 1, False), b + 1, ca))
                    pent.append((target(m, i, a + 1, False), a + 1, cb))
            else:
                raise ConstructionError(
                    f"node {m}: row {i} = {row} matches no action template")
            minus.append(tuple(ment))
            plus.append(tuple(pent))
        mod.minus_edges[i] = minus
        mod.plus_edges[i] = plus
    return mod


# ---------------------------------------------------------------------------
# defining relations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RelationSpec:
    rid: str
    params: tuple

    def as_dict(self):
        return {"relation": self.rid, "params": dict(self.params)}


def _unit(idx):
    return {idx: RQ_ONE}


def _sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        s = -v if s is None else s - v
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def _scale(vec: dict, c: RationalQ) -> dict:
    if c.is_zero():
        return {}
    return {k: v * c for k, v in vec.items()}


def _chain(mod: LoopModule, ops, idx: int) -> dict:
    """Apply x-generators (rightmost first) to a basis vector."""
    vec = _unit(idx)
    for sign, i, r in reversed(ops):
        vec = mod.act_x(sign, i, r, vec)
        if not vec:
            return {}
    return vec


def relation_residual(mod: LoopModule, spec: RelationSpec, idx: int) -> dict:
    """Left side minus right side of one defining relation applied to a
    basis vector; the contract is the empty (zero) vector.  Raises
    WindowError when an intermediate leaves the window."""
    p = dict(spec.params)
    rid = spec.rid
    if rid == "k-conjugation":
        i, j, r, sign = p["i"], p["j"], p["r"], p["sign"]
        hvec = [0] * (mod.rs.n + 1)
        hvec[i] = 1
        lhs = mod.act_k(hvec, mod.act_x(sign, j, r, mod.act_k([-c for c in hvec], _unit(idx))))
        rhs = _scale(mod.act_x(sign, j, r, _unit(idx)),
                     RationalQ.q_power(sign * mod.rs.cartan(i, j)))
        return _sub(lhs, rhs)
    if rid == "h-h":
        i, j, m1, m2 = p["i"], p["j"], p["m1"], p["m2"]
        lhs = mod.act_h(i, m1, mod.act_h(j, m2, _unit(idx)))
        rhs = mod.act_h(j, m2, mod.act_h(i, m1, _unit(idx)))
        return _sub(lhs, rhs)
    if rid == "h-x":
        i, j, m, r, sign = p["i"], p["j"], p["m"], p["r"], p["sign"]
        xv = mod.act_x(sign, j, r, _unit(idx))
        lhs = _sub(mod.act_h(i, m, xv),
                   mod.act_x(sign, j, r, mod.act_h(i, m, _unit(idx))))
        coeff = RationalQ(qint(m * mod.rs.cartan(i, j)),
                          LaurentPoly.from_int(m))
        if sign < 0:
            coeff = -coeff
        rhs = _scale(mod.act_x(sign, j, m + r, _unit(idx)), coeff)
        return _sub(lhs, rhs)
    if rid == "x-plus-minus":
        i, j, r, rp = p["i"], p["j"], p["r"], p["rp"]
        lhs = _sub(_chain(mod, [(1, i, r), (-1, j, rp)], idx),
                   _chain(mod, [(-1, j, rp), (1, i, r)], idx))
        if i != j:
            return lhs
        val = mod.pairing_value(idx, i, r + rp)
        return _sub(lhs, _scale(_unit(idx), val))
    if rid == "x-quadratic":
        i, j, r, rp, sign = p["i"], p["j"], p["r"], p["rp"], p["sign"]
        qc = RationalQ.q_power(sign * mod.rs.cartan(i, j))
        lhs = _sub(_chain(mod, [(sign, i, r + 1), (sign, j, rp)], idx),
                   _scale(_chain(mod, [(sign, j, rp), (sign, i, r + 1)], idx), qc))
        rhs = _sub(_scale(_chain(mod, [(sign, i, r), (sign, j, rp + 1)], idx), qc),
                   _chain(mod, [(sign, j, rp + 1), (sign, i, r)], idx))
        return _sub(lhs, rhs)
    if rid == "serre-cubic":
        i, j, r1, r2, rp, sign = (p["i"], p["j"], p["r1"], p["r2"], p["rp"],
                                  p["sign"])
        if not mod.rs.adjacent(i, j):
            raise ValueError("serre-cubic needs adjacent nodes")
        two = RationalQ(LaurentPoly({1: 1, -1: 1}))
        acc = {}
        for a, b in ((r1, r2), (r2, r1)):
            acc = _sub(acc, _scale(_chain(mod, [(sign, i, a), (sign, i, b), (sign, j, rp)], idx), -RQ_ONE))
            acc = _sub(acc, _scale(_chain(mod, [(sign, i, a), (sign, j, rp), (sign, i, b)], idx), two))
            acc = _sub(acc, _scale(_chain(mod, [(sign, j, rp), (sign, i, a), (sign, i, b)], idx), -RQ_ONE))
        return acc
    if rid == "x-commute-distant":
        i, j, r1, r2, sign = p["i"], p["j"], p["r1"], p["r2"], p["sign"]
        if mod.rs.cartan(i, j) != 0:
            raise ValueError("x-commute-distant needs distant nodes")
        return _sub(_chain(mod, [(sign, i, r1), (sign, j, r2)], idx),
                    _chain(mod, [(sign, j, r2), (sign, i, r1)], idx))
    raise ValueError(f"unknown relation id {rid}")


RELATION_IDS = ("k-conjugation", "h-h", "h-x", "x-plus-minus", "x-quadratic",
                "serre-cubic", "x-commute-distant")


def relation_instances(rs: RootSystem, rmax: int = 3, hmax: int = 2,
                       include=None):
    """All relation instances in the declared parameter ranges."""
    ids = RELATION_IDS if include is None else tuple(include)
    rr = range(-rmax, rmax + 1)
    mm = [m for m in range(-hmax, hmax + 1) if m]
    I = rs.nodes
    if "k-conjugation" in ids:
        for i in I:
            for j in I:
                for sign in (1, -1):
                    for r in (-1, 0, 1):
                        yield RelationSpec("k-conjugation",
                                           (("i", i), ("j", j), ("r", r), ("sign", sign)))
    if "h-h" in ids:
        for i in I:
            for j in I:
                if j < i:
                    continue
                yield RelationSpec("h-h", (("i", i), ("j", j), ("m1", 1), ("m2", -1)))
    if "h-x" in ids:
        for i in I:
            for j in I:
                for m in mm:
                    for sign in (1, -1):
                        for r in rr:
                            yield RelationSpec(
                                "h-x", (("i", i), ("j", j), ("m", m), ("r", r),
                                        ("sign", sign)))
    if "x-plus-minus" in ids:
        for i in I:
            for j in I:
                for r in rr:
                    for rp in rr:
                        yield RelationSpec(
                            "x-plus-minus", (("i", i), ("j", j), ("r", r), ("rp", rp)))
    if "x-quadratic" in ids:
        for sign in (1, -1):
            for i in I:
                for j in I:
                    for r in rr:
                        for rp in rr:
                            yield RelationSpec(
                                "x-quadratic",
                                (("i", i), ("j", j), ("r", r), ("rp", rp), ("sign", sign)))
    if "serre-cubic" in ids:
        for sign in (1, -1):
            for i in I:
                for j in (rs.mod(i - 1), rs.mod(i + 1)):
                    for r1 in rr:
                        for r2 in rr:
                            if r2 < r1:
                                continue
                            for rp in rr:
                                yield RelationSpec(
                                    "serre-cubic",
                                    (("i", i), ("j", j), ("r1", r1), ("r2", r2),
                                     ("rp", rp), ("sign", sign)))
    if "x-commute-distant" in ids:
        for sign in (1, -1):
            for i in I:
                for j in I:
                    if j <= i or rs.cartan(i, j) != 0:
                        continue
                    for r1 in rr:
                        for r2 in rr:
                            yield RelationSpec(
                                "x-commute-distant",
                                (("i", i), ("j", j), ("r1", r1), ("r2", r2),
                                 ("sign", sign)))


@dataclass
class SuiteReport:
    checked: int = 0
    inconclusive: int = 0
    failures: list = field(default_factory=list)
    by_relation: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures and self.checked > 0

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "inconclusive": self.inconclusive,
            "by_relation": dict(sorted(self.by_relation.items())),
            "failures": [
                {**spec.as_dict(), "vector": str(node),
                 "residual_is_zero": False}
                for spec, node in self.failures],
            "all_residuals_zero": not self.failures,
        }


def run_relation_suite(mod: LoopModule, rmax: int = 3, hmax: int = 2,
                       nodes=None, include=None) -> SuiteReport:
    """Evaluate every relation instance on every (interior) basis
    vector; any nonzero residual is recorded as a failure, instances
    leaving the window count as inconclusive."""
    report = SuiteReport()
    idxs = list(nodes) if nodes is not None else list(range(len(mod)))
    specs = list(relation_instances(mod.rs, rmax=rmax, hmax=hmax, include=include))
    for spec in specs:
        rid = spec.rid
        for idx in idxs:
            try:
                res = relation_residual(mod, spec, idx)
            except WindowError:
                report.inconclusive += 1
                continue
            report.checked += 1
            report.by_relation[rid] = report.by_relation.get(rid, 0) + 1
            if res:
                report.failures.append((spec, mod.node(idx)))
    return report


# ---------------------------------------------------------------------------
# extremal vectors at the module level
# ---------------------------------------------------------------------------

@dataclass
class ExtremalVectorReport:
    verdict: str
    orbit: list
    failing_direction: int | None = None


def verify_extremal_vector(mod: LoopModule, m: Monomial, depth: int) -> ExtremalVectorReport:
    """Run the reflection strings with divided powers on v_m and check
    the extremal-vector equations along the orbit."""
    idx0 = mod.graph.node_index(m)
    if idx0 is None:
        raise ValueError(f"{m} is not a basis monomial")
    seen = {idx0}
    layer = [idx0]
    orbit = [m]
    try:
        for _ in range(depth):
            nxt = []
            for idx in layer:
                w = mod.node(idx).weight
                for i in mod.rs.nodes:
                    c = w.pair(i)
                    up = mod.act_x(1, i, 0, _unit(idx))
                    dn = mod.act_x(-1, i, 0, _unit(idx))
                    if c >= 0 and up:
                        return ExtremalVectorReport("not-extremal", orbit, i)
                    if c <= 0 and dn:
                        return ExtremalVectorReport("not-extremal", orbit, i)
                    if c == 0:
                        continue
                    vec = mod.divided_power_x(-1 if c > 0 else 1, i, abs(c), _unit(idx))
                    if len(vec) != 1:
                        return ExtremalVectorReport("not-extremal", orbit, i)
                    (tgt, coeff), = vec.items()
                    if not coeff == RQ_ONE:
                        return ExtremalVectorReport("not-extremal", orbit, i)
                    if tgt not in seen:
                        seen.add(tgt)
                        orbit.append(mod.node(tgt))
                        nxt.append(tgt)
            layer = nxt
            if not layer:
                break
    except WindowError:
        return ExtremalVectorReport("inconclusive-window", orbit)
    return ExtremalVectorReport("extremal", orbit)
