"""Kashiwara operators on weighted monomials, windowed BFS generation
of connected crystals, subcrystals, extremality certificates, and
twisted-automorphism verification.

Crystals here are infinite; every consumer declares a spectral window
[lmin, lmax] and only *interior* nodes (whose full operator
neighborhood stays inside the window) participate in assertions.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .lattice import RootSystem
from .monomial import Monomial, a_exponents, exp_key, exp_mul, exp_row


class WindowError(ValueError):
    """A required monomial or image falls outside the declared window."""


# ---------------------------------------------------------------------------
# Kashiwara statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KashiwaraStats:
    eps: int
    phi: int
    p: int | None
    qq: int | None


def row_stats(row: dict) -> KashiwaraStats:
    """Statistics of one row of exponents: eps, phi as maxima of the
    suffix/prefix partial sums, p and qq per their max/min rules."""
    if not row:
        return KashiwaraStats(0, 0, None, None)
    ls = sorted(row)
    prefix = {}
    acc = 0
    for l in ls:
        acc += row[l]
        prefix[l] = acc
    total = acc
    suffix = {}
    acc = 0
    for l in reversed(ls):
        acc += row[l]
        suffix[l] = acc
    phi = max(0, max(prefix.values()))
    eps = max(0, max(-s for s in suffix.values()))
    p = None
    if eps > 0:
        p = max(l for l in ls if -suffix[l] == eps)
    qq = None
    if phi > 0:
        qq = min(l for l in ls if prefix[l] == phi)
    assert phi - eps == total
    return KashiwaraStats(eps, phi, p, qq)


def stats(rs: RootSystem, m: Monomial, i: int) -> KashiwaraStats:
    return row_stats(m.row(i))


# exponent-level operators ---------------------------------------------------

def e_tilde_exp(rs: RootSystem, exps: dict, i: int) -> dict | None:
    st = row_stats(exp_row(exps, i))
    if st.eps == 0:
        return None
    return exp_mul(exps, a_exponents(rs, i, st.p - 1))


def f_tilde_exp(rs: RootSystem, exps: dict, i: int) -> dict | None:
    st = row_stats(exp_row(exps, i))
    if st.phi == 0:
        return None
    return exp_mul(exps, a_exponents(rs, i, st.qq + 1), sign=-1)


# weighted operators ----------------------------------------------------------

def e_tilde(rs: RootSystem, m: Monomial, i: int) -> Monomial | None:
    out = e_tilde_exp(rs, m.exp_dict(), i)
    if out is None:
        return None
    return Monomial(exp_key(out), m.weight + rs.alpha(i))


def f_tilde(rs: RootSystem, m: Monomial, i: int) -> Monomial | None:
    out = f_tilde_exp(rs, m.exp_dict(), i)
    if out is None:
        return None
    return Monomial(exp_key(out), m.weight - rs.alpha(i))


# ---------------------------------------------------------------------------
# windowed crystal graphs
# ---------------------------------------------------------------------------

@dataclass
class CrystalGraph:
    rs: RootSystem
    window: tuple
    nodes: list
    index: dict
    f_edges: dict          # (src_idx, i) -> dst_idx
    e_edges: dict          # (src_idx, i) -> dst_idx
    interior: list
    anchors: list = field(default_factory=list)

    def __len__(self):
        return len(self.nodes)

    def node_index(self, m: Monomial):
        return self.index.get(m)

    def __contains__(self, m: Monomial):
        return m in self.index

    def f_image(self, idx: int, i: int):
        return self.f_edges.get((idx, i))

    def e_image(self, idx: int, i: int):
        return self.e_edges.get((idx, i))

    def edges(self):
        """Sorted list of (src, label, dst) for the lowering operators."""
        return sorted((s, i, d) for (s, i), d in self.f_edges.items())

    def interior_indices(self):
        return [k for k, flag in enumerate(self.interior) if flag]

    # -- exports --------------------------------------------------------------

    def to_json(self) -> dict:
        from .monomial import monomial_to_json
        return {
            "window": list(self.window),
            "nodes": [monomial_to_json(m) for m in self.nodes],
            "edges": [[s, i, d] for (s, i, d) in self.edges()],
            "interior": list(self.interior),
        }

    def to_dot(self) -> str:
        lines = ["digraph crystal {"]
        for k, m in enumerate(self.nodes):
            lines.append(f'  n{k} [label="{m}"];')
        for s, i, d in self.edges():
            lines.append(f'  n{s} -> n{d} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines)


def _in_window(m: Monomial, window) -> bool:
    lmin, lmax = window
    return all(lmin <= l <= lmax for l in m.support_levels())


def generate(rs: RootSystem, anchors, window) -> CrystalGraph:
    """BFS closure of the anchors under the Kashiwara operators,
    restricted to the spectral window.  Anchors carry full weights;
    weights of discovered nodes are propagated along edges and checked
    for consistency on rediscovery."""
    lmin, lmax = window
    if lmin > lmax:
        raise WindowError("empty window")
    anchors = sorted(anchors, key=Monomial.sort_key)
    if not anchors:
        raise ValueError("at least one anchor is required")
    for a in anchors:
        if not _in_window(a, window):
            raise WindowError(f"anchor {a} does not fit in window {window}")
    seen = {}
    frontier = deque()
    for a in anchors:
        if a not in seen:
            seen[a] = True
            frontier.append(a)
    f_raw, e_raw = {}, {}
    clipped = set()
    while frontier:
        m = frontier.popleft()
        for i in rs.nodes:
            fm = f_tilde(rs, m, i)
            if fm is not None:
                if _in_window(fm, window):
                    f_raw[(m, i)] = fm
                    if fm not in seen:
                        seen[fm] = True
                        frontier.append(fm)
                else:
                    clipped.add(m)
            em = e_tilde(rs, m, i)
            if em is not None:
                if _in_window(em, window):
                    e_raw[(m, i)] = em
                    if em not in seen:
                        seen[em] = True
                        frontier.append(em)
                else:
                    clipped.add(m)
    nodes = sorted(seen, key=Monomial.sort_key)
    index = {m: k for k, m in enumerate(nodes)}
    # weight consistency: column sums must match the propagated h-part
    for m in nodes:
        sums = [0] * (rs.n + 1)
        for (i, _), u in m.exps:
            sums[i] += u
        if tuple(sums) != m.weight.h:
            raise ValidationErrorForGraph(m)
    f_edges = {(index[m], i): index[t] for (m, i), t in f_raw.items()}
    e_edges = {(index[m], i): index[t] for (m, i), t in e_raw.items()}
    interior = [m not in clipped for m in nodes]
    return CrystalGraph(rs, (lmin, lmax), nodes, index, f_edges, e_edges,
                        interior, anchors=list(anchors))


class ValidationErrorForGraph(ValueError):
    def __init__(self, m):
        super().__init__(f"weight/column-sum mismatch at node {m}")


def sub_crystal(g: CrystalGraph, m: Monomial, J) -> CrystalGraph:
    """Connected closure of m under operators with labels in J only,
    within the same window."""
    if m not in g:
        raise ValueError(f"{m} is not a node of the graph")
    rs = g.rs
    J = sorted(set(rs.mod(j) for j in J))
    seen = {m: True}
    frontier = deque([m])
    f_raw, e_raw = {}, {}
    clipped = set()
    while frontier:
        x = frontier.popleft()
        for i in J:
            fx = f_tilde(rs, x, i)
            if fx is not None:
                if _in_window(fx, g.window):
                    f_raw[(x, i)] = fx
                    if fx not in seen:
                        seen[fx] = True
                        frontier.append(fx)
                else:
                    clipped.add(x)
            ex = e_tilde(rs, x, i)
            if ex is not None:
                if _in_window(ex, g.window):
                    e_raw[(x, i)] = ex
                    if ex not in seen:
                        seen[ex] = True
                        frontier.append(ex)
                else:
                    clipped.add(x)
    nodes = sorted(seen, key=Monomial.sort_key)
    index = {x: k for k, x in enumerate(nodes)}
    return CrystalGraph(g.rs, g.window, nodes, index,
                        {(index[a], i): index[b] for (a, i), b in f_raw.items()},
                        {(index[a], i): index[b] for (a, i), b in e_raw.items()},
                        [x not in clipped for x in nodes], anchors=[m])


# ---------------------------------------------------------------------------
# extremality
# ---------------------------------------------------------------------------

@dataclass
class ExtremalityReport:
    verdict: str              # "extremal" | "not-extremal" | "inconclusive-window"
    depth: int
    orbit: list
    witness: Monomial | None = None
    witness_direction: int | None = None


def is_extremal(rs: RootSystem, m: Monomial, depth: int, window) -> ExtremalityReport:
    """Bounded extremality certificate: explore all S_i-strings of
    length <= depth and check i-extremality of every element reached.

    The Weyl group is infinite, so the verdict is a certificate up to
    the given depth, never the full quantified statement.
    """
    seen = {m}
    layer = [m]
    orbit = [m]
    for _ in range(depth):
        nxt = []
        for x in layer:
            for i in rs.nodes:
                st = stats(rs, x, i)
                if st.eps > 0 and st.phi > 0:
                    return ExtremalityReport("not-extremal", depth, orbit,
                                             witness=x, witness_direction=i)
                c = x.weight.pair(i)
                y = x
                if c > 0:
                    for _ in range(c):
                        y = f_tilde(rs, y, i)
                        if y is None:
                            raise AssertionError("string shorter than weight pairing")
                elif c < 0:
                    for _ in range(-c):
                        y = e_tilde(rs, y, i)
                        if y is None:
                            raise AssertionError("string shorter than weight pairing")
                else:
                    continue
                if not _in_window(y, window):
                    return ExtremalityReport("inconclusive-window", depth, orbit)
                if y not in seen:
                    seen.add(y)
                    orbit.append(y)
                    nxt.append(y)
        layer = nxt
        if not layer:
            break
    return ExtremalityReport("extremal", depth, orbit)


# ---------------------------------------------------------------------------
# twisted automorphisms
# ---------------------------------------------------------------------------

def check_twist(g: CrystalGraph, exp_map, label_map) -> list:
    """Verify f~_{label_map(i)}(map(m)) = map(f~_i(m)) and the raising
    analogue on every interior node, at the exponent level.

    exp_map: dict -> dict on exponent tables; label_map: node -> node.
    Returns the list of violations (empty when the map is a twisted
    morphism on the window interior).
    """
    rs = g.rs
    bad = []
    for idx in g.interior_indices():
        m = g.nodes[idx]
        exps = m.exp_dict()
        image = exp_map(exps)
        for i in rs.nodes:
            j = rs.mod(label_map(i))
            lhs = f_tilde_exp(rs, image, j)
            rhs = f_tilde_exp(rs, exps, i)
            rhs = exp_map(rhs) if rhs is not None else None
            if (lhs is None) != (rhs is None) or (lhs is not None and exp_key(lhs) != exp_key(rhs)):
                bad.append(("f", m, i))
            lhs = e_tilde_exp(rs, image, j)
            rhs = e_tilde_exp(rs, exps, i)
            rhs = exp_map(rhs) if rhs is not None else None
            if (lhs is None) != (rhs is None) or (lhs is not None and exp_key(lhs) != exp_key(rhs)):
                bad.append(("e", m, i))
    return bad


def check_shift_automorphism(g: CrystalGraph, twop: int) -> list:
    """Check that the spectral shift by 2p maps edges to equally
    labeled edges wherever both endpoints stay in the window."""
    rs = g.rs
    bad = []
    shift = {}
    for k, m in enumerate(g.nodes):
        exps = {(i, l + twop): u for (i, l), u in m.exps}
        shift[k] = exp_key(exps)
    by_exps = {m.exps: k for k, m in enumerate(g.nodes)}
    for (s, i), d in g.f_edges.items():
        ss, dd = shift[s], shift[d]
        if ss in by_exps and dd in by_exps:
            if g.f_edges.get((by_exps[ss], i)) != by_exps[dd]:
                bad.append((g.nodes[s], i, g.nodes[d]))
    return bad
