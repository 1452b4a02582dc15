"""The module for twice the first level-zero fundamental weight (n=3).

Its crystal is a disjoint union of components indexed by s >= 0, but the
module glues them: lowering out of the component anchors branches with
rational coefficients into two components at once.  Divided square
powers walk the anchor orbit with coefficient exactly one.
"""
from torcrys import build_doubled, run_relation_suite, verify_extremal_vector
from torcrys.torep import doubled_anchor
from torcrys.qcoeff import RQ_ONE, RQ_ZERO

mod = build_doubled(2, (-14, 14))
print(f"doubled-weight module, s <= 2, on {len(mod)} basis vectors")

for s in (0, 1):
    M = doubled_anchor(mod.rs, s)
    idx = mod.graph.node_index(M)
    out = mod.act_x(-1, 1, 0, {idx: RQ_ONE})
    print(f"\nx-_{{1,0}} on the s={s} anchor {M}:")
    for k, c in out.items():
        print("   ->", mod.node(k), " coefficient", c)
    total = RQ_ZERO
    for c in out.values():
        total = total + c
    print("   branch sum:", total)

print("\ndivided squares walk the promotion orbit:")
idx = mod.graph.node_index(doubled_anchor(mod.rs, 0))
v = {idx: RQ_ONE}
for i in (1, 2, 3):
    v = mod.divided_power_x(-1, i, 2, v)
    (k, c), = v.items()
    print(f"  (x-_{i},0)^(2) -> {mod.node(k)}  coefficient {c}")

for s in (0, 1, 2):
    rep = verify_extremal_vector(mod, doubled_anchor(mod.rs, s), 4)
    print(f"anchor s={s} extremal: {rep.verdict}")

rep = run_relation_suite(mod, rmax=1, hmax=1, nodes=mod.graph.interior_indices())
print(f"\nrelation suite: {rep.checked} checked, {len(rep.failures)} failures")
