"""Walk through the monomial crystal of a level-zero fundamental weight.

Vertices are Laurent monomials in the variables Y(i,l); the lowering
operator in direction i multiplies by an inverse A(i,l) determined by
partial-sum statistics of the exponents.  Everything is windowed: the
crystal is infinite, so we materialize a spectral range and mark the
nodes whose whole neighborhood is inside.
"""
from torcrys import RootSystem, generate, stats, f_tilde
from torcrys.closedness import fundamental_anchor

n, ell = 3, 1
rs = RootSystem.for_fundamental(n, ell)
anchor = fundamental_anchor(rs, ell)
print(f"anchor for n={n}, ell={ell}:", anchor, "of weight", anchor.weight)

g = generate(rs, [anchor], (-8, 12))
print(f"\nwindowed crystal: {len(g)} nodes, {sum(g.interior)} interior")

print("\none shift period (delta-coefficient 0):")
for m in g.nodes:
    if m.weight.delta == 0:
        print("  ", m, m.weight)

print("\nthe chain out of the anchor:")
m = anchor
for i in (1, 2, 3, 0):
    st = stats(rs, m, i)
    nxt = f_tilde(rs, m, i)
    print(f"  f~_{i}: phi={st.phi}, step at {st.qq}+1  ->  {nxt}")
    m = nxt

print("\nDOT export of a small window:")
print(generate(rs, [anchor], (-2, 6)).to_dot())
