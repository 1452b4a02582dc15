"""Specialize the modules at a primitive root of unity.

Spectral indices fold modulo the root order, the crystal becomes a
finite set of residue monomials, and the action coefficients land in
the cyclotomic field, kept symbolic throughout.  The thin modules give
clean finite-dimensional cyclic modules; the doubled-weight module
specializes with the right dimension and relations, but a branch
coefficient vanishes at the root and cuts the generation graph, so the
cyclic-generation certificate honestly reports False there.
"""
from torcrys import (cyclic_generation_check, relation_check_eps,
                     specialize_doubled, specialize_thin)

for (n, ell, L) in ((3, 1, 1), (3, 1, 2), (3, 2, 2), (5, 3, 2)):
    spec = specialize_thin(n, ell, L)
    rep = relation_check_eps(spec, rmax=2, serre_rmax=1)
    gen = cyclic_generation_check(spec)
    print(f"thin n={n} ell={ell} L={L}: root order {spec.N}, "
          f"dimension {len(spec)}, relations "
          f"{'ok' if rep.ok else 'FAIL'}, cyclic generation {gen}")

for L in (1, 2):
    spec = specialize_doubled(L)
    rep = relation_check_eps(spec, rmax=2, serre_rmax=1)
    gen = cyclic_generation_check(spec)
    print(f"doubled L={L}: root order {spec.N}, dimension {len(spec)}, "
          f"relations {'ok' if rep.ok else 'FAIL'}, cyclic generation {gen}"
          + ("  <- intrinsic: [2]_q = 0 at this root" if not gen else ""))
