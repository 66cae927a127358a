"""
A diagrammatic cross-check
==========================

The Kauffman bracket state sum knows nothing about idempotents, so matching
its extreme coefficients against a tail is an independent check.
"""

# %%
from qtail.bracket import head_tail_match, jones2, kauffman_bracket, parse_pd, pretzel_pd
from qtail.tails import tail_lk_product, tail_phi, tail_torus_odd

# %%
trefoil = parse_pd("X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]")
print("bracket(trefoil) =", kauffman_bracket(trefoil))
print("J(trefoil)       =", jones2(trefoil))

# %%
# Pretzel diagrams are generated directly from their twist regions.
for regions, tail, label in [
    ((1, 1, 1), tail_torus_odd(1, 10), "torus (2,3)"),
    ((3, 2, 3), tail_phi(1, 1, 10), "8_5"),
    ((2, 2, 2), tail_lk_product(2, 10), "L_2"),
]:
    d = pretzel_pd(*regions)
    j = jones2(d, allow_links=True)
    r = head_tail_match(j, tail)
    print(f"P{regions} ({label}, {d.components()} component(s)): J = {j}")
    print(f"    matches the tail at the {r.note} end: {r.agrees} ({r.agreed_terms} terms)")
