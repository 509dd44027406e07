"""Decompose a {g,r}-graph over Z_n and show the rewrites the engine applies.

Run: python3 demos/engine_trace.py [n] [g] [r] [seed]
"""

import sys

from pathdecomp import assemble_gr_graph, decompose, initial_decomposition, make_cyclic, random_matching, validate_scg

args = [24, 1, 3, 5]
for i, a in enumerate(sys.argv[1:5]):
    args[i] = int(a)
n, g, r, seed = args
G = make_cyclic(n)
p = validate_scg(G, g, r)
gg = assemble_gr_graph(G, p, random_matching(G, p, seed))
print(f"Z_{n}, g={g}, r={r}, matching:", " ".join(f"{u}-{v}" for u, v in gg.matching))

if not p.sum_zero:
    st = initial_decomposition(gg)
    print(f"\ninitial trails (tau = {st.tau}):")
    for t, c in zip(st.trails, st.classes):
        print(f"  {' '.join(map(str, t)):<24} type {c.tag}")

res = decompose(gg, check=True)
print(f"\nroute: {res.route}, rewrites: {res.rewrites}")
for s in res.trace:
    print(f"  step {s.step}: {s.rule:<14} tau {s.tau_before} -> {s.tau_after}  trails {list(s.touched)}")
print("\nfinal paths:")
for t in res.decomposition:
    print("  ", " ".join(map(str, t)))
