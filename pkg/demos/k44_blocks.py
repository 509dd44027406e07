"""The degenerate case: Z_4 x Z_4 with g=(1,0), r=(1,2).

Here 2g+2r = 0 and 2g-2r = 0, every component of the Cayley graph is K_4,4,
and the matching edges between blocks are spliced through virtual edges.

Run: python3 demos/k44_blocks.py
"""

from pathdecomp import Matching, assemble_gr_graph, components, decompose, make_product, validate_scg, verify_decomposition

G = make_product([4, 4])
e = G.encode
p = validate_scg(G, e((1, 0)), e((1, 2)))
print("2g+2r = 0:", p.sum_zero, "  2g-2r = 0:", p.diff_zero)

M = Matching((e((a, b)), e((a, b + 1))) for a in range(4) for b in (0, 2))
gg = assemble_gr_graph(G, p, M)
blocks = components(gg.cayley.graph)
print("Cayley components:", [[G.format_element(v) for v in c] for c in blocks])

res = decompose(gg)
print("route:", res.route)
for t in res.decomposition:
    print("  ", "  ".join(G.format_element(v) for v in t))
print(verify_decomposition(gg.graph, res.decomposition, 5, gg.matching))
