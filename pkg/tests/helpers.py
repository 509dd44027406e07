from pathdecomp import Matching, assemble_gr_graph, make_cyclic, make_product, validate_scg


def gr(moduli, g, r, pairs):
    """A {g,r}-graph from plain coordinates; tuples for product groups."""
    G = make_cyclic(moduli) if isinstance(moduli, int) else make_product(moduli)
    enc = G.encode
    p = validate_scg(G, enc(g), enc(r))
    return assemble_gr_graph(G, p, Matching((enc(a), enc(b)) for a, b in pairs))
