"""K_{4,4} blocks, the collage splice, and the K_{4,4}-factor route.

A 5-regular graph whose non-matching edges form disjoint copies of K_{4,4} is
handled block by block: matching edges leaving a block are replaced by
"virtual" within-side edges, each block is decomposed on its own, and the
virtual middle edges are then spliced back into the real crossing edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .cayley import GrGraph
from .graphs import Decomposition, Edge, Graph, Matching, components, edge, is_regular, trail_edges

__all__ = [
    "K44Block",
    "CollagePlan",
    "CollageError",
    "ComponentShapeError",
    "K44_CANONICAL",
    "decompose_k44",
    "collage_merge",
    "decompose_k44_factor",
    "decompose_degenerate",
    "k44_sides",
]


class CollageError(ValueError):
    pass


class ComponentShapeError(ValueError):
    pass


# vertices r1..r4 -> 0..3, l1..l4 -> 4..7; matching {r1r2, r3r4, l1l2, l3l4}
_R1, _R2, _R3, _R4, _L1, _L2, _L3, _L4 = range(8)
K44_CANONICAL: tuple[tuple[int, ...], ...] = (
    (_L1, _R1, _L3, _L4, _R2, _L2),
    (_L3, _R3, _L1, _L2, _R4, _L4),
    (_R1, _L2, _R3, _R4, _L1, _R2),
    (_R3, _L4, _R1, _R2, _L3, _R4),
)


@dataclass(frozen=True)
class K44Block:
    """Eight vertices split into sides ``right`` and ``left`` plus a local matching.

    Local matching pairs must lie within one side; some of them may be virtual
    stand-ins for matching edges that leave the block.
    """

    right: tuple[int, int, int, int]
    left: tuple[int, int, int, int]
    matching: tuple[Edge, ...]

    def graph_edges(self) -> list[Edge]:
        return [edge(a, b) for a in self.right for b in self.left]


def _side_pairs(side, pairs) -> list[Edge]:
    s = set(side)
    return sorted(p for p in pairs if p[0] in s and p[1] in s)


def decompose_k44(block: K44Block) -> Decomposition:
    """Four M-centred paths of length 5 covering ``K_{4,4}`` plus its local matching."""
    pairs = [edge(*p) for p in block.matching]
    R, L = set(block.right), set(block.left)
    for u, v in pairs:
        if not ((u in R and v in R) or (u in L and v in L)):
            raise CollageError(f"local matching pair {u}-{v} crosses the bipartition")
    rp, lp = _side_pairs(R, pairs), _side_pairs(L, pairs)
    if len(rp) != 2 or len(lp) != 2:
        raise CollageError("local matching must pair up each side of the block")
    label = [rp[0][0], rp[0][1], rp[1][0], rp[1][1], lp[0][0], lp[0][1], lp[1][0], lp[1][1]]
    return Decomposition([tuple(label[x] for x in t) for t in K44_CANONICAL], 5)


@dataclass
class CollagePlan:
    """Pieces to glue together.

    ``pieces`` are M-centred decompositions of disjoint graphs.  ``virtual``
    lists matching edges of the pieces to delete; ``crossing`` lists the new
    matching edges replacing them.  Every endpoint of a virtual edge must be the
    endpoint of exactly one crossing edge, so virtual and crossing edges
    alternate around cycles.
    """

    pieces: list[Decomposition]
    virtual: list[Edge] = field(default_factory=list)
    crossing: list[Edge] = field(default_factory=list)

    def alternating_cycles(self) -> list[list[int]]:
        """Vertex cycles ``a0 b0 a1 b1 ...`` with ``a_i b_i`` virtual, ``b_i a_{i+1}`` crossing."""
        vmate = {}
        for u, v in self.virtual:
            vmate[u], vmate[v] = v, u
        cmate = {}
        for u, v in self.crossing:
            cmate[u], cmate[v] = v, u
        seen: set[int] = set()
        cycles = []
        for start in sorted(vmate):
            if start in seen:
                continue
            cyc = []
            x = start
            while x not in seen:
                y = vmate[x]
                seen.update((x, y))
                cyc += [x, y]
                x = cmate[y]
            cycles.append(cyc)
        return cycles


def collage_merge(plan: CollagePlan) -> Decomposition:
    """Splice pieces along virtual edges; the result is centred on the merged matching."""
    if not plan.pieces:
        return Decomposition([], 0)
    l = plan.pieces[0].length
    if any(p.length != l for p in plan.pieces) or l % 2 == 0:
        raise CollageError("pieces must share one odd path length")
    half = (l - 1) // 2
    trails = [t for p in plan.pieces for t in p.trails]
    virtual = {edge(*e) for e in plan.virtual}
    crossing = [edge(*e) for e in plan.crossing]
    vends = {v for e in virtual for v in e}
    cends = [v for e in crossing for v in e]
    if sorted(cends) != sorted(vends) or len(set(cends)) != len(cends):
        raise CollageError("crossing edges must pair up the virtual endpoints exactly")

    # half path hanging off each virtual endpoint, oriented to end at that endpoint
    hang: dict[int, tuple[int, ...]] = {}
    kept = []
    for t in trails:
        es = trail_edges(t)
        hit = [i for i, e in enumerate(es) if e in virtual]
        if not hit:
            kept.append(t)
            continue
        if hit != [half]:
            raise CollageError(f"virtual edge {es[hit[0]]} is not the middle edge of {t}")
        a, b = t[half], t[half + 1]
        hang[a] = t[: half + 1]
        hang[b] = tuple(reversed(t[half + 1 :]))
    missing = vends - set(hang)
    if missing:
        raise CollageError(f"virtual edges at {sorted(missing)} are not covered by any path")

    cycles = {v: c for c in plan.alternating_cycles() for v in c}
    out = list(kept)
    for u, v in crossing:
        seq = hang[u] + tuple(reversed(hang[v]))
        if len(set(seq)) != len(seq):
            raise CollageError(
                f"recombined trail {seq} is not a path (alternating cycle {cycles.get(u)})"
            )
        out.append(seq)
    return Decomposition(out, l)


def k44_sides(H: Graph, comp: list[int]) -> tuple[list[int], list[int]]:
    """Bipartition of a component of ``H`` after checking it is ``K_{4,4}``."""
    if len(comp) != 8:
        raise ComponentShapeError(f"component containing {comp[0]} has {len(comp)} vertices, not 8")
    cs = set(comp)
    for v in comp:
        if sum(1 for w in H.adj[v] if w in cs) != 4:
            raise ComponentShapeError(f"vertex {v} does not have degree 4 in its component")
    side = {comp[0]: 0}
    stack = [comp[0]]
    while stack:
        u = stack.pop()
        for w in H.adj[u]:
            if w not in side:
                side[w] = 1 - side[u]
                stack.append(w)
            elif side[w] == side[u]:
                raise ComponentShapeError(f"component containing {comp[0]} is not bipartite")
    R = sorted(v for v in comp if side[v] == 0)
    L = sorted(v for v in comp if side[v] == 1)
    if len(R) != 4 or not all(H.has_edge(a, b) for a in R for b in L):
        raise ComponentShapeError(f"component containing {comp[0]} is not complete bipartite K_4,4")
    return R, L


def _pairings(vs: list[int]) -> list[list[Edge]]:
    if not vs:
        return [[]]
    first, rest = vs[0], vs[1:]
    out = []
    for i, w in enumerate(rest):
        for tail in _pairings(rest[:i] + rest[i + 1 :]):
            out.append([edge(first, w), *tail])
    return out


def decompose_k44_factor(G: Graph, M: Matching) -> Decomposition:
    """M-centred ``P_5`` decomposition when ``G - M`` is a ``K_{4,4}``-factor.

    Crossing endpoints on each side are paired into virtual edges in label
    order; further pairings are tried only if a splice fails validation.
    """
    if not is_regular(G, 5):
        raise ComponentShapeError("host graph is not 5-regular")
    if not M.is_perfect(G.n) or not all(G.has_edge(*e) for e in M.pairs):
        raise ComponentShapeError("M is not a perfect matching of G")
    H = G.without(M.pairs)
    comps = components(H)
    block_of = {}
    sides = []
    for bi, comp in enumerate(comps):
        R, L = k44_sides(H, comp)
        sides.append((R, L))
        for v in comp:
            block_of[v] = bi
    mate = M.mate_array(G.n)
    internal = [[] for _ in comps]
    crossing = []
    for u, v in M:
        if block_of[u] == block_of[v]:
            internal[block_of[u]].append((u, v))
        else:
            crossing.append((u, v))
    # per side: vertices whose partner is in another block, paired in every possible way
    side_choices = []
    for bi, (R, L) in enumerate(sides):
        for side in (R, L):
            ends = [v for v in side if block_of[mate[v]] != bi]
            if len(ends) % 2:
                raise ComponentShapeError(f"odd number of crossing endpoints on a side of block {bi}")
            side_choices.append(_pairings(ends))
    last_err = None
    for choice in product(*side_choices):
        virtual = [e for pairs in choice for e in pairs]
        pieces = []
        for bi, (R, L) in enumerate(sides):
            vis = [e for e in virtual if block_of[e[0]] == bi]
            block = K44Block(tuple(R), tuple(L), tuple(internal[bi]) + tuple(vis))
            pieces.append(decompose_k44(block))
        try:
            return collage_merge(CollagePlan(pieces, virtual, crossing))
        except CollageError as exc:
            last_err = exc
    raise CollageError(f"every virtual pairing failed; last error: {last_err}")


def decompose_degenerate(gg: GrGraph) -> Decomposition:
    """The case ``2g+2r = 0`` and ``2g-2r = 0``: every block of ``G - M`` is ``K_{4,4}``."""
    p = gg.pair
    if not (p.sum_zero and p.diff_zero):
        raise CollageError("degenerate route needs 2g+2r = 0 and 2g-2r = 0")
    X = gg.cayley.graph
    for comp in components(X):
        try:
            k44_sides(X, comp)
        except ComponentShapeError as exc:
            raise AssertionError(
                f"Cayley component {comp} of a degenerate pair is not K_4,4: {exc}"
            ) from None
    return decompose_k44_factor(gg.graph, gg.matching)
