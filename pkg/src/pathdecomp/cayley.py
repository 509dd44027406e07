"""Cayley graphs of simple commutative generator pairs and {g,r}-graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

from .graphs import Edge, Graph, Matching, components, edge, is_regular
from .groups import Group, SCGPair

__all__ = [
    "ColoredCayley",
    "GrGraph",
    "GrGraphError",
    "MatchingError",
    "build_cayley",
    "assemble_gr_graph",
    "random_matching",
    "random_power_matching",
    "is_power_of_cycle",
    "power_of_cycle",
]

GREEN, RED = "green", "red"


@dataclass(frozen=True)
class ColoredCayley:
    """The Cayley graph generated by ``{g, r}`` with its base 2-factors.

    ``plus_g[u] = u + g`` and ``plus_r[u] = u + r`` give the green and red out
    edges of ``u``.  ``color`` and ``direction`` are keyed by sorted edge.
    """

    group: Group
    pair: SCGPair
    graph: Graph
    plus_g: tuple[int, ...]
    plus_r: tuple[int, ...]
    color: dict[Edge, str]
    direction: dict[Edge, tuple[int, int]]

    def census(self, u: int) -> tuple[int, int, int, int]:
        """(green out, green in, red out, red in) counts at ``u``."""
        counts = {(GREEN, 0): 0, (GREEN, 1): 0, (RED, 0): 0, (RED, 1): 0}
        for w in self.graph.adj[u]:
            e = edge(u, w)
            tail, _ = self.direction[e]
            counts[(self.color[e], 0 if tail == u else 1)] += 1
        return (counts[(GREEN, 0)], counts[(GREEN, 1)], counts[(RED, 0)], counts[(RED, 1)])


def build_cayley(G: Group, p: SCGPair) -> ColoredCayley:
    plus_g = tuple(G.add(v, p.g) for v in G.elements())
    plus_r = tuple(G.add(v, p.r) for v in G.elements())
    color: dict[Edge, str] = {}
    direction: dict[Edge, tuple[int, int]] = {}
    for name, plus in ((GREEN, plus_g), (RED, plus_r)):
        for v in G.elements():
            e = edge(v, plus[v])
            # |S| = 4 keeps green and red apart; checked anyway for table groups
            if e in color:
                raise AssertionError(f"edge {e} generated twice ({color[e]} and {name})")
            color[e] = name
            direction[e] = (v, plus[v])
    graph = Graph(G.n, color)
    if not is_regular(graph, 4):
        raise AssertionError("Cayley graph of an SCG pair is not 4-regular")
    return ColoredCayley(G, p, graph, plus_g, plus_r, color, direction)


class GrGraphError(ValueError):
    pass


@dataclass(frozen=True)
class GrGraph:
    """A 5-regular graph: Cayley graph ``X`` plus a perfect matching ``M``."""

    group: Group
    pair: SCGPair
    cayley: ColoredCayley
    matching: Matching
    graph: Graph
    mate: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.group.n

    @property
    def g(self) -> int:
        return self.pair.g

    @property
    def r(self) -> int:
        return self.pair.r

    def flipped(self) -> "GrGraph":
        """Same graph and matching, with red edges re-oriented (pair ``(g, -r)``)."""
        return assemble_gr_graph(self.group, self.pair.flipped(), self.matching)


def assemble_gr_graph(G: Group, p: SCGPair, M: Matching) -> GrGraph:
    if G.n % 2:
        raise GrGraphError(f"group order {G.n} is odd; no perfect matching exists")
    if not M.is_perfect(G.n):
        raise GrGraphError("matching is not perfect")
    X = build_cayley(G, p)
    shared = sorted(M.pairs & X.graph.edges)
    if shared:
        u, v = shared[0]
        raise GrGraphError(f"matching pair {u}-{v} is already a Cayley edge")
    host = X.graph.union(M.pairs)
    if not is_regular(host, 5):
        raise AssertionError("assembled {g,r}-graph is not 5-regular")
    return GrGraph(G, p, X, M, host, tuple(M.mate_array(G.n)))


class MatchingError(ValueError):
    pass


def _perfect_matching(n: int, allowed, rng: random.Random) -> list[Edge]:
    """Perfect matching in the graph ``allowed`` (adjacency sets) on ``0..n-1``.

    Randomised greedy, then simple augmenting-path repair; falls back to an
    exact blossom matching when repair stalls.
    """
    order = list(range(n))
    rng.shuffle(order)
    mate = [-1] * n
    for u in order:
        if mate[u] != -1:
            continue
        free = [w for w in allowed[u] if mate[w] == -1 and w != u]
        if free:
            w = rng.choice(sorted(free))
            mate[u], mate[w] = w, u

    def augment(root: int) -> bool:
        # alternating BFS without blossom shrinking; may miss some paths
        parent = {root: None}
        queue = [root]
        for u in queue:
            for w in sorted(allowed[u]):
                if w in parent or w == root:
                    continue
                if mate[w] == -1:
                    path = [w, u]
                    x = u
                    while parent[x] is not None:
                        x = parent[x]
                        path.append(x)
                    # path alternates: w-u (new), u-mate(u) (old) ...
                    for i in range(0, len(path) - 1, 2):
                        a, b = path[i], path[i + 1]
                        mate[a], mate[b] = b, a
                    return True
                m = mate[w]
                if m in parent:
                    continue
                parent[w] = u
                parent[m] = w
                queue.append(m)
        return False

    for u in range(n):
        if mate[u] == -1 and not augment(u):
            break
    if all(m != -1 for m in mate):
        return sorted({edge(u, mate[u]) for u in range(n)})

    import networkx as nx

    H = nx.Graph()
    H.add_nodes_from(range(n))
    H.add_edges_from((u, w) for u in range(n) for w in allowed[u] if u < w)
    exact = nx.max_weight_matching(H, maxcardinality=True)
    if 2 * len(exact) != n:
        raise MatchingError("the complement graph has no perfect matching")
    return sorted(edge(u, w) for u, w in exact)


def random_matching(G: Group, p: SCGPair, seed: int) -> Matching:
    """A perfect matching of ``G`` avoiding every Cayley edge; deterministic per seed."""
    if G.n % 2:
        raise MatchingError(f"group order {G.n} is odd")
    S = set(p.generators)
    if G.is_abelian():
        # fast path: forbidden pairs are exactly differences in S
        allowed = [
            {G.add(u, d) for d in range(1, G.n) if d not in S} for u in G.elements()
        ]
    else:
        X = build_cayley(G, p)
        allowed = [
            {w for w in G.elements() if w != u and not X.graph.has_edge(u, w)}
            for u in G.elements()
        ]
    return Matching(_perfect_matching(G.n, allowed, random.Random(seed)))


def random_power_matching(n: int, k: int, seed: int) -> Matching:
    """A perfect matching of ``0..n-1`` whose pairs are at circular distance > k."""
    if n % 2:
        raise MatchingError(f"n = {n} is odd")
    # partners of u sit at offsets k+1 .. n-k-1 around the cycle
    allowed = [{(u + d) % n for d in range(k + 1, n - k)} for u in range(n)]
    return Matching(_perfect_matching(n, allowed, random.Random(seed)))


def power_of_cycle(n: int, k: int) -> Graph:
    return Graph(n, {edge(i, (i + d) % n) for i in range(n) for d in range(1, k + 1)})


def is_power_of_cycle(H: Graph, k: int, vertices=None) -> list[int] | None:
    """Cyclic order ``v_0..v_{m-1}`` realising ``H[vertices]`` as ``C_m^k``, or None.

    The search fixes the smallest vertex first and extends the order one vertex
    at a time, requiring adjacency to every placed vertex to agree exactly with
    circular distance <= k.  Small components are also tried exhaustively.
    """
    vs = sorted(range(H.n) if vertices is None else vertices)
    m = len(vs)
    if k < 1 or m == 0:
        return None
    vset = set(vs)
    local_deg = {v: sum(1 for w in H.adj[v] if w in vset) for v in vs}
    if m <= 2 * k + 1:
        # C_m^k with m <= 2k+1 is complete; only m = 2k+1 gives degree 2k
        ok = m == 2 * k + 1 and all(d == m - 1 for d in local_deg.values())
        return vs if ok else None
    if any(d != 2 * k for d in local_deg.values()):
        return None

    def close(a: int, b: int) -> bool:
        d = (b - a) % m
        return min(d, m - d) <= k

    order = [vs[0]]
    placed = {vs[0]}

    def extend() -> bool:
        t = len(order)
        if t == m:
            return True
        prev = order[-1]
        for w in H.adj[prev]:
            if w not in vset or w in placed:
                continue
            if all(H.has_edge(order[a], w) == close(a, t) for a in range(t)):
                order.append(w)
                placed.add(w)
                if extend():
                    return True
                order.pop()
                placed.discard(w)
        return False

    import sys

    limit = sys.getrecursionlimit()
    if m + 100 > limit:
        sys.setrecursionlimit(m + 100)
    try:
        found = extend()
    finally:
        sys.setrecursionlimit(limit)
    if found:
        return order
    if m <= 12:
        first = vs[0]
        for rest in permutations(vs[1:]):
            cand = [first, *rest]
            if all(
                H.has_edge(cand[a], cand[b]) == close(a, b)
                for a in range(m)
                for b in range(a + 1, m)
            ):
                return cand
    return None


def cayley_components(X: ColoredCayley) -> list[list[int]]:
    return components(X.graph)
