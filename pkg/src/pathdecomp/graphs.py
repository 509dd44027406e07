"""Simple undirected graphs, matchings, trails and decompositions."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "Edge",
    "edge",
    "Graph",
    "Matching",
    "Trail",
    "TrailError",
    "Decomposition",
    "degree",
    "is_regular",
    "components",
    "validate_trail",
    "trail_edges",
]

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def trail_edges(seq: Sequence[int]) -> list[Edge]:
    return [edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1)]


class Graph:
    """Simple graph on vertices ``0..n-1``.

    Edges are kept as a frozenset of sorted pairs for O(1) membership, plus
    sorted neighbour lists for deterministic iteration.
    """

    __slots__ = ("n", "edges", "adj", "_nbrs")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} has a vertex outside 0..{n - 1}")
            es.add(edge(u, v))
        self.n = n
        self.edges: frozenset[Edge] = frozenset(es)
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in es:
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._nbrs = nbrs
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def union(self, other: "Graph | Iterable[tuple[int, int]]") -> "Graph":
        extra = other.edges if isinstance(other, Graph) else other
        return Graph(self.n, list(self.edges) + list(extra))

    def without(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        drop = {edge(u, v) for u, v in removed}
        return Graph(self.n, [e for e in self.edges if e not in drop])

    def subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled to ``0..len(vertices)-1`` in the given order."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        es = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(vs), es)


def degree(G: Graph, v: int) -> int:
    return len(G.adj[v])


def is_regular(G: Graph, k: int) -> bool:
    """True iff every vertex has degree ``k``; vacuously true on zero vertices."""
    return all(len(a) == k for a in G.adj)


def components(G: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * G.n
    out = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


@dataclass(frozen=True)
class Matching:
    pairs: frozenset[Edge]

    def __init__(self, pairs: Iterable[tuple[int, int]]):
        ps = set()
        seen: set[int] = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"matching pair {(u, v)} is a loop")
            if u in seen or v in seen:
                raise ValueError(f"matching pairs overlap at {(u, v)}")
            seen.update((u, v))
            ps.add(edge(u, v))
        object.__setattr__(self, "pairs", frozenset(ps))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __contains__(self, e: object) -> bool:
        if not isinstance(e, tuple) or len(e) != 2:
            return False
        return edge(*e) in self.pairs

    def covered(self) -> set[int]:
        return {v for p in self.pairs for v in p}

    def is_perfect(self, n: int) -> bool:
        return 2 * len(self.pairs) == n and self.covered() == set(range(n))

    def mate_array(self, n: int) -> list[int]:
        mate = [-1] * n
        for u, v in self.pairs:
            mate[u] = v
            mate[v] = u
        return mate


class TrailError(ValueError):
    pass


@dataclass(frozen=True)
class Trail:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...] = field(compare=False)
    is_path: bool = field(compare=False)

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]


def validate_trail(G: Graph, seq: Sequence[int]) -> Trail:
    """Check that ``seq`` walks along edges of ``G`` without reusing an edge."""
    seq = tuple(int(v) for v in seq)
    es = trail_edges(seq)
    seen: set[Edge] = set()
    for i, e in enumerate(es):
        if not G.has_edge(*e):
            raise TrailError(f"step {seq[i]}-{seq[i + 1]} is not an edge")
        if e in seen:
            raise TrailError(f"edge {e[0]}-{e[1]} used twice")
        seen.add(e)
    return Trail(seq, tuple(es), len(set(seq)) == len(seq))


@dataclass
class Decomposition:
    """A list of trails meant to partition the edge set of a host graph.

    ``length`` is the common number of edges per element.  Nothing here checks
    coverage; see :func:`pathdecomp.verify.verify_decomposition`.
    """

    trails: list[tuple[int, ...]]
    length: int

    def __len__(self) -> int:
        return len(self.trails)

    def __iter__(self):
        return iter(self.trails)

    @property
    def tau(self) -> int:
        """Number of elements that are not paths."""
        return sum(len(set(t)) != len(t) for t in self.trails)

    def edge_multiset(self) -> list[Edge]:
        return [e for t in self.trails for e in trail_edges(t)]

    def canonical(self) -> "Decomposition":
        """Same elements, each oriented lexicographically smaller, sorted."""
        ts = [min(tuple(t), tuple(reversed(t))) for t in self.trails]
        return Decomposition(sorted(ts), self.length)
