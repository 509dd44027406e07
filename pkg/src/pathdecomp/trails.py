"""Typing of 5-edge trails in a {g,r}-graph, and hanging edges.

A trail is typed by searching over all of its writings (every sequence of
vertices traversing its edge set once) for one that fits the pattern of type
A, B, C or D, in that priority.  Type A is the only non-path type: a pendant
edge attached to a triangle ``a2 a3 a4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .cayley import GrGraph
from .graphs import Edge, edge, trail_edges

__all__ = ["TrailClass", "Typer", "writings"]

TAGS = ("A", "B", "C", "D")


@dataclass(frozen=True)
class TrailClass:
    tag: str  # "A", "B", "C", "D", "PathOther" or "Invalid"
    writing: tuple[int, ...] | None = None

    @property
    def is_A(self) -> bool:
        return self.tag == "A"

    # role vertices, defined for type A only
    @property
    def cv1(self) -> int:
        return self.writing[3]

    @property
    def cv2(self) -> int:
        return self.writing[2]

    @property
    def aux(self) -> int:
        return self.writing[1]

    @property
    def tr(self) -> int:
        return self.writing[4]


@lru_cache(maxsize=65536)
def _writings(es: frozenset[Edge], nedges: int) -> tuple[tuple[int, ...], ...]:
    adj: dict[int, list[Edge]] = {}
    for e in es:
        for v in e:
            adj.setdefault(v, []).append(e)
    out = []

    def walk(seq, used):
        if len(used) == nedges:
            out.append(tuple(seq))
            return
        u = seq[-1]
        for e in adj[u]:
            if e not in used:
                w = e[0] if e[1] == u else e[1]
                used.add(e)
                seq.append(w)
                walk(seq, used)
                seq.pop()
                used.discard(e)

    for s in sorted(adj):
        walk([s], set())
    return tuple(sorted(out))


def writings(seq: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """All vertex sequences traversing the same edge set as ``seq`` exactly once."""
    es = trail_edges(seq)
    fs = frozenset(es)
    if len(fs) != len(es):
        return ()
    return _writings(fs, len(es))


class Typer:
    """Pattern matching against the base factorisation of a {g,r}-graph."""

    def __init__(self, gg: GrGraph):
        self.gg = gg
        self.pg = gg.cayley.plus_g
        self.pr = gg.cayley.plus_r
        self.mate = gg.mate
        self._cache: dict[tuple[int, ...], TrailClass] = {}

    # edge predicates on ordered pairs
    def green(self, u: int, v: int) -> bool:
        return self.pg[u] == v

    def red(self, u: int, v: int) -> bool:
        return self.pr[u] == v

    def in_m(self, u: int, v: int) -> bool:
        return self.mate[u] == v

    def out_or_m(self, u: int, v: int) -> bool:
        """``uv`` is an out edge of ``u`` or a matching edge."""
        return self.pg[u] == v or self.pr[u] == v or self.mate[u] == v

    def fits(self, tag: str, x: Sequence[int]) -> bool:
        if len(x) != 6 or len(set(x[:5])) != 5:
            return False
        if tag == "A":
            return (
                x[5] == x[2]
                and self.in_m(x[2], x[3])
                and self.green(x[2], x[1])
                and self.green(x[3], x[4])
                and self.red(x[4], x[2])
                and self.out_or_m(x[1], x[0])
            )
        if x[5] in x[:5]:
            return False
        if tag == "B":
            return (
                self.in_m(x[2], x[3])
                and self.green(x[2], x[1])
                and self.green(x[3], x[4])
                and self.out_or_m(x[1], x[0])
                and self.out_or_m(x[4], x[5])
            )
        if tag == "C":
            return (
                self.green(x[2], x[1])
                and self.green(x[4], x[3])
                and self.red(x[3], x[2])
                and self.red(x[4], x[5])
                and self.out_or_m(x[1], x[0])
                and self.in_m(x[2], x[4])
            )
        if tag == "D":
            return (
                self.red(x[1], x[0])
                and self.red(x[4], x[5])
                and self.in_m(x[1], x[2])
                and self.in_m(x[3], x[4])
                and self.green(x[3], x[2])
            )
        raise ValueError(tag)

    def classify(self, seq: Sequence[int]) -> TrailClass:
        key = tuple(seq)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        ws = writings(key)
        cls = None
        if ws:
            for tag in TAGS:
                for w in ws:
                    if self.fits(tag, w):
                        cls = TrailClass(tag, w)
                        break
                if cls:
                    break
            if cls is None:
                cls = TrailClass("PathOther", key) if len(set(key)) == len(key) else TrailClass("Invalid", key)
        else:
            cls = TrailClass("Invalid", key)
        self._cache[key] = cls
        return cls

    def writing_as(self, seq: Sequence[int], tag: str, **fixed: int) -> tuple[int, ...]:
        """A writing of ``seq`` of the given type with prescribed positions.

        ``fixed`` maps ``"x1"``-style position names to vertices.
        """
        want = {int(k[1:]): v for k, v in fixed.items()}
        for w in writings(seq):
            if all(w[i] == v for i, v in want.items()) and self.fits(tag, w):
                return w
        raise LookupError(f"{tuple(seq)} has no type-{tag} writing with {fixed}")

    def hanging(self, seq: Sequence[int]) -> set[tuple[int, Edge]]:
        """Pairs ``(u, e)``: end edge ``e`` of some writing, hanging at ``u``."""
        out = set()
        for w in writings(seq):
            if self.out_or_m(w[1], w[0]):
                out.add((w[1], edge(w[0], w[1])))
            if self.out_or_m(w[-2], w[-1]):
                out.add((w[-2], edge(w[-2], w[-1])))
        return out


@dataclass
class ChainStructure:
    """Linkage among type-A elements of a decomposition.

    ``succ[i] = (j, k)`` means ``tr(T_j) = cv_k(T_i)``.  ``cycles`` are the
    A-chains, each rotated to start at its smallest id, with ``links[j]`` the
    ``k`` joining element ``j`` to element ``j+1``.  ``open_chains`` are walks
    from a free element ending in a type-C element forming an exceptional pair
    with the last type-A element; ``dangling`` are walks from free elements
    that do not end that way.
    """

    classes: list[TrailClass]
    a_ids: list[int]
    succ: dict[int, list[tuple[int, int]]]
    free: list[int]
    cycles: list[tuple[list[int], list[int]]]
    open_chains: list[tuple[list[int], list[int]]]
    dangling: list[list[int]]
    problems: list[str]


def edge_owner(trails: Sequence[Sequence[int]]) -> dict[Edge, int]:
    owner = {}
    for i, t in enumerate(trails):
        for e in trail_edges(t):
            owner[e] = i
    return owner


def exceptional_partner(typer: Typer, trails, owner, classes, i: int) -> int | None:
    """Id of the type-C element pairing exceptionally with type-A element ``i``."""
    x = classes[i].cv2
    p = owner.get(edge(x, typer.pr[x]))
    if p is None or p == i:
        return None
    c = classes[p]
    if c.tag == "C" and c.writing[3] == x and typer.green(c.writing[4], x):
        return p
    return None


def chain_structure(typer: Typer, trails: Sequence[Sequence[int]], classes=None, owner=None) -> ChainStructure:
    if classes is None:
        classes = [typer.classify(t) for t in trails]
    if owner is None:
        owner = edge_owner(trails)
    a_ids = [i for i, c in enumerate(classes) if c.is_A]
    problems = []
    cv: dict[int, tuple[int, int]] = {}
    trmap: dict[int, int] = {}
    for i in a_ids:
        c = classes[i]
        for k, v in ((1, c.cv1), (2, c.cv2)):
            if v in cv:
                problems.append(f"vertex {v} is a connection vertex of elements {cv[v][0]} and {i}")
            cv[v] = (i, k)
        if c.tr in trmap:
            problems.append(f"vertex {c.tr} is the tricky vertex of elements {trmap[c.tr]} and {i}")
        trmap[c.tr] = i
    succ: dict[int, list[tuple[int, int]]] = {i: [] for i in a_ids}
    has_pred = set()
    for i in a_ids:
        c = classes[i]
        for k, v in ((1, c.cv1), (2, c.cv2)):
            if v in trmap:
                succ[i].append((trmap[v], k))
                has_pred.add(trmap[v])
        if len(succ[i]) > 1:
            problems.append(f"element {i} has two successors {succ[i]}")
    free = [i for i in a_ids if i not in has_pred]

    placed: set[int] = set()
    open_chains, dangling = [], []
    for f in free:
        seq, links = [f], []
        cur = f
        placed.add(f)
        while succ[cur]:
            j, k = succ[cur][0]
            if j in placed:
                problems.append(f"walk from free element {f} revisits {j}")
                break
            seq.append(j)
            links.append(k)
            placed.add(j)
            cur = j
        p = exceptional_partner(typer, trails, owner, classes, cur)
        if p is not None:
            open_chains.append((seq + [p], links + [2]))
        else:
            dangling.append(seq)
    cycles = []
    for s in a_ids:
        if s in placed:
            continue
        seq, links = [s], []
        placed.add(s)
        cur = s
        while True:
            if not succ[cur]:
                problems.append(f"element {cur} has no successor but is not reachable from a free element")
                break
            j, k = succ[cur][0]
            links.append(k)
            if j == s:
                cycles.append((seq, links))
                break
            if j in placed:
                problems.append(f"element {j} has two predecessors")
                break
            seq.append(j)
            placed.add(j)
            cur = j
    return ChainStructure(classes, a_ids, succ, free, cycles, open_chains, dangling, problems)


def hang_counts(typer: Typer, trails: Sequence[Sequence[int]]) -> dict[int, set[Edge]]:
    """``u -> set of edges hanging at u`` over the whole decomposition."""
    out: dict[int, set[Edge]] = {}
    for t in trails:
        for u, e in typer.hanging(t):
            out.setdefault(u, set()).add(e)
    return out
