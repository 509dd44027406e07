"""Construction-blind checks of path decompositions, invariant checkers, and a
brute-force oracle for small graphs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .graphs import Decomposition, Edge, Graph, Matching, edge, trail_edges

__all__ = [
    "CheckResult",
    "VerifyReport",
    "OracleResult",
    "verify_decomposition",
    "brute_force_p_l",
    "check_complete",
    "check_admissible",
    "odd_vertices",
]


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    witness: str = ""


@dataclass
class VerifyReport:
    """Outcome of a set of named checks.

    ``stats`` carries per-instance numbers gathered along the way, such as the
    odd-degree vertex count of each element.
    """

    checks: dict[str, CheckResult] = field(default_factory=dict)
    stats: dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def add(self, name: str, failure: str | None) -> None:
        self.checks[name] = CheckResult(failure is None, failure or "")

    def failures(self) -> list[str]:
        return [f"{k}: {c.witness}" for k, c in self.checks.items() if not c.passed]

    def lines(self) -> list[str]:
        out = []
        for name, c in self.checks.items():
            line = f"CHECK {name} {'PASS' if c.passed else 'FAIL'}"
            if c.witness:
                line += f" {c.witness}"
            out.append(line)
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def odd_vertices(seq: Sequence[int]) -> list[int]:
    """Vertices of odd degree in the subgraph traced by ``seq``."""
    deg = Counter()
    for u, v in trail_edges(seq):
        deg[u] += 1
        deg[v] += 1
    return sorted(v for v, d in deg.items() if d % 2)


def verify_decomposition(
    G: Graph,
    D: Decomposition | Sequence[Sequence[int]],
    l: int,
    m_centered_against: Matching | None = None,
) -> VerifyReport:
    trails = [tuple(t) for t in (D.trails if isinstance(D, Decomposition) else D)]
    rep = VerifyReport()

    bad = next((t for t in trails if len(t) != l + 1), None)
    rep.add("lengths", None if bad is None else f"element {' '.join(map(str, bad))} has {len(bad) - 1} edges, want {l}")

    bad = None
    for t in trails:
        for u, v in zip(t, t[1:]):
            if not (0 <= u < G.n and 0 <= v < G.n) or u == v or not G.has_edge(u, v):
                bad = f"step {u}-{v} of element {' '.join(map(str, t))} is not an edge"
                break
        if bad:
            break
    rep.add("edges-exist", bad)

    bad = next((t for t in trails if len(set(t)) != len(t)), None)
    rep.add("paths", None if bad is None else f"element {' '.join(map(str, bad))} repeats a vertex")

    use = Counter(e for t in trails for e in trail_edges(t))
    dup = sorted(e for e, c in use.items() if c > 1)
    rep.add("edge-disjoint", f"edge {dup[0][0]}-{dup[0][1]} used {use[dup[0]]} times" if dup else None)

    missing = sorted(G.edges - set(use))
    extra = sorted(set(use) - G.edges)
    msg = None
    if missing:
        msg = "missing " + ",".join(f"{u}-{v}" for u, v in missing[:8])
        if len(missing) > 8:
            msg += f",... ({len(missing)} total)"
    elif extra:
        msg = "extra " + ",".join(f"{u}-{v}" for u, v in extra[:8])
    rep.add("coverage", msg)

    odd = [odd_vertices(t) for t in trails]
    rep.stats["odd_counts"] = [len(o) for o in odd]
    degs = {len(a) for a in G.adj}
    if degs == {l} and l % 2 == 1:
        ends = Counter(v for o in odd for v in o)
        rep.stats["end_counts"] = [ends.get(v, 0) for v in range(G.n)]
        bad_v = next((v for v in range(G.n) if ends.get(v, 0) != 1), None)
        rep.add(
            "endpoints",
            None if bad_v is None else f"vertex {bad_v} is an end vertex of {ends.get(bad_v, 0)} elements",
        )

    if m_centered_against is not None:
        msg = None
        if l % 2 == 0:
            msg = f"length {l} is even; no middle edge"
        else:
            h = (l - 1) // 2
            mids = [edge(t[h], t[h + 1]) for t in trails if len(t) == l + 1]
            off = next((t for t, m in zip(trails, mids) if m not in m_centered_against.pairs), None)
            if off is not None:
                msg = f"middle edge of {' '.join(map(str, off))} is not in M"
            elif sorted(mids) != sorted(m_centered_against.pairs):
                left = sorted(m_centered_against.pairs - set(mids))
                msg = f"middle edges do not enumerate M (unused {left[:4]})"
        rep.add("m-centered", msg)
    return rep


# -- brute-force oracle -------------------------------------------------------


@dataclass
class OracleResult:
    status: str  # "found", "none" or "budget"
    decomposition: Decomposition | None
    nodes: int


def brute_force_p_l(G: Graph, l: int, budget: int = 1_000_000, endpoint_rule: bool = True) -> OracleResult:
    """Exhaustive search for a ``P_l``-decomposition of ``G``.

    The packing is always extended from the lowest uncovered edge ``uv`` with
    ``u < v``: every path through it is a path from ``u`` backwards (the left
    part) joined to a path from ``v`` forwards (the right part).  When ``G``
    is ``l``-regular with ``l`` odd every vertex ends exactly one path, which
    prunes candidates early.
    """
    m = len(G.edges)
    if l < 1 or m % l:
        raise ValueError(f"|E| = {m} is not divisible by l = {l}")
    order = G.sorted_edges()
    used: set[Edge] = set()
    prune = endpoint_rule and l % 2 == 1 and all(len(a) == l for a in G.adj)
    end_count = [0] * G.n
    chosen: list[tuple[int, ...]] = []
    nodes = 0

    def walks(start: int, steps: int, avoid_v: set[int], local: set[Edge]):
        """Simple walks of exactly ``steps`` edges from ``start`` on unused edges."""
        if steps == 0:
            yield (start,)
            return
        for w in G.adj[start]:
            e = edge(start, w)
            if w in avoid_v or e in used or e in local:
                continue
            avoid_v.add(w)
            local.add(e)
            for rest in walks(w, steps - 1, avoid_v, local):
                yield (start,) + rest
            local.discard(e)
            avoid_v.discard(w)

    def candidates(u: int, v: int):
        e0 = edge(u, v)
        for a in range(l):
            # a edges to the left of u, l-1-a to the right of v
            vis = {u, v}
            local = {e0}
            for left in walks(u, a, vis, local):
                vis2 = vis | set(left)
                loc2 = local | set(trail_edges(left))
                for right in walks(v, l - 1 - a, vis2, loc2):
                    yield tuple(reversed(left)) + right

    def search() -> bool | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            return None
        first = next((e for e in order if e not in used), None)
        if first is None:
            return True
        u, v = first
        for p in candidates(u, v):
            a, b = p[0], p[-1]
            if prune and (end_count[a] or end_count[b]):
                continue
            es = trail_edges(p)
            used.update(es)
            end_count[a] += 1
            end_count[b] += 1
            chosen.append(p)
            res = search()
            if res is not False:
                if res is None:
                    return None
                return True
            chosen.pop()
            end_count[a] -= 1
            end_count[b] -= 1
            used.difference_update(es)
        return False

    res = search()
    if res is None:
        return OracleResult("budget", None, nodes)
    if res:
        return OracleResult("found", Decomposition(list(chosen), l), nodes)
    return OracleResult("none", None, nodes)


# -- invariant checkers over typed decompositions ---------------------------


def _typed(state):
    from .trails import Typer

    typer = getattr(state, "typer", None) or Typer(state.gg)
    return typer, [tuple(t) for t in state.trails]


def _label(i: int, t) -> str:
    return f"T{i}=" + " ".join(map(str, t))


def check_complete(state) -> VerifyReport:
    """Completeness of a typed decomposition ``state`` (needs ``.gg`` and ``.trails``)."""
    from .trails import hang_counts

    typer, trails = _typed(state)
    rep = VerifyReport()
    classes = [typer.classify(t) for t in trails]
    bad = next((i for i, c in enumerate(classes) if c.tag not in ("A", "B", "C", "D")), None)
    rep.add("types", None if bad is None else f"{_label(bad, trails[bad])} is {classes[bad].tag}")
    hang = hang_counts(typer, trails)
    msg1 = msg2 = None
    for i, c in enumerate(classes):
        if not c.is_A:
            continue
        if msg1 is None and len(hang.get(c.cv1, ())) < 2:
            msg1 = f"{_label(i, trails[i])} cv1={c.cv1} hang={len(hang.get(c.cv1, ()))}"
        if msg2 is None and len(hang.get(c.cv2, ())) < 1:
            msg2 = f"{_label(i, trails[i])} cv2={c.cv2} hang=0"
    rep.add("hang-cv1", msg1)
    rep.add("hang-cv2", msg2)
    rep.stats["tau"] = sum(c.is_A for c in classes)
    return rep


def check_admissible(state) -> VerifyReport:
    """Admissibility of a typed decomposition ``state`` (needs ``.gg`` and ``.trails``)."""
    from .trails import chain_structure, hang_counts

    typer, trails = _typed(state)
    rep = VerifyReport()
    cs = chain_structure(typer, trails)
    classes = cs.classes
    bad = next(
        (i for i, c in enumerate(classes) if not (c.is_A or (c.tag != "Invalid" and len(set(trails[i])) == 6))),
        None,
    )
    rep.add("types", None if bad is None else f"{_label(bad, trails[bad])} is neither a path nor type A")
    hang = hang_counts(typer, trails)
    msg1 = None
    zero = []
    for i in cs.a_ids:
        c = classes[i]
        if msg1 is None and len(hang.get(c.cv1, ())) < 2:
            msg1 = f"{_label(i, trails[i])} cv1={c.cv1} hang={len(hang.get(c.cv1, ()))}"
        if not hang.get(c.cv2):
            zero.append(i)
    rep.add("hang-cv1", msg1)
    msg2 = None
    if len(zero) > 1:
        msg2 = f"elements {zero} all have hang(cv2)=0"
    elif zero:
        penult = [oc[0][-2] for oc in cs.open_chains]
        if zero[0] not in penult:
            msg2 = f"{_label(zero[0], trails[zero[0]])} has hang(cv2)=0 but is not second to last in an open chain"
    rep.add("hang-cv2", msg2)
    msg3 = None
    if cs.problems:
        msg3 = cs.problems[0]
    elif cs.dangling:
        msg3 = f"chain from free element {cs.dangling[0][0]} does not end in an exceptional pair"
    elif len(cs.open_chains) > 1:
        msg3 = f"{len(cs.open_chains)} open chains"
    rep.add("chains", msg3)
    rep.stats["tau"] = len(cs.a_ids)
    return rep
