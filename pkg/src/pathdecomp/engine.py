"""P_5-decompositions of {g,r}-graphs by guarded local rewriting.

The engine starts from one trail per matching edge and repeatedly replaces a
few trails by new ones covering the same edges, lowering the number ``tau``
of non-path trails until it reaches zero.  Phase 1 removes type-A elements
whose tricky vertex is not a connection vertex of another type-A element;
phase 2 then breaks up the cyclic chains of type-A elements.  Every rewrite
checks its own postconditions instead of trusting the case analysis.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .cayley import GrGraph
from .collage import decompose_degenerate
from .graphs import Decomposition, Edge, edge, trail_edges
from .trails import ChainStructure, TrailClass, Typer, chain_structure, edge_owner, hang_counts
from .verify import check_admissible, check_complete, odd_vertices, verify_decomposition

__all__ = [
    "EngineError",
    "InputCorruption",
    "TraceStep",
    "EngineState",
    "EngineResult",
    "initial_decomposition",
    "eliminate_free_A",
    "extract_chains",
    "reduce_admissible",
    "decompose",
    "run_engine",
    "format_trace",
]


class EngineError(RuntimeError):
    """A rewrite postcondition or engine invariant failed."""


class InputCorruption(ValueError):
    pass


@dataclass(frozen=True)
class TraceStep:
    step: int
    rule: str
    tau_before: int
    tau_after: int
    touched: tuple[int, ...]

    def line(self) -> str:
        return f"{self.step}\t{self.rule}\t{self.tau_before}\t{self.tau_after}\t{','.join(map(str, self.touched))}"


def format_trace(steps: Sequence[TraceStep]) -> str:
    return "".join(s.line() + "\n" for s in steps)


class EngineState:
    """Trails of a decomposition in progress plus lookup tables.

    Trail ids are stable: a rewrite overwrites the trails it replaces in place.
    With ``check=True`` the phase invariant and the structural properties are
    re-checked after every rewrite.
    """

    def __init__(self, gg: GrGraph, trails: Sequence[Sequence[int]], check: bool = False):
        self.gg = gg
        self.typer = Typer(gg)
        self.trails: list[tuple[int, ...]] = [tuple(t) for t in trails]
        self.classes: list[TrailClass] = [self.typer.classify(t) for t in self.trails]
        self.owner: dict[Edge, int] = edge_owner(self.trails)
        self.phase = "complete"
        self.trace: list[TraceStep] = []
        self.check = check

    @property
    def tau(self) -> int:
        return sum(c.is_A for c in self.classes)

    def decomposition(self) -> Decomposition:
        return Decomposition(list(self.trails), 5)

    def chains(self) -> ChainStructure:
        return chain_structure(self.typer, self.trails, self.classes, self.owner)

    def hanging_edges(self, u: int) -> set[Edge]:
        return hang_counts(self.typer, self.trails).get(u, set())

    def holder(self, u: int, v: int) -> int:
        return self.owner[edge(u, v)]

    def dump(self) -> str:
        rows = [f"phase={self.phase} tau={self.tau}"]
        for i, (t, c) in enumerate(zip(self.trails, self.classes)):
            rows.append(f"  T{i} {' '.join(map(str, t))} [{c.tag} {c.writing}]")
        return "\n".join(rows)

    def fail(self, msg: str) -> EngineError:
        return EngineError(f"{msg}\n{self.dump()}")

    # -- the one place trails change ---------------------------------------

    def apply(self, rule: str, ids: Sequence[int], new: Sequence[Sequence[int]], expect: Sequence[str]) -> None:
        """Replace trails ``ids`` by ``new`` after checking the rewrite.

        ``expect`` gives the required tag of each new trail, or ``"path"``.
        """
        ids = list(ids)
        new = [tuple(t) for t in new]
        if len(set(ids)) != len(ids) or len(ids) != len(new):
            raise self.fail(f"{rule}: malformed rewrite of {ids}")
        old_es = Counter(e for i in ids for e in trail_edges(self.trails[i]))
        new_es = Counter(e for t in new for e in trail_edges(t))
        if old_es != new_es:
            raise self.fail(
                f"{rule}: edges changed on {ids}: lost {sorted(old_es - new_es)}, gained {sorted(new_es - old_es)}"
            )
        for t in new:
            if len(t) != 6 or len(set(trail_edges(t))) != 5:
                raise self.fail(f"{rule}: {t} is not a 5-edge trail")
        classes = [self.typer.classify(t) for t in new]
        for t, c, want in zip(new, classes, expect):
            ok = len(set(t)) == 6 if want == "path" else c.tag == want
            if not ok:
                raise self.fail(f"{rule}: new trail {t} is {c.tag}, expected {want}")
        before = self.tau
        for i, t, c in zip(ids, new, classes):
            self.trails[i] = t
            self.classes[i] = c
            for e in trail_edges(t):
                self.owner[e] = i
        after = self.tau
        if after >= before:
            raise self.fail(f"{rule}: tau did not decrease ({before} -> {after})")
        self.trace.append(TraceStep(len(self.trace) + 1, rule, before, after, tuple(ids)))
        if self.check:
            self.assert_invariants(rule)

    def assert_invariants(self, where: str = "") -> None:
        rep = check_complete(self) if self.phase == "complete" else check_admissible(self)
        if not rep.ok:
            raise self.fail(f"{where}: {self.phase} invariant broken: {rep.failures()}")
        problems = structural_problems(self)
        if problems:
            raise self.fail(f"{where}: {problems[0]}")


def structural_problems(state: EngineState) -> list[str]:
    """Properties that must hold in every intermediate state.

    Each vertex has odd degree in exactly one element; no vertex is a
    connection vertex of two type-A elements; when ``tr(T2) = cv1(T1)`` then
    ``aux(T2) = cv2(T1)``.
    """
    out = []
    ends = Counter(v for t in state.trails for v in odd_vertices(t))
    bad = [v for v in range(state.gg.n) if ends.get(v, 0) != 1]
    if bad:
        out.append(f"vertex {bad[0]} ends {ends.get(bad[0], 0)} elements")
    cls = state.classes
    cvs = Counter(v for c in cls if c.is_A for v in (c.cv1, c.cv2))
    shared = sorted(v for v, k in cvs.items() if k > 1)
    if shared:
        out.append(f"vertex {shared[0]} is a connection vertex of two type-A elements")
    by_cv1 = {c.cv1: c for c in cls if c.is_A}
    for c in cls:
        if c.is_A and c.tr in by_cv1 and c.aux != by_cv1[c.tr].cv2:
            out.append(f"type-12 property fails at tr={c.tr}")
            break
    return out


# -- phase 0 ------------------------------------------------------------------


def initial_decomposition(gg: GrGraph, check: bool = False) -> EngineState:
    """One trail ``a0..a5`` per matching edge ``a2a3`` with ``a2 < a3``."""
    if gg.pair.sum_zero:
        raise ValueError("initial decomposition needs 2g+2r != 0")
    pg, pr = gg.cayley.plus_g, gg.cayley.plus_r
    trails = []
    for x, y in gg.matching:
        a1, a4 = pg[x], pg[y]
        trails.append((pr[a1], a1, x, y, a4, pr[a4]))
    st = EngineState(gg, trails, check=check)
    bad = [t for t, c in zip(st.trails, st.classes) if c.tag not in ("A", "B")]
    if bad:
        raise st.fail(f"initial trail {bad[0]} is neither type A nor B")
    if check:
        st.assert_invariants("initial")
    return st


# -- phase 1 ------------------------------------------------------------------


def _writing(st: EngineState, tid: int, tag: str, **fixed: int) -> tuple[int, ...]:
    try:
        return st.typer.writing_as(st.trails[tid], tag, **fixed)
    except LookupError as exc:
        raise st.fail(f"T{tid}: {exc}") from None


def _free_ids(st: EngineState) -> list[int]:
    cvs = {v for c in st.classes if c.is_A for v in (c.cv1, c.cv2)}
    return [i for i, c in enumerate(st.classes) if c.is_A and c.tr not in cvs]


def _red_holder(st: EngineState, x: int, exclude: Sequence[int]) -> tuple[int, int]:
    """``(holder id, x + r)`` for the red out edge of ``x``, which must hang there."""
    u = st.typer.pr[x]
    h = st.holder(x, u)
    if h in exclude:
        raise st.fail(f"red out edge {x}-{u} lies in element {h}, expected outside {list(exclude)}")
    if (x, edge(x, u)) not in st.typer.hanging(st.trails[h]):
        raise st.fail(f"red out edge {x}-{u} does not hang at {x} in T{h}")
    return h, u


def _exchange_free(st: EngineState, t1: int) -> None:
    a0, a1, a2, a3, a4, _ = st.classes[t1].writing
    t2, u = _red_holder(st, a3, [t1])
    c2 = st.classes[t2]
    if c2.tag == "B":
        b = _writing(st, t2, "B", x4=a3, x5=u)
        st.apply("L.AB", [t1, t2], [(a0, a1, a2, a4, a3, u), (*b[:5], a2)], ["C", "B"])
        return
    if c2.tag == "C":
        b = _writing(st, t2, "C", x1=a3, x0=u)
        st.apply("L.AC", [t1, t2], [(a0, a1, a2, a4, a3, u), (a2, *b[1:])], ["C", "C"])
        return
    if not c2.is_A:
        raise st.fail(f"red out edge of cv1={a3} of free T{t1} is held by T{t2} of type {c2.tag}")
    b = c2.writing
    if b[1] == a3 and b[0] == u:
        st.apply("L.AA", [t1, t2], [(a0, a1, a2, a4, a3, u), (a2, b[1], b[2], b[3], b[4], b[2])], ["C", "A"])
        return
    if b[4] != a3 or b[5] != u:
        raise st.fail(f"T{t2} holds the red out edge of {a3} in no recognised position")
    if b[1] != a2:
        raise st.fail(f"type-12 property fails: aux(T{t2}) != cv2(T{t1})")
    t3, w = _red_holder(st, b[2], [t1, t2])
    c3 = st.classes[t3]
    if c3.is_A:
        c = c3.writing
        if c[4] == b[2]:
            st.apply(
                "L.AAA.tr",
                [t1, t2, t3],
                [(a0, a1, a2, a4, a3, b[5]), (b[0], b[1], b[4], b[3], b[2], c[2]), (b[1], c[4], c[3], c[2], c[1], c[0])],
                ["C", "D", "B"],
            )
            return
        if c[1] == b[2] and c[0] == w:
            st.apply(
                "L.AAA.aux",
                [t1, t2, t3],
                [(a0, a1, a2, a4, a3, b[2]), (b[0], b[1], b[4], b[3], b[2], c[0]), (b[1], c[1], c[2], c[3], c[4], c[2])],
                ["C", "D", "A"],
            )
            return
        raise st.fail(f"T{t3} holds the red out edge of {b[2]} in no recognised position")
    if c3.tag in ("B", "C"):
        c = _writing(st, t3, c3.tag, x1=b[2], x0=w)
        st.apply(
            "L.AAB" if c3.tag == "B" else "L.AAC",
            [t1, t2, t3],
            [(a0, a1, a2, a4, a3, b[2]), (b[0], b[1], b[4], b[3], b[2], c[0]), (b[1], *c[1:])],
            ["C", "D", c3.tag],
        )
        return
    raise st.fail(f"red out edge of cv2={b[2]} of T{t2} is held by T{t3} of type {c3.tag}")


def eliminate_free_A(st: EngineState) -> EngineState:
    """Rewrite until no type-A element is free; the state stays complete."""
    st.phase = "complete"
    while True:
        free = _free_ids(st)
        if not free:
            break
        _exchange_free(st, free[0])
    return st


def extract_chains(st: EngineState) -> ChainStructure:
    cs = st.chains()
    if cs.problems:
        raise st.fail(cs.problems[0])
    return cs


# -- phase 2 ------------------------------------------------------------------


def _rotate(ids: list[int], links: list[int], start: int) -> tuple[list[int], list[int]]:
    return ids[start:] + ids[:start], links[start:] + links[:start]


def _find_pattern(links: list[int]) -> int | None:
    """Smallest ``j`` with ``links[j-1] = 2`` and ``links[j] = 1`` (cyclically)."""
    s = len(links)
    return next((j for j in range(s) if links[j - 1] == 2 and links[j] == 1), None)


def _rewrite_cycle(st: EngineState, ids: list[int], links: list[int], has_open: bool) -> bool:
    s = len(ids)
    W = [st.classes[i].writing for i in ids]
    if s == 2:
        raise InputCorruption(f"A-chain of two elements {ids}; the host graph would need a parallel edge")
    if all(k == 1 for k in links):
        new = [(W[(j + 1) % s][2], W[j][3], W[j][4], W[j][1], W[j][2], W[(j + 1) % s][0]) for j in range(s)]
        st.apply("T.type1", ids, new, ["path"] * s)
        return True
    if all(k == 2 for k in links):
        new = [(*W[j][:5], W[j - 1][4]) for j in range(s)]
        st.apply("T.type2", ids, new, ["path"] * s)
        return True
    if s == 3:
        # rotate so that the link into the first element is cv2 and the next is cv1
        j = _find_pattern(links)
        ids, links = _rotate(ids, links, j)
        a, b, c = (st.classes[i].writing for i in ids)
        if links[1] == 1:
            new = [(*a[:5], c[1]), (b[0], b[1], b[2], b[4], b[3], c[2]), (c[0], c[1], c[4], c[3], c[2], a[2])]
        else:
            new = [(a[0], a[1], a[2], a[4], a[3], b[5]), (b[0], b[1], b[4], b[3], b[2], c[2]), (*c[:5], b[1])]
        st.apply("T.short", ids, new, ["path"] * 3)
        return True
    if has_open:
        return False
    # rotate so that links[0] = 2 and links[1] = 1
    j = _find_pattern(links) - 1
    ids, links = _rotate(ids, links, j % s)
    _, b, c, d = (st.classes[i].writing for i in ids[:4])
    touched = ids[1:4]
    if links[2] == 1:
        new = [(b[0], b[1], b[2], b[4], b[3], c[2]), (c[0], c[1], c[4], c[3], c[2], d[0]), (c[1], *d[1:5], d[2])]
        st.apply("T.open.create", touched, new, ["C", "path", "A"])
    else:
        new = [(b[0], b[1], b[2], b[4], b[3], c[2]), (c[0], c[1], c[4], c[3], c[2], d[2]), (*d[:5], c[1])]
        st.apply("T.open.create", touched, new, ["C", "path", "path"])
    return True


def _rewrite_open(st: EngineState, ids: list[int], links: list[int]) -> None:
    a = st.classes[ids[0]].writing
    c1 = st.classes[ids[1]]
    if not c1.is_A or links[0] == 2:
        t, u = _red_holder(st, a[3], [ids[0]])
        ct = st.classes[t]
        if ct.is_A:
            w = ct.writing
            if w[1] != a[3] or w[0] != u:
                raise st.fail(f"T{t} holds the red out edge of {a[3]} in no recognised position")
            want = "A"
        else:
            w = next((x for x in (st.trails[t], st.trails[t][::-1]) if x[1] == a[3] and x[0] == u), None)
            if w is None:
                raise st.fail(f"red out edge of {a[3]} is not an end edge of T{t}")
            want = "path"
        st.apply("T.open.head", [ids[0], t], [(a[0], a[1], a[2], a[4], a[3], u), (a[2], *w[1:])], ["path", want])
        return
    b = c1.writing
    c2 = st.classes[ids[2]]
    if c2.tag == "C":
        c = c2.writing
        if c[3] != b[2]:
            raise st.fail(f"T{ids[2]} does not pair exceptionally with T{ids[1]}")
        new = [(a[0], a[1], a[2], a[4], a[3], b[2]), (b[1], b[4], b[3], b[2], c[2], b[0]), (c[0], c[1], b[1], *c[3:])]
        st.apply("T.open.exc", ids[:3], new, ["path"] * 3)
        return
    if not c2.is_A:
        raise st.fail(f"open chain element T{ids[2]} has type {c2.tag}")
    c = c2.writing
    head = (a[0], a[1], a[2], a[4], a[3], b[2])
    if links[1] == 1:
        new = [head, (b[0], b[1], b[4], b[3], b[2], c[0]), (b[1], *c[1:5], c[2])]
        st.apply("T.open.cv1", ids[:3], new, ["path", "path", "A"])
    else:
        new = [head, (b[0], b[1], b[4], b[3], b[2], c[2]), (*c[:5], b[1])]
        st.apply("T.open.cv2", ids[:3], new, ["path"] * 3)


def reduce_admissible(st: EngineState) -> EngineState:
    """Rewrite an admissible decomposition down to ``tau = 0``."""
    st.phase = "admissible"
    if st.check:
        st.assert_invariants("phase 2 start")
    while st.tau > 0:
        cs = extract_chains(st)
        if cs.dangling or len(cs.open_chains) > 1:
            raise st.fail("chain structure is not admissible")
        cycles = sorted(cs.cycles, key=lambda c: min(c[0]))
        has_open = bool(cs.open_chains)
        done = False
        for pick in (
            lambda L: all(k == 1 for k in L),
            lambda L: all(k == 2 for k in L),
            lambda L: len(L) <= 3,
            lambda L: True,
        ):
            cyc = next((c for c in cycles if pick(c[1])), None)
            if cyc is not None and _rewrite_cycle(st, *cyc, has_open):
                done = True
                break
        if done:
            continue
        if has_open:
            _rewrite_open(st, *cs.open_chains[0])
            continue
        raise st.fail("no rewrite applies while tau > 0")
    return st


# -- driver -------------------------------------------------------------------


@dataclass
class EngineResult:
    decomposition: Decomposition
    route: str
    trace: list[TraceStep] = field(default_factory=list)
    initial_tau: int = 0
    seconds: float = 0.0

    @property
    def rewrites(self) -> int:
        return len(self.trace)


def run_engine(gg: GrGraph, check: bool = False) -> EngineState:
    st = initial_decomposition(gg, check=check)
    eliminate_free_A(st)
    reduce_admissible(st)
    return st


def decompose(gg: GrGraph, check: bool = False) -> EngineResult:
    """A verified ``P_5``-decomposition of the {g,r}-graph ``gg``."""
    t0 = time.perf_counter()
    p = gg.pair
    trace: list[TraceStep] = []
    tau0 = 0
    if p.sum_zero and p.diff_zero:
        route = "k44"
        D = decompose_degenerate(gg)
    else:
        route = "engine"
        work = gg
        if p.sum_zero:
            route = "sign-flip engine"
            work = gg.flipped()
        st = initial_decomposition(work, check=check)
        tau0 = st.tau
        eliminate_free_A(st)
        reduce_admissible(st)
        D, trace = st.decomposition(), st.trace
    rep = verify_decomposition(gg.graph, D, 5, gg.matching if route == "k44" else None)
    if not rep.ok:
        raise EngineError(f"{route} route produced an invalid decomposition: {rep.failures()}")
    return EngineResult(D, route, trace, tau0, time.perf_counter() - t0)
