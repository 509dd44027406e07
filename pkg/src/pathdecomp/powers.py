"""Matching-centred path decompositions of powers of cycles.

Each vertex ``i`` of ``C_n^k`` gets a zig-zag path ``Q_i`` with ``k`` edges, one
of each circular length ``1..k``.  Joining ``Q_i``, the matching edge ``ij`` and
``Q_j`` gives a path with ``2k+1`` edges whose middle edge is ``ij``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cayley import is_power_of_cycle
from .graphs import Decomposition, Graph, Matching, TrailError, components, validate_trail

__all__ = [
    "PowerCycleInstance",
    "PowerDecompositionError",
    "circular_distance",
    "q_path",
    "decompose_power_cycle",
    "decompose_complete",
    "decompose_cycle_power_factors",
    "power_instance_graph",
]


class PowerDecompositionError(ValueError):
    pass


def circular_distance(a: int, b: int, n: int) -> int:
    d = (a - b) % n
    return min(d, n - d)


@dataclass(frozen=True)
class PowerCycleInstance:
    """``C_n^k`` (on the given cyclic order) plus a perfect matching."""

    n: int
    k: int
    matching: Matching
    order: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.order:
            object.__setattr__(self, "order", tuple(range(self.n)))
        if self.n % 2:
            raise PowerDecompositionError(f"n = {self.n} is odd")
        if not 0 <= self.k < self.n / 2:
            raise PowerDecompositionError(f"need 0 <= k < n/2, got k={self.k}, n={self.n}")
        if sorted(self.order) != list(range(self.n)):
            raise PowerDecompositionError("order is not a permutation of 0..n-1")
        if not self.matching.is_perfect(self.n):
            raise PowerDecompositionError("matching is not perfect")


def q_path(i: int, k: int, n: int) -> tuple[int, ...]:
    """Positions ``v_0..v_k`` of the zig-zag path started at position ``i``."""
    if not 0 <= i < n or not 0 <= k < n / 2:
        raise PowerDecompositionError(f"q_path needs 0 <= i < n and 0 <= k < n/2 (i={i}, k={k}, n={n})")
    seq = [i]
    for j in range(1, k + 1):
        step = j if j % 2 else -j
        seq.append((seq[-1] + step) % n)
    return tuple(seq)


def power_instance_graph(inst: PowerCycleInstance) -> Graph:
    o, n = inst.order, inst.n
    es = [(o[i], o[(i + d) % n]) for i in range(n) for d in range(1, inst.k + 1)]
    return Graph(n, es + list(inst.matching.pairs))


def decompose_power_cycle(inst: PowerCycleInstance) -> Decomposition:
    n, k, o = inst.n, inst.k, inst.order
    pos = {v: i for i, v in enumerate(o)}
    trails = []
    for u, v in inst.matching:
        i, j = pos[u], pos[v]
        if circular_distance(i, j, n) <= k:
            raise PowerDecompositionError(
                f"matching pair {u}-{v} has circular distance {circular_distance(i, j, n)} <= k={k}"
            )
        left = [o[x] for x in reversed(q_path(i, k, n))]
        right = [o[x] for x in q_path(j, k, n)]
        trails.append(tuple(left + right))
    return Decomposition(trails, 2 * k + 1)


def decompose_complete(l: int) -> Decomposition:
    """Hamilton paths of ``K_{l+1}`` for odd ``l``: ``C_{l+1}^{(l-1)/2}`` plus antipodes."""
    if l < 1 or l % 2 == 0:
        raise PowerDecompositionError(f"l must be odd and positive, got {l}")
    n, k = l + 1, (l - 1) // 2
    M = Matching((i, i + n // 2) for i in range(n // 2))
    return decompose_power_cycle(PowerCycleInstance(n, k, M))


def decompose_cycle_power_factors(G: Graph, M: Matching) -> Decomposition:
    """M-centred ``P_l`` decomposition when every component of ``G - M`` is a cycle power.

    ``l`` is read off as the degree of ``G``.  Every joined trail is validated
    as a path before it is returned.
    """
    if not M.is_perfect(G.n):
        raise PowerDecompositionError("matching is not perfect")
    degs = {len(a) for a in G.adj}
    if len(degs) != 1 or (l := degs.pop()) % 2 == 0:
        raise PowerDecompositionError("host graph must be regular of odd degree")
    k = (l - 1) // 2
    if any(not G.has_edge(u, v) for u, v in M.pairs):
        raise PowerDecompositionError("matching uses a non-edge")
    H = G.without(M.pairs)
    halves: dict[int, tuple[int, ...]] = {}
    for comp in components(H):
        if k == 0:
            halves.update({v: (v,) for v in comp})
            continue
        order = is_power_of_cycle(H, k, comp)
        if order is None:
            raise PowerDecompositionError(
                f"component containing {comp[0]} (size {len(comp)}) is not a power of a cycle with k={k}"
            )
        m = len(order)
        for i, v in enumerate(order):
            halves[v] = tuple(order[x] for x in q_path(i, k, m))
    trails = []
    for u, v in M:
        seq = tuple(reversed(halves[u])) + halves[v]
        try:
            t = validate_trail(G, seq)
        except TrailError as exc:
            raise PowerDecompositionError(f"joined trail {seq} invalid: {exc}") from None
        if not t.is_path:
            raise PowerDecompositionError(f"joined trail {seq} is not a path")
        trails.append(seq)
    return Decomposition(trails, l)
