"""Finite groups with dense element indexing, and generator-pair validation.

Every element of a group of order ``n`` is an integer index in ``0..n-1`` with
the identity at index 0.  Graph vertices downstream reuse these indices, so the
group arithmetic is stored as an ``n x n`` addition table.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from operator import mul

import numpy as np

__all__ = [
    "Group",
    "GroupAxiomError",
    "SCGPair",
    "SCGError",
    "make_cyclic",
    "make_product",
    "make_table",
    "validate_scg",
]


class GroupAxiomError(ValueError):
    """Raised when an explicit table does not define a group."""

    def __init__(self, axiom: str, witness: tuple[int, ...], detail: str = ""):
        self.axiom = axiom
        self.witness = witness
        msg = f"{axiom} axiom violated at {witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class Group:
    """A finite group given by its addition table.

    ``kind`` is one of ``"cyclic"``, ``"product"`` or ``"table"``; ``moduli``
    holds the factor orders for cyclic and product groups (mixed-radix
    encoding, most significant coordinate first).
    """

    def __init__(self, table: np.ndarray, kind: str, moduli: tuple[int, ...] = ()):
        self.table = np.asarray(table, dtype=np.int64)
        self.table.setflags(write=False)
        self.n = int(self.table.shape[0])
        self.kind = kind
        self.moduli = tuple(moduli)
        # row x of the table holds x + y; the inverse of x is where that row hits 0
        self.inverse = np.argmin(self.table, axis=1).astype(np.int64)
        self.inverse.setflags(write=False)

    def __repr__(self) -> str:
        if self.kind == "cyclic":
            return f"Group(Z_{self.n})"
        if self.kind == "product":
            return "Group(" + " x ".join(f"Z_{m}" for m in self.moduli) + ")"
        return f"Group(table, n={self.n})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Group):
            return NotImplemented
        return (self.kind, self.moduli) == (other.kind, other.moduli) and np.array_equal(
            self.table, other.table
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.moduli, self.n))

    identity = 0

    def add(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def neg(self, x: int) -> int:
        return int(self.inverse[x])

    def sub(self, x: int, y: int) -> int:
        """``x + (-y)``."""
        return int(self.table[x, self.inverse[y]])

    def times(self, k: int, x: int) -> int:
        """``x + x + ... + x`` (k copies); negative k uses the inverse."""
        if k < 0:
            k, x = -k, self.neg(x)
        acc = 0
        for _ in range(k):
            acc = int(self.table[acc, x])
        return acc

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def elements(self) -> range:
        return range(self.n)

    # element <-> coordinates

    def encode(self, coords: int | tuple[int, ...]) -> int:
        if self.kind == "product":
            if isinstance(coords, int):
                raise ValueError(f"product element needs {len(self.moduli)} coordinates")
            if len(coords) != len(self.moduli):
                raise ValueError(f"expected {len(self.moduli)} coordinates, got {coords}")
            idx = 0
            for c, m in zip(coords, self.moduli):
                idx = idx * m + (c % m)
            return idx
        if not isinstance(coords, int):
            if len(coords) != 1:
                raise ValueError(f"expected a single integer, got {coords}")
            coords = coords[0]
        if self.kind == "cyclic":
            return coords % self.n
        if not 0 <= coords < self.n:
            raise ValueError(f"element {coords} out of range for order {self.n}")
        return coords

    def decode(self, idx: int) -> int | tuple[int, ...]:
        if self.kind != "product":
            return idx
        out = []
        for m in reversed(self.moduli):
            out.append(idx % m)
            idx //= m
        return tuple(reversed(out))

    def parse_element(self, token: str) -> int:
        parts = [int(p) for p in token.split(",")]
        return self.encode(parts[0] if len(parts) == 1 else tuple(parts))

    def format_element(self, idx: int) -> str:
        c = self.decode(idx)
        return ",".join(map(str, c)) if isinstance(c, tuple) else str(c)


def make_cyclic(n: int) -> Group:
    if n < 1:
        raise ValueError("group order must be positive")
    a = np.arange(n)
    return Group((a[:, None] + a[None, :]) % n, "cyclic", (n,))


def make_product(moduli: list[int] | tuple[int, ...]) -> Group:
    moduli = tuple(int(m) for m in moduli)
    if not moduli or any(m < 1 for m in moduli):
        raise ValueError("moduli must be positive")
    n = reduce(mul, moduli, 1)
    # coordinate arrays for every index, then add componentwise and re-encode
    coords = np.array(np.unravel_index(np.arange(n), moduli))  # shape (k, n)
    summed = [(c[:, None] + c[None, :]) % m for c, m in zip(coords, moduli)]
    table = np.ravel_multi_index(summed, moduli)
    return Group(table, "product", moduli)


def make_table(n: int, table) -> Group:
    """Validate an explicit Cayley table whose identity sits at index 0.

    Raises :class:`GroupAxiomError` naming the violated axiom and a witness.
    The associativity check is cubic in ``n``.
    """
    t = np.asarray(table, dtype=np.int64)
    if t.shape != (n, n):
        raise GroupAxiomError("closure", (), f"table shape {t.shape} is not {(n, n)}")
    bad = np.argwhere((t < 0) | (t >= n))
    if len(bad):
        a, b = map(int, bad[0])
        raise GroupAxiomError("closure", (a, b), f"entry {int(t[a, b])} outside 0..{n - 1}")
    ident = np.arange(n)
    if not np.array_equal(t[0], ident):
        b = int(np.flatnonzero(t[0] != ident)[0])
        raise GroupAxiomError("identity", (0, b), f"0 + {b} = {int(t[0, b])}")
    if not np.array_equal(t[:, 0], ident):
        a = int(np.flatnonzero(t[:, 0] != ident)[0])
        raise GroupAxiomError("identity", (a, 0), f"{a} + 0 = {int(t[a, 0])}")
    for a in range(n):
        right = np.flatnonzero(t[a] == 0)
        if len(right) != 1 or t[right[0], a] != 0:
            raise GroupAxiomError("inverse", (a,), "no unique two-sided inverse")
    for a in range(n):
        lhs = t[t[a]]  # (a+b)+c, indexed [b, c]
        rhs = t[a][t]  # a+(b+c), indexed [b, c]
        diff = np.argwhere(lhs != rhs)
        if len(diff):
            b, c = map(int, diff[0])
            raise GroupAxiomError(
                "associativity", (a, b, c), f"({a}+{b})+{c} != {a}+({b}+{c})"
            )
    return Group(t, "table", ())


class SCGError(ValueError):
    """A generator pair fails one of the simple-commutative conditions."""

    def __init__(self, condition: str, equation: str):
        self.condition = condition
        self.equation = equation
        super().__init__(f"condition ({condition}) violated: {equation}")


@dataclass(frozen=True)
class SCGPair:
    group: Group
    g: int
    r: int
    sum_zero: bool  # 2g + 2r == 0
    diff_zero: bool  # 2g - 2r == 0
    r_is_2g: bool

    @property
    def generators(self) -> tuple[int, int, int, int]:
        G = self.group
        return (self.g, G.neg(self.g), self.r, G.neg(self.r))

    @property
    def degenerate(self) -> bool:
        return self.sum_zero and self.diff_zero

    def flipped(self) -> "SCGPair":
        """The pair ``(g, -r)``, generating the same undirected Cayley graph."""
        return validate_scg(self.group, self.g, self.group.neg(self.r))


def validate_scg(G: Group, g: int, r: int) -> SCGPair:
    """Check conditions (a), (b), (c) for the pair and compute its case flags."""
    for x in (g, r):
        if not 0 <= x < G.n:
            raise ValueError(f"element index {x} out of range for order {G.n}")
    fmt = G.format_element
    g2, r2 = G.add(g, g), G.add(r, r)
    for name, val in (("g", g), ("r", r), ("2g", g2), ("2r", r2)):
        if val == 0:
            raise SCGError("a", f"{name} = 0")
    if g == r:
        raise SCGError("b", f"g = r = {fmt(g)}")
    if g == G.neg(r):
        raise SCGError("b", f"g = -r = {fmt(g)}")
    if G.add(g, r) != G.add(r, g):
        raise SCGError("c", f"g + r = {fmt(G.add(g, r))} != r + g = {fmt(G.add(r, g))}")
    return SCGPair(
        group=G,
        g=g,
        r=r,
        sum_zero=G.add(g2, r2) == 0,
        diff_zero=G.sub(g2, r2) == 0,
        r_is_2g=r == g2,
    )
