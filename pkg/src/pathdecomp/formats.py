"""Text formats for instances and decompositions.

Instance files::

    # comment
    group cyclic 12          (or: group product 4 2 / group table N + N rows)
    g 1
    r 3
    matching 0-6 1-7 2-8 3-9 4-10 5-11

or, for a power of a cycle, ``power n k`` followed by a ``matching`` line.
Product elements are written comma-joined, e.g. ``1,0``.

Decomposition files start with ``paths COUNT length L`` and list one element
per line as ``L+1`` space-separated vertices in the same element syntax.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cayley import GrGraph, assemble_gr_graph
from .graphs import Decomposition, Matching
from .groups import Group, make_cyclic, make_product, make_table, validate_scg
from .powers import PowerCycleInstance

__all__ = [
    "FormatError",
    "Instance",
    "parse_group_spec",
    "parse_instance",
    "format_instance",
    "parse_decomposition",
    "format_decomposition",
]


class FormatError(ValueError):
    pass


@dataclass
class Instance:
    """Either a {g,r}-graph (``gg``) or a power-of-cycle instance (``power``)."""

    gg: GrGraph | None = None
    power: PowerCycleInstance | None = None

    @property
    def group(self) -> Group | None:
        return self.gg.group if self.gg is not None else None

    @property
    def graph(self):
        if self.gg is not None:
            return self.gg.graph
        from .powers import power_instance_graph

        return power_instance_graph(self.power)

    @property
    def matching(self) -> Matching:
        return self.gg.matching if self.gg is not None else self.power.matching

    @property
    def n(self) -> int:
        return self.gg.n if self.gg is not None else self.power.n


def parse_group_spec(spec: str) -> Group:
    """``cyclic:12`` or ``product:4,2``."""
    kind, _, arg = spec.partition(":")
    try:
        if kind == "cyclic":
            return make_cyclic(int(arg))
        if kind == "product":
            return make_product([int(x) for x in arg.split(",")])
    except ValueError as exc:
        raise FormatError(f"bad group spec {spec!r}: {exc}") from None
    raise FormatError(f"bad group spec {spec!r}; expected cyclic:N or product:M1,M2,...")


def _tok(G: Group | None, s: str) -> int:
    try:
        return G.parse_element(s) if G is not None else int(s)
    except ValueError as exc:
        raise FormatError(f"bad element {s!r}: {exc}") from None


def _fmt(G: Group | None, v: int) -> str:
    return G.format_element(v) if G is not None else str(v)


def _pairs(G: Group | None, words: list[str]) -> Matching:
    out = []
    for w in words:
        a, sep, b = w.partition("-")
        if not sep:
            raise FormatError(f"matching pair {w!r} is not dash-joined")
        out.append((_tok(G, a), _tok(G, b)))
    try:
        return Matching(out)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def parse_instance(text: str) -> Instance:
    lines = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("empty instance")
    head = lines[0]
    fields: dict[str, list[str]] = {}
    try:
        if head[0] == "power":
            if len(head) != 3:
                raise FormatError("expected 'power n k'")
            n, k = int(head[1]), int(head[2])
            for ln in lines[1:]:
                fields[ln[0]] = ln[1:]
            if "matching" not in fields:
                raise FormatError("missing matching line")
            return Instance(power=PowerCycleInstance(n, k, _pairs(None, fields["matching"])))
        if head[0] != "group" or len(head) < 3:
            raise FormatError("first line must be 'group ...' or 'power n k'")
        rest = lines[1:]
        if head[1] == "cyclic":
            G = make_cyclic(int(head[2]))
        elif head[1] == "product":
            G = make_product([int(x) for x in head[2:]])
        elif head[1] == "table":
            n = int(head[2])
            rows, rest = rest[:n], rest[n:]
            G = make_table(n, np.array([[int(x) for x in row] for row in rows]))
        else:
            raise FormatError(f"unknown group kind {head[1]!r}")
        for ln in rest:
            if ln[0] in fields:
                raise FormatError(f"duplicate {ln[0]!r} line")
            fields[ln[0]] = ln[1:]
        for key in ("g", "r", "matching"):
            if key not in fields:
                raise FormatError(f"missing {key!r} line")
        g, r = _tok(G, fields["g"][0]), _tok(G, fields["r"][0])
        p = validate_scg(G, g, r)
        return Instance(gg=assemble_gr_graph(G, p, _pairs(G, fields["matching"])))
    except FormatError:
        raise
    except (ValueError, IndexError) as exc:
        raise FormatError(f"{type(exc).__name__}: {exc}") from None


def format_instance(inst: Instance) -> str:
    if inst.power is not None:
        p = inst.power
        pairs = " ".join(f"{u}-{v}" for u, v in p.matching)
        return f"power {p.n} {p.k}\nmatching {pairs}\n"
    gg = inst.gg
    G = gg.group
    if G.kind == "cyclic":
        out = [f"group cyclic {G.n}"]
    elif G.kind == "product":
        out = ["group product " + " ".join(map(str, G.moduli))]
    else:
        out = [f"group table {G.n}"] + [" ".join(map(str, row)) for row in G.table.tolist()]
    out.append(f"g {G.format_element(gg.g)}")
    out.append(f"r {G.format_element(gg.r)}")
    out.append("matching " + " ".join(f"{_fmt(G, u)}-{_fmt(G, v)}" for u, v in gg.matching))
    return "\n".join(out) + "\n"


def parse_decomposition(text: str, group: Group | None = None) -> Decomposition:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise FormatError("empty decomposition")
    head = lines[0]
    if len(head) != 4 or head[0] != "paths" or head[2] != "length":
        raise FormatError("header must be 'paths COUNT length L'")
    try:
        count, l = int(head[1]), int(head[3])
    except ValueError:
        raise FormatError("non-integer header fields") from None
    body = lines[1:]
    if len(body) != count:
        raise FormatError(f"header says {count} paths, found {len(body)}")
    trails = []
    for i, ln in enumerate(body, 2):
        if len(ln) != l + 1:
            raise FormatError(f"line {i} has {len(ln)} vertices, expected {l + 1}")
        trails.append(tuple(_tok(group, t) for t in ln))
    return Decomposition(trails, l)


def format_decomposition(D: Decomposition, group: Group | None = None) -> str:
    out = [f"paths {len(D.trails)} length {D.length}"]
    out += [" ".join(_fmt(group, v) for v in t) for t in D.trails]
    return "\n".join(out) + "\n"
