"""Dynkin diagrams of simple types and subset combinatorics on their nodes.

Nodes are labelled ``1..l`` in Bourbaki numbering:

* ``A_n``: the path 1-2-...-n.
* ``B_n``: the path, with a double edge n-1 => n (alpha_n short).
* ``C_n``: the path, with a double edge n-1 <= n (alpha_n long).
* ``D_n``: the path 1-...-(n-1), with node n attached to n-2.
* ``E_n``: the path 1-3-4-...-n, with node 2 attached to 4.
* ``F_4``: 1-2 => 3-4 (alpha_1, alpha_2 long).
* ``G_2``: 1 <= 2, triple edge (alpha_2 long).

Subsets of nodes are carried as :class:`NodeSet`, a bitmask together with the
ambient rank, so set algebra never leaves ``{1..l}``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import InvalidInputError


class Kind(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"


# (minimum rank, maximum rank or None)
_RANK_RULES = {
    Kind.A: (1, None),
    Kind.B: (2, None),
    Kind.C: (3, None),
    Kind.D: (4, None),
    Kind.E: (6, 8),
    Kind.F: (4, 4),
    Kind.G: (2, 2),
}


def _range_text(kind: Kind) -> str:
    lo, hi = _RANK_RULES[kind]
    if hi is None:
        return f"rank >= {lo}"
    if lo == hi:
        return f"rank == {lo}"
    return f"{lo} <= rank <= {hi}"


def check_kind_rank(kind: Kind | str, rank: int) -> Kind:
    try:
        kind = kind if isinstance(kind, Kind) else Kind(str(kind).upper())
    except ValueError:
        raise InvalidInputError(f"unknown diagram letter {kind!r}; expected one of ABCDEFG") from None
    lo, hi = _RANK_RULES[kind]
    if not isinstance(rank, int) or rank < lo or (hi is not None and rank > hi):
        raise InvalidInputError(f"{kind.value} requires {_range_text(kind)}, got {rank!r}")
    return kind


@dataclass(frozen=True)
class NodeSet:
    """A subset of ``{1..rank}`` stored as a bitmask (bit ``i-1`` <-> node ``i``)."""

    mask: int
    rank: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.rank:
            raise InvalidInputError(f"mask {self.mask:#b} exceeds ambient rank {self.rank}")

    @classmethod
    def of(cls, rank: int, members: Iterable[int] = ()) -> "NodeSet":
        mask = 0
        for i in members:
            if not 1 <= i <= rank:
                raise InvalidInputError(f"node {i} outside 1..{rank}")
            mask |= 1 << (i - 1)
        return cls(mask, rank)

    @classmethod
    def full(cls, rank: int) -> "NodeSet":
        return cls((1 << rank) - 1, rank)

    @classmethod
    def empty(cls, rank: int) -> "NodeSet":
        return cls(0, rank)

    def __iter__(self) -> Iterator[int]:
        m, i = self.mask, 1
        while m:
            if m & 1:
                yield i
            m >>= 1
            i += 1

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, i) -> bool:
        return isinstance(i, int) and 1 <= i <= self.rank and bool(self.mask >> (i - 1) & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def _check(self, other: "NodeSet") -> None:
        if self.rank != other.rank:
            raise InvalidInputError(f"ambient ranks differ: {self.rank} vs {other.rank}")

    def __or__(self, other: "NodeSet") -> "NodeSet":
        self._check(other)
        return NodeSet(self.mask | other.mask, self.rank)

    def __and__(self, other: "NodeSet") -> "NodeSet":
        self._check(other)
        return NodeSet(self.mask & other.mask, self.rank)

    def __sub__(self, other: "NodeSet") -> "NodeSet":
        self._check(other)
        return NodeSet(self.mask & ~other.mask, self.rank)

    def __le__(self, other: "NodeSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __ge__(self, other: "NodeSet") -> bool:
        return other <= self

    def __lt__(self, other: "NodeSet") -> bool:
        return self <= other and self.mask != other.mask

    def __gt__(self, other: "NodeSet") -> bool:
        return other < self

    def complement(self) -> "NodeSet":
        return NodeSet(((1 << self.rank) - 1) & ~self.mask, self.rank)

    def sorted(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


@dataclass(frozen=True)
class Edge:
    i: int
    j: int
    multiplicity: int = 1
    # node carrying the longer root; None for simple edges
    long_node: int | None = None


def _path_edges(nodes: list[int]) -> list[Edge]:
    return [Edge(a, b) for a, b in zip(nodes, nodes[1:])]


def _standard_edges(kind: Kind, n: int) -> list[Edge]:
    if kind is Kind.A:
        return _path_edges(list(range(1, n + 1)))
    if kind is Kind.B:
        return _path_edges(list(range(1, n))) + [Edge(n - 1, n, 2, n - 1)]
    if kind is Kind.C:
        return _path_edges(list(range(1, n))) + [Edge(n - 1, n, 2, n)]
    if kind is Kind.D:
        return _path_edges(list(range(1, n))) + [Edge(n - 2, n)]
    if kind is Kind.E:
        return _path_edges([1] + list(range(3, n + 1))) + [Edge(2, 4)]
    if kind is Kind.F:
        return [Edge(1, 2), Edge(2, 3, 2, 2), Edge(3, 4)]
    if kind is Kind.G:
        return [Edge(1, 2, 3, 2)]
    raise AssertionError(kind)


@dataclass(frozen=True)
class DynkinDiagram:
    kind: Kind
    rank: int
    edges: tuple[Edge, ...] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.kind.value}{self.rank}"

    def __str__(self) -> str:
        return self.name

    @property
    def nodes(self) -> NodeSet:
        return NodeSet.full(self.rank)

    def subset(self, members: Iterable[int] = ()) -> NodeSet:
        return NodeSet.of(self.rank, members)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """``neighbor_masks[i-1]`` is the bitmask of nodes adjacent to node ``i``."""
        nb = [0] * self.rank
        for e in self.edges:
            nb[e.i - 1] |= 1 << (e.j - 1)
            nb[e.j - 1] |= 1 << (e.i - 1)
        return tuple(nb)

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.neighbor_masks[i - 1] >> (j - 1) & 1)

    def degree(self, i: int) -> int:
        return bin(self.neighbor_masks[i - 1]).count("1")

    def edge(self, i: int, j: int) -> Edge | None:
        for e in self.edges:
            if {e.i, e.j} == {i, j}:
                return e
        return None

    @cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Entries ``a[i][j] = <alpha_i^vee, alpha_j>`` (0-based indices)."""
        n = self.rank
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        for e in self.edges:
            i, j = e.i - 1, e.j - 1
            if e.multiplicity == 1:
                a[i][j] = a[j][i] = -1
            else:
                long_, short = (i, j) if e.long_node == e.i else (j, i)
                a[long_][short] = -1
                a[short][long_] = -e.multiplicity
        return tuple(map(tuple, a))


def build_diagram(kind: Kind | str, rank: int) -> DynkinDiagram:
    kind = check_kind_rank(kind, rank)
    return DynkinDiagram(kind, rank, tuple(_standard_edges(kind, rank)))


_SPEC_RE = re.compile(r"^\s*([A-Ga-g])\s*_?\s*(\d+)\s*$")


def parse_diagram(text: str) -> DynkinDiagram:
    """Parse a diagram spec such as ``"A4"`` or ``"f4"``."""
    m = _SPEC_RE.match(text)
    if not m:
        raise InvalidInputError(f"cannot parse diagram spec {text!r}; expected e.g. 'A4'")
    return build_diagram(m.group(1).upper(), int(m.group(2)))


def component_masks(d: DynkinDiagram, mask: int) -> list[int]:
    """Connected components of the induced subgraph on ``mask``, ordered by least node."""
    nb = d.neighbor_masks
    comps = []
    rest = mask
    while rest:
        low = rest & -rest
        comp, frontier = low, low
        while frontier:
            bit = frontier & -frontier
            frontier ^= bit
            new = nb[bit.bit_length() - 1] & mask & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(d: DynkinDiagram, K: NodeSet) -> list[NodeSet]:
    return [NodeSet(c, d.rank) for c in component_masks(d, K.mask)]


def end_nodes(d: DynkinDiagram, K: NodeSet) -> NodeSet:
    """Nodes of ``K`` adjacent to some node outside ``K``."""
    outside = ~K.mask & ((1 << d.rank) - 1)
    mask = 0
    for i in K:
        if d.neighbor_masks[i - 1] & outside:
            mask |= 1 << (i - 1)
    return NodeSet(mask, d.rank)


def leaf_nodes(d: DynkinDiagram) -> NodeSet:
    """Nodes of degree at most one in the whole diagram."""
    return d.subset(i for i in range(1, d.rank + 1) if d.degree(i) <= 1)


def _classify_component(d: DynkinDiagram, comp: int) -> tuple[Kind, int]:
    nodes = [i + 1 for i in range(d.rank) if comp >> i & 1]
    n = len(nodes)
    if n == 1:
        return (Kind.A, 1)
    inner = [e for e in d.edges if comp >> (e.i - 1) & 1 and comp >> (e.j - 1) & 1]
    deg = {v: bin(d.neighbor_masks[v - 1] & comp).count("1") for v in nodes}
    multi = [e for e in inner if e.multiplicity > 1]
    if not multi:
        branch = [v for v in nodes if deg[v] == 3]
        if not branch:
            return (Kind.A, n)
        # arm lengths from the branch node
        b = branch[0]
        arms = []
        for start in (v for v in nodes if d.adjacent(b, v)):
            length, prev, cur = 1, b, start
            while True:
                nxt = [w for w in nodes if d.adjacent(cur, w) and w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[:2] == [1, 1]:
            return (Kind.D, n)
        if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
            return (Kind.E, n)
        raise AssertionError(f"unexpected branched subdiagram {nodes}")
    e = multi[0]
    if e.multiplicity == 3:
        return (Kind.G, 2)
    if n == 2:
        return (Kind.B, 2)
    ends = {v for v in nodes if deg[v] == 1}
    if e.i in ends or e.j in ends:
        leaf = e.i if e.i in ends else e.j
        # leaf of the double edge short -> B, long -> C
        return (Kind.C, n) if e.long_node == leaf else (Kind.B, n)
    return (Kind.F, 4)


def classify_subdiagram(d: DynkinDiagram, K: NodeSet) -> list[tuple[Kind, int]]:
    """Isomorphism type of each connected component of ``K``, in component order."""
    return [_classify_component(d, c) for c in component_masks(d, K.mask)]
