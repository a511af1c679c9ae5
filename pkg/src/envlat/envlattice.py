"""The cross-section lattice of an enveloping monoid as essential pairs.

An element ``e_{I,J}`` is stored in lattice coordinates: ``I, J`` are node
subsets and the pair is essential when every connected component of ``J``
meets ``I``.  The order is reverse inclusion in both coordinates, so the bottom
is ``e_{S,S}`` and the top ``e_{{},{}}``.  Face coordinates ``F_{A,B}`` are the
complements ``A = S - I``, ``B = S - J``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterator

import numpy as np

from .dynkin import DynkinDiagram, NodeSet, component_masks
from .errors import EmptyDecompositionError, InvalidInputError, ResourceLimitError

DEFAULT_RANK_CAP = 12


def rank_cap() -> int:
    raw = os.environ.get("ENVLAT_CAP_RANK")
    return int(raw) if raw else DEFAULT_RANK_CAP


@dataclass(frozen=True)
class Idempotent:
    I: NodeSet
    J: NodeSet

    @classmethod
    def of(cls, d: DynkinDiagram, I=(), J=()) -> "Idempotent":
        return cls(d.subset(I), d.subset(J))

    @property
    def size(self) -> int:
        return len(self.I) + len(self.J)

    def label(self) -> str:
        return "e{%s|%s}" % (",".join(map(str, self.I)), ",".join(map(str, self.J)))

    def __repr__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class Face:
    I: NodeSet
    J: NodeSet

    def __repr__(self) -> str:
        return "F{%s|%s}" % (",".join(map(str, self.I)), ",".join(map(str, self.J)))


@dataclass(frozen=True)
class TypeMapData:
    lambda_star_lower: NodeSet
    lambda_star_upper: NodeSet
    lambda_: NodeSet


def _essential_masks(d: DynkinDiagram, I: int, J: int) -> bool:
    return all(c & I for c in component_masks(d, J))


def is_essential_lambda(d: DynkinDiagram, I: NodeSet, J: NodeSet) -> bool:
    """True iff every connected component of ``J`` intersects ``I``."""
    return _essential_masks(d, I.mask, J.mask)


def is_essential_face(d: DynkinDiagram, A: NodeSet, B: NodeSet) -> bool:
    """True iff no connected component of ``S - B`` lies inside ``A``."""
    full = (1 << d.rank) - 1
    return all(c & ~A.mask for c in component_masks(d, full & ~B.mask))


def leq(e1: Idempotent, e2: Idempotent) -> bool:
    return e1.I >= e2.I and e1.J >= e2.J


def _essential_pair_arrays(d: DynkinDiagram) -> Iterator[tuple[int, np.ndarray]]:
    """Yield ``(J, admissible I array)`` for every ``J``; vectorized over ``I``."""
    n = 1 << d.rank
    all_i = np.arange(n, dtype=np.int64)
    for j in range(n):
        ok = np.ones(n, dtype=bool)
        for c in component_masks(d, j):
            ok &= (all_i & c) != 0
        yield j, all_i[ok]


def _check_rank_cap(d: DynkinDiagram, cap: int | None) -> None:
    cap = rank_cap() if cap is None else cap
    if d.rank > cap:
        raise ResourceLimitError(
            f"enumerating 2^(2*{d.rank}) pairs for {d.name} exceeds the rank cap {cap}")


def count_essential_pairs(d: DynkinDiagram, cap: int | None = None) -> int:
    """Number of essential pairs, by the same filtered scan as :func:`enumerate_lattice`."""
    _check_rank_cap(d, cap)
    return sum(len(arr) for _, arr in _essential_pair_arrays(d))


def type_map(d: DynkinDiagram, e: Idempotent) -> TypeMapData:
    lower = e.J
    # s commutes with t iff s == t or the nodes are not adjacent
    upper = d.subset(
        s for s in e.I.complement()
        if all(s == t or not d.adjacent(s, t) for t in e.J))
    assert not (upper & lower), (e, upper, lower)
    return TypeMapData(lower, upper, lower | upper)


def meet(d: DynkinDiagram, e1: Idempotent, e2: Idempotent) -> Idempotent:
    return Idempotent(e1.I | e2.I, e1.J | e2.J)


def join(d: DynkinDiagram, e1: Idempotent, e2: Idempotent) -> Idempotent:
    I = e1.I & e2.I
    jmask = (e1.J & e2.J).mask
    drop = 0
    for c in component_masks(d, jmask):
        if not c & I.mask:
            drop |= c
    return Idempotent(I, NodeSet(jmask & ~drop, d.rank))


def to_face(e: Idempotent) -> Face:
    return Face(e.I.complement(), e.J.complement())


def from_face(F: Face) -> Idempotent:
    return Idempotent(F.I.complement(), F.J.complement())


def _sort_key(e: Idempotent, rank: int):
    return (2 * rank - e.size, e.I.sorted(), e.J.sorted())


class CrossSectionLattice:
    """All essential pairs of a diagram, canonically ordered.

    Elements are sorted by rank, then lexicographically on ``(I, J)``.  The
    comparison matrix and the cover relation are computed on first use.
    """

    def __init__(self, diagram: DynkinDiagram, elements: list[Idempotent]):
        self.diagram = diagram
        self.elements = elements
        self.index = {e: k for k, e in enumerate(elements)}
        self._imask = np.array([e.I.mask for e in elements], dtype=np.int64)
        self._jmask = np.array([e.J.mask for e in elements], dtype=np.int64)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, e) -> bool:
        return e in self.index

    @property
    def size_of_S(self) -> int:
        return self.diagram.rank

    @property
    def height(self) -> int:
        return 2 * self.diagram.rank

    @property
    def bottom(self) -> Idempotent:
        S = self.diagram.nodes
        return Idempotent(S, S)

    @property
    def top(self) -> Idempotent:
        E = NodeSet.empty(self.diagram.rank)
        return Idempotent(E, E)

    def rank(self, e: Idempotent) -> int:
        return 2 * self.diagram.rank - e.size

    def ranks(self) -> list[int]:
        return [self.rank(e) for e in self.elements]

    def _require(self, e: Idempotent) -> int:
        try:
            return self.index[e]
        except KeyError:
            raise InvalidInputError(f"{e} is not an element of the lattice of {self.diagram}") from None

    @cached_property
    def leq_matrix(self) -> np.ndarray:
        """``M[a, b]`` is true iff ``elements[a] <= elements[b]``."""
        im, jm = self._imask, self._jmask
        return ((im[None, :] & ~im[:, None]) == 0) & ((jm[None, :] & ~jm[:, None]) == 0)

    def up_set(self, e: Idempotent, strict: bool = False) -> np.ndarray:
        """Indices of elements ``>= e`` (``> e`` when ``strict``)."""
        k = self._require(e)
        mask = ((self._imask & ~e.I.mask) == 0) & ((self._jmask & ~e.J.mask) == 0)
        if strict:
            mask[k] = False
        return np.flatnonzero(mask)

    def down_set(self, e: Idempotent, strict: bool = False) -> np.ndarray:
        k = self._require(e)
        mask = ((e.I.mask & ~self._imask) == 0) & ((e.J.mask & ~self._jmask) == 0)
        if strict:
            mask[k] = False
        return np.flatnonzero(mask)

    def _minimal(self, idx: np.ndarray) -> list[int]:
        """Minimal elements (as indices) among ``idx``."""
        if len(idx) == 0:
            return []
        im, jm = self._imask[idx], self._jmask[idx]
        # below[a, b]: idx[a] <= idx[b]
        below = ((im[None, :] & ~im[:, None]) == 0) & ((jm[None, :] & ~jm[:, None]) == 0)
        counts = below.sum(axis=0)
        return [int(idx[b]) for b in np.flatnonzero(counts == 1)]

    def _maximal(self, idx: np.ndarray) -> list[int]:
        if len(idx) == 0:
            return []
        im, jm = self._imask[idx], self._jmask[idx]
        below = ((im[None, :] & ~im[:, None]) == 0) & ((jm[None, :] & ~jm[:, None]) == 0)
        counts = below.sum(axis=1)
        return [int(idx[a]) for a in np.flatnonzero(counts == 1)]

    @cached_property
    def upper_covers(self) -> list[list[int]]:
        """``upper_covers[k]``: indices of the elements covering ``elements[k]``."""
        return [sorted(self._minimal(self.up_set(e, strict=True))) for e in self.elements]

    @cached_property
    def lower_covers(self) -> list[list[int]]:
        lower: list[list[int]] = [[] for _ in self.elements]
        for k, ups in enumerate(self.upper_covers):
            for u in ups:
                lower[u].append(k)
        return lower

    def covers(self, e: Idempotent) -> list[Idempotent]:
        """Elements covering ``e``."""
        return [self.elements[k] for k in self.upper_covers[self._require(e)]]

    def covered_by(self, e: Idempotent) -> list[Idempotent]:
        return [self.elements[k] for k in self.lower_covers[self._require(e)]]

    def hasse(self) -> list[tuple[int, int]]:
        """Cover edges ``(lower, upper)`` as element indices."""
        return [(k, u) for k, ups in enumerate(self.upper_covers) for u in ups]

    def interval(self, lo: Idempotent, hi: Idempotent) -> np.ndarray:
        """Indices of the closed interval ``[lo, hi]``."""
        return np.intersect1d(self.up_set(lo), self.down_set(hi))

    def minimal_of(self, idx) -> list[Idempotent]:
        return [self.elements[k] for k in self._minimal(np.asarray(idx, dtype=np.int64))]

    def maximal_of(self, idx) -> list[Idempotent]:
        return [self.elements[k] for k in self._maximal(np.asarray(idx, dtype=np.int64))]


def enumerate_lattice(d: DynkinDiagram, cap: int | None = None) -> CrossSectionLattice:
    """All essential pairs of ``d`` via the filtered scan over ``2^(2l)`` pairs."""
    _check_rank_cap(d, cap)
    l = d.rank
    elements = [Idempotent(NodeSet(int(i), l), NodeSet(j, l))
                for j, arr in _essential_pair_arrays(d) for i in arr]
    elements.sort(key=lambda e: _sort_key(e, l))
    return CrossSectionLattice(d, elements)


def atoms(L: CrossSectionLattice) -> list[Idempotent]:
    return [e for e in L if L.rank(e) == 1]


def coatoms(L: CrossSectionLattice) -> list[Idempotent]:
    return [e for e in L if L.rank(e) == L.height - 1]


def _face_atoms(d: DynkinDiagram, F: Face) -> list[Idempotent]:
    l = d.rank
    out = [from_face(Face(NodeSet.of(l, [i]), NodeSet.empty(l))) for i in F.I]
    out += [from_face(Face(NodeSet.empty(l), NodeSet.of(l, [j]))) for j in F.J]
    return out


def atomic_decomposition(L: CrossSectionLattice, e: Idempotent) -> list[Idempotent]:
    """Atoms whose join is ``e``: one per node of each face coordinate of ``e``.

    Raises :class:`EmptyDecompositionError` for the bottom element and when the
    lattice is not atomic at ``e`` (possible only for rank-1 diagrams).
    """
    L._require(e)
    if e == L.bottom:
        raise EmptyDecompositionError("the bottom element is not a join of atoms")
    d = L.diagram
    parts = [a for a in _face_atoms(d, to_face(e)) if a in L]
    if not parts or fold_join(d, parts) != e:
        raise EmptyDecompositionError(f"{e} is not a join of atoms in the lattice of {d}")
    return parts


def fold_join(d: DynkinDiagram, items: list[Idempotent]) -> Idempotent:
    return reduce(lambda a, b: join(d, a, b), items)
