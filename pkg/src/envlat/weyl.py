"""Exact Weyl-group computations in the simple-root basis.

Convention: the simple reflection ``s_i`` acts on column coordinate vectors by
``s_i(alpha_j) = alpha_j - a_ij alpha_i`` where ``a`` is the Cartan matrix, and
the product ``uv`` has matrix ``M_u @ M_v``.  With this convention right
multiplication by ``s`` is ``M_w @ M_s`` and, in ``A_2``, ``l(s_1 s_2) = 2``.

Elements of an enumerated group are indexed ``0..|W|-1`` in breadth-first
order from the identity; all the heavy lifting uses those indices and
precomputed multiplication tables.
"""
from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from .dynkin import DynkinDiagram, Kind, NodeSet, classify_subdiagram
from .errors import InvalidInputError, ResourceLimitError

DEFAULT_WEYL_CAP = 10**6

_SPORADIC = {(Kind.G, 2): 12, (Kind.F, 4): 1152, (Kind.E, 6): 51840,
             (Kind.E, 7): 2903040, (Kind.E, 8): 696729600}


def weyl_cap() -> int:
    """Enumeration cap from ``ENVLAT_CAP_WEYL``, falling back to the default."""
    raw = os.environ.get("ENVLAT_CAP_WEYL")
    return int(raw) if raw else DEFAULT_WEYL_CAP


def _irreducible_order(kind: Kind, n: int) -> int:
    if kind is Kind.A:
        return math.factorial(n + 1)
    if kind in (Kind.B, Kind.C):
        return 2**n * math.factorial(n)
    if kind is Kind.D:
        return 2 ** (n - 1) * math.factorial(n)
    return _SPORADIC[(kind, n)]


def weyl_order(d: DynkinDiagram, K: NodeSet | None = None) -> int:
    """Order of the parabolic subgroup ``W_K`` (``K`` defaults to all nodes)."""
    K = d.nodes if K is None else K
    order = 1
    for kind, n in classify_subdiagram(d, K):
        order *= _irreducible_order(kind, n)
    return order


def parabolic_index(d: DynkinDiagram, I: NodeSet) -> int:
    full, sub = weyl_order(d), weyl_order(d, I)
    q, r = divmod(full, sub)
    assert r == 0
    return q


@dataclass(frozen=True)
class WeylElement:
    """A group element: its integer matrix (row-major tuples) and length.

    ``index`` locates the element in the enumerated group it came from and is
    excluded from equality.
    """

    matrix: tuple[tuple[int, ...], ...]
    length: int
    index: int = field(default=-1, compare=False, repr=False)


class WeylGroup:
    """A fully enumerated Weyl group with multiplication tables."""

    def __init__(self, diagram: DynkinDiagram, cap: int | None = None):
        cap = weyl_cap() if cap is None else cap
        order = weyl_order(diagram)
        if order > cap:
            raise ResourceLimitError(
                f"|W({diagram.name})| = {order} exceeds the enumeration cap {cap}")
        self.diagram = diagram
        n = self.rank = diagram.rank
        a = np.array(diagram.cartan_matrix, dtype=np.int64)
        gens = []
        for i in range(n):
            m = np.eye(n, dtype=np.int64)
            m[i, :] -= a[i, :]
            gens.append(m)
        self._gens = gens

        ident = np.eye(n, dtype=np.int64)
        mats = [ident]
        lengths = [0]
        lookup = {ident.tobytes(): 0}
        right = [[-1] * n]
        queue = deque([0])
        while queue:
            w = queue.popleft()
            mw = mats[w]
            for i in range(n):
                if right[w][i] >= 0:
                    continue
                m = mw @ gens[i]
                key = m.tobytes()
                v = lookup.get(key)
                if v is None:
                    v = len(mats)
                    lookup[key] = v
                    mats.append(m)
                    lengths.append(lengths[w] + 1)
                    right.append([-1] * n)
                    queue.append(v)
                right[w][i] = v
                right[v][i] = w
        assert len(mats) == order, (len(mats), order)
        self._mats = mats
        self._lookup = lookup
        self.lengths = lengths
        self.right = right
        self._words: list[tuple[int, ...] | None] = [None] * len(mats)
        self._words[0] = ()
        self._elements = [WeylElement(tuple(map(tuple, m.tolist())), lengths[k], k)
                          for k, m in enumerate(mats)]
        self._left: list[list[int]] | None = None
        self._inverse: list[int] | None = None
        self._support: list[int] | None = None
        self._bruhat_cache: dict[tuple[int, int], bool] = {}

    def __len__(self) -> int:
        return len(self._mats)

    def __iter__(self):
        return iter(self._elements)

    @property
    def elements(self) -> list[WeylElement]:
        return self._elements

    @property
    def identity(self) -> WeylElement:
        return self._elements[0]

    def generator(self, i: int) -> WeylElement:
        return self._elements[self.right[0][i - 1]]

    def element(self, k: int) -> WeylElement:
        return self._elements[k]

    def index_of(self, w: WeylElement) -> int:
        if 0 <= w.index < len(self) and self._elements[w.index] == w:
            return w.index
        key = np.array(w.matrix, dtype=np.int64).tobytes()
        try:
            return self._lookup[key]
        except KeyError:
            raise InvalidInputError("element does not belong to this group") from None

    # words and products

    def word_index(self, k: int) -> tuple[int, ...]:
        """Canonical reduced word (0-based letters) of element ``k``."""
        word = self._words[k]
        if word is None:
            letters = []
            w = k
            while w:
                lw = self.lengths[w]
                i = next(i for i in range(self.rank) if self.lengths[self.right[w][i]] < lw)
                letters.append(i)
                w = self.right[w][i]
            word = tuple(reversed(letters))
            self._words[k] = word
        return word

    def reduced_word(self, w: WeylElement) -> tuple[int, ...]:
        """Canonical reduced word with 1-based letters."""
        return tuple(i + 1 for i in self.word_index(self.index_of(w)))

    def word_label(self, w: WeylElement) -> str:
        word = self.reduced_word(w)
        return ".".join(map(str, word)) if word else "e"

    def from_word(self, word: Iterable[int]) -> WeylElement:
        k = 0
        for i in word:
            if not 1 <= i <= self.rank:
                raise InvalidInputError(f"generator {i} outside 1..{self.rank}")
            k = self.right[k][i - 1]
        return self._elements[k]

    def mul_index(self, u: int, v: int) -> int:
        for i in self.word_index(v):
            u = self.right[u][i]
        return u

    def mul(self, u: WeylElement, v: WeylElement) -> WeylElement:
        return self._elements[self.mul_index(self.index_of(u), self.index_of(v))]

    def inverse_index(self, k: int) -> int:
        if self._inverse is None:
            self._inverse = [self._inv(j) for j in range(len(self))]
        return self._inverse[k]

    def _inv(self, k: int) -> int:
        u = 0
        for i in reversed(self.word_index(k)):
            u = self.right[u][i]
        return u

    def inverse(self, w: WeylElement) -> WeylElement:
        return self._elements[self.inverse_index(self.index_of(w))]

    def left_index(self, i: int, k: int) -> int:
        """Index of ``s_{i+1} * w_k``."""
        if self._left is None:
            inv = [self.inverse_index(j) for j in range(len(self))]
            self._left = [[inv[self.right[inv[j]][g]] for g in range(self.rank)]
                          for j in range(len(self))]
        return self._left[k][i]

    def support_mask(self, k: int) -> int:
        if self._support is None:
            sup = [0] * len(self)
            for j in range(len(self)):
                for i in self.word_index(j):
                    sup[j] |= 1 << i
            self._support = sup
        return self._support[k]

    def matrix(self, k: int) -> np.ndarray:
        return self._mats[k]

    # structure

    def parabolic_indices(self, K: NodeSet) -> list[int]:
        """Indices of the elements of ``W_K``."""
        return [k for k in range(len(self)) if self.support_mask(k) & ~K.mask == 0]

    def parabolic_subgroup(self, K: NodeSet) -> list[WeylElement]:
        return [self._elements[k] for k in self.parabolic_indices(K)]

    def has_right_descent_in(self, k: int, mask: int) -> bool:
        lk = self.lengths[k]
        row = self.right[k]
        return any(mask >> i & 1 and self.lengths[row[i]] < lk for i in range(self.rank))

    def min_coset_rep_index(self, k: int, K: NodeSet) -> int:
        """The minimal-length element of the left coset ``w_k W_K``."""
        mask = K.mask
        while True:
            lk = self.lengths[k]
            for i in range(self.rank):
                if mask >> i & 1 and self.lengths[self.right[k][i]] < lk:
                    k = self.right[k][i]
                    break
            else:
                return k

    def bruhat_leq_index(self, u: int, w: int) -> bool:
        cache = self._bruhat_cache
        key = (u, w)
        hit = cache.get(key)
        if hit is not None:
            return hit
        lengths = self.lengths
        if lengths[u] > lengths[w]:
            res = False
        elif lengths[w] == 0 or u == w:
            res = u == w
        elif lengths[u] == 0:
            res = True
        else:
            # last letter of the canonical word is a right descent of w
            s = self.word_index(w)[-1]
            ws = self.right[w][s]
            us = self.right[u][s]
            res = self.bruhat_leq_index(us if lengths[us] < lengths[u] else u, ws)
        cache[key] = res
        return res

    def longest_index(self) -> int:
        return len(self) - 1


@lru_cache(maxsize=32)
def _cached_group(diagram: DynkinDiagram, cap: int) -> WeylGroup:
    return WeylGroup(diagram, cap)


def enumerate_weyl(d: DynkinDiagram, cap: int | None = None) -> WeylGroup:
    """Breadth-first closure of ``W(d)`` under simple reflections.

    Groups are cached per diagram; raises :class:`ResourceLimitError` when
    ``|W|`` exceeds ``cap`` (default ``ENVLAT_CAP_WEYL`` or 10**6).
    """
    cap = weyl_cap() if cap is None else cap
    order = weyl_order(d)
    if order > cap:
        raise ResourceLimitError(f"|W({d.name})| = {order} exceeds the enumeration cap {cap}")
    return _cached_group(d, cap)


def bruhat_leq(W: WeylGroup, u: WeylElement, w: WeylElement) -> bool:
    return W.bruhat_leq_index(W.index_of(u), W.index_of(w))


@dataclass(frozen=True)
class CosetReps:
    subset: NodeSet
    representatives: tuple[WeylElement, ...]

    def __len__(self) -> int:
        return len(self.representatives)


def min_coset_reps_indices(W: WeylGroup, I: NodeSet) -> list[int]:
    return [k for k in range(len(W)) if not W.has_right_descent_in(k, I.mask)]


def min_coset_reps(W: WeylGroup, I: NodeSet) -> CosetReps:
    """``D_I``: elements with no right descent in ``I``."""
    return CosetReps(I, tuple(W.element(k) for k in min_coset_reps_indices(W, I)))

