"""Renner-monoid combinatorics: standard forms, the Bruhat-Chevalley-Renner
order, and the rank-one orbit posets ``WeW``.

A Renner element ``x = a e b^-1`` is kept as the triple ``(a, e, b)`` in
standard form: ``a`` minimal in ``a W_{lambda_*(e)}`` and ``b`` minimal in
``b W_{lambda(e)}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .dynkin import DynkinDiagram, NodeSet
from .envlattice import Idempotent, is_essential_lambda, leq, type_map
from .errors import InvalidInputError, UnsupportedError
from .weyl import WeylElement, WeylGroup, min_coset_reps_indices, parabolic_index, weyl_order


@dataclass(frozen=True)
class RennerElement:
    a: WeylElement
    e: Idempotent
    b: WeylElement


def _types(W: WeylGroup, e: Idempotent) -> tuple[NodeSet, NodeSet]:
    tm = type_map(W.diagram, e)
    return tm.lambda_, tm.lambda_star_lower


def standard_form_index(W: WeylGroup, w1: int, e: Idempotent, w2: int) -> tuple[int, int]:
    """Standard form of ``w1 e w2`` as element indices ``(a, b)``."""
    lam, lam_lower = _types(W, e)
    w2_inv = W.inverse_index(w2)
    b = W.min_coset_rep_index(w2_inv, lam)
    # u = b^-1 w2^-1 lies in W_lambda and commutes with e
    u = W.mul_index(W.inverse_index(b), w2_inv)
    a = W.min_coset_rep_index(W.mul_index(w1, W.inverse_index(u)), lam_lower)
    return a, b


def standard_form(W: WeylGroup, w1: WeylElement, e: Idempotent, w2: WeylElement) -> RennerElement:
    """Write ``w1 e w2`` as ``a e b^-1`` with ``a in D_*(e)``, ``b in D(e)``."""
    a, b = standard_form_index(W, W.index_of(w1), e, W.index_of(w2))
    return RennerElement(W.element(a), e, W.element(b))


def _parabolic_product(W: WeylGroup, K1: NodeSet, K2: NodeSet) -> set[int]:
    """Indices of ``W_K1 * W_K2``, deduplicated."""
    left = W.parabolic_indices(K1)
    right = W.parabolic_indices(K2)
    return {W.mul_index(x, y) for x in left for y in right}


def bcr_leq(W: WeylGroup, x: RennerElement, y: RennerElement) -> bool:
    """``x <= y``: ``e <= f`` and some ``w in W(f)W(e)`` has ``a <= cw`` and ``w^-1 d^-1 <= b^-1``."""
    if not leq(x.e, y.e):
        return False
    a, b = W.index_of(x.a), W.index_of(x.b)
    c, dd = W.index_of(y.a), W.index_of(y.b)
    lam_e, _ = _types(W, x.e)
    lam_f, _ = _types(W, y.e)
    b_inv = W.inverse_index(b)
    d_inv = W.inverse_index(dd)
    for w in sorted(_parabolic_product(W, lam_f, lam_e)):
        if not W.bruhat_leq_index(a, W.mul_index(c, w)):
            continue
        if W.bruhat_leq_index(W.mul_index(W.inverse_index(w), d_inv), b_inv):
            return True
    return False


def _idempotent_rank(e: Idempotent) -> int:
    return 2 * e.I.rank - e.size


@dataclass(frozen=True)
class Rank1OrbitPoset:
    """``WeW`` for a rank-one ``e`` as pairs ``(a, b)`` from ``D_*(e) x D(e)``.

    ``(a1, b1) <= (a2, b2)`` iff ``a1 <= a2`` and ``b1 >= b2`` in Bruhat order.
    """

    group: WeylGroup
    e: Idempotent
    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def leq(self, p: tuple[int, int], q: tuple[int, int]) -> bool:
        W = self.group
        return W.bruhat_leq_index(p[0], q[0]) and W.bruhat_leq_index(q[1], p[1])

    def element(self, p: tuple[int, int]) -> RennerElement:
        W = self.group
        return RennerElement(W.element(p[0]), self.e, W.element(p[1]))

    def rank_of(self, p: tuple[int, int]) -> int:
        # graded by l(a) + (max length in D) - l(b)
        W = self.group
        top_b = max(W.lengths[q[1]] for q in self.pairs)
        return W.lengths[p[0]] + top_b - W.lengths[p[1]]

    def covers(self) -> list[tuple[int, int]]:
        """Cover edges as positions in ``pairs``."""
        n = len(self.pairs)
        lt = [[i != j and self.leq(self.pairs[i], self.pairs[j]) for j in range(n)] for i in range(n)]
        return [(i, j) for i in range(n) for j in range(n)
                if lt[i][j] and not any(lt[i][k] and lt[k][j] for k in range(n))]

    def label(self, p: tuple[int, int]) -> str:
        """``a e b^-1`` with ``a``, ``b`` as reduced words; ``1`` is the identity."""
        W = self.group
        a, b = (W.word_label(W.element(k)) for k in p)
        a, b = ("1" if w == "e" else f"s{w}" for w in (a, b))
        return f"{a}*{self.e.label()}*({b})^-1"


def rank1_orbit_poset(W: WeylGroup, e: Idempotent) -> Rank1OrbitPoset:
    if _idempotent_rank(e) != 1:
        raise InvalidInputError(f"{e} does not have rank 1")
    lam, lam_lower = _types(W, e)
    left = min_coset_reps_indices(W, lam_lower)
    right = min_coset_reps_indices(W, lam)
    return Rank1OrbitPoset(W, e, tuple(product(left, right)))


def dim_GeG_rank1(d: DynkinDiagram, e: Idempotent) -> int:
    if _idempotent_rank(e) != 1:
        raise InvalidInputError(f"{e} does not have rank 1")
    if e.J == d.nodes:
        return 1
    return 2 * parabolic_index(d, e.J) + 1


def count_R1(d: DynkinDiagram) -> int:
    """``|S| + sum_s (|W| / |W_{S-{s}}|)^2``."""
    if d.rank < 2:
        raise UnsupportedError("the |R_1| formula needs rank >= 2")
    S = d.nodes
    full = weyl_order(d)
    total = d.rank
    for s in S:
        total += (full // weyl_order(d, S - d.subset([s]))) ** 2
    return total


def rank1_atoms(d: DynkinDiagram) -> list[Idempotent]:
    """Rank-one essential pairs: ``e_{S-{s},S}`` then ``e_{S,S-{s}}``."""
    S = d.nodes
    out = []
    for s in S:
        out.append(Idempotent(S - d.subset([s]), S))
    for s in S:
        out.append(Idempotent(S, S - d.subset([s])))
    return [e for e in out if is_essential_lambda(d, e.I, e.J)]


def count_R1_breakdown(W: WeylGroup) -> list[tuple[Idempotent, int]]:
    """``|WeW|`` for every rank-one ``e``, by enumerating the orbit posets."""
    return [(e, len(rank1_orbit_poset(W, e))) for e in rank1_atoms(W.diagram)]


def count_R1_direct(W: WeylGroup) -> int:
    return sum(n for _, n in count_R1_breakdown(W))
