"""Classification of the local monoids attached to an idempotent.

For ``e`` in the cross-section lattice ``L``, the connected stabilizer ``M_e``
has lattice ``[e, top]`` and the local monoid ``eMe`` has lattice
``[bottom, e]``.  Every closed-form predicate here has a brute-force
counterpart scanning the relevant interval; the closed forms are shortcuts and
the interval scans are the arbiters.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .dynkin import DynkinDiagram, Kind, NodeSet, leaf_nodes
from .envlattice import CrossSectionLattice, Idempotent, type_map
from .errors import InvalidInputError, UndefinedClassificationError, UnsupportedError

JLINEAR_CLOSED_FORM_KINDS = frozenset({Kind.A, Kind.B, Kind.C, Kind.F, Kind.G})


# interval scans


def _half_open_below_top(L: CrossSectionLattice, e: Idempotent) -> np.ndarray:
    """``[e, top)``: the lattice of ``M_e`` with its identity removed."""
    up = L.up_set(e)
    return up[up != L.index[L.top]]


def _open_interval(L: CrossSectionLattice, e: Idempotent) -> np.ndarray:
    up = L.up_set(e, strict=True)
    return up[up != L.index[L.top]]


def unique_coatom_of_stabilizer(L: CrossSectionLattice, e: Idempotent) -> Idempotent | None:
    """The unique maximal element of ``[e, top)``, or None if not unique."""
    maxima = L.maximal_of(_half_open_below_top(L, e))
    return maxima[0] if len(maxima) == 1 else None


def open_interval_extremes(L: CrossSectionLattice, e: Idempotent):
    """Minimal and maximal elements of the open interval ``(e, top)``."""
    idx = _open_interval(L, e)
    return L.minimal_of(idx), L.maximal_of(idx)


def jcoirreducible_oracle(L: CrossSectionLattice, e: Idempotent) -> bool:
    """``M_e`` is J-coirreducible: ``[e, top)`` has exactly one maximal element."""
    return unique_coatom_of_stabilizer(L, e) is not None


def jirreducible_oracle(L: CrossSectionLattice, e: Idempotent) -> bool:
    """``M_e`` is J-irreducible: ``(e, top]`` has exactly one minimal element."""
    up = L.up_set(e, strict=True)
    return len(L.minimal_of(up)) == 1


def jlinear_oracle(L: CrossSectionLattice, e: Idempotent) -> bool:
    """The open interval ``(e, top)`` has a unique minimal and a unique maximal element."""
    lows, highs = open_interval_extremes(L, e)
    return len(lows) == 1 and len(highs) == 1


# closed forms


def is_stabilizer_jcoirreducible(L: CrossSectionLattice, e: Idempotent,
                                 method: Literal["closed", "oracle"] = "closed") -> bool:
    L._require(e)
    if e == L.top:
        raise UndefinedClassificationError("the top element has no proper stabilizer boundary")
    if method == "oracle":
        return jcoirreducible_oracle(L, e)
    return len(e.I) == 1


def is_maximal_jcoirr(e: Idempotent) -> bool:
    return len(e.I) == 1 and e.J.mask == (1 << e.J.rank) - 1


def stabilizer_jcoirr_type(d: DynkinDiagram, e: Idempotent) -> NodeSet:
    """``type(M_e) = S - {s}`` for ``e = e_{{s},S}``."""
    if not is_maximal_jcoirr(e):
        raise InvalidInputError(f"{e} is not of the form e_{{{{s}},S}}")
    return e.I.complement()


def stabilizer_type_oracle(L: CrossSectionLattice, e: Idempotent) -> NodeSet:
    """``lambda`` of the unique maximal element of ``[e, top)``."""
    coatom = unique_coatom_of_stabilizer(L, e)
    if coatom is None:
        raise UndefinedClassificationError(f"M_{e} is not J-coirreducible")
    return type_map(L.diagram, coatom).lambda_


def is_stabilizer_jlinear(L: CrossSectionLattice, d: DynkinDiagram, e: Idempotent,
                          method: Literal["closed", "oracle"] = "closed") -> bool:
    """J-linear clause: for ``e = e_{{s},J}`` the closed form is "``s`` is a leaf".

    Elements with ``|I| != 1`` are never J-linear by the first clause.  The
    closed form covers kinds A, B, C, F, G only.
    """
    L._require(e)
    if method == "oracle":
        return jlinear_oracle(L, e)
    if len(e.I) != 1:
        return False
    if d.kind not in JLINEAR_CLOSED_FORM_KINDS:
        raise UnsupportedError(f"no closed-form J-linear criterion for type {d.kind.value}")
    (s,) = e.I
    return s in leaf_nodes(d)


def navels(L: CrossSectionLattice) -> list[Idempotent]:
    d = L.diagram
    return [e for e in L if not type_map(d, e).lambda_]


def navel(L: CrossSectionLattice) -> Idempotent | None:
    found = navels(L)
    return found[0] if len(found) == 1 else None


@dataclass(frozen=True)
class LocalWeylData:
    weyl_of_eMe: NodeSet
    weyl_of_Me: NodeSet


def local_weyl(d: DynkinDiagram, e: Idempotent) -> LocalWeylData:
    tm = type_map(d, e)
    return LocalWeylData(tm.lambda_star_upper, tm.lambda_star_lower)


@dataclass(frozen=True)
class GroupDescriptor:
    """A reductive group up to isomorphism type: derived part and central torus rank.

    ``derived`` is the subdiagram of the derived subgroup (all of ``S`` for
    ``G0``, empty for a torus).  ``torus_rank`` is None when not determined.
    """

    derived: NodeSet
    torus_rank: int | None

    def text(self) -> str:
        full = (1 << self.derived.rank) - 1
        if self.derived.mask == full:
            parts = ["G0"]
        elif self.derived:
            parts = ["L" + repr(self.derived)]
        else:
            parts = []
        if self.torus_rank is None:
            parts.append("T^?")
        elif self.torus_rank or not parts:
            parts.append(f"T^{self.torus_rank}" if self.torus_rank else "trivial")
        return " x ".join(parts)

    def to_json(self) -> dict:
        full = (1 << self.derived.rank) - 1
        if self.derived.mask == full:
            derived = "G0"
        elif not self.derived:
            derived = "trivial"
        else:
            derived = list(self.derived)
        return {"derived": derived, "torus_rank": self.torus_rank, "text": self.text()}


@dataclass(frozen=True)
class StructureDescriptor:
    shape: str
    centralizer: GroupDescriptor
    stabilizer_identity: GroupDescriptor
    unit_of_eMe: GroupDescriptor
    torus_embedding_dims: tuple[int, int] | None = None
    eMe_affine_line: bool = False
    dim_eMe: int | None = None

    def to_json(self) -> dict:
        return {
            "shape": self.shape,
            "centralizer": self.centralizer.to_json(),
            "stabilizer_identity": self.stabilizer_identity.to_json(),
            "unit_of_eMe": self.unit_of_eMe.to_json(),
            "torus_embedding_dims": list(self.torus_embedding_dims) if self.torus_embedding_dims else None,
            "eMe_affine_line": self.eMe_affine_line,
            "dim_eMe": self.dim_eMe,
        }

    def torus_ranks_consistent(self) -> bool:
        c, s, u = self.centralizer.torus_rank, self.stabilizer_identity.torus_rank, self.unit_of_eMe.torus_rank
        if None in (c, s, u):
            return True
        return c == s + u


def structure_descriptor(d: DynkinDiagram, L: CrossSectionLattice, e: Idempotent) -> StructureDescriptor:
    """Symbolic unit-group data for ``e``.

    Exact descriptors are returned for four shapes (maximal J-coirreducible,
    navel, and the two rank-one families); every other element gets the
    derived parts from the local Weyl data and undetermined torus ranks.
    A Levi factor ``L_K`` of ``G0`` contributes a central torus of rank
    ``|S| - |K|``.
    """
    L._require(e)
    l = d.rank
    S, E = d.nodes, NodeSet.empty(l)
    rank = L.rank(e)
    g = GroupDescriptor
    if is_maximal_jcoirr(e):
        return StructureDescriptor("maximal_jcoirreducible", g(S, l - 1), g(S, 0), g(E, l - 1),
                                   eMe_affine_line=(l == 2), dim_eMe=l - 1)
    if e.I == S and not e.J:
        return StructureDescriptor("navel", g(E, 2 * l), g(E, l), g(E, l),
                                   torus_embedding_dims=(l, l), dim_eMe=l)
    if rank == 1 and e.J == S:
        return StructureDescriptor("rank1_full_J", g(S, l - 1), g(S, l - 2), g(E, 1),
                                   eMe_affine_line=True, dim_eMe=1)
    if rank == 1 and e.I == S:
        levi = e.J
        central = l - len(levi)
        return StructureDescriptor("rank1_full_I", g(levi, central + l), g(levi, central + l - 1),
                                   g(E, 1), eMe_affine_line=True, dim_eMe=1)
    lw = local_weyl(d, e)
    return StructureDescriptor("general", g(lw.weyl_of_eMe | lw.weyl_of_Me, None),
                               g(lw.weyl_of_Me, None), g(lw.weyl_of_eMe, None))


def _is_boolean(L: CrossSectionLattice, idx: np.ndarray) -> tuple[bool, int | None]:
    """Brute-force test that the sub-poset ``idx`` is a Boolean lattice."""
    n = len(idx)
    if n == 0:
        return False, None
    leq = L.leq_matrix[np.ix_(idx, idx)]
    bottoms = [a for a in range(n) if leq[a, :].all()]
    tops = [b for b in range(n) if leq[:, b].all()]
    if len(bottoms) != 1 or len(tops) != 1:
        return False, None
    bot = bottoms[0]
    strict = leq & ~np.eye(n, dtype=bool)
    # covers of the bottom inside the sub-poset
    atoms = [a for a in range(n) if strict[bot, a]
             and not any(strict[bot, c] and strict[c, a] for c in range(n))]
    h = len(atoms)
    if n != 2**h:
        return False, None
    images = {}
    for x in range(n):
        key = frozenset(k for k, a in enumerate(atoms) if leq[a, x])
        if key in images:
            return False, None
        images[x] = key
    for x in range(n):
        for y in range(n):
            if bool(leq[x, y]) != (images[x] <= images[y]):
                return False, None
    return True, h


def boolean_interval_check(L: CrossSectionLattice, e: Idempotent,
                           side: Literal["lower", "upper"]) -> tuple[bool, int | None]:
    """Is ``[bottom, e]`` (lower) or ``[e, top]`` (upper) a Boolean lattice?

    Returns ``(True, height)`` when it is, else ``(False, None)``.  The test
    maps each element to the set of interval atoms below it and checks that
    this is an order isomorphism onto all subsets.
    """
    if side == "lower":
        idx = L.down_set(e)
    elif side == "upper":
        idx = L.up_set(e)
    else:
        raise InvalidInputError(f"side must be 'lower' or 'upper', got {side!r}")
    return _is_boolean(L, idx)


def element_class(L: CrossSectionLattice, e: Idempotent) -> str:
    if e == L.top:
        return "TopElement"
    if is_maximal_jcoirr(e):
        return "MaximalJCoirreducible"
    if len(e.I) == 1:
        return "JCoirreducible"
    return "General"


def classify_record(L: CrossSectionLattice, e: Idempotent) -> dict:
    """One JSON-ready classification record for ``e``."""
    d = L.diagram
    cls = element_class(L, e)
    jlinear = None if cls == "TopElement" else jlinear_oracle(L, e)
    return {
        "I": list(e.I),
        "J": list(e.J),
        "class": cls,
        "jlinear": jlinear,
        "navel": not type_map(d, e).lambda_,
        "descriptor": structure_descriptor(d, L, e).to_json(),
    }
