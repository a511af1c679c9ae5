"""Cross-section lattices of enveloping monoids, their local monoids, rank-one
Renner combinatorics and the type-A orbit counts."""
from .classify import (boolean_interval_check, classify_record, is_stabilizer_jcoirreducible,
                       is_stabilizer_jlinear, local_weyl, navel, stabilizer_jcoirr_type,
                       structure_descriptor)
from .counting import d_seq, d_via_enumeration, d_via_gf, e_seq, gf_identity_check
from .dynkin import DynkinDiagram, Kind, NodeSet, build_diagram, classify_subdiagram, parse_diagram
from .envlattice import (CrossSectionLattice, Idempotent, atomic_decomposition, enumerate_lattice,
                         join, meet, type_map)
from .errors import (EnvlatError, InvalidInputError, ResourceLimitError,
                     UndefinedClassificationError, UnsupportedError)
from .renner import RennerElement, bcr_leq, count_R1, rank1_orbit_poset, standard_form
from .weyl import WeylGroup, bruhat_leq, enumerate_weyl, min_coset_reps, weyl_order

__version__ = "0.1.0"
