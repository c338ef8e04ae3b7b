"""Exact FC-centralizers and bounded FC-nilpotent structure.

Two decidable backends are provided: finite permutation groups
(:class:`PermGroup`) and ``Z^n ⋊ F`` with F finite (:class:`AffineGroup`).
"""

__version__ = "0.1.0"

from .affine import AffineElement, AffineGroup
from .core import (INFINITE, Group, GroupError, Index, Modulus, Subgroup, centralizer_mod,
                   class_size_mod, commensurable, contained_up_to_finite_index, evaluate,
                   generate_subgroup, join, normalizer, normalizes, subgroup_contains,
                   subgroup_index, subgroup_intersect)
from .fc import (BoundCertificate, FCChain, Unbounded, check_bounded_fc_nilpotent_chain,
                 check_bounded_fc_solvable_chain, fc_bound, fc_centralizer_subgroup,
                 fc_membership, make_chain)
from .formats import fixtures, load_chain, load_group
from .lattice import Lattice, lattice_hnf, lattice_index
from .oracle import ball_enumerate, brute_check
from .perm import PermGroup, build_bsgs, conjugacy_classes
from .series import (center_mod, derived_series, derived_subgroup, lower_central_series,
                     nilpotency_class, normal_closure, upper_central_series)
from .theorems import (TowerTrace, coset_cover_witness, commutator_finiteness,
                       neumann_decompose, nilpotent_tower, solvable_resolve, symmetry_check,
                       witness_from_nilpotent)

__all__ = [name for name in dir() if not name.startswith("_")]
