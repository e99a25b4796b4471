"""Exact enumeration of involutive Baxter permutations through
non-intersecting lattice paths."""

from .closed_forms import a_multi, b_fpf, disjoint_pair_count, s_count, u_count
from .errors import CapacityError, ContractError, FormatError
from .perm_core import (
    ParameterProfile,
    descent_profile,
    enumerate_involutions,
    is_baxter,
    is_involution,
    profile,
    profile_census,
)
from .walks import (
    BinaryWalk,
    LatticePoint,
    WalkTuple,
    enumerate_walk_tuples,
    lgv_count_3,
    walk_count,
    walk_tuple_count,
)

__version__ = "0.1.0"
