"""Exact shuffle statistics: major index, descents, and the shuffle/partition bijection."""
from .bijection import PartitionPair, ShuffleDecomposition, decompose, phi, psi, psi_trace, t_sequence_check
from .errors import ContractViolation, InputError
from .insertion import SpaceKind, canonical_labeling, classify_space, insert_at, major_increment, mis, mis_prefix_set
from .perm import (
    Permutation,
    descent_profile,
    descent_set,
    des,
    enumerate_shuffles,
    maj,
    shuffle_generating_function,
    tail_descent_count,
)
from .qpartitions import QPoly, gaussian_binomial, garsia_gessel_rhs, q_factorial, q_integer, stanley_rhs

__version__ = "0.1.0"

__all__ = [
    "ContractViolation",
    "InputError",
    "PartitionPair",
    "Permutation",
    "QPoly",
    "ShuffleDecomposition",
    "SpaceKind",
    "canonical_labeling",
    "classify_space",
    "decompose",
    "des",
    "descent_profile",
    "descent_set",
    "enumerate_shuffles",
    "gaussian_binomial",
    "garsia_gessel_rhs",
    "insert_at",
    "maj",
    "major_increment",
    "mis",
    "mis_prefix_set",
    "phi",
    "psi",
    "psi_trace",
    "q_factorial",
    "q_integer",
    "shuffle_generating_function",
    "stanley_rhs",
    "t_sequence_check",
    "tail_descent_count",
]
