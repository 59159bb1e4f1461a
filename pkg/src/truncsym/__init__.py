"""Truncated homogeneous (Petrie) symmetric functions with exact arithmetic."""

from .bases import CLASSICAL, E, H, HD, M, P, S, Basis, SymFunc, TransitionMatrix, convert, transition, transition_hd
from .cyclotomic import CycNum
from .partition import INFINITY, Partition, Truncation, enumerate_partitions
from .petrie import count_bounded_matrices, count_mod_matrices, hd_lambda, hd_n, hd_via_p
from .polyring import SparsePoly

__version__ = "0.1.0"

__all__ = [
    "CLASSICAL", "E", "H", "HD", "M", "P", "S", "Basis", "SymFunc", "TransitionMatrix",
    "convert", "transition", "transition_hd", "CycNum", "INFINITY", "Partition", "Truncation",
    "enumerate_partitions", "count_bounded_matrices", "count_mod_matrices", "hd_lambda", "hd_n",
    "hd_via_p", "SparsePoly",
]
