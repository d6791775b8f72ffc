"""Toolkit for circuit-difference analysis of binary matroids."""

from .errors import (
    CapExceededError,
    InvalidConstructionError,
    MalformedInputError,
    MatroidError,
    NotConnectedError,
    NotRegularError,
)
from .gf2 import ElementSet, Gf2Matrix, Gf2Vector, null_space_basis, rank_of_columns, rref
from .matroid import BinaryMatroid, CircuitFamily, SeriesClassPartition

__all__ = [
    "BinaryMatroid",
    "CircuitFamily",
    "SeriesClassPartition",
    "ElementSet",
    "Gf2Matrix",
    "Gf2Vector",
    "rref",
    "null_space_basis",
    "rank_of_columns",
    "MatroidError",
    "CapExceededError",
    "MalformedInputError",
    "NotConnectedError",
    "NotRegularError",
    "InvalidConstructionError",
]
