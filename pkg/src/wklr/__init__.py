"""Exact combinatorics for weighted KLR algebras and their Fock spaces."""

from .errors import DegenerateWeighting, DivisionFailure, MutationFailure, PeelFailure, WklrError
from .partition import Box, Order, Weighting, multipartition
from .ring import ONE, Q, ZERO, LaurentPoly
from .tableau import EntryPos, ITableau, Loading
from .fock import FockVector

__version__ = "0.1.0"

__all__ = [
    "Box", "DegenerateWeighting", "DivisionFailure", "EntryPos", "FockVector", "ITableau",
    "LaurentPoly", "Loading", "MutationFailure", "Order", "PeelFailure", "Weighting",
    "WklrError", "multipartition", "ONE", "Q", "ZERO",
]
