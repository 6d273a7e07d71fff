"""Exact integer group determinants for cyclic, dihedral and dicyclic groups."""

from __future__ import annotations

from .detengine import FactoredDeterminant, det_exact, det_factored, det_matrix_oracle
from .groupring import Family, GroupSpec, GroupWord, RingElement, ring_mul, swap
from .intpoly import CyclicPoly, IntPoly, cyclotomic, resultant
from .laws import Status, Verdict, check_divisibility, check_odd_residue, classify, lambda_formula
from .parse import ParseError, format_element, parse_element

__version__ = "0.1.0"

__all__ = [
    "CyclicPoly",
    "FactoredDeterminant",
    "Family",
    "GroupSpec",
    "GroupWord",
    "IntPoly",
    "ParseError",
    "RingElement",
    "Status",
    "Verdict",
    "check_divisibility",
    "check_odd_residue",
    "classify",
    "cyclotomic",
    "det_exact",
    "det_factored",
    "det_matrix_oracle",
    "format_element",
    "lambda_formula",
    "parse_element",
    "resultant",
    "ring_mul",
    "swap",
]
