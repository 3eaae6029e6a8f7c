"""Exact positivity tests for skew-symmetric matrices on the orthogonal Grassmannian."""

from .cells import CellLabel, cells_in_chart, identify_cell, parse_label, sample_cell
from .exact import Matrix, Poly, det, lowest_term, minor, pfaffian, poly_det
from .pfaffians import check_sign_pattern, pf_sub, spinor_coords, subset_sign
from .positivity import (
    is_totally_nonnegative,
    is_totally_positive,
    m_minor,
    reconstruct,
    recover_params,
    skew_matrix,
)
from .so2n import chart, deodhar_point, marsh_rietsch, point_from_skew, z_family

__version__ = "0.1.0"

__all__ = [
    "CellLabel", "Matrix", "Poly", "cells_in_chart", "chart", "check_sign_pattern", "deodhar_point",
    "det", "identify_cell", "is_totally_nonnegative", "is_totally_positive", "lowest_term",
    "m_minor", "marsh_rietsch", "minor", "parse_label", "pf_sub", "pfaffian", "point_from_skew",
    "poly_det", "reconstruct", "recover_params", "sample_cell", "skew_matrix", "spinor_coords",
    "subset_sign", "z_family",
]
