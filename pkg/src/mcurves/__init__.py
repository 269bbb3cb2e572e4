"""Exact tools for arrangements of lines and smooth conics in the complex
projective plane: singular points, Jacobian syzygies and numerical
constraints for M-curves."""
from .arrangement import (Arrangement, SingularPoint, WeakCombinatorics, delete_component,
                          singular_points, validate, weak_combinatorics)
from .exactpoly import HForm, UniPoly
from .fileformat import parse_arrangement, parse_wc, serialize_arrangement
from .linalg import RankBackend
from .syzygy import Syzygies, SyzygyReport, analyze, m_curve_certify

__all__ = [
    "Arrangement", "SingularPoint", "WeakCombinatorics", "delete_component",
    "singular_points", "validate", "weak_combinatorics", "HForm", "UniPoly",
    "parse_arrangement", "parse_wc", "serialize_arrangement", "RankBackend",
    "Syzygies", "SyzygyReport", "analyze", "m_curve_certify",
]
