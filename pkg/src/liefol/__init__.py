"""Exact analysis of left-invariant foliations on metric Lie algebras."""

from .curvature import (
    CurvatureReport,
    curvature_summary,
    levi_civita,
    quotient_geometry,
    riemann,
    sectional,
    submersion_quotient_geometry,
)
from .fileformat import AlgebraFile, dump, load, parse_algebra
from .foliation import (
    FoliationReport,
    MetricSplit,
    analyze_split,
    conformality,
    is_riemannian,
    make_split,
    mean_curvature,
    split_tensors,
    verify_theorems,
)
from .lie import LieAlgebra, bracket, classify, killing_form, radical, validate_jacobi
from .linalg import Mat, Subspace, kernel, orthogonalize, rref

__all__ = [
    "AlgebraFile",
    "CurvatureReport",
    "FoliationReport",
    "LieAlgebra",
    "Mat",
    "MetricSplit",
    "Subspace",
    "analyze_split",
    "bracket",
    "classify",
    "conformality",
    "curvature_summary",
    "dump",
    "is_riemannian",
    "kernel",
    "killing_form",
    "levi_civita",
    "load",
    "make_split",
    "mean_curvature",
    "orthogonalize",
    "parse_algebra",
    "quotient_geometry",
    "radical",
    "riemann",
    "rref",
    "sectional",
    "split_tensors",
    "submersion_quotient_geometry",
    "validate_jacobi",
    "verify_theorems",
]
