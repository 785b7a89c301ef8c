"""Weighted projective Reed-Muller codes on P(1,a,b) over finite fields."""

from __future__ import annotations

from .code import (
    CodeParams,
    GeneratorMatrix,
    build_generator_matrix,
    code_dimension,
    code_params,
    mindist_formula,
    mindist_oracle,
    table_reproduce,
)
from .errors import WPRMError
from .ff import FieldSpec, field_make
from .gpoly import GradedPolynomial, monomial_basis, poly_eval
from .hilbert import hf_closed, hf_oracle, regularity_set, series_expand, series_numerator
from .ideal import resolution_data, vanishing_gens, verify_resolution
from .wps import PointSet, canonicalize, enumerate_points, space_make

__all__ = [
    "CodeParams",
    "FieldSpec",
    "GeneratorMatrix",
    "GradedPolynomial",
    "PointSet",
    "WPRMError",
    "build_generator_matrix",
    "canonicalize",
    "code_dimension",
    "code_params",
    "enumerate_points",
    "field_make",
    "hf_closed",
    "hf_oracle",
    "mindist_formula",
    "mindist_oracle",
    "monomial_basis",
    "poly_eval",
    "regularity_set",
    "resolution_data",
    "series_expand",
    "series_numerator",
    "space_make",
    "table_reproduce",
    "vanishing_gens",
    "verify_resolution",
]
