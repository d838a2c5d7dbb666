"""Exact toric and Cox-ring computations for hypersurfaces in toric varieties."""

from .coxring import (
    GradingData,
    TorsionClassGroupError,
    effective_cone,
    fan_from_bunch,
    grading_from_fan,
    is_ample,
    lefschetz_codim_check,
    mov_cone,
    nef_cone,
)
from .fan import (
    Fan,
    NotFanoError,
    anticanonical_degree,
    dual_variety,
    irrelevant_ideal,
    is_complete,
    is_fano,
    is_smooth,
    validate_fan,
)
from .fanfile import FanFileError, parse_fan_file, parse_fan_text, write_fan_file
from .fixtures import FIXTURE_NAMES, fixture
from .hilbert import CompleteIntersectionSpec, GradedPolyRingSpec, ci_dimension, quotient_dim_oracle
from .linalg import IntegerMatrix, hermite_normal_form, integer_kernel, smith_normal_form
from .models import BlowupModel, DivisorClassX, cox3_spec, cox4_spec
from .monomial import SquarefreeMonomialIdeal, minimal_primes, vanishing_codim
from .polyhedral import LatticePolytope, RationalCone, normalized_volume, polar_dual

__all__ = [
    "GradingData",
    "TorsionClassGroupError",
    "effective_cone",
    "fan_from_bunch",
    "grading_from_fan",
    "is_ample",
    "lefschetz_codim_check",
    "mov_cone",
    "nef_cone",
    "Fan",
    "NotFanoError",
    "anticanonical_degree",
    "dual_variety",
    "irrelevant_ideal",
    "is_complete",
    "is_fano",
    "is_smooth",
    "validate_fan",
    "FanFileError",
    "parse_fan_file",
    "parse_fan_text",
    "write_fan_file",
    "FIXTURE_NAMES",
    "fixture",
    "CompleteIntersectionSpec",
    "GradedPolyRingSpec",
    "ci_dimension",
    "quotient_dim_oracle",
    "IntegerMatrix",
    "hermite_normal_form",
    "integer_kernel",
    "smith_normal_form",
    "BlowupModel",
    "DivisorClassX",
    "cox3_spec",
    "cox4_spec",
    "SquarefreeMonomialIdeal",
    "minimal_primes",
    "vanishing_codim",
    "LatticePolytope",
    "RationalCone",
    "normalized_volume",
    "polar_dual",
]

__version__ = "0.1.0"
