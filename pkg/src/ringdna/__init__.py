"""Cyclic DNA codes over the ring F2+uF2+vF2+uvF2."""

from .codes import (
    InvalidSpecError,
    R1CodeSpec,
    RCodeSpec,
    contains,
    enumerate_code,
    validate_r1_spec,
    validate_r_spec,
)
from .constraints import check_code, is_reverse_complement, is_reversible_structural
from .dna import phi, phi_inverse, quaternary_decimal, zeta
from .factor import divisors_xn_minus_1, factor_xn_minus_1
from .poly import BinaryPoly, R1Poly, RPoly, parse_binary, parse_r1poly, parse_rpoly
from .ring import ELEMENTS, RElement, complement, gray_map, parse_element, sigma
from .sigma import SigmaSetSpec, build_sigma_set, span_enumerate
from .words import CodeWords, EnumerationBoundError

__version__ = "0.1.0"

__all__ = [
    "BinaryPoly",
    "CodeWords",
    "ELEMENTS",
    "EnumerationBoundError",
    "InvalidSpecError",
    "R1CodeSpec",
    "R1Poly",
    "RCodeSpec",
    "RElement",
    "RPoly",
    "SigmaSetSpec",
    "build_sigma_set",
    "check_code",
    "complement",
    "contains",
    "divisors_xn_minus_1",
    "enumerate_code",
    "factor_xn_minus_1",
    "gray_map",
    "is_reverse_complement",
    "is_reversible_structural",
    "parse_binary",
    "parse_element",
    "parse_r1poly",
    "parse_rpoly",
    "phi",
    "phi_inverse",
    "quaternary_decimal",
    "sigma",
    "span_enumerate",
    "validate_r1_spec",
    "validate_r_spec",
    "zeta",
]
