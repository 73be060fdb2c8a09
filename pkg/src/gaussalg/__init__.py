"""Exact signal processing on Gaussian-family functions with rational parameters."""

from .errors import (
    DivergentIntegralError,
    DomainError,
    GenerationExhaustedError,
    ParseError,
    UnsupportedDomainError,
)
from .mix import GaussMix, struct_eq
from .poly import GaussPoly, Poly, phi
from .quad import GaussQuad, gauss
from .scalars import Amplitude, ComplexRational
from .simple import NormValue, SimpleGauss

__all__ = [
    "Amplitude",
    "ComplexRational",
    "DivergentIntegralError",
    "DomainError",
    "GaussMix",
    "GaussPoly",
    "GaussQuad",
    "GenerationExhaustedError",
    "NormValue",
    "ParseError",
    "Poly",
    "SimpleGauss",
    "UnsupportedDomainError",
    "gauss",
    "phi",
    "struct_eq",
]
