"""Bounds on the second Hankel determinant ``|a2 a4 - a3^2|`` for bi-univalent
functions defined by subordination, with numerical checks of the bound."""

from .series import TruncatedSeries, multiply, compose, invert_coefficients, hankel, fekete_szego
from .minda import PhiSpec, ClassParams, resolve_phi, parse_phi, operator_weight, apply_operator
from .coeffs import (SchwarzTuple, CoefficientTriple, schwarz_tail, coefficients_from_schwarz,
                     pipeline_residuals, second_hankel)
from .bound import (TTerms, BoundBreakdown, t_terms, surface_F, pqr, theorem_bound,
                    corollary_bound, corollary_specialization, verify_max_structure)
from .falsify import FalsifyConfig, FalsifyReport, falsify

__version__ = "0.1.0"
