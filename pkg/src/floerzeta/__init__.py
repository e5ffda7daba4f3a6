"""Exact fixed point invariants, Floer homology dimensions and zeta functions
for surface mapping classes in Thurston normal form."""

from .exact_algebra import (
    IntMatrix,
    IntPolynomial,
    ProductForm,
    QuadraticSurd,
    RationalFunction,
    TruncatedSeries,
)
from .asymptotics import asymptotic_invariant, entropy_lower_bound, growth_rate, spectral_radius_2x2
from .fixed_points import (
    HomologyAction,
    identity_action,
    lefschetz_number,
    lefschetz_zeta_input,
    nielsen_number,
    torus_action,
)
from .floer import GradedDimension, floer_dimension, hf_iterates
from .io import InputError, parse_document, parse_input, render
from .surface import (
    FiniteTypeClassDesc,
    PeriodicClassDesc,
    PseudoAnosovClassDesc,
    ReducibleClassDesc,
    TorusAutoDesc,
    validate,
)
from .zeta import chi_zeta, floer_zeta_periodic, lefschetz_zeta

__version__ = "0.1.0"
