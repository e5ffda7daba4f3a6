"""Symplectic and Lefschetz zeta functions.

Closed forms (a rational function for the Lefschetz/Euler-characteristic zeta
function, a product of radicals for the dimension zeta function of a periodic
map) sit next to their defining exp-series, which serve as oracles.
"""

from __future__ import annotations

from fractions import Fraction

from .exact_algebra import (
    IntPolynomial,
    ProductForm,
    RationalFunction,
    TruncatedSeries,
    charpoly_reversed,
    divisors,
    mobius,
    rational_to_series,
    series_exp,
)
from .fixed_points import HomologyAction, IterateSequence
from .floer import hf_periodic
from .surface import MappingClassDescription, PeriodicClassDesc


def lefschetz_zeta(action: HomologyAction) -> RationalFunction:
    """prod_k det(I - phi_{*k} z)^{(-1)^{k+1}}."""
    return RationalFunction(
        charpoly_reversed(action.h1),
        charpoly_reversed(action.h0) * charpoly_reversed(action.h2),
    )


def chi_zeta(desc: MappingClassDescription, action: HomologyAction) -> RationalFunction:
    """Euler-characteristic zeta function of HF; it coincides with the Lefschetz zeta function."""
    genus = getattr(desc, "genus", None)
    if genus is not None and action.genus != genus:
        raise ValueError(f"homology action has genus {action.genus}, description has genus {genus}")
    return lefschetz_zeta(action)


def exp_series(seq: IterateSequence, order: int) -> TruncatedSeries:
    """exp(sum_{n=1}^{order} a_n z^n / n)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    seq.require(order)
    return series_exp(TruncatedSeries([0] + [Fraction(seq[n], n) for n in range(1, order + 1)], order))


def lefschetz_series_oracle(L_seq: IterateSequence, order: int) -> TruncatedSeries:
    return exp_series(L_seq, order)


def floer_zeta_series_oracle(N_seq: IterateSequence, order: int) -> TruncatedSeries:
    return exp_series(N_seq, order)


def mobius_exponents(desc: PeriodicClassDesc) -> dict[int, int]:
    """P(d) = sum_{e | d} mu(e) N_{d/e} for each divisor d of the period."""
    m = desc.period
    N = {d: hf_periodic(desc, d).total for d in divisors(m)}
    return {d: sum(mobius(e) * N[d // e] for e in divisors(d)) for d in divisors(m)}


def floer_zeta_periodic(desc: PeriodicClassDesc) -> ProductForm:
    """prod_{d | m} (1 - z^d)^{-P(d)/d}."""
    # exponents stay rational: d need not divide P(d) (the d = m term)
    P = mobius_exponents(desc)
    return ProductForm((d, Fraction(-p, d)) for d, p in P.items())


def gromov_series_from_alexander(alexander: IntPolynomial, order: int) -> TruncatedSeries:
    """Expansion of A_K(t) / (1 - t)^2."""
    if alexander[0] == 0:
        raise ValueError("Alexander polynomial must have a nonzero constant term")
    return rational_to_series(RationalFunction(alexander, IntPolynomial([1, -1]) ** 2), order)
