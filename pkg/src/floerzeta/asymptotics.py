"""Growth rates of iterate sequences, the asymptotic Floer invariant, and
entropy lower bounds.

Exact values (rationals and quadratic surds) are kept wherever a closed form
exists; floats appear only in estimates and at the reporting boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .exact_algebra import IntMatrix, IntPolynomial, QuadraticSurd
from .fixed_points import IterateSequence
from .surface import (
    FiniteTypeClassDesc,
    MappingClassDescription,
    PeriodicClassDesc,
    PseudoAnosovClassDesc,
    ReducibleClassDesc,
    TorusAutoDesc,
    variant_name,
)

ExactValue = Union[Fraction, QuadraticSurd]


class ComplexSpectrumError(ValueError):
    """The matrix has non-real eigenvalues (an elliptic, non-Anosov map)."""


@dataclass(frozen=True)
class GrowthEstimate:
    value: float
    mode: str  # "exact" or "estimated"
    exact: ExactValue | None = None
    defining_polynomial: IntPolynomial | None = None
    window: tuple[int, int] | None = None
    # "value" when this is the growth rate itself, "lower_bound" when only a bound
    bound: str = "value"
    diagnostics: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"growth rates are >= 1, got {self.value}")

    @property
    def log_value(self) -> float:
        return math.log(self.value)

    @classmethod
    def exactly(cls, x: ExactValue, bound: str = "value") -> GrowthEstimate:
        if isinstance(x, QuadraticSurd) and x.is_rational:
            x = x.as_fraction()
        if isinstance(x, QuadraticSurd):
            poly = x.defining_polynomial()
        else:
            x = Fraction(x)
            poly = IntPolynomial([-x.numerator, x.denominator])
        return cls(float(x), "exact", exact=x, defining_polynomial=poly, bound=bound)

    def exact_str(self) -> str | None:
        return None if self.exact is None else str(self.exact)


ONE = GrowthEstimate.exactly(Fraction(1))


def _tail(window: tuple[int, int]) -> range:
    lo, hi = window
    return range(lo + (hi - lo) // 2, hi + 1)


def _periodic_period(vals: list[int]) -> int | None:
    """Smallest p with vals[i + p] == vals[i], seen at least twice over."""
    for p in range(1, len(vals) // 2 + 1):
        if all(vals[i] == vals[i + p] for i in range(len(vals) - p)):
            return p
    return None


def _root_sup(seq: IterateSequence, ns) -> float:
    best = 0.0
    for n in ns:
        a = abs(seq[n])
        if a:
            best = max(best, math.exp(math.log(a) / n))
    return best


def _log_slope(seq: IterateSequence, ns) -> float | None:
    pts = [(n, math.log(abs(seq[n]))) for n in ns if seq[n] != 0]
    if len(pts) < 2:
        return None
    xbar = sum(x for x, _ in pts) / len(pts)
    ybar = sum(y for _, y in pts) / len(pts)
    sxx = sum((x - xbar) ** 2 for x, _ in pts)
    sxy = sum((x - xbar) * (y - ybar) for x, y in pts)
    return sxy / sxx


def growth_rate(
    seq: IterateSequence, window: tuple[int, int], method: str = "slope"
) -> GrowthEstimate:
    """Estimate max{1, limsup |a_n|^(1/n)} from the upper half of ``window``.

    A tail that repeats with a fixed period is bounded, so its growth rate is
    exactly 1.  Otherwise ``method="slope"`` fits log|a_n| linearly in n over
    the tail (insensitive to constant factors), and ``method="root"`` takes the
    largest |a_n|^(1/n) there.
    """
    lo, hi = window
    if lo < 1 or hi < lo:
        raise ValueError(f"empty or invalid window {window}")
    seq.require(hi)
    ns = _tail(window)
    vals = [seq[n] for n in ns]
    root = _root_sup(seq, ns)
    diag = {"root_sup": root, "tail": (ns.start, ns.stop - 1)}

    period = _periodic_period(vals)
    if period is not None:
        diag["tail_period"] = period
        return GrowthEstimate(1.0, "exact", exact=Fraction(1),
                              defining_polynomial=IntPolynomial([-1, 1]),
                              window=(lo, hi), diagnostics=diag)

    if method == "root":
        value = root
    elif method == "slope":
        slope = _log_slope(seq, ns)
        value = root if slope is None else math.exp(slope)
        diag["log_slope"] = slope
    else:
        raise ValueError(f"unknown method {method!r}")
    return GrowthEstimate(max(1.0, value), "estimated", window=(lo, hi), diagnostics=diag)


def spectral_radius_2x2(A: IntMatrix) -> GrowthEstimate:
    """Exact dominant eigenvalue modulus (|tr| + sqrt(tr^2 - 4 det)) / 2."""
    if A.dim != 2:
        raise ValueError("need a 2x2 matrix")
    det, tr = A.det(), A.trace()
    if det not in (1, -1):
        raise ValueError(f"determinant must be +-1, got {det}")
    disc = tr * tr - 4 * det
    if disc < 0:
        raise ComplexSpectrumError(f"{A!r} has complex eigenvalues (not Anosov)")
    return GrowthEstimate.exactly(QuadraticSurd(abs(tr), 1, disc, 2))


def _stretch_exact(lam) -> ExactValue | float:
    if isinstance(lam, (QuadraticSurd, Fraction, int)):
        return lam if isinstance(lam, QuadraticSurd) else Fraction(lam)
    return float(lam)


def _lower_bound(lam) -> GrowthEstimate:
    lam = _stretch_exact(lam)
    if isinstance(lam, float):
        return GrowthEstimate(lam, "estimated", bound="lower_bound")
    return GrowthEstimate.exactly(lam, bound="lower_bound")


def asymptotic_invariant(
    desc: MappingClassDescription,
    dim_hf: IterateSequence | None = None,
    window: tuple[int, int] | None = None,
) -> GrowthEstimate:
    """Growth rate of dim HF(phi^n).

    Periodic and finite-type classes give exactly 1, Anosov torus maps their
    spectral radius.  For classes with pseudo-Anosov parts a supplied dim HF
    sequence is estimated; without one, the largest stretch factor is reported
    as a lower bound only.
    """
    if isinstance(desc, (PeriodicClassDesc, FiniteTypeClassDesc)):
        return ONE
    if isinstance(desc, TorusAutoDesc):
        return spectral_radius_2x2(desc.matrix)
    if isinstance(desc, ReducibleClassDesc) and not desc.pa_components:
        return ONE
    if dim_hf is not None:
        return growth_rate(dim_hf, window or (1, dim_hf.n_max))
    if isinstance(desc, PseudoAnosovClassDesc):
        lams = [desc.stretch_factor] if desc.stretch_factor is not None else []
    elif isinstance(desc, ReducibleClassDesc):
        lams = [p.stretch_factor for p in desc.pa_components]
        if any(lam is None for lam in lams):
            lams = []
    else:
        raise TypeError(f"unsupported description {desc!r}")
    if not lams:
        raise ValueError(
            f"{variant_name(desc)} description needs a dim_hf sequence or stretch factors"
        )
    return _lower_bound(max(lams, key=float))


@dataclass(frozen=True)
class EntropyBound:
    """Lower bound for topological entropy, i.e. log of a growth rate."""

    value: float
    mode: str
    growth: GrowthEstimate | None = None
    exact: str | None = None


def entropy_lower_bound(
    N_seq: IterateSequence | None,
    window: tuple[int, int] | None = None,
    stretch_factor=None,
    method: str = "root",
) -> EntropyBound:
    """log of the Nielsen growth rate, or exactly log(lambda) when lambda is known.

    The default ``method="root"`` never exceeds log(lambda) for Nielsen
    sequences bounded by lambda^n, which a slope fit on a short window can.
    """
    if stretch_factor is not None:
        lam = _stretch_exact(stretch_factor)
        if float(lam) <= 1:
            raise ValueError("stretch factor must exceed 1")
        mode = "estimated" if isinstance(lam, float) else "exact"
        return EntropyBound(math.log(float(lam)), mode, exact=f"log({lam})")
    if N_seq is None:
        raise ValueError("need a Nielsen sequence or a stretch factor")
    g = growth_rate(N_seq, window or (1, N_seq.n_max), method=method)
    exact = None
    if g.mode == "exact":
        exact = "0" if g.exact == 1 else f"log({g.exact})"
    return EntropyBound(g.log_value, g.mode, growth=g, exact=exact)
