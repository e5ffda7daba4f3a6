"""Graded dimensions of symplectic Floer homology from normal-form data.

No chain complex is ever built.  Each class type has a closed form in terms of
fixed point data and relative homology of the fixed set; this module assembles
those forms and assigns Z/2 degrees.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_algebra import IntMatrix
from .fixed_points import (
    IterateSequence,
    NotIterableError,
    fixed_point_index,
    is_anosov,
    periodic_fix_count,
    torus_lefschetz,
)
from .surface import (
    CompactSurface,
    FiniteTypeClassDesc,
    FixedComponent,
    FixedPointDatum,
    MappingClassDescription,
    PeriodicClassDesc,
    PseudoAnosovClassDesc,
    ReducibleClassDesc,
    TorusAutoDesc,
    absolute_homology_dims,
    relative_homology_dims,
    variant_name,
)


@dataclass(frozen=True)
class GradedDimension:
    even: int = 0
    odd: int = 0

    def __post_init__(self):
        if self.even < 0 or self.odd < 0:
            raise ValueError(f"negative dimension ({self.even}, {self.odd})")

    @classmethod
    def from_betti(cls, dims: tuple[int, int, int]) -> GradedDimension:
        d0, d1, d2 = dims
        return cls(d0 + d2, d1)

    @property
    def total(self) -> int:
        return self.even + self.odd

    @property
    def euler(self) -> int:
        return self.even - self.odd

    def __add__(self, other: GradedDimension) -> GradedDimension:
        return GradedDimension(self.even + other.even, self.odd + other.odd)

    def __iter__(self):
        yield self.even
        yield self.odd


ZERO = GradedDimension(0, 0)


def hf_euler(gd: GradedDimension) -> int:
    return gd.even - gd.odd


def hf_periodic(desc: PeriodicClassDesc, n: int = 1) -> GradedDimension:
    if n < 1:
        raise ValueError("iterate must be >= 1")
    if n % desc.period == 0:
        return GradedDimension.from_betti(absolute_homology_dims(desc.surface))
    # every fixed point has index +1, so every generator sits in even degree
    return GradedDimension(periodic_fix_count(desc, n), 0)


def _fixed_component_hf(comp: FixedComponent) -> GradedDimension:
    return GradedDimension.from_betti(relative_homology_dims(comp.surface, comp.plus_count))


def hf_finite_type(desc: FiniteTypeClassDesc) -> GradedDimension:
    total = GradedDimension(desc.periodic_part_fixed_points, 0)
    for comp in desc.fixed_components:
        total += _fixed_component_hf(comp)
    return total


def hf_torus_anosov(A: IntMatrix) -> GradedDimension:
    if not is_anosov(A):
        raise ValueError(f"{A!r} is not Anosov (need det 1 and |trace| > 2)")
    d = torus_lefschetz(A, 1)
    # each fixed point has sign det(I - A), the same for all of them
    return GradedDimension(d, 0) if d > 0 else GradedDimension(0, -d)


def _pa_point_hf(fp: FixedPointDatum) -> GradedDimension:
    ind = fixed_point_index(fp)
    return GradedDimension(ind, 0) if ind > 0 else GradedDimension(0, -ind)


def hf_pseudo_anosov(fixed_points) -> GradedDimension:
    """|Ind(x)| generators per fixed point, graded by the sign of the index."""
    total = ZERO
    for fp in fixed_points:
        total += _pa_point_hf(fp)
    return total


class ReducibleAssemblyError(ValueError):
    pass


def _b_component_hf(comp: FixedComponent) -> GradedDimension:
    (pa,) = comp.pa_boundaries
    # the boundary meeting the pA piece goes on the plus side; one puncture
    plus = comp.plus_count + 1
    rel = relative_homology_dims(comp.surface, plus, puncture_count=1)
    return GradedDimension.from_betti(rel) + GradedDimension(0, pa.prongs - 1)


def c_component_relative_dims(comp: FixedComponent, plus_pa: int = 1) -> tuple[int, int, int]:
    """Relative homology of a c-type component with ``plus_pa`` of its pA
    boundaries on the plus side (1 <= plus_pa <= #pA boundaries - 1)."""
    k = len(comp.pa_boundaries)
    if not 1 <= plus_pa <= k - 1:
        raise ReducibleAssemblyError(
            "c-type components need at least one pA boundary on each side"
        )
    return relative_homology_dims(comp.surface, comp.plus_count + plus_pa)


def _c_component_hf(comp: FixedComponent) -> GradedDimension:
    q = sum(b.prongs for b in comp.pa_boundaries)
    return GradedDimension.from_betti(c_component_relative_dims(comp)) + GradedDimension(0, q)


def hf_reducible(desc: ReducibleClassDesc) -> GradedDimension:
    total = ZERO
    for i, comp in enumerate(desc.fixed_components):
        for lab in comp.pa_boundaries:
            if not 0 <= lab.component < len(desc.pa_components):
                raise ReducibleAssemblyError(
                    f"fixed_components[{i}] meets undeclared pA component {lab.component}"
                )
        kind = comp.kind()
        if kind == "a":
            total += _fixed_component_hf(comp)
        elif kind == "b":
            total += _b_component_hf(comp)
        else:
            total += _c_component_hf(comp)
    lef_periodic = sum(desc.periodic_components)
    if lef_periodic < 0:
        raise ReducibleAssemblyError("periodic pieces must have non-negative Lefschetz number")
    total += GradedDimension(lef_periodic, 0)
    for piece in desc.pa_components:
        total += hf_pseudo_anosov(piece.fixed_points)
    return total


def floer_dimension(desc: MappingClassDescription, n: int = 1) -> GradedDimension:
    """HF of phi^n; n > 1 only for periodic and torus classes."""
    if isinstance(desc, PeriodicClassDesc):
        return hf_periodic(desc, n)
    if isinstance(desc, TorusAutoDesc):
        if not desc.anosov:
            raise ValueError("only Anosov torus maps are supported")
        return hf_torus_anosov(desc.matrix if n == 1 else desc.matrix ** n)
    if n != 1:
        raise NotIterableError(
            f"iterates of a {variant_name(desc)} description are not derivable; supply per-iterate data"
        )
    if isinstance(desc, FiniteTypeClassDesc):
        return hf_finite_type(desc)
    if isinstance(desc, PseudoAnosovClassDesc):
        return hf_pseudo_anosov(desc.fixed_points)
    if isinstance(desc, ReducibleClassDesc):
        return hf_reducible(desc)
    raise TypeError(f"unsupported description {desc!r}")


def hf_iterates(desc: MappingClassDescription, n_max: int) -> IterateSequence:
    """n -> dim HF(phi^n) for n = 1..n_max."""
    if not isinstance(desc, (PeriodicClassDesc, TorusAutoDesc)):
        raise NotIterableError(
            f"{variant_name(desc)} descriptions are not auto-iterable; supply a dim_hf sequence"
        )
    return IterateSequence.from_function("dimHF", lambda n: floer_dimension(desc, n).total, n_max)


def hf_euler_iterates(desc: MappingClassDescription, n_max: int) -> IterateSequence:
    """n -> chi(HF(phi^n)), the per-iterate Euler characteristics."""
    if not isinstance(desc, (PeriodicClassDesc, TorusAutoDesc)):
        raise NotIterableError(f"{variant_name(desc)} descriptions are not auto-iterable")
    return IterateSequence.from_function("chiHF", lambda n: floer_dimension(desc, n).euler, n_max)


def identity_hf(genus: int) -> GradedDimension:
    return GradedDimension.from_betti(absolute_homology_dims(CompactSurface(genus, 0)))
