"""Nielsen numbers, Lefschetz numbers and fixed point indices.

Every supported description gets a Lefschetz number computed from index or
Euler-characteristic bookkeeping, which the Floer layer never calls; the two
are compared in the test suite (the Euler characteristic of HF equals L).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .exact_algebra import IntMatrix, divisors, mat_pow
from .surface import (
    FiniteTypeClassDesc,
    FixedComponent,
    FixedPointDatum,
    MappingClassDescription,
    PeriodicClassDesc,
    PseudoAnosovClassDesc,
    ReducibleClassDesc,
    TorusAutoDesc,
    euler_characteristic,
    variant_name,
)


class NotIterableError(ValueError):
    """Per-iterate data cannot be derived for this description type."""


@dataclass(frozen=True)
class IterateSequence:
    """Integer invariant of the iterates phi^1 .. phi^n_max."""

    label: str
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @classmethod
    def from_function(cls, label: str, fn, n_max: int) -> IterateSequence:
        if n_max < 1:
            raise ValueError("n_max must be >= 1")
        return cls(label, tuple(fn(n) for n in range(1, n_max + 1)))

    @property
    def n_max(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise IndexError(f"iterate {n} outside 1..{len(self.values)}")
        return self.values[n - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def require(self, n: int) -> None:
        if len(self.values) < n:
            raise ValueError(
                f"{self.label} sequence has {len(self.values)} terms, {n} are needed"
            )


# --------------------------------------------------------------------------
# torus automorphisms


def _check_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"iterate must be >= 1, got {n}")


def torus_lefschetz(A: IntMatrix, n: int = 1) -> int:
    """L(phi^n) = det(I - A^n) for the linear torus map A."""
    _check_positive(n)
    if A.dim != 2:
        raise ValueError("torus map must be 2x2")
    return (IntMatrix.identity(2) - mat_pow(A, n)).det()


def is_anosov(A: IntMatrix) -> bool:
    return A.dim == 2 and A.det() == 1 and abs(A.trace()) > 2


def torus_nielsen(A: IntMatrix, n: int = 1) -> int:
    """N(phi^n) = |det(I - A^n)|, valid for hyperbolic A."""
    if not is_anosov(A):
        raise ValueError(f"{A!r} is not Anosov (need det 1 and |trace| > 2)")
    return abs(torus_lefschetz(A, n))


# --------------------------------------------------------------------------
# periodic maps


def _iterate_is_identity(desc: PeriodicClassDesc, n: int) -> bool:
    return n % desc.period == 0


def periodic_fix_count(desc: PeriodicClassDesc, n: int) -> int:
    """#Fix(phi^n) for phi^n != id: points whose least period divides n."""
    _check_positive(n)
    if _iterate_is_identity(desc, n):
        raise ValueError(f"phi^{n} is the identity; its fixed set is the whole surface")
    return sum(desc.count(d) for d in divisors(gcd(n, desc.period)))


def periodic_nielsen(desc: PeriodicClassDesc, n: int = 1) -> int:
    _check_positive(n)
    if _iterate_is_identity(desc, n):
        # one fixed point class, the whole surface, with index chi(M)
        return 1 if euler_characteristic(desc.surface) != 0 else 0
    return periodic_fix_count(desc, n)


def periodic_lefschetz(desc: PeriodicClassDesc, n: int = 1) -> int:
    _check_positive(n)
    if _iterate_is_identity(desc, n):
        return euler_characteristic(desc.surface)
    return lefschetz_from_indices([1] * periodic_fix_count(desc, n))


# --------------------------------------------------------------------------
# pseudo-Anosov fixed point data


def fixed_point_index(fp: FixedPointDatum) -> int:
    if fp.kind == "regular":
        return fp.index
    if fp.rotated:
        return 1
    return 1 - fp.prongs


def pa_index_list(fixed_points: Iterable[FixedPointDatum]) -> list[int]:
    """Index of each fixed point; each is its own essential class."""
    return [fixed_point_index(fp) for fp in fixed_points]


def lefschetz_from_indices(indices: Iterable[int]) -> int:
    return sum(indices)


def pa_nielsen(fixed_points: Sequence[FixedPointDatum]) -> int:
    return len(fixed_points)


# --------------------------------------------------------------------------
# finite-type and reducible maps
#
# A fixed component is a single fixed point class.  Its index is its Euler
# characteristic, lowered by the prong count of every boundary that meets a
# pseudo-Anosov piece (plus one more for the puncture of a b-type piece).


def component_index(comp: FixedComponent) -> int:
    chi = euler_characteristic(comp.surface)
    pa = comp.pa_boundaries
    if not pa:
        return chi
    q = sum(b.prongs for b in pa)
    if len(pa) == 1:
        return chi - 1 - (q - 1)
    return chi - q


def finite_type_lefschetz(desc: FiniteTypeClassDesc) -> int:
    return sum(component_index(c) for c in desc.fixed_components) + desc.periodic_part_fixed_points


def finite_type_nielsen(desc: FiniteTypeClassDesc) -> int:
    essential = sum(1 for c in desc.fixed_components if component_index(c) != 0)
    return essential + desc.periodic_part_fixed_points


def reducible_lefschetz(desc: ReducibleClassDesc) -> int:
    total = sum(component_index(c) for c in desc.fixed_components)
    total += sum(desc.periodic_components)
    for piece in desc.pa_components:
        total += lefschetz_from_indices(pa_index_list(piece.fixed_points))
    return total


def reducible_nielsen(desc: ReducibleClassDesc) -> int:
    n = sum(1 for c in desc.fixed_components if component_index(c) != 0)
    n += sum(desc.periodic_components)
    n += sum(pa_nielsen(p.fixed_points) for p in desc.pa_components)
    return n


# --------------------------------------------------------------------------
# dispatch


def lefschetz_number(desc: MappingClassDescription, n: int = 1) -> int:
    """L(phi^n).  Only periodic and torus classes are iterable; others need n = 1."""
    if isinstance(desc, TorusAutoDesc):
        return torus_lefschetz(desc.matrix, n)
    if isinstance(desc, PeriodicClassDesc):
        return periodic_lefschetz(desc, n)
    if n != 1:
        raise NotIterableError(
            f"iterates of a {variant_name(desc)} description are not derivable; supply per-iterate data"
        )
    if isinstance(desc, PseudoAnosovClassDesc):
        return lefschetz_from_indices(pa_index_list(desc.fixed_points))
    if isinstance(desc, FiniteTypeClassDesc):
        return finite_type_lefschetz(desc)
    if isinstance(desc, ReducibleClassDesc):
        return reducible_lefschetz(desc)
    raise TypeError(f"unsupported description {desc!r}")


def nielsen_number(desc: MappingClassDescription, n: int = 1) -> int:
    """N(phi^n), same iterability rules as :func:`lefschetz_number`."""
    if isinstance(desc, TorusAutoDesc):
        return torus_nielsen(desc.matrix, n)
    if isinstance(desc, PeriodicClassDesc):
        return periodic_nielsen(desc, n)
    if n != 1:
        raise NotIterableError(
            f"iterates of a {variant_name(desc)} description are not derivable; supply per-iterate data"
        )
    if isinstance(desc, PseudoAnosovClassDesc):
        return pa_nielsen(desc.fixed_points)
    if isinstance(desc, FiniteTypeClassDesc):
        return finite_type_nielsen(desc)
    if isinstance(desc, ReducibleClassDesc):
        return reducible_nielsen(desc)
    raise TypeError(f"unsupported description {desc!r}")


def is_iterable(desc: MappingClassDescription) -> bool:
    return isinstance(desc, (PeriodicClassDesc, TorusAutoDesc))


def nielsen_sequence(desc: MappingClassDescription, n_max: int) -> IterateSequence:
    return IterateSequence.from_function("N", lambda n: nielsen_number(desc, n), n_max)


def lefschetz_sequence(desc: MappingClassDescription, n_max: int) -> IterateSequence:
    return IterateSequence.from_function("L", lambda n: lefschetz_number(desc, n), n_max)


# --------------------------------------------------------------------------
# homology actions


class InvalidActionError(ValueError):
    pass


@dataclass(frozen=True)
class HomologyAction:
    """Induced maps on H_0, H_1, H_2 of a closed connected oriented surface."""

    h0: IntMatrix
    h1: IntMatrix
    h2: IntMatrix

    @property
    def genus(self) -> int:
        return self.h1.dim // 2

    def degree(self, k: int) -> IntMatrix:
        return (self.h0, self.h1, self.h2)[k]

    def lefschetz(self, n: int = 1) -> int:
        """sum_k (-1)^k tr(phi_{*k}^n)."""
        _check_positive(n)
        return sum((-1) ** k * mat_pow(self.degree(k), n).trace() for k in range(3))

    def lefschetz_sequence(self, n_max: int) -> IterateSequence:
        return IterateSequence.from_function("L", self.lefschetz, n_max)


def lefschetz_zeta_input(action: Sequence) -> HomologyAction:
    """Validate per-degree matrices [phi_*0, phi_*1, phi_*2]."""
    if len(action) != 3:
        raise InvalidActionError("homology action needs exactly three matrices (degrees 0, 1, 2)")
    mats = [m if isinstance(m, IntMatrix) else IntMatrix(m) for m in action]
    for k in (0, 2):
        if mats[k] != IntMatrix([[1]]):
            raise InvalidActionError(
                f"phi_*{k} must be the 1x1 identity for an orientation-preserving map of a connected surface"
            )
    if mats[1].dim % 2:
        raise InvalidActionError("phi_*1 must be 2g x 2g")
    return HomologyAction(*mats)


def torus_action(A: IntMatrix) -> HomologyAction:
    return lefschetz_zeta_input([IntMatrix([[1]]), A, IntMatrix([[1]])])


def identity_action(genus: int) -> HomologyAction:
    return lefschetz_zeta_input([IntMatrix([[1]]), IntMatrix.identity(2 * genus), IntMatrix([[1]])])
