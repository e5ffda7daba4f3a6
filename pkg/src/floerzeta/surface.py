"""Compact surfaces, their Z/2 homology, and mapping-class descriptions.

A mapping class reaches this library already in Thurston normal form, as one
of five description types.  ``validate`` checks the structural rules of each
type and returns the violations as data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .exact_algebra import IntMatrix, QuadraticSurd, divisors

PLUS_TWIST = "plus_twist"
MINUS_TWIST = "minus_twist"


def _freeze(obj, *names: str) -> None:
    for name in names:
        value = getattr(obj, name)
        if not isinstance(value, tuple):
            object.__setattr__(obj, name, tuple(value))


@dataclass(frozen=True)
class CompactSurface:
    genus: int
    boundary_count: int = 0

    @property
    def euler_char(self) -> int:
        return euler_characteristic(self)


def euler_characteristic(S: CompactSurface) -> int:
    return 2 - 2 * S.genus - S.boundary_count


def absolute_homology_dims(S: CompactSurface) -> tuple[int, int, int]:
    """Z/2 Betti numbers (d0, d1, d2) of a connected compact surface."""
    g, b = S.genus, S.boundary_count
    if b == 0:
        return (1, 2 * g, 1)
    return (1, 2 * g + b - 1, 0)


def relative_homology_dims(
    S: CompactSurface, plus_count: int, puncture_count: int = 0
) -> tuple[int, int, int]:
    """Z/2 Betti numbers of (S', B) where S' is S with extra punctures and B is
    a union of ``plus_count`` of the original boundary circles.

    Punctures behave like boundary circles that never belong to B.
    """
    if plus_count < 0 or puncture_count < 0:
        raise ValueError("counts must be non-negative")
    if plus_count > S.boundary_count:
        raise ValueError(
            f"plus_count {plus_count} exceeds the {S.boundary_count} available boundary circles"
        )
    h = S.genus
    b = S.boundary_count + puncture_count
    bp = plus_count
    if bp == 0:
        return (1, 2 * h, 1) if b == 0 else (1, 2 * h + b - 1, 0)
    if bp < b:
        return (0, 2 * h + b - 2, 0)
    return (0, 2 * h + b - 1, 1)


# --------------------------------------------------------------------------
# description types


@dataclass(frozen=True)
class PaAdjacent:
    """Boundary circle glued to a pseudo-Anosov piece along ``prongs`` prongs."""

    prongs: int
    component: int = 0


BoundaryLabel = Union[str, PaAdjacent]


@dataclass(frozen=True)
class FixedComponent:
    """Connected piece of the fixed set M_id, genus plus labelled boundary."""

    genus: int
    boundary: tuple[BoundaryLabel, ...] = ()

    def __post_init__(self):
        _freeze(self, "boundary")

    @property
    def surface(self) -> CompactSurface:
        return CompactSurface(self.genus, len(self.boundary))

    @property
    def plus_count(self) -> int:
        return sum(1 for lab in self.boundary if lab == PLUS_TWIST)

    @property
    def pa_boundaries(self) -> tuple[PaAdjacent, ...]:
        return tuple(lab for lab in self.boundary if isinstance(lab, PaAdjacent))

    def kind(self) -> str:
        """'a', 'b' or 'c' by how many boundary circles meet pA pieces (0, 1, >=2)."""
        k = len(self.pa_boundaries)
        return "a" if k == 0 else ("b" if k == 1 else "c")


@dataclass(frozen=True)
class Annulus:
    sign: str = "+"
    flipped: bool = False


@dataclass(frozen=True)
class FixedPointDatum:
    """A fixed point of a pseudo-Anosov map: regular with index +-1, or a
    p-pronged singularity whose prongs are either fixed or rotated."""

    kind: str
    index: int | None = None
    prongs: int | None = None
    rotated: bool = False

    @classmethod
    def regular(cls, index: int) -> FixedPointDatum:
        return cls("regular", index=index)

    @classmethod
    def singular(cls, prongs: int, rotated: bool = False) -> FixedPointDatum:
        return cls("singular", prongs=prongs, rotated=rotated)


StretchFactor = Union[Fraction, QuadraticSurd, float]


@dataclass(frozen=True)
class PeriodicClassDesc:
    genus: int
    period: int
    # least period d -> number of points with that least period, for proper divisors d
    least_period_counts: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "least_period_counts", {int(d): int(c) for d, c in self.least_period_counts.items()}
        )

    @property
    def surface(self) -> CompactSurface:
        return CompactSurface(self.genus, 0)

    def count(self, d: int) -> int:
        return self.least_period_counts.get(d, 0)


@dataclass(frozen=True)
class FiniteTypeClassDesc:
    genus: int
    fixed_components: tuple[FixedComponent, ...] = ()
    periodic_part_fixed_points: int = 0
    annuli: tuple[Annulus, ...] = ()
    homotopic_annuli: tuple[tuple[int, int], ...] = ()
    # optional L(phi | M \ M_id) supplied for cross-checking
    lefschetz_off_identity: int | None = None

    def __post_init__(self):
        _freeze(self, "fixed_components", "annuli")
        object.__setattr__(self, "homotopic_annuli", tuple(tuple(p) for p in self.homotopic_annuli))

    @property
    def surface(self) -> CompactSurface:
        return CompactSurface(self.genus, 0)


@dataclass(frozen=True)
class TorusAutoDesc:
    matrix: IntMatrix
    anosov: bool = True

    @property
    def surface(self) -> CompactSurface:
        return CompactSurface(1, 0)

    @property
    def genus(self) -> int:
        return 1


@dataclass(frozen=True)
class PseudoAnosovClassDesc:
    genus: int
    fixed_points: tuple[FixedPointDatum, ...] = ()
    stretch_factor: StretchFactor | None = None

    def __post_init__(self):
        _freeze(self, "fixed_points")

    @property
    def surface(self) -> CompactSurface:
        return CompactSurface(self.genus, 0)


@dataclass(frozen=True)
class PseudoAnosovPiece:
    """Fixed-point data of one pseudo-Anosov component of a reducible map."""

    fixed_points: tuple[FixedPointDatum, ...] = ()
    stretch_factor: StretchFactor | None = None

    def __post_init__(self):
        _freeze(self, "fixed_points")


@dataclass(frozen=True)
class ReducibleClassDesc:
    genus: int
    fixed_components: tuple[FixedComponent, ...] = ()
    # Lefschetz number of the map on each periodic piece
    periodic_components: tuple[int, ...] = ()
    pa_components: tuple[PseudoAnosovPiece, ...] = ()
    annuli: tuple[Annulus, ...] = ()
    homotopic_annuli: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        _freeze(self, "fixed_components", "periodic_components", "pa_components", "annuli")
        object.__setattr__(self, "homotopic_annuli", tuple(tuple(p) for p in self.homotopic_annuli))

    @property
    def surface(self) -> CompactSurface:
        return CompactSurface(self.genus, 0)


MappingClassDescription = Union[
    PeriodicClassDesc,
    FiniteTypeClassDesc,
    TorusAutoDesc,
    PseudoAnosovClassDesc,
    ReducibleClassDesc,
]

VARIANT_NAMES = {
    PeriodicClassDesc: "periodic",
    FiniteTypeClassDesc: "finite_type",
    TorusAutoDesc: "torus",
    PseudoAnosovClassDesc: "pseudo_anosov",
    ReducibleClassDesc: "reducible",
}


def variant_name(desc: MappingClassDescription) -> str:
    try:
        return VARIANT_NAMES[type(desc)]
    except KeyError:
        raise TypeError(f"not a mapping class description: {desc!r}") from None


# --------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    field: str
    rule: str

    def __str__(self) -> str:
        return f"{self.field}: {self.rule}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def messages(self) -> list[str]:
        return [str(v) for v in self.violations]


def _stretch_value(lam) -> float:
    return float(lam)


def _check_fixed_points(points, path: str, out: list[Violation]) -> None:
    for i, fp in enumerate(points):
        p = f"{path}[{i}]"
        if fp.kind == "regular":
            if fp.index not in (1, -1):
                out.append(Violation(f"{p}.index", "regular fixed point index must be +1 or -1"))
        elif fp.kind == "singular":
            if fp.prongs is None or fp.prongs < 3:
                out.append(Violation(f"{p}.prongs", "singular fixed point needs at least 3 prongs"))
        else:
            out.append(Violation(f"{p}.kind", f"unknown fixed point kind {fp.kind!r}"))


def _check_annuli(desc, out: list[Violation]) -> None:
    for i, a in enumerate(desc.annuli):
        if a.sign not in ("+", "-"):
            out.append(Violation(f"annuli[{i}].sign", "twist sign must be '+' or '-'"))
    n = len(desc.annuli)
    for k, (i, j) in enumerate(desc.homotopic_annuli):
        if not (0 <= i < n and 0 <= j < n):
            out.append(Violation(f"homotopic_annuli[{k}]", "refers to an undeclared annulus"))
        elif desc.annuli[i].sign != desc.annuli[j].sign:
            out.append(
                Violation(
                    f"homotopic_annuli[{k}]",
                    "homotopic annuli must twist in the same direction",
                )
            )


def _check_components(desc, allow_pa: bool, out: list[Violation]) -> None:
    for i, comp in enumerate(desc.fixed_components):
        path = f"fixed_components[{i}]"
        if comp.genus < 0:
            out.append(Violation(f"{path}.genus", "genus must be non-negative"))
        for j, lab in enumerate(comp.boundary):
            bpath = f"{path}.boundary[{j}]"
            if isinstance(lab, PaAdjacent):
                if not allow_pa:
                    out.append(
                        Violation(bpath, "finite-type maps have no pseudo-Anosov pieces")
                    )
                    continue
                if lab.prongs < 1:
                    out.append(Violation(f"{bpath}.prongs", "prong count must be >= 1"))
                if not 0 <= lab.component < len(desc.pa_components):
                    out.append(
                        Violation(
                            f"{bpath}.component",
                            "pa_adjacent boundary is not matched by a pA component",
                        )
                    )
            elif lab not in (PLUS_TWIST, MINUS_TWIST):
                out.append(Violation(bpath, f"unknown boundary label {lab!r}"))
        if not comp.boundary:
            if comp.genus != desc.genus:
                out.append(
                    Violation(
                        path,
                        "a closed fixed component must be the whole surface (genus must match)",
                    )
                )
            elif len(desc.fixed_components) > 1 or desc.annuli:
                out.append(
                    Violation(path, "the identity class admits no other pieces or annuli")
                )
        if comp.genus > desc.genus:
            out.append(Violation(f"{path}.genus", "component genus exceeds ambient genus"))


def validate(desc: MappingClassDescription) -> ValidationReport:
    """Check every structural rule of ``desc``; never raises on bad data."""
    out: list[Violation] = []
    if isinstance(desc, TorusAutoDesc):
        A = desc.matrix
        if A.dim != 2:
            out.append(Violation("matrix", "torus automorphism matrix must be 2x2"))
        else:
            if A.det() != 1:
                out.append(Violation("matrix", "determinant must be 1 (orientation preserving)"))
            if desc.anosov and abs(A.trace()) <= 2:
                out.append(
                    Violation("matrix", "Anosov map cannot have an eigenvalue of modulus one (|trace| <= 2)")
                )
    elif isinstance(desc, PeriodicClassDesc):
        if desc.genus < 1:
            out.append(Violation("genus", "periodic maps need genus >= 1"))
        if desc.period < 2:
            out.append(Violation("period", "least period must be >= 2"))
        else:
            proper = set(divisors(desc.period)[:-1])
            for d, c in sorted(desc.least_period_counts.items()):
                if d not in proper:
                    out.append(
                        Violation(
                            f"least_period_counts.{d}",
                            f"{d} is not a proper divisor of the period {desc.period}",
                        )
                    )
                if c < 0:
                    out.append(Violation(f"least_period_counts.{d}", "count must be non-negative"))
                elif c % d:
                    out.append(Violation(f"least_period_counts.{d}", f"c_{d} not divisible by {d}"))
            if not any(c > 0 for c in desc.least_period_counts.values()):
                out.append(
                    Violation(
                        "least_period_counts",
                        "at least one point of period below the least period is required",
                    )
                )
    elif isinstance(desc, FiniteTypeClassDesc):
        if desc.genus < 2:
            out.append(Violation("genus", "ambient surface must have genus >= 2"))
        if desc.periodic_part_fixed_points < 0:
            out.append(Violation("periodic_part_fixed_points", "must be non-negative"))
        if (
            desc.lefschetz_off_identity is not None
            and desc.lefschetz_off_identity != desc.periodic_part_fixed_points
        ):
            out.append(
                Violation(
                    "lefschetz_off_identity",
                    "isolated fixed points all have index +1, so their count must equal the Lefschetz number",
                )
            )
        _check_components(desc, allow_pa=False, out=out)
        _check_annuli(desc, out)
    elif isinstance(desc, PseudoAnosovClassDesc):
        if desc.genus < 2:
            out.append(Violation("genus", "ambient surface must have genus >= 2"))
        if desc.stretch_factor is not None and not _stretch_value(desc.stretch_factor) > 1:
            out.append(Violation("stretch_factor", "stretch factor must exceed 1"))
        _check_fixed_points(desc.fixed_points, "fixed_points", out)
    elif isinstance(desc, ReducibleClassDesc):
        if desc.genus < 2:
            out.append(Violation("genus", "ambient surface must have genus >= 2"))
        for i, L in enumerate(desc.periodic_components):
            if L < 0:
                out.append(
                    Violation(
                        f"periodic_components[{i}]",
                        "periodic pieces have only index +1 fixed points, Lefschetz number must be >= 0",
                    )
                )
        for i, piece in enumerate(desc.pa_components):
            if piece.stretch_factor is not None and not _stretch_value(piece.stretch_factor) > 1:
                out.append(Violation(f"pa_components[{i}].stretch_factor", "stretch factor must exceed 1"))
            _check_fixed_points(piece.fixed_points, f"pa_components[{i}].fixed_points", out)
        _check_components(desc, allow_pa=True, out=out)
        _check_annuli(desc, out)
    else:
        out.append(Violation("type", f"unsupported description {type(desc).__name__}"))
    return ValidationReport(tuple(out))
