"""JSON documents <-> description objects.

The shipped schema (``schemas/mapping_class.v1.json``) checks document shape;
:func:`floerzeta.surface.validate` then checks the mathematical rules.  Both
kinds of problem surface as :class:`InputError` with field paths.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Any

import jsonschema

from .exact_algebra import IntMatrix, QuadraticSurd
from .fixed_points import HomologyAction, InvalidActionError, IterateSequence, lefschetz_zeta_input
from .surface import (
    Annulus,
    FiniteTypeClassDesc,
    FixedComponent,
    FixedPointDatum,
    MappingClassDescription,
    PaAdjacent,
    PeriodicClassDesc,
    PseudoAnosovClassDesc,
    PseudoAnosovPiece,
    ReducibleClassDesc,
    TorusAutoDesc,
    validate,
    variant_name,
)

SCHEMA_VERSION = 1


class InputError(ValueError):
    """Malformed or invalid input document; ``errors`` lists 'path: message' strings."""

    def __init__(self, errors: list[str]):
        super().__init__("; ".join(errors))
        self.errors = list(errors)


@lru_cache(maxsize=None)
def load_schema() -> dict:
    text = resources.files("floerzeta").joinpath("schemas/mapping_class.v1.json").read_text()
    return json.loads(text)


@dataclass(frozen=True)
class InputDocument:
    """A description plus the optional extra data a document may carry."""

    desc: MappingClassDescription
    action: HomologyAction | None = None
    sequences: dict[str, IterateSequence] = field(default_factory=dict, compare=False)


def _path(parts) -> str:
    out = ""
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else str(p))
    return out or "<document>"


def _int(x) -> int:
    return int(x)


def _matrix(rows) -> IntMatrix:
    return IntMatrix([[_int(x) for x in r] for r in rows])


def _real(x):
    if isinstance(x, dict):
        return QuadraticSurd(_int(x["a"]), _int(x["b"]), _int(x["D"]), _int(x.get("c", 1)))
    if isinstance(x, bool):
        raise TypeError("boolean is not a number")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return x
    return Fraction(x)


def _label(x):
    if isinstance(x, str):
        return x
    return PaAdjacent(prongs=int(x["prongs"]), component=int(x.get("component", 0)))


def _component(x) -> FixedComponent:
    return FixedComponent(_int(x["genus"]), tuple(_label(b) for b in x.get("boundary", ())))


def _fixed_point(x) -> FixedPointDatum:
    if x["kind"] == "regular":
        return FixedPointDatum.regular(int(x["index"]))
    return FixedPointDatum.singular(int(x["prongs"]), bool(x.get("rotated", False)))


def _annulus(x) -> Annulus:
    return Annulus(x.get("sign", "+"), bool(x.get("flipped", False)))


def _build(doc: dict) -> MappingClassDescription:
    kind = doc["type"]
    if kind == "torus":
        return TorusAutoDesc(_matrix(doc["matrix"]), bool(doc.get("anosov", True)))
    if kind == "periodic":
        return PeriodicClassDesc(
            _int(doc["genus"]),
            _int(doc["period"]),
            {int(d): _int(c) for d, c in doc["least_period_counts"].items()},
        )
    if kind == "finite_type":
        lef = doc.get("lefschetz_off_identity")
        return FiniteTypeClassDesc(
            genus=_int(doc["genus"]),
            fixed_components=tuple(_component(c) for c in doc.get("fixed_components", ())),
            periodic_part_fixed_points=_int(doc.get("periodic_part_fixed_points", 0)),
            annuli=tuple(_annulus(a) for a in doc.get("annuli", ())),
            homotopic_annuli=tuple(tuple(p) for p in doc.get("homotopic_annuli", ())),
            lefschetz_off_identity=None if lef is None else _int(lef),
        )
    if kind == "pseudo_anosov":
        lam = doc.get("stretch_factor")
        return PseudoAnosovClassDesc(
            _int(doc["genus"]),
            tuple(_fixed_point(f) for f in doc["fixed_points"]),
            None if lam is None else _real(lam),
        )
    if kind == "reducible":
        pieces = []
        for p in doc.get("pa_components", ()):
            lam = p.get("stretch_factor")
            pieces.append(
                PseudoAnosovPiece(
                    tuple(_fixed_point(f) for f in p.get("fixed_points", ())),
                    None if lam is None else _real(lam),
                )
            )
        return ReducibleClassDesc(
            genus=_int(doc["genus"]),
            fixed_components=tuple(_component(c) for c in doc.get("fixed_components", ())),
            periodic_components=tuple(_int(p["lefschetz_number"]) for p in doc.get("periodic_components", ())),
            pa_components=tuple(pieces),
            annuli=tuple(_annulus(a) for a in doc.get("annuli", ())),
            homotopic_annuli=tuple(tuple(p) for p in doc.get("homotopic_annuli", ())),
        )
    raise InputError([f"type: unknown variant {kind!r}"])


def _load(document) -> dict:
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise InputError([f"<document>: not valid JSON ({exc.msg} at line {exc.lineno})"]) from None
    if not isinstance(document, dict):
        raise InputError(["<document>: expected a JSON object"])
    validator = jsonschema.Draft202012Validator(load_schema())
    errors = sorted(validator.iter_errors(document), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        raise InputError([f"{_path(e.absolute_path)}: {e.message}" for e in errors])
    return document


def parse_document(document) -> InputDocument:
    """Parse and validate a whole input document (str, bytes or dict)."""
    doc = _load(document)
    try:
        desc = _build(doc)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError([f"<document>: {exc}"]) from None
    report = validate(desc)
    if not report.ok:
        raise InputError(report.messages())

    action = None
    if "homology_action" in doc:
        a = doc["homology_action"]
        try:
            action = lefschetz_zeta_input(
                [_matrix(a.get("h0", [[1]])), _matrix(a["h1"]), _matrix(a.get("h2", [[1]]))]
            )
        except (InvalidActionError, ValueError) as exc:
            raise InputError([f"homology_action: {exc}"]) from None
        if action.genus != desc.genus:
            raise InputError(
                [f"homology_action.h1: size {action.h1.dim} does not match genus {desc.genus}"]
            )
    sequences = {
        name: IterateSequence(name, tuple(_int(v) for v in vals))
        for name, vals in doc.get("sequences", {}).items()
        if vals
    }
    return InputDocument(desc, action, sequences)


def parse_input(document) -> MappingClassDescription:
    return parse_document(document).desc


# --------------------------------------------------------------------------
# rendering


def _jint(n: int):
    # keep JSON integers within 64 bits, spill larger ones to decimal strings
    return n if -(2**63) <= n < 2**63 else str(n)


def _jmatrix(A: IntMatrix) -> list:
    return [[_jint(x) for x in r] for r in A.rows]


def _jreal(x):
    if isinstance(x, QuadraticSurd):
        return {"a": _jint(x.a), "b": _jint(x.b), "D": _jint(x.D), "c": _jint(x.c)}
    if isinstance(x, Fraction):
        return str(x)
    return x


def _jlabel(lab):
    if isinstance(lab, PaAdjacent):
        return {"kind": "pa_adjacent", "prongs": lab.prongs, "component": lab.component}
    return lab


def _jcomponent(c: FixedComponent) -> dict:
    return {"genus": _jint(c.genus), "boundary": [_jlabel(b) for b in c.boundary]}


def _jfixed_point(fp: FixedPointDatum) -> dict:
    if fp.kind == "regular":
        return {"kind": "regular", "index": fp.index}
    return {"kind": "singular", "prongs": fp.prongs, "rotated": fp.rotated}


def _jannulus(a: Annulus) -> dict:
    return {"sign": a.sign, "flipped": a.flipped}


def render(desc: MappingClassDescription) -> dict[str, Any]:
    """Inverse of :func:`parse_input`."""
    kind = variant_name(desc)
    out: dict[str, Any] = {"type": kind}
    if isinstance(desc, TorusAutoDesc):
        out["matrix"] = _jmatrix(desc.matrix)
        out["anosov"] = desc.anosov
    elif isinstance(desc, PeriodicClassDesc):
        out["genus"] = _jint(desc.genus)
        out["period"] = _jint(desc.period)
        out["least_period_counts"] = {str(d): _jint(c) for d, c in sorted(desc.least_period_counts.items())}
    elif isinstance(desc, FiniteTypeClassDesc):
        out["genus"] = _jint(desc.genus)
        out["fixed_components"] = [_jcomponent(c) for c in desc.fixed_components]
        out["periodic_part_fixed_points"] = _jint(desc.periodic_part_fixed_points)
        out["annuli"] = [_jannulus(a) for a in desc.annuli]
        out["homotopic_annuli"] = [list(p) for p in desc.homotopic_annuli]
        if desc.lefschetz_off_identity is not None:
            out["lefschetz_off_identity"] = _jint(desc.lefschetz_off_identity)
    elif isinstance(desc, PseudoAnosovClassDesc):
        out["genus"] = _jint(desc.genus)
        if desc.stretch_factor is not None:
            out["stretch_factor"] = _jreal(desc.stretch_factor)
        out["fixed_points"] = [_jfixed_point(f) for f in desc.fixed_points]
    elif isinstance(desc, ReducibleClassDesc):
        out["genus"] = _jint(desc.genus)
        out["fixed_components"] = [_jcomponent(c) for c in desc.fixed_components]
        out["periodic_components"] = [{"lefschetz_number": _jint(L)} for L in desc.periodic_components]
        pieces = []
        for p in desc.pa_components:
            piece: dict[str, Any] = {"fixed_points": [_jfixed_point(f) for f in p.fixed_points]}
            if p.stretch_factor is not None:
                piece["stretch_factor"] = _jreal(p.stretch_factor)
            pieces.append(piece)
        out["pa_components"] = pieces
        out["annuli"] = [_jannulus(a) for a in desc.annuli]
        out["homotopic_annuli"] = [list(p) for p in desc.homotopic_annuli]
    return out


def render_document(doc: InputDocument) -> dict[str, Any]:
    out = render(doc.desc)
    if doc.action is not None:
        out["homology_action"] = {
            "h0": _jmatrix(doc.action.h0),
            "h1": _jmatrix(doc.action.h1),
            "h2": _jmatrix(doc.action.h2),
        }
    if doc.sequences:
        out["sequences"] = {k: [_jint(v) for v in s.values] for k, s in sorted(doc.sequences.items())}
    return out
