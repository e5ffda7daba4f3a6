"""Command line entry point: ``floerzeta {invariants,zeta,growth,verify}``.

Exit codes: 0 success, 1 internal error, 2 invalid input, 3 a verification
identity failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from .asymptotics import GrowthEstimate, asymptotic_invariant, entropy_lower_bound, growth_rate
from .exact_algebra import (
    TruncatedSeries,
    product_form_to_series,
    rational_to_series,
)
from .fixed_points import (
    IterateSequence,
    is_iterable,
    lefschetz_number,
    nielsen_number,
    torus_action,
)
from .floer import floer_dimension, hf_euler_iterates, hf_iterates
from .io import InputDocument, InputError, parse_document, render_document
from .surface import PeriodicClassDesc, PseudoAnosovClassDesc, TorusAutoDesc, variant_name
from .zeta import (
    chi_zeta,
    exp_series,
    floer_zeta_periodic,
    floer_zeta_series_oracle,
    lefschetz_series_oracle,
)

EXIT_OK, EXIT_INTERNAL, EXIT_INVALID, EXIT_VERIFY = 0, 1, 2, 3


class VerificationFailed(Exception):
    def __init__(self, section: dict):
        super().__init__("verification failed")
        self.section = section


def _frac(x: Fraction) -> str:
    return str(x)


def _series_json(s: TruncatedSeries) -> list[str]:
    return [_frac(c) for c in s.coeffs]


def _gd_json(gd) -> dict:
    return {"even": gd.even, "odd": gd.odd, "total": gd.total, "euler": gd.euler}


def _growth_json(g: GrowthEstimate) -> dict:
    out: dict[str, Any] = {"value": g.value, "mode": g.mode, "bound": g.bound}
    if g.exact is not None:
        out["exact"] = str(g.exact)
    if g.defining_polynomial is not None:
        out["defining_polynomial"] = list(g.defining_polynomial.coeffs)
    if g.window is not None:
        out["window"] = list(g.window)
    return out


def homology_action_for(doc: InputDocument):
    if doc.action is not None:
        return doc.action
    if isinstance(doc.desc, TorusAutoDesc):
        return torus_action(doc.desc.matrix)
    return None


def _sequence(doc: InputDocument, name: str, n_max: int) -> IterateSequence | None:
    """Per-iterate data: derived for iterable classes, else user supplied."""
    desc = doc.desc
    if is_iterable(desc) and not (isinstance(desc, TorusAutoDesc) and not desc.anosov):
        if name == "nielsen":
            return IterateSequence.from_function("N", lambda n: nielsen_number(desc, n), n_max)
        if name == "lefschetz":
            return IterateSequence.from_function("L", lambda n: lefschetz_number(desc, n), n_max)
        if name == "dim_hf":
            return hf_iterates(desc, n_max)
    seq = doc.sequences.get(name)
    if seq is not None and len(seq) >= n_max:
        return IterateSequence(seq.label, seq.values[:n_max])
    return seq


# --------------------------------------------------------------------------
# report sections


def run_invariants(doc: InputDocument, n_max: int = 10) -> dict:
    desc = doc.desc
    out: dict[str, Any] = {"variant": variant_name(desc)}
    hf = floer_dimension(desc, 1)
    out["nielsen"] = nielsen_number(desc, 1)
    out["lefschetz"] = lefschetz_number(desc, 1)
    out["hf"] = _gd_json(hf)
    if is_iterable(desc):
        iterates = []
        for n in range(1, n_max + 1):
            gd = floer_dimension(desc, n)
            iterates.append(
                {"n": n, "nielsen": nielsen_number(desc, n), "lefschetz": lefschetz_number(desc, n),
                 "hf": [gd.even, gd.odd]}
            )
        out["iterates"] = iterates
    else:
        out["iterates"] = None
        out["note"] = "iterates are not derivable from this description; see supplied sequences"
        if doc.sequences:
            out["supplied_sequences"] = {k: list(s.values) for k, s in sorted(doc.sequences.items())}
    return out


def run_zeta(doc: InputDocument, order: int = 20) -> dict:
    desc = doc.desc
    out: dict[str, Any] = {"order": order}
    action = homology_action_for(doc)
    if action is not None:
        rf = chi_zeta(desc, action)
        out["lefschetz_zeta"] = {
            "text": rf.render(),
            "numerator": list(rf.numerator.coeffs),
            "denominator": list(rf.denominator.coeffs),
            "series": _series_json(rational_to_series(rf, order)),
        }
    else:
        out["lefschetz_zeta"] = None
    if isinstance(desc, PeriodicClassDesc):
        pf = floer_zeta_periodic(desc)
        out["floer_zeta"] = {
            "text": pf.render(),
            "factors": [[d, _frac(e)] for d, e in pf.factors],
            "series": _series_json(product_form_to_series(pf, order)),
        }
    else:
        seq = _sequence(doc, "dim_hf", order)
        if seq is not None and len(seq) >= order:
            out["floer_zeta"] = {"text": None, "factors": None,
                                 "series": _series_json(floer_zeta_series_oracle(seq, order))}
        else:
            out["floer_zeta"] = None
    return out


def run_growth(doc: InputDocument, n_max: int = 10) -> dict:
    desc = doc.desc
    out: dict[str, Any] = {}
    dim_hf = _sequence(doc, "dim_hf", n_max)
    try:
        inv = asymptotic_invariant(desc, None if is_iterable(desc) else dim_hf)
        out["asymptotic_invariant"] = _growth_json(inv)
    except ValueError as exc:
        out["asymptotic_invariant"] = {"error": str(exc)}
    if dim_hf is not None and len(dim_hf) >= 2:
        out["dim_hf_growth"] = _growth_json(growth_rate(dim_hf, (1, len(dim_hf))))
    nielsen = _sequence(doc, "nielsen", n_max)
    lam = desc.stretch_factor if isinstance(desc, PseudoAnosovClassDesc) else None
    if lam is not None or (nielsen is not None and len(nielsen) >= 2):
        eb = entropy_lower_bound(nielsen, None if nielsen is None else (1, len(nielsen)), lam)
        out["entropy_lower_bound"] = {"value": eb.value, "mode": eb.mode, "exact": eb.exact}
    else:
        out["entropy_lower_bound"] = None
    return out


def _first_divergence(a: TruncatedSeries, b: TruncatedSeries) -> int | None:
    for i, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            return i
    return None


def _series_check(name: str, lhs: TruncatedSeries, rhs: TruncatedSeries, order: int) -> dict:
    idx = _first_divergence(lhs, rhs)
    return {"name": name, "passed": idx is None, "order": order, "first_divergence": idx}


def _seq_check(name: str, pairs, rel, order: int | None = None) -> dict:
    bad = next((n for n, a, b in pairs if not rel(a, b)), None)
    return {"name": name, "passed": bad is None, "order": order, "first_divergence": bad}


def run_verify(doc: InputDocument, order: int = 20) -> dict:
    """Run every applicable identity; raises VerificationFailed if any fails."""
    if order < 5:
        raise InputError([f"--order: verification needs order >= 5, got {order}"])
    desc = doc.desc
    checks = []
    iterable = is_iterable(desc)
    ns = range(1, order + 1) if iterable else range(1, 2)

    def hf(n):
        return floer_dimension(desc, n)

    checks.append(_seq_check("euler_characteristic_of_hf_equals_lefschetz",
                             ((n, hf(n).euler, lefschetz_number(desc, n)) for n in ns),
                             lambda a, b: a == b, order if iterable else 1))
    checks.append(_seq_check("dim_hf_at_least_nielsen",
                             ((n, hf(n).total, nielsen_number(desc, n)) for n in ns),
                             lambda a, b: a >= b, order if iterable else 1))

    action = homology_action_for(doc)
    if action is not None:
        rf = chi_zeta(desc, action)
        closed = rational_to_series(rf, order)
        checks.append(_series_check("lefschetz_zeta_rational_vs_exp_series", closed,
                                    lefschetz_series_oracle(action.lefschetz_sequence(order), order), order))
        if iterable:
            checks.append(_series_check("chi_zeta_equals_lefschetz_zeta", closed,
                                        exp_series(hf_euler_iterates(desc, order), order), order))
        else:
            checks.append(_seq_check("action_lefschetz_matches_description",
                                     [(1, action.lefschetz(1), lefschetz_number(desc, 1))],
                                     lambda a, b: a == b, 1))
    if isinstance(desc, PeriodicClassDesc):
        checks.append(_series_check("floer_zeta_product_vs_exp_series",
                                    product_form_to_series(floer_zeta_periodic(desc), order),
                                    floer_zeta_series_oracle(hf_iterates(desc, order), order), order))
    if isinstance(desc, TorusAutoDesc):
        A = desc.matrix
        checks.append(_seq_check("nielsen_trace_identity",
                                 ((n, nielsen_number(desc, n), abs(2 - (A ** n).trace())) for n in ns),
                                 lambda a, b: a == b, order))
    if not iterable:
        N, D = doc.sequences.get("nielsen"), doc.sequences.get("dim_hf")
        if N is not None and D is not None:
            m = min(len(N), len(D))
            checks.append(_seq_check("supplied_dim_hf_at_least_nielsen",
                                     ((n, D[n], N[n]) for n in range(1, m + 1)),
                                     lambda a, b: a >= b, m))

    section = {"order": order, "checks": checks, "passed": all(c["passed"] for c in checks)}
    if not section["passed"]:
        raise VerificationFailed(section)
    return section


# --------------------------------------------------------------------------
# text rendering


def _series_text(coeffs: list[str], var: str = "z") -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if c == "0":
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        neg = c.startswith("-")
        mag = c[1:] if neg else c
        term = mag if not mono else (mono if mag == "1" else f"{mag}*{mono}")
        parts.append(("- " if neg else "+ ") + term if parts else ("-" if neg else "") + term)
    return (" ".join(parts) or "0") + f" + O({var}^{len(coeffs)})"


def _text_report(report: dict) -> str:
    lines = [f"input: {json.dumps(report['input'])}"]
    inv = report.get("invariants")
    if inv:
        lines.append(f"class type: {inv['variant']}")
        lines.append(f"N(φ) = {inv['nielsen']}    L(φ) = {inv['lefschetz']}")
        h = inv["hf"]
        lines.append(f"HF_*(φ) ≅ Z₂^{h['total']}  (even {h['even']}, odd {h['odd']}, χ = {h['euler']})")
        if inv["iterates"]:
            lines.append("  n   N(φⁿ)   L(φⁿ)   HF_*(φⁿ) (even, odd)")
            for row in inv["iterates"]:
                lines.append(f"{row['n']:3d} {row['nielsen']:7d} {row['lefschetz']:7d}   {tuple(row['hf'])}")
        else:
            lines.append(inv["note"])
    z = report.get("zeta")
    if z:
        lz = z["lefschetz_zeta"]
        lines.append(f"χ_φ(z) = L_φ(z) = {lz['text']}" if lz else "L_φ(z): no homology action supplied")
        if lz:
            lines.append(f"    = {_series_text(lz['series'])}")
        fz = z["floer_zeta"]
        if fz:
            if fz["text"]:
                lines.append(f"F_φ(z) = {fz['text']}")
            lines.append(f"F_φ(z) = {_series_text(fz['series'])}")
        else:
            lines.append("F_φ(z): no closed form and no dim HF sequence")
    g = report.get("growth")
    if g:
        ai = g["asymptotic_invariant"]
        if "error" in ai:
            lines.append(f"F^∞(g): {ai['error']}")
        else:
            tag = " (lower bound)" if ai["bound"] == "lower_bound" else ""
            ex = f" = {ai['exact']}" if "exact" in ai else ""
            lines.append(f"F^∞(g){ex} ≈ {ai['value']:.6f} [{ai['mode']}]{tag}")
        if g.get("dim_hf_growth"):
            d = g["dim_hf_growth"]
            lines.append(f"grow(dim HF_*(φⁿ)) ≈ {d['value']:.6f} [{d['mode']}, window {d.get('window')}]")
        eb = g["entropy_lower_bound"]
        if eb:
            ex = f" = {eb['exact']}" if eb["exact"] else ""
            lines.append(f"h(φ) ≥ limsup (1/n) log N(φⁿ){ex} ≈ {eb['value']:.6f} [{eb['mode']}]")
    v = report.get("verification")
    if v:
        for c in v["checks"]:
            status = "PASS" if c["passed"] else f"FAIL (first divergence at {c['first_divergence']})"
            lines.append(f"[{status}] {c['name']} (order {c['order']})")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--input", required=True, metavar="PATH", help="JSON document ('-' for stdin)")
    shared.add_argument("--n-max", type=int, default=10, help="number of iterates (default 10)")
    shared.add_argument("--order", type=int, default=20, help="series truncation order (default 20)")
    shared.add_argument("--format", choices=("text", "machine"), default="text")

    parser = argparse.ArgumentParser(
        prog="floerzeta",
        description="Fixed point invariants, Floer homology dimensions and zeta functions of surface mapping classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("invariants", parents=[shared], help="Nielsen/Lefschetz numbers and HF dimensions")
    sub.add_parser("zeta", parents=[shared], help="Lefschetz and Floer zeta functions")
    sub.add_parser("growth", parents=[shared], help="asymptotic invariant and entropy bound")
    sub.add_parser("verify", parents=[shared], help="check closed forms against series oracles")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(report: dict, fmt: str, stream) -> None:
    if fmt == "machine":
        stream.write(json.dumps(report, ensure_ascii=False) + "\n")
    else:
        stream.write(_text_report(report) + "\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.n_max < 1:
            raise InputError([f"--n-max: must be >= 1, got {args.n_max}"])
        if args.order < 1:
            raise InputError([f"--order: must be >= 1, got {args.order}"])
        try:
            text = _read(args.input)
        except OSError as exc:
            raise InputError([f"--input: {exc}"]) from None
        doc = parse_document(text)
        report: dict[str, Any] = {"input": render_document(doc)}
        if args.command == "invariants":
            report["invariants"] = run_invariants(doc, args.n_max)
        elif args.command == "zeta":
            report["zeta"] = run_zeta(doc, args.order)
        elif args.command == "growth":
            report["growth"] = run_growth(doc, args.n_max)
        else:
            report["verification"] = run_verify(doc, args.order)
    except InputError as exc:
        if args.format == "machine":
            sys.stdout.write(json.dumps({"error": "invalid input", "details": exc.errors}) + "\n")
        for e in exc.errors:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except VerificationFailed as exc:
        report["verification"] = exc.section
        _emit(report, args.format, sys.stdout)
        return EXIT_VERIFY
    except Exception as exc:  # noqa: BLE001 - stable exit code contract
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    _emit(report, args.format, sys.stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
