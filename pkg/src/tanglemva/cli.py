"""Command-line front end.

Reads a diagram, program, or braid word, computes the requested invariant,
and prints it as text or JSON.  All orderings are deterministic, so identical
requests produce byte-identical output.  Exit codes: 0 success, 1 domain
error (reported as a JSON object on stdout), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braid import Matrix, burau, gassner, parse_braid, rmva_braid
from .diagram import parse_diagram
from .errors import EngineError, ParseError, UnknownArc, ValidationError
from .links import mva_link, partial_trace, vmva
from .meta import GAMMA_CALC, MetaElement, R_CALC, eval_program, parse_program
from .ring import (
    Mono,
    RationalFunction,
    parse_poly,
    parse_rf,
    render_mono,
    render_rf,
)
from .suites import check_axioms, check_gassner_correspondence, check_reidemeister
from .tmva import ReducedPair, compute_tmva, reduced_from_diagram

INVARIANTS = ("tmva", "rmva", "gamma", "ztilde", "gassner", "burau", "vmva")
MODES = ("diagram", "program", "braid")

_COMPAT = {
    "diagram": {"tmva", "rmva", "vmva"},
    "program": {"rmva", "gamma", "ztilde", "vmva"},
    "braid": {"gassner", "burau", "rmva", "vmva"},
}


def pair_to_json_obj(p: ReducedPair) -> dict:
    rows = list(p.out_labels)
    cols = list(p.in_labels)
    return {
        "normalizer": render_mono(p.normalizer),
        "lambda": render_rf(p.lam),
        "matrix": {
            "rows": rows,
            "cols": cols,
            "entries": [[render_rf(p.entry(r, c)) for c in cols] for r in rows],
        },
    }


def pair_from_json_obj(obj: dict) -> ReducedPair:
    norm_poly = parse_poly(obj["normalizer"])
    mono: Mono = next(iter(norm_poly.terms)) if norm_poly.terms else ()
    rows = tuple(obj["matrix"]["rows"])
    cols = tuple(obj["matrix"]["cols"])
    a = {}
    for i, r in enumerate(rows):
        for j, c in enumerate(cols):
            v = parse_rf(obj["matrix"]["entries"][i][j])
            if not v.is_zero():
                a[(r, c)] = v
    return ReducedPair(lam=parse_rf(obj["lambda"]), a=a,
                       out_labels=rows, in_labels=cols, normalizer=mono)


def render_pair_text(p: ReducedPair) -> str:
    rows = list(p.out_labels)
    cols = list(p.in_labels)
    lines = [
        f"normalizer: {render_mono(p.normalizer)}",
        f"lambda: {render_rf(p.lam)}",
        "matrix rows (out) x cols (in): " + " ".join(cols),
    ]
    for r in rows:
        cells = "; ".join(render_rf(p.entry(r, c)) for c in cols)
        lines.append(f"  {r}: {cells}")
    return "\n".join(lines) + "\n"


def matrix_pair(m: Matrix, labels) -> ReducedPair:
    entries = {k: v for k, v in m.items() if not v.is_zero()}
    return ReducedPair(lam=RationalFunction.one(), a=entries,
                       out_labels=tuple(labels), in_labels=tuple(labels))


def render_scalar_text(v: RationalFunction) -> str:
    return render_rf(v) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tanglemva",
        description="Exact Alexander-type invariants of virtual tangles, "
                    "braids and links.")
    ap.add_argument("--mode", choices=MODES, default="diagram")
    ap.add_argument("--invariant", choices=INVARIANTS, default="rmva")
    ap.add_argument("--close", default="",
                    help="comma-separated strands to close, left to right")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--check", choices=("axioms", "reidemeister", "correspondence"),
                    help="run a built-in verification suite and exit")
    ap.add_argument("--input", default=None,
                    help="input file (default: stdin)")
    return ap


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _run_check(which: str) -> int:
    ok, lines = {
        "axioms": check_axioms,
        "reidemeister": check_reidemeister,
        "correspondence": check_gassner_correspondence,
    }[which]()
    print(f"check: {which}")
    for ln in lines:
        print(ln)
    print("result: " + ("ALL PASS" if ok else "FAILURES"))
    return 0 if ok else 1


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.check:
        return _run_check(args.check)

    if args.invariant not in _COMPAT[args.mode]:
        print(f"error: invariant {args.invariant!r} is not available in "
              f"mode {args.mode!r}", file=sys.stderr)
        return 2

    close = tuple(x for x in args.close.split(",") if x)
    try:
        try:
            text = _read_input(args.input)
        except OSError as err:
            print(f"error: cannot read input: {err}", file=sys.stderr)
            return 2
        if args.mode == "diagram":
            d = parse_diagram(text)
            if args.invariant == "tmva":
                e = compute_tmva(d)
                if args.format == "json":
                    print(e.to_json())
                else:
                    print(f"normalizer: {render_mono(e.normalizer)}")
                    print(f"w order: {' '.join(e.w_order)}")
                    for key in sorted(e.coeffs):
                        kept, taken = key
                        print(f"  out {list(kept)} in {list(taken)}: "
                              f"{render_rf(e.coeffs[key])}")
                return 0
            if args.invariant == "vmva":
                if close:
                    out = mva_link(MetaElement(R_CALC, reduced_from_diagram(d)), close)
                else:
                    out = vmva(d)
                _emit_scalar(out, args.format)
                return 0
            pair = reduced_from_diagram(d)
            _emit_pair(pair, args.format)
            return 0

        if args.mode == "program":
            prog = parse_program(text)
            wanted = R_CALC if args.invariant in ("rmva", "vmva") else GAMMA_CALC
            e = eval_program(prog, calculus=wanted)
            if args.invariant == "vmva":
                _emit_scalar(mva_link(e, close), args.format)
                return 0
            for lab in close:
                e = partial_trace(e, lab)
            _emit_pair(e.pair, args.format)
            return 0

        # braid mode
        w = parse_braid(text)
        if args.invariant in ("gassner", "burau"):
            m = gassner(w) if args.invariant == "gassner" else burau(w)
            _emit_pair(matrix_pair(m, w.labels), args.format)
            return 0
        e = rmva_braid(w)
        if args.invariant == "vmva":
            _emit_scalar(mva_link(e, close), args.format)
            return 0
        for lab in close:
            e = partial_trace(e, lab)
        _emit_pair(e.pair, args.format)
        return 0

    except (ParseError, ValidationError, UnknownArc) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except EngineError as err:
        print(json.dumps({"error": type(err).__name__, "message": str(err)}))
        return 1


def _emit_pair(p: ReducedPair, fmt: str):
    if fmt == "json":
        print(json.dumps(pair_to_json_obj(p), indent=2))
    else:
        sys.stdout.write(render_pair_text(p))


def _emit_scalar(v: RationalFunction, fmt: str):
    if fmt == "json":
        print(json.dumps({"value": render_rf(v)}))
    else:
        sys.stdout.write(render_scalar_text(v))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
