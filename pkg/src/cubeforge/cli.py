"""Command-line front end.

Subcommands: ``check`` (complex validation plus the cubical axiom suite
on bounded samples of its nerve), ``classify`` (sample-based least-p
estimation), ``invert`` / ``fold`` (single-cell computations), ``perm``
(word and permutation calculations) and ``transfor`` (conversion between
the lax and oplax variants).

Inputs are file paths; wherever a complex is expected, the shorthand
specs ``disk:N`` and ``cube:N`` also work and honour ``--orientation``
(files carry their own stored convention).  All randomness flows through
``--seed``; output is byte-identical for fixed inputs, seed and flags.
Exit codes: 0 success, 1 violations or a non-invertible input, 2 parse
or usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import __version__
from .adc import (
    SOURCE_MINUS_TARGET,
    TARGET_MINUS_SOURCE,
    Adc,
    cube,
    disk,
    from_json_dict,
    load_adc,
    to_json_dict,
    validate,
)
from .core import CompositionError, NotInvertible, check_axioms, phi, psi
from .invert import classify_omega_p, sigma_act, t_inverse
from .nerve import NcModel, cell_from_json, cell_to_json
from .perms import (
    BCWord,
    TWord,
    boundary_word,
    eval_bc_word,
    eval_word,
    length,
    min_rep,
    parse_word,
    rho,
)
from .transfor import (
    LAX,
    OPLAX,
    make_table,
    to_lax,
    to_oplax,
    validate_transfor,
)


class CliError(Exception):
    """A usage or parse failure (exit code 2)."""


ORIENTATIONS = {"printed": TARGET_MINUS_SOURCE, "flipped": SOURCE_MINUS_TARGET}


def resolve_adc(ref: str, orientation: str) -> Adc:
    conv = ORIENTATIONS[orientation]
    if ref.startswith("disk:"):
        return disk(int(ref.split(":", 1)[1]), conv)
    if ref.startswith("cube:"):
        return cube(int(ref.split(":", 1)[1]), conv)
    try:
        return load_adc(ref)
    except FileNotFoundError:
        raise CliError(f"no such file: {ref}")
    except (json.JSONDecodeError, KeyError, ValueError) as exc:
        raise CliError(f"cannot parse complex from {ref}: {exc}")


def adc_from_ref_obj(ref, orientation: str) -> Adc:
    """A complex reference inside a JSON document: inline dict or spec/path."""
    if isinstance(ref, dict):
        return from_json_dict(ref)
    if isinstance(ref, str):
        return resolve_adc(ref, orientation)
    raise CliError("complex reference must be a dict, a path, or disk:N / cube:N")


def load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise CliError(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise CliError(f"cannot parse {path}: {exc}")


def emit(payload: dict, fmt: str, text_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def header(K: Adc | None = None) -> list[str]:
    lines = [f"cubeforge {__version__}"]
    if K is not None:
        lines.append(f"complex: {K.name or '(unnamed)'}  d_convention: {K.d_convention}")
    return lines


def parse_dims(text: str) -> list[int]:
    if ".." in text:
        a, b = text.split("..", 1)
        lo, hi = int(a), int(b)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise CliError(f"empty dimension range {text!r}")
    return list(range(lo, hi + 1))


# ---------------------------------------------------------------------------
# commands


def cmd_check(args) -> int:
    K = resolve_adc(args.adc, args.orientation)
    adc_report = validate(K)
    model = NcModel(K)
    cells = {}
    rng = random.Random(args.seed)
    for n in range(args.dim + 1):
        cells[n] = list(model.cells(n, args.bound))
        if args.random:
            cells[n] = cells[n] + model.sample_cells(n, args.random, args.bound + 1, rng)
    report = check_axioms(model, args.dim, cells, max_pairs=args.max_pairs)
    ok = adc_report.ok and report.ok
    payload = {
        "version": __version__,
        "d_convention": K.d_convention,
        "complex": K.name,
        "dim": args.dim,
        "bound": args.bound,
        "seed": args.seed,
        "cells": {str(n): len(v) for n, v in cells.items()},
        "complex_violations": sorted(adc_report.violations),
        "checked": dict(sorted(report.checked.items())),
        "violations": sorted(str(v) for v in report.violations),
        "ok": ok,
    }
    lines = header(K)
    lines.append(f"dim {args.dim}, bound {args.bound}, seed {args.seed}")
    lines.append(
        "sample: " + ", ".join(f"{n}-cells: {len(cells[n])}" for n in sorted(cells))
    )
    for v in payload["complex_violations"]:
        lines.append(f"complex violation: {v}")
    lines.append(f"checked {sum(report.checked.values())} equation instances")
    for fam in sorted(report.checked):
        lines.append(f"  {fam}: {report.checked[fam]}")
    for v in payload["violations"]:
        lines.append(f"VIOLATION {v}")
    lines.append("result: " + ("ok" if ok else "violations found"))
    emit(payload, args.format, lines)
    return 0 if ok else 1


def cmd_classify(args) -> int:
    K = resolve_adc(args.adc, args.orientation)
    dims = parse_dims(args.dims)
    model = NcModel(K)
    rng = random.Random(args.seed)
    report = classify_omega_p(
        model, dims, bound=args.bound, extra_random=args.random, rng=rng
    )
    payload = {
        "version": __version__,
        "d_convention": K.d_convention,
        "complex": K.name,
        "dims": dims,
        "bound": args.bound,
        "seed": args.seed,
        "p_estimate": report.p_estimate,
        "consistent": report.consistent,
        "evidence": [
            {
                "dim": e.dim,
                "checked": e.checked,
                "all_invertible": e.all_invertible,
                "witness": repr(e.witness) if e.witness is not None else None,
            }
            for e in report.evidence
        ],
    }
    lines = header(K)
    lines.append(f"dims {dims}, bound {args.bound}, seed {args.seed}")
    for e in report.evidence:
        status = "all invertible" if e.all_invertible else "non-invertible cell found"
        lines.append(f"dim {e.dim}: {e.checked} cells, {status}")
        if e.witness is not None:
            lines.append(f"  witness: {e.witness!r}")
    lines.append(f"p-estimate: >= {report.p_estimate} (sample-based)")
    lines.append(f"cross-checks consistent: {report.consistent}")
    emit(payload, args.format, lines)
    return 0


def _load_cell(path: str, orientation: str):
    data = load_json(path)
    K = adc_from_ref_obj(data.get("adc"), orientation)
    model = NcModel(K)
    try:
        cell = cell_from_json(model, data)
    except (KeyError, ValueError) as exc:
        raise CliError(f"bad cell file {path}: {exc}")
    return model, cell


def _emit_cell(model, cell, fmt: str) -> None:
    payload = cell_to_json(model, cell)
    payload["version"] = __version__
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        lines = header(model.K)
        lines.append(f"{payload['kind']} {cell.dim}-cell:")
        for name in sorted(payload["assignment"]):
            lines.append(f"  {name or chr(0x2205)}: {payload['assignment'][name]}")
        for line in lines:
            print(line)


def cmd_invert(args) -> int:
    model, cell = _load_cell(args.cell, args.orientation)
    try:
        if args.kind == "R":
            if args.i is None:
                raise CliError("--i is required for kind R")
            out = model.r_inverse(cell, args.i)
        elif args.kind == "T":
            if args.i is None:
                raise CliError("--i is required for kind T")
            out = t_inverse(model, cell, args.i)
        else:
            if not args.sigma:
                raise CliError("--sigma is required for kind sigma")
            word = parse_word(args.sigma, ambient=cell.dim)
            if isinstance(word, BCWord):
                raise CliError("sigma words use T generators only")
            out = sigma_act(model, cell, eval_word(word))
    except NotInvertible as exc:
        print(f"not invertible: {exc}", file=sys.stderr)
        return 1
    _emit_cell(model, out, args.format)
    return 0


def cmd_fold(args) -> int:
    model, cell = _load_cell(args.cell, args.orientation)
    try:
        if args.psi is not None:
            out = psi(model, cell, args.psi)
        else:
            depth = cell.dim if args.phi is None else args.phi
            out = phi(model, cell, depth)
    except (ValueError, CompositionError) as exc:
        raise CliError(str(exc))
    _emit_cell(model, out, args.format)
    return 0


def _format_word(w: TWord | BCWord) -> str:
    return str(w) if (w.letters if isinstance(w, TWord) else w.letters) else "1"


def cmd_perm(args) -> int:
    out: dict = {"version": __version__}
    if args.action == "eval":
        w = parse_word(args.word)
        if isinstance(w, BCWord):
            raise CliError("use bc-eval for words containing R generators")
        out["images"] = list(eval_word(w).images)
        text = "(" + " ".join(map(str, out["images"])) + ")"
    elif args.action == "boundary":
        if args.i is None:
            raise CliError("--i is required for boundary")
        w = parse_word(args.word)
        if isinstance(w, BCWord):
            raise CliError("boundaries act on T words")
        res = boundary_word(w, args.i)
        out["word"] = str(res)
        text = _format_word(res)
    elif args.action == "length":
        w = parse_word(args.word)
        if isinstance(w, BCWord):
            raise CliError("length acts on T words")
        out["length"] = length(eval_word(w))
        text = str(out["length"])
    elif args.action == "minrep":
        w = parse_word(args.word)
        if isinstance(w, BCWord):
            raise CliError("minrep acts on T words")
        res = min_rep(eval_word(w))
        out["word"] = str(res)
        text = _format_word(res)
    elif args.action == "rho":
        p = rho(args.n, args.m)
        out["images"] = list(p.images)
        text = "(" + " ".join(map(str, p.images)) + ")"
    elif args.action == "bc-eval":
        w = parse_word(args.word)
        if isinstance(w, TWord):
            w = BCWord(w.ambient, tuple(("T", i) for i in w.letters))
        s = eval_bc_word(w)
        out["images"] = list(s.images)
        text = "(" + " ".join(map(str, s.images)) + ")"
    else:  # pragma: no cover
        raise CliError(f"unknown action {args.action!r}")
    if args.format == "json":
        print(json.dumps(out, sort_keys=True))
    else:
        print(text)
    return 0


def cmd_transfor(args) -> int:
    data = load_json(args.table)
    src = NcModel(adc_from_ref_obj(data.get("adc_source"), args.orientation))
    tgt = NcModel(adc_from_ref_obj(data.get("adc_target"), args.orientation))
    variance = data.get("variance", LAX)
    p = int(data.get("p", 0))
    pairs = []
    try:
        for entry in data["entries"]:
            n = int(entry["dim"])
            cell = src.make(n, {k: tuple(v) for k, v in entry["cell"].items()})
            img = tgt.make(n + p, {k: tuple(v) for k, v in entry["image"].items()})
            pairs.append((cell, img))
        table = make_table(variance, p, src, tgt, pairs)
    except (KeyError, ValueError) as exc:
        raise CliError(f"bad table file: {exc}")
    report = validate_transfor(table)
    if not report.ok:
        print(report.summary(), file=sys.stderr)
        return 1
    if args.to:
        try:
            table = to_oplax(table) if args.to == OPLAX else to_lax(table)
        except NotInvertible as exc:
            print(f"not invertible: {exc}", file=sys.stderr)
            return 1
        check = validate_transfor(table)
        if not check.ok:
            print(check.summary(), file=sys.stderr)
            return 1
    payload = {
        "version": __version__,
        "d_convention": tgt.K.d_convention,
        "variance": table.variance,
        "p": table.p,
        "adc_source": to_json_dict(src.K),
        "adc_target": to_json_dict(tgt.K),
        "entries": [
            {
                "dim": A.dim,
                "cell": {k: list(A.payload[pos])
                         for pos, (_, k) in enumerate(src.elements(A.dim))},
                "image": {k: list(FA.payload[pos])
                          for pos, (_, k) in enumerate(tgt.elements(FA.dim))},
            }
            for A, FA in table.pairs()
        ],
    }
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        lines = header(tgt.K)
        lines.append(f"{table.variance} {table.p}-transfor, {len(payload['entries'])} entries")
        lines.append("valid: yes")
        for line in lines:
            print(line)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubeforge",
        description="cubical omega-categories with connections, at desk scale",
    )
    parser.add_argument("--version", action="version", version=f"cubeforge {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--orientation", choices=sorted(ORIENTATIONS), default="printed")
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("check", help="validate a complex and its nerve axioms")
    p.add_argument("--adc", required=True)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--bound", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random", type=int, default=0, help="extra random cells per dim")
    p.add_argument("--max-pairs", type=int, default=60)
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="sample-based (omega, p) classification")
    p.add_argument("--adc", required=True)
    p.add_argument("--dims", required=True, help="a range like 1..2")
    p.add_argument("--bound", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("invert", help="invert a serialized nerve cell")
    p.add_argument("--cell", required=True)
    p.add_argument("--kind", choices=["R", "T", "sigma"], required=True)
    p.add_argument("--i", type=int)
    p.add_argument("--sigma", help='a word like "T1 T2"')
    common(p)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("fold", help="fold a serialized nerve cell")
    p.add_argument("--cell", required=True)
    p.add_argument("--phi", type=int, help="fold depth (default: full)")
    p.add_argument("--psi", type=int, help="single elementary fold index")
    common(p)
    p.set_defaults(func=cmd_fold)

    p = sub.add_parser("perm", help="word and permutation computations")
    p.add_argument("action", choices=["eval", "boundary", "length", "minrep", "rho", "bc-eval"])
    p.add_argument("--word", default="")
    p.add_argument("--i", type=int)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_perm)

    p = sub.add_parser("transfor", help="validate or convert a transfor table")
    p.add_argument("--table", required=True)
    p.add_argument("--to", choices=[LAX, OPLAX])
    common(p)
    p.set_defaults(func=cmd_transfor)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
