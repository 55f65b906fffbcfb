"""Command-line surface: build, resistance, kirchhoff, verify.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 precondition violation.  JSON output is rendered by a small deterministic
emitter (17 significant digits for floats, fixed key order) so identical
inputs produce byte-identical files.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .errors import CoronaKitError, EdgeListError, PreconditionError, SingularMatrixError
from .graphs import (
    CoronaLayout,
    Graph,
    corona_edge,
    corona_vertex,
    format_edge_list,
    parse_edge_list,
)
from .linalg import DEFAULT_TOLERANCES
from .metrics import (
    closed_form_resistance_matrix,
    kf_edge_corona_regular,
    kf_vertex_corona,
    kf_vertex_corona_regular,
    kirchhoff_oracle,
    resistance_oracle,
)
from .verify import builtin_pairs, report_to_dict, run_verification

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


def format_float(x) -> str:
    v = float(x)
    if not math.isfinite(v):
        raise ValueError("non-finite value in output")
    return format(v, ".17g")


def _is_scalar(v) -> bool:
    return v is None or isinstance(v, (bool, int, float, str, np.integer, np.floating))


def _render(value, parts: list[str], indent: int) -> None:
    pad = "  " * indent
    if value is None:
        parts.append("null")
    elif isinstance(value, (bool, np.bool_)):
        parts.append("true" if value else "false")
    elif isinstance(value, (int, np.integer)):
        parts.append(str(int(value)))
    elif isinstance(value, (float, np.floating)):
        parts.append(format_float(value))
    elif isinstance(value, str):
        parts.append(json.dumps(value))
    elif isinstance(value, np.ndarray):
        _render(value.tolist(), parts, indent)
    elif isinstance(value, (list, tuple)):
        items = list(value)
        if not items:
            parts.append("[]")
        elif all(_is_scalar(v) for v in items):
            parts.append("[")
            for i, v in enumerate(items):
                if i:
                    parts.append(", ")
                _render(v, parts, indent)
            parts.append("]")
        else:
            parts.append("[\n")
            for i, v in enumerate(items):
                parts.append("  " * (indent + 1))
                _render(v, parts, indent + 1)
                parts.append(",\n" if i < len(items) - 1 else "\n")
            parts.append(pad + "]")
    elif isinstance(value, dict):
        if not value:
            parts.append("{}")
        else:
            parts.append("{\n")
            keys = list(value)
            for i, k in enumerate(keys):
                if not isinstance(k, str):
                    raise TypeError(f"JSON keys must be strings, got {type(k).__name__}")
                parts.append("  " * (indent + 1))
                parts.append(json.dumps(k))
                parts.append(": ")
                _render(value[k], parts, indent + 1)
                parts.append(",\n" if i < len(keys) - 1 else "\n")
            parts.append(pad + "}")
    else:
        raise TypeError(f"cannot render {type(value).__name__} as JSON")


def render_json(value) -> str:
    parts: list[str] = []
    _render(value, parts, 0)
    parts.append("\n")
    return "".join(parts)


def render_csv(matrix) -> str:
    rows = np.asarray(matrix, dtype=np.float64)
    lines = [",".join(format_float(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def _load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_edge_list(text)
    except EdgeListError as exc:
        raise EdgeListError(None, f"{path}: {exc}") from None


def _write_text(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def layout_manifest(layout: CoronaLayout) -> dict:
    classes = []
    for v in range(layout.product.vertex_count):
        cls, local, owner = layout.classify(v)
        classes.append({"vertex": v, "class": cls, "local": local, "copy": owner})
    return {
        "kind": layout.kind,
        "n": layout.product.vertex_count,
        "n1": layout.n1,
        "n2": layout.n2,
        "m2": layout.m2,
        "classes": classes,
    }


def _build_layout(kind: str, g1: Graph, g2: Graph) -> CoronaLayout:
    return corona_vertex(g1, g2) if kind == "vertex" else corona_edge(g1, g2)


def cmd_build(args) -> int:
    g1 = _load_graph(args.g1)
    g2 = _load_graph(args.g2)
    layout = _build_layout(args.kind, g1, g2)
    edge_text = format_edge_list(layout.product)
    manifest_text = render_json(layout_manifest(layout))
    if args.out:
        _write_text(edge_text, args.out)
        manifest_path = args.manifest if args.manifest else args.out + ".manifest.json"
        _write_text(manifest_text, manifest_path)
    else:
        sys.stdout.write(edge_text)
        if args.manifest:
            _write_text(manifest_text, args.manifest)
    return EXIT_OK


def cmd_resistance(args) -> int:
    if args.method == "both" and args.format == "csv":
        print("error: --method both requires --format json", file=sys.stderr)
        return EXIT_USAGE
    g1 = _load_graph(args.g1)
    g2 = _load_graph(args.g2)
    layout = _build_layout(args.kind, g1, g2)
    bound = args.tolerance if args.tolerance is not None else DEFAULT_TOLERANCES.entry

    payload: dict = {
        "command": "resistance",
        "kind": args.kind,
        "method": args.method,
        "n": layout.product.vertex_count,
    }
    exit_code = EXIT_OK
    if args.method == "oracle":
        values = resistance_oracle(layout.product).values
        payload["matrix"] = values
    elif args.method == "closed-form":
        values = closed_form_resistance_matrix(g1, g2, args.kind).values
        payload["matrix"] = values
    else:
        closed = closed_form_resistance_matrix(g1, g2, args.kind).values
        oracle = resistance_oracle(layout.product).values
        deviation = float(np.abs(closed - oracle).max()) if closed.size else 0.0
        payload["closed_form"] = closed
        payload["oracle"] = oracle
        payload["max_deviation"] = deviation
        payload["tolerance"] = bound
        if deviation > bound:
            exit_code = EXIT_VERIFY_FAILED

    if args.format == "csv":
        _write_text(render_csv(payload["matrix"]), args.out)
    else:
        _write_text(render_json(payload), args.out)
    return exit_code


_FORMULA_KIND = {"thm4.1": "vertex", "cor4.2": "vertex", "thm4.3": "edge"}


def cmd_kirchhoff(args) -> int:
    if args.formula == "oracle":
        if args.kind is None:
            print("error: --formula oracle requires --kind", file=sys.stderr)
            return EXIT_USAGE
        kind = args.kind
    else:
        kind = _FORMULA_KIND[args.formula]
        if args.kind is not None and args.kind != kind:
            print(
                f"error: --formula {args.formula} applies to the {kind} product",
                file=sys.stderr,
            )
            return EXIT_USAGE
    g1 = _load_graph(args.g1)
    g2 = _load_graph(args.g2)
    layout = _build_layout(kind, g1, g2)
    # formula preconditions first, so their message wins over a downstream
    # disconnected-product complaint from the oracle
    if args.formula == "thm4.1":
        result = kf_vertex_corona(g1, g2)
    elif args.formula == "cor4.2":
        result = kf_vertex_corona_regular(g1, g2)
    elif args.formula == "thm4.3":
        result = kf_edge_corona_regular(g1, g2)
    else:
        result = None
    oracle = kirchhoff_oracle(layout.product)
    if result is None:
        result = oracle
    deviation = abs(result.value - oracle.value)
    bound = (
        args.tolerance
        if args.tolerance is not None
        else DEFAULT_TOLERANCES.residual * (1.0 + abs(oracle.value))
    )
    payload = {
        "command": "kirchhoff",
        "formula": args.formula,
        "kind": kind,
        "value": result.value,
        "method": result.method,
        "oracle": oracle.value,
        "deviation": deviation,
    }
    _write_text(render_json(payload), args.out)
    return EXIT_OK if deviation <= bound else EXIT_VERIFY_FAILED


def cmd_verify(args) -> int:
    pairs: list[tuple[str, str]] = []
    if args.corpus == "builtin":
        pairs.extend(builtin_pairs())
    if args.pair:
        pairs.extend((a, b) for a, b in args.pair)
    if not pairs:
        print("error: --corpus none needs at least one --pair", file=sys.stderr)
        return EXIT_USAGE
    report = run_verification(
        pairs=pairs,
        tolerance=args.tolerance,
        include_instances=args.corpus == "builtin",
    )
    payload = {"command": "verify"}
    payload.update(report_to_dict(report))
    _write_text(render_json(payload), args.out)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _positive_float(text: str) -> float:
    value = float(text)
    if not math.isfinite(value) or value <= 0.0:
        raise argparse.ArgumentTypeError("tolerance must be a positive finite number")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coronakit",
        description="Corona products of graphs: construction, resistance distances, Kirchhoff indices and self-verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a product and write edge list plus layout manifest")
    b.add_argument("--kind", choices=("vertex", "edge"), required=True)
    b.add_argument("--g1", required=True, help="edge-list file for the first factor")
    b.add_argument("--g2", required=True, help="edge-list file for the second factor")
    b.add_argument("--out", help="edge-list output path (default stdout)")
    b.add_argument(
        "--manifest",
        help="manifest path; defaults to OUT.manifest.json when --out is given, '-' for stdout",
    )
    b.set_defaults(func=cmd_build)

    r = sub.add_parser("resistance", help="pairwise effective resistances of a product")
    r.add_argument("--kind", choices=("vertex", "edge"), required=True)
    r.add_argument("--g1", required=True)
    r.add_argument("--g2", required=True)
    r.add_argument("--method", choices=("oracle", "closed-form", "both"), default="oracle")
    r.add_argument("--format", choices=("json", "csv"), default="json")
    r.add_argument("--tolerance", type=_positive_float, help="bound for --method both agreement")
    r.add_argument("--out")
    r.set_defaults(func=cmd_resistance)

    k = sub.add_parser("kirchhoff", help="Kirchhoff index of a product")
    k.add_argument("--formula", choices=("thm4.1", "cor4.2", "thm4.3", "oracle"), required=True)
    k.add_argument("--g1", required=True)
    k.add_argument("--g2", required=True)
    k.add_argument("--kind", choices=("vertex", "edge"), help="product kind (needed with --formula oracle)")
    k.add_argument("--tolerance", type=_positive_float, help="bound for closed-form vs oracle agreement")
    k.add_argument("--out")
    k.set_defaults(func=cmd_kirchhoff)

    v = sub.add_parser("verify", help="run the self-verification suite and emit a JSON report")
    v.add_argument("--corpus", choices=("builtin", "none"), default="builtin")
    v.add_argument(
        "--pair",
        nargs=2,
        action="append",
        metavar=("G1", "G2"),
        help="extra factor pair by catalog name (K<n>, P<n>, C<n>, S<n>); repeatable",
    )
    v.add_argument("--tolerance", type=_positive_float, help="override every pass/fail bound")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else 0
    try:
        return args.func(args)
    except EdgeListError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except SingularMatrixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CoronaKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())
