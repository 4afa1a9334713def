"""Command-line surface: graph ingestion, analysis, verification reports.

Reports are deterministic: identical invocations produce byte-identical
stdout. Timing goes to stderr. All integers are serialized as decimal
strings and rationals as "p/q" so consumers never face overflow or floats.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .errors import GraphError, GraphFormatError, StructureError
from .graphs import (
    GENERATOR_FAMILIES,
    Graph,
    SignedGraph,
    detect_signed_two_eigenvalue,
    detect_srg,
    detect_two_eigenvalue,
    format_graph,
    generate,
    is_balanced,
    read_graph_file,
)
from .groups import (
    critical_group,
    spanning_tree_count,
    verify_exponent_theorem,
    verify_spectral_bound,
)
from .linalg import (
    char_poly,
    distinct_nonzero_eigenvalue_product,
    gershgorin_bound,
    integer_roots,
    laplacian,
)
from .pairing import (
    edge_pairing_closed_form,
    monodromy_pairing,
    orthogonal_subset,
    verify_tail_heavy,
)
from .scan import SCAN_NOTE, enumerate_feasible, scan_tight_denominators

SCHEMA = "critgroup/1"


def _jint(x: int) -> str:
    return str(int(x))


def _jfrac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _jedge(e) -> list[str]:
    return [_jint(e[0]), _jint(e[1])]


# ---------------------------------------------------------------------------
# Input handling


def _add_input_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", metavar="FILE", help="graph file to read")
    p.add_argument("--family", metavar="NAME", help=f"one of: {', '.join(GENERATOR_FAMILIES)}")
    p.add_argument("--params", metavar="LIST", help="comma-separated family parameters")


def _add_format_argument(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default="json")


def _parse_params(raw: str | None):
    if raw is None:
        return []
    parts = [piece.strip() for piece in raw.split(",") if piece.strip()]
    try:
        return [int(piece) for piece in parts]
    except ValueError:
        return raw if len(parts) != 1 else parts[0]


def _load_graph(args) -> tuple[Graph | SignedGraph, dict]:
    if args.input and args.family:
        raise GraphError("give either --input or --family, not both")
    if args.input:
        g = read_graph_file(args.input)
        return g, {"source": "file", "path": args.input}
    if args.family:
        params = _parse_params(args.params)
        g = generate(args.family, params)
        descriptor = {"source": "family", "family": args.family}
        if args.params is not None:
            descriptor["params"] = args.params
        return g, descriptor
    raise GraphError("an input graph is required: --input FILE or --family NAME")


def _parse_edge(raw: str, flag: str) -> tuple[int, int]:
    parts = raw.split(",")
    if len(parts) != 2:
        raise GraphError(f"{flag} expects 'u,v', got {raw!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphError(f"{flag} expects integers, got {raw!r}") from None


# ---------------------------------------------------------------------------
# Report pieces


def _graph_summary(g: Graph | SignedGraph) -> dict:
    signed = isinstance(g, SignedGraph)
    base = g.graph if signed else g
    summary = {
        "n": _jint(g.n),
        "edge_count": _jint(len(base.edges)),
        "signed": signed,
        "connected": base.is_connected(),
    }
    if signed:
        summary["negative_edge_count"] = _jint(len(g.negative_edges))
        summary["balanced"] = is_balanced(g).balanced
    return summary


def _structure_block(g: Graph | SignedGraph) -> dict | None:
    if isinstance(g, SignedGraph):
        params = detect_signed_two_eigenvalue(g)
        if params is None:
            return None
        block = {
            "type": "signed_two_eigenvalue",
            "case": params.case,
            "eigenvalue_sum": _jint(params.eigenvalue_sum),
            "eigenvalue_product": _jint(params.eigenvalue_product),
        }
        if params.regular:
            block["k"] = _jint(params.k1)
            block["lam"] = _jint(params.lam)
        else:
            block["k1"] = _jint(params.k1)
            block["k2"] = _jint(params.k2)
        return block
    srg = detect_srg(g)
    if srg is not None:
        return {
            "type": "strongly_regular",
            "n": _jint(srg.n),
            "k": _jint(srg.k),
            "lam": _jint(srg.lam),
            "mu": _jint(srg.mu),
            "eigenvalue_sum": _jint(srg.eigenvalue_sum),
            "eigenvalue_product": _jint(srg.eigenvalue_product),
        }
    try:
        params = detect_two_eigenvalue(g)
    except StructureError:
        params = None
    if params is not None and not params.regular:
        return {
            "type": "two_degree",
            "k1": _jint(params.k1),
            "k2": _jint(params.k2),
            "mu": _jint(params.mu),
            "mu_bar": _jint(params.mu_bar),
            "eigenvalue_sum": _jint(params.eigenvalue_sum),
            "eigenvalue_product": _jint(params.eigenvalue_product),
        }
    return None


def _spectrum_block(g: Graph | SignedGraph) -> dict:
    lap = laplacian(g)
    poly = char_poly(lap)
    roots, remainder = integer_roots(poly, gershgorin_bound(lap))
    block = {
        "integer_eigenvalues": [
            {"value": _jint(r), "multiplicity": _jint(m)} for r, m in roots
        ]
    }
    if remainder.degree > 0:
        block["irrational_factor_coefficients"] = [
            _jint(c) for c in remainder.coeffs
        ]
    return block


def _group_block(g: Graph | SignedGraph) -> dict:
    group = critical_group(g)
    block = {
        "invariant_factors": [_jint(f) for f in group.invariant_factors],
        "exponent": _jint(group.exponent),
        "order": _jint(group.order),
    }
    if isinstance(g, Graph):
        block["spanning_trees"] = _jint(spanning_tree_count(g))
    return block


# ---------------------------------------------------------------------------
# Subcommands (each returns (result dict, exit code))


def _cmd_generate(args) -> tuple[dict, dict, int]:
    g, descriptor = _load_graph(args)
    base = g.graph if isinstance(g, SignedGraph) else g
    result = {"n": _jint(g.n), "edges": []}
    for u, v in base.sorted_edges():
        entry = {"u": _jint(u), "v": _jint(v)}
        if isinstance(g, SignedGraph):
            entry["sign"] = "-" if (u, v) in g.negative_edges else "+"
        result["edges"].append(entry)
    result["file"] = format_graph(g)
    return result, descriptor, 0


def _cmd_analyze(args) -> tuple[dict, dict, int]:
    g, descriptor = _load_graph(args)
    result = {
        "graph": _graph_summary(g),
        "structure": _structure_block(g),
        "spectrum": _spectrum_block(g),
    }
    try:
        result["group"] = _group_block(g)
    except (GraphError, StructureError) as exc:
        result["group"] = None
        result["group_note"] = str(exc)
    return result, descriptor, 0


def _cmd_group(args) -> tuple[dict, dict, int]:
    g, descriptor = _load_graph(args)
    return _group_block(g), descriptor, 0


def _cmd_pairing(args) -> tuple[dict, dict, int]:
    g, descriptor = _load_graph(args)
    if isinstance(g, SignedGraph):
        raise StructureError("the pairing is defined for unsigned graphs only")
    group = critical_group(g)
    result = {"m": _jint(group.exponent)}
    if (args.edge1 is None) != (args.edge2 is None):
        raise GraphError("give both --edge1 and --edge2, or neither")
    closed_form = True
    try:
        edge_pairing_closed_form(g, g.sorted_edges()[0], g.sorted_edges()[0])
    except StructureError:
        closed_form = False
    result["closed_form"] = closed_form

    def pair_value(e1, e2) -> str:
        if closed_form:
            return str(edge_pairing_closed_form(g, e1, e2))
        d1 = [0] * g.n
        d2 = [0] * g.n
        d1[e1[0] - 1], d1[e1[1] - 1] = 1, -1
        d2[e2[0] - 1], d2[e2[1] - 1] = 1, -1
        return str(monodromy_pairing(g, d1, d2))

    if args.edge1 is not None:
        e1 = _parse_edge(args.edge1, "--edge1")
        e2 = _parse_edge(args.edge2, "--edge2")
        result["pairs"] = [
            {"edge1": _jedge(e1), "edge2": _jedge(e2), "value": pair_value(e1, e2)}
        ]
    else:
        edges = g.sorted_edges()
        result["pairs"] = [
            {"edge1": _jedge(e1), "edge2": _jedge(e2), "value": pair_value(e1, e2)}
            for i, e1 in enumerate(edges)
            for e2 in edges[i:]
        ]
    return result, descriptor, 0


def _cmd_orthogonal(args) -> tuple[dict, dict, int]:
    g, descriptor = _load_graph(args)
    found = orthogonal_subset(g, mode=args.mode, structural_hints=not args.no_hints)
    result = {
        "mode": args.mode,
        "size": _jint(found.size),
        "edges": [_jedge(e) for e in found.edges],
        "certificate": [
            {"edge1": _jedge(a), "edge2": _jedge(b), "value": str(v)}
            for a, b, v in found.certificate
        ],
    }
    return result, descriptor, 0


def _cmd_verify(args) -> tuple[dict, dict, int]:
    g, descriptor = _load_graph(args)
    if args.check == "exponent":
        report = verify_exponent_theorem(g)
        achieving = None
        if report.achieving_element is not None:
            kind, vertices = report.achieving_element
            achieving = {"type": kind, "vertices": [_jint(x) for x in vertices]}
        result = {
            "check": "exponent",
            "kind": report.kind,
            "classification": report.classification,
            "spectral_bound": _jint(report.spectral_bound),
            "expected_exponent": _jint(report.expected_exponent),
            "exponent": _jint(report.exponent),
            "invariant_factors": [_jint(f) for f in report.group.invariant_factors],
            "max_edge_order": _jint(report.max_edge_order),
            "max_edge": _jedge(report.max_edge) if report.max_edge else None,
            "achieving_element": achieving,
            "verdict": "pass" if report.matched else "fail",
        }
        if report.half_bound_even is not None:
            result["half_bound_even"] = report.half_bound_even
        return result, descriptor, 0 if report.matched else 1
    if args.check == "spectral-bound":
        ok = verify_spectral_bound(g)
        product = distinct_nonzero_eigenvalue_product(laplacian(g))
        result = {
            "check": "spectral-bound",
            "exponent": _jint(critical_group(g).exponent),
            "distinct_eigenvalue_product": _jint(product),
            "verdict": "pass" if ok else "fail",
        }
        return result, descriptor, 0 if ok else 1
    report = verify_tail_heavy(g, mode=args.mode)
    result = {
        "check": "tail-heavy",
        "parameters": {
            "n": _jint(report.params.n),
            "k": _jint(report.params.k),
            "lam": _jint(report.params.lam),
            "mu": _jint(report.params.mu),
        },
        "self_pairing_denominator": _jint(report.denominator),
        "orthogonal_size": _jint(report.orthogonal_set.size),
        "orthogonal_edges": [_jedge(e) for e in report.orthogonal_set.edges],
        "predicted_subgroup": [_jint(f) for f in report.predicted.invariant_factors],
        "invariant_factors": [_jint(f) for f in report.group.invariant_factors],
        "divisibility_ok": report.divisibility_ok,
        "strong_pattern": report.strong_pattern,
        "verdict": "pass" if report.passed else "fail",
    }
    return result, descriptor, 0 if report.passed else 1


def _cmd_scan(args) -> tuple[dict, dict, int]:
    if args.full:
        tuples = enumerate_feasible(args.nmax)
    else:
        tuples = scan_tight_denominators(args.nmax)
    rows = []
    for ft in tuples:
        p = ft.params
        rows.append(
            {
                "n": _jint(p.n),
                "k": _jint(p.k),
                "lam": _jint(p.lam),
                "mu": _jint(p.mu),
                "multiplicities": [_jint(m) for m in ft.multiplicities],
                "conference": ft.conference,
                "denominator": _jint(ft.denominator),
                "denominator_equals_bound": ft.denominator_equals_bound,
                "needs_review": ft.needs_review,
            }
        )
    result = {
        "nmax": _jint(args.nmax),
        "full_enumeration": bool(args.full),
        "note": SCAN_NOTE,
        "tuples": rows,
    }
    return result, {"source": "scan"}, 0


# ---------------------------------------------------------------------------
# Rendering


def _render_text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(obj, dict):
        for key, value in obj.items():
            if isinstance(value, dict):
                lines.append(f"{pad}{key}:")
                lines.extend(_render_text(value, indent + 1))
            elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
                lines.append(f"{pad}{key}:")
                for item in value:
                    if isinstance(item, list):
                        inner = ", ".join(str(x) for x in item)
                        lines.append(f"{'  ' * (indent + 1)}- [{inner}]")
                        continue
                    rendered = _render_text(item, indent + 2)
                    if rendered:
                        head = rendered[0].lstrip()
                        lines.append(f"{'  ' * (indent + 1)}- {head}")
                        lines.extend(rendered[1:])
            elif isinstance(value, list):
                lines.append(f"{pad}{key}: [{', '.join(str(x) for x in value)}]")
            else:
                lines.append(f"{pad}{key}: {value}")
    elif isinstance(obj, list):
        for item in obj:
            lines.append(f"{pad}{item}")
    else:
        lines.append(f"{pad}{obj}")
    return lines


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(_render_text(report)) + "\n")


# ---------------------------------------------------------------------------
# Entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critgroup",
        description="Exact critical groups of graphs and signed graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a graph in the file format")
    _add_input_arguments(p)
    _add_format_argument(p)
    p.set_defaults(handler=_cmd_generate)

    p = sub.add_parser("analyze", help="parameters, spectrum, and group")
    _add_input_arguments(p)
    _add_format_argument(p)
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("group", help="invariant factors and exponent")
    _add_input_arguments(p)
    _add_format_argument(p)
    p.set_defaults(handler=_cmd_group)

    p = sub.add_parser("pairing", help="edge pairing table or a single pair")
    _add_input_arguments(p)
    _add_format_argument(p)
    p.add_argument("--edge1", metavar="U,V", help="first edge")
    p.add_argument("--edge2", metavar="X,Y", help="second edge")
    p.set_defaults(handler=_cmd_pairing)

    p = sub.add_parser("orthogonal", help="orthogonal edge set search")
    _add_input_arguments(p)
    _add_format_argument(p)
    p.add_argument("--mode", choices=("exact", "greedy"), default="exact")
    p.add_argument("--no-hints", action="store_true", help="disable structural seeds")
    p.set_defaults(handler=_cmd_orthogonal)

    p = sub.add_parser("verify", help="run a theorem verifier")
    _add_input_arguments(p)
    _add_format_argument(p)
    p.add_argument(
        "--check",
        required=True,
        choices=("exponent", "spectral-bound", "tail-heavy"),
    )
    p.add_argument("--mode", choices=("exact", "greedy"), default="exact")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("scan", help="feasible parameter scan")
    _add_format_argument(p)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--full", action="store_true", help="emit the full feasible enumeration")
    p.set_defaults(handler=_cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        result, descriptor, status = args.handler(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, StructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = {
        "schema": SCHEMA,
        "command": args.command,
        "input": descriptor,
        "result": result,
    }
    _emit(report, args.format)
    print(f"elapsed: {time.monotonic() - started:.3f}s", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
