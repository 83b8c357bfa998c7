"""Command-line interface.

Subcommands:

* validate FILE: check the description and echo the declared orders.
* words FILE -k N: admissible words of length N, one per line.
* analyze FILE | --angles LIST: full verdict report.
* ktheory FILE [--af-core K | --bunce-deddens K]: K-groups and ladders.
* ideals FILE: invariant saturated subsets, lattice and quotients.
* oracle orbit FILE ... / oracle weyl ...: the numeric oracles.

Exit codes: 0 success, 2 graph validation failure (a report is still
emitted), 1 usage or IO errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .angles import DEFAULT_GENERATOR_VALUE, GeneratorContext, parse_angle
from .errors import ParseError, RotshiftError
from .fileformat import SystemDocument, parse_system, serialize_system
from .ideals import enumerate_invariant_saturated, hasse_edges, quotient_system
from .ktheory import bunce_deddens_data, core_dimension_data, graph_k_groups
from .oracles import orbit_density, weyl_sums
from .report import analyze_document
from .subshift import MAX_WORD_LENGTH, admissible_words

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _read_document(path: str) -> tuple[SystemDocument, str]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        sys.exit(EXIT_USAGE)
    try:
        return parse_system(text), text
    except ParseError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _gen_overrides(pairs: list[str] | None) -> dict[str, float]:
    out: dict[str, float] = {}
    for pair in pairs or ():
        name, eq, value = pair.partition("=")
        if not eq:
            print(f"error: --gen wants name=value, got {pair!r}", file=sys.stderr)
            sys.exit(EXIT_USAGE)
        try:
            out[name.strip()] = float(value)
        except ValueError:
            print(f"error: bad numeric value in --gen {pair!r}", file=sys.stderr)
            sys.exit(EXIT_USAGE)
    return out


def _emit(payload: dict, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _angles_document(angle_list: str) -> SystemDocument:
    """Build an n-loop full-shift document from a comma-separated list
    of exact angle expressions; identifiers are auto-declared as
    generators in order of first appearance."""
    import re

    exprs = [chunk.strip() for chunk in angle_list.split(",")]
    if any(not chunk for chunk in exprs):
        print("error: empty entry in --angles list", file=sys.stderr)
        sys.exit(EXIT_USAGE)
    names: list[str] = []
    for chunk in exprs:
        for ident in re.findall(r"[A-Za-z_][A-Za-z0-9_]*", chunk):
            if ident not in names:
                names.append(ident)
    context = GeneratorContext(tuple(names))
    try:
        angles = {f"s{i+1}": parse_angle(expr, context) for i, expr in enumerate(exprs)}
    except RotshiftError as exc:
        print(f"error: bad --angles list: {exc}", file=sys.stderr)
        sys.exit(EXIT_USAGE)
    symbols = tuple(sorted(angles, key=lambda s: int(s[1:])))
    return SystemDocument(
        context=context,
        alphabet=symbols,
        angles=angles,
        vertices=("v",),
        edges=tuple(("v", "v", s) for s in symbols),
    )


# ---------------------------------------------------------------------------
# subcommands


def _cmd_validate(args) -> int:
    doc, text = _read_document(args.file)
    report, ok = analyze_document(doc, source_text=text)
    payload = {
        "version": report["version"],
        "input_digest": report["input_digest"],
        "validation": report["validation"],
    }
    if ok:
        lines = [
            "validation: ok",
            f"vertices: {' '.join(report['validation']['vertices'])}",
            f"alphabet: {' '.join(report['validation']['alphabet'])}",
            f"edges: {report['validation']['edge_count']}",
        ]
    else:
        lines = ["validation: FAILED", json.dumps(payload["validation"], indent=2)]
    _emit(payload, args.json, lines)
    return EXIT_OK if ok else EXIT_INVALID


def _cmd_words(args) -> int:
    doc, _text = _read_document(args.file)
    try:
        graph = doc.graph()
    except RotshiftError as exc:
        _emit(
            {"validation": {"ok": False, "detail": str(exc)}},
            args.json,
            [f"validation: FAILED: {exc}"],
        )
        return EXIT_INVALID
    cap = args.max_word_len if args.max_word_len is not None else MAX_WORD_LENGTH
    try:
        words = admissible_words(graph, args.length, cap=cap)
    except RotshiftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = {
        "length": args.length,
        "alphabet": list(graph.alphabet),
        "count": len(words),
        "words": [list(w) for w in words],
    }
    lines = [" ".join(w) if w else "(empty word)" for w in words]
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    if args.angles is not None:
        doc = _angles_document(args.angles)
        text = serialize_system(doc)
    else:
        if args.file is None:
            print("error: analyze needs a FILE or --angles", file=sys.stderr)
            return EXIT_USAGE
        doc, text = _read_document(args.file)
    report, ok = analyze_document(doc, source_text=text, ideal_cap=args.ideal_cap)
    lines = []
    if ok:
        lines.append(f"validation: ok ({len(doc.vertices)} vertices, {len(doc.alphabet)} symbols)")
        for key in (
            "condition_I",
            "irreducible",
            "irrational_cycle",
            "g_minimal",
            "simple_O",
            "purely_infinite_O",
        ):
            section = report[key]
            lines.append(f"{key}: {section['verdict']}  [{section['criterion']}]")
        fs = report["fullshift"]
        lines.append(f"fullshift.F_simple: {fs['F_simple']['verdict']}")
        lines.append(
            f"fullshift.uniformly_distributed: {fs['uniformly_distributed']['verdict']}"
        )
        kt = report["k_theory"]
        lines.append(f"k_theory: K0 = {kt['K0']}, K1 = {kt['K1']}")
        if report["ideals"] is not None:
            pretty = [
                "{" + ",".join(w) + "}" for w in report["ideals"]["invariant_saturated"]
            ]
            lines.append(f"ideals: {' '.join(pretty)}")
        for w in report["warnings"]:
            lines.append(f"warning: {w}")
    else:
        lines.append("validation: FAILED")
        lines.append(json.dumps(report["validation"], indent=2))
    _emit(report, args.json, lines)
    return EXIT_OK if ok else EXIT_INVALID


def _cmd_ktheory(args) -> int:
    doc, _text = _read_document(args.file)
    try:
        graph = doc.graph()
    except RotshiftError as exc:
        _emit(
            {"validation": {"ok": False, "detail": str(exc)}},
            args.json,
            [f"validation: FAILED: {exc}"],
        )
        return EXIT_INVALID
    groups = graph_k_groups(graph)
    payload: dict = {"k_theory": groups.to_json()}
    lines = [f"K0 = K1 = {groups.k0}"]
    if args.af_core is not None:
        data = core_dimension_data(graph, args.af_core)
        payload["af_core"] = data.to_json()
        lines.append(f"core levels 0..{args.af_core}: rank {graph.vertex_count} in both degrees per level")
        lines.append(f"connecting map (both degrees): {data.k0_maps[0].to_lists() if data.k0_maps else 'none'}")
    if args.bunce_deddens is not None:
        if graph.vertex_count != 1 or len(graph.alphabet) < 2:
            print("error: --bunce-deddens needs a single-vertex full shift", file=sys.stderr)
            return EXIT_USAGE
        n = len(graph.alphabet)
        data = bunce_deddens_data(n, args.bunce_deddens)
        payload["bunce_deddens"] = data.to_json()
        lines.append(
            f"scaled-integer ladder: K0 = Z --x{n}--> Z (limit {data.k0_limit}, "
            f"order unit 1), K1 = Z --id--> Z (limit {data.k1_limit})"
        )
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_ideals(args) -> int:
    doc, _text = _read_document(args.file)
    try:
        graph = doc.graph()
    except RotshiftError as exc:
        _emit(
            {"validation": {"ok": False, "detail": str(exc)}},
            args.json,
            [f"validation: FAILED: {exc}"],
        )
        return EXIT_INVALID
    try:
        kwargs = {} if args.ideal_cap is None else {"cap": args.ideal_cap}
        subsets = enumerate_invariant_saturated(graph, **kwargs)
    except RotshiftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    entries = []
    lines = []
    for s in subsets:
        names = s.names(graph)
        entry: dict = {"vertices": names}
        label = "{" + ",".join(names) + "}"
        if 0 < len(s.vertices) < graph.vertex_count:
            q = quotient_system(graph, s.vertices)
            entry["quotient"] = {
                "vertices": list(q.graph.vertices),
                "surviving_alphabet": list(q.surviving_alphabet),
                "warning": q.warning,
            }
            label += (
                f"  -> quotient on {{{','.join(q.graph.vertices)}}}"
                f" with alphabet {{{','.join(q.surviving_alphabet)}}}"
            )
        entries.append(entry)
        lines.append(label)
    covers = hasse_edges(subsets)
    lines.append(
        "lattice covers: "
        + (
            ", ".join(f"{i}<{j}" for i, j in covers)
            if covers
            else "(chain of length 1)"
        )
    )
    payload = {"invariant_saturated": entries, "hasse": covers}
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_oracle_orbit(args) -> int:
    doc, _text = _read_document(args.file)
    try:
        graph = doc.graph()
    except RotshiftError as exc:
        print(f"error: graph invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID
    overrides = _gen_overrides(args.gen)
    theta = doc.float_angles(overrides)
    start_vertex = args.start_vertex or graph.vertices[0]
    if start_vertex not in graph.vertex_index:
        print(f"error: unknown start vertex {start_vertex!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        sample = orbit_density(
            graph, theta, start_vertex, args.start_point, args.steps, args.eps
        )
    except RotshiftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = {
        "epsilon": sample.epsilon,
        "steps_used": sample.steps_used,
        "dense": sample.dense,
        "gap": sample.gap,
        "points_per_fiber": {v: len(p) for v, p in sample.points.items()},
    }
    lines = [
        f"epsilon: {sample.epsilon}",
        f"steps used: {sample.steps_used}",
    ]
    for v in graph.vertices:
        lines.append(
            f"fiber {v}: {len(sample.points[v])} points, gap {sample.gap[v]:.6f}"
        )
    lines.append(f"dense: {sample.dense}")
    _emit(payload, args.json, lines)
    return EXIT_OK


def _parse_float_or_expr(chunk: str, overrides: dict[str, float]) -> float:
    try:
        return float(chunk)
    except ValueError:
        pass
    try:
        return float(Fraction(chunk))
    except (ValueError, ZeroDivisionError):
        pass
    import re

    names = []
    for ident in re.findall(r"[A-Za-z_][A-Za-z0-9_]*", chunk):
        if ident not in names:
            names.append(ident)
    context = GeneratorContext(tuple(names))
    angle = parse_angle(chunk, context)
    values = {n: overrides.get(n, DEFAULT_GENERATOR_VALUE) for n in names}
    return angle.to_float(values)


def _cmd_oracle_weyl(args) -> int:
    overrides = _gen_overrides(args.gen)
    try:
        theta = [
            _parse_float_or_expr(chunk.strip(), overrides)
            for chunk in args.angles.split(",")
        ]
    except RotshiftError as exc:
        print(f"error: bad --angles list: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        table = weyl_sums(theta, args.n, args.lmax)
    except (RotshiftError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = {
        "angles": theta,
        "n": args.n,
        "table": [{"level": l, "value": v} for l, v in table],
        "max_value": max(v for _, v in table),
    }
    lines = [f"level {l}: {v:.12f}" for l, v in table]
    lines.append(f"max over levels: {payload['max_value']:.12f}")
    _emit(payload, args.json, lines)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="rotshift", description=__doc__)
    parser.add_argument("--version", action="version", version=f"rotshift {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a system description")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("words", help="admissible words of a given length")
    p.add_argument("file")
    p.add_argument("-k", "--length", type=int, required=True)
    p.add_argument("--max-word-len", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_words)

    p = sub.add_parser("analyze", help="full verdict report")
    p.add_argument("file", nargs="?")
    p.add_argument("--angles", default=None, help="comma-separated exact angles (full shift)")
    p.add_argument("--ideal-cap", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("ktheory", help="K-groups and inductive ladders")
    p.add_argument("file")
    p.add_argument("--af-core", type=int, default=None, metavar="DEPTH")
    p.add_argument("--bunce-deddens", type=int, default=None, metavar="DEPTH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ktheory)

    p = sub.add_parser("ideals", help="invariant saturated subsets and quotients")
    p.add_argument("file")
    p.add_argument("--ideal-cap", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ideals)

    p = sub.add_parser("oracle", help="numeric oracles")
    orc = p.add_subparsers(dest="oracle_command", required=True)

    q = orc.add_parser("orbit", help="breadth-first orbit density sampling")
    q.add_argument("file")
    q.add_argument("--steps", type=int, default=100_000)
    q.add_argument("--eps", type=float, default=0.05)
    q.add_argument("--start-vertex", default=None)
    q.add_argument("--start-point", type=float, default=0.0)
    q.add_argument("--gen", action="append", metavar="NAME=VALUE")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=_cmd_oracle_orbit)

    q = orc.add_parser("weyl", help="normalized exponential sums")
    q.add_argument("--angles", required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--lmax", type=int, required=True)
    q.add_argument("--gen", action="append", metavar="NAME=VALUE")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=_cmd_oracle_weyl)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RotshiftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
