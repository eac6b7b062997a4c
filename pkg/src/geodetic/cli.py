"""Command-line front end.

Exit codes are uniform across subcommands: 0 when the geodetic-favourable
claim holds, 1 when a witness or violation was found, 2 for usage or input
errors.  Every subcommand accepts ``--json`` for machine-readable output.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import reports
from .cycles import lemma1_scan
from .embedding import (
    build,
    evaluate_spec,
    format_spec_line,
    parse_spec_line,
)
from .geodesics import classify_k, count_geodesics, enumerate_geodesics
from .graphs import GraphError, format_edge_list, load_edge_list
from .harness import (
    SearchLimits,
    SweepBounds,
    corollary4_check,
    finding_record,
    sweep_validate,
)
from .homeomorph import theorem1_check

OK, WITNESS, USAGE = 0, 1, 2


def _emit(args: argparse.Namespace, command: str, payload: dict, text: list[str]) -> None:
    if args.json:
        print(reports.dump_report(reports.make_report(command, payload)))
    else:
        for line in text:
            print(line)


def _cmd_classify(args: argparse.Namespace) -> int:
    g = load_edge_list(args.graph)
    profile = count_geodesics(g)
    cls = classify_k(profile)
    u, v = profile.witness_pair
    payload = {
        "k": cls.k,
        "class": cls.label,
        "witness_pair": [u, v],
        "witness_distance": profile.distance(u, v),
        "witness_count": profile.geodesic_count(u, v),
    }
    text = [str(cls)]
    if cls.k > 1:
        text.append(
            f"witness pair ({u}, {v}): {profile.geodesic_count(u, v)} geodesics "
            f"of length {profile.distance(u, v)}"
        )
        sample = enumerate_geodesics(g, u, v, cap=4)
        payload["witness_geodesics"] = [list(p) for p in sample.paths]
        payload["witness_geodesics_truncated"] = sample.truncated
        for p in sample.paths:
            text.append("  " + " - ".join(str(x) for x in p))
        if sample.truncated:
            text.append("  ...")
    _emit(args, "classify", payload, text)
    return OK if cls.k == 1 else WITNESS


def _cmd_lemma1(args: argparse.Namespace) -> int:
    g = load_edge_list(args.graph)
    verdict = lemma1_scan(g, args.max_len)
    payload = {
        "witness": list(verdict.witness.vertices) if verdict.witness else None,
        "witness_pair": list(verdict.witness_pair) if verdict.witness_pair else None,
        "scanned_max_length": verdict.scanned_max_length,
        "exhaustive": verdict.exhaustive,
    }
    if verdict.witness:
        c = verdict.witness
        u, v = verdict.witness_pair
        text = [
            f"witness cycle of length {c.length}: " + " ".join(str(x) for x in c.vertices),
            f"opposite pair ({u}, {v}) realises distance {c.length // 2}, so both "
            "arcs are geodesics; the graph is not geodetic",
        ]
        _emit(args, "lemma1", payload, text)
        return WITNESS
    scope = (
        "scan exhaustive"
        if verdict.exhaustive
        else f"scanned cycles up to length {verdict.scanned_max_length} only"
    )
    _emit(args, "lemma1", payload, [f"no witness cycle ({scope})"])
    return OK


def _cmd_build_embedded(args: argparse.Namespace) -> int:
    spec = parse_spec_line(args.spec)
    h = build(spec)
    header = (
        f"embedded even graph {format_spec_line(spec)}\n"
        f"cycle vertices 0..{spec.cycle_length - 1}, "
        f"endpoints at {', '.join(str(p) for p in h.node_positions)}"
    )
    edge_text = format_edge_list(h.graph, header=header)
    payload = {
        "spec": format_spec_line(spec),
        "vertices": h.graph.vertex_count,
        "edges": h.graph.edge_count,
        "node_positions": list(h.node_positions),
        "chord_paths": [list(p) for p in h.chord_paths],
        "edge_list": edge_text,
    }
    if args.output:
        Path(args.output).write_text(edge_text)
        _emit(
            args,
            "build-embedded",
            payload,
            [
                f"wrote {h.graph.vertex_count} vertices / {h.graph.edge_count} edges "
                f"to {args.output}"
            ],
        )
    else:
        _emit(args, "build-embedded", payload, [edge_text.rstrip("\n")])
    return OK


def _cmd_check_embedded(args: argparse.Namespace) -> int:
    spec = parse_spec_line(args.spec)
    report = evaluate_spec(spec)
    payload = {
        "spec": format_spec_line(spec),
        "chord_valid": report.validation.ok,
        "problems": list(report.validation.problems),
        "condition1": None,
        "condition2": None,
        "embeddedness": None,
        "predicted": None,
    }
    text = [format_spec_line(spec)]
    for problem in report.validation.problems:
        text.append(f"invalid: {problem}")
    if report.condition1 is not None:
        pairs = ", ".join(
            f"A{e.chord_index + 1}: {e.cycle_lengths[0]}/{e.cycle_lengths[1]}"
            for e in report.condition1.entries
        )
        payload["condition1"] = {
            "ok": report.condition1.ok,
            "chord_arc_cycle_lengths": [list(e.cycle_lengths) for e in report.condition1.entries],
        }
        text.append(
            f"condition 1 (chord+arc cycles all odd): "
            f"{'ok' if report.condition1.ok else 'FAIL'} ({pairs})"
        )
    if report.condition2 is not None:
        payload["condition2"] = {
            "ok": report.condition2.ok,
            "adjacent_chord_cycle_lengths": list(report.condition2.lengths),
        }
        text.append(
            f"condition 2 (neighbouring-chord cycles all {spec.cycle_length}): "
            f"{'ok' if report.condition2.ok else 'FAIL'} "
            f"({', '.join(str(x) for x in report.condition2.lengths)})"
        )
    if report.embeddedness is not None:
        payload["embeddedness"] = {
            "ok": report.embeddedness.ok,
            "violations": [
                {
                    "kind": v.kind,
                    "chords": list(v.chord_indices),
                    "length": v.length,
                    "arc_side": v.arc_side,
                }
                for v in report.embeddedness.violations
            ],
        }
        text.append(
            f"embeddedness (no even cycle shorter than {spec.cycle_length} among them): "
            f"{'ok' if report.embeddedness.ok else 'FAIL'}"
        )
        for v in report.embeddedness.violations:
            names = "+".join(f"A{i + 1}" for i in v.chord_indices)
            text.append(f"  even cycle of length {v.length} from {v.kind} ({names})")
    if report.predicted_class is not None:
        bound = "K=1" if spec.n == 2 else "K<=2"
        payload["predicted"] = report.predicted_class.label
        text.append(f"predicted class: {report.predicted_class.label} ({bound})")
    else:
        text.append("no class prediction (checks failed)")
    _emit(args, "check-embedded", payload, text)
    return OK if report.all_conditions_hold else WITNESS


def _cmd_k4_check(args: argparse.Namespace) -> int:
    g = load_edge_list(args.graph)
    report = theorem1_check(g)
    payload = {
        "is_k4_homeomorph": report.is_k4_homeomorph,
        "segments_are_geodesics": report.segments_are_geodesics,
        "three_segment_cycles_odd": report.three_segment_cycles_odd,
        "four_segment_cycles_equal": report.four_segment_cycles_equal,
        "verdict_geodetic": report.verdict_geodetic,
    }
    if not report.is_k4_homeomorph:
        _emit(args, "k4-check", payload, ["not homeomorphic to K4; test does not apply"])
        return WITNESS
    text = [
        "homeomorphic to K4",
        f"segments are geodesics: {'ok' if report.segments_are_geodesics else 'FAIL'}",
        f"three-segment cycles all odd: {'ok' if report.three_segment_cycles_odd else 'FAIL'}",
        f"four-segment cycles equal length: "
        f"{'ok' if report.four_segment_cycles_equal else 'FAIL'}",
        f"verdict: {'geodetic' if report.verdict_geodetic else 'not geodetic'}",
    ]
    _emit(args, "k4-check", payload, text)
    return OK if report.verdict_geodetic else WITNESS


def _cmd_sweep(args: argparse.Namespace) -> int:
    bounds = SweepBounds(args.lmax, args.include_invalid)
    findings = list(sweep_validate(bounds))
    records = [finding_record(f) for f in findings]
    if args.output:
        header = {"L_max": args.lmax, "include_invalid": args.include_invalid}
        with open(args.output, "w") as out:
            reports.write_findings(out, header, records)
    rows: dict[tuple[int, int], dict[str, int]] = {}
    for f in findings:
        row = rows.setdefault((f.spec.L, f.spec.n), {"specs": 0, "ok": 0, "bad": 0})
        row["specs"] += 1
        row["ok"] += f.report.all_conditions_hold
        row["bad"] += not f.consistent
    inconsistent = sum(row["bad"] for row in rows.values())
    payload = {
        "L_max": args.lmax,
        "include_invalid": args.include_invalid,
        "total_specs": len(findings),
        "conditions_satisfied": sum(row["ok"] for row in rows.values()),
        "inconsistent": inconsistent,
        "findings_file": args.output,
    }
    text = ["  L  n   specs  conds-ok  inconsistent"]
    for (big_l, n), row in sorted(rows.items()):
        text.append(f"{big_l:>3}{n:>3}{row['specs']:>8}{row['ok']:>10}{row['bad']:>14}")
    text.append(
        f"total: {len(findings)} specs, {inconsistent} inconsistent"
        + (f", findings written to {args.output}" if args.output else "")
    )
    _emit(args, "sweep", payload, text)
    return OK if inconsistent == 0 else WITNESS


def _cmd_cor4(args: argparse.Namespace) -> int:
    g = load_edge_list(args.graph)
    limits = SearchLimits(
        max_paths_per_pair=args.max_paths,
        max_combinations=args.max_combos,
        max_cycle_length=args.max_cycle_len,
    )
    verdicts = corollary4_check(g, limits)
    payload = {
        "verdicts": [
            {
                "cycle": list(v.cycle.vertices),
                "chord_system": format_spec_line(v.match.spec) if v.match else None,
                "node_vertices": list(v.match.node_vertices) if v.match else None,
                "chord_paths": [list(p) for p in v.match.chord_paths] if v.match else None,
                "search_exhausted": v.search_exhausted,
                "certified_nongeodetic": v.certified_nongeodetic,
            }
            for v in verdicts
        ],
        "oracle_k": verdicts[0].oracle_k if verdicts else None,
        "certified_nongeodetic": any(v.certified_nongeodetic for v in verdicts),
    }
    text = []
    if not verdicts:
        text.append("no even cycle found; nothing to certify")
    for v in verdicts:
        head = f"minimal even cycle {' '.join(str(x) for x in v.cycle.vertices)}: "
        if v.match:
            text.append(head + f"chord system found ({format_spec_line(v.match.spec)})")
        elif v.certified_nongeodetic:
            text.append(head + "no chord system (search exhausted)")
        else:
            text.append(head + "no chord system found, but search hit a cap (inconclusive)")
    certified = any(v.certified_nongeodetic for v in verdicts)
    if certified:
        text.append("certified: the graph is not geodetic")
    else:
        text.append("no certification")
    _emit(args, "cor4", payload, text)
    return WITNESS if certified else OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geodetic",
        description="Geodetic graph analysis: shortest-path multiplicity, "
        "even-cycle witnesses, and chord systems on even cycles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, func) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.set_defaults(func=func)
        return p

    p = add("classify", "classify a graph by its largest geodesic multiplicity", _cmd_classify)
    p.add_argument("graph", help="edge-list file")

    p = add("lemma1", "scan for an even cycle witnessing nongeodeticity", _cmd_lemma1)
    p.add_argument("graph", help="edge-list file")
    p.add_argument("--max-len", type=int, default=None, help="cycle length cap (default: exhaustive)")

    p = add("build-embedded", "build a graph from an embedded even graph spec", _cmd_build_embedded)
    p.add_argument("--spec", required=True, help="spec line, e.g. 'L=3 n=2 arcs=1,2,2,1 chords=2,1'")
    p.add_argument("-o", "--output", default=None, help="write the edge list here instead of stdout")

    p = add("check-embedded", "run the structural checks on a spec", _cmd_check_embedded)
    p.add_argument("--spec", required=True, help="spec line")

    p = add("k4-check", "geodeticity test for K4 subdivisions", _cmd_k4_check)
    p.add_argument("graph", help="edge-list file")

    p = add("sweep", "validate every spec up to a size bound against the oracle", _cmd_sweep)
    p.add_argument("--lmax", type=int, required=True, help="largest half-length L to sweep")
    p.add_argument(
        "--include-invalid",
        action="store_true",
        help="also sweep chord-valid specs that fail condition 1 or 2",
    )
    p.add_argument("-o", "--output", default=None, help="findings file (JSON Lines)")

    p = add("cor4", "certify nongeodeticity via chord-system search", _cmd_cor4)
    p.add_argument("graph", help="edge-list file")
    p.add_argument("--max-cycle-len", type=int, default=None, help="minimal-even-cycle scan cap")
    p.add_argument("--max-paths", type=int, default=64, help="candidate chord paths per endpoint pair")
    p.add_argument("--max-combos", type=int, default=250_000, help="chord assignments to try")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, reports.ReportError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
