"""Sweep the embedded even graph parameter space and cross-check every
structural prediction against the shortest-path oracle.

Prints a per-(L, n) summary, the distribution of oracle classes, and any
inconsistent finding in full.  With ``--findings`` the per-spec records go
to a JSON Lines file for later inspection.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import Counter

from geodetic import SweepBounds, finding_record, format_spec_line, sweep_validate, write_findings


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--lmax", type=int, default=6, help="largest half-length L (default 6)")
    parser.add_argument(
        "--include-invalid",
        action="store_true",
        help="also sweep chord-valid specs failing condition 1 or 2",
    )
    parser.add_argument("--findings", default=None, help="write per-spec records here (JSON Lines)")
    args = parser.parse_args(argv)

    bounds = SweepBounds(args.lmax, args.include_invalid)
    started = time.perf_counter()
    findings = list(sweep_validate(bounds))
    elapsed = time.perf_counter() - started

    if args.findings:
        with open(args.findings, "w") as out:
            write_findings(
                out,
                {"L_max": args.lmax, "include_invalid": args.include_invalid},
                (finding_record(f) for f in findings),
            )

    per_cell: dict[tuple[int, int], Counter] = {}
    class_by_n: Counter = Counter()
    inconsistent = []
    for f in findings:
        cell = per_cell.setdefault((f.spec.L, f.spec.n), Counter())
        cell["specs"] += 1
        cell["conds_ok"] += f.report.all_conditions_hold
        if f.report.all_conditions_hold:
            class_by_n[(f.spec.n, f.oracle.k)] += 1
        if not f.consistent:
            inconsistent.append(f)

    print(f"swept {len(findings)} specs up to L={args.lmax} in {elapsed:.1f}s")
    print("  L  n   specs  conds-ok")
    for (big_l, n), cell in sorted(per_cell.items()):
        print(f"{big_l:>3}{n:>3}{cell['specs']:>8}{cell['conds_ok']:>10}")

    print("oracle class by chord count (condition-satisfying specs):")
    for (n, k), count in sorted(class_by_n.items()):
        print(f"  n={n}: K={k} for {count} specs")

    if inconsistent:
        print(f"{len(inconsistent)} INCONSISTENT findings:")
        for f in inconsistent:
            print(f"  {format_spec_line(f.spec)} -> oracle {f.oracle}")
        return 1
    print("no inconsistencies")
    if args.findings:
        print(f"findings written to {args.findings}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
