"""Walk the named fixture graphs and print, for each: its class by
shortest-path multiplicity, the even-cycle witness scan, and the
chord-system certification outcome.

A compact end-to-end exercise of the toolkit; every verdict printed here
is also pinned by the test suite.
"""

from __future__ import annotations

import sys

from geodetic import (
    EmbeddedSpec,
    build,
    classify_k,
    complete_graph,
    corollary4_check,
    count_geodesics,
    cycle_graph,
    cycle_with_chord,
    format_spec_line,
    lemma1_scan,
    petersen_graph,
    subdivided_k4,
)

FIXTURES = [
    ("complete graph K4", complete_graph(4)),
    ("complete graph K6", complete_graph(6)),
    ("odd cycle C7", cycle_graph(7)),
    ("even cycle C8", cycle_graph(8)),
    ("C8 with a unit chord", cycle_with_chord(8, 0, 4)),
    ("Petersen graph", petersen_graph()),
    ("K4 subdivision with one even triangle", subdivided_k4((2, 1, 1, 1, 1, 1))),
]

EMBEDDED = [
    EmbeddedSpec(3, 2, (1, 2, 2, 1), (2, 1)),
    EmbeddedSpec(3, 3, (1, 1, 1, 1, 1, 1), (2, 2, 2)),
]


def describe(name: str, g) -> None:
    profile = count_geodesics(g)
    cls = classify_k(profile)
    line = f"{name}: {cls}"
    if cls.k > 1:
        u, v = profile.witness_pair
        line += f" (pair ({u}, {v}): {profile.geodesic_count(u, v)} geodesics)"
    print(line)

    verdict = lemma1_scan(g)
    if verdict.witness is None:
        print("  witness scan: no even cycle realises an opposite pair")
    else:
        u, v = verdict.witness_pair
        print(
            f"  witness scan: cycle of length {verdict.witness.length} "
            f"with pair ({u}, {v})"
        )

    verdicts = corollary4_check(g)
    certified = sum(v.certified_nongeodetic for v in verdicts)
    matched = sum(v.match is not None for v in verdicts)
    if not verdicts:
        print("  certification: no even cycle to examine")
    elif certified:
        print(
            f"  certification: NOT geodetic ({certified} of {len(verdicts)} "
            f"minimal even cycles carry no chord system)"
        )
    else:
        print(
            f"  certification: none ({matched} of {len(verdicts)} minimal even "
            f"cycles carry a chord system)"
        )


def main() -> int:
    for name, g in FIXTURES:
        describe(name, g)
    for spec in EMBEDDED:
        h = build(spec)
        describe(f"embedded even graph {format_spec_line(spec)}", h.graph)
    return 0


if __name__ == "__main__":
    sys.exit(main())
