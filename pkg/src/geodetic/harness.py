"""Desk-scale validation harness: sweep parameter spaces, compare the
structural predictions against the brute-force shortest-path oracle, and
search arbitrary graphs for chord systems on their minimal even cycles.

The chord-system search drives the nongeodeticity certifier: a minimal
even cycle of a geodetic graph always carries an interleaved chord system
satisfying the two cycle conditions, so an exhausted search that finds
none certifies the graph is not geodetic.  An interrupted (capped) search
reports ``exhausted=False`` and never certifies anything.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator

from .cycles import CycleView, minimal_even_cycles, validate_cycle_in
from .embedding import (
    ConditionReport,
    EmbeddedGraph,
    EmbeddedSpec,
    build,
    evaluate_spec,
    format_spec_line,
    validate_spec,
)
from .geodesics import GeodesicProfile, GeodeticClass, classify_k, count_geodesics
from .graphs import Graph, GraphError, is_connected


# ---------------------------------------------------------------------------
# spec enumeration and the oracle sweep


@dataclass(frozen=True)
class SweepBounds:
    """Sweep all specs with 2 <= L <= L_max.  By default only specs whose
    structural checks all pass are yielded; ``include_invalid`` adds every
    chord-valid spec that fails condition 1 or 2, for converse testing."""

    L_max: int
    include_invalid: bool = False


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ways to write ``total`` as an ordered sum of ``parts`` positive
    integers, in lexicographic order."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for head in range(1, total - parts + 2):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


def enumerate_specs(bounds: SweepBounds) -> Iterator[EmbeddedSpec]:
    """Deterministic enumeration: L ascending, then n, then arcs and chords
    in lexicographic order; only chord-valid specs are ever yielded."""
    if bounds.L_max < 2:
        raise GraphError("L_max must be >= 2")
    for big_l in range(2, bounds.L_max + 1):
        for n in range(2, big_l + 1):
            for arcs in compositions(2 * big_l, 2 * n):
                for chords in product(range(1, big_l), repeat=n):
                    spec = EmbeddedSpec(big_l, n, arcs, chords)
                    if not validate_spec(spec).ok:
                        continue
                    if bounds.include_invalid or evaluate_spec(spec).all_conditions_hold:
                        yield spec


@dataclass(frozen=True)
class PairViolation:
    """A cycle-vertex pair that breaks the uniqueness/shortcut property."""

    u: int
    v: int
    distance: int
    count: int
    opposite: bool


@dataclass(frozen=True)
class PairPropertyReport:
    holds: bool
    violations: tuple[PairViolation, ...]


def theorem2_pair_property(h: EmbeddedGraph, profile: GeodesicProfile) -> PairPropertyReport:
    """Check the pair behaviour the two cycle conditions are meant to buy:
    every opposite pair of the base cycle has a unique geodesic shorter
    than L, and every other pair on the cycle has a unique geodesic."""
    big_l = h.spec.L
    m = 2 * big_l
    violations = []
    for u in range(m):
        for v in range(u + 1, m):
            opposite = (v - u) == big_l
            d = profile.distance(u, v)
            k = profile.geodesic_count(u, v)
            if k > 1 or (opposite and d >= big_l):
                violations.append(PairViolation(u, v, d, k, opposite))
    return PairPropertyReport(not violations, tuple(violations))


@dataclass(frozen=True)
class SweepFinding:
    """One spec's structural checks versus the oracle.

    ``consistent`` means: when all conditions hold, the pair property holds
    and the oracle K matches the predicted class (K=1 for n=2, K<=2
    otherwise); when a cycle condition fails on an otherwise embedded
    system, the pair property is violated by at least one pair.  Specs
    whose chord layout already contains a short even cycle fall outside
    both directions and are always marked consistent.
    """

    spec: EmbeddedSpec
    report: ConditionReport
    oracle: GeodeticClass
    pair_property: PairPropertyReport
    consistent: bool


def sweep_validate(bounds: SweepBounds) -> Iterator[SweepFinding]:
    """Build every enumerated spec, run the oracle, and compare."""
    for spec in enumerate_specs(bounds):
        report = evaluate_spec(spec)
        h = build(spec)
        profile = count_geodesics(h.graph)
        oracle = classify_k(profile)
        pairs = theorem2_pair_property(h, profile)
        if report.all_conditions_hold:
            bound_ok = profile.k_value == 1 if spec.n == 2 else profile.k_value <= 2
            consistent = pairs.holds and bound_ok
        elif report.embeddedness is not None and report.embeddedness.ok:
            # An embedded chord system failing a cycle condition must break
            # the on-cycle pair property; that is the converse direction.
            consistent = not pairs.holds
        else:
            # No structural claim covers chord layouts with short even
            # cycles; the record survives in the findings for inspection.
            consistent = True
        yield SweepFinding(spec, report, oracle, pairs, consistent)


def finding_record(f: SweepFinding) -> dict:
    """Flatten a finding for the findings file."""
    return {
        "spec": format_spec_line(f.spec),
        "L": f.spec.L,
        "n": f.spec.n,
        "arcs": list(f.spec.arcs),
        "chords": list(f.spec.chords),
        "chord_valid": f.report.validation.ok,
        "condition1": f.report.condition1.ok if f.report.condition1 else None,
        "condition2": f.report.condition2.ok if f.report.condition2 else None,
        "embeddedness": f.report.embeddedness.ok if f.report.embeddedness else None,
        "predicted": f.report.predicted_class.label if f.report.predicted_class else None,
        "oracle_k": f.oracle.k,
        "oracle_class": f.oracle.label,
        "pair_property_holds": f.pair_property.holds,
        "violations": [
            {"u": v.u, "v": v.v, "distance": v.distance, "count": v.count, "opposite": v.opposite}
            for v in f.pair_property.violations
        ],
        "consistent": f.consistent,
    }


# ---------------------------------------------------------------------------
# chord-system search and nongeodeticity certification


@dataclass(frozen=True)
class SearchLimits:
    """Caps for the chord-system search.  ``max_cycle_length`` of None means
    scan up to the vertex count when hunting minimal even cycles."""

    max_paths_per_pair: int = 64
    max_combinations: int = 250_000
    max_cycle_length: int | None = None


@dataclass(frozen=True)
class ChordSystemMatch:
    """A chord system found inside a host graph: the abstract spec plus its
    realisation (host vertices of the endpoints, host paths of the chords)."""

    spec: EmbeddedSpec
    node_vertices: tuple[int, ...]
    chord_paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ChordSystemSearch:
    """``system`` when found; ``exhausted`` True only if the whole candidate
    space was covered, so an empty result is conclusive."""

    system: ChordSystemMatch | None
    exhausted: bool
    combinations_tried: int = field(default=0)


def _candidate_chords(
    g: Graph, c: CycleView, per_pair_cap: int
) -> tuple[dict[tuple[int, int], list[tuple[int, ...]]], bool]:
    """All paths in ``g`` between two cycle vertices, internally off the
    cycle, strictly shorter than both arcs between their endpoints.

    Keyed by (position, position) with the lower position first; values
    sorted by (length, path).  The flag reports a hit per-pair cap.
    """
    m = c.length
    pos = {v: i for i, v in enumerate(c.vertices)}
    on_cycle = frozenset(c.vertices)
    depth_cap = m // 2 - 1  # a chord is shorter than the smaller arc, which is <= m/2
    found: dict[tuple[int, int], set[tuple[int, ...]]] = {}
    capped = False

    def record(a: int, b: int, path: tuple[int, ...]) -> None:
        nonlocal capped
        pa, pb = pos[a], pos[b]
        if pa > pb:
            return  # the reversed copy is recorded from the other end
        arc = pb - pa
        ln = len(path) - 1
        if ln < arc and ln < m - arc:
            bucket = found.setdefault((pa, pb), set())
            if len(bucket) >= per_pair_cap:
                capped = True
            else:
                bucket.add(path)

    for a in c.vertices:
        stack: list[tuple[int, tuple[int, ...]]] = [(a, (a,))]
        while stack:
            v, path = stack.pop()
            for w in sorted(g.adjacency[v]):
                if w in path:
                    continue
                if w in on_cycle:
                    if w != a:
                        record(a, w, path + (w,))
                elif len(path) < depth_cap:  # deeper paths are too long to be chords
                    stack.append((w, path + (w,)))
    candidates = {key: sorted(bucket, key=lambda p: (len(p), p)) for key, bucket in found.items()}
    return candidates, capped


def find_chord_system(
    g: Graph, c: CycleView, limits: SearchLimits = SearchLimits()
) -> ChordSystemSearch:
    """Search ``g`` for an interleaved chord system on the even cycle ``c``.

    Tries every choice of 2n endpoint positions on the cycle (n ascending,
    positions in lexicographic order) with the forced interleaved pairing
    (each endpoint pairs with the one n places along), every assignment of
    candidate chord paths, pairwise vertex-disjoint, and accepts the first
    whose spec passes all structural checks.
    """
    validate_cycle_in(g, c)
    m = c.length
    if m % 2:
        raise GraphError(f"cycle has odd length {m}; chord systems live on even cycles")
    big_l = m // 2
    candidates, capped = _candidate_chords(g, c, limits.max_paths_per_pair)
    tried = 0
    for n in range(2, big_l + 1):
        for subset in combinations(range(m), 2 * n):
            pairs = [(subset[i], subset[i + n]) for i in range(n)]
            pools = []
            for pair in pairs:
                pool = candidates.get(pair)
                if not pool:
                    break
                pools.append(pool)
            else:
                for assignment in product(*pools):
                    tried += 1
                    if tried > limits.max_combinations:
                        return ChordSystemSearch(None, False, tried - 1)
                    vsets = [frozenset(p) for p in assignment]
                    if any(
                        vsets[i] & vsets[j]
                        for i in range(n)
                        for j in range(i + 1, n)
                    ):
                        continue
                    arcs = tuple(
                        subset[(k + 1) % (2 * n)] - subset[k]
                        if k < 2 * n - 1
                        else m - subset[-1] + subset[0]
                        for k in range(2 * n)
                    )
                    chords = tuple(len(p) - 1 for p in assignment)
                    spec = EmbeddedSpec(big_l, n, arcs, chords)
                    if evaluate_spec(spec).all_conditions_hold:
                        match = ChordSystemMatch(
                            spec,
                            tuple(c.vertices[p] for p in subset),
                            tuple(assignment),
                        )
                        return ChordSystemSearch(match, not capped, tried)
    return ChordSystemSearch(None, not capped, tried)


@dataclass(frozen=True)
class Corollary4Verdict:
    """Outcome for one minimal even cycle.  ``certified_nongeodetic`` is set
    only when an exhausted search found nothing; ``oracle_k`` cross-checks
    that certification never contradicts the shortest-path counts."""

    cycle: CycleView
    match: ChordSystemMatch | None
    search_exhausted: bool
    certified_nongeodetic: bool
    oracle_k: int


def corollary4_check(g: Graph, limits: SearchLimits = SearchLimits()) -> list[Corollary4Verdict]:
    """Run the chord-system search on every minimal even cycle of ``g``.

    A graph with no even cycle yields no verdicts.  Any certified verdict
    means the graph is not geodetic.
    """
    if not is_connected(g):
        raise GraphError("certification requires a connected graph")
    cap = limits.max_cycle_length if limits.max_cycle_length is not None else g.vertex_count
    length, cycles = minimal_even_cycles(g, max(cap, 4))
    if length is None:
        return []
    oracle_k = count_geodesics(g).k_value
    verdicts = []
    for c in cycles:
        result = find_chord_system(g, c, limits)
        certified = result.system is None and result.exhausted
        verdicts.append(Corollary4Verdict(c, result.system, result.exhausted, certified, oracle_k))
    return verdicts
