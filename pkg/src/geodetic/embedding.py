"""Even cycles with interleaved chord systems: build and check them.

An *embedded even graph* is an even cycle C of length 2L together with
n pairwise vertex-disjoint chords, where the 2n chord endpoints (the
degree-3 vertices) are labelled consecutively around C and chord i joins
endpoint i to endpoint n+i - so the chords pairwise interleave.  A chord
is a path, internally disjoint from C, strictly shorter than both arcs
between its endpoints.

Two arithmetic conditions on such a graph govern shortest-path uniqueness:

1. every cycle made of one chord plus one of its arcs has odd length;
2. every cycle made of two neighbouring chords plus the two arcs between
   their nearer endpoints has length exactly 2L.

When both hold (together with the defining constraint that no such cycle
is even and shorter than 2L), the graph is geodetic for n = 2 and
bigeodetic for 3 <= n <= L.

Parameterisation: ``arcs[k]`` is the arc length from endpoint k to
endpoint k+1 (cyclically, 0-based), ``chords[i]`` the length of chord i.
All condition checks are pure arithmetic on these tuples, so they can be
evaluated even for specs whose chords are invalid (e.g. too long).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .cycles import CycleView
from .geodesics import GeodeticClass
from .graphs import Graph, GraphError, from_edge_list


@dataclass(frozen=True)
class EmbeddedSpec:
    """Parameters of an embedded even graph: half-length L, chord count n,
    the 2n arc lengths and the n chord lengths."""

    L: int
    n: int
    arcs: tuple[int, ...]
    chords: tuple[int, ...]

    @property
    def cycle_length(self) -> int:
        return 2 * self.L

    def node_positions(self) -> tuple[int, ...]:
        """Cycle positions of the 2n chord endpoints (endpoint 0 at 0)."""
        pos = [0]
        for a in self.arcs[:-1]:
            pos.append(pos[-1] + a)
        return tuple(pos)

    def clockwise_span(self, i: int) -> int:
        """Arc length from endpoint i clockwise to its partner n+i."""
        return sum(self.arcs[i : self.n + i])


@dataclass(frozen=True)
class SpecValidation:
    """All violations found in a spec, not just the first."""

    shape_ok: bool
    positivity_ok: bool
    arc_sum_ok: bool
    n_range_ok: bool
    chord_validity: tuple[bool, ...]
    problems: tuple[str, ...]

    @property
    def structure_ok(self) -> bool:
        """True when the tuple shapes and arc arithmetic are coherent, so
        the condition checks are well defined (chords may still be invalid)."""
        return self.shape_ok and self.positivity_ok and self.arc_sum_ok and self.n_range_ok

    @property
    def ok(self) -> bool:
        return not self.problems


def validate_spec(spec: EmbeddedSpec) -> SpecValidation:
    """Check shape, positivity, arc sum, n range, and strict chord validity."""
    problems: list[str] = []
    shape_ok = True
    if len(spec.arcs) != 2 * spec.n:
        problems.append(f"expected {2 * spec.n} arcs, got {len(spec.arcs)}")
        shape_ok = False
    if len(spec.chords) != spec.n:
        problems.append(f"expected {spec.n} chords, got {len(spec.chords)}")
        shape_ok = False
    positivity_ok = all(a >= 1 for a in spec.arcs) and all(c >= 1 for c in spec.chords)
    if not positivity_ok:
        problems.append("arc and chord lengths must be positive")
    n_range_ok = spec.L >= 2 and 2 <= spec.n <= spec.L
    if not n_range_ok:
        problems.append(f"need L >= 2 and 2 <= n <= L, got L={spec.L} n={spec.n}")
    arc_sum_ok = shape_ok and positivity_ok and sum(spec.arcs) == 2 * spec.L
    if shape_ok and positivity_ok and not arc_sum_ok:
        problems.append(f"arcs sum to {sum(spec.arcs)}, expected 2L = {2 * spec.L}")
    chord_validity: list[bool] = []
    if shape_ok and positivity_ok and arc_sum_ok and n_range_ok:
        for i, c in enumerate(spec.chords):
            cw = spec.clockwise_span(i)
            ccw = 2 * spec.L - cw
            good = c < cw and c < ccw
            chord_validity.append(good)
            if not good:
                problems.append(
                    f"chord A{i + 1} has length {c}, not strictly shorter than "
                    f"both arcs ({cw} and {ccw}) between its endpoints"
                )
    return SpecValidation(
        shape_ok, positivity_ok, arc_sum_ok, n_range_ok, tuple(chord_validity), tuple(problems)
    )


@dataclass(frozen=True)
class EmbeddedGraph:
    """A built embedded even graph.

    Cycle vertices are 0..2L-1 in clockwise order (endpoint 0 at vertex 0);
    internal chord vertices are appended chord by chord, each path running
    from the lower-indexed endpoint to its partner.
    """

    spec: EmbeddedSpec
    graph: Graph
    cycle: CycleView
    node_positions: tuple[int, ...]
    chord_paths: tuple[tuple[int, ...], ...]


def build(spec: EmbeddedSpec) -> EmbeddedGraph:
    """Construct the graph for a fully valid spec.

    Vertex count is 2L + sum(c_i - 1) and edge count 2L + sum(c_i); the
    chord endpoints are exactly the degree-3 vertices.
    """
    validation = validate_spec(spec)
    if not validation.ok:
        raise GraphError("invalid spec: " + "; ".join(validation.problems))
    m = spec.cycle_length
    edges = [(k, (k + 1) % m) for k in range(m)]
    positions = spec.node_positions()
    nxt = m
    chord_paths: list[tuple[int, ...]] = []
    for i, c in enumerate(spec.chords):
        a, b = positions[i], positions[spec.n + i]
        path = [a]
        for _ in range(c - 1):
            path.append(nxt)
            nxt += 1
        path.append(b)
        edges.extend(zip(path, path[1:]))
        chord_paths.append(tuple(path))
    return EmbeddedGraph(
        spec,
        from_edge_list(edges),
        CycleView(tuple(range(m))),
        positions,
        tuple(chord_paths),
    )


def _spec_of(subject: EmbeddedSpec | EmbeddedGraph) -> EmbeddedSpec:
    spec = subject.spec if isinstance(subject, EmbeddedGraph) else subject
    validation = validate_spec(spec)
    if not validation.structure_ok:
        raise GraphError("spec structure is broken: " + "; ".join(validation.problems))
    return spec


@dataclass(frozen=True)
class ChordArcParity:
    """The two chord-plus-arc cycle lengths for one chord (0-based index)."""

    chord_index: int
    cycle_lengths: tuple[int, int]

    @property
    def all_odd(self) -> bool:
        return all(ln % 2 == 1 for ln in self.cycle_lengths)


@dataclass(frozen=True)
class Condition1Report:
    entries: tuple[ChordArcParity, ...]
    ok: bool


def check_condition1(subject: EmbeddedSpec | EmbeddedGraph) -> Condition1Report:
    """Every chord-plus-arc cycle must have odd length (both arcs per chord)."""
    spec = _spec_of(subject)
    entries = []
    for i, c in enumerate(spec.chords):
        cw = spec.clockwise_span(i)
        entries.append(ChordArcParity(i, (c + cw, c + (2 * spec.L - cw))))
    return Condition1Report(tuple(entries), all(e.all_odd for e in entries))


@dataclass(frozen=True)
class Condition2Report:
    """Lengths of the n neighbouring-chord cycles, in chord order (the last
    entry pairs the final chord with the first)."""

    lengths: tuple[int, ...]
    ok: bool


def adjacent_chord_cycle_lengths(spec: EmbeddedSpec) -> tuple[int, ...]:
    """Cycle lengths chord i + chord i+1 + the two arcs between their
    nearer endpoints, the arcs that carry no other chord endpoint."""
    n = spec.n
    return tuple(
        spec.arcs[i] + spec.chords[i] + spec.chords[(i + 1) % n] + spec.arcs[n + i]
        for i in range(n)
    )


def check_condition2(subject: EmbeddedSpec | EmbeddedGraph) -> Condition2Report:
    """Every neighbouring-chord cycle must have length exactly 2L."""
    spec = _spec_of(subject)
    lengths = adjacent_chord_cycle_lengths(spec)
    return Condition2Report(lengths, all(ln == spec.cycle_length for ln in lengths))


@dataclass(frozen=True)
class ForbiddenCycle:
    """An even cycle shorter than 2L that disqualifies the embedding.

    ``kind`` is "chord_arc" (one chord plus one arc; ``arc_side`` tells
    which) or "adjacent_chords" (two neighbouring chords plus near arcs).
    """

    kind: str
    chord_indices: tuple[int, ...]
    length: int
    arc_side: str | None = None


@dataclass(frozen=True)
class EmbeddednessReport:
    ok: bool
    violations: tuple[ForbiddenCycle, ...]


def check_embeddedness(subject: EmbeddedSpec | EmbeddedGraph) -> EmbeddednessReport:
    """No chord+arc or neighbouring-chord cycle may be even with length < 2L."""
    spec = _spec_of(subject)
    target = spec.cycle_length
    violations: list[ForbiddenCycle] = []
    for i, c in enumerate(spec.chords):
        cw = spec.clockwise_span(i)
        for side, ln in (("cw", c + cw), ("ccw", c + (target - cw))):
            if ln % 2 == 0 and ln < target:
                violations.append(ForbiddenCycle("chord_arc", (i,), ln, side))
    for i, ln in enumerate(adjacent_chord_cycle_lengths(spec)):
        if ln % 2 == 0 and ln < target:
            violations.append(ForbiddenCycle("adjacent_chords", (i, (i + 1) % spec.n), ln))
    return EmbeddednessReport(not violations, tuple(violations))


@dataclass(frozen=True)
class ConditionReport:
    """Everything known about one spec: validation, the three structural
    checks, and the class they predict (None unless all checks pass)."""

    spec: EmbeddedSpec
    validation: SpecValidation
    condition1: Condition1Report | None
    condition2: Condition2Report | None
    embeddedness: EmbeddednessReport | None
    predicted_class: GeodeticClass | None

    @property
    def all_conditions_hold(self) -> bool:
        return (
            self.validation.ok
            and self.condition1 is not None
            and self.condition1.ok
            and self.condition2 is not None
            and self.condition2.ok
            and self.embeddedness is not None
            and self.embeddedness.ok
        )


def predict_class(report: ConditionReport) -> GeodeticClass | None:
    """Geodetic for n=2, bigeodetic (K <= 2) for n >= 3, when all checks pass."""
    if not report.all_conditions_hold:
        return None
    return GeodeticClass(1 if report.spec.n == 2 else 2)


def evaluate_spec(spec: EmbeddedSpec) -> ConditionReport:
    """Validate and run all structural checks; fields stay None when the
    spec's shape is too broken for the arithmetic to mean anything."""
    validation = validate_spec(spec)
    if not validation.structure_ok:
        return ConditionReport(spec, validation, None, None, None, None)
    c1 = check_condition1(spec)
    c2 = check_condition2(spec)
    emb = check_embeddedness(spec)
    report = ConditionReport(spec, validation, c1, c2, emb, None)
    predicted = predict_class(report)
    if predicted is None:
        return report
    return ConditionReport(spec, validation, c1, c2, emb, predicted)


_SPEC_KEYS = ("L", "n", "arcs", "chords")


def parse_spec_line(line: str, *, lineno: int | None = None) -> EmbeddedSpec:
    """Parse ``L=<int> n=<int> arcs=<csv ints> chords=<csv ints>``."""
    where = f"line {lineno}: " if lineno is not None else ""
    fields: dict[str, str] = {}
    for token in line.split():
        m = re.fullmatch(r"([A-Za-z]+)=([-\d,]+)", token)
        if not m or m.group(1) not in _SPEC_KEYS:
            raise GraphError(f"{where}unrecognised token {token!r} in spec line")
        key = m.group(1)
        if key in fields:
            raise GraphError(f"{where}duplicate key {key!r} in spec line")
        fields[key] = m.group(2)
    missing = [k for k in _SPEC_KEYS if k not in fields]
    if missing:
        raise GraphError(f"{where}spec line is missing {', '.join(missing)}")

    def ints(text: str, key: str) -> tuple[int, ...]:
        try:
            return tuple(int(part) for part in text.split(","))
        except ValueError:
            raise GraphError(f"{where}non-integer value in {key}={text!r}") from None

    def single(key: str) -> int:
        values = ints(fields[key], key)
        if len(values) != 1:
            raise GraphError(f"{where}{key} must be a single integer, got {fields[key]!r}")
        return values[0]

    return EmbeddedSpec(
        single("L"), single("n"), ints(fields["arcs"], "arcs"), ints(fields["chords"], "chords")
    )


def format_spec_line(spec: EmbeddedSpec) -> str:
    arcs = ",".join(str(a) for a in spec.arcs)
    chords = ",".join(str(c) for c in spec.chords)
    return f"L={spec.L} n={spec.n} arcs={arcs} chords={chords}"


def parse_spec_file(text: str) -> list[EmbeddedSpec]:
    """One spec per line; blank lines and ``#`` comments are ignored."""
    specs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        specs.append(parse_spec_line(line, lineno=lineno))
    return specs
