"""Simple cycle enumeration and the even-cycle witness test for geodeticity.

A connected graph fails to be geodetic exactly when it contains an even
cycle C with a diametrically opposite vertex pair (u, v) whose distance in
the whole graph equals |C|/2: both arcs of C are then shortest u-v paths.
Conversely, two distinct geodesics always close up into such a cycle, so
``lemma1_scan`` searching for one realising pair decides geodeticity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, all_pairs_distances, is_connected


@dataclass(frozen=True)
class CycleView:
    """A simple cycle in canonical vertex order.

    Canonical form starts at the smallest vertex and proceeds toward the
    smaller of its two cycle neighbours, so each cycle has exactly one
    representation.
    """

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    @classmethod
    def from_sequence(cls, seq: tuple[int, ...] | list[int]) -> "CycleView":
        """Canonicalise any rotation/direction of a simple cycle sequence."""
        vs = tuple(seq)
        if len(vs) < 3:
            raise GraphError("a simple cycle needs at least 3 vertices")
        if len(set(vs)) != len(vs):
            raise GraphError(f"cycle sequence repeats a vertex: {vs}")
        start = vs.index(min(vs))
        rot = vs[start:] + vs[:start]
        if rot[-1] < rot[1]:
            rot = (rot[0],) + tuple(reversed(rot[1:]))
        return cls(rot)


def validate_cycle_in(g: Graph, c: CycleView) -> None:
    """Raise unless every consecutive pair of ``c`` is an edge of ``g``."""
    for u, v in c.edges():
        if not g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge of the graph")


@dataclass(frozen=True)
class OppositePair:
    """Two vertices half a cycle apart; ``arc_length`` is |C|/2."""

    u: int
    v: int
    arc_length: int


@dataclass(frozen=True)
class Lemma1Verdict:
    """Outcome of the witness scan.

    ``witness`` is the first even cycle (in increasing length order) with
    an opposite pair realising distance |C|/2 in the host graph;
    ``witness_pair`` is that pair, whose two arcs are distinct geodesics,
    so the graph is not geodetic.  ``exhaustive`` is True when every cycle
    length up to the vertex count was covered, so absence is conclusive.
    """

    witness: CycleView | None
    scanned_max_length: int
    exhaustive: bool
    witness_pair: tuple[int, int] | None = None


def enumerate_cycles(g: Graph, max_len: int) -> list[CycleView]:
    """All simple cycles with at most ``max_len`` edges, each exactly once.

    Rooted DFS with canonical-form pruning: a path is only grown from its
    smallest vertex through larger ones, and a closure is recorded only in
    the direction whose second vertex is smaller than its last.  Results
    are sorted by (length, vertex sequence).
    """
    if max_len < 3:
        raise GraphError("max_len must be >= 3")
    adj_sorted = [sorted(nbrs) for nbrs in g.adjacency]
    found: list[CycleView] = []
    path: list[int] = []
    on_path = [False] * g.vertex_count

    def grow(root: int, vertex: int) -> None:
        for w in adj_sorted[vertex]:
            if w == root:
                if len(path) >= 3 and path[1] < path[-1]:
                    found.append(CycleView(tuple(path)))
            elif w > root and not on_path[w] and len(path) < max_len:
                path.append(w)
                on_path[w] = True
                grow(root, w)
                path.pop()
                on_path[w] = False

    for root in g.vertices():
        path = [root]
        grow(root, root)
    found.sort(key=lambda c: (c.length, c.vertices))
    return found


def minimal_even_cycles(g: Graph, max_len: int) -> tuple[int | None, list[CycleView]]:
    """Shortest even cycle length within ``max_len`` and all cycles of that length."""
    if max_len < 4:
        raise GraphError("max_len must be >= 4")
    best: int | None = None
    cycles: list[CycleView] = []
    for c in enumerate_cycles(g, max_len):
        if c.length % 2:
            continue
        if best is None:
            best = c.length
        if c.length == best:
            cycles.append(c)
        else:
            break  # enumeration is length-sorted
    return best, cycles


def c_opposite_pairs(c: CycleView) -> list[OppositePair]:
    """The |C|/2 diametrically opposite vertex pairs of an even cycle."""
    m = c.length
    if m % 2:
        raise GraphError(f"cycle of odd length {m} has no opposite pairs")
    half = m // 2
    return [OppositePair(c.vertices[i], c.vertices[i + half], half) for i in range(half)]


def lemma1_scan(g: Graph, max_len: int | None = None) -> Lemma1Verdict:
    """Search even cycles for a nongeodeticity witness.

    Cycles are checked in increasing length order; the first even cycle
    with an opposite pair (u, v) satisfying d(u, v) = |C|/2 is returned
    together with that pair.  ``max_len`` defaults to the vertex count,
    which makes the scan exhaustive.
    """
    n = g.vertex_count
    if not is_connected(g):
        raise GraphError("witness scan requires a connected graph")
    if max_len is None:
        cap = n
    else:
        if max_len < 4:
            raise GraphError("max_len must be >= 4")
        cap = max_len
    scanned = min(cap, n)
    exhaustive = cap >= n
    if scanned < 4:
        return Lemma1Verdict(None, scanned, exhaustive)
    dist = all_pairs_distances(g)
    for c in enumerate_cycles(g, scanned):
        m = c.length
        if m % 2:
            continue
        half = m // 2
        vs = c.vertices
        for i in range(half):
            if dist[vs[i]][vs[i + half]] == half:
                return Lemma1Verdict(c, scanned, exhaustive, (vs[i], vs[i + half]))
    return Lemma1Verdict(None, scanned, exhaustive)
