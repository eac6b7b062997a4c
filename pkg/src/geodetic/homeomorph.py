"""Segment decomposition and the geodeticity test for K4 subdivisions.

A *node* is a vertex of degree >= 3; a *segment* is a path between nodes
whose interior vertices all have degree 2.  A graph homeomorphic to K4
(four degree-3 nodes joined pairwise by six segments) is geodetic exactly
when

1. each segment is a shortest path between its endpoints,
2. the four cycles made of three segments all have odd length, and
3. the three cycles made of four segments all have equal length.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, bfs_distances, is_connected


@dataclass(frozen=True)
class SegmentDecomposition:
    """The nodes of a graph and its node-to-node segments.

    Every edge lies on exactly one segment.  A segment is stored as its
    full vertex path; closed segments (a degree-2 loop returning to the
    same node) keep that node at both ends.
    """

    nodes: tuple[int, ...]
    segments: tuple[tuple[int, ...], ...]


def decompose_segments(g: Graph) -> SegmentDecomposition:
    """Split a connected graph with minimum degree 2 into segments."""
    if not is_connected(g):
        raise GraphError("segment decomposition requires a connected graph")
    degs = [g.degree(v) for v in g.vertices()]
    nodes = [v for v in g.vertices() if degs[v] >= 3]
    if not nodes:
        raise GraphError("graph has no vertex of degree >= 3")
    for v, d in enumerate(degs):
        if d < 2:
            raise GraphError(f"vertex {v} has degree {d}; it lies on no node-to-node segment")
    seen: set[tuple[int, ...]] = set()
    segments: list[tuple[int, ...]] = []
    for u in nodes:
        for first in sorted(g.adjacency[u]):
            prev, cur = u, first
            seq = [u, first]
            while degs[cur] == 2:
                nxt = next(x for x in g.adjacency[cur] if x != prev)
                seq.append(nxt)
                prev, cur = cur, nxt
            path = tuple(seq)
            key = min(path, path[::-1])
            if key not in seen:
                seen.add(key)
                segments.append(path)
    return SegmentDecomposition(tuple(nodes), tuple(segments))


def is_homeomorphic_to_k4(g: Graph) -> bool:
    """True for subdivisions of K4: four degree-3 nodes, six segments,
    one segment per node pair, no segment looping back to its own node."""
    if g.vertex_count < 4 or not is_connected(g):
        return False
    degs = [g.degree(v) for v in g.vertices()]
    if degs.count(3) != 4 or any(d not in (2, 3) for d in degs):
        return False
    dec = decompose_segments(g)
    if len(dec.segments) != 6:
        return False
    pairs = set()
    for seg in dec.segments:
        a, b = seg[0], seg[-1]
        if a == b:
            return False
        pairs.add(frozenset((a, b)))
    return len(pairs) == 6


@dataclass(frozen=True)
class Theorem1Report:
    """The three conditions and their conjunction; all None when the graph
    is not a K4 subdivision and the test does not apply."""

    is_k4_homeomorph: bool
    segments_are_geodesics: bool | None
    three_segment_cycles_odd: bool | None
    four_segment_cycles_equal: bool | None
    verdict_geodetic: bool | None


def three_segment_cycles(nodes: tuple[int, ...]) -> list[tuple[int, int, int]]:
    a, b, c, d = nodes
    return [(a, b, c), (a, b, d), (a, c, d), (b, c, d)]


def four_segment_cycles(nodes: tuple[int, ...]) -> list[tuple[int, int, int, int]]:
    a, b, c, d = nodes
    return [(a, b, c, d), (a, b, d, c), (a, c, b, d)]


def theorem1_check(g: Graph) -> Theorem1Report:
    """Evaluate the K4-subdivision geodeticity conditions."""
    if not is_homeomorphic_to_k4(g):
        return Theorem1Report(False, None, None, None, None)
    dec = decompose_segments(g)
    seg_len = {frozenset((s[0], s[-1])): len(s) - 1 for s in dec.segments}
    dist = {v: bfs_distances(g, v).dist for v in dec.nodes}
    cond1 = all(len(s) - 1 == dist[s[0]][s[-1]] for s in dec.segments)

    def span(x: int, y: int) -> int:
        return seg_len[frozenset((x, y))]

    cond2 = all(
        (span(x, y) + span(y, z) + span(x, z)) % 2 == 1
        for x, y, z in three_segment_cycles(dec.nodes)
    )
    ring_lengths = {
        span(p, q) + span(q, r) + span(r, s) + span(s, p)
        for p, q, r, s in four_segment_cycles(dec.nodes)
    }
    cond3 = len(ring_lengths) == 1
    return Theorem1Report(True, cond1, cond2, cond3, cond1 and cond2 and cond3)
