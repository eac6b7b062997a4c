"""Constructors for the small named graphs used as fixtures and demos."""

from __future__ import annotations

from .graphs import Graph, GraphError, from_edge_list


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices (n-1 edges)."""
    if n < 1:
        raise GraphError("path_graph needs n >= 1")
    return from_edge_list([(i, i + 1) for i in range(n - 1)], vertex_count=n)


def cycle_graph(n: int) -> Graph:
    """Cycle on ``n >= 3`` vertices."""
    if n < 3:
        raise GraphError("cycle_graph needs n >= 3")
    return from_edge_list([(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    """Complete graph on ``n >= 1`` vertices."""
    if n < 1:
        raise GraphError("complete_graph needs n >= 1")
    return from_edge_list(
        [(i, j) for i in range(n) for j in range(i + 1, n)], vertex_count=n
    )


def cycle_with_chord(n: int, u: int, v: int, chord_length: int = 1) -> Graph:
    """Cycle on ``n`` vertices plus one path of ``chord_length`` edges from u to v.

    Internal path vertices (if any) are appended after the cycle vertices.
    """
    if not (0 <= u < n and 0 <= v < n and u != v):
        raise GraphError("chord endpoints must be distinct cycle vertices")
    if chord_length < 1:
        raise GraphError("chord_length must be >= 1")
    edges = [(i, (i + 1) % n) for i in range(n)]
    prev = u
    for k in range(chord_length - 1):
        edges.append((prev, n + k))
        prev = n + k
    edges.append((prev, v))
    return from_edge_list(edges)


def subdivided_k4(lengths: tuple[int, int, int, int, int, int]) -> Graph:
    """K4 on vertices 0..3 with each edge replaced by a path.

    ``lengths`` gives the path edge-counts for the K4 edges in the fixed
    order (0,1), (0,2), (0,3), (1,2), (1,3), (2,3).  New internal vertices
    are appended starting at 4.
    """
    base = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    if len(lengths) != 6 or any(ln < 1 for ln in lengths):
        raise GraphError("need six positive path lengths")
    edges: list[tuple[int, int]] = []
    nxt = 4
    for (a, b), ln in zip(base, lengths):
        prev = a
        for _ in range(ln - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, b))
    return from_edge_list(edges)


def petersen_graph() -> Graph:
    """The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(outer + spokes + inner)
