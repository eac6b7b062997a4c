"""Independent reference implementations the suite cross-validates against.

Everything here favours transparent exhaustive search over the algorithms
under test: shortest paths come from enumerating simple paths with a
best-length bound, never from BFS multiplicity accumulation, and cycles
from testing every cyclic vertex arrangement.  Agreement between these
and the fast implementations is therefore meaningful evidence.
"""

from __future__ import annotations

from itertools import combinations, permutations

from geodetic import Graph


def brute_shortest_paths(g: Graph, u: int, v: int) -> tuple[int | None, list[tuple[int, ...]]]:
    """Every minimum-length simple u-v path, by bounded depth-first search."""
    best: int | None = None
    found: list[tuple[int, ...]] = []

    def extend(path: list[int], seen: set[int]) -> None:
        nonlocal best
        here = path[-1]
        length = len(path) - 1
        if here == v:
            if best is None or length < best:
                best = length
                found.clear()
            if length == best:
                found.append(tuple(path))
            return
        if best is not None and length + 1 > best:
            return
        for w in sorted(g.neighbors(here)):
            if w not in seen:
                path.append(w)
                seen.add(w)
                extend(path, seen)
                path.pop()
                seen.remove(w)

    extend([u], {u})
    return best, found


def brute_profile(g: Graph) -> dict[tuple[int, int], tuple[int | None, int]]:
    """(distance, geodesic count) for every pair u <= v."""
    table: dict[tuple[int, int], tuple[int | None, int]] = {}
    for u in g.vertices():
        for v in range(u, g.vertex_count):
            d, paths = brute_shortest_paths(g, u, v)
            table[(u, v)] = (d, len(paths))
    return table


def brute_k(g: Graph) -> tuple[int, tuple[int, int]]:
    """Largest geodesic count over all pairs and the first pair attaining it."""
    k, witness = 1, (0, 0)
    for (u, v), (_, count) in sorted(brute_profile(g).items()):
        if count > k:
            k, witness = count, (u, v)
    return k, witness


def brute_cycles(g: Graph) -> set[tuple[int, ...]]:
    """Canonical vertex tuples of every simple cycle, found by testing all
    cyclic arrangements of every vertex subset.  Exponential; keep the
    graphs small."""
    cycles: set[tuple[int, ...]] = set()
    verts = list(g.vertices())
    for size in range(3, g.vertex_count + 1):
        for subset in combinations(verts, size):
            first = subset[0]
            for perm in permutations(subset[1:]):
                if perm[0] > perm[-1]:
                    continue  # keep one direction of each arrangement
                seq = (first,) + perm
                if all(g.has_edge(seq[i], seq[(i + 1) % size]) for i in range(size)):
                    cycles.add(seq)
    return cycles
