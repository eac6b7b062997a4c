"""Deterministic graph corpus for the cross-validation suites.

``standard_corpus`` holds every connected labelled graph on up to five
vertices (772 graphs) plus seeded random connected samples on six and
seven vertices, for 872 graphs total, all with at most 7 vertices.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

from geodetic import Graph, from_edge_list, is_connected


@lru_cache(maxsize=None)
def all_connected_graphs(n: int) -> tuple[Graph, ...]:
    """Every connected labelled graph on exactly ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    out = []
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = from_edge_list(edges, vertex_count=n)
        if is_connected(g):
            out.append(g)
    return tuple(out)


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """A random spanning tree plus a random number of extra edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    all_pairs = list(combinations(range(n), 2))
    extra = rng.randrange(len(all_pairs) - n + 2)
    edges.update(rng.sample(all_pairs, extra))
    return from_edge_list(sorted(edges), vertex_count=n)


def seeded_samples(n: int, count: int, seed: int) -> tuple[Graph, ...]:
    rng = random.Random(seed)
    return tuple(random_connected_graph(rng, n) for _ in range(count))


@lru_cache(maxsize=None)
def standard_corpus() -> tuple[Graph, ...]:
    exhaustive = tuple(g for n in range(1, 6) for g in all_connected_graphs(n))
    return exhaustive + seeded_samples(6, 60, seed=601) + seeded_samples(7, 40, seed=701)
