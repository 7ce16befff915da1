"""Explicit hypergraph constructions and a seeded greedy generator."""

from __future__ import annotations

import math
import random
from itertools import combinations

from .berge import contains_berge
from .hypergraph import Graph, Hypergraph


def kr_construction(n: int, r: int) -> Hypergraph:
    """Singleton/block construction: r-uniform, Berge-K_r-free, total size n^2/r.

    Vertices ``0..n/r-1`` are singletons, the remaining vertices are cut into
    ``n/r`` consecutive blocks of ``r-1``. Every singleton is joined with
    every block.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    if n % r:
        raise ValueError(f"r={r} does not divide n={n}")
    k = n // r
    blocks = [tuple(range(k + j * (r - 1), k + (j + 1) * (r - 1))) for j in range(k)]
    return Hypergraph(n, tuple((s,) + b for s in range(k) for b in blocks))


def kr_predicted_size_sum(n: int, r: int) -> int:
    return n * n // r


def single_edge(n: int) -> Hypergraph:
    if n < 1:
        raise ValueError("n must be at least 1")
    return Hypergraph(n, (tuple(range(n)),))


def candidate_count(n: int, s_min: int, s_max: int) -> int:
    return sum(math.comb(n, s) for s in range(s_min, s_max + 1))


def greedy_maximal(
    n: int,
    F: Graph,
    s_min: int,
    s_max: int,
    seed: int,
    budget_factor: int = 10,
) -> Hypergraph:
    """Add candidate hyperedges in a seeded random order while staying Berge-F-free.

    When all ``C(n, s)`` candidates fit in the ``budget_factor * n^2`` draw
    budget they are enumerated in shuffled order, so the result is maximal
    among simple hypergraphs with the permitted sizes. Otherwise the budget
    is spent on uniform draws (size first, then subset) and the result is
    maximal with respect to that stream. Duplicate hyperedges are never
    offered.
    """
    if not 2 <= s_min <= s_max <= n:
        raise ValueError(f"need 2 <= s_min <= s_max <= n, got {s_min}, {s_max}, {n}")
    if F.m == 0:
        return Hypergraph(n, ())
    rng = random.Random(seed)
    budget = budget_factor * n * n
    if candidate_count(n, s_min, s_max) <= budget:
        stream = [c for s in range(s_min, s_max + 1) for c in combinations(range(n), s)]
        rng.shuffle(stream)
    else:
        stream = (
            tuple(sorted(rng.sample(range(n), rng.randint(s_min, s_max)))) for _ in range(budget)
        )
    H = Hypergraph(n, ())
    present: set[tuple[int, ...]] = set()
    for cand in stream:
        if cand in present:
            continue
        trial = H.add(cand)
        if contains_berge(trial, F, through=len(trial) - 1) is None:
            H = trial
            present.add(cand)
    return H
