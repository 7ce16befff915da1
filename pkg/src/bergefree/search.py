"""Exact small-case extremal oracles.

``max_f_free_edges`` computes ``ex(n, F)`` from the isomorph-free
generation in :mod:`bergefree.orderly`. ``max_weight_berge_free`` is a
depth-first branch and bound over multisets of candidate hyperedges,
with orderly isomorph rejection under vertex permutations.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from itertools import permutations

from .berge import contains_berge
from .hypergraph import Graph, Hypergraph, iter_bits
from .io import graph_to_json, hypergraph_to_json
from .orderly import Budget, BudgetExhausted, extend_level, first_level
from .weights import WeightFunction

DEFAULT_BUDGET = 10**8
# permutation-based isomorph rejection is only used up to this many vertices
ISO_REJECTION_MAX_N = 7


@dataclass
class SearchReport:
    optimum: int
    witness: Hypergraph | Graph
    nodes_explored: int
    exhaustive: bool
    wall_time: float
    params: dict = field(default_factory=dict)

    @property
    def bound_kind(self) -> str:
        return "exact" if self.exhaustive else "lower_bound"

    def to_json(self) -> dict:
        if isinstance(self.witness, Hypergraph):
            witness = hypergraph_to_json(self.witness)
        else:
            witness = graph_to_json(self.witness)
        return {
            "optimum": self.optimum,
            "bound_kind": self.bound_kind,
            "witness": witness,
            "nodes_explored": self.nodes_explored,
            "exhaustive": self.exhaustive,
            "wall_time": round(self.wall_time, 6),
            "params": self.params,
        }


def max_f_free_edges(n: int, F: Graph, budget: int | None = DEFAULT_BUDGET, max_n: int = 10) -> SearchReport:
    """``ex(n, F)`` with an extremal witness graph."""
    if n > max_n:
        raise ValueError(f"n={n} exceeds the exhaustive limit {max_n}")
    if F.m == 0 and F.n <= n:
        raise ValueError("an edgeless pattern that fits is contained in every graph")
    start = time.perf_counter()
    counter = Budget(budget)
    params = {"n": n, "pattern": graph_to_json(F)}
    if n == 0:
        return SearchReport(0, Graph(0), 0, True, 0.0, params)
    level = first_level(F, None)
    try:
        for _ in range(n - 1):
            level = extend_level(level, F, None, counter)
    except BudgetExhausted:
        # the edgeless graph is always F-free here; it is the fallback lower bound
        return SearchReport(0, Graph(n), counter.nodes, False, time.perf_counter() - start, params)
    best = max(level, key=lambda g: g.m)
    return SearchReport(best.m, best, counter.nodes, True, time.perf_counter() - start, params)


@dataclass(frozen=True)
class MarginRow:
    n: int
    ex: int
    pairs: int
    ratio: float
    exhaustive: bool

    @property
    def holds(self) -> bool:
        return self.ex <= self.pairs - 1


def verify_lemma1_margin(F: Graph, n_values, budget: int | None = DEFAULT_BUDGET) -> list[MarginRow]:
    """``ex(n, F)`` against ``C(n, 2)`` for each ``n >= |V(F)|``; ``holds`` is ``ex <= C(n, 2) - 1``."""
    rows = []
    for n in n_values:
        if n < F.n:
            raise ValueError(f"n={n} is below |V(F)|={F.n}")
        rep = max_f_free_edges(n, F, budget)
        pairs = math.comb(n, 2)
        rows.append(MarginRow(n, rep.optimum, pairs, rep.optimum / pairs if pairs else 0.0, rep.exhaustive))
    return rows


def _candidates(n: int, s_min: int, s_max: int) -> list[int]:
    """Vertex-set bitmasks with permitted size, in colex order (= numeric order)."""
    return sorted(m for m in range(1 << n) if s_min <= m.bit_count() <= s_max)


def max_weight_berge_free(
    n: int,
    F: Graph,
    w: WeightFunction,
    s_min: int,
    s_max: int,
    budget: int | None = DEFAULT_BUDGET,
    set_semantics: bool = False,
    multiplicity_cap: int | None = None,
    max_n: int = 12,
) -> SearchReport:
    """Maximum of ``sum w(|h|)`` over Berge-F-free multisets of hyperedges.

    Each distinct hyperedge may be used at most ``multiplicity_cap`` times
    (default ``|E(F)| - 1``, or 1 with ``set_semantics``). For hyperedges of
    size at least ``|V(F)|`` the default cap loses nothing, since
    ``|E(F)|`` copies of such a hyperedge already form a Berge-F. Smaller
    hyperedges may in general be repeated without bound, so the capped
    optimum is then only the optimum of the capped problem.

    Among optimal witnesses the first in search order is returned: the
    lexicographically least sorted list of candidate indices among
    canonical representatives.
    """
    if not 2 <= s_min <= s_max:
        raise ValueError(f"need 2 <= s_min <= s_max, got {s_min}, {s_max}")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the exhaustive limit {max_n}")
    if F.m == 0 and F.n <= n:
        raise ValueError("an edgeless pattern that fits is contained in every hypergraph")
    start = time.perf_counter()
    if multiplicity_cap is None:
        multiplicity_cap = 1 if set_semantics else max(F.m - 1, 1)
    cap = multiplicity_cap
    cands = _candidates(n, s_min, min(s_max, n))
    verts = [tuple(iter_bits(c)) for c in cands]
    weights = [w(len(v)) for v in verts]
    index = {c: i for i, c in enumerate(cands)}
    params = {
        "n": n,
        "pattern": graph_to_json(F),
        "weight": str(w),
        "s_min": s_min,
        "s_max": s_max,
        "multiplicity_cap": cap,
        "set_semantics": set_semantics,
    }

    perm_maps: list[list[int]] = []
    if n <= ISO_REJECTION_MAX_N:
        for perm in permutations(range(n)):
            if all(perm[i] == i for i in range(n)):
                continue
            perm_maps.append(
                [index[sum(1 << perm[v] for v in vs)] for vs in verts]
            )

    def canonical(seq: list[int]) -> bool:
        for pm in perm_maps:
            if sorted(pm[i] for i in seq) < seq:
                return False
        return True

    suffix = [0] * (len(cands) + 1)
    for i in range(len(cands) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + cap * weights[i]

    counter = Budget(budget)
    best_weight = 0
    best_seq: list[int] = []

    def dfs(seq: list[int], H: Hypergraph, weight: int, last_count: int) -> None:
        nonlocal best_weight, best_seq
        counter.tick()
        if weight > best_weight:
            best_weight, best_seq = weight, list(seq)
        last = seq[-1] if seq else -1
        # children: another copy of the last candidate, or any later one
        first = last if seq and last_count < cap else last + 1
        for j in range(first, len(cands)):
            extra = (cap - last_count) * weights[last] if j == last else 0
            if weight + extra + suffix[j if j != last else j + 1] <= best_weight:
                break
            child = seq + [j]
            if not canonical(child):
                continue
            trial = H.add(verts[j])
            if contains_berge(trial, F, through=len(trial) - 1) is not None:
                continue
            dfs(child, trial, weight + weights[j], last_count + 1 if j == last else 1)

    exhaustive = True
    try:
        dfs([], Hypergraph(n, ()), 0, 0)
    except BudgetExhausted:
        exhaustive = False
    witness = Hypergraph(n, tuple(verts[i] for i in best_seq))
    return SearchReport(best_weight, witness, counter.nodes, exhaustive, time.perf_counter() - start, params)
