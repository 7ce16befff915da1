"""Backtracking enumeration of (non-induced) copies of a pattern graph.

Pattern vertices are placed in a fixed order: connectivity first, then
degree descending, then id. Host candidates for each pattern vertex are
the unused vertices adjacent to the images of its already-placed
neighbours, scanned in ascending id. Everything is bitmask arithmetic.

An optional *matcher* receives every pattern edge as soon as both ends are
placed and may veto the branch; Berge detection uses this to grow a system
of distinct representatives alongside the embedding.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Protocol, Sequence

from .hypergraph import Graph, iter_bits


class Matcher(Protocol):
    def add(self, edge_index: int, image: tuple[int, int]) -> bool: ...
    def snapshot(self): ...
    def restore(self, state) -> None: ...


class Plan:
    """Placement order for a pattern, optionally starting with a forced prefix."""

    def __init__(self, F: Graph, prefix: Sequence[int] = ()) -> None:
        self.pattern = F
        self.k = F.n
        order = list(prefix)
        placed = set(order)
        adj = F.adj
        while len(order) < F.n:
            placed_mask = sum(1 << p for p in placed)
            best = min(
                (p for p in range(F.n) if p not in placed),
                key=lambda p: (-(adj[p] & placed_mask).bit_count(), -F.degree(p), p),
            )
            order.append(best)
            placed.add(best)
        pos = [0] * F.n
        for i, p in enumerate(order):
            pos[p] = i
        self.order = tuple(order)
        self.back = tuple(
            tuple(q for q in iter_bits(adj[p]) if pos[q] < i) for i, p in enumerate(order)
        )
        completed: list[list[tuple[int, int, int]]] = [[] for _ in order]
        for idx, (a, b) in enumerate(F.edges):
            completed[max(pos[a], pos[b])].append((idx, a, b))
        self.completed = tuple(tuple(c) for c in completed)
        self.degree = tuple(F.degree(p) for p in order)


@lru_cache(maxsize=512)
def plan_for(F: Graph, prefix: tuple[int, ...] = ()) -> Plan:
    return Plan(F, prefix)


def search(
    plan: Plan,
    adj: Sequence[int],
    n: int,
    fixed: Sequence[int] = (),
    matcher: Matcher | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield injective edge-preserving maps ``V(F) -> V(host)``.

    ``fixed`` gives host images for the first ``len(fixed)`` vertices of
    ``plan.order``. Each yielded tuple is indexed by pattern vertex. The
    caller must not hold on to matcher state across iterations.
    """
    k = plan.k
    if k > n:
        return
    order, back, completed, pdeg = plan.order, plan.back, plan.completed, plan.degree
    max_deg = max(pdeg, default=0)
    deg_mask = [0] * (max_deg + 1)
    for x in range(n):
        d = min(adj[x].bit_count(), max_deg)
        deg_mask[d] |= 1 << x
    for d in range(max_deg - 1, -1, -1):
        deg_mask[d] |= deg_mask[d + 1]

    mapping = [-1] * k
    used = 0
    for i, x in enumerate(fixed):
        p = order[i]
        if not 0 <= x < n or used >> x & 1:
            return
        if any(not adj[x] >> mapping[q] & 1 for q in back[i]):
            return
        mapping[p] = x
        used |= 1 << x
        if matcher is not None:
            for idx, a, b in completed[i]:
                if not matcher.add(idx, (mapping[a], mapping[b])):
                    return

    def extend(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == k:
            yield tuple(mapping)
            return
        p = order[i]
        cand = deg_mask[pdeg[i]] & ~used
        for q in back[i]:
            cand &= adj[mapping[q]]
        while cand:
            low = cand & -cand
            cand ^= low
            mapping[p] = low.bit_length() - 1
            if matcher is None:
                yield from extend(i + 1, used | low)
                continue
            state = matcher.snapshot()
            if all(matcher.add(idx, (mapping[a], mapping[b])) for idx, a, b in completed[i]):
                yield from extend(i + 1, used | low)
            matcher.restore(state)
        mapping[p] = -1

    yield from extend(len(fixed), used)


@lru_cache(maxsize=256)
def automorphisms(F: Graph) -> tuple[tuple[int, ...], ...]:
    """All automorphisms of ``F`` as vertex permutations."""
    return tuple(search(plan_for(F), F.adj, F.n))


def _is_representative(phi: tuple[int, ...], auts) -> bool:
    # phi and phi∘sigma describe the same copy; keep the lexicographically least
    for sigma in auts:
        for i in range(len(phi)):
            a, b = phi[sigma[i]], phi[i]
            if a != b:
                if a < b:
                    return False
                break
    return True


def find_embeddings(G: Graph, F: Graph) -> Iterator[tuple[int, ...]]:
    """One injective map per copy of ``F`` in ``G``, in deterministic order.

    A copy is the pair (image vertex set, image edge set); the map yielded
    is the lexicographically least among those producing the copy.
    """
    auts = automorphisms(F)
    nontrivial = [s for s in auts if any(s[i] != i for i in range(len(s)))]
    for phi in search(plan_for(F), G.adj, G.n):
        if _is_representative(phi, nontrivial):
            yield phi


def count_copies(G: Graph, F: Graph) -> int:
    return sum(1 for _ in find_embeddings(G, F))


def first_embedding(G: Graph, F: Graph) -> tuple[int, ...] | None:
    return next(search(plan_for(F), G.adj, G.n), None)


def copy_through_edge(adj: Sequence[int], n: int, F: Graph, u: int, v: int) -> tuple[int, ...] | None:
    """A copy of ``F`` in the host that uses the host edge ``{u, v}``, if any."""
    for a, b in F.edges:
        for x, y in ((u, v), (v, u)):
            hit = next(search(plan_for(F, (a, b)), adj, n, (x, y)), None)
            if hit is not None:
                return hit
    return None


def is_isomorphic(G1: Graph, G2: Graph) -> bool:
    if G1.n != G2.n or G1.m != G2.m:
        return False
    if sorted(map(G1.degree, range(G1.n))) != sorted(map(G2.degree, range(G2.n))):
        return False
    return first_embedding(G2, G1) is not None
