"""Berge-F containment.

A hypergraph contains a Berge copy of ``F`` when some copy of ``F`` in its
2-shadow admits an injective assignment of covering hyperedges to the
copy's edges. The search embeds ``F`` into the shadow vertex by vertex and
extends a matching (pattern edge -> hyperedge index) with augmenting paths
as each pattern edge becomes fully placed. A failed augmentation is a Hall
violation for the partial copy, so the whole subtree is cut.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .embed import plan_for, search
from .hypergraph import Graph, Hypergraph, iter_bits


@dataclass(frozen=True)
class BergeWitness:
    """``vertex_map[a]`` is the host image of pattern vertex ``a``;
    ``edge_assignment[i]`` is the hyperedge index representing ``F.edges[i]``."""

    pattern: Graph
    vertex_map: tuple[int, ...]
    edge_assignment: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "vertex_map": [[a, x] for a, x in enumerate(self.vertex_map)],
            "edge_assignment": [
                [[a, b], h] for (a, b), h in zip(self.pattern.edges, self.edge_assignment)
            ],
        }

    @classmethod
    def from_json(cls, pattern: Graph, data: dict) -> BergeWitness:
        vmap = dict((int(a), int(x)) for a, x in data["vertex_map"])
        assign = {tuple(sorted(e)): int(h) for e, h in data["edge_assignment"]}
        return cls(
            pattern,
            tuple(vmap[a] for a in range(pattern.n)),
            tuple(assign[e] for e in pattern.edges),
        )


def check_witness(H: Hypergraph, w: BergeWitness) -> bool:
    """Independent re-check of every witness invariant."""
    F = w.pattern
    if len(w.vertex_map) != F.n or len(w.edge_assignment) != F.m:
        return False
    if len(set(w.vertex_map)) != F.n or any(not 0 <= x < H.n for x in w.vertex_map):
        return False
    if len(set(w.edge_assignment)) != F.m:
        return False
    for (a, b), h in zip(F.edges, w.edge_assignment):
        if not 0 <= h < len(H):
            return False
        edge = set(H.hyperedges[h])
        if w.vertex_map[a] not in edge or w.vertex_map[b] not in edge:
            return False
    return True


class _SDR:
    """Augmenting-path bipartite matching between pattern edges and hyperedges."""

    __slots__ = ("H", "rep", "owner", "covers")

    def __init__(self, H: Hypergraph, m: int) -> None:
        self.H = H
        self.rep = [-1] * m
        self.owner: dict[int, int] = {}
        self.covers = [0] * m

    def pin(self, edge_index: int, hyperedge: int) -> None:
        self.covers[edge_index] = 1 << hyperedge
        self.rep[edge_index] = hyperedge
        self.owner[hyperedge] = edge_index

    def add(self, edge_index: int, image: tuple[int, int]) -> bool:
        if self.rep[edge_index] >= 0:
            # pinned edge: only the anchor hyperedge may represent it
            return bool(self.covers[edge_index] & self.H.cover(*image))
        self.covers[edge_index] = self.H.cover(*image)
        return self._augment(edge_index, [0])

    def _augment(self, e: int, visited: list[int]) -> bool:
        for h in iter_bits(self.covers[e]):
            if visited[0] >> h & 1:
                continue
            visited[0] |= 1 << h
            holder = self.owner.get(h)
            if holder is None or self._augment(holder, visited):
                self.owner[h] = e
                self.rep[e] = h
                return True
        return False

    def snapshot(self):
        return list(self.rep), dict(self.owner), list(self.covers)

    def restore(self, state) -> None:
        self.rep, self.owner, self.covers = list(state[0]), dict(state[1]), list(state[2])


def iter_berge_copies(H: Hypergraph, F: Graph, through: int | None = None) -> Iterator[BergeWitness]:
    """Witnesses in search order, one per successful embedding.

    With ``through`` set, only Berge copies using hyperedge ``through`` are
    searched; if ``H`` minus that hyperedge is Berge-F-free this decides
    containment for ``H`` far faster than a full search.
    """
    adj = H.shadow_adj
    if through is None:
        sdr = _SDR(H, F.m)
        for phi in search(plan_for(F), adj, H.n, matcher=sdr):
            yield BergeWitness(F, phi, tuple(sdr.rep))
        return
    h = H.hyperedges[through]
    for idx, (a, b) in enumerate(F.edges):
        plan = plan_for(F, (a, b))
        for x in h:
            for y in h:
                if x == y:
                    continue
                sdr = _SDR(H, F.m)
                sdr.pin(idx, through)
                for phi in search(plan, adj, H.n, (x, y), matcher=sdr):
                    yield BergeWitness(F, phi, tuple(sdr.rep))


def contains_berge(H: Hypergraph, F: Graph, through: int | None = None) -> BergeWitness | None:
    """First Berge-F witness in deterministic search order, or ``None``.

    A pattern without edges is contained whenever it fits on the vertex
    set; the empty assignment is the witness.
    """
    if F.m == 0:
        if F.n > H.n:
            return None
        return BergeWitness(F, tuple(range(F.n)), ())
    if F.m > len(H) or F.n > H.n:
        return None
    if through is not None and not 0 <= through < len(H):
        raise IndexError(f"hyperedge index {through} out of range")
    return next(iter_berge_copies(H, F, through), None)


def is_berge_f_free(H: Hypergraph, F: Graph) -> bool:
    return contains_berge(H, F) is None


def all_berge_witnesses(H: Hypergraph, F: Graph) -> list[BergeWitness]:
    """Exhaustive mode: one witness for every shadow embedding admitting an SDR."""
    if F.m == 0:
        w = contains_berge(H, F)
        return [w] if w else []
    return list(iter_berge_copies(H, F))


def brute_force_contains_berge(H: Hypergraph, F: Graph) -> BergeWitness | None:
    """Reference oracle: every injective vertex map, every injective edge assignment.

    Shares no code with the matching search above.
    """
    if F.n > H.n:
        return None
    if F.m == 0:
        return BergeWitness(F, tuple(range(F.n)), ())
    sets = [frozenset(h) for h in H.hyperedges]
    if sum(1 for s in sets if len(s) >= 2) < F.m:
        return None
    for phi in permutations(range(H.n), F.n):
        options = []
        for a, b in F.edges:
            x, y = phi[a], phi[b]
            options.append([i for i, s in enumerate(sets) if x in s and y in s])
        if any(not opt for opt in options):
            continue
        chosen: list[int] = []

        def assign(i: int) -> bool:
            if i == len(options):
                return True
            for h in options[i]:
                if h not in chosen:
                    chosen.append(h)
                    if assign(i + 1):
                        return True
                    chosen.pop()
            return False

        if assign(0):
            return BergeWitness(F, tuple(phi), tuple(chosen))
    return None
