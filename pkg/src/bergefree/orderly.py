"""Isomorph-free generation of graphs avoiding a pattern (and optionally a
pattern in the complement), one vertex at a time.

Both properties are hereditary, so every admissible graph on ``k + 1``
vertices restricts to an admissible graph on its first ``k`` vertices. A
level is produced by extending each class representative of the previous
level with every neighbourhood of the new vertex. Pairs to the new vertex
are decided in ascending order, and each decision is checked immediately
for a forbidden copy through that pair. Survivors are deduplicated by an
isomorphism-invariant key followed by an exact isomorphism test.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .embed import copy_through_edge, is_isomorphic
from .hypergraph import Graph


class BudgetExhausted(RuntimeError):
    pass


@dataclass
class Budget:
    """Search-node counter with an optional limit."""

    limit: int | None = None
    nodes: int = 0

    def tick(self, k: int = 1) -> None:
        self.nodes += k
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExhausted(f"node budget {self.limit} exhausted")


def invariant_key(G: Graph) -> tuple:
    degs = [G.degree(v) for v in range(G.n)]
    profile = sorted(
        (degs[v], tuple(sorted(degs[u] for u in range(G.n) if G.adj[v] >> u & 1))) for v in range(G.n)
    )
    return (G.n, G.m, tuple(profile))


@dataclass
class IsoClasses:
    """Graphs up to isomorphism, in order of first insertion."""

    members: list[Graph] = field(default_factory=list)
    _buckets: dict[tuple, list[Graph]] = field(default_factory=dict)

    def add(self, G: Graph) -> bool:
        bucket = self._buckets.setdefault(invariant_key(G), [])
        if any(is_isomorphic(G, other) for other in bucket):
            return False
        bucket.append(G)
        self.members.append(G)
        return True

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def _edgeless_forbidden(P: Graph | None, n: int) -> bool:
    return P is not None and P.m == 0 and P.n <= n


def first_level(avoid: Graph | None, avoid_complement: Graph | None) -> list[Graph]:
    """Admissible graphs on one vertex."""
    if _edgeless_forbidden(avoid, 1) or _edgeless_forbidden(avoid_complement, 1):
        return []
    return [Graph(1)]


def extend_level(
    graphs: list[Graph],
    avoid: Graph | None,
    avoid_complement: Graph | None,
    budget: Budget | None = None,
) -> list[Graph]:
    """All admissible one-vertex extensions of ``graphs``, up to isomorphism.

    ``avoid`` must not appear in the graph, ``avoid_complement`` must not
    appear in its complement. Patterns without edges are handled by vertex
    count alone.
    """
    budget = budget or Budget()
    if not graphs:
        return []
    n = graphs[0].n + 1
    if _edgeless_forbidden(avoid, n) or _edgeless_forbidden(avoid_complement, n):
        return []
    check1 = avoid is not None and avoid.m > 0
    check2 = avoid_complement is not None and avoid_complement.m > 0
    v = n - 1
    full_old = (1 << v) - 1
    out = IsoClasses()

    for base in graphs:
        adj1 = list(base.adj) + [0]
        adj2 = [(full_old ^ a) & ~(1 << u) for u, a in enumerate(base.adj)] + [0]

        def assign(u: int) -> None:
            budget.tick()
            if u == v:
                out.add(Graph.from_masks(n, adj1))
                return
            bit_u, bit_v = 1 << u, 1 << v
            adj1[u] |= bit_v
            adj1[v] |= bit_u
            if not (check1 and copy_through_edge(adj1, n, avoid, u, v) is not None):
                assign(u + 1)
            adj1[u] &= ~bit_v
            adj1[v] &= ~bit_u
            adj2[u] |= bit_v
            adj2[v] |= bit_u
            if not (check2 and copy_through_edge(adj2, n, avoid_complement, u, v) is not None):
                assign(u + 1)
            adj2[u] &= ~bit_v
            adj2[v] &= ~bit_u

        assign(0)
    return out.members
