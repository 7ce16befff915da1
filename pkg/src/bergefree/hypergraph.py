"""Graphs and multi-hypergraphs on the vertex set ``0..n-1``.

Both types are immutable. Vertex sets are mirrored as Python ``int``
bitmasks so that subset, intersection and cover queries are a handful of
word operations regardless of ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator


class HypergraphError(ValueError):
    """Base class for invalid graph or hypergraph input."""


class VertexOutOfRange(HypergraphError):
    pass


class DuplicateVertexInEdge(HypergraphError):
    pass


class EmptyHyperedge(HypergraphError):
    pass


class SelfLoop(HypergraphError):
    pass


class ExceedsCap(ValueError):
    """An exact computation was asked for an instance above its size cap."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple graph. ``edges`` is kept as a sorted tuple of pairs ``(u, v)``, ``u < v``."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise HypergraphError(f"vertex count must be non-negative, got {self.n}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            for x in (u, v):
                if not 0 <= x < self.n:
                    raise VertexOutOfRange(f"vertex {x} not in [0, {self.n})")
            norm.add(_pair(u, v))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @classmethod
    def from_masks(cls, n: int, adj: Iterable[int]) -> Graph:
        edges = []
        for u, mask in enumerate(adj):
            edges.extend((u, v) for v in iter_bits(mask >> (u + 1) << (u + 1)))
        return cls(n, tuple(edges))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, tuple(combinations(range(n), 2)))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmask of every vertex."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph.from_masks(self.n, ((full ^ a) & ~(1 << u) for u, a in enumerate(self.adj)))

    def union(self, other: Graph) -> Graph:
        if other.n != self.n:
            raise HypergraphError("graphs live on different vertex sets")
        return Graph(self.n, self.edges + other.edges)

    def without_edge(self, e: tuple[int, int]) -> Graph:
        """Delete ``e`` and keep every vertex, isolated ones included."""
        e = _pair(*e)
        if e not in self.edge_set:
            raise HypergraphError(f"{e} is not an edge")
        return Graph(self.n, tuple(x for x in self.edges if x != e))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabelled ``0..k-1`` in ascending order."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        return Graph(len(vs), tuple((index[u], index[v]) for u, v in self.edges if u in index and v in index))


@dataclass(frozen=True)
class Hypergraph:
    """A multi-hypergraph: hyperedges form an ordered list and may repeat.

    Hyperedge ``i`` keeps index ``i`` for the lifetime of the object, which is
    what witnesses refer to.
    """

    n: int
    hyperedges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise HypergraphError(f"vertex count must be non-negative, got {self.n}")
        norm = []
        for h in self.hyperedges:
            verts = sorted(h)
            if not verts:
                raise EmptyHyperedge("hyperedge must contain at least one vertex")
            for a, b in zip(verts, verts[1:]):
                if a == b:
                    raise DuplicateVertexInEdge(f"vertex {a} repeated in hyperedge {list(h)}")
            if verts[0] < 0 or verts[-1] >= self.n:
                bad = verts[0] if verts[0] < 0 else verts[-1]
                raise VertexOutOfRange(f"vertex {bad} not in [0, {self.n})")
            norm.append(tuple(verts))
        object.__setattr__(self, "hyperedges", tuple(norm))

    def __len__(self) -> int:
        return len(self.hyperedges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(to_mask(h) for h in self.hyperedges)

    @cached_property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(h) for h in self.hyperedges)

    @cached_property
    def incidence(self) -> tuple[int, ...]:
        """For every vertex, the bitmask of hyperedge indices containing it."""
        inc = [0] * self.n
        for i, h in enumerate(self.hyperedges):
            for v in h:
                inc[v] |= 1 << i
        return tuple(inc)

    @cached_property
    def shadow_adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks of the 2-shadow."""
        adj = [0] * self.n
        for h, mask in zip(self.hyperedges, self.masks):
            for v in h:
                adj[v] |= mask
        return tuple(a & ~(1 << v) for v, a in enumerate(adj))

    def cover(self, u: int, v: int) -> int:
        """Bitmask of hyperedge indices containing both ``u`` and ``v``."""
        return self.incidence[u] & self.incidence[v]

    def degree(self, v: int) -> int:
        return self.incidence[v].bit_count()

    def add(self, h: Iterable[int]) -> Hypergraph:
        return Hypergraph(self.n, self.hyperedges + (tuple(h),))

    def replace(self, index: int, h: Iterable[int]) -> Hypergraph:
        edges = list(self.hyperedges)
        edges[index] = tuple(h)
        return Hypergraph(self.n, tuple(edges))

    def union(self, other: Hypergraph) -> Hypergraph:
        if other.n != self.n:
            raise HypergraphError("hypergraphs live on different vertex sets")
        return Hypergraph(self.n, self.hyperedges + other.hyperedges)


def shadow(H: Hypergraph) -> Graph:
    """The 2-shadow: every pair of vertices covered by at least one hyperedge."""
    return Graph.from_masks(H.n, H.shadow_adj)


def multiplicity(H: Hypergraph, pair: tuple[int, int]) -> int:
    """Number of hyperedges (with repetition) containing both vertices of ``pair``."""
    u, v = pair
    for x in (u, v):
        if not 0 <= x < H.n:
            raise VertexOutOfRange(f"vertex {x} not in [0, {H.n})")
    return H.cover(u, v).bit_count()


DEFAULT_EXACT_CAP = 16


def clique_number(G: Graph, cap: int = DEFAULT_EXACT_CAP) -> int:
    """Exact clique number by Bron-Kerbosch with pivoting."""
    if G.n > cap:
        raise ExceedsCap(f"graph has {G.n} vertices, exact cap is {cap}")
    if G.n == 0:
        return 0
    adj = G.adj
    best = 0

    def expand(size: int, cand: int, excl: int) -> None:
        nonlocal best
        if not cand and not excl:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        pivot = max(iter_bits(cand | excl), key=lambda u: (adj[u] & cand).bit_count())
        for v in iter_bits(cand & ~adj[pivot]):
            expand(size + 1, cand & adj[v], excl & adj[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, (1 << G.n) - 1, 0)
    return best


def chromatic_number(G: Graph, cap: int = DEFAULT_EXACT_CAP) -> int:
    """Exact chromatic number: smallest k admitting a backtracking k-colouring."""
    if G.n > cap:
        raise ExceedsCap(f"graph has {G.n} vertices, exact cap is {cap}")
    if G.n == 0:
        return 0
    if G.m == 0:
        return 1
    adj = G.adj
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))

    def colourable(k: int) -> bool:
        colour = [-1] * G.n

        def place(i: int, used: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            forbidden = {colour[u] for u in iter_bits(adj[v]) if colour[u] >= 0}
            # symmetry: a vertex may open at most one new colour class
            for c in range(min(k, used + 1)):
                if c not in forbidden:
                    colour[v] = c
                    if place(i + 1, max(used, c + 1)):
                        return True
            colour[v] = -1
            return False

        return place(0, 0)

    k = max(2, clique_number(G, cap))
    while not colourable(k):
        k += 1
    return k
