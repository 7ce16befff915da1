"""Exact two-colour Ramsey numbers for small graphs.

A colouring of ``K_n`` is represented by its colour-1 graph; colour 2 is the
complement. ``R(F, G)`` is found by generating, level by level, every
colouring (up to isomorphism) with no colour-1 ``F`` and no colour-2 ``G``.
The first level with no survivors is ``R(F, G)``; any survivor of the
previous level is an extremal witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .embed import first_embedding
from .hypergraph import ExceedsCap, Graph
from .orderly import Budget, extend_level, first_level

DEFAULT_CAP = 10


@dataclass(frozen=True)
class TwoColoring:
    """Colouring of the pairs of ``0..n-1``: pairs in ``red`` get colour 1, the rest colour 2."""

    red: Graph

    @property
    def n(self) -> int:
        return self.red.n

    def color(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("a vertex pair needs two distinct vertices")
        return 1 if self.red.has_edge(u, v) else 2

    def color_graph(self, c: int) -> Graph:
        return self.red if c == 1 else self.red.complement()

    def swapped(self) -> TwoColoring:
        return TwoColoring(self.red.complement())

    def to_text(self) -> str:
        lines = [f"# n={self.n}"]
        lines.extend(
            f"{u} {v} {self.color(u, v)}" for u in range(self.n) for v in range(u + 1, self.n)
        )
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> TwoColoring:
        n = None
        red = []
        pairs = set()
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition("=")
                if key.strip() == "n":
                    n = int(value)
                continue
            u, v, c = map(int, line.split())
            if c not in (1, 2):
                raise ValueError(f"colour must be 1 or 2, got {c}")
            pairs.add((min(u, v), max(u, v)))
            if c == 1:
                red.append((u, v))
        if n is None:
            n = 1 + max((max(p) for p in pairs), default=-1)
        if len(pairs) != n * (n - 1) // 2:
            raise ValueError(f"colouring of K_{n} must list all {n * (n - 1) // 2} pairs")
        return cls(Graph(n, tuple(red)))

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_text(), encoding="utf-8", newline="\n")


@dataclass(frozen=True)
class MonoCopy:
    color: int
    vertex_map: tuple[int, ...]


def mono_copy(c: TwoColoring, F: Graph, G: Graph) -> MonoCopy | None:
    """A colour-1 copy of ``F`` or, failing that, a colour-2 copy of ``G``."""
    phi = first_embedding(c.red, F)
    if phi is not None:
        return MonoCopy(1, phi)
    phi = first_embedding(c.red.complement(), G)
    if phi is not None:
        return MonoCopy(2, phi)
    return None


class RamseyExceedsCap(ExceedsCap):
    def __init__(self, F: Graph, G: Graph, cap: int) -> None:
        super().__init__(f"R > {cap}: a colouring of K_{cap} avoids both patterns")
        self.lower_bound = cap + 1
        self.cap = cap


@dataclass(frozen=True)
class RamseyResult:
    value: int
    witness: TwoColoring  # colouring of K_{value-1} avoiding both patterns
    nodes: int
    classes_per_level: tuple[int, ...]


def ramsey_number(F: Graph, G: Graph, cap: int = DEFAULT_CAP, budget: Budget | None = None) -> RamseyResult:
    """Smallest ``n <= cap`` such that every colouring of ``K_n`` has a colour-1 ``F`` or colour-2 ``G``.

    Raises :class:`RamseyExceedsCap` when a colouring of ``K_cap`` avoids
    both; :class:`~bergefree.orderly.BudgetExhausted` when the node budget
    runs out first.
    """
    if F.n == 0 or G.n == 0:
        # the empty pattern sits in every colouring, even of K_0
        return RamseyResult(0, TwoColoring(Graph(0)), 0, ())
    budget = budget or Budget()
    previous = [Graph(0)]
    level = first_level(F, G)
    sizes = [len(level)]
    n = 1
    while level:
        if n >= cap:
            raise RamseyExceedsCap(F, G, cap)
        previous = level
        level = extend_level(level, F, G, budget)
        sizes.append(len(level))
        n += 1
    return RamseyResult(n, TwoColoring(previous[0]), budget.nodes, tuple(sizes))


def edge_size_threshold(F: Graph, e: tuple[int, int], cap: int = DEFAULT_CAP, budget: Budget | None = None) -> int:
    """``R(F, F - e)`` with the vertex set of ``F`` kept intact."""
    return ramsey_number(F, F.without_edge(e), cap, budget).value


@dataclass(frozen=True)
class ThresholdRow:
    edge: tuple[int, int]
    value: int | None  # None when the cap was exceeded
    lower_bound: int
    witness: TwoColoring | None


def threshold_table(F: Graph, cap: int = DEFAULT_CAP, edges=None, budget_nodes: int | None = None) -> list[ThresholdRow]:
    rows = []
    for e in edges if edges is not None else F.edges:
        try:
            res = ramsey_number(F, F.without_edge(e), cap, Budget(budget_nodes))
            rows.append(ThresholdRow(tuple(e), res.value, res.value, res.witness))
        except RamseyExceedsCap as exc:
            rows.append(ThresholdRow(tuple(e), None, exc.lower_bound, None))
    return rows
