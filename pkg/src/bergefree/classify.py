"""Blue/non-blue classification of shadow edges and the checks built on it.

A shadow edge is *blue* for a pattern ``F`` when at most ``|E(F)| - 1``
hyperedges contain it. In a Berge-F-free hypergraph every copy of ``F`` in
the shadow must use a blue edge, otherwise covering hyperedges could be
picked greedily for each pattern edge.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from .embed import find_embeddings, first_embedding
from .hypergraph import Graph, Hypergraph, iter_bits, shadow


class PreconditionError(ValueError):
    pass


def _edge_multiplicity(H: Hypergraph, u: int, v: int, set_semantics: bool) -> int:
    if not set_semantics:
        return H.cover(u, v).bit_count()
    return len({H.hyperedges[i] for i in iter_bits(H.cover(u, v))})


@dataclass(frozen=True)
class EdgeClassification:
    threshold: int  # largest blue multiplicity, |E(F)| - 1
    multiplicity: dict[tuple[int, int], int]
    blue: frozenset[tuple[int, int]]
    non_blue: frozenset[tuple[int, int]]

    def is_blue(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.blue

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["u", "v", "multiplicity", "blue"])
        for (u, v), mult in sorted(self.multiplicity.items()):
            writer.writerow([u, v, mult, int((u, v) in self.blue)])
        return buf.getvalue()


def classify_edges(H: Hypergraph, F: Graph, set_semantics: bool = False) -> EdgeClassification:
    """Split the shadow edges by multiplicity against ``|E(F)| - 1``.

    Repeated hyperedges count with multiplicity unless ``set_semantics``.
    """
    if F.m < 1:
        raise PreconditionError("pattern must have at least one edge")
    limit = F.m - 1
    mult = {(u, v): _edge_multiplicity(H, u, v, set_semantics) for u, v in shadow(H).edges}
    blue = frozenset(e for e, k in mult.items() if k <= limit)
    return EdgeClassification(limit, mult, blue, frozenset(mult) - blue)


@dataclass(frozen=True)
class CopyCheck:
    """Outcome of scanning copies of a pattern; ``counterexample`` is a vertex map."""

    ok: bool
    counterexample: tuple[int, ...] | None = None
    copies_checked: int = 0
    truncated: bool = False


def verify_blue_in_every_copy(
    H: Hypergraph,
    F: Graph,
    max_copies: int | None = None,
    classification: EdgeClassification | None = None,
) -> CopyCheck:
    """Scan every copy of ``F`` in the shadow for one made only of non-blue edges.

    With ``max_copies`` the scan stops early and reports ``truncated=True``;
    ``ok`` then only speaks for the copies actually checked.
    """
    cls = classification or classify_edges(H, F)
    checked = 0
    for phi in find_embeddings(shadow(H), F):
        if max_copies is not None and checked >= max_copies:
            return CopyCheck(True, None, checked, truncated=True)
        checked += 1
        if not any(cls.is_blue(phi[a], phi[b]) for a, b in F.edges):
            return CopyCheck(False, phi, checked)
    return CopyCheck(True, None, checked)


def verify_nonblue_within_edge_f_free(
    H: Hypergraph,
    F: Graph,
    h: int,
    classification: EdgeClassification | None = None,
) -> CopyCheck:
    """Check that the non-blue pairs inside hyperedge ``h`` span no copy of ``F``.

    The returned counterexample is expressed in host vertex ids.
    """
    if not 0 <= h < len(H):
        raise IndexError(f"hyperedge index {h} out of range")
    verts = H.hyperedges[h]
    if len(verts) < F.n:
        raise PreconditionError(f"|h| = {len(verts)} is smaller than |V(F)| = {F.n}")
    cls = classification or classify_edges(H, F)
    local = Graph(
        len(verts),
        tuple(
            (i, j)
            for i in range(len(verts))
            for j in range(i + 1, len(verts))
            if (verts[i], verts[j]) in cls.non_blue
        ),
    )
    phi = first_embedding(local, F)
    if phi is None:
        return CopyCheck(True, None, 0)
    return CopyCheck(False, tuple(verts[x] for x in phi), 1)


@dataclass(frozen=True)
class DensityRow:
    index: int
    size: int
    blue: int
    ratio: float


@dataclass(frozen=True)
class DensityReport:
    rows: tuple[DensityRow, ...]
    min_ratio: float | None


def blue_density_report(H: Hypergraph, F: Graph) -> DensityReport:
    """Blue pairs inside each hyperedge, relative to ``C(|h|, 2)``."""
    if any(m < 2 for m in H.sizes):
        raise PreconditionError("every hyperedge needs at least two vertices")
    cls = classify_edges(H, F)
    rows = []
    for i, verts in enumerate(H.hyperedges):
        blue = sum(
            1
            for a in range(len(verts))
            for b in range(a + 1, len(verts))
            if (verts[a], verts[b]) in cls.blue
        )
        rows.append(DensityRow(i, len(verts), blue, blue / math.comb(len(verts), 2)))
    return DensityReport(tuple(rows), min((r.ratio for r in rows), default=None))


@dataclass(frozen=True)
class CountingBound:
    """Blue pairs summed over hyperedges versus ``(|E(F)| - 1)`` times the number of blue edges."""

    blue_incidences: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.blue_incidences <= self.bound


def blue_counting_bound(H: Hypergraph, F: Graph) -> CountingBound:
    cls = classify_edges(H, F)
    incidences = sum(cls.multiplicity[e] for e in cls.blue)
    return CountingBound(incidences, cls.threshold * len(cls.blue))
