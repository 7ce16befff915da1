"""Named small graphs: ``K_r`` (complete), ``C_k`` (cycle), ``P_k`` (path on k vertices)."""

from __future__ import annotations

import re
from pathlib import Path

from .hypergraph import Graph


def complete(r: int) -> Graph:
    return Graph.complete(r)


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(k, tuple((i, (i + 1) % k) for i in range(k)))


def path(k: int) -> Graph:
    """Path with ``k`` vertices and ``k - 1`` edges."""
    if k < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph(k, tuple((i, i + 1) for i in range(k - 1)))


def empty(k: int) -> Graph:
    return Graph(k, ())


_NAME = re.compile(r"^([KCPE])_?(\d+)$")
_BUILDERS = {"K": complete, "C": cycle, "P": path, "E": empty}


def named(name: str) -> Graph:
    """Build a catalog graph from a name such as ``K_3``, ``C4`` or ``P_3``."""
    match = _NAME.match(name.strip().upper())
    if not match:
        raise ValueError(f"unknown pattern name {name!r}; expected K_r, C_k, P_k or E_k")
    return _BUILDERS[match.group(1)](int(match.group(2)))


def resolve_pattern(spec: str) -> Graph:
    """A catalog name, or a path to a graph file."""
    if _NAME.match(spec.strip().upper()):
        return named(spec)
    from .io import load_graph

    if not Path(spec).exists():
        raise FileNotFoundError(f"pattern {spec!r} is neither a catalog name nor a file")
    return load_graph(spec)
