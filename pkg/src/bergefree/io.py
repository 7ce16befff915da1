"""Text and JSON formats for graphs and hypergraphs.

Text format::

    n=<vertex count>
    0 1 2        # one hyperedge per line, space-separated vertex ids
    1 3

Blank lines and lines starting with ``#`` are ignored. Repeated lines are
repeated hyperedges. Graph files use the same layout with exactly two
vertices per line.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, TextIO

from .hypergraph import Graph, Hypergraph, HypergraphError


class MalformedLine(HypergraphError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class DuplicateEdge(HypergraphError):
    pass


def _content_lines(lines: Iterable[str]):
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _parse_rows(text: str) -> tuple[int, list[tuple[int, list[int]]]]:
    rows = _content_lines(text.splitlines())
    try:
        lineno, header = next(rows)
    except StopIteration:
        raise MalformedLine(1, "missing 'n=<integer>' header") from None
    key, sep, value = header.partition("=")
    if key.strip() != "n" or not sep:
        raise MalformedLine(lineno, f"expected 'n=<integer>', got {header!r}")
    try:
        n = int(value.strip())
    except ValueError:
        raise MalformedLine(lineno, f"vertex count {value.strip()!r} is not an integer") from None
    if n < 0:
        raise MalformedLine(lineno, "vertex count must be non-negative")
    parsed = []
    for lineno, line in rows:
        try:
            parsed.append((lineno, [int(tok) for tok in line.split()]))
        except ValueError:
            raise MalformedLine(lineno, f"non-integer vertex id in {line!r}") from None
    return n, parsed


def parse_hypergraph(text: str) -> Hypergraph:
    n, rows = _parse_rows(text)
    edges = []
    for lineno, verts in rows:
        try:
            Hypergraph(n, (tuple(verts),))
        except HypergraphError as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None
        edges.append(tuple(verts))
    return Hypergraph(n, tuple(edges))


def parse_graph(text: str) -> Graph:
    n, rows = _parse_rows(text)
    edges = []
    seen = set()
    for lineno, verts in rows:
        if len(verts) != 2:
            raise MalformedLine(lineno, f"graph edge needs exactly 2 vertices, got {len(verts)}")
        try:
            Graph(n, (tuple(verts),))
        except HypergraphError as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None
        key = tuple(sorted(verts))
        if key in seen:
            raise DuplicateEdge(f"line {lineno}: edge {key} listed twice")
        seen.add(key)
        edges.append(key)
    return Graph(n, tuple(edges))


def format_hypergraph(H: Hypergraph) -> str:
    lines = [f"n={H.n}"]
    lines.extend(" ".join(map(str, h)) for h in H.hyperedges)
    return "\n".join(lines) + "\n"


def format_graph(G: Graph) -> str:
    lines = [f"n={G.n}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def load_hypergraph(path: str | Path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text(encoding="utf-8"))


def store_hypergraph(H: Hypergraph, path: str | Path) -> None:
    Path(path).write_text(format_hypergraph(H), encoding="utf-8", newline="\n")


def load_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def store_graph(G: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(G), encoding="utf-8", newline="\n")


def hypergraph_to_json(H: Hypergraph) -> dict:
    return {"n": H.n, "edges": [list(h) for h in H.hyperedges]}


def hypergraph_from_json(data: dict) -> Hypergraph:
    return Hypergraph(int(data["n"]), tuple(tuple(h) for h in data["edges"]))


def graph_to_json(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges]}


def graph_from_json(data: dict) -> Graph:
    return Graph(int(data["n"]), tuple(tuple(e) for e in data["edges"]))


def dump_json(obj, fp: TextIO) -> None:
    json.dump(obj, fp, sort_keys=True)
    fp.write("\n")
