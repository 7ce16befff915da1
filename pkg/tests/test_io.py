import json

import pytest
from hypothesis import given

from bergefree import Graph, Hypergraph
from bergefree.hypergraph import DuplicateVertexInEdge, VertexOutOfRange
from bergefree.io import (
    DuplicateEdge,
    MalformedLine,
    format_graph,
    format_hypergraph,
    graph_from_json,
    graph_to_json,
    hypergraph_from_json,
    hypergraph_to_json,
    load_graph,
    load_hypergraph,
    parse_graph,
    parse_hypergraph,
    store_graph,
    store_hypergraph,
)

from conftest import hypergraphs


def test_parse_example():
    H = parse_hypergraph("n=4\n0 1 2\n1 3\n")
    assert H == Hypergraph(4, ((0, 1, 2), (1, 3)))


def test_comments_blank_lines_and_duplicates():
    H = parse_hypergraph("# header comment\nn=3\n\n0 1\n# mid\n0 1\n")
    assert H.hyperedges == ((0, 1), (0, 1))


def test_duplicate_vertex_line():
    with pytest.raises(DuplicateVertexInEdge, match="line 2"):
        parse_hypergraph("n=3\n0 0 1\n")


def test_vertex_out_of_range():
    with pytest.raises(VertexOutOfRange):
        parse_hypergraph("n=3\n0 3\n")


@pytest.mark.parametrize("text", ["", "0 1\n", "n=x\n", "n=3\n0 a\n", "m=3\n"])
def test_malformed(text):
    with pytest.raises(MalformedLine):
        parse_hypergraph(text)


def test_graph_lines_need_two_vertices():
    with pytest.raises(MalformedLine):
        parse_graph("n=3\n0 1 2\n")
    with pytest.raises(DuplicateEdge):
        parse_graph("n=3\n0 1\n1 0\n")
    assert parse_graph("n=3\n0 1\n1 2\n") == Graph(3, ((0, 1), (1, 2)))


def test_store_load_identity_on_canonical_file(tmp_path):
    text = "n=5\n0 1 2\n0 1 2\n3 4\n0 1 2 3 4\n"
    path = tmp_path / "h.txt"
    path.write_text(text)
    H = load_hypergraph(path)
    out = tmp_path / "out.txt"
    store_hypergraph(H, out)
    assert out.read_text() == text


def test_graph_file_round_trip(tmp_path):
    G = Graph(4, ((0, 1), (2, 3), (1, 2)))
    store_graph(G, tmp_path / "g.txt")
    assert load_graph(tmp_path / "g.txt") == G


@given(hypergraphs())
def test_text_round_trip(H):
    assert parse_hypergraph(format_hypergraph(H)) == H
    assert format_hypergraph(parse_hypergraph(format_hypergraph(H))) == format_hypergraph(H)


@given(hypergraphs())
def test_json_round_trip(H):
    data = json.loads(json.dumps(hypergraph_to_json(H)))
    assert set(data) == {"n", "edges"}
    assert hypergraph_from_json(data) == H


def test_graph_json_round_trip():
    G = Graph(3, ((0, 2),))
    assert graph_from_json(graph_to_json(G)) == G
    assert format_graph(G) == "n=3\n0 2\n"
