from pathlib import Path

import pytest
from hypothesis import given

from groupmagic import graph as gr
from groupmagic.graphio import (
    GraphParseError,
    format_edge_list,
    parse_edge_list,
    parse_graph,
    read_edge_list,
    write_edge_list,
)

from helpers import graphs, is_isomorphic

DATA = Path(__file__).parent / "data"


def test_parse_edge_list_with_comments_and_blank_lines():
    G = parse_edge_list("# triangle\n\nn 3\n0 1\n1 2  \n# mid comment\n2 0\n1 0\n")
    assert G == gr.cycle(3)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("0 1\n", "expected 'n <count>'"),
        ("", "missing"),
        ("n 3\n0 1 2\n", "line 2"),
        ("n 3\n0 x\n", "'x' is not an integer"),
        ("n 2\n0 5\n", "outside"),
        ("n 2\n1 1\n", "self-loop"),
    ],
)
def test_parse_edge_list_errors(text, fragment):
    with pytest.raises(gr.GraphError, match=fragment):
        parse_edge_list(text)


@given(graphs(1, 8))
def test_edge_list_round_trip(G):
    assert parse_edge_list(format_edge_list(G)) == G


def test_file_round_trip(tmp_path):
    G = gr.complete_multipartite([1, 2, 3])
    out = tmp_path / "g.txt"
    write_edge_list(G, out)
    assert read_edge_list(out) == G


def test_twin_example_file():
    G = read_edge_list(DATA / "twin_example.txt")
    red = gr.twin_classes(G)
    assert red.multiplicities == [3, 1, 2, 2]
    assert red.classes == ((0, 2, 5), (1,), (3, 7), (4, 6))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("cycle:5", gr.cycle(5)),
        ("path:3", gr.path(3)),
        ("complete:4", gr.complete(4)),
        ("empty:2", gr.empty(2)),
        ("kpartite:1,2,2", gr.complete_multipartite([1, 2, 2])),
        ("CYCLE:4", gr.cycle(4)),
        (" tensor( cycle:3 , complete:2 ) ", gr.tensor(gr.cycle(3), gr.complete(2))),
        ("tensor(cycle:3,complete:2,path:2)", gr.tensor(gr.cycle(3), gr.complete(2), gr.path(2))),
        ("lex(path:2,empty:3)", gr.lexicographic(gr.path(2), gr.empty(3))),
        ("hjoin(cycle:4;empty:2,empty:3,empty:2,empty:2)",
         gr.h_join(gr.cycle(4), [gr.empty(2), gr.empty(3), gr.empty(2), gr.empty(2)])),
        ("corona(path:2;empty:2,empty:3)", gr.generalized_corona(gr.path(2), [gr.empty(2), gr.empty(3)])),
        ("inflate(cycle:4;1,0)", gr.inflate(gr.cycle(4), [1, 0])),
        ("embed(complete:3)", gr.embed_in_gvm(gr.complete(3))),
    ],
)
def test_parse_graph_expressions(text, expected):
    assert parse_graph(text) == expected


def test_parse_graph_nested_and_files():
    G = parse_graph("embed(tensor(cycle:3,complete:2))")
    assert G.n == 12
    assert is_isomorphic(parse_graph("tensor(cycle:3,complete:2)"), gr.cycle(6))
    assert parse_graph("twin_example.txt", base=DATA) == read_edge_list(DATA / "twin_example.txt")
    H = parse_graph(f"tensor({DATA / 'twin_example.txt'},complete:2)")
    assert H.n == 16


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("hjoin(cycle:4;empty:2", r"expected '\)'"),
        ("tensor(cycle:3)", "at least two"),
        ("lex(path:2,path:2,path:2)", "two graphs"),
        ("frobnicate(cycle:3)", "unknown operation"),
        ("nosuchfile.txt", "missing file"),
        ("cycle:4 extra", "trailing"),
        ("inflate(cycle:4;a)", "expected an integer"),
        ("hjoin(cycle:4;empty:2)", "needs 4 parts"),
        ("cycle:2", "n >= 3"),
        ("path:2,3", "exactly one"),
    ],
)
def test_parse_graph_errors(text, fragment):
    with pytest.raises(gr.GraphError, match=fragment):
        parse_graph(text)


def test_parse_errors_carry_position():
    with pytest.raises(GraphParseError) as info:
        parse_graph("tensor(cycle:3, complete:2")
    assert info.value.position == len("tensor(cycle:3, complete:2")
