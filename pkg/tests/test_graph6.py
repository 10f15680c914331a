from pathlib import Path

import networkx as nx
import pytest
from hypothesis import given

from tmconn import graph6
from tmconn.graph import complete_graph, empty_graph

from .conftest import graphs

CORPUS = Path(__file__).parent / "data" / "corpus.g6"


def test_k2():
    assert graph6.decode("A_") == complete_graph(2)
    assert graph6.encode(complete_graph(2)) == "A_"


def test_two_isolated_vertices():
    g = graph6.decode("A?")
    assert g.n == 2 and g.m == 0


def test_header_and_newline_accepted():
    assert graph6.decode(">>graph6<<A_\n") == complete_graph(2)


def test_long_size_field():
    g = complete_graph(64)
    text = graph6.encode(g)
    assert text.startswith("~?@?")
    assert graph6.decode(text) == g
    assert graph6.decode(graph6.encode(empty_graph(63))) == empty_graph(63)


def test_corpus_round_trip():
    lines = CORPUS.read_text().splitlines()
    assert len(lines) == 1000
    for line in lines:
        assert graph6.encode(graph6.decode(line)) == line


def test_corpus_agrees_with_networkx():
    for line in CORPUS.read_text().splitlines()[::7]:
        ref = nx.from_graph6_bytes(line.encode())
        g = graph6.decode(line)
        assert g.n == ref.number_of_nodes()
        assert set(g.edges) == {(min(u, v), max(u, v)) for u, v in ref.edges()}


@given(graphs(max_n=20))
def test_round_trip_and_reference(g):
    text = graph6.encode(g)
    assert graph6.decode(text) == g
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges)
    assert nx.to_graph6_bytes(ref, header=False).decode().strip() == text


@pytest.mark.parametrize(
    "text, exc",
    [
        ("", graph6.Graph6LengthError),
        ("C", graph6.Graph6LengthError),
        ("~?", graph6.Graph6LengthError),
        ("A_ x", graph6.Graph6ByteError),
        ("A\x7f", graph6.Graph6ByteError),
        ("A__", graph6.Graph6TrailingError),
        ("A`", graph6.Graph6PaddingError),
        ("~??~", graph6.Graph6LengthError),
    ],
)
def test_parse_errors_distinct(text, exc):
    with pytest.raises(exc):
        graph6.decode(text)


def test_errors_are_value_errors():
    assert issubclass(graph6.Graph6Error, ValueError)
    kinds = {graph6.Graph6LengthError, graph6.Graph6ByteError, graph6.Graph6TrailingError}
    assert len(kinds) == 3
