import pytest

from orcycles.errors import AntiparallelPair, ParseError
from orcycles.graph import directed_cycle, transitive_tournament
from orcycles.io import format_edge_list, parse_edge_list, read_edge_list, to_dot, write_edge_list


def test_format_sorted():
    g = directed_cycle(3)
    assert format_edge_list(g) == "3 3\n0 1\n1 2\n2 0\n"


def test_round_trip(tmp_path):
    g = transitive_tournament(6)
    path = tmp_path / "g.txt"
    write_edge_list(g, path)
    assert read_edge_list(path) == g
    assert b"\r" not in path.read_bytes()


@pytest.mark.parametrize("text", ["", "3\n", "2 1\n0 1\n1 0\n", "2 1\nx y\n", "2 2\n0 1\n"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_parse_enforces_invariants():
    with pytest.raises(AntiparallelPair):
        parse_edge_list("2 2\n0 1\n1 0\n")


def test_dot():
    assert to_dot(directed_cycle(3)) == "digraph {\n  0 -> 1;\n  1 -> 2;\n  2 -> 0;\n}\n"
