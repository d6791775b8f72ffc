"""File formats: parse errors carry line numbers, round trips are exact."""

import pytest

from matroid_cd.errors import MalformedInputError
from matroid_cd.io import (
    parse_graph_text,
    parse_input,
    parse_matrix_text,
    parse_text,
    serialize_matrix,
)
from matroid_cd.zoo import complete, s8

S8_TEXT = """\
4 8
10001110
01001111
00100011
00011001
1 2 3 4 5 6 7 8
"""


def test_parse_matrix_with_labels():
    m = parse_matrix_text(S8_TEXT)
    assert (m.size, m.rank) == (8, 4)
    assert m.labels == tuple(str(i) for i in range(1, 9))
    assert m.is_isomorphic(s8())


def test_parse_matrix_without_labels():
    m = parse_matrix_text("2 3\n101\n011\n")
    assert m.labels == ("e0", "e1", "e2")
    assert (m.size, m.rank) == (3, 2)


def test_parse_matrix_blank_lines_and_whitespace():
    m = parse_matrix_text("\n  2 2  \n\n10\n01\n\n")
    assert (m.size, m.rank) == (2, 2)


@pytest.mark.parametrize(
    "text,line",
    [
        ("", 1),
        ("x y\n10\n", 1),
        ("2 3\n101\n", 1),  # missing row reported against the header
        ("2 3\n10\n011\n", 2),
        ("2 3\n101\n012\n", 3),
        ("2 3\n101\n011\na b\n", 4),
        ("2 3\n101\n011\na b b\n", 4),
        ("2 3\n101\n011\na b c\nextra\n", 5),
    ],
)
def test_matrix_errors_carry_line_numbers(text, line):
    with pytest.raises(MalformedInputError) as err:
        parse_matrix_text(text)
    assert err.value.line == line


def test_parse_graph():
    m = parse_graph_text("graph\nu v\nv w\nw u\n")
    assert (m.size, m.rank) == (3, 2)
    assert len(m.circuits()) == 1


def test_graph_errors():
    with pytest.raises(MalformedInputError):
        parse_graph_text("2 2\n10\n01\n")
    with pytest.raises(MalformedInputError) as err:
        parse_graph_text("graph\nu v w\n")
    assert err.value.line == 2


def test_parse_text_dispatch():
    assert parse_text("graph\na b\nb c\nc a\n").size == 3
    assert parse_text(S8_TEXT).size == 8
    with pytest.raises(MalformedInputError):
        parse_text("neither format")


def test_parse_input_name_and_file(tmp_path):
    assert parse_input("s8").is_isomorphic(s8())
    p = tmp_path / "m.txt"
    p.write_text(S8_TEXT)
    assert parse_input(str(p)).is_isomorphic(s8())
    g = tmp_path / "g.txt"
    g.write_text("graph\n0 1\n1 2\n2 0\n")
    assert parse_input(f"graph:@{g}").size == 3
    with pytest.raises(MalformedInputError):
        parse_input("graph:@/no/such/file")


def test_serialize_round_trip():
    for m in (s8(), complete(4)):
        again = parse_text(serialize_matrix(m))
        assert again.labels == m.labels
        assert again.rep.rows == m.rep.rows
        assert again.rep.num_cols == m.rep.num_cols


def test_serialize_rejects_spacey_labels():
    from matroid_cd import BinaryMatroid, Gf2Matrix

    m = BinaryMatroid(Gf2Matrix.from_columns((1, 2), 2), ["a b", "c"])
    with pytest.raises(ValueError):
        serialize_matrix(m)
