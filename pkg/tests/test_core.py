import io

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hypercube_ids.core import (
    DimensionError,
    SetFormatError,
    VertexSet,
    dumps,
    hamming_distance,
    loads,
    neighbors,
    parity,
    read_set,
    write_set,
)


@pytest.mark.parametrize("u, v, expected", [
    ("000", "111", 3),
    ("0110110", "0110110", 0),
    # members 13 and 8 of the S_7 construction
    ("0110110", "0011100", 3),
])
def test_hamming_examples(u, v, expected):
    assert hamming_distance(u, v) == expected
    assert hamming_distance(int(u, 2), int(v, 2), len(u)) == expected


def test_hamming_dimension_mismatch():
    with pytest.raises(DimensionError):
        hamming_distance("000", "0000")
    with pytest.raises(DimensionError):
        hamming_distance(8, 1, 3)
    with pytest.raises(DimensionError):
        hamming_distance("0000", 1, 3)


words = st.integers(1, 16).flatmap(
    lambda n: st.tuples(st.just(n), *[st.integers(0, 2 ** n - 1)] * 3)
)


@given(words)
def test_hamming_is_a_metric(args):
    n, u, v, w = args
    d = lambda a, b: hamming_distance(a, b, n)  # noqa: E731
    assert d(u, w) <= d(u, v) + d(v, w)
    assert d(u, v) == d(v, u)
    assert (d(u, v) == 0) == (u == v)


@pytest.mark.parametrize("v, n, expected", [
    ("000", 3, ["001", "010", "100"]),
    ("111", 3, ["110", "101", "011"]),
    ("0", 1, ["1"]),
])
def test_neighbors_examples(v, n, expected):
    assert neighbors(v, n) == [int(e, 2) for e in expected]


@given(st.integers(1, 62).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2 ** n - 1))))
def test_neighbors_properties(args):
    n, v = args
    nb = neighbors(v, n)
    assert len(nb) == n
    assert v not in nb
    assert all(hamming_distance(v, w, n) == 1 for w in nb)
    assert len(set(nb)) == n


def test_neighbors_rejects_bad_dimension():
    with pytest.raises(DimensionError):
        neighbors(0, 0)
    with pytest.raises(DimensionError):
        neighbors(0, 63)
    with pytest.raises(DimensionError):
        neighbors(8, 3)


@pytest.mark.parametrize("v, expected", [("110", 0), ("001", 1), ("000", 0), ("111", 1)])
def test_parity_examples(v, expected):
    assert parity(v) == expected
    assert parity(int(v, 2)) == expected


def test_read_example():
    s = loads("n=3\n000\n111\n")
    assert s == VertexSet(3, ["000", "111"])
    assert s.to_strings() == ["000", "111"]


def test_write_smallest():
    assert dumps(VertexSet(1, [0])) == "n=1\n0\n"


def test_write_is_msb_first():
    assert dumps(VertexSet(4, [0b0001, 0b1000])) == "n=4\n0001\n1000\n"


def test_comments_are_skipped():
    assert loads("# made by hand\n# second\nn=2\n00\n11\n") == VertexSet(2, [0, 3])


def test_binary_streams():
    s = VertexSet(5, [0b10101, 0b00011])
    buf = io.BytesIO()
    write_set(s, buf)
    buf.seek(0)
    assert read_set(buf) == s


@pytest.mark.parametrize("text, lineno", [
    ("n=3\n00\n", 2),              # wrong length
    ("", 1),                       # no header
    ("# only a comment\n", 2),     # no header
    ("000\n111\n", 1),             # no header
    ("n=3\n000\n\n111\n", 3),      # blank line
    ("n=3\n000\n012\n", 3),        # bad character
    ("n=3\n000\n111\n000\n", 4),   # duplicate
    ("n=3\n000\n111", 3),          # no trailing newline
    ("n=x\n0\n", 1),
    ("n=63\n", 1),
    ("n = 3\n000\n", 1),
])
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(SetFormatError) as info:
        loads(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


def test_header_only_is_an_empty_set():
    s = loads("n=4\n")
    assert len(s) == 0 and s.dimension == 4


sets = st.integers(1, 62).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.integers(0, 2 ** n - 1), unique=True, max_size=40),
    )
)


@given(sets)
def test_round_trip(args):
    n, members = args
    s = VertexSet(n, members)
    text = dumps(s)
    back = loads(text)
    assert back == s
    assert list(back) == members          # order preserved
    assert dumps(back) == text


def test_round_trip_large_fast_path():
    rng = np.random.default_rng(7)
    members = rng.choice(2 ** 22, size=300_000, replace=False).astype(np.uint64)
    s = VertexSet(22, members)
    assert loads(dumps(s)) == s


def test_vertex_set_validation():
    with pytest.raises(ValueError):
        VertexSet(3, [1, 1])
    with pytest.raises(DimensionError):
        VertexSet(3, [8])
    with pytest.raises(DimensionError):
        VertexSet(3, ["0000"])
    with pytest.raises(DimensionError):
        VertexSet(0, [])
    with pytest.raises(DimensionError):
        VertexSet(63, [])
    s = VertexSet(3, ["101", 2])
    assert list(s) == [5, 2]
    assert "101" in s and 2 in s and 7 not in s and "1111" not in s
    with pytest.raises(ValueError):
        s.members[0] = 1  # read-only


def test_max_dimension_words():
    top = (1 << 62) - 1
    s = VertexSet(62, [0, top])
    assert loads(dumps(s)) == s
    assert dumps(s).splitlines()[2] == "1" * 62
