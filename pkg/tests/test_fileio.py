import io

import numpy as np
import pytest

from abcdgen import Assignment, EdgeList, ParseError
from abcdgen import fileio


def edges(n, pairs):
    u = np.array([p[0] for p in pairs], dtype=np.int64)
    v = np.array([p[1] for p in pairs], dtype=np.int64)
    return EdgeList(n, u, v, np.full(len(u), -1))


def test_edge_canonicalized(tmp_path):
    path = tmp_path / "e.tsv"
    assert fileio.write_edge_list(edges(2, [(1, 0)]), path) == 1
    assert path.read_text() == "1\t2\n"


def test_empty_edge_list(tmp_path):
    path = tmp_path / "e.tsv"
    assert fileio.write_edge_list(edges(3, []), path) == 0
    assert path.read_text() == ""


def test_edges_sorted(tmp_path):
    path = tmp_path / "e.tsv"
    fileio.write_edge_list(edges(3, [(2, 1), (0, 2), (1, 0)]), path)
    assert path.read_text() == "1\t2\n1\t3\n2\t3\n"


def test_read_edges_whitespace_and_comments():
    text = "# header\n1 2\n\n2\t3\n"
    e = fileio.read_edge_list(io.StringIO(text))
    assert e.canonical().tolist() == [[0, 1], [1, 2]]


@pytest.mark.parametrize("line", ["1\n", "1 x\n", "0 2\n"])
def test_bad_edge_lines(line):
    with pytest.raises(ParseError, match=":2:"):
        fileio.read_edge_list(io.StringIO("1 2\n" + line))


def test_partition_example():
    a = fileio.read_partition(io.StringIO("1 1\n2 1\n3 2\n"))
    assert [m.tolist() for m in a.members] == [[0, 1], [2]]


@pytest.mark.parametrize(
    "text, where",
    [
        ("1 0\n", ":1:"),
        ("1 1\n1 2\n", ":2:"),
        ("1 1\n2 a\n", ":2:"),
    ],
)
def test_partition_errors(text, where):
    with pytest.raises(ParseError, match=where):
        fileio.read_partition(io.StringIO(text))


def test_partition_gap():
    with pytest.raises(ParseError, match="vertex 2 is missing"):
        fileio.read_partition(io.StringIO("1 1\n3 1\n"))


def test_partition_roundtrip_million(tmp_path):
    rng = np.random.default_rng(0)
    n = 1_000_000
    labels = rng.integers(0, 500, n)
    labels[:500] = np.arange(500)
    path = tmp_path / "p.tsv"
    assert fileio.write_partition(Assignment(labels, 500), path) == n
    back = fileio.read_partition(path)
    assert np.array_equal(back.community_of, labels)
    fileio.write_partition(back, tmp_path / "q.tsv")
    assert (tmp_path / "q.tsv").read_bytes() == path.read_bytes()


def test_edge_roundtrip(tmp_path):
    rng = np.random.default_rng(1)
    n = 5000
    keys = np.unique(rng.integers(0, n * n, 20_000))
    u, v = keys // n, keys % n
    keep = u != v
    original = edges(n, list(zip(u[keep], v[keep])))
    path = tmp_path / "e.tsv"
    fileio.write_edge_list(original, path)
    back = fileio.read_edge_list(path, n=n)
    assert np.array_equal(back.canonical(), original.canonical())


def test_int_sequence_roundtrip(tmp_path):
    path = tmp_path / "d.txt"
    fileio.write_int_sequence([5, 3, 3, 1], path)
    assert path.read_text() == "5\n3\n3\n1\n"
    assert fileio.read_int_sequence(path).tolist() == [5, 3, 3, 1]
