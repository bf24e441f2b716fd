"""Plain-text artifact formats.

All files use 1-based vertex and community ids and end every line with a
newline:

* degrees / community sizes: one integer per line;
* partition: ``vertex<TAB>community``, vertices ascending;
* edge list: ``u<TAB>v`` with ``u < v``, rows sorted.
"""

from __future__ import annotations

import contextlib
import os

import numpy as np

from .assignment import Assignment
from .edgeset import BACKGROUND, EdgeList
from .errors import ParseError


@contextlib.contextmanager
def _open(target, mode):
    if hasattr(target, "write") or hasattr(target, "read"):
        yield target
    else:
        with open(target, mode, newline="\n") as fh:
            yield fh


def _name(target) -> str:
    if isinstance(target, (str, os.PathLike)):
        return os.fspath(target)
    return getattr(target, "name", "<stream>")


def _write_rows(fh, rows: np.ndarray, chunk: int = 1 << 18) -> None:
    fmt = "\t".join(["%d"] * rows.shape[1]) + "\n"
    for start in range(0, len(rows), chunk):
        block = rows[start : start + chunk]
        fh.write("".join(fmt % tuple(r) for r in block.tolist()))


def write_int_sequence(values, target) -> int:
    arr = np.asarray(values, dtype=np.int64).reshape(-1, 1)
    with _open(target, "w") as fh:
        _write_rows(fh, arr)
    return len(arr)


def read_int_sequence(source) -> np.ndarray:
    out = []
    with _open(source, "r") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                continue
            try:
                out.append(int(text))
            except ValueError:
                raise ParseError(f"expected an integer, got {text!r}", _name(source), lineno) from None
    return np.asarray(out, dtype=np.int64)


def write_edge_list(edges: EdgeList, target) -> int:
    """Write canonical sorted rows; returns the number of lines."""
    rows = edges.canonical() + 1
    with _open(target, "w") as fh:
        _write_rows(fh, rows)
    return len(rows)


def read_edge_list(source, n=None) -> EdgeList:
    """Read ``u v`` lines (any whitespace) into an :class:`EdgeList` of 0-based ids."""
    us, vs = [], []
    with _open(source, "r") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = line.split()
            if not parts or parts[0].startswith("#"):
                continue
            if len(parts) < 2:
                raise ParseError("expected two vertex ids", _name(source), lineno)
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"non-integer vertex id in {line.strip()!r}", _name(source), lineno) from None
            if a < 1 or b < 1 or (n is not None and (a > n or b > n)):
                raise ParseError(f"vertex id out of range in {line.strip()!r}", _name(source), lineno)
            us.append(a - 1)
            vs.append(b - 1)
    u = np.asarray(us, dtype=np.int64)
    v = np.asarray(vs, dtype=np.int64)
    if n is None:
        n = int(max(u.max(initial=-1), v.max(initial=-1))) + 1
    return EdgeList(n, u, v, np.full(len(u), BACKGROUND, dtype=np.int64))


def write_partition(assignment: Assignment, target) -> int:
    n = assignment.n
    rows = np.column_stack((np.arange(1, n + 1), assignment.community_of + 1))
    with _open(target, "w") as fh:
        _write_rows(fh, rows)
    return n


def read_partition(source, weights=None) -> Assignment:
    """Read ``vertex community`` lines covering vertices ``1..n`` exactly once.

    Volumes come from ``weights`` when given, otherwise every vertex counts 1.
    """
    seen: dict[int, int] = {}
    first_line: dict[int, int] = {}
    name = _name(source)
    with _open(source, "r") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = line.split()
            if not parts or parts[0].startswith("#"):
                continue
            if len(parts) != 2:
                raise ParseError("expected 'vertex<TAB>community'", name, lineno)
            try:
                vertex, comm = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"non-integer token in {line.strip()!r}", name, lineno) from None
            if vertex < 1 or comm < 1:
                raise ParseError("vertex and community ids are 1-based", name, lineno)
            if vertex in seen:
                raise ParseError(f"vertex {vertex} already assigned on line {first_line[vertex]}", name, lineno)
            seen[vertex] = comm
            first_line[vertex] = lineno
    n = len(seen)
    if n and max(seen) != n:
        missing = next(i for i in range(1, n + 1) if i not in seen)
        raise ParseError(f"vertex ids are not contiguous: vertex {missing} is missing", name)
    community_of = np.empty(n, dtype=np.int64)
    for vertex, comm in seen.items():
        community_of[vertex - 1] = comm - 1
    k = int(community_of.max()) + 1 if n else 0
    if weights is not None:
        weights = np.asarray(weights)
        if len(weights) != n:
            raise ParseError(f"{len(weights)} weights given for {n} vertices", name)
    return Assignment(community_of=community_of, num_communities=k, weights=weights)
