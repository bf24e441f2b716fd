"""Edge containers shared by both generators."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

BACKGROUND = -1


def edge_keys(u, v, n: int) -> np.ndarray:
    """Canonical int64 key ``min*n + max`` of each unordered pair."""
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    return np.minimum(u, v) * n + np.maximum(u, v)


@dataclass
class EdgeList:
    """Simple undirected graph on vertices ``0..n-1``.

    ``source[e]`` is the community whose cluster graph produced edge ``e``,
    or :data:`BACKGROUND`.
    """

    n: int
    u: np.ndarray
    v: np.ndarray
    source: np.ndarray

    def __len__(self) -> int:
        return len(self.u)

    @classmethod
    def concat(cls, n: int, parts) -> "EdgeList":
        """Join ``(u, v, source)`` triples; ``source`` may be a scalar tag."""
        us, vs, tags = [np.empty(0, dtype=np.int64)], [np.empty(0, dtype=np.int64)], [np.empty(0, dtype=np.int64)]
        for u, v, src in parts:
            us.append(np.asarray(u, dtype=np.int64))
            vs.append(np.asarray(v, dtype=np.int64))
            tags.append(np.broadcast_to(np.asarray(src, dtype=np.int64), (len(us[-1]),)))
        return cls(n, np.concatenate(us), np.concatenate(vs), np.concatenate(tags))

    def keys(self) -> np.ndarray:
        return edge_keys(self.u, self.v, self.n)

    def degrees(self) -> np.ndarray:
        return np.bincount(self.u, minlength=self.n) + np.bincount(self.v, minlength=self.n)

    def canonical(self) -> np.ndarray:
        """``(m, 2)`` array with ``u < v`` per row, rows sorted."""
        a = np.minimum(self.u, self.v)
        b = np.maximum(self.u, self.v)
        order = np.lexsort((b, a))
        return np.column_stack((a[order], b[order]))

    def count_loops(self) -> int:
        return int(np.count_nonzero(self.u == self.v))

    def count_duplicates(self) -> int:
        keys = self.keys()
        return int(len(keys) - len(np.unique(keys)))

    def is_simple(self) -> bool:
        return self.count_loops() == 0 and self.count_duplicates() == 0

