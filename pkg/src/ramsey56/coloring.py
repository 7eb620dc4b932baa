"""Edge colorings of complete graphs as dense symmetric id matrices."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np


def lex_edges(k: int) -> list[tuple[int, int]]:
    """Edges of K_k in lexicographic order: (0,1), (0,2), ..., (k-2,k-1)."""
    return list(combinations(range(k), 2))


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    """Coloring of K_n; ``matrix[u, v]`` is the color id of edge uv, -1 on the diagonal."""

    matrix: np.ndarray

    def __post_init__(self):
        m = self.matrix
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {m.shape}")
        if not np.array_equal(m, m.T):
            raise ValueError("color matrix is not symmetric")
        m.setflags(write=False)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, uv: tuple[int, int]) -> int:
        return int(self.matrix[uv])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EdgeColoring) and np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash(self.matrix.tobytes())

    @classmethod
    def from_edge_colors(cls, k: int, colors: Sequence[int]) -> "EdgeColoring":
        edges = lex_edges(k)
        if len(colors) != len(edges):
            raise ValueError(f"K_{k} has {len(edges)} edges, got {len(colors)} colors")
        m = np.full((k, k), -1, dtype=np.int32)
        for (u, v), c in zip(edges, colors):
            m[u, v] = m[v, u] = c
        return cls(m)

    @classmethod
    def from_function(cls, n: int, color: Callable[[int, int], Hashable]) -> "EdgeColoring":
        """Intern arbitrary hashable colors to dense ids by first appearance."""
        ids: dict[Hashable, int] = {}
        m = np.full((n, n), -1, dtype=np.int32)
        for u, v in combinations(range(n), 2):
            c = ids.setdefault(color(u, v), len(ids))
            m[u, v] = m[v, u] = c
        return cls(m)

    @classmethod
    def rainbow(cls, n: int) -> "EdgeColoring":
        return cls.from_edge_colors(n, range(n * (n - 1) // 2))

    @classmethod
    def monochromatic(cls, n: int) -> "EdgeColoring":
        return cls.from_edge_colors(n, [0] * (n * (n - 1) // 2))

    def edge_colors(self) -> tuple[int, ...]:
        """Colors along the lexicographic edge order."""
        iu = np.triu_indices(self.n, 1)
        return tuple(int(c) for c in self.matrix[iu])

    def num_colors(self) -> int:
        if self.n < 2:
            return 0
        return len(np.unique(self.matrix[np.triu_indices(self.n, 1)]))

    def restrict(self, vertices: Iterable[int]) -> "EdgeColoring":
        idx = np.asarray(list(vertices), dtype=np.intp)
        return EdgeColoring(self.matrix[np.ix_(idx, idx)].copy())

    def rows(self) -> list[list[int]]:
        return self.matrix.tolist()
