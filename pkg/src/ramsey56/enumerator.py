"""Edge-colorings of small complete graphs, up to color-isomorphism.

Level k is built from level k-1 by adding a vertex and coloring its k-1 new
edges in every way from [m]. Extensions containing a forbidden configuration
are dropped, survivors are deduplicated by canonical key.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from pathlib import Path
from typing import Sequence

from .coloring import EdgeColoring, lex_edges
from .patterns import RESIDUAL, ForbiddenPattern, Scanner

MAX_N = 5

CanonicalKey = tuple[int, ...]


@lru_cache(maxsize=None)
def _edge_index(k: int) -> dict[tuple[int, int], int]:
    return {e: i for i, e in enumerate(lex_edges(k))}


@lru_cache(maxsize=None)
def _permuted_positions(k: int) -> tuple[tuple[int, ...], ...]:
    """For each vertex permutation, where each lex edge reads its color from."""
    idx = _edge_index(k)
    out = []
    for p in permutations(range(k)):
        out.append(tuple(idx[tuple(sorted((p[u], p[v])))] for u, v in lex_edges(k)))
    return tuple(out)


def _relabel(seq: Sequence[int]) -> tuple[int, ...]:
    first: dict[int, int] = {}
    return tuple(first.setdefault(c, len(first) + 1) for c in seq)


@lru_cache(maxsize=1 << 16)
def _canonical(k: int, labels: tuple[int, ...]) -> CanonicalKey:
    return min(_relabel([labels[i] for i in pos]) for pos in _permuted_positions(k))


def _infer_k(num_edges: int) -> int:
    k = 1
    while k * (k - 1) // 2 < num_edges:
        k += 1
    if k * (k - 1) // 2 != num_edges:
        raise ValueError(f"{num_edges} is not the edge count of a complete graph")
    return k


def canonical_key(coloring: EdgeColoring | Sequence[int]) -> CanonicalKey:
    """Lexicographically least first-occurrence relabeling over all vertex permutations.

    Accepts an :class:`EdgeColoring` or a color sequence in lexicographic edge order.
    """
    seq = coloring.edge_colors() if isinstance(coloring, EdgeColoring) else tuple(coloring)
    k = _infer_k(len(seq))
    if k > MAX_N:
        raise ValueError(f"canonical keys are computed for k <= {MAX_N}, got {k}")
    return _canonical(k, _relabel(seq))


@dataclass(frozen=True)
class SmallColoring:
    k: int
    key: CanonicalKey
    residual: tuple[str, ...] = ()

    def coloring(self) -> EdgeColoring:
        return EdgeColoring.from_edge_colors(self.k, self.key)

    @property
    def num_colors(self) -> int:
        return max(self.key, default=0)

    def line(self) -> str:
        s = " ".join(map(str, self.key))
        return f"{s} | {','.join(self.residual) if self.residual else '-'}"


def enumerate_colorings(n: int, m: int, forbidden: Sequence[ForbiddenPattern] = (), *,
                        annotate: Sequence[ForbiddenPattern] = ()) -> list[SmallColoring]:
    """All colorings of K_n with colors from [m] that avoid ``forbidden``, one per class.

    ``annotate`` patterns are not filtered on; each output records which of
    them it contains. Output is sorted by canonical key.
    """
    if not 2 <= n <= MAX_N:
        raise ValueError(f"n must be in 2..{MAX_N}, got {n}")
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    scanner = Scanner(forbidden)
    level: list[tuple[int, ...]] = [(1,)]  # L_2: one edge, color 1
    for k in range(3, n + 1):
        idx = _edge_index(k)
        old = lex_edges(k - 1)
        new_v = k - 1
        seen: set[CanonicalKey] = set()
        nxt = []
        for h in level:
            base = dict(zip(old, h))
            for f in product(range(1, m + 1), repeat=k - 1):
                cols = dict(base)
                for i, c in enumerate(f):
                    cols[(i, new_v)] = c
                seq = tuple(cols[e] for e in sorted(cols, key=idx.__getitem__))
                labels = _relabel(seq)
                if scanner.scan_key((k, tuple(x - 1 for x in labels))) is not None:
                    continue
                key = _canonical(k, labels)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append(key)
        level = nxt
    annotator = Scanner(annotate)
    out = [SmallColoring(n, key, tuple(annotator.contained(EdgeColoring.from_edge_colors(n, key))))
           for key in level]
    return sorted(out, key=lambda s: s.key)


def brute_force_classes(n: int, m: int) -> set[CanonicalKey]:
    """Canonical keys of all m^C(n,2) colorings of K_n, without incremental extension."""
    return {canonical_key(seq) for seq in product(range(1, m + 1), repeat=n * (n - 1) // 2)}


def enumerate_residual(n: int = 5, m: int = 5, patterns: Sequence[ForbiddenPattern] | None = None,
                       exclude: Sequence[str] = RESIDUAL) -> list[SmallColoring]:
    """The case reduction run: residual configurations are left out of the filter and annotated instead."""
    from .patterns import default_patterns, select

    patterns = default_patterns() if patterns is None else list(patterns)
    forbidden = select(patterns, exclude=exclude)
    residual = [p for p in patterns if p.name in set(exclude)]
    return enumerate_colorings(n, m, forbidden, annotate=residual)


def output_lines(colorings: Sequence[SmallColoring], n: int, m: int, excluded: Sequence[str] = ()) -> list[str]:
    head = [f"# n={n} m={m} colorings={len(colorings)} excluded={','.join(excluded) or '-'}",
            "# " + " ".join(f"{u}{v}" for u, v in combinations(range(n), 2)) + " | residual"]
    return head + [c.line() for c in colorings]


def write_output(colorings: Sequence[SmallColoring], path: str | Path, n: int, m: int,
                 excluded: Sequence[str] = ()) -> None:
    Path(path).write_text("\n".join(output_lines(colorings, n, m, excluded)) + "\n")
