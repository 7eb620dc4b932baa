"""Exhaustive (p, q)-coloring verification and the lower-bound calculators.

The compiled kernel walks p-subsets in lexicographic order, grouped by their
two smallest vertices. Each group reports its own minimum and the first
subset (in lex order) falling below the threshold; groups are then reduced
in lex order, so the report does not depend on how groups were scheduled.
"""

from __future__ import annotations

import json
import math
import os
import time
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import combinations
from pathlib import Path

import numba
import numpy as np
from numba import njit, prange

from .coloring import EdgeColoring

# Probing the default layer warns on old TBB installs; OpenMP is what we want anyway.
if "NUMBA_THREADING_LAYER" not in os.environ:
    numba.config.THREADING_LAYER = "omp"


@dataclass
class VerifyReport:
    n: int
    p: int
    q_min: int
    cliques_checked: int
    min_colors_seen: int
    witness: tuple[int, ...] | None
    distinct_colors_total: int
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.min_colors_seen >= self.q_min

    def summary(self) -> dict:
        """Machine-readable summary without the wall-clock field (stable across runs)."""
        d = asdict(self)
        d.pop("elapsed")
        d["witness"] = list(self.witness) if self.witness is not None else None
        d["passed"] = self.passed
        return d

    def write(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.summary(), indent=2, sort_keys=True) + "\n")

    def __str__(self) -> str:
        if self.passed:
            head = f"PASS: every K_{self.p} spans >= {self.q_min} colors"
        else:
            head = f"FAIL: the fewest colors on a K_{self.p} is {self.min_colors_seen} (< {self.q_min})"
        lines = [
            head,
            f"  n={self.n} p={self.p} cliques={self.cliques_checked} "
            f"min_colors={self.min_colors_seen} colors_total={self.distinct_colors_total}",
        ]
        if self.witness is not None:
            lines.append(f"  witness={list(self.witness)} (first failing subset in lex order)")
        lines.append(f"  elapsed={self.elapsed:.2f}s")
        return "\n".join(lines)


@njit(cache=True)
def _scan_group(mat, a, b, p, q_min, chosen, cols, ncols, out_witness):
    """Every p-subset whose two smallest vertices are a < b.

    Returns (count, min_distinct, found); writes the first lex subset with
    fewer than q_min colors into out_witness when found.
    """
    n = mat.shape[0]
    chosen[0] = a
    chosen[1] = b
    cols[0] = mat[a, b]
    ncols[1] = 1
    count = 0
    best = 1 << 30
    found = False
    if p == 2:
        if 1 < q_min:
            out_witness[0] = a
            out_witness[1] = b
            found = True
        return 1, 1, found

    # odometer over depth d = 2..p-1
    d = 2
    chosen[2] = b
    while d >= 2:
        chosen[d] += 1
        v = chosen[d]
        if v > n - (p - d):
            d -= 1
            continue
        # push v: merge its edges to chosen[0..d-1] into the distinct set
        k = ncols[d - 1]
        for t in range(d):
            c = mat[chosen[t], v]
            seen = False
            for s in range(k):
                if cols[s] == c:
                    seen = True
                    break
            if not seen:
                cols[k] = c
                k += 1
        ncols[d] = k
        if d == p - 1:
            count += 1
            if k < best:
                best = k
            if k < q_min and not found:
                found = True
                for t in range(p):
                    out_witness[t] = chosen[t]
        else:
            d += 1
            chosen[d] = v
    return count, best, found


@njit(parallel=True, cache=True)
def _verify_kernel(mat, p, q_min, pairs):
    g = pairs.shape[0]
    counts = np.zeros(g, dtype=np.int64)
    mins = np.zeros(g, dtype=np.int64)
    found = np.zeros(g, dtype=np.bool_)
    witnesses = np.zeros((g, p), dtype=np.int64)
    m = p * (p - 1) // 2
    for idx in prange(g):
        chosen = np.zeros(p, dtype=np.int64)
        cols = np.zeros(m, dtype=np.int64)
        ncols = np.zeros(p, dtype=np.int64)
        c, b, f = _scan_group(mat, pairs[idx, 0], pairs[idx, 1], p, q_min,
                              chosen, cols, ncols, witnesses[idx])
        counts[idx] = c
        mins[idx] = b
        found[idx] = f
    return counts, mins, found, witnesses


def _leading_pairs(n: int, p: int) -> np.ndarray:
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if n - 1 - b >= p - 2]
    return np.asarray(pairs, dtype=np.int64).reshape(-1, 2)


def verify(coloring: EdgeColoring, p: int = 5, q_min: int = 6, *,
           threads: int | None = None, engine: str = "numba") -> VerifyReport:
    """Check that every p-subset of ``coloring`` spans at least ``q_min`` colors.

    ``engine="python"`` runs a plain itertools loop; it is the slow reference
    the compiled path is tested against.
    """
    n = coloring.n
    if p > n:
        raise ValueError(f"p={p} exceeds n={n}")
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    t0 = time.perf_counter()
    if engine == "python":
        count, best, witness = _verify_python(coloring, p, q_min)
    elif engine == "numba":
        count, best, witness = _verify_numba(coloring, p, q_min, threads)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return VerifyReport(
        n=n, p=p, q_min=q_min, cliques_checked=count, min_colors_seen=best,
        witness=witness, distinct_colors_total=coloring.num_colors(),
        elapsed=time.perf_counter() - t0,
    )


def _verify_numba(coloring, p, q_min, threads):
    mat = np.ascontiguousarray(coloring.matrix, dtype=np.int64)
    pairs = _leading_pairs(coloring.n, p)
    prev = numba.get_num_threads()
    if threads is not None:
        numba.set_num_threads(max(1, min(threads, numba.config.NUMBA_NUM_THREADS)))
    try:
        counts, mins, found, witnesses = _verify_kernel(mat, p, q_min, pairs)
    finally:
        numba.set_num_threads(prev)
    hit = np.flatnonzero(found)
    witness = tuple(int(x) for x in witnesses[hit[0]]) if hit.size else None
    return int(counts.sum()), int(mins.min()), witness


def _verify_python(coloring, p, q_min):
    rows = coloring.rows()
    count, best, witness = 0, 1 << 30, None
    for sub in combinations(range(coloring.n), p):
        k = len({rows[u][v] for u, v in combinations(sub, 2)})
        count += 1
        best = min(best, k)
        if k < q_min and witness is None:
            witness = sub
    return count, best, witness


def default_threads() -> int:
    return os.cpu_count() or 1


def _radicand_56(n: int) -> Fraction:
    return Fraction(5 * n, 6) - Fraction(95, 144)


def lower_bound_56(n: int) -> tuple[float, int]:
    """sqrt(5n/6 - 95/144) and its exact integer ceiling; defined for n >= 5."""
    if n < 5:
        # the radicand stays positive down to n = 1, but a K_5 needs five vertices
        raise ValueError(f"the (5,6) bound needs n >= 5, got {n}")
    r = _radicand_56(n)
    if r < 0:
        raise ValueError(f"5n/6 - 95/144 is negative for n={n}")
    # r = (120 n - 95) / 144, so ceil(sqrt r) is the least c with 144 c^2 >= 120 n - 95
    num = 120 * n - 95
    c = math.isqrt(num // 144)
    while 144 * c * c < num:
        c += 1
    return math.sqrt(num) / 12, c


def recursion_bound(n: int, t: int, p: int | None = None, q: int | None = None) -> int:
    """Order ceil((n-1)/t) of the monochromatic-neighbourhood subproblem.

    ``p`` and ``q`` name the (p, q) instance the bound is read for; the order
    itself depends only on n and t.
    """
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    return -(-(n - 1) // t)
