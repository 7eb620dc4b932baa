"""Forbidden colored configurations on at most five vertices.

Three kinds of detector:

* ``class-pattern``: edge classes over labelled vertices. A coloring contains
  the pattern when some injective vertex map sends every class to a set of
  equally colored edges. Different classes may share a color unless listed in
  ``distinct_classes``.
* ``mono-odd-cycle``: some color class is not bipartite.
* ``color-cycle``: the auxiliary digraph on colors has a directed cycle
  through an Odd arc. An arc C_i -> C_j of parity k mod 2 exists when k >= 3
  distinct vertices v_1..v_k carry a C_i-colored path closed by a C_j edge.

Every detector depends only on which edges share a color, so
:class:`Scanner` memoizes results on that equality structure.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import combinations, permutations
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .coloring import EdgeColoring

KINDS = ("class-pattern", "mono-odd-cycle", "color-cycle")
TARGETS = ("phi", "chi", "product")
LABELS = "abcde"
MAX_K = 5

# configurations left for the hand analysis after the enumeration
RESIDUAL = ("fig5c", "fig5d", "fig5e", "fig5f", "fig5g")

Edge = tuple[int, int]


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class ForbiddenPattern:
    name: str
    kind: str
    k: int = 0
    classes: tuple[tuple[Edge, ...], ...] = ()
    distinct_classes: tuple[tuple[int, int], ...] = ()
    target: str = "product"
    description: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise PatternError(f"{self.name}: unknown kind {self.kind!r}")
        if self.target not in TARGETS:
            raise PatternError(f"{self.name}: unknown target {self.target!r}")
        if self.kind != "class-pattern":
            return
        if not 2 <= self.k <= MAX_K:
            raise PatternError(f"{self.name}: k={self.k} outside 2..{MAX_K}")
        if not self.classes or any(not cl for cl in self.classes):
            raise PatternError(f"{self.name}: empty class")
        seen: set[Edge] = set()
        used: set[int] = set()
        for cl in self.classes:
            for u, v in cl:
                if not (0 <= u < v < self.k):
                    raise PatternError(f"{self.name}: bad edge {(u, v)} for k={self.k}")
                if (u, v) in seen:
                    raise PatternError(f"{self.name}: edge {(u, v)} in two classes")
                seen.add((u, v))
                used.update((u, v))
        if used != set(range(self.k)):
            raise PatternError(f"{self.name}: k={self.k} but edges touch {len(used)} vertices")
        for i, j in self.distinct_classes:
            if not (0 <= i < len(self.classes) and 0 <= j < len(self.classes)) or i == j:
                raise PatternError(f"{self.name}: bad distinct pair {(i, j)}")

    @classmethod
    def from_dict(cls, d: dict) -> "ForbiddenPattern":
        kind = d.get("kind", "class-pattern")
        classes = tuple(tuple(_parse_edge(e) for e in cl) for cl in d.get("classes", ()))
        return cls(
            name=d["name"],
            kind=kind,
            k=d.get("k", 0),
            classes=tuple(tuple(sorted(cl)) for cl in classes),
            distinct_classes=tuple(tuple(p) for p in d.get("distinct_classes", ())),
            target=d.get("target", "product"),
            description=d.get("description", ""),
        )

    def to_dict(self) -> dict:
        d = {"name": self.name, "kind": self.kind, "target": self.target}
        if self.description:
            d["description"] = self.description
        if self.kind == "class-pattern":
            d["k"] = self.k
            d["classes"] = [[LABELS[u] + LABELS[v] for u, v in cl] for cl in self.classes]
            if self.distinct_classes:
                d["distinct_classes"] = [list(p) for p in self.distinct_classes]
        return d


def _parse_edge(e) -> Edge:
    if isinstance(e, str):
        if len(e) != 2 or any(ch not in LABELS for ch in e):
            raise PatternError(f"bad edge label {e!r}")
        u, v = LABELS.index(e[0]), LABELS.index(e[1])
    else:
        u, v = e
    if u == v:
        raise PatternError(f"loop {e!r}")
    return (u, v) if u < v else (v, u)


def load_patterns(path: str | Path | None = None) -> list[ForbiddenPattern]:
    """Read a pattern file; with no path, the shipped default set."""
    if path is None:
        text = resources.files("ramsey56").joinpath("data/patterns.json").read_text()
    else:
        text = Path(path).read_text()
    data = json.loads(text)
    items = data["patterns"] if isinstance(data, dict) else data
    pats = [ForbiddenPattern.from_dict(d) for d in items]
    names = [p.name for p in pats]
    if len(set(names)) != len(names):
        raise PatternError("duplicate pattern names")
    return pats


def default_patterns() -> list[ForbiddenPattern]:
    return load_patterns()


def dump_patterns(patterns: Iterable[ForbiddenPattern], path: str | Path) -> None:
    body = {"version": 1, "vertex_labels": LABELS, "patterns": [p.to_dict() for p in patterns]}
    Path(path).write_text(json.dumps(body, indent=1) + "\n")


def select(patterns: Sequence[ForbiddenPattern], exclude: Iterable[str] = (),
           target: str | None = None) -> list[ForbiddenPattern]:
    exclude = set(exclude)
    unknown = exclude - {p.name for p in patterns}
    if unknown:
        raise PatternError(f"unknown pattern names: {sorted(unknown)}")
    return [p for p in patterns if p.name not in exclude and (target is None or p.target == target)]


# --- detectors -----------------------------------------------------------

def _rows(coloring) -> list[list[int]]:
    if isinstance(coloring, EdgeColoring):
        return coloring.rows()
    if isinstance(coloring, np.ndarray):
        return coloring.tolist()
    return [list(r) for r in coloring]


def match_pattern(coloring, pattern: ForbiddenPattern) -> dict[int, int] | None:
    """Witness map pattern vertex -> coloring vertex, or None when absent."""
    if pattern.kind != "class-pattern":
        raise PatternError(f"{pattern.name} is a {pattern.kind} detector, not a class pattern")
    rows = _rows(coloring)
    m = len(rows)
    if m < pattern.k:
        return None
    if m > MAX_K:
        # the per-map tables grow as m!/(m-k)!; only worth it on small hosts
        return _match_naive(rows, pattern)
    eq = _equality_mask(rows)
    for need, image, reps in _compiled(pattern, m):
        if need & ~eq == 0 and all(
            rows[image[reps[i][0]]][image[reps[i][1]]] != rows[image[reps[j][0]]][image[reps[j][1]]]
            for i, j in pattern.distinct_classes
        ):
            return dict(enumerate(image))
    return None


@lru_cache(maxsize=None)
def _pair_bits(m: int) -> dict[tuple[int, int], int]:
    edges = list(combinations(range(m), 2))
    bits = {}
    for (i, e), (j, f) in combinations(enumerate(edges), 2):
        bits[(e, f)] = bits[(f, e)] = 1 << (i * len(edges) + j)
    return bits


def _equality_mask(rows) -> int:
    m = len(rows)
    edges = list(combinations(range(m), 2))
    cols = [rows[u][v] for u, v in edges]
    ne = len(edges)
    mask = 0
    for i in range(ne):
        ci = cols[i]
        for j in range(i + 1, ne):
            if cols[j] == ci:
                mask |= 1 << (i * ne + j)
    return mask


@lru_cache(maxsize=None)
def _compiled(pattern: ForbiddenPattern, m: int):
    """(required-equalities mask, vertex image, class representatives) per injective map."""
    bits = _pair_bits(m)
    out = []
    for image in permutations(range(m), pattern.k):
        need = 0
        for cl in pattern.classes:
            e0 = tuple(sorted((image[cl[0][0]], image[cl[0][1]])))
            for u, v in cl[1:]:
                need |= bits[(e0, tuple(sorted((image[u], image[v]))))]
        out.append((need, image, tuple(cl[0] for cl in pattern.classes)))
    return tuple(out)


def _match_naive(rows, pattern):
    """Reference matcher: walks every injective map edge by edge."""
    m = len(rows)
    if m < pattern.k:
        return None
    for image in permutations(range(m), pattern.k):
        colors = []
        for cl in pattern.classes:
            (u0, v0), rest = cl[0], cl[1:]
            c = rows[image[u0]][image[v0]]
            if any(rows[image[u]][image[v]] != c for u, v in rest):
                break
            colors.append(c)
        else:
            if all(colors[i] != colors[j] for i, j in pattern.distinct_classes):
                return dict(enumerate(image))
    return None


def mono_odd_cycle(coloring) -> bool:
    """True when some color class, as a graph, is not bipartite."""
    rows = _rows(coloring)
    m = len(rows)
    side: dict[tuple[int, int], int] = {}
    for s in range(m):
        for c in {rows[s][t] for t in range(m) if t != s}:
            if (c, s) in side:
                continue
            side[(c, s)] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in range(m):
                    if w == u or rows[u][w] != c:
                        continue
                    if (c, w) not in side:
                        side[(c, w)] = 1 - side[(c, u)]
                        stack.append(w)
                    elif side[(c, w)] == side[(c, u)]:
                        return True
    return False


@dataclass
class AuxColorDigraph:
    nodes: set[int] = field(default_factory=set)
    # (C_i, C_j) -> parities seen: 1 for Odd (k odd), 0 for Even
    arcs: dict[tuple[int, int], set[int]] = field(default_factory=lambda: defaultdict(set))

    def has_odd_cycle_arc(self) -> bool:
        succ = defaultdict(set)
        for a, b in self.arcs:
            succ[a].add(b)

        def reaches(src, dst):
            seen, stack = {src}, [src]
            while stack:
                x = stack.pop()
                if x == dst:
                    return True
                for y in succ[x] - seen:
                    seen.add(y)
                    stack.append(y)
            return False

        return any(1 in par and reaches(b, a) for (a, b), par in self.arcs.items())


def aux_color_digraph(coloring) -> AuxColorDigraph:
    rows = _rows(coloring)
    m = len(rows)
    dg = AuxColorDigraph(nodes={rows[u][v] for u, v in combinations(range(m), 2)})

    def extend(path, c):
        last = path[-1]
        if len(path) >= 3:
            dg.arcs[(c, rows[last][path[0]])].add(len(path) % 2)
        for w in range(m):
            if w not in path and rows[last][w] == c:
                path.append(w)
                extend(path, c)
                path.pop()

    for u, v in permutations(range(m), 2):
        extend([u, v], rows[u][v])
    return dg


def color_cycle(coloring) -> bool:
    return aux_color_digraph(coloring).has_odd_cycle_arc()


def detect(coloring, pattern: ForbiddenPattern) -> bool:
    if pattern.kind == "class-pattern":
        return match_pattern(coloring, pattern) is not None
    if pattern.kind == "mono-odd-cycle":
        return mono_odd_cycle(coloring)
    return color_cycle(coloring)


def scan(coloring, patterns: Sequence[ForbiddenPattern]) -> str | None:
    """Name of the first pattern (in list order) present in ``coloring``."""
    rows = _rows(coloring)
    if len(rows) > MAX_K:
        raise PatternError(f"scan works on at most {MAX_K} vertices, got {len(rows)}")
    for p in patterns:
        if detect(rows, p):
            return p.name
    return None


def equality_structure(rows) -> tuple[int, tuple[int, ...]]:
    """(k, first-occurrence labels) of the lexicographic edge color sequence.

    Two colorings of K_k on the same labelled vertices share this key exactly
    when they differ by a renaming of colors.
    """
    k = len(rows)
    first: dict[int, int] = {}
    return k, tuple(first.setdefault(rows[u][v], len(first)) for u, v in combinations(range(k), 2))


def structure_rows(key: tuple[int, tuple[int, ...]]) -> list[list[int]]:
    k, labels = key
    rows = [[-1] * k for _ in range(k)]
    for (u, v), c in zip(combinations(range(k), 2), labels):
        rows[u][v] = rows[v][u] = c
    return rows


class Scanner:
    """``scan`` with results memoized on the coloring's equality structure."""

    def __init__(self, patterns: Sequence[ForbiddenPattern]):
        self.patterns = list(patterns)
        self._cache: dict[tuple, str | None] = {}

    def __call__(self, coloring) -> str | None:
        rows = _rows(coloring)
        key = equality_structure(rows)
        try:
            return self._cache[key]
        except KeyError:
            hit = self._cache[key] = scan(rows, self.patterns)
            return hit

    def scan_key(self, key) -> str | None:
        if key not in self._cache:
            self._cache[key] = scan(structure_rows(key), self.patterns)
        return self._cache[key]

    def contained(self, coloring) -> list[str]:
        """Names of every pattern present, not just the first."""
        rows = _rows(coloring)
        return [p.name for p in self.patterns if detect(rows, p)]


# --- soundness against a construction -------------------------------------

@dataclass
class SoundnessReport:
    samples: int
    seed: int
    # (pattern name, projection) -> number of sampled subsets where it fired
    fired: dict[tuple[str, str], int]
    examples: dict[tuple[str, str], tuple[int, ...]]
    checked: list[tuple[str, str]]

    @property
    def ok(self) -> bool:
        return not any(self.fired.values())

    def lines(self) -> list[str]:
        out = []
        for name, proj in self.checked:
            hits = self.fired.get((name, proj), 0)
            status = "ok" if hits == 0 else f"FIRED x{hits} e.g. {list(self.examples[(name, proj)])}"
            out.append(f"{name:22s} on {proj:8s} {status}")
        return out


def sample_subsets(n: int, size: int, samples: int, seed: int) -> np.ndarray:
    """``samples`` uniformly random ``size``-subsets of range(n), each sorted."""
    rng = np.random.default_rng(seed)
    out = np.empty((samples, size), dtype=np.int64)
    chunk = 20_000
    for start in range(0, samples, chunk):
        stop = min(samples, start + chunk)
        keys = rng.random((stop - start, n))
        out[start:stop] = np.sort(np.argpartition(keys, size, axis=1)[:, :size], axis=1)
    return out


def _structures(matrix: np.ndarray, subsets: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Unique first-occurrence label rows over sampled subsets, and an inverse index."""
    k = subsets.shape[1]
    iu, ju = np.triu_indices(k, 1)
    cols = matrix[subsets[:, iu], subsets[:, ju]]
    eq = cols[:, :, None] == cols[:, None, :]
    first = eq.argmax(axis=1)
    # relabel first-occurrence positions to 0, 1, 2, ...
    labels = np.zeros_like(first)
    for j in range(1, first.shape[1]):
        new = first[:, j] == j
        prev = labels[:, :j].max(axis=1)
        labels[:, j] = np.where(new, prev + 1, labels[np.arange(len(first)), first[:, j]])
    uniq, inverse = np.unique(labels, axis=0, return_inverse=True)
    return uniq, inverse.reshape(-1)


def soundness(construction, patterns: Sequence[ForbiddenPattern] | None = None, *,
              samples: int = 100_000, seed: int = 0, size: int = 5,
              include_product: bool = True) -> SoundnessReport:
    """Scan random ``size``-subsets of a construction with every pattern.

    Each pattern is applied to the projection it targets (phi, chi, or the
    product); with ``include_product`` every pattern is also applied to the
    product coloring, where all of them must be absent too.
    """
    patterns = default_patterns() if patterns is None else list(patterns)
    subsets = sample_subsets(construction.n, size, samples, seed)
    jobs: dict[str, list[ForbiddenPattern]] = defaultdict(list)
    for p in patterns:
        jobs[p.target].append(p)
        if include_product and p.target != "product":
            jobs["product"].append(p)

    fired: dict[tuple[str, str], int] = {}
    examples: dict[tuple[str, str], tuple[int, ...]] = {}
    checked = []
    for proj in TARGETS:
        if proj not in jobs:
            continue
        uniq, inverse = _structures(construction.projection(proj).matrix, subsets)
        counts = np.bincount(inverse, minlength=len(uniq))
        first_seen = np.full(len(uniq), -1)
        for idx in range(len(inverse) - 1, -1, -1):
            first_seen[inverse[idx]] = idx
        for p in jobs[proj]:
            checked.append((p.name, proj))
            for s, labels in enumerate(uniq):
                if detect(structure_rows((size, tuple(labels.tolist()))), p):
                    key = (p.name, proj)
                    fired[key] = fired.get(key, 0) + int(counts[s])
                    ex = tuple(int(x) for x in subsets[first_seen[s]])
                    if key not in examples or ex < examples[key]:
                        examples[key] = ex
    return SoundnessReport(samples=samples, seed=seed, fired=fired, examples=examples, checked=checked)
