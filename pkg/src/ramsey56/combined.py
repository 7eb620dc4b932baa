"""The product coloring phi x chi of K_{q^2}.

Each vector (x1, x2) of F_q^2 is embedded as the bit string
``rank(x1) | rank(x2) | 0...0`` of length beta^2, where each rank field has
ceil(log2 q) bits and beta is the least positive integer with
2*ceil(log2 q) <= beta^2. Edges get the CFLS color of the bit strings paired
with the algebraic color of the vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import NamedTuple

import numpy as np

from . import algebraic, cfls
from .algebraic import AlgColor, Vector2
from .cfls import BitVertex, CflsColor
from .coloring import EdgeColoring
from .field import FieldSpec, ff_rank


class ProductColor(NamedTuple):
    phi: CflsColor
    chi: AlgColor

    def render(self) -> str:
        return f"phi={self.phi.render()} chi={self.chi.render()}"


def rank_bits(q: int) -> int:
    """ceil(log2 q), computed exactly."""
    return (q - 1).bit_length()


def choose_beta(q: int) -> int:
    if q < 3:
        raise ValueError(f"q must be at least 3, got {q}")
    need = 2 * rank_bits(q)
    return math.isqrt(need - 1) + 1


def embed(v: Vector2, q: int, beta: int) -> BitVertex:
    w = rank_bits(q)
    if 2 * w > beta * beta:
        raise ValueError(f"beta={beta} too small for q={q}")
    bits = format(ff_rank(v.x1), f"0{w}b") + format(ff_rank(v.x2), f"0{w}b")
    return BitVertex(bits.ljust(beta * beta, "0"), beta)


def color_edge(u: Vector2, v: Vector2, beta: int | None = None) -> ProductColor:
    if u == v:
        raise ValueError("an edge needs two distinct vectors")
    q = u.x1.field.q
    beta = choose_beta(q) if beta is None else beta
    return ProductColor(cfls.phi(embed(u, q, beta), embed(v, q, beta)), algebraic.chi(u, v))


def color_bound(q: int, beta: int | None = None) -> int:
    beta = choose_beta(q) if beta is None else beta
    return algebraic.color_bound(q) * cfls.color_bound(beta)


@dataclass(frozen=True, eq=False)
class Construction:
    q: int
    beta: int
    vertices: list[Vector2]
    embedding: dict[Vector2, BitVertex]
    coloring: EdgeColoring
    colors: list[ProductColor]
    # per-factor id tables, interned independently
    phi_coloring: EdgeColoring = field(repr=False)
    chi_coloring: EdgeColoring = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def num_colors(self) -> int:
        return len(self.colors)

    def projection(self, name: str) -> EdgeColoring:
        try:
            return {"product": self.coloring, "phi": self.phi_coloring, "chi": self.chi_coloring}[name]
        except KeyError:
            raise ValueError(f"unknown projection {name!r}") from None

    def write(self, path: str | Path, dictionary_path: str | Path | None = None) -> None:
        write_export(self, path, dictionary_path)


def build(q: int) -> Construction:
    fs = FieldSpec(q)
    beta = choose_beta(q)
    vertices = algebraic.all_vectors(fs)
    embedding = {v: embed(v, q, beta) for v in vertices}
    n = len(vertices)

    ids: dict[ProductColor, int] = {}
    phi_ids: dict[CflsColor, int] = {}
    chi_ids: dict[AlgColor, int] = {}
    mats = [np.full((n, n), -1, dtype=np.int32) for _ in range(3)]
    for i, j in combinations(range(n), 2):
        u, v = vertices[i], vertices[j]
        c = ProductColor(cfls.phi(embedding[u], embedding[v]), algebraic.chi(u, v))
        for m, table, key in ((mats[0], ids, c), (mats[1], phi_ids, c.phi), (mats[2], chi_ids, c.chi)):
            m[i, j] = m[j, i] = table.setdefault(key, len(table))

    return Construction(
        q=q,
        beta=beta,
        vertices=vertices,
        embedding=embedding,
        coloring=EdgeColoring(mats[0]),
        colors=list(ids),
        phi_coloring=EdgeColoring(mats[1]),
        chi_coloring=EdgeColoring(mats[2]),
    )


def export_lines(con: Construction) -> list[str]:
    lines = [f"# q={con.q} n={con.n} beta={con.beta} colors={con.num_colors}"]
    m = con.coloring.matrix
    lines += [f"{i} {j} {m[i, j]}" for i, j in combinations(range(con.n), 2)]
    return lines


def dictionary_lines(con: Construction) -> list[str]:
    return [f"{cid} {c.render()}" for cid, c in enumerate(con.colors)]


def write_export(con: Construction, path: str | Path, dictionary_path: str | Path | None = None) -> None:
    path = Path(path)
    if dictionary_path is None:
        dictionary_path = path.with_name(path.name + ".colors")
    path.write_text("\n".join(export_lines(con)) + "\n")
    Path(dictionary_path).write_text("\n".join(dictionary_lines(con)) + "\n")


def read_export(path: str | Path) -> tuple[dict[str, int], EdgeColoring]:
    """Load an edge list written by :func:`write_export`; returns header fields and the coloring."""
    header: dict[str, int] = {}
    edges = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                for tok in line[1:].split():
                    k, _, v = tok.partition("=")
                    header[k] = int(v)
                continue
            u, v, c = map(int, line.split())
            edges.append((u, v, c))
    n = header.get("n")
    if n is None:
        n = 1 + max(max(u, v) for u, v, _ in edges)
    if len(edges) != n * (n - 1) // 2:
        raise ValueError(f"expected {n * (n - 1) // 2} edges for n={n}, found {len(edges)}")
    m = np.full((n, n), -1, dtype=np.int32)
    for u, v, c in edges:
        if u == v or m[u, v] != -1:
            raise ValueError(f"bad or repeated edge {u} {v}")
        m[u, v] = m[v, u] = c
    return header, EdgeColoring(m)
