"""Exhaustive census of connected planar graphs on few vertices.

Every connected graph on n + 1 vertices arises from a connected graph on n
vertices by adding a vertex with a nonempty neighborhood (delete a vertex
that is not a cut vertex).  Planarity is inherited by subgraphs, so
extending only planar graphs loses nothing.  Isomorphs are merged with
igraph's canonical labeling.

The census up to 9 vertices ships with the package as gzipped graph6.
"""

from __future__ import annotations

import gzip
from importlib import resources
from itertools import combinations
from pathlib import Path
from typing import Iterator

from .embed import is_planar
from .formats import parse_graph6, write_graph6

CENSUS_FILE = "census9.g6.gz"
MAX_CENSUS_N = 9

Graph = tuple[int, tuple[tuple[int, int], ...]]


def _canonical(n: int, edges) -> Graph:
    import igraph  # optional dependency, only needed to rebuild the census

    g = igraph.Graph(n=n, edges=list(edges))
    perm = g.canonical_permutation()
    # perm[i] is the original vertex placed at canonical position i
    new = [0] * n
    for i, v in enumerate(perm):
        new[v] = i
    return n, tuple(sorted((min(new[u], new[v]), max(new[u], new[v])) for u, v in edges))


def generate(max_n: int) -> dict[int, list[Graph]]:
    """All connected planar graphs with 1..max_n vertices, one per isomorphism class."""
    levels: dict[int, list[Graph]] = {1: [(1, ())]}
    for n in range(1, max_n):
        seen: set[Graph] = set()
        out: list[Graph] = []
        for _, edges in levels[n]:
            for k in range(1, n + 1):
                for nbrs in combinations(range(n), k):
                    new = edges + tuple((u, n) for u in nbrs)
                    if len(new) > 3 * (n + 1) - 6 and n + 1 >= 3:
                        continue
                    key = _canonical(n + 1, new)
                    if key in seen:
                        continue
                    seen.add(key)
                    if is_planar(n + 1, new):
                        out.append(key)
        levels[n + 1] = sorted(out)
    return levels


def write_census(path: str | Path, max_n: int = MAX_CENSUS_N) -> dict[int, int]:
    levels = generate(max_n)
    with gzip.open(path, "wt", encoding="ascii") as fh:
        for n in sorted(levels):
            for g in levels[n]:
                fh.write(write_graph6(g) + "\n")
    return {n: len(gs) for n, gs in levels.items()}


def iter_census(max_n: int = MAX_CENSUS_N, path: str | Path | None = None) -> Iterator[tuple[int, list[tuple[int, int]]]]:
    """Yield ``(n, edges)`` for every connected planar graph with at most ``max_n`` vertices."""
    if max_n > MAX_CENSUS_N and path is None:
        raise ValueError(f"the shipped census stops at {MAX_CENSUS_N} vertices")
    src = Path(path) if path is not None else resources.files(__package__).joinpath(CENSUS_FILE)
    with src.open("rb") as raw, gzip.open(raw, "rt", encoding="ascii") as fh:
        for line in fh:
            if not line.strip():
                continue
            n, edges = parse_graph6(line)
            if n > max_n:
                break
            yield n, edges
