"""Named graph families with fixed, documented vertex numbering."""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

from ..graph import PlanarEmbedding, build_embedding


class UnknownName(ValueError):
    pass


def rotations_from_positions(
    n: int, edges: Iterable[tuple[int, int]], pos: Sequence[tuple[float, float]]
) -> list[list[int]]:
    """Counterclockwise rotations of a straight-line drawing."""
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    out = []
    for v in range(n):
        x, y = pos[v]
        out.append(sorted(nbrs[v], key=lambda w: math.atan2(pos[w][1] - y, pos[w][0] - x)))
    return out


def _circle(k: int, radius: float = 1.0, phase: float = 0.0) -> list[tuple[float, float]]:
    return [
        (radius * math.cos(phase + 2 * math.pi * i / k), radius * math.sin(phase + 2 * math.pi * i / k))
        for i in range(k)
    ]


def cycle(n: int) -> PlanarEmbedding:
    """C_n with vertices 0..n-1 in order."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_embedding([[(v - 1) % n, (v + 1) % n] for v in range(n)])


def path(n: int) -> PlanarEmbedding:
    """P_n with vertices 0..n-1 in order."""
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return build_embedding([[w for w in (v - 1, v + 1) if 0 <= w < n] for v in range(n)])


def star(n: int) -> PlanarEmbedding:
    """K_{1,n}: center 0, leaves 1..n."""
    return build_embedding([list(range(1, n + 1))] + [[0] for _ in range(n)])


def grid(m: int, n: int) -> PlanarEmbedding:
    """m x n grid; vertex ``i * n + j`` sits in row i, column j."""
    edges = []
    for i in range(m):
        for j in range(n):
            v = i * n + j
            if j + 1 < n:
                edges.append((v, v + 1))
            if i + 1 < m:
                edges.append((v, v + n))
    pos = [(float(j), float(-i)) for i in range(m) for j in range(n)]
    return build_embedding(rotations_from_positions(m * n, edges, pos))


def dodecahedron() -> PlanarEmbedding:
    """Outer pentagon 0-4, middle 10-cycle 5-14, inner pentagon 15-19.

    Outer vertex i is joined to middle vertex 5 + 2i; middle vertex
    6 + 2i is joined to inner vertex 15 + i.
    """
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, 5 + 2 * i))
        edges.append((6 + 2 * i, 15 + i))
        edges.append((15 + i, 15 + (i + 1) % 5))
    for j in range(10):
        edges.append((5 + j, 5 + (j + 1) % 10))
    pos = _circle(5, 3.0) + _circle(10, 2.0) + _circle(5, 1.0, math.pi / 5)
    return build_embedding(rotations_from_positions(20, edges, pos))


def subdivided(base: PlanarEmbedding) -> PlanarEmbedding:
    """Subdivide every edge once.

    Original vertices keep their labels; the midpoint of the k-th edge of
    ``base.edges`` (sorted) is vertex ``base.n + k``.
    """
    mid = {}
    for k, (u, v) in enumerate(base.edges):
        mid[(u, v)] = mid[(v, u)] = base.n + k
    rotations = [[mid[(v, w)] for w in r] for v, r in enumerate(base.rotations)]
    rotations += [[u, v] for u, v in base.edges]
    return build_embedding(rotations)


def petersen_edges() -> list[tuple[int, int]]:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return outer + spokes + inner


_SIMPLE = {"dodecahedron": dodecahedron}
_ONE_ARG = {"cycle": cycle, "path": path, "star": star}


def gen_named(name: str, *args: int) -> PlanarEmbedding:
    """Build a named family member.

    Accepts either ``gen_named("cycle", 5)`` or ``gen_named("cycle(5)")``;
    ``subdivided(<name>)`` wraps any other name.
    """
    text = name.strip().replace(" ", "")
    m = re.fullmatch(r"subdivided\((.+)\)", text)
    if m:
        return subdivided(gen_named(m.group(1), *args))
    m = re.fullmatch(r"(\w+)\(([\d,]*)\)", text)
    if m:
        text = m.group(1)
        args = tuple(int(a) for a in m.group(2).split(",") if a) + tuple(args)
    if text in _SIMPLE and not args:
        return _SIMPLE[text]()
    if text in _ONE_ARG and len(args) == 1:
        return _ONE_ARG[text](args[0])
    if text == "grid" and len(args) == 2:
        return grid(*args)
    raise UnknownName(f"unknown family or wrong arguments: {name!r} {args}")
