"""Embedded planar graphs given by rotation systems.

A rotation system lists, for every vertex, its neighbors in cyclic order.
Faces are traced with the usual next-traversal rule: after arriving at ``v``
along the dart ``(u, v)``, leave along ``(v, w)`` where ``w`` follows ``u`` in
the rotation of ``v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence


class EmbeddingError(ValueError):
    """Base class for rejected rotation systems."""


class NotSimple(EmbeddingError):
    def __init__(self, vertex: int, neighbor: int):
        super().__init__(f"vertex {vertex}: loop or repeated neighbor {neighbor}")
        self.vertex = vertex
        self.neighbor = neighbor


class NotSymmetric(EmbeddingError):
    def __init__(self, vertex: int, neighbor: int):
        super().__init__(f"{neighbor} is in the rotation of {vertex} but not vice versa")
        self.vertex = vertex
        self.neighbor = neighbor


class NotConnected(EmbeddingError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} is not reachable from vertex 0")
        self.vertex = vertex


class EulerViolation(EmbeddingError):
    def __init__(self, vertex: int, v: int, e: int, f: int):
        super().__init__(
            f"component of vertex {vertex}: V - E + F = {v} - {e} + {f} != 2 "
            "(rotation system is not planar)"
        )
        self.vertex = vertex


@dataclass(frozen=True)
class Face:
    index: int
    darts: tuple[tuple[int, int], ...]
    anchor: int  # first vertex of the walk, or the isolated vertex of an empty face

    @property
    def walk(self) -> tuple[int, ...]:
        """Vertices met along the boundary walk, with repetitions."""
        return tuple(u for u, _ in self.darts)

    @property
    def degree(self) -> int:
        return len(self.darts)


class PlanarEmbedding:
    """Immutable rotation system with derived edges and faces.

    Use :func:`build_embedding` to construct one; it validates the input.
    """

    def __init__(self, rotations: Sequence[Sequence[int]]):
        self.rotations: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rotations)
        self.n = len(self.rotations)
        self._pos = [{w: i for i, w in enumerate(r)} for r in self.rotations]

    # adjacency -----------------------------------------------------------

    @property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        return self.rotations

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rotations)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((u, w) for u, r in enumerate(self.rotations) for w in r if u < w))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._pos[u]

    def successor(self, v: int, u: int) -> int:
        """Neighbor following ``u`` in the rotation of ``v``."""
        r = self.rotations[v]
        return r[(self._pos[v][u] + 1) % len(r)]

    # faces ---------------------------------------------------------------

    @cached_property
    def _face_data(self) -> tuple[tuple[Face, ...], dict[tuple[int, int], int]]:
        faces: list[Face] = []
        dart_face: dict[tuple[int, int], int] = {}
        for u, r in enumerate(self.rotations):
            if not r:
                faces.append(Face(len(faces), (), u))
                continue
            for w in r:
                if (u, w) in dart_face:
                    continue
                idx = len(faces)
                darts = []
                a, b = u, w
                while (a, b) not in dart_face:
                    dart_face[(a, b)] = idx
                    darts.append((a, b))
                    a, b = b, self.successor(b, a)
                faces.append(Face(idx, tuple(darts), u))
        return tuple(faces), dart_face

    @property
    def faces(self) -> tuple[Face, ...]:
        return self._face_data[0]

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def face_of(self, u: int, v: int) -> int:
        """Index of the face containing the dart ``(u, v)``."""
        return self._face_data[1][(u, v)]

    def edge_faces(self, u: int, v: int) -> tuple[int, int]:
        return self.face_of(u, v), self.face_of(v, u)

    # derived structure ---------------------------------------------------

    @cached_property
    def classes(self) -> tuple["VertexClass", ...]:
        return tuple(_classify(self.rotations, v) for v in range(self.n))

    def components(self) -> list[list[int]]:
        return components(self.rotations)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PlanarEmbedding) and self.rotations == other.rotations

    def __hash__(self) -> int:
        return hash(self.rotations)

    def __repr__(self) -> str:
        return f"PlanarEmbedding(n={self.n}, edges={self.edge_count}, faces={self.face_count})"


def components(adj: Sequence[Iterable[int]]) -> list[list[int]]:
    seen = [False] * len(adj)
    out = []
    for s in range(len(adj)):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(comp)
    return out


def build_embedding(
    rotations: Sequence[Sequence[int]], *, allow_disconnected: bool = False
) -> PlanarEmbedding:
    """Validate a rotation system and return the embedding it describes.

    With ``allow_disconnected`` every component must satisfy Euler's formula
    on its own; this mode exists for intermediate graphs of the reducer.
    """
    n = len(rotations)
    for v, rot in enumerate(rotations):
        seen = set()
        for w in rot:
            if not isinstance(w, int) or not 0 <= w < n:
                raise EmbeddingError(f"vertex {v}: neighbor {w!r} out of range")
            if w == v or w in seen:
                raise NotSimple(v, w)
            seen.add(w)
    neighbor_sets = [set(r) for r in rotations]
    for v, rot in enumerate(rotations):
        for w in rot:
            if v not in neighbor_sets[w]:
                raise NotSymmetric(v, w)

    emb = PlanarEmbedding(rotations)
    comps = emb.components()
    if n and len(comps) > 1 and not allow_disconnected:
        raise NotConnected(comps[1][0])

    comp_of = [0] * n
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    f_count = [0] * len(comps)
    for face in emb.faces:
        f_count[comp_of[face.anchor]] += 1
    for i, comp in enumerate(comps):
        v_c = len(comp)
        e_c = sum(len(rotations[v]) for v in comp) // 2
        if v_c - e_c + f_count[i] != 2:
            raise EulerViolation(comp[0], v_c, e_c, f_count[i])
    return emb


def girth(graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for a forest."""
    adj = graph.adj if hasattr(graph, "adj") else graph
    n = len(adj)
    best = None
    for root in range(n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u]
            # Any cycle found from here on is at least 2*du + 1 long.
            if best is not None and 2 * du + 1 >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = du + dist[w] + 1
                    if best is None or length < best:
                        best = length
        if best == 3:
            return 3
    return best


# ---------------------------------------------------------------------------
# classification


class VertexTag(str, Enum):
    TWO = "two-vertex"
    POOR = "poor"
    SEMI_POOR = "semi-poor"
    RICH = "rich"
    UNCLASSIFIED_POOR = "unclassified-poor"


@dataclass(frozen=True)
class VertexClass:
    degree: int
    tag: VertexTag
    plus_neighbors: int

    @property
    def poor_like(self) -> bool:
        return self.tag in (VertexTag.POOR, VertexTag.UNCLASSIFIED_POOR)

    @property
    def label(self) -> str:
        """Short name such as ``2``, ``5p``, ``6s`` or ``9r``."""
        if self.tag is VertexTag.TWO:
            return "2"
        suffix = {VertexTag.SEMI_POOR: "s", VertexTag.RICH: "r"}.get(self.tag, "p")
        return f"{self.degree}{suffix}"

    @property
    def is_5p(self) -> bool:
        return self.degree == 5 and self.poor_like

    @property
    def is_5s(self) -> bool:
        return self.degree == 5 and self.tag is VertexTag.SEMI_POOR

    @property
    def is_6p(self) -> bool:
        return self.degree == 6 and self.poor_like

    @property
    def is_needy(self) -> bool:
        """5p-, 5s- or 6p-vertex: the vertices the discharging rules feed."""
        return self.is_5p or self.is_5s or self.is_6p


def _classify(adj: Sequence[Sequence[int]], v: int) -> VertexClass:
    degree = len(adj[v])
    plus = sum(1 for w in adj[v] if len(adj[w]) >= 3)
    if degree == 2:
        tag = VertexTag.TWO
    elif plus == 0:
        tag = VertexTag.UNCLASSIFIED_POOR
    elif plus == 1:
        tag = VertexTag.POOR
    elif plus == 2:
        tag = VertexTag.SEMI_POOR
    else:
        tag = VertexTag.RICH
    return VertexClass(degree, tag, plus)


def classify_vertex(emb: PlanarEmbedding, v: int) -> VertexClass:
    return emb.classes[v]


def is_heavy(emb: PlanarEmbedding, u: int, v: int) -> bool:
    cu, cv = emb.classes[u], emb.classes[v]
    return cu.degree >= 5 and cv.degree >= 5 and not cu.is_needy and not cv.is_needy


def heavy_edges(emb: PlanarEmbedding) -> set[tuple[int, int]]:
    return {(u, v) for u, v in emb.edges if is_heavy(emb, u, v)}


def measure(adj: Sequence[Sequence[int]]) -> tuple[int, int]:
    """Minimality measure: (number of 3+-vertices, |V| + |E|)."""
    plus = sum(1 for r in adj if len(r) >= 3)
    return plus, len(adj) + sum(len(r) for r in adj) // 2
