"""Minimal-counterexample surgery and the matching coloring extensions.

Each reduction shrinks the measure (number of 3+-vertices, |V| + |E|)
lexicographically.  The surgery itself works on mutable rotation
dictionaries keyed by stable vertex labels; the public ``reduce_*`` helpers
wrap it for immutable :class:`PlanarEmbedding` values and compact the labels
of the result back to ``0..n-1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .coloring import (
    DefectiveColoring,
    RecoloringPlan,
    apply_plan,
    recoloring_search,
)
from .graph import PlanarEmbedding, build_embedding, measure

EDGE = "edge-removal"
GADGET = "three-vertex-gadget"
VERTEX = "vertex-removal"


class PreconditionViolated(ValueError):
    pass


class ExtensionFailed(RuntimeError):
    """An extension the proof guarantees did not go through (a bug)."""


class NoLowVertex(ValueError):
    pass


@dataclass
class ReductionStep:
    kind: str
    removed: int | tuple[int, int]
    neighbors: tuple[int, ...] = ()
    gadget_map: dict[int, tuple[int, int]] = field(default_factory=dict)
    relabel: dict[int, int] | None = None
    measure_before: tuple[int, int] = (0, 0)
    measure_after: tuple[int, int] = (0, 0)

    @property
    def decreases(self) -> bool:
        return self.measure_after < self.measure_before

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "removed": list(self.removed) if isinstance(self.removed, tuple) else self.removed,
            "measure_before": list(self.measure_before),
            "measure_after": list(self.measure_after),
        }
        if self.neighbors:
            out["neighbors"] = list(self.neighbors)
        if self.gadget_map:
            out["gadget_map"] = {str(k): list(v) for k, v in sorted(self.gadget_map.items())}
        return out


@dataclass
class ReductionTrace:
    steps: list[ReductionStep] = field(default_factory=list)
    base: dict[int, list[int]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "steps": [s.to_dict() for s in self.steps],
            "base": {str(v): r for v, r in sorted(self.base.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


# ---------------------------------------------------------------------------
# surgery on rotation dictionaries


Rotations = dict[int, list[int]]


def rotations_of(graph) -> Rotations:
    if isinstance(graph, PlanarEmbedding):
        return {v: list(r) for v, r in enumerate(graph.rotations)}
    if isinstance(graph, Mapping):
        return {v: list(r) for v, r in graph.items()}
    return {v: list(r) for v, r in enumerate(graph)}


def _measure(rot: Rotations) -> tuple[int, int]:
    return measure(list(rot.values()))


def cut_edge(rot: Rotations, x: int, y: int) -> ReductionStep:
    if y not in rot[x]:
        raise PreconditionViolated(f"{x}{y} is not an edge")
    if len(rot[x]) > 4 or len(rot[y]) > 4:
        raise PreconditionViolated(
            f"edge {x}{y} has an endpoint with degree at least 5"
        )
    before = _measure(rot)
    rot[x].remove(y)
    rot[y].remove(x)
    return ReductionStep(EDGE, (x, y), measure_before=before, measure_after=_measure(rot))


def cut_vertex(rot: Rotations, v: int) -> ReductionStep:
    before = _measure(rot)
    nbrs = tuple(rot.pop(v))
    for w in nbrs:
        rot[w].remove(v)
    return ReductionStep(VERTEX, v, nbrs, measure_before=before, measure_after=_measure(rot))


def insert_gadget(rot: Rotations, v: int, new_ids: Sequence[int]) -> ReductionStep:
    """Replace the 3-vertex ``v`` by three length-2 paths between its neighbors.

    With the rotation of ``v`` being ``(v1, v2, v3)``, midpoint ``u1`` sits
    in the corner between ``v1`` and ``v2`` and so on.  In the rotation of
    each ``vi`` the slot of ``v`` is replaced by the two midpoints touching
    it, so the faces around ``v`` are kept and one new 6-face appears.
    """
    if len(rot[v]) != 3:
        raise PreconditionViolated(f"vertex {v} has degree {len(rot[v])}, not 3")
    before = _measure(rot)
    nbrs = tuple(rot[v])
    mids = tuple(new_ids)
    gadget = {}
    for i in range(3):
        a, b = nbrs[i], nbrs[(i + 1) % 3]
        gadget[mids[i]] = (a, b)
    for i, vi in enumerate(nbrs):
        after = mids[i]            # midpoint towards the next neighbor
        before_mid = mids[i - 1]   # midpoint towards the previous neighbor
        r = rot[vi]
        k = r.index(v)
        r[k:k + 1] = [after, before_mid]
    del rot[v]
    for m, (a, b) in gadget.items():
        rot[m] = [a, b]
    return ReductionStep(
        GADGET, v, nbrs, gadget_map=gadget, measure_before=before, measure_after=_measure(rot)
    )


def _compact(rot: Rotations) -> tuple[PlanarEmbedding, dict[int, int]]:
    order = sorted(rot)
    relabel = {v: i for i, v in enumerate(order)}
    rotations = [[relabel[w] for w in rot[v]] for v in order]
    return build_embedding(rotations, allow_disconnected=True), relabel


# ---------------------------------------------------------------------------
# public reductions on embeddings


def reduce_edge(graph, e: tuple[int, int]) -> tuple[PlanarEmbedding, ReductionStep]:
    """Delete an edge whose endpoints both have degree at most 4."""
    rot = rotations_of(graph)
    step = cut_edge(rot, *e)
    emb, _ = _compact(rot)
    return emb, step


def reduce_3vertex(graph, v: int) -> tuple[PlanarEmbedding, ReductionStep]:
    """Apply the 3-vertex gadget.  Other vertices keep their relative order;
    the three midpoints become the last three vertices."""
    rot = rotations_of(graph)
    n = max(rot) + 1
    step = insert_gadget(rot, v, (n, n + 1, n + 2))
    emb, relabel = _compact(rot)
    step.relabel = relabel
    step.gadget_map = {relabel[m]: ends for m, ends in step.gadget_map.items()}
    return emb, step


def reduce_vertex(graph, v: int) -> tuple[PlanarEmbedding, ReductionStep]:
    rot = rotations_of(graph)
    step = cut_vertex(rot, v)
    emb, relabel = _compact(rot)
    step.relabel = relabel
    return emb, step


def find_low_vertex(graph) -> int:
    """A minimum-degree vertex (smallest label on ties); its degree must be <= 3."""
    rot = graph if isinstance(graph, Mapping) else rotations_of(graph)
    if not rot:
        raise NoLowVertex("graph has no vertices")
    v = min(rot, key=lambda x: (len(rot[x]), x))
    if len(rot[v]) > 3:
        raise NoLowVertex(
            f"minimum degree is {len(rot[v])}; the input is not a planar graph of girth >= 5"
        )
    return v


# ---------------------------------------------------------------------------
# extensions


def _as_coloring(coloring) -> DefectiveColoring:
    if not isinstance(coloring, DefectiveColoring):
        raise TypeError("expected a DefectiveColoring carrying its graph")
    return coloring.copy()


def _check(coloring: DefectiveColoring, what: str) -> None:
    bad = coloring.overloaded()
    if bad or not coloring.is_complete:
        dump = {v: (coloring.color[v], coloring.same.get(v)) for v in bad[:10]}
        raise ExtensionFailed(f"{what}: overloaded vertices {dump}")


def restore_edge(coloring: DefectiveColoring, x: int, y: int) -> None:
    """Re-insert ``xy`` and repair the coloring in place."""
    coloring.add_edge(x, y)
    if coloring.color[x] == coloring.color[y] == 3:
        for z in (x, y):
            if coloring.same[z] > coloring.bound(3):
                # z has at most 4 neighbors, all colored 3 now.
                coloring.flip(z)
                break


def extend_edge(coloring: DefectiveColoring, e: tuple[int, int]) -> DefectiveColoring:
    """Coloring of ``G`` from a coloring of ``G - e``."""
    out = _as_coloring(coloring)
    restore_edge(out, *e)
    _check(out, f"extend_edge{tuple(e)}")
    return out


def restore_gadget(coloring: DefectiveColoring, step: ReductionStep, v: int | None = None) -> None:
    """Undo the gadget in place: drop the midpoints and color ``v``."""
    mids = sorted(step.gadget_map)
    colors = [coloring.color[m] for m in mids]
    pick = next(c for c in (3, 4) if colors.count(c) >= 2)
    for m in mids:
        coloring.remove_vertex(m)
    v = step.removed if v is None else v
    coloring.add_vertex(v, step.neighbors)
    coloring.assign(v, pick)


def extend_3vertex(coloring: DefectiveColoring, step: ReductionStep) -> DefectiveColoring:
    """Coloring of the original graph from a coloring of the gadget graph.

    Two of the three midpoints share a color; every former neighbor of ``v``
    is adjacent to one of them, so giving ``v`` that color works.
    """
    out = _as_coloring(coloring)
    if step.relabel is not None:
        # Surgery labels: originals keep theirs, midpoints got n, n+1, n+2.
        inverse = {new: old for old, new in step.relabel.items()}
        out = out.relabeled(inverse)
        step = ReductionStep(
            GADGET,
            step.removed,
            step.neighbors,
            {inverse[m]: ends for m, ends in step.gadget_map.items()},
        )
    restore_gadget(out, step)
    _check(out, f"extend_3vertex({step.removed})")
    return out


def color_vertex(
    coloring: DefectiveColoring,
    v: int,
    max_depth: int = 6,
    *,
    radius: int = 3,
    stats: dict | None = None,
) -> RecoloringPlan | None:
    """Color the uncolored vertex ``v`` in place; return the plan used."""
    for c in (3, 4):
        if coloring.obstruction(v, c) is None:
            coloring.assign(v, c)
            return RecoloringPlan(((v, c),))
    plan = recoloring_search(coloring, v, max_depth, radius=radius, stats=stats)
    if plan is not None:
        apply_plan(coloring, plan)
    return plan


def extend_vertex(
    coloring: DefectiveColoring, v: int, max_depth: int = 6, *, radius: int = 3
) -> DefectiveColoring | None:
    """Color ``v`` (present in the coloring's graph but uncolored).

    Tries color 3, then color 4, then a bounded recoloring search.  Returns
    the extended coloring, or ``None`` if the search fails.
    """
    out = _as_coloring(coloring)
    if color_vertex(out, v, max_depth, radius=radius) is None:
        return None
    return out
