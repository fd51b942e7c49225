"""Exact and reduction-driven solvers for (d1, d2)-colorings.

Three routes:

* :func:`brute_force` enumerates every assignment with numpy.  It is the
  oracle and refuses graphs with more than 24 vertices.
* :func:`exact_solve` is a depth-first search with forced-move propagation
  that decides any (d1, d2).
* :func:`reduce_solve` peels low-degree vertices off a planar graph of girth
  at least 5, solves a small base graph exactly and extends the coloring
  back, recoloring locally where needed.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

import numpy as np

from .coloring import DefectiveColoring, adjacency_of, coloring_to_json, verify
from .graph import girth
from .reducer import (
    EDGE,
    GADGET,
    VERTEX,
    ExtensionFailed,
    ReductionTrace,
    color_vertex,
    cut_edge,
    cut_vertex,
    find_low_vertex,
    insert_gadget,
    restore_edge,
    restore_gadget,
    rotations_of,
)

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
STRATEGIES = ("vertex", "edge", "gadget")
BRUTE_FORCE_LIMIT = 24


class TooLarge(ValueError):
    pass


class GirthTooSmall(ValueError):
    def __init__(self, g: int | None):
        super().__init__(f"girth {g} is below 5")
        self.girth = g


@dataclass
class SolveReport:
    outcome: str
    coloring: dict[int, int] | None = None
    bounds: tuple[int, int] = (3, 4)
    stats: dict = field(default_factory=dict)
    trace: ReductionTrace | None = None

    @property
    def feasible(self) -> bool:
        return self.outcome == FEASIBLE

    def to_dict(self, *, with_trace: bool = False) -> dict:
        out: dict = {
            "outcome": self.outcome,
            "bounds": {"3": self.bounds[0], "4": self.bounds[1]},
        }
        if self.coloring is not None:
            out["coloring"] = json.loads(coloring_to_json(self.coloring))
        stats = dict(self.stats)
        stats["depth_histogram"] = {
            str(k): v for k, v in sorted(stats.get("depth_histogram", {}).items())
        }
        out["stats"] = stats
        if with_trace and self.trace is not None:
            out["trace"] = self.trace.to_dict()
        return out


def _new_stats() -> dict:
    return {"nodes": 0, "forced": 0, "fallbacks": 0, "depth_histogram": {}, "millis": 0.0}


# ---------------------------------------------------------------------------
# brute force oracle


def _bits(n: int, start: int, stop: int) -> np.ndarray:
    """Row i holds the binary digits of start + i (least significant first)."""
    masks = np.arange(start, stop, dtype=np.int64)
    return ((masks[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(np.int16)


@lru_cache(maxsize=None)
def _small_bits(n: int) -> np.ndarray:
    bits = _bits(n, 0, 1 << n)
    bits.setflags(write=False)
    return bits


def brute_force(graph, d1: int, d2: int, *, chunk: int = 1 << 16) -> dict[int, int] | None:
    """A valid coloring with both classes nonempty, or ``None``.

    Bit ``v`` of the enumeration index set means vertex ``v`` gets color 4.
    """
    adj = adjacency_of(graph)
    order = sorted(adj)
    n = len(order)
    if n > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"brute force is limited to {BRUTE_FORCE_LIMIT} vertices, got {n}")
    if n < 2:
        return None
    index = {v: i for i, v in enumerate(order)}
    a = np.zeros((n, n), dtype=np.int16)
    for v, ws in adj.items():
        for w in ws:
            a[index[v], index[w]] = 1
    deg = a.sum(axis=1)
    total = 1 << n
    for start in range(0, total, chunk):
        if total <= min(chunk, 1 << 16):
            fours = _small_bits(n)
        else:
            fours = _bits(n, start, min(start + chunk, total))
        nbr4 = fours @ a
        nbr3 = deg - nbr4
        ok = np.where(fours == 1, nbr4 <= d2, nbr3 <= d1).all(axis=1)
        size4 = fours.sum(axis=1)
        ok &= (size4 > 0) & (size4 < n)
        hits = np.flatnonzero(ok)
        if hits.size:
            bits = fours[hits[0]]
            return {v: 4 if bits[i] else 3 for i, v in enumerate(order)}
    return None


# ---------------------------------------------------------------------------
# exact search


class _Search:
    """DFS over one component with forced-move propagation and a trail."""

    def __init__(self, adj: list[list[int]], d1: int, d2: int):
        self.adj = adj
        self.n = len(adj)
        self.bound = {3: d1, 4: d2}
        self.color = [0] * self.n
        self.same = [0] * self.n
        self.trail: list[int] = []
        self.nodes = 0
        self.forced = 0

    def allowed(self, v: int, c: int) -> bool:
        b = self.bound[c]
        k = 0
        for w in self.adj[v]:
            if self.color[w] == c:
                k += 1
                if k > b or self.same[w] >= b:
                    return False
        return True

    def slack(self, v: int, c: int) -> int:
        return self.bound[c] - sum(1 for w in self.adj[v] if self.color[w] == c)

    def assign(self, v: int, c: int) -> None:
        k = 0
        for w in self.adj[v]:
            if self.color[w] == c:
                self.same[w] += 1
                k += 1
        self.color[v] = c
        self.same[v] = k
        self.trail.append(v)

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            v = self.trail.pop()
            c = self.color[v]
            for w in self.adj[v]:
                if self.color[w] == c:
                    self.same[w] -= 1
            self.color[v] = 0
            self.same[v] = 0

    def _near(self, v: int) -> set[int]:
        out = set()
        for w in self.adj[v]:
            out.add(w)
            out.update(self.adj[w])
        return out

    def propagate(self, seeds) -> bool:
        queue = list(seeds)
        queued = set(queue)
        while queue:
            u = queue.pop()
            queued.discard(u)
            if self.color[u]:
                continue
            opts = [c for c in (3, 4) if self.allowed(u, c)]
            if not opts:
                return False
            if len(opts) == 1:
                self.assign(u, opts[0])
                self.forced += 1
                for x in self._near(u):
                    if not self.color[x] and x not in queued:
                        queued.add(x)
                        queue.append(x)
        return True

    def pick(self, vertices: list[int]) -> int | None:
        best = None
        best_key = None
        for v in vertices:
            if self.color[v]:
                continue
            colored = sum(1 for w in self.adj[v] if self.color[w])
            key = (-colored, -len(self.adj[v]), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def run(self, vertices: list[int]) -> bool:
        if not self.propagate(vertices):
            return False
        return self._dfs(vertices)

    def _dfs(self, vertices: list[int]) -> bool:
        self.nodes += 1
        v = self.pick(vertices)
        if v is None:
            return True
        order = sorted((3, 4), key=lambda c: (-self.slack(v, c), c))
        for c in order:
            if not self.allowed(v, c):
                continue
            mark = len(self.trail)
            self.assign(v, c)
            if self.propagate(self._near(v)) and self._dfs(vertices):
                return True
            self.undo(mark)
        return False


def _components(adj: list[list[int]]) -> list[list[int]]:
    seen = [False] * len(adj)
    out = []
    for s in range(len(adj)):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def _solve_any(adj_map: Mapping[int, set[int]], d1: int, d2: int, stats: dict) -> dict[int, int] | None:
    """A valid coloring ignoring nonemptiness, or ``None``."""
    order = sorted(adj_map)
    index = {v: i for i, v in enumerate(order)}
    adj = [sorted(index[w] for w in adj_map[v]) for v in order]
    search = _Search(adj, d1, d2)
    ok = all(search.run(comp) for comp in _components(adj))
    stats["nodes"] += search.nodes
    stats["forced"] += search.forced
    if not ok:
        return None
    return {v: search.color[i] for i, v in enumerate(order)}


def make_nonempty(adj_map: Mapping[int, set[int]], colors: dict[int, int], d1: int, d2: int) -> dict[int, int] | None:
    """Move one vertex into an empty class if needed.

    A vertex moved into an empty class has no same-colored neighbors there,
    and leaving a class never overloads anyone, so the smallest vertex
    always works when there are at least two vertices.
    """
    if len(colors) < 2:
        return None
    used = set(colors.values())
    if used == {3, 4}:
        return colors
    missing = 7 - used.pop()
    out = dict(colors)
    out[min(out)] = missing
    assert verify(adj_map, out, d1, d2).valid
    return out


def exact_solve(graph, d1: int, d2: int) -> SolveReport:
    """Decide (d1, d2)-colorability exactly and return a witness if one exists."""
    start = time.perf_counter()
    adj_map = adjacency_of(graph)
    stats = _new_stats()
    colors = _solve_any(adj_map, d1, d2, stats)
    if colors is not None:
        colors = make_nonempty(adj_map, colors, d1, d2)
    stats["millis"] = round((time.perf_counter() - start) * 1000, 3)
    if colors is None:
        return SolveReport(INFEASIBLE, None, (d1, d2), stats)
    verdict = verify(adj_map, colors, d1, d2)
    assert verdict.valid, verdict.describe()
    return SolveReport(FEASIBLE, colors, (d1, d2), stats)


# ---------------------------------------------------------------------------
# reduction-driven (3,4) solver


def _pick_step(rot: dict[int, list[int]], strategy: str, fresh: int):
    v = find_low_vertex(rot)
    if strategy == "gadget" and len(rot[v]) == 3 and all(len(rot[w]) >= 3 for w in rot[v]):
        return insert_gadget(rot, v, (fresh, fresh + 1, fresh + 2))
    if strategy in ("edge", "gadget") and len(rot[v]) <= 4:
        for w in sorted(rot[v]):
            if len(rot[w]) <= 4:
                return cut_edge(rot, v, w)
    return cut_vertex(rot, v)


def reduce_solve(
    emb,
    *,
    strategy: str = "vertex",
    max_depth: int = 6,
    radius: int = 3,
    base: int = 8,
) -> SolveReport:
    """(3,4)-color a planar graph of girth at least 5 by reduction.

    Every removed vertex is colored back directly or through a bounded
    recoloring search.  If that fails the current graph is solved exactly
    once (a fallback, counted in the stats) and the replay continues.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    start = time.perf_counter()
    g = girth(emb)
    if g is not None and g < 5:
        raise GirthTooSmall(g)
    stats = _new_stats()
    hist: Counter = Counter()

    rot = rotations_of(emb)
    fresh = max(rot, default=-1) + 1
    trace = ReductionTrace()
    while len(rot) > base:
        step = _pick_step(rot, strategy, fresh)
        if step.kind == GADGET:
            fresh += 3
        trace.steps.append(step)
    trace.base = {v: list(r) for v, r in sorted(rot.items())}

    base_colors = _solve_any({v: set(r) for v, r in rot.items()}, 3, 4, stats)
    if base_colors is None:
        raise ExtensionFailed("base graph is not (3,4)-colorable")
    coloring = DefectiveColoring(trace.base, base_colors)

    for step in reversed(trace.steps):
        if step.kind == EDGE:
            x, y = step.removed
            restore_edge(coloring, x, y)
            if coloring.overloaded((x, y)):
                raise ExtensionFailed(f"edge {step.removed}: endpoints overloaded")
        elif step.kind == GADGET:
            restore_gadget(coloring, step)
            if coloring.overloaded([step.removed, *step.neighbors]):
                raise ExtensionFailed(f"gadget at {step.removed}: overloaded")
        else:
            v = step.removed
            coloring.add_vertex(v, step.neighbors)
            plan = color_vertex(coloring, v, max_depth, radius=radius, stats=stats)
            if plan is not None:
                hist[plan.depth] += 1
                continue
            stats["fallbacks"] += 1
            colors = _solve_any(coloring.adj, 3, 4, stats)
            if colors is None:
                raise ExtensionFailed(f"no (3,4)-coloring after restoring vertex {v}")
            coloring = DefectiveColoring(coloring.adj, colors)

    colors = make_nonempty(coloring.adj, coloring.as_dict(), 3, 4)
    stats["depth_histogram"] = dict(hist)
    stats["millis"] = round((time.perf_counter() - start) * 1000, 3)
    if colors is None:
        return SolveReport(INFEASIBLE, None, (3, 4), stats, trace)
    verdict = verify(emb, colors, 3, 4)
    if not verdict.valid:
        raise ExtensionFailed("; ".join(verdict.describe()[:5]))
    return SolveReport(FEASIBLE, colors, (3, 4), stats, trace)
