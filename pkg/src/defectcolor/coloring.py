"""Partial two-class defective colorings with saturation bookkeeping.

Colors are called 3 and 4.  Color 3 is the class whose induced degree is
bounded by ``d1`` and color 4 the class bounded by ``d2``; for the (3,4)
problem the name of a color is its own bound.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

COLORS = (3, 4)


class IncompleteColoring(ValueError):
    pass


class Uncolored(ValueError):
    pass


def other(color: int) -> int:
    return 7 - color


def adjacency_of(graph) -> dict[int, set[int]]:
    """Adjacency sets from an embedding, a list of neighbor lists or a dict."""
    if hasattr(graph, "adj"):
        graph = graph.adj
    if isinstance(graph, Mapping):
        return {v: set(nbrs) for v, nbrs in graph.items()}
    return {v: set(nbrs) for v, nbrs in enumerate(graph)}


class DefectiveColoring:
    """Assignment vertex -> {3, 4, None} that keeps same-color counts current.

    ``same[v]`` is the number of neighbors of ``v`` sharing its color and is
    only meaningful for colored vertices.  The coloring owns a private copy
    of the adjacency so the reducer can grow the graph back underneath it.
    """

    def __init__(self, graph, colors=None, bounds: tuple[int, int] = (3, 4)):
        self.adj = adjacency_of(graph)
        self.bounds = {3: bounds[0], 4: bounds[1]}
        self.color: dict[int, int | None] = {v: None for v in self.adj}
        self.same: dict[int, int] = {}
        if colors is not None:
            items = colors.items() if isinstance(colors, Mapping) else enumerate(colors)
            for v, c in items:
                if c is not None:
                    self.assign(v, c)

    # basic moves ---------------------------------------------------------

    def assign(self, v: int, c: int) -> None:
        if c not in COLORS:
            raise ValueError(f"color must be 3 or 4, got {c!r}")
        if self.color[v] is not None:
            self.unassign(v)
        count = 0
        for w in self.adj[v]:
            if self.color[w] == c:
                self.same[w] += 1
                count += 1
        self.color[v] = c
        self.same[v] = count

    def unassign(self, v: int) -> None:
        c = self.color[v]
        if c is None:
            return
        for w in self.adj[v]:
            if self.color[w] == c:
                self.same[w] -= 1
        self.color[v] = None
        del self.same[v]

    def flip(self, v: int) -> None:
        c = self.color[v]
        if c is None:
            raise Uncolored(f"vertex {v} is uncolored")
        self.assign(v, other(c))

    # graph edits (used when replaying reductions backwards) ---------------

    def add_vertex(self, v: int, neighbors: Iterable[int] = ()) -> None:
        if v in self.adj:
            raise ValueError(f"vertex {v} already present")
        self.adj[v] = set()
        self.color[v] = None
        for w in neighbors:
            self.add_edge(v, w)

    def remove_vertex(self, v: int) -> None:
        self.unassign(v)
        for w in list(self.adj[v]):
            self.remove_edge(v, w)
        del self.adj[v]
        del self.color[v]

    def add_edge(self, u: int, v: int) -> None:
        self.adj[u].add(v)
        self.adj[v].add(u)
        if self.color[u] is not None and self.color[u] == self.color[v]:
            self.same[u] += 1
            self.same[v] += 1

    def remove_edge(self, u: int, v: int) -> None:
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        if self.color[u] is not None and self.color[u] == self.color[v]:
            self.same[u] -= 1
            self.same[v] -= 1

    # queries -------------------------------------------------------------

    def bound(self, c: int) -> int:
        return self.bounds[c]

    def recount(self, v: int) -> int:
        c = self.color[v]
        return sum(1 for w in self.adj[v] if self.color[w] == c)

    @property
    def is_complete(self) -> bool:
        return all(c is not None for c in self.color.values())

    def overloaded(self, vertices: Iterable[int] | None = None) -> list[int]:
        """Colored vertices whose same-color count exceeds their bound."""
        vs = self.adj if vertices is None else vertices
        return [
            v for v in vs
            if self.color[v] is not None and self.same[v] > self.bounds[self.color[v]]
        ]

    @property
    def is_valid(self) -> bool:
        return not self.overloaded()

    def obstruction(self, v: int, c: int) -> str | None:
        """Why ``v`` cannot take color ``c`` right now, or ``None`` if it can.

        Only vertices that gain a same-colored neighbor are checked; leaving a
        color never overloads anybody.
        """
        count = 0
        saturated = None
        for w in sorted(self.adj[v]):
            if self.color[w] == c:
                count += 1
                if saturated is None and self.same[w] >= self.bounds[c]:
                    saturated = w
        if count > self.bounds[c]:
            return f"vertex {v} would have {count} neighbors of color {c} (> {self.bounds[c]})"
        if saturated is not None:
            return f"neighbor {saturated} would exceed {self.bounds[c]}"
        return None

    def class_sizes(self) -> dict[int, int]:
        sizes = {3: 0, 4: 0}
        for c in self.color.values():
            if c is not None:
                sizes[c] += 1
        return sizes

    def copy(self) -> "DefectiveColoring":
        new = DefectiveColoring.__new__(DefectiveColoring)
        new.adj = {v: set(ws) for v, ws in self.adj.items()}
        new.bounds = dict(self.bounds)
        new.color = dict(self.color)
        new.same = dict(self.same)
        return new

    def relabeled(self, mapping: Mapping[int, int]) -> "DefectiveColoring":
        new = DefectiveColoring.__new__(DefectiveColoring)
        new.adj = {mapping[v]: {mapping[w] for w in ws} for v, ws in self.adj.items()}
        new.bounds = dict(self.bounds)
        new.color = {mapping[v]: c for v, c in self.color.items()}
        new.same = {mapping[v]: k for v, k in self.same.items()}
        return new

    def as_dict(self) -> dict[int, int | None]:
        return dict(self.color)

    def as_list(self) -> list[int | None]:
        return [self.color[v] for v in sorted(self.color)]

    def __repr__(self) -> str:
        sizes = self.class_sizes()
        return f"DefectiveColoring(|3|={sizes[3]}, |4|={sizes[4]}, bounds={self.bounds})"


# ---------------------------------------------------------------------------
# verification


@dataclass
class Verdict:
    """Outcome of :func:`verify`.  Truthy iff the coloring is valid."""

    violations: list[tuple[int, int, int]] = field(default_factory=list)
    empty_classes: list[int] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations and not self.empty_classes

    def __bool__(self) -> bool:
        return self.valid

    def describe(self) -> list[str]:
        lines = [f"EmptyClass: color {c}" for c in self.empty_classes]
        lines += [
            f"vertex {v} (color {c}) has {d} same-colored neighbors"
            for v, c, d in self.violations
        ]
        return lines


def verify(graph, coloring, d1: int, d2: int) -> Verdict:
    """Check a complete coloring against the (d1, d2) definition.

    ``coloring`` may be a :class:`DefectiveColoring`, a mapping or a list of
    colors indexed by vertex.
    """
    adj = adjacency_of(graph)
    if isinstance(coloring, DefectiveColoring):
        colors = coloring.color
    elif isinstance(coloring, Mapping):
        colors = dict(coloring)
    else:
        colors = dict(enumerate(coloring))
    missing = [v for v in adj if colors.get(v) is None]
    if missing:
        raise IncompleteColoring(f"uncolored vertices: {missing[:10]}")
    bounds = {3: d1, 4: d2}
    verdict = Verdict()
    for c in COLORS:
        if not any(colors[v] == c for v in adj):
            verdict.empty_classes.append(c)
    for v in sorted(adj):
        c = colors[v]
        if c not in bounds:
            raise ValueError(f"vertex {v}: invalid color {c!r}")
        d = sum(1 for w in adj[v] if colors[w] == c)
        if d > bounds[c]:
            verdict.violations.append((v, c, d))
    return verdict


def is_saturated(coloring: DefectiveColoring, v: int) -> bool:
    c = coloring.color[v]
    if c is None:
        raise Uncolored(f"vertex {v} is uncolored")
    return coloring.same[v] == coloring.bound(c)


# ---------------------------------------------------------------------------
# flips and recoloring


@dataclass(frozen=True)
class Flipped:
    vertex: int
    old: int
    new: int


@dataclass(frozen=True)
class Blocked:
    vertex: int
    reason: str


def safe_flip(coloring: DefectiveColoring, v: int) -> Flipped | Blocked:
    """Flip ``v`` if the coloring stays valid, otherwise report the obstruction."""
    c = coloring.color[v]
    if c is None:
        raise Uncolored(f"vertex {v} is uncolored")
    reason = coloring.obstruction(v, other(c))
    if reason is not None:
        return Blocked(v, reason)
    coloring.flip(v)
    return Flipped(v, c, other(c))


@dataclass(frozen=True)
class RecoloringPlan:
    """Recolorings followed by the move that colors the target.

    The moves are a simultaneous recoloring: the final state is valid, but a
    prefix may pass through overloaded states (some scripted extensions in
    the literature provably must).
    """

    moves: tuple[tuple[int, int], ...]

    @property
    def depth(self) -> int:
        return len(self.moves)

    @property
    def target(self) -> int:
        return self.moves[-1][0]


def ball(adj: Mapping[int, Iterable[int]], center: int, radius: int) -> dict[int, int]:
    """Graph distances from ``center`` up to ``radius``."""
    dist = {center: 0}
    queue = deque([center])
    while queue:
        u = queue.popleft()
        if dist[u] == radius:
            continue
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


class _Budget(Exception):
    pass


def recoloring_search(
    coloring: DefectiveColoring,
    target: int,
    max_depth: int = 6,
    *,
    radius: int = 3,
    max_nodes: int = 200_000,
    stats: dict | None = None,
) -> RecoloringPlan | None:
    """Shortest set of recolorings after which ``target`` can be colored.

    Flips are restricted to colored vertices within ``radius`` of the target.
    The search is conflict directed: color the target, then repeatedly pick
    the smallest overloaded vertex and branch on flipping it or one of its
    same-colored neighbors.  Any valid final state contains one of those
    flips, so iterative deepening on the number of flips finds a minimum
    plan.  Returns ``None`` when no plan of ``max_depth`` moves exists, or
    when ``max_nodes`` search nodes are exhausted.

    ``coloring`` is not modified.
    """
    if coloring.color[target] is not None:
        raise ValueError(f"target {target} is already colored")
    dist = ball(coloring.adj, target, radius)
    candidates = {v for v in dist if v != target and coloring.color[v] is not None}
    nodes = 0

    def search(work: DefectiveColoring, budget: int, flipped: list[int]) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise _Budget
        region = {target, *work.adj[target]}
        for x in flipped:
            region.add(x)
            region.update(work.adj[x])
        bad = work.overloaded(region)
        if not bad:
            return True
        if budget == 0:
            return False
        w = min(bad)
        c = work.color[w]
        options = {x for x in work.adj[w] if work.color[x] == c}
        options.add(w)
        options.discard(target)
        for x in sorted(options):
            if x not in candidates or x in flipped:
                continue
            work.flip(x)
            flipped.append(x)
            if search(work, budget - 1, flipped):
                return True
            flipped.pop()
            work.flip(x)
        return False

    try:
        for flips in range(max_depth):
            for c in COLORS:
                work = coloring.copy()
                work.assign(target, c)
                flipped: list[int] = []
                if search(work, flips, flipped):
                    moves = tuple((x, work.color[x]) for x in flipped) + ((target, c),)
                    return RecoloringPlan(moves)
    except _Budget:
        return None
    finally:
        if stats is not None:
            stats["nodes"] = stats.get("nodes", 0) + nodes
    return None


def apply_plan(coloring: DefectiveColoring, plan: RecoloringPlan) -> None:
    for v, c in plan.moves:
        coloring.assign(v, c)


# ---------------------------------------------------------------------------
# serialization


def coloring_to_json(coloring) -> str:
    colors = coloring.color if isinstance(coloring, DefectiveColoring) else coloring
    items = colors.items() if isinstance(colors, Mapping) else enumerate(colors)
    return json.dumps([{"vertex": v, "color": c} for v, c in sorted(items)])


def coloring_from_json(text: str | Sequence) -> dict[int, int]:
    data = json.loads(text) if isinstance(text, str) else text
    out = {}
    for item in data:
        v, c = item["vertex"], item["color"]
        if not isinstance(v, int) or c not in COLORS:
            raise ValueError(f"bad coloring entry {item!r}")
        out[v] = c
    return out
