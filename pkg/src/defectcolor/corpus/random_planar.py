"""Random planar embeddings of girth at least 5.

A random stacked triangulation is subdivided (girth 6) and then perturbed
by local moves that cannot create a cycle shorter than 5: smoothing a
2-vertex whose neighbors are far apart, attaching a pendant vertex, and
subdividing an edge.
"""

from __future__ import annotations

import random
from collections import deque

from ..graph import PlanarEmbedding, build_embedding, girth


def _triangulation(k: int, rng: random.Random) -> dict[int, list[int]]:
    rot = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
    faces = [(0, 1, 2), (0, 2, 1)]
    for x in range(3, k):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        # In the corner at b the face runs a -> b -> c, so x goes right after a.
        for p, q in ((a, c), (b, a), (c, b)):
            r = rot[p]
            r.insert(r.index(q) + 1, x)
        rot[x] = [a, c, b]
        faces[i] = (a, b, x)
        faces.append((b, c, x))
        faces.append((c, a, x))
    return rot


def _subdivide(rot: dict[int, list[int]], u: int, v: int, m: int) -> None:
    rot[u][rot[u].index(v)] = m
    rot[v][rot[v].index(u)] = m
    rot[m] = [u, v]


def _far_apart(rot: dict[int, list[int]], a: int, b: int, skip: int, limit: int) -> bool:
    """True iff dist(a, b) >= limit in the graph without ``skip``."""
    dist = {a: 0}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if dist[u] + 1 >= limit:
            continue
        for w in rot[u]:
            if w == skip or w in dist:
                continue
            if w == b:
                return False
            dist[w] = dist[u] + 1
            queue.append(w)
    return True


def _smooth(rot: dict[int, list[int]], w: int) -> bool:
    a, b = rot[w]
    if b in rot[a] or not _far_apart(rot, a, b, w, 4):
        return False
    rot[a][rot[a].index(w)] = b
    rot[b][rot[b].index(w)] = a
    del rot[w]
    return True


def _relabel(rot: dict[int, list[int]]) -> list[list[int]]:
    index = {v: i for i, v in enumerate(sorted(rot))}
    return [[index[w] for w in rot[v]] for v in sorted(rot)]


def gen_random(n: int, seed: int = 0, *, churn: float = 0.25) -> PlanarEmbedding:
    """A connected planar embedding with exactly ``n`` vertices and girth >= 5.

    ``|E| - |V|`` is fixed by the size of the starting triangulation (every
    move changes both counts by one), so that size is drawn at random to
    vary the density.
    """
    if n < 5:
        raise ValueError("need n >= 5")
    rng = random.Random(seed)
    k = rng.randint(max(3, (n + 6) // 8), max(3, (3 * n) // 10))
    while True:
        rot = _grow(n, k, rng, churn)
        if rot is not None:
            break
        k = max(3, k - max(1, k // 10))
    emb = build_embedding(_relabel(rot))
    g = girth(emb)
    assert g is None or g >= 5, f"generator produced girth {g}"
    return emb


def _grow(n: int, k: int, rng: random.Random, churn: float) -> dict[int, list[int]] | None:
    rot = _triangulation(k, rng)
    fresh = k
    for u in range(k):
        for v in list(rot[u]):
            if u < v:
                _subdivide(rot, u, v, fresh)
                fresh += 1

    def grow() -> None:
        nonlocal fresh
        u = rng.choice(sorted(rot))
        if rng.random() < 0.5:
            rot[u].insert(rng.randrange(len(rot[u]) + 1), fresh)
            rot[fresh] = [u]
        else:
            _subdivide(rot, u, rng.choice(rot[u]), fresh)
        fresh += 1

    def shrink() -> bool:
        cands = sorted(v for v, r in rot.items() if len(r) == 2)
        rng.shuffle(cands)
        return any(_smooth(rot, w) for w in cands)

    while len(rot) > n:
        if not shrink():
            return None
    for _ in range(int(churn * n)):
        if len(rot) < n and rng.random() < 0.5:
            grow()
        else:
            shrink()
    while len(rot) < n:
        grow()
    return rot
