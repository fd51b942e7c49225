"""Hand-built local configurations: disk patches plus padding.

A patch is given by its inner faces, each a cyclic vertex list in one
common orientation.  Every vertex is then padded with pendant leaves and
small stars until it has a prescribed degree and number of 3+-neighbors.
Padding is always inserted in the outer corner, so the inner faces stay
exactly as listed.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from ..graph import PlanarEmbedding, build_embedding


class EmbeddingBuilder:
    def __init__(self, rotations: Mapping[int, Sequence[int]] | None = None):
        self.rot: dict[int, list[int]] = {v: list(r) for v, r in (rotations or {}).items()}

    @classmethod
    def from_faces(cls, faces: Iterable[Sequence[int]]) -> "EmbeddingBuilder":
        succ: dict[int, dict[int, int]] = {}
        for face in faces:
            k = len(face)
            for i in range(k):
                a, b, c = face[i - 1], face[i], face[(i + 1) % k]
                table = succ.setdefault(b, {})
                if a in table and table[a] != c:
                    raise ValueError(f"inconsistent corner at {b}")
                table[a] = c
        rot = {}
        for v, table in succ.items():
            preds = set(table.values())
            starts = sorted(a for a in table if a not in preds) or [min(table)]
            order: list[int] = []
            seen = set()
            for s in starts + sorted(table):
                x = s
                while x not in seen:
                    seen.add(x)
                    order.append(x)
                    if x not in table:
                        break
                    x = table[x]
            rot[v] = order
        return cls(rot)

    @property
    def next_id(self) -> int:
        used = set(self.rot)
        for r in self.rot.values():
            used.update(r)
        return max(used, default=-1) + 1

    def add_edge_outer(self, u: int, v: int) -> None:
        """Join u and v through their outer corners."""
        self.rot.setdefault(u, []).append(v)
        self.rot.setdefault(v, []).append(u)

    def attach_leaf(self, v: int) -> int:
        x = self.next_id
        self.rot[v].append(x)
        self.rot[x] = [v]
        return x

    def attach_star(self, v: int) -> int:
        """Attach a 3-vertex carrying two leaves; it counts as a 3+-neighbor."""
        s = self.next_id
        self.rot[v].append(s)
        self.rot[s] = [v]
        self.attach_leaf(s)
        self.attach_leaf(s)
        return s

    def pad(self, targets: Mapping[int, tuple[int, int]]) -> "EmbeddingBuilder":
        """Give each vertex ``v`` the (degree, number of 3+-neighbors) in ``targets``.

        Existing neighbors are judged by their own target degree when they
        have one.
        """
        final = {v: len(r) for v, r in self.rot.items()}
        final.update({v: d for v, (d, _) in targets.items()})
        for v, (degree, plus) in sorted(targets.items()):
            have = len(self.rot[v])
            have_plus = sum(1 for w in self.rot[v] if final.get(w, 0) >= 3)
            add_plus = plus - have_plus
            add_leaves = degree - have - add_plus
            if add_plus < 0 or add_leaves < 0:
                raise ValueError(f"vertex {v}: cannot reach degree {degree} with {plus} 3+-neighbors")
            for _ in range(add_plus):
                self.attach_star(v)
            for _ in range(add_leaves):
                self.attach_leaf(v)
        return self

    def build(self) -> PlanarEmbedding:
        n = self.next_id
        missing = [v for v in range(n) if v not in self.rot]
        if missing:
            raise ValueError(f"labels must be contiguous; missing {missing[:5]}")
        return build_embedding([self.rot[v] for v in range(n)])


def face_with_classes(layout: Sequence[tuple[int, int]]) -> PlanarEmbedding:
    """A single face whose i-th vertex has (degree, 3+-neighbors) ``layout[i]``.

    Degree-2 entries stay bare; the face is the one traced by dart (0, 1).
    """
    k = len(layout)
    b = EmbeddingBuilder.from_faces([list(range(k))])
    return b.pad({v: s for v, s in enumerate(layout) if s[0] != 2}).build()
