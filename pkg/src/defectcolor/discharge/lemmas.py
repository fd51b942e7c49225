"""Structural checks: configurations a minimal counterexample cannot contain.

Every check is purely local (degrees, classes, face composition).  A
violation names the statement it breaks, the witnessing elements, and the
reduction that the configuration licenses.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import PlanarEmbedding, VertexTag
from .ledger import eid, fid, vid
from .templates import SpecialFacePattern, match_special_faces

EDGE_REMOVAL = "edge-removal"
GADGET = "three-vertex-gadget"
VERTEX_REMOVAL = "vertex-removal"


@dataclass(frozen=True)
class LemmaViolation:
    lemma: str
    witnesses: tuple[str, ...]
    licenses: str | None
    detail: str

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "witnesses": list(self.witnesses),
            "licenses": self.licenses,
            "detail": self.detail,
        }


def _is_cycle(walk) -> bool:
    return len(set(walk)) == len(walk)


def check_lemmas(
    emb: PlanarEmbedding,
    special: dict[int, str] | None = None,
    templates: dict[str, SpecialFacePattern] | None = None,
    *,
    no_1_vertex: bool = False,
) -> list[LemmaViolation]:
    if special is None:
        special = match_special_faces(emb, templates)
    cls = emb.classes
    deg = emb.degrees
    out: list[LemmaViolation] = []

    def add(lemma, witnesses, licenses, detail):
        out.append(LemmaViolation(lemma, tuple(witnesses), licenses, detail))

    for u, v in emb.edges:
        if deg[u] <= 4 and deg[v] <= 4:
            add("2.1", [eid(u, v), vid(u), vid(v)], EDGE_REMOVAL, f"both endpoints have degree <= 4 ({deg[u]}, {deg[v]})")

    for v in range(emb.n):
        d = deg[v]
        nbrs = emb.rotations[v]
        if d == 3:
            add("2.2", [vid(v)], GADGET, "3-vertex")
        if d == 1 and no_1_vertex:
            add("1-vertex", [vid(v)], VERTEX_REMOVAL, "1-vertex")
        if d == 2:
            lo, hi = sorted(deg[w] for w in nbrs)
            if lo < 5 or hi < 6:
                add("2.3(i)", [vid(v)], VERTEX_REMOVAL, f"2-vertex with neighbor degrees {lo}, {hi}")
        elif d in (4, 5):
            if not any(deg[w] >= 9 or (deg[w] >= 6 and cls[w].plus_neighbors >= 2) for w in nbrs):
                add("2.3(ii)", [vid(v)], VERTEX_REMOVAL, f"{d}-vertex without a 9+ or 6s+ neighbor")
        elif d in (6, 7, 8):
            if not any(deg[w] >= 9 or (deg[w] >= 5 and cls[w].plus_neighbors >= 2) for w in nbrs):
                add("2.3(iii)", [vid(v)], VERTEX_REMOVAL, f"{d}-vertex without a 9+ or 5s+ neighbor")
        if d >= 4 and cls[v].tag is VertexTag.UNCLASSIFIED_POOR:
            add("unclassified-poor", [vid(v)], VERTEX_REMOVAL, f"{d}-vertex with no 3+-neighbors")

    five_two = set()
    for face in emb.faces:
        walk = face.walk
        if face.degree == 5 and _is_cycle(walk):
            if sum(1 for v in walk if deg[v] == 2) == 2:
                five_two.add(face.index)

    for face in emb.faces:
        walk = face.walk
        if not _is_cycle(walk) or face.degree not in (5, 6, 7):
            continue
        fc = [cls[v] for v in walk]
        w = [fid(face.index)] + [vid(v) for v in walk]
        twos = sum(1 for c in fc if c.degree == 2)
        p5 = sum(1 for c in fc if c.is_5p)
        s5 = sum(1 for c in fc if c.is_5s)
        p6 = sum(1 for c in fc if c.is_6p)
        name = special.get(face.index)

        if face.degree == 6:
            if twos == 3:
                others = sorted(c.degree for c in fc if c.degree != 2)
                if 5 in others:
                    others.remove(5)
                    if any(x < 7 for x in others):
                        add("2.4(a)", w, VERTEX_REMOVAL, "three 2-vertices and a 5-vertex, other vertices not all 7+")
            elif twos == 2:
                if p5 > 2:
                    add("2.4(b)", w, VERTEX_REMOVAL, f"{p5} 5p-vertices")
                elif p5 == 1 and s5 + p6 > 2:
                    add("2.4(b1)", w, VERTEX_REMOVAL, f"one 5p-vertex and {s5 + p6} 5s/6p-vertices")
                elif p5 == 2 and name != "F6a" and s5 + p6 > 0:
                    add("2.4(b2)", w, VERTEX_REMOVAL, "two 5p-vertices with a 5s/6p-vertex, not F6a")
            elif twos == 1:
                if p5 > 1:
                    add("2.4(c)", w, VERTEX_REMOVAL, f"{p5} 5p-vertices")
                elif p5 == 1 and s5 + p6 > 2:
                    add("2.4(c1)", w, VERTEX_REMOVAL, f"one 5p-vertex and {s5 + p6} 5s/6p-vertices")
                elif p5 == 0 and s5 + p6 > 4:
                    add("2.4(c2)", w, VERTEX_REMOVAL, f"{s5 + p6} 5s/6p-vertices")
            elif twos == 0:
                if any(c.poor_like for c in fc) or s5 > 4:
                    add("2.4(d)", w, VERTEX_REMOVAL, "poor vertex or more than four 5s-vertices")
            if name == "F6b":
                reported = set()
                for a, b in zip(walk, walk[1:] + walk[:1]):
                    other = emb.face_of(b, a)
                    if other in five_two and other not in reported:
                        reported.add(other)
                        add("2.5", [fid(face.index), fid(other), eid(a, b)], VERTEX_REMOVAL,
                            "F6b shares an edge with a 5-face with two 2-vertices")
        elif face.degree == 5:
            if twos == 1 and p5 + s5 + p6 > 2 and name not in ("F5c", "F5d"):
                add("2.6", w, VERTEX_REMOVAL, f"one 2-vertex and {p5 + s5 + p6} 5p/5s/6p-vertices")
        elif face.degree == 7:
            light = twos + p5 + s5 + p6
            if light > 6 and s5 < 2 and name != "F7":
                add("2.7", w, VERTEX_REMOVAL, "seven 2/5p/5s/6p-vertices, at most one 5s, not F7")
    return out
