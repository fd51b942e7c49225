"""Special-face templates and the matcher.

Class tokens:

``2``        a 2-vertex
``5p``       degree exactly 5, poor (``s`` semi-poor, ``r`` rich)
``7+``       degree at least 7
``7s+``      degree at least 7 with at least two 3+-neighbors
``7r+``      rich vertex of degree at least 7
``a|b``      either token

An entry may also carry an ``exclude`` list of tokens it must not satisfy.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

from ..graph import PlanarEmbedding, VertexClass, VertexTag

TABLE_FILE = "special_faces.json"
_TOKEN = re.compile(r"(\d+)([psr]?)(\+?)")


class AmbiguousMatch(RuntimeError):
    pass


class TemplateError(ValueError):
    pass


def token_matches(token: str, vc: VertexClass) -> bool:
    for alt in token.split("|"):
        alt = alt.strip()
        if alt == "2":
            if vc.degree == 2:
                return True
            continue
        m = _TOKEN.fullmatch(alt)
        if not m:
            raise TemplateError(f"bad class token {alt!r}")
        d, kind, plus = int(m.group(1)), m.group(2), m.group(3) == "+"
        if (vc.degree < d) if plus else (vc.degree != d):
            continue
        if vc.degree == 2 and d > 2:
            continue
        if kind == "":
            return True
        if kind == "p" and not plus and vc.poor_like:
            return True
        if kind == "s" and not plus and vc.tag is VertexTag.SEMI_POOR:
            return True
        if kind == "s" and plus and vc.plus_neighbors >= 2:
            return True
        if kind == "r" and vc.tag is VertexTag.RICH:
            return True
    return False


@dataclass(frozen=True)
class Slot:
    token: str
    exclude: tuple[str, ...] = ()
    basis: str = "pinned"

    def matches(self, vc: VertexClass) -> bool:
        return token_matches(self.token, vc) and not any(token_matches(t, vc) for t in self.exclude)


@dataclass(frozen=True)
class SpecialFacePattern:
    name: str
    template: tuple[Slot, ...]
    note: str = ""

    @property
    def degree(self) -> int:
        return len(self.template)

    @property
    def open_fields(self) -> list[int]:
        return [i for i, s in enumerate(self.template) if s.basis == "open"]

    @property
    def two_count(self) -> int:
        return sum(1 for s in self.template if s.token == "2")

    def matches(self, classes: Sequence[VertexClass]) -> bool:
        k = len(self.template)
        if len(classes) != k:
            return False
        # "2" is the only token a 2-vertex satisfies
        if sum(1 for c in classes if c.degree == 2) != self.two_count:
            return False
        for seq in (list(classes), list(reversed(classes))):
            for shift in range(k):
                if all(self.template[i].matches(seq[(i + shift) % k]) for i in range(k)):
                    return True
        return False


def load_templates(path: str | Path | None = None) -> dict[str, SpecialFacePattern]:
    if path is None:
        text = resources.files(__package__).joinpath(TABLE_FILE).read_text()
    else:
        text = Path(path).read_text()
    data = json.loads(text)
    out = {}
    for name, entry in data.items():
        if name.startswith("_"):
            continue
        slots = tuple(
            Slot(s["class"], tuple(s.get("exclude", ())), s.get("basis", "pinned"))
            for s in entry["template"]
        )
        for s in slots:
            for t in (s.token, *s.exclude):
                for alt in t.split("|"):
                    if alt.strip() != "2" and not _TOKEN.fullmatch(alt.strip()):
                        raise TemplateError(f"{name}: bad class token {alt!r}")
        out[name] = SpecialFacePattern(name, slots, entry.get("note", ""))
    return out


def match_face(classes: Sequence[VertexClass], templates: dict[str, SpecialFacePattern]) -> str | None:
    hits = [name for name, p in templates.items() if p.matches(classes)]
    if len(hits) > 1:
        raise AmbiguousMatch(f"face matches several templates: {hits}")
    return hits[0] if hits else None


def match_special_faces(
    emb: PlanarEmbedding, templates: dict[str, SpecialFacePattern] | None = None
) -> dict[int, str]:
    """Face index -> template name, for the faces that match one."""
    templates = load_templates() if templates is None else templates
    degrees = {p.degree for p in templates.values()}
    out = {}
    for face in emb.faces:
        if face.degree not in degrees:
            continue
        name = match_face([emb.classes[v] for v in face.walk], templates)
        if name is not None:
            out[face.index] = name
    return out
