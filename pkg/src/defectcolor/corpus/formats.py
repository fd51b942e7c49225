"""graph6, JSON embedding and DOT formats."""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from ..graph import PlanarEmbedding, build_embedding

HEADER = ">>graph6<<"


class FormatError(ValueError):
    pass


class MalformedHeader(FormatError):
    pass


class TruncatedBits(FormatError):
    pass


class SchemaViolation(FormatError):
    pass


# ---------------------------------------------------------------------------
# graph6


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph too large for graph6: {n}")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, number of header bytes)."""
    if not data:
        raise MalformedHeader("empty graph6 string")

    def chunk(bs: bytes) -> int:
        if len(bs) < needed or any(not 63 <= b <= 126 for b in bs):
            raise MalformedHeader("bad size field")
        out = 0
        for b in bs:
            out = (out << 6) | (b - 63)
        return out

    if data[0] != 126:
        if not 63 <= data[0] <= 125:
            raise MalformedHeader(f"bad size byte {data[0]!r}")
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        needed = 6
        return chunk(data[2:8]), 8
    needed = 3
    return chunk(data[1:4]), 4


def write_graph6(graph, *, header: bool = False) -> str:
    """Encode a graph (embedding, adjacency lists, or ``(n, edges)``) as graph6."""
    n, edges = _as_edges(graph)
    bits = bytearray((n * (n - 1) // 2 + 5) // 6 * 6)
    for u, v in edges:
        if u == v:
            raise ValueError("graph6 cannot store loops")
        i, j = min(u, v), max(u, v)
        bits[j * (j - 1) // 2 + i] = 1
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return (HEADER if header else "") + _encode_n(n) + body


def parse_graph6(text: str | bytes) -> tuple[int, list[tuple[int, int]]]:
    """Decode one graph6 line into ``(n, sorted edge list)``."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    n, k = _decode_n(data)
    body = data[k:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise TruncatedBits(f"expected {need} data bytes, got {len(body)}")
    if len(body) > need:
        raise MalformedHeader(f"{len(body) - need} trailing bytes")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[pos // 6]
            if not 63 <= byte <= 126:
                raise MalformedHeader(f"bad data byte {byte!r}")
            if (byte - 63) >> (5 - pos % 6) & 1:
                edges.append((i, j))
            pos += 1
    return n, sorted(edges)


def _as_edges(graph) -> tuple[int, list[tuple[int, int]]]:
    if isinstance(graph, PlanarEmbedding):
        return graph.n, list(graph.edges)
    if isinstance(graph, tuple) and len(graph) == 2 and isinstance(graph[0], int):
        return graph[0], [tuple(e) for e in graph[1]]
    adj = list(graph.values()) if isinstance(graph, Mapping) else list(graph)
    return len(adj), [(u, w) for u, r in enumerate(adj) for w in r if u < w]


# ---------------------------------------------------------------------------
# JSON embedding


def embedding_to_dict(emb: PlanarEmbedding) -> dict:
    return {"n": emb.n, "rotations": [list(r) for r in emb.rotations]}


def write_json_embedding(emb: PlanarEmbedding) -> str:
    return json.dumps(embedding_to_dict(emb))


def embedding_from_dict(data) -> PlanarEmbedding:
    if not isinstance(data, dict):
        raise SchemaViolation("top level must be an object")
    n, rotations = data.get("n"), data.get("rotations")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise SchemaViolation("'n' must be a nonnegative integer")
    if not isinstance(rotations, list) or len(rotations) != n:
        raise SchemaViolation("'rotations' must be a list of length n")
    for r in rotations:
        if not isinstance(r, list) or not all(isinstance(w, int) and not isinstance(w, bool) for w in r):
            raise SchemaViolation("each rotation must be a list of integers")
    return build_embedding(rotations)


def parse_json_embedding(text: str) -> PlanarEmbedding:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaViolation(f"invalid JSON: {exc}") from None
    return embedding_from_dict(data)


# ---------------------------------------------------------------------------
# DOT (write only)


def write_dot(emb: PlanarEmbedding, labels: Mapping[int, str] | None = None, *, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(emb.n):
        label = labels.get(v) if labels else None
        text = f"{v}" if label is None else f"{v}\\n{label}"
        lines.append(f'  v{v} [label="{text}"];')
    for u, v in emb.edges:
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graphs(lines: Iterable[str]) -> list[tuple[int, list[tuple[int, int]]]]:
    return [parse_graph6(line) for line in lines if line.strip()]
