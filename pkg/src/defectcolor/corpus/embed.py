"""Planar embeddings of edge lists (networkx does the planarity test)."""

from __future__ import annotations

from typing import Iterable

import networkx as nx

from ..graph import PlanarEmbedding, build_embedding

DEFAULT_LIMIT = 512


class NonPlanar(ValueError):
    def __init__(self, witness: list[tuple[int, int]] | None):
        msg = "graph is not planar"
        if witness is not None:
            msg += f" (Kuratowski subgraph with {len(witness)} edges)"
        super().__init__(msg)
        self.witness = witness


class TooLarge(ValueError):
    pass


def embed(
    edges: Iterable[tuple[int, int]],
    n: int | None = None,
    *,
    limit: int = DEFAULT_LIMIT,
    witness: bool = True,
) -> PlanarEmbedding:
    """Rotation system for a simple graph on vertices ``0..n-1``.

    Raises :class:`NonPlanar`, carrying a Kuratowski subdivision when
    ``witness`` is set.
    """
    edges = [tuple(e) for e in edges]
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    if n > limit:
        raise TooLarge(f"{n} vertices exceeds the embedding limit {limit}")
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    planar, cert = nx.check_planarity(g, counterexample=witness)
    if not planar:
        w = sorted(tuple(sorted(e)) for e in cert.edges) if witness else None
        raise NonPlanar(w)
    return build_embedding([list(cert.neighbors_cw_order(v)) for v in range(n)])


def is_planar(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return nx.check_planarity(g)[0]
