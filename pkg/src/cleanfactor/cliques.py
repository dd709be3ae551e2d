"""Maximal-clique enumeration and the vertex/clique incidence construction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidArgumentError
from .graphs import Graph, MultipartiteGraph, bits

__all__ = [
    "CliqueFamily",
    "clique_label",
    "maximal_cliques",
    "vertex_clique_incidence",
    "anti_matching",
]


def clique_label(members: Iterable[str]) -> str:
    """Canonical level-1 label for a clique: 'K:' plus its sorted members."""
    return "K:" + ",".join(sorted(members))


@dataclass(frozen=True)
class CliqueFamily:
    """The inclusion-maximal cliques of a graph, in canonical order.

    Every vertex of the source graph appears in at least one member;
    isolated vertices contribute singleton cliques.
    """

    graph: Graph
    cliques: tuple[frozenset[str], ...]

    def __iter__(self) -> Iterator[frozenset[str]]:
        return iter(self.cliques)

    def __len__(self) -> int:
        return len(self.cliques)

    def __contains__(self, item: object) -> bool:
        return item in self.cliques

    def labels(self) -> tuple[str, ...]:
        return tuple(clique_label(c) for c in self.cliques)


def _clique_masks(adj: tuple[int, ...]) -> list[int]:
    # Bron-Kerbosch with a greedy pivot. Deterministic: candidates are
    # scanned in bit order and pivot ties keep the lowest index.
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        pivot = -1
        best = -1
        scan = p | x
        while scan:
            low = scan & -scan
            u = low.bit_length() - 1
            scan ^= low
            size = (p & adj[u]).bit_count()
            if size > best:
                best = size
                pivot = u
        cand = p & ~adj[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(r | low, p & adj[v], x & adj[v])
            p ^= low
            x |= low

    if adj:
        expand(0, (1 << len(adj)) - 1, 0)
    return out


def maximal_cliques(g: Graph) -> CliqueFamily:
    """Enumerate the inclusion-maximal cliques of ``g``.

    The family is sorted lexicographically on the sorted member lists.
    Raises on the empty graph, which has no clique family.
    """
    if len(g) == 0:
        raise InvalidArgumentError("maximal cliques of the empty graph are undefined")
    labels = g.vertices
    found = [frozenset(labels[i] for i in bits(m)) for m in _clique_masks(g._adj)]
    found.sort(key=lambda c: tuple(sorted(c)))
    return CliqueFamily(graph=g, cliques=tuple(found))


def vertex_clique_incidence(g: Graph) -> MultipartiteGraph:
    """The bipartite graph with the vertices of ``g`` below its maximal cliques.

    Level 0 holds the vertices, level 1 one vertex per maximal clique, and
    membership gives the edges.
    """
    family = maximal_cliques(g)
    level1: list[str] = []
    edges: list[tuple[str, str]] = []
    for clique in family:
        label = clique_label(clique)
        level1.append(label)
        edges.extend((v, label) for v in clique)
    return MultipartiteGraph((g.vertices, level1), edges)


def anti_matching(n: int) -> MultipartiteGraph:
    """Bipartite complement of a perfect matching: u_i adjacent to b_j iff i != j."""
    if n < 2:
        raise InvalidArgumentError("anti-matching needs n >= 2")
    bottoms = [f"b{i}" for i in range(1, n + 1)]
    uppers = [f"u{i}" for i in range(1, n + 1)]
    edges = [(bottoms[j], uppers[i]) for i in range(n) for j in range(n) if i != j]
    return MultipartiteGraph((bottoms, uppers), edges)
