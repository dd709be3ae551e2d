"""Graphs and levelled multipartite graphs over string vertex labels.

Vertex sets are handled internally as integer bitmasks over a per-graph
vertex index (level-major, label-sorted within each level), so every set
operation is deterministic across runs. The public surface speaks plain
labels and frozensets. All types are immutable after construction.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import InvalidArgumentError

__all__ = ["Graph", "MultipartiteGraph", "bits", "level0_ancestors"]


def bits(mask: int) -> Iterator[int]:
    """Yield the indexes of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_labels(labels: Iterable[object]) -> None:
    for v in labels:
        if not isinstance(v, str):
            raise InvalidArgumentError(f"vertex labels must be strings, got {v!r}")


class Graph:
    """A finite simple undirected graph.

    Vertices carry stable string labels and are kept sorted. Duplicate
    edges collapse silently; self-loops are rejected. May be empty; the
    operations that need a non-empty graph check for themselves.
    """

    __slots__ = ("_labels", "_index", "_adj")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()) -> None:
        vertex_list = list(vertices)
        _check_labels(vertex_list)
        labels = tuple(sorted(set(vertex_list)))
        index = {v: i for i, v in enumerate(labels)}
        adj = [0] * len(labels)
        for u, v in edges:
            if u == v:
                raise InvalidArgumentError(f"self-loop on vertex {u!r}")
            iu = index.get(u)
            iv = index.get(v)
            if iu is None or iv is None:
                missing = u if iu is None else v
                raise InvalidArgumentError(f"edge endpoint {missing!r} is not a declared vertex")
            adj[iu] |= 1 << iv
            adj[iv] |= 1 << iu
        self._labels = labels
        self._index = index
        self._adj = tuple(adj)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._labels

    def __len__(self) -> int:
        return len(self._labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def has_edge(self, u: str, v: str) -> bool:
        self._require(u)
        self._require(v)
        return u != v and (self._adj[self._index[u]] >> self._index[v]) & 1 == 1

    def neighbours(self, v: str) -> frozenset[str]:
        self._require(v)
        return frozenset(self._labels[i] for i in bits(self._adj[self._index[v]]))

    def degree(self, v: str) -> int:
        self._require(v)
        return self._adj[self._index[v]].bit_count()

    def edges(self) -> tuple[tuple[str, str], ...]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for i, mask in enumerate(self._adj):
            for j in bits(mask):
                if j > i:
                    out.append((self._labels[i], self._labels[j]))
        out.sort()
        return tuple(out)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def _require(self, v: str) -> None:
        if v not in self._index:
            raise InvalidArgumentError(f"unknown vertex {v!r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._labels, self._adj))

    def __repr__(self) -> str:
        return f"Graph({len(self._labels)} vertices, {self.edge_count()} edges)"


class MultipartiteGraph:
    """An ordered multipartite graph: disjoint non-empty levels V0..V(k-1), k >= 2.

    Every edge joins two distinct levels. Vertices within a level are kept
    in label order and the global vertex index is level-major, which makes
    enumeration over bitmasks deterministic. Instances never mutate;
    ``append_level`` returns a new graph.
    """

    __slots__ = ("_levels", "_labels", "_index", "_level_of", "_level_masks", "_adj")

    def __init__(self, levels: Sequence[Iterable[str]], edges: Iterable[tuple[str, str]] = ()) -> None:
        level_tuples: list[tuple[str, ...]] = []
        for li, level in enumerate(levels):
            members = list(level)
            _check_labels(members)
            if len(set(members)) != len(members):
                raise InvalidArgumentError(f"duplicate vertex label inside level {li}")
            if not members:
                raise InvalidArgumentError(f"level {li} is empty")
            level_tuples.append(tuple(sorted(members)))
        if len(level_tuples) < 2:
            raise InvalidArgumentError("a multipartite graph needs at least two levels")

        labels: list[str] = []
        level_of: list[int] = []
        index: dict[str, int] = {}
        for li, members in enumerate(level_tuples):
            for v in members:
                if v in index:
                    raise InvalidArgumentError(f"vertex {v!r} appears in more than one level")
                index[v] = len(labels)
                labels.append(v)
                level_of.append(li)

        masks: list[int] = []
        offset = 0
        for members in level_tuples:
            masks.append(((1 << len(members)) - 1) << offset)
            offset += len(members)

        adj = [0] * len(labels)
        for u, v in edges:
            iu = index.get(u)
            iv = index.get(v)
            if iu is None or iv is None:
                missing = u if iu is None else v
                raise InvalidArgumentError(f"edge endpoint {missing!r} is not a declared vertex")
            if level_of[iu] == level_of[iv]:
                raise InvalidArgumentError(f"edge {u!r}-{v!r} stays inside level {level_of[iu]}")
            adj[iu] |= 1 << iv
            adj[iv] |= 1 << iu

        self._levels = tuple(level_tuples)
        self._labels = tuple(labels)
        self._index = index
        self._level_of = tuple(level_of)
        self._level_masks = tuple(masks)
        self._adj = tuple(adj)

    @property
    def levels(self) -> tuple[tuple[str, ...], ...]:
        return self._levels

    @property
    def level_count(self) -> int:
        return len(self._levels)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._labels

    def __len__(self) -> int:
        return len(self._labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def level_of(self, v: str) -> int:
        self._require(v)
        return self._level_of[self._index[v]]

    def neighbourhood(self, x: str) -> frozenset[str]:
        """N(x) across all levels."""
        self._require(x)
        return self._labels_from_mask(self._adj[self._index[x]])

    def neighbourhood_at_level(self, x: str, i: int) -> frozenset[str]:
        """N_i(x): the neighbours of ``x`` inside level ``i``. Pure query."""
        self._require(x)
        if not 0 <= i < len(self._levels):
            raise InvalidArgumentError(f"level index {i} out of range 0..{len(self._levels) - 1}")
        return self._labels_from_mask(self._adj[self._index[x]] & self._level_masks[i])

    def degree(self, v: str) -> int:
        self._require(v)
        return self._adj[self._index[v]].bit_count()

    def edges(self) -> tuple[tuple[str, str], ...]:
        """Every edge as (lower-level endpoint, higher-level endpoint), sorted."""
        out = []
        for i, mask in enumerate(self._adj):
            for j in bits(mask):
                if j > i:
                    # level-major index order: j > i implies level_of[j] > level_of[i]
                    out.append((self._labels[i], self._labels[j]))
        out.sort()
        return tuple(out)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def append_level(self, new_vertices: Sequence[tuple[str, Iterable[str]]]) -> MultipartiteGraph:
        """Return a (k+1)-level graph with one extra level on top.

        ``new_vertices`` holds (label, neighbours) pairs; neighbours must
        already be vertices of this graph. Existing levels and edges are
        retained unchanged. An empty list is rejected: callers model "no
        new vertices" as a non-effective step, not as an empty level.
        """
        if not new_vertices:
            raise InvalidArgumentError("append_level needs at least one new vertex")
        fresh = [label for label, _ in new_vertices]
        if len(set(fresh)) != len(fresh):
            raise InvalidArgumentError("duplicate label among new vertices")
        new_edges: list[tuple[str, str]] = list(self.edges())
        for label, nbrs in new_vertices:
            for u in nbrs:
                new_edges.append((u, label))
        return MultipartiteGraph(self._levels + (tuple(fresh),), new_edges)

    # -- internal helpers shared inside the package ---------------------

    def _labels_from_mask(self, mask: int) -> frozenset[str]:
        return frozenset(self._labels[i] for i in bits(mask))

    def _sorted_labels_from_mask(self, mask: int) -> tuple[str, ...]:
        return tuple(sorted(self._labels[i] for i in bits(mask)))

    def _mask_from_labels(self, labels: Iterable[str]) -> int:
        mask = 0
        for v in labels:
            self._require(v)
            mask |= 1 << self._index[v]
        return mask

    def _require(self, v: str) -> None:
        if v not in self._index:
            raise InvalidArgumentError(f"unknown vertex {v!r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultipartiteGraph):
            return NotImplemented
        return self._levels == other._levels and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._levels, self._adj))

    def __repr__(self) -> str:
        sizes = ",".join(str(len(lv)) for lv in self._levels)
        return f"MultipartiteGraph(levels=[{sizes}], {self.edge_count()} edges)"


def _ancestor_masks(m: MultipartiteGraph) -> list[int]:
    """Level-0 ancestor bitmask per vertex, following strictly descending edges."""
    anc = [0] * len(m._labels)
    for i in range(len(m._labels)):
        li = m._level_of[i]
        if li == 0:
            anc[i] = 1 << i
            continue
        below = 0
        for j in bits(m._adj[i]):
            if m._level_of[j] < li:
                below |= anc[j]
        anc[i] = below
    return anc


def level0_ancestors(m: MultipartiteGraph) -> dict[str, frozenset[str]]:
    """Map each vertex to the level-0 vertices reachable by descending paths."""
    anc = _ancestor_masks(m)
    return {
        m._labels[i]: m._labels_from_mask(anc[i])
        for i in range(len(m._labels))
    }
