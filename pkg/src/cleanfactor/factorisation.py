"""Candidate families and the single factorisation step.

A factorisation step looks at the bipartite relation between the upper
level of a multipartite graph and everything below it. A candidate is a
seed of at least two upper vertices together with their common
neighbourhood, itself of size at least two. The weak variant accepts all
such candidates; the factor and clean variants add level-local
constraints. The step appends one new vertex per inclusion-maximal
candidate, adjacent to exactly the candidate's members.

Two enumeration paths exist on purpose. ``candidate_family`` walks every
admissible seed and returns the whole (deduplicated) family, which is what
the definitions describe and what the tests compare against brute force.
``factorise`` only needs the maximal candidates and gets them directly
from the closed seeds of the upper/lower Galois connection, restricted to
the admissible neighbourhood-equality class where the clean variant
demands one. The two paths must agree; the test suite checks that they do.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidArgumentError
from .graphs import MultipartiteGraph, _ancestor_masks, bits

__all__ = [
    "OperatorKind",
    "CandidateSet",
    "StepResult",
    "candidate_family",
    "maximal_candidates",
    "factorise",
    "particularise",
]


class OperatorKind(enum.Enum):
    """The three factorisation variants, from least to most constrained."""

    WEAK = "weak"
    FACTOR = "factor"
    CLEAN = "clean"


@dataclass(frozen=True)
class CandidateSet:
    """One candidate X: an upper seed plus its common lower neighbourhood.

    ``lower_by_level[i]`` is the slice of the common neighbourhood on level
    i; the upper side and the whole lower side both have at least two
    vertices (the non-simple condition).
    """

    upper: frozenset[str]
    lower_by_level: tuple[frozenset[str], ...]

    def __post_init__(self) -> None:
        if len(self.upper) < 2:
            raise InvalidArgumentError("a candidate needs at least two upper vertices")
        if sum(len(part) for part in self.lower_by_level) < 2:
            raise InvalidArgumentError("a candidate needs at least two lower vertices")

    @property
    def lower(self) -> frozenset[str]:
        return frozenset().union(*self.lower_by_level)

    @property
    def members(self) -> frozenset[str]:
        return self.upper | self.lower

    def lower_at(self, i: int) -> frozenset[str]:
        return self.lower_by_level[i]


@dataclass(frozen=True)
class StepResult:
    """Outcome of one factorisation: the extended graph, or not effective.

    When effective, ``new_level`` lists the chosen candidates in the same
    order as the freshly appended vertices.
    """

    effective: bool
    graph: MultipartiteGraph | None
    new_level: tuple[CandidateSet, ...]


def _plan(op: OperatorKind, k: int) -> tuple[tuple[int, ...], int | None]:
    """Per-operator constraints at upper level k-1.

    Returns the level indexes on which the common neighbourhood must keep
    at least two vertices, and the level on which all seed members must
    have identical neighbourhoods (or None).
    """
    if op is OperatorKind.WEAK:
        return (), None
    if op is OperatorKind.FACTOR:
        return (k - 2,), None
    if k == 2:
        return (), None
    if k == 3:
        return (1, 0), None
    if k == 4:
        return (2, 1), 0
    return (k - 2, 1), k - 3


def _require_multipartite(m: MultipartiteGraph) -> None:
    if m.level_count < 2:
        raise InvalidArgumentError("factorisation needs at least two levels")


def _candidate_from_masks(m: MultipartiteGraph, seed: int, common: int) -> CandidateSet:
    k = m.level_count
    upper = m._labels_from_mask(seed)
    lowers = tuple(m._labels_from_mask(common & m._level_masks[i]) for i in range(k - 1))
    return CandidateSet(upper=upper, lower_by_level=lowers)


def _candidate_sort_key(c: CandidateSet) -> tuple:
    return (tuple(sorted(c.members)), tuple(sorted(c.upper)))


def candidate_family(m: MultipartiteGraph, op: OperatorKind) -> set[CandidateSet]:
    """All candidates of the given variant, deduplicated by their full set.

    Seeds are grown depth-first in index order; a branch is abandoned as
    soon as a cardinality constraint fails, which is sound because common
    neighbourhoods only shrink as the seed grows.
    """
    _require_multipartite(m)
    k = m.level_count
    card_levels, eq_level = _plan(op, k)
    adj = m._adj
    lmask = m._level_masks
    eq_mask = lmask[eq_level] if eq_level is not None else 0
    uppers = list(bits(lmask[k - 1]))
    base_common = 0
    for i in range(k - 1):
        base_common |= lmask[i]

    found: dict[int, tuple[int, int]] = {}

    def extend(start: int, seed: int, size: int, common: int, eqref: int | None) -> None:
        for t in range(start, len(uppers)):
            u = uppers[t]
            a = adj[u]
            if eqref is not None and (a & eq_mask) != eqref:
                continue
            c = common & a
            if c.bit_count() < 2:
                continue
            if any((c & lmask[i]).bit_count() < 2 for i in card_levels):
                continue
            s = seed | (1 << u)
            if size >= 1:
                found[s | c] = (s, c)
            ref = eqref
            if eq_level is not None and ref is None:
                ref = a & eq_mask
            extend(t + 1, s, size + 1, c, ref)

    extend(0, 0, 0, base_common, None)
    return {_candidate_from_masks(m, seed, common) for seed, common in found.values()}


def maximal_candidates(family: Iterable[CandidateSet]) -> set[CandidateSet]:
    """The inclusion-maximal members of a family, compared on full sets."""
    pool = sorted(set(family), key=lambda c: (-len(c.members),) + _candidate_sort_key(c))
    kept: list[CandidateSet] = []
    for cand in pool:
        if not any(cand.members < other.members for other in kept):
            kept.append(cand)
    return set(kept)


def _concepts(members: Sequence[int], adj: Sequence[int], base_common: int) -> Iterator[tuple[int, int]]:
    """Closed seed sets of the relation between ``members`` and the lower region.

    Yields (seed mask over global indexes, common neighbourhood mask) for
    every seed that is closed, i.e. already contains every member whose
    neighbourhood covers the seed's common neighbourhood. Enumeration is
    Ganter's lectic-order walk, so the output order is deterministic.
    """
    count = len(members)
    full = (1 << count) - 1

    def close(local: int) -> tuple[int, int]:
        common = base_common
        t = local
        while t:
            low = t & -t
            common &= adj[members[low.bit_length() - 1]]
            t ^= low
        closed = 0
        for i in range(count):
            if common & ~adj[members[i]] == 0:
                closed |= 1 << i
        return closed, common

    def to_global(local: int) -> int:
        g = 0
        for i in bits(local):
            g |= 1 << members[i]
        return g

    cur, common = close(0)
    yield to_global(cur), common
    while cur != full:
        for i in range(count - 1, -1, -1):
            if (cur >> i) & 1:
                continue
            below = (1 << i) - 1
            cand, cand_common = close((cur & below) | (1 << i))
            if (cand & below) & ~cur == 0:
                cur, common = cand, cand_common
                yield to_global(cur), common
                break
        else:
            break


def _maximal_family(m: MultipartiteGraph, op: OperatorKind, threads: int = 1) -> list[tuple[int, int]]:
    """Maximal candidates as (seed, common) mask pairs.

    For the clean variant at five or more levels the seed members must
    share their neighbourhood three levels down (two down at k=4), so the
    upper level splits into independent classes; each class contributes
    the closed seeds of its own subrelation. Classes never dominate each
    other because seeds from different classes are incomparable.
    """
    _require_multipartite(m)
    k = m.level_count
    card_levels, eq_level = _plan(op, k)
    adj = m._adj
    lmask = m._level_masks
    uppers = list(bits(lmask[k - 1]))
    base_common = 0
    for i in range(k - 1):
        base_common |= lmask[i]

    if eq_level is None:
        groups = [uppers]
    else:
        eq_mask = lmask[eq_level]
        buckets: dict[int, list[int]] = {}
        for u in uppers:
            buckets.setdefault(adj[u] & eq_mask, []).append(u)
        groups = [grp for grp in buckets.values() if len(grp) >= 2]
        groups.sort(key=lambda grp: grp[0])

    def scan(group: list[int]) -> list[tuple[int, int]]:
        out = []
        for seed, common in _concepts(group, adj, base_common):
            if seed.bit_count() < 2 or common.bit_count() < 2:
                continue
            if any((common & lmask[i]).bit_count() < 2 for i in card_levels):
                continue
            out.append((seed, common))
        return out

    if threads > 1 and len(groups) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(scan, groups))
    else:
        chunks = [scan(group) for group in groups]
    return [pair for chunk in chunks for pair in chunk]


def factorise(m: MultipartiteGraph, op: OperatorKind, *, threads: int = 1) -> StepResult:
    """Apply one factorisation step of the given variant.

    Not effective when the candidate family has no maximal element;
    otherwise returns the graph extended by one new level, one vertex per
    maximal candidate, adjacent to exactly that candidate's members. New
    vertices are labelled by their sorted level-0 ancestors plus the new
    level index; the rare label clash gets a deterministic ``#n`` suffix.
    """
    pairs = _maximal_family(m, op, threads=threads)
    if not pairs:
        return StepResult(effective=False, graph=None, new_level=())
    k = m.level_count
    anc = _ancestor_masks(m)

    items = []
    for seed, common in pairs:
        x = seed | common
        ancestors = 0
        for i in bits(x):
            ancestors |= anc[i]
        base = f"L{k}:" + ",".join(m._sorted_labels_from_mask(ancestors))
        items.append((base, m._sorted_labels_from_mask(x), seed, common))
    items.sort(key=lambda it: (it[0], it[1]))

    seen: dict[str, int] = {}
    labelled = []
    for base, member_labels, seed, common in items:
        n = seen.get(base, 0) + 1
        seen[base] = n
        label = base if n == 1 else f"{base}#{n}"
        labelled.append((label, member_labels, seed, common))
    # the new level is stored label-sorted; keep the chosen list aligned
    labelled.sort(key=lambda it: it[0])
    new_vertices = [(label, member_labels) for label, member_labels, _, _ in labelled]
    chosen = tuple(_candidate_from_masks(m, seed, common) for _, _, seed, common in labelled)
    graph = m.append_level(new_vertices)
    return StepResult(effective=True, graph=graph, new_level=chosen)


def particularise(h: MultipartiteGraph) -> MultipartiteGraph:
    """Pin each upper vertex of a bipartite graph with a fresh pendant below.

    The resulting upper neighbourhoods are pairwise incomparable, which
    turns an arbitrary bipartite graph into the vertex/clique incidence
    graph of some graph without disturbing any level above the bottom.
    """
    if h.level_count != 2:
        raise InvalidArgumentError("particularise needs a bipartite (two-level) graph")
    bottoms, uppers = h.levels
    taken = set(bottoms) | set(uppers)
    new_bottom = list(bottoms)
    edges = list(h.edges())
    for y in uppers:
        pin = f"p:{y}"
        while pin in taken:
            pin += "'"
        taken.add(pin)
        new_bottom.append(pin)
        edges.append((pin, y))
    return MultipartiteGraph((new_bottom, uppers), edges)
