"""Ground truth for clean decompositions: clique intersections and checks.

The non-simple intersections of the maximal cliques of a graph, ordered by
strict inclusion, index the decomposition levels: level k of a terminated
clean series holds exactly one vertex per strictly increasing sequence of
k-1 such intersections. This module computes the intersection families,
enumerates chains, recovers the sequence attached to a decomposition
vertex, and verifies the expected structure of a decomposition instance,
reporting the first counterexample on failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator

from .cliques import maximal_cliques
from .errors import InvalidArgumentError
from .factorisation import OperatorKind
from .graphs import Graph, MultipartiteGraph, bits
from .series import SeriesResult, run_series

__all__ = [
    "IntersectionFamily",
    "IntersectionPoset",
    "CharacterisingSequence",
    "VerificationReport",
    "SizeBound",
    "intersection_family",
    "cliques_containing",
    "chains_of_length",
    "characterising_sequence",
    "verify_bijection",
    "verify_neighbourhood_formula",
    "size_bound",
]


def _fmt(s: Iterable[str]) -> str:
    return "{" + ",".join(sorted(s)) + "}"


def _fmt_seq(sets: Iterable[frozenset[str]]) -> str:
    return "(" + " < ".join(_fmt(o) for o in sets) + ")"


@dataclass(frozen=True)
class IntersectionFamily:
    """Intersections of maximal cliques of a graph.

    ``all_intersections`` is closed under intersection and contains the
    whole vertex set (the intersection over no cliques); ``nonsimple``
    keeps the members with at least two vertices that arise from at least
    two distinct maximal cliques.
    """

    all_intersections: frozenset[frozenset[str]]
    nonsimple: frozenset[frozenset[str]]


def intersection_family(g: Graph) -> IntersectionFamily:
    """Compute the intersection closure of the maximal cliques of ``g``.

    Membership in the non-simple part is decided through the containing
    cliques: O qualifies iff it has at least two vertices, at least two
    maximal cliques contain it, and intersecting those cliques gives back
    exactly O.
    """
    family = maximal_cliques(g)
    closed: set[frozenset[str]] = {frozenset(g.vertices)}
    closed.update(family.cliques)
    work = list(closed)
    while work:
        a = work.pop()
        fresh = []
        for b in closed:
            c = a & b
            if c not in closed:
                fresh.append(c)
        for c in fresh:
            closed.add(c)
            work.append(c)

    nonsimple: set[frozenset[str]] = set()
    for o in closed:
        if len(o) < 2:
            continue
        containing = [c for c in family.cliques if o <= c]
        if len(containing) < 2:
            continue
        if frozenset.intersection(*containing) == o:
            nonsimple.add(o)
    return IntersectionFamily(
        all_intersections=frozenset(closed),
        nonsimple=frozenset(nonsimple),
    )


def cliques_containing(g: Graph, a: Iterable[str]) -> frozenset[frozenset[str]]:
    """K(A): the maximal cliques of ``g`` containing every vertex of ``a``."""
    wanted = frozenset(a)
    for v in wanted:
        if v not in g:
            raise InvalidArgumentError(f"unknown vertex {v!r}")
    family = maximal_cliques(g)
    return frozenset(c for c in family.cliques if wanted <= c)


class IntersectionPoset:
    """A family of vertex sets under strict inclusion, with chain queries."""

    def __init__(self, elements: Iterable[frozenset[str]]) -> None:
        self._elements = tuple(
            sorted({frozenset(e) for e in elements}, key=lambda s: (len(s), tuple(sorted(s))))
        )
        above: list[tuple[int, ...]] = []
        for i, small in enumerate(self._elements):
            ups = tuple(
                j
                for j in range(i + 1, len(self._elements))
                if len(small) < len(self._elements[j]) and small < self._elements[j]
            )
            above.append(ups)
        self._above = tuple(above)
        self._count_memo: dict[tuple[int, int], int] = {}

    @property
    def elements(self) -> tuple[frozenset[str], ...]:
        return self._elements

    def __len__(self) -> int:
        return len(self._elements)

    def height(self) -> int:
        """Number of elements on a longest chain (0 for the empty poset)."""
        n = len(self._elements)
        high = [1] * n
        for i in range(n - 1, -1, -1):
            for j in self._above[i]:
                if 1 + high[j] > high[i]:
                    high[i] = 1 + high[j]
        return max(high, default=0)

    def _count_from(self, i: int, m: int) -> int:
        if m == 1:
            return 1
        key = (i, m)
        got = self._count_memo.get(key)
        if got is None:
            got = sum(self._count_from(j, m - 1) for j in self._above[i])
            self._count_memo[key] = got
        return got

    def chain_count(self, m: int) -> int:
        """Number of strictly increasing m-element sequences."""
        if m < 1:
            raise InvalidArgumentError("chain length must be at least 1")
        return sum(self._count_from(i, m) for i in range(len(self._elements)))

    def chains(self, m: int) -> Iterator[tuple[frozenset[str], ...]]:
        if m < 1:
            raise InvalidArgumentError("chain length must be at least 1")

        def walk(acc: list[int]) -> Iterator[tuple[frozenset[str], ...]]:
            if len(acc) == m:
                yield tuple(self._elements[t] for t in acc)
                return
            for j in self._above[acc[-1]]:
                acc.append(j)
                yield from walk(acc)
                acc.pop()

        for i in range(len(self._elements)):
            yield from walk([i])


@dataclass(frozen=True)
class CharacterisingSequence:
    """The chain label attached to a decomposition vertex: (O_1, ..., O_{k-1})."""

    sets: tuple[frozenset[str], ...]

    def __len__(self) -> int:
        return len(self.sets)

    def is_strict_chain(self) -> bool:
        return all(a < b for a, b in zip(self.sets, self.sets[1:]))


def chains_of_length(poset: IntersectionPoset, m: int) -> set[CharacterisingSequence]:
    """All strictly increasing m-element sequences over the poset."""
    return {CharacterisingSequence(chain) for chain in poset.chains(m)}


def characterising_sequence(m: MultipartiteGraph, x: str) -> CharacterisingSequence:
    """Recover the sequence of a vertex at level k >= 2 of a clean series graph.

    The first entry is N_0(x). Entry j is the intersection of the cliques
    (level-1 vertices read as their level-0 neighbourhoods) shared by all
    of x's neighbours at level j; that intersection is the unique clique
    intersection whose containing-clique set matches.
    """
    if x not in m:
        raise InvalidArgumentError(f"unknown vertex {x!r}")
    k = m.level_of(x)
    if k < 2:
        raise InvalidArgumentError("characterising sequences start at level 2")
    adj = m._adj
    lmask = m._level_masks
    idx = m._index[x]
    sets = [m._labels_from_mask(adj[idx] & lmask[0])]
    for j in range(2, k):
        nj = adj[idx] & lmask[j]
        clique_set = lmask[1]
        for y in bits(nj):
            clique_set &= adj[y]
        clique_set &= lmask[1]
        o = lmask[0]
        for c in bits(clique_set):
            o &= adj[c]
        o &= lmask[0]
        sets.append(m._labels_from_mask(o))
    return CharacterisingSequence(tuple(sets))


@dataclass(frozen=True)
class VerificationReport:
    """Pass/fail outcome of a structural check, with the first counterexample.

    ``level_counts`` lists (level, vertices, expected chains) per verified
    level when the bijection check runs.
    """

    passed: bool
    counterexample: str | None = None
    level_counts: tuple[tuple[int, int, int], ...] = ()


def _fail(message: str) -> VerificationReport:
    return VerificationReport(passed=False, counterexample=message)


def verify_bijection(g: Graph, m: MultipartiteGraph) -> VerificationReport:
    """Check the chain correspondence on a terminated clean decomposition of g.

    Per level k >= 2: every vertex carries a strictly increasing sequence
    of non-simple intersections, no two vertices share one, every (k-1)-
    element chain is attained, and the counts agree. Beyond the top level
    no chains may remain, otherwise the series was not terminated.
    """
    family = maximal_cliques(g)
    if set(m.levels[0]) != set(g.vertices):
        return _fail("level 0 does not match the input graph's vertex set")
    level1_sets = [m.neighbourhood_at_level(c, 0) for c in m.levels[1]]
    if len(set(level1_sets)) != len(level1_sets) or set(level1_sets) != set(family.cliques):
        return _fail("level 1 does not match the maximal cliques of the input graph")

    fam = intersection_family(g)
    poset = IntersectionPoset(fam.nonsimple)
    counts: list[tuple[int, int, int]] = []
    for k in range(2, m.level_count):
        level = m.levels[k]
        sequences: dict[str, CharacterisingSequence] = {}
        for x in level:
            s = characterising_sequence(m, x)
            if not s.is_strict_chain():
                return _fail(f"level {k}, vertex {x!r}: sequence {_fmt_seq(s.sets)} is not strictly increasing")
            for o in s.sets:
                if o not in fam.nonsimple:
                    return _fail(
                        f"level {k}, vertex {x!r}: {_fmt(o)} is not a non-simple clique intersection"
                    )
            sequences[x] = s
        attained = set(sequences.values())
        if len(attained) != len(sequences):
            seen: dict[CharacterisingSequence, str] = {}
            for x, s in sequences.items():
                if s in seen:
                    return _fail(
                        f"level {k}: vertices {seen[s]!r} and {x!r} share the sequence {_fmt_seq(s.sets)}"
                    )
                seen[s] = x
        expected = chains_of_length(poset, k - 1)
        missing = expected - attained
        if missing:
            chain = min(missing, key=lambda c: tuple(tuple(sorted(o)) for o in c.sets))
            return _fail(f"level {k}: chain {_fmt_seq(chain.sets)} is attained by no vertex")
        extra = attained - expected
        if extra:
            chain = min(extra, key=lambda c: tuple(tuple(sorted(o)) for o in c.sets))
            return _fail(f"level {k}: sequence {_fmt_seq(chain.sets)} is not a chain of the order")
        counts.append((k, len(level), len(expected)))

    beyond = m.level_count - 1
    leftover = poset.chain_count(beyond) if len(poset) else 0
    if leftover:
        return _fail(
            f"series is not terminated: {leftover} chains of {beyond} elements have no level {beyond + 1}"
        )
    return VerificationReport(passed=True, level_counts=tuple(counts))


def verify_neighbourhood_formula(m: MultipartiteGraph) -> VerificationReport:
    """Check the neighbourhood structure of a terminated clean decomposition.

    Three families of checks: the containing cliques of a vertex's last
    sequence entry are exactly its level-1 neighbours; for j in 2..k-1 the
    level-j neighbourhood equals the sequence-window set W_j; and vertices
    of a level that agree one level below agree on every lower level
    except level 1.
    """
    sequences: dict[str, CharacterisingSequence] = {}
    for k in range(2, m.level_count):
        for x in m.levels[k]:
            sequences[x] = characterising_sequence(m, x)

    level1 = m.levels[1]
    bottom = {c: m.neighbourhood_at_level(c, 0) for c in level1}

    for k in range(2, m.level_count):
        for x in m.levels[k]:
            last = sequences[x].sets[-1]
            containing = frozenset(c for c in level1 if last <= bottom[c])
            actual = m.neighbourhood_at_level(x, 1)
            if containing != actual:
                return _fail(
                    f"level {k}, vertex {x!r}: cliques containing {_fmt(last)} are "
                    f"{_fmt(containing)} but N_1 is {_fmt(actual)}"
                )

    for k in range(3, m.level_count):
        for x in m.levels[k]:
            sx = sequences[x].sets
            for j in range(2, k):
                window = frozenset(
                    y
                    for y in m.levels[j]
                    if sequences[y].sets[: j - 2] == sx[: j - 2]
                    and sx[j - 2] <= sequences[y].sets[j - 2] <= sx[j - 1]
                )
                actual = m.neighbourhood_at_level(x, j)
                if window != actual:
                    return _fail(
                        f"level {k}, vertex {x!r}, level-{j} neighbourhood: expected "
                        f"{_fmt(window)}, got {_fmt(actual)}"
                    )

    for k in range(4, m.level_count):
        groups: dict[frozenset[str], str] = {}
        for x in m.levels[k]:
            key = m.neighbourhood_at_level(x, k - 2)
            other = groups.get(key)
            if other is None:
                groups[key] = x
                continue
            for p in range(0, k - 1):
                if p == 1:
                    continue
                left = m.neighbourhood_at_level(other, p)
                right = m.neighbourhood_at_level(x, p)
                if left != right:
                    return _fail(
                        f"level {k}: {other!r} and {x!r} agree on level {k - 2} but differ "
                        f"on level {p}: {_fmt(left)} vs {_fmt(right)}"
                    )
    return VerificationReport(passed=True)


@dataclass(frozen=True)
class SizeBound:
    """Measured decomposition size against the analytic bound.

    ``k`` is the largest number of maximal cliques sharing a vertex and
    ``c`` the largest clique size.
    """

    bound: int
    actual: int
    k: int
    c: int

    @property
    def holds(self) -> bool:
        return self.actual <= self.bound


def size_bound(g: Graph, series: SeriesResult | None = None) -> SizeBound:
    """Evaluate min(k*2^c*c!, 2^k*k!+1)*n against the clean decomposition size.

    ``series`` may pass in a precomputed clean run to avoid recomputing it.
    """
    family = maximal_cliques(g)
    per_vertex = {v: 0 for v in g.vertices}
    for clique in family:
        for v in clique:
            per_vertex[v] += 1
    k = max(per_vertex.values())
    c = max(len(clique) for clique in family)
    n = len(g)
    bound = min(k * (2**c) * factorial(c), (2**k) * factorial(k) + 1) * n
    if series is None:
        series = run_series(g, OperatorKind.CLEAN)
    actual = sum(len(level) for level in series.final.levels)
    return SizeBound(bound=bound, actual=actual, k=k, c=c)
