"""Independent reference implementations by exhaustive enumeration.

Everything here recomputes, from plain label sets and the written-out
definitions, what the library computes with bitmask kernels and closure
walks. The point is independence, not speed; tests compare the two paths.
"""

from __future__ import annotations

import itertools

from cleanfactor import Graph, MultipartiteGraph, OperatorKind


def subset_maximal_cliques(g: Graph) -> set[frozenset[str]]:
    """Every vertex subset that is a clique and maximal among cliques."""
    vs = g.vertices
    assert len(vs) <= 16, "subset oracle is exponential"
    nb = {v: g.neighbours(v) for v in vs}
    cliques: list[frozenset[str]] = []
    for size in range(1, len(vs) + 1):
        for combo in itertools.combinations(vs, size):
            if all(v in nb[u] for u, v in itertools.combinations(combo, 2)):
                cliques.append(frozenset(combo))
    return {c for c in cliques if not any(c < d for d in cliques)}


def subset_candidate_family(m: MultipartiteGraph, op: OperatorKind) -> set[frozenset[str]]:
    """The full candidate family of the given variant, as full vertex sets.

    Walks every seed of upper vertices of size >= 2 and applies the
    definitional conditions verbatim on label sets. Stops growing the seed
    size once no seed of the current size has a two-vertex common
    neighbourhood, which no superset can regain.
    """
    k = m.level_count
    uppers = m.levels[-1]
    assert len(uppers) <= 14, "subset oracle is exponential"
    full = {y: m.neighbourhood(y) for y in uppers}
    at = {(y, i): m.neighbourhood_at_level(y, i) for y in uppers for i in range(k)}

    family: set[frozenset[str]] = set()
    for size in range(2, len(uppers) + 1):
        alive = False
        for seed in itertools.combinations(uppers, size):
            common = frozenset.intersection(*(full[y] for y in seed))
            if len(common) < 2:
                continue
            alive = True
            if op is OperatorKind.WEAK:
                ok = True
            elif op is OperatorKind.FACTOR:
                ok = len(frozenset.intersection(*(at[y, k - 2] for y in seed))) >= 2
            elif k == 2:
                ok = True
            elif k == 3:
                ok = (
                    len(frozenset.intersection(*(at[y, 1] for y in seed))) >= 2
                    and len(frozenset.intersection(*(at[y, 0] for y in seed))) >= 2
                )
            elif k == 4:
                ok = (
                    len(frozenset.intersection(*(at[y, 2] for y in seed))) >= 2
                    and len(frozenset.intersection(*(at[y, 1] for y in seed))) >= 2
                    and all(at[x, 0] == at[y, 0] for x in seed for y in seed)
                )
            else:
                ok = (
                    len(frozenset.intersection(*(at[y, k - 2] for y in seed))) >= 2
                    and all(at[x, k - 3] == at[y, k - 3] for x in seed for y in seed)
                    and len(frozenset.intersection(*(at[y, 1] for y in seed))) >= 2
                )
            if ok:
                family.add(frozenset(seed) | common)
        if not alive:
            break
    return family


def maximal_sets(family: set[frozenset[str]]) -> set[frozenset[str]]:
    return {s for s in family if not any(s < t for t in family)}


def subset_intersections(g: Graph) -> tuple[set[frozenset[str]], set[frozenset[str]]]:
    """All intersections of maximal cliques, and the non-simple ones.

    The full family takes the intersection of every non-empty clique
    subfamily plus the whole vertex set; the non-simple part keeps the
    two-vertex-or-more results of subfamilies with at least two cliques.
    """
    cliques = sorted(subset_maximal_cliques(g), key=lambda c: tuple(sorted(c)))
    assert len(cliques) <= 16, "subset oracle is exponential"
    everything: set[frozenset[str]] = {frozenset(g.vertices)}
    nonsimple: set[frozenset[str]] = set()
    for r in range(1, len(cliques) + 1):
        for combo in itertools.combinations(cliques, r):
            s = frozenset.intersection(*combo)
            everything.add(s)
            if r >= 2 and len(s) >= 2:
                nonsimple.add(s)
    return everything, nonsimple


def subset_chains(elements: set[frozenset[str]], m: int) -> set[tuple[frozenset[str], ...]]:
    """All m-element subsets that are totally ordered, as increasing tuples."""
    out: set[tuple[frozenset[str], ...]] = set()
    for combo in itertools.combinations(sorted(elements, key=lambda s: (len(s), tuple(sorted(s)))), m):
        ordered = sorted(combo, key=len)
        if all(a < b for a, b in zip(ordered, ordered[1:])):
            out.add(tuple(ordered))
    return out
