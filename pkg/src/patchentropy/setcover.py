"""Minimum set cover: greedy, exact branch-and-bound, and brute force.

An instance is a list of candidate sets, each given as a Python ``int``
bitmask over the elements ``0 .. n_elements - 1``.  Solvers return the chosen
candidate indices in increasing order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class InfeasibleCover(ValueError):
    pass


@dataclass(frozen=True)
class CoverSolution:
    chosen: tuple[int, ...]
    method: str
    optimal: bool
    nodes: int = 0

    @property
    def size(self) -> int:
        return len(self.chosen)


def _full(n_elements: int) -> int:
    return (1 << n_elements) - 1


def _check_feasible(sets: list[int], n_elements: int):
    union = 0
    for s in sets:
        union |= s
    if union & _full(n_elements) != _full(n_elements):
        raise InfeasibleCover("the candidate sets do not cover every element")


def greedy_cover(sets: list[int], n_elements: int) -> CoverSolution:
    """Largest uncovered coverage first; ties go to the smallest index."""
    _check_feasible(sets, n_elements)
    uncovered = _full(n_elements)
    chosen = []
    while uncovered:
        best, gain = -1, 0
        for i, s in enumerate(sets):
            g = _popcount(s & uncovered)
            if g > gain:
                best, gain = i, g
        chosen.append(best)
        uncovered &= ~sets[best]
    return CoverSolution(tuple(sorted(chosen)), "greedy", False)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def reduce_dominated(sets: list[int]) -> list[int]:
    """Indices of candidates not contained in another candidate (first copy kept)."""
    first: dict[int, int] = {}
    for i, s in enumerate(sets):
        if s and s not in first:
            first[s] = i
    uniq = sorted(first, key=lambda s: -_popcount(s))
    kept: list[int] = []
    for s in uniq:
        if not any(s | t == t for t in kept):
            kept.append(s)
    return sorted(first[s] for s in kept)


def _components(cand: list[int], n_elements: int) -> list[tuple[list[int], int]]:
    """Split into independent blocks: ``(candidate indices, element mask)``."""
    parent = list(range(n_elements))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in cand:
        first = None
        bits = s
        while bits:
            low = bits & -bits
            e = low.bit_length() - 1
            bits ^= low
            if first is None:
                first = find(e)
            else:
                parent[find(e)] = first
    blocks: dict[int, list] = {}
    for e in range(n_elements):
        blocks.setdefault(find(e), [[], 0])[1] |= 1 << e
    for c, s in enumerate(cand):
        if s:
            low = s & -s
            blocks[find(low.bit_length() - 1)][0].append(c)
    return [(cs, mask) for cs, mask in blocks.values()]


def _branch_and_bound(cand: list[int], universe: int, node_limit: int | None, nodes: list[int]):
    """Minimum cover of ``universe`` by ``cand``; returns (indices, proven)."""
    elements = []
    bits = universe
    while bits:
        low = bits & -bits
        elements.append(low.bit_length() - 1)
        bits ^= low
    covering = {e: [c for c, s in enumerate(cand) if s >> e & 1] for e in elements}
    cmask = {e: sum(1 << c for c in covering[e]) for e in elements}
    for e in elements:
        covering[e].sort(key=lambda c: -_popcount(cand[c] & universe))
    best = [list(_greedy_indices(cand, universe))]
    aborted = [False]

    def lower_bound(uncovered: int) -> int:
        # elements with pairwise disjoint candidate lists need distinct sets
        used = 0
        count = 0
        order = sorted((e for e in elements if uncovered >> e & 1), key=lambda e: len(covering[e]))
        for e in order:
            if not cmask[e] & used:
                used |= cmask[e]
                count += 1
        max_gain = max(_popcount(s & uncovered) for s in cand)
        return max(count, -(-_popcount(uncovered) // max_gain))

    def search(uncovered: int, chosen: list[int]):
        nodes[0] += 1
        if node_limit is not None and nodes[0] > node_limit:
            aborted[0] = True
            return
        if not uncovered:
            if len(chosen) < len(best[0]):
                best[0] = list(chosen)
            return
        if len(chosen) + lower_bound(uncovered) >= len(best[0]):
            return
        options = None
        bits = uncovered
        while bits:
            low = bits & -bits
            e = low.bit_length() - 1
            bits ^= low
            if options is None or len(covering[e]) < len(options):
                options = covering[e]
                if len(options) == 1:
                    break
        for c in options:
            chosen.append(c)
            search(uncovered & ~cand[c], chosen)
            chosen.pop()
            if aborted[0]:
                return

    search(universe, [])
    return best[0], not aborted[0]


def _greedy_indices(cand: list[int], universe: int) -> list[int]:
    uncovered = universe
    chosen = []
    while uncovered:
        best, gain = -1, 0
        for i, s in enumerate(cand):
            g = _popcount(s & uncovered)
            if g > gain:
                best, gain = i, g
        chosen.append(best)
        uncovered &= ~cand[best]
    return chosen


def exact_cover(sets: list[int], n_elements: int, node_limit: int | None = None) -> CoverSolution:
    """Depth-first branch and bound.

    Dominated candidates are dropped and the instance is split into
    independent blocks.  Each block is searched depth first, branching on the
    uncovered element with the fewest covering candidates.  The incumbent
    starts at the greedy solution; nodes are pruned by the larger of
    ``ceil(uncovered / max coverage)`` and a count of uncovered elements with
    pairwise disjoint candidate lists.  ``node_limit`` stops the search early;
    the result is then flagged as not proven optimal.
    """
    _check_feasible(sets, n_elements)
    if n_elements == 0:
        return CoverSolution((), "exact", True)
    full = _full(n_elements)
    keep = reduce_dominated([s & full for s in sets])
    cand = [sets[i] & full for i in keep]
    nodes = [0]
    proven = True
    chosen: list[int] = []
    for cs, mask in _components(cand, n_elements):
        sub = [cand[c] for c in cs]
        picked, ok = _branch_and_bound(sub, mask, node_limit, nodes)
        proven = proven and ok
        chosen.extend(keep[cs[k]] for k in picked)
    return CoverSolution(tuple(sorted(chosen)), "exact", proven, nodes[0])


def brute_force_cover(sets: list[int], n_elements: int) -> CoverSolution:
    """Try all subsets by increasing size (reference oracle for small inputs)."""
    _check_feasible(sets, n_elements)
    full = _full(n_elements)
    for k in range(len(sets) + 1):
        for combo in itertools.combinations(range(len(sets)), k):
            u = 0
            for i in combo:
                u |= sets[i]
            if u & full == full:
                return CoverSolution(tuple(combo), "brute", True)
    raise InfeasibleCover("no cover exists")


def solve(sets: list[int], n_elements: int, method: str = "exact",
          node_limit: int | None = None) -> CoverSolution:
    if method == "greedy":
        return greedy_cover(sets, n_elements)
    if method == "exact":
        return exact_cover(sets, n_elements, node_limit)
    if method == "brute":
        return brute_force_cover(sets, n_elements)
    raise ValueError(f"unknown set-cover method {method!r}")
