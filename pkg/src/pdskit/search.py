"""Exhaustive PDS search over unions of symmetric blocks.

In ``orbit`` mode the blocks are power classes, which is lossless for regular
PDSs with square Delta because membership is invariant under every multiplier
coprime to the element order.  In ``brute`` mode the blocks are the pairs
{g, -g}, which covers every regular candidate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .groups import (
    AbelianGroup,
    Element,
    HallSubgroup,
    character_sums,
    element_order,
    hall_subgroup,
    power_class_partition,
)
from .pds import CandidateSet, PdsParams, verify_pds

ORBIT = "orbit"
BRUTE = "brute"
DEFAULT_BRUTE_BOUND = 33
TOL = 1e-6


@dataclass(frozen=True)
class SearchProblem:
    group: AbelianGroup
    target: PdsParams
    mode: str = ORBIT
    limit: int = 0

    def __post_init__(self):
        if self.mode not in (ORBIT, BRUTE):
            raise ValueError(f"unknown search mode {self.mode!r}")
        if self.mode == ORBIT and not self.target.delta_is_square:
            raise ValueError(
                f"orbit mode needs a square Delta, target {self.target} has Delta = {self.target.delta}")
        if self.target.v != self.group.v:
            raise ValueError(f"target v = {self.target.v} but |G| = {self.group.v}")
        if self.limit < 0:
            raise ValueError("limit must be >= 0")


@dataclass
class SearchResult:
    solutions: list[CandidateSet] = field(default_factory=list)
    nodes_explored: int = 0
    complete: bool = True


def negation_pairs(G: AbelianGroup) -> list[frozenset[Element]]:
    """The sets {g, -g} for g != e, ordered by smallest member."""
    seen = set()
    out = []
    for g in G.elements():
        if g == G.identity or g in seen:
            continue
        pair = frozenset({g, G.neg(g)})
        seen |= pair
        out.append(pair)
    return out


def search_blocks(problem: SearchProblem) -> list[frozenset[Element]]:
    if problem.mode == ORBIT:
        return power_class_partition(problem.group)
    return negation_pairs(problem.group)


def search(problem: SearchProblem, *, prune: bool = True,
           brute_bound: int = DEFAULT_BRUTE_BOUND) -> SearchResult:
    """Enumerate block unions of size k, lexicographically by block index.

    With ``prune`` a partial union is dropped when some nontrivial character
    can no longer reach either allowed value (beta +- sqrt(Delta))/2 whatever
    the remaining blocks contribute.  Survivors are confirmed by verify_pds.
    """
    G, target = problem.group, problem.target
    if problem.mode == BRUTE and G.v > brute_bound:
        raise ValueError(f"brute mode is limited to v <= {brute_bound}, got {G.v}")

    blocks = search_blocks(problem)
    sizes = [len(b) for b in blocks]
    n = len(blocks)
    size_left = np.concatenate([np.cumsum(sizes[::-1])[::-1], [0]])

    # block character sums are real since every block is closed under negation
    sums = np.array([character_sums(G, b).real.ravel()[1:] for b in blocks])
    if n == 0:
        sums = np.zeros((0, max(G.v - 1, 0)))
    pos_left = np.vstack([np.cumsum(np.clip(sums, 0, None)[::-1], axis=0)[::-1],
                          np.zeros((1, sums.shape[1]))])
    neg_left = np.vstack([np.cumsum(np.clip(sums, None, 0)[::-1], axis=0)[::-1],
                          np.zeros((1, sums.shape[1]))])
    r, s = target.eigenvalues()

    result = SearchResult()
    chosen: list[int] = []

    def reachable(i: int, partial: np.ndarray) -> bool:
        lo = partial + neg_left[i] - TOL
        hi = partial + pos_left[i] + TOL
        ok = ((lo <= r) & (r <= hi)) | ((lo <= s) & (s <= hi))
        return bool(ok.all())

    def leaf() -> bool:
        members = frozenset().union(*(blocks[j] for j in chosen))
        D = CandidateSet(G, members)
        report = verify_pds(D)
        if report.is_pds and report.is_regular and report.params == target:
            result.solutions.append(D)
            if problem.limit and len(result.solutions) >= problem.limit:
                return False
        return True

    def walk(i: int, size: int, partial: np.ndarray) -> bool:
        """Returns False once the solution limit stops the search."""
        result.nodes_explored += 1
        if size == target.k:
            return leaf()
        if i == n or size + size_left[i] < target.k:
            return True
        if prune and not reachable(i, partial):
            return True
        if size + sizes[i] <= target.k:
            chosen.append(i)
            go_on = walk(i + 1, size + sizes[i], partial + sums[i])
            chosen.pop()
            if not go_on:
                return False
        return walk(i + 1, size, partial)

    finished = walk(0, 0, np.zeros(sums.shape[1]))
    result.complete = finished
    return result


def mixed_orbit(G: AbelianGroup, N: HallSubgroup, n: Element, h: Element) -> frozenset[Element]:
    """{n + x h : 1 <= x < o(h), gcd(x, p) = 1} for n in N and h in a p-group complement."""
    H = N.complement()
    if not N.contains(n):
        raise ValueError(f"{n} is not in the subgroup on primes {sorted(N.primes)}")
    if not H.contains(h):
        raise ValueError(f"{h} is not in the complement on primes {sorted(H.primes)}")
    if h == G.identity:
        raise ValueError("h must not be the identity")
    t = element_order(G, h)
    (p,) = {q for q in G.primes if t % q == 0}
    return frozenset(G.add(n, G.scale(x, h)) for x in range(1, t) if x % p)


def _require_square_pds(D: CandidateSet) -> PdsParams:
    report = verify_pds(D)
    if not (report.is_pds and report.is_regular):
        raise ValueError("candidate is not a regular PDS")
    if not report.params.delta_is_square:
        raise ValueError(f"Delta = {report.params.delta} is not a square; multiplier closure does not apply")
    return report.params


def multiplier_closure_check(D: CandidateSet) -> tuple[bool, tuple[Element, int] | None]:
    """Whether D is a union of power classes; otherwise a witness (g, s) with s*g not in D."""
    _require_square_pds(D)
    G = D.group
    for g in sorted(D.members):
        t = element_order(G, g)
        for s in range(2, t):
            if math.gcd(s, t) == 1 and G.scale(s, g) not in D.members:
                return False, (g, s)
    return True, None


def mixed_orbit_closure_check(D: CandidateSet) -> tuple[bool, tuple[Element, Element] | None]:
    """Check n + h in D implies mixed_orbit(n, h) in D for every single-prime complement.

    Returns a witness (g, g') with g in D and g' in its mixed orbit but not in D.
    """
    _require_square_pds(D)
    G = D.group
    for p in G.primes:
        N = hall_subgroup(G, set(G.primes) - {p})
        for g in sorted(D.members):
            n, h = N.split(g)
            if h == G.identity:
                continue
            for other in sorted(mixed_orbit(G, N, n, h)):
                if other not in D.members:
                    return False, (g, other)
    return True, None


def restrict(D: CandidateSet, N: HallSubgroup) -> CandidateSet:
    """D intersect N as a subset of N viewed as a group in its own right."""
    if N.as_group is None:
        raise ValueError("cannot restrict to the trivial subgroup")
    members = frozenset(N.project(g) for g in D.members if N.contains(g))
    return CandidateSet(N.as_group, members)
