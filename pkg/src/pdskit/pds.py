"""Exact verification of partial difference sets.

All verdicts come from integer difference counting over the group's
difference table; characters are only used as a secondary sanity check.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .groups import (
    AbelianGroup,
    Element,
    character_sums,
    format_element,
    format_group,
    parse_element,
    parse_group,
)

SCHEMA = "pds-kit/1"


@dataclass(frozen=True)
class PdsParams:
    v: int
    k: int
    lam: int
    mu: int
    # set when lambda or mu had no pairs to observe and were filled in as 0
    degenerate: bool = field(default=False, compare=False)

    @property
    def beta(self) -> int:
        return self.lam - self.mu

    @property
    def delta(self) -> int:
        return self.beta**2 + 4 * (self.k - self.mu)

    @property
    def delta_is_square(self) -> bool:
        return self.delta >= 0 and math.isqrt(self.delta) ** 2 == self.delta

    def satisfies_counting_identity(self) -> bool:
        return self.k * (self.k - 1) == self.lam * self.k + self.mu * (self.v - 1 - self.k)

    def complement(self) -> PdsParams:
        """Parameters of G minus D minus the identity."""
        v, k, lam, mu = self.v, self.k, self.lam, self.mu
        return PdsParams(v, v - 1 - k, v - 2 - 2 * k + mu, v - 2 * k + lam)

    def is_paley(self) -> bool:
        return self.v % 4 == 1 and self == paley_params(self.v)

    def eigenvalues(self) -> tuple[float, float]:
        """The two values (beta +- sqrt(Delta))/2 nontrivial character sums may take."""
        r = math.sqrt(self.delta)
        return (self.beta + r) / 2, (self.beta - r) / 2

    def as_tuple(self) -> tuple[int, int, int, int]:
        return self.v, self.k, self.lam, self.mu

    def __str__(self) -> str:
        return f"({self.v}, {self.k}, {self.lam}, {self.mu})"


def paley_params(v: int) -> PdsParams:
    """(v, (v-1)/2, (v-5)/4, (v-1)/4); defined only for v = 1 mod 4."""
    if v < 5 or v % 4 != 1:
        raise ValueError(f"Paley parameters need v = 1 (mod 4) and v >= 5, got {v}")
    return PdsParams(v, (v - 1) // 2, (v - 5) // 4, (v - 1) // 4)


@dataclass(frozen=True)
class CandidateSet:
    group: AbelianGroup
    members: frozenset[Element]

    def __post_init__(self):
        object.__setattr__(
            self, "members", frozenset(self.group.check(g) for g in self.members)
        )

    @classmethod
    def of(cls, group: AbelianGroup, members: Iterable) -> CandidateSet:
        return cls(group, frozenset(tuple(g) for g in members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g) -> bool:
        return tuple(g) in self.members

    def sorted_members(self) -> list[Element]:
        return sorted(self.members)

    def indicator(self) -> np.ndarray:
        ind = np.zeros(self.group.v, dtype=bool)
        for g in self.members:
            ind[self.group.index(g)] = True
        return ind

    def negated(self) -> CandidateSet:
        return CandidateSet(self.group, frozenset(self.group.neg(g) for g in self.members))

    def with_identity(self, present: bool) -> CandidateSet:
        e = self.group.identity
        members = self.members | {e} if present else self.members - {e}
        return CandidateSet(self.group, members)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "group": format_group(self.group),
            "members": [format_element(g) for g in self.sorted_members()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> CandidateSet:
        G = parse_group(data["group"])
        return cls(G, frozenset(parse_element(G, s) for s in data["members"]))

    @classmethod
    def from_json(cls, text: str) -> CandidateSet:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class VerificationReport:
    is_pds: bool
    params: PdsParams | None
    is_regular: bool
    is_trivial: bool
    failing_element: Element | None = None
    degenerate: bool = False

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "is_pds": self.is_pds,
            "params": None if self.params is None else list(self.params.as_tuple()),
            "is_regular": self.is_regular,
            "is_trivial": self.is_trivial,
            "failing_element": (
                None if self.failing_element is None else format_element(self.failing_element)
            ),
            "degenerate": self.degenerate,
        }

    def summary(self) -> str:
        if not self.is_pds:
            return f"not a PDS: difference count deviates at {format_element(self.failing_element)}"
        words = ["regular" if self.is_regular else "non-regular",
                 "trivial" if self.is_trivial else "nontrivial"]
        if self.degenerate:
            words.append("degenerate")
        return f"PDS {self.params} " + " ".join(words)


def _count_array(D: CandidateSet) -> np.ndarray:
    G = D.group
    idx = np.flatnonzero(D.indicator())
    diffs = G.difference_table[np.ix_(idx, idx)]
    # drop the diagonal g - g = e
    counts = np.bincount(diffs.ravel(), minlength=G.v)
    counts[0] -= len(idx)
    return counts


def difference_counts(D: CandidateSet) -> dict[Element, int]:
    """count[x] = #{(g, h) in D x D : g != h, g - h = x} for every nonidentity x."""
    G = D.group
    counts = _count_array(D)
    return {G.element(i): int(counts[i]) for i in range(1, G.v)}


def is_subgroup(G: AbelianGroup, S: frozenset[Element]) -> bool:
    if G.identity not in S:
        return False
    return all(G.sub(a, b) in S for a in S for b in S)


def is_regular(D: CandidateSet) -> bool:
    return D.group.identity not in D.members and D.negated().members == D.members


def is_trivial(D: CandidateSet) -> bool:
    G = D.group
    if is_subgroup(G, D.members | {G.identity}):
        return True
    rest = frozenset(g for g in G.elements() if g not in D.members)
    return is_subgroup(G, rest)


def verify_pds(D: CandidateSet) -> VerificationReport:
    """Decide whether D is a PDS by exact difference counting.

    lambda is read off the smallest nonidentity member and mu off the smallest
    nonidentity non-member; the first element disagreeing with its reference
    count is reported as the witness.
    """
    G = D.group
    counts = _count_array(D)
    ind = D.indicator()
    regular = is_regular(D)
    trivial = is_trivial(D)

    nonid = np.arange(1, G.v)
    inside = nonid[ind[1:]]
    outside = nonid[~ind[1:]]

    observed = []
    for part in (inside, outside):
        if len(part) == 0:
            observed.append(None)
            continue
        ref = counts[part[0]]
        bad = part[counts[part] != ref]
        if len(bad):
            return VerificationReport(False, None, regular, trivial, G.element(int(bad[0])))
        observed.append(int(ref))

    lam, mu = observed
    k = len(D)
    # lambda has no meaning without internal differences
    degenerate = lam is None or mu is None or k <= 1
    lam = lam if lam is not None and k > 1 else 0
    params = PdsParams(G.v, k, lam, mu or 0, degenerate=degenerate)
    return VerificationReport(True, params, regular, trivial, None, degenerate)


@dataclass(frozen=True)
class SrgCheck:
    """Outcome of counting common neighbours in Cay(G, D)."""

    params: PdsParams | None
    degenerate: bool = False
    witness: tuple[Element, Element] | None = None

    @property
    def is_srg(self) -> bool:
        return self.params is not None


def cayley_adjacency(D: CandidateSet) -> np.ndarray:
    """Adjacency of Cay(G, D): x ~ y iff x - y in D, vertices in index order."""
    return D.indicator()[D.group.difference_table]


def cayley_srg_params(D: CandidateSet) -> SrgCheck:
    """Strongly regular parameters of Cay(G, D) from the graph alone."""
    if not is_regular(D):
        raise ValueError("Cayley graph needs D = -D and identity not in D")
    G = D.group
    A = cayley_adjacency(D).astype(np.int64)
    degrees = A.sum(axis=1)
    k = int(degrees[0])
    common = A @ A
    off = ~np.eye(G.v, dtype=bool)
    adjacent = (A == 1) & off
    nonadjacent = (A == 0) & off
    if not adjacent.any() or not nonadjacent.any():
        return SrgCheck(None, degenerate=True)

    values = []
    for mask in (adjacent, nonadjacent):
        pairs = np.argwhere(mask)
        ref = common[tuple(pairs[0])]
        bad = pairs[common[mask] != ref]
        if len(bad):
            x, y = bad[0]
            return SrgCheck(None, witness=(G.element(int(x)), G.element(int(y))))
        values.append(int(ref))
    return SrgCheck(PdsParams(G.v, k, values[0], values[1]))


def character_sum_check(D: CandidateSet, params: PdsParams, tol: float = 1e-6) -> bool:
    """Every nontrivial character sum over D equals (beta +- sqrt(Delta))/2."""
    sums = character_sums(D.group, D.members).ravel()[1:]
    r, s = params.eigenvalues()
    return bool(np.all((np.abs(sums - r) <= tol) | (np.abs(sums - s) <= tol)))


def load_candidates(text: str) -> list[CandidateSet]:
    """Parse a CandidateSet JSON document or a search result holding several."""
    data = json.loads(text)
    if isinstance(data, Mapping) and "solutions" in data:
        return [CandidateSet.from_dict(s) for s in data["solutions"]]
    return [CandidateSet.from_dict(data)]
