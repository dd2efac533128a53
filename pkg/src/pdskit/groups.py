"""Finite abelian groups in primary decomposition.

Elements are plain tuples of residues, one per cyclic factor.  Factors are
prime powers sorted by (prime, exponent), so a Hall subgroup is simply a
selection of coordinates.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np
from sympy import factorint

Element = tuple[int, ...]

_TERM = re.compile(r"Z(\d+)(?:\^(\d+))?")


def _prime_power(n: int) -> tuple[int, int] | None:
    f = factorint(n)
    if len(f) != 1:
        return None
    ((p, e),) = f.items()
    return p, e


def _sort_key(factor: int) -> tuple[int, int]:
    p, e = _prime_power(factor)
    return p, e


@dataclass(frozen=True)
class AbelianGroup:
    """A finite abelian group Z_{n_1} x ... x Z_{n_r}, every n_j a prime power."""

    factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(n) for n in self.factors)
        for n in factors:
            if n < 2 or _prime_power(n) is None:
                raise ValueError(f"factor {n} is not a prime power >= 2")
        object.__setattr__(self, "factors", tuple(sorted(factors, key=_sort_key)))

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> AbelianGroup:
        """Build a group from arbitrary cyclic orders, splitting each by CRT."""
        factors = []
        for n in orders:
            if n < 2:
                raise ValueError(f"cyclic order {n} must be >= 2")
            factors.extend(p**e for p, e in factorint(n).items())
        return cls(tuple(factors))

    @property
    def v(self) -> int:
        return math.prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @cached_property
    def factor_primes(self) -> tuple[int, ...]:
        return tuple(_prime_power(n)[0] for n in self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.factor_primes)))

    @property
    def identity(self) -> Element:
        return (0,) * self.rank

    def __str__(self) -> str:
        return format_group(self)

    def elements(self) -> Iterator[Element]:
        """All elements in lexicographic coordinate order."""
        return product(*(range(n) for n in self.factors))

    def check(self, g: Sequence[int]) -> Element:
        g = tuple(int(c) for c in g)
        if len(g) != self.rank:
            raise ValueError(f"element {g} has {len(g)} coordinates, group has {self.rank}")
        for c, n in zip(g, self.factors):
            if not 0 <= c < n:
                raise ValueError(f"coordinate {c} out of range for Z{n}")
        return g

    def add(self, g: Element, h: Element) -> Element:
        return tuple((a + b) % n for a, b, n in zip(g, h, self.factors))

    def sub(self, g: Element, h: Element) -> Element:
        return tuple((a - b) % n for a, b, n in zip(g, h, self.factors))

    def neg(self, g: Element) -> Element:
        return tuple(-a % n for a, n in zip(g, self.factors))

    def scale(self, s: int, g: Element) -> Element:
        return tuple(s * a % n for a, n in zip(g, self.factors))

    # Index form: position of an element in lexicographic order.

    def index(self, g: Element) -> int:
        i = 0
        for c, n in zip(g, self.factors):
            i = i * n + c
        return i

    def element(self, i: int) -> Element:
        return tuple(int(c) for c in np.unravel_index(i, self.factors))

    @cached_property
    def coords(self) -> np.ndarray:
        """(v, rank) array of all elements in index order."""
        grids = np.indices(self.factors).reshape(self.rank, -1)
        return grids.T.copy()

    @cached_property
    def difference_table(self) -> np.ndarray:
        """table[i, j] = index of element_i - element_j."""
        c = self.coords
        diff = (c[:, None, :] - c[None, :, :]) % np.array(self.factors)
        return np.ravel_multi_index(tuple(np.moveaxis(diff, -1, 0)), self.factors)

    @cached_property
    def negation_table(self) -> np.ndarray:
        return self.difference_table[0]

    @cached_property
    def order_table(self) -> np.ndarray:
        c = self.coords
        f = np.array(self.factors)
        per_coord = f // np.gcd(c, f)
        return np.lcm.reduce(per_coord, axis=1)


def parse_group(spec: str) -> AbelianGroup:
    """Parse ``Z3^2xZ25``-style text into a canonical group.

    >>> parse_group("Z15").factors
    (3, 5)
    """
    text = spec.replace(" ", "")
    if not text:
        raise ValueError("empty group spec")
    orders = []
    for term in text.split("x"):
        m = _TERM.fullmatch(term)
        if m is None:
            raise ValueError(f"malformed group term {term!r} in {spec!r}")
        n = int(m.group(1))
        reps = int(m.group(2)) if m.group(2) else 1
        if n < 2:
            raise ValueError(f"factor Z{n} must have order >= 2")
        if reps < 1:
            raise ValueError(f"repetition ^{reps} must be >= 1")
        orders.extend([n] * reps)
    return AbelianGroup.from_orders(orders)


def format_group(G: AbelianGroup) -> str:
    """Inverse of parse_group on canonical groups, e.g. ``Z3^2xZ25``."""
    terms = []
    i = 0
    while i < G.rank:
        j = i
        while j < G.rank and G.factors[j] == G.factors[i]:
            j += 1
        count = j - i
        terms.append(f"Z{G.factors[i]}" + (f"^{count}" if count > 1 else ""))
        i = j
    return "x".join(terms)


def format_element(g: Element) -> str:
    return "(" + ",".join(str(c) for c in g) + ")"


def parse_element(G: AbelianGroup, text: str) -> Element:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"element {text!r} must be a parenthesised tuple")
    inner = body[1:-1].strip()
    coords = [int(c) for c in inner.split(",")] if inner else []
    return G.check(coords)


def element_order(G: AbelianGroup, g: Sequence[int]) -> int:
    g = G.check(g)
    return math.lcm(*(n // math.gcd(c, n) for c, n in zip(g, G.factors)))


def power_class(G: AbelianGroup, g: Sequence[int]) -> frozenset[Element]:
    """The orbit {s*g : gcd(s, o(g)) = 1} of a nonidentity element."""
    g = G.check(g)
    if g == G.identity:
        raise ValueError("power class of the identity is not defined")
    t = element_order(G, g)
    return frozenset(G.scale(s, g) for s in range(1, t) if math.gcd(s, t) == 1)


def power_class_partition(G: AbelianGroup) -> list[frozenset[Element]]:
    """Partition G minus the identity into power classes, sorted by smallest member."""
    seen = set()
    classes = []
    for g in G.elements():
        if g == G.identity or g in seen:
            continue
        cls = power_class(G, g)
        seen |= cls
        classes.append(cls)
    # elements() is lexicographic, so each class is first met at its minimum
    return classes


@dataclass(frozen=True)
class HallSubgroup:
    """The subgroup of G supported on the factors whose prime lies in ``primes``."""

    group: AbelianGroup
    primes: frozenset[int]

    @cached_property
    def coordinates(self) -> tuple[int, ...]:
        return tuple(j for j, p in enumerate(self.group.factor_primes) if p in self.primes)

    @property
    def order(self) -> int:
        return math.prod(self.group.factors[j] for j in self.coordinates)

    @property
    def index(self) -> int:
        return self.group.v // self.order

    @property
    def index_is_odd(self) -> bool:
        return self.index % 2 == 1

    @cached_property
    def as_group(self) -> AbelianGroup | None:
        """N as a standalone group, or None when N is trivial."""
        if not self.coordinates:
            return None
        return AbelianGroup(tuple(self.group.factors[j] for j in self.coordinates))

    def contains(self, g: Element) -> bool:
        return all(c == 0 for j, c in enumerate(g) if j not in self.coordinates)

    def project(self, g: Element) -> Element:
        """Component of g in this subgroup, as a tuple over its own coordinates."""
        return tuple(g[j] for j in self.coordinates)

    def embed(self, x: Sequence[int]) -> Element:
        g = [0] * self.group.rank
        for j, c in zip(self.coordinates, x):
            g[j] = c
        return tuple(g)

    def split(self, g: Element) -> tuple[Element, Element]:
        """Write g = n + h with n in this subgroup and h in its complement."""
        n = tuple(c if j in self.coordinates else 0 for j, c in enumerate(g))
        h = tuple(0 if j in self.coordinates else c for j, c in enumerate(g))
        return n, h

    def complement(self) -> HallSubgroup:
        return HallSubgroup(self.group, frozenset(self.group.primes) - self.primes)

    def elements(self) -> Iterator[Element]:
        ranges = [range(n) if j in self.coordinates else range(1)
                  for j, n in enumerate(self.group.factors)]
        return product(*ranges)


def hall_subgroup(G: AbelianGroup, primes: Iterable[int]) -> HallSubgroup:
    primes = frozenset(int(p) for p in primes)
    bad = sorted(p for p in primes if p not in G.primes)
    if bad:
        raise ValueError(f"primes {bad} do not divide |G| = {G.v}")
    return HallSubgroup(G, primes)


def character_value(G: AbelianGroup, chi: Sequence[int], g: Sequence[int]) -> complex:
    """exp(2 pi i * sum_j chi_j g_j / n_j)."""
    if len(chi) != G.rank or len(g) != G.rank:
        raise ValueError("character index and element must match the group rank")
    # reduce each term mod n_j before dividing so large residues keep precision
    phase = sum((c * x % n) / n for c, x, n in zip(chi, g, G.factors))
    return cmath.exp(2j * cmath.pi * phase)


def character_sums(G: AbelianGroup, members: Iterable[Element]) -> np.ndarray:
    """Sums of every character over a subset, shaped like the factor grid.

    Entry ``[chi]`` is sum over g in members of exp(2 pi i <chi, g>), computed
    with one n-dimensional FFT of the indicator array.
    """
    ind = np.zeros(G.factors)
    for g in members:
        ind[g] = 1.0
    return np.conj(np.fft.fftn(ind))
