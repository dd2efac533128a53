"""Small prime-power fields F_q = Z_p[x]/(m(x)) and the Paley construction.

Polynomials are coefficient tuples, lowest degree first.  Field elements are
tuples of length ``degree``, which double as coordinates in (Z_p)^degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

from sympy import factorint

from .groups import AbelianGroup
from .pds import CandidateSet

Poly = tuple[int, ...]


def _trim(a: Sequence[int]) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> Poly:
    """Remainder of a modulo the monic polynomial m over Z_p."""
    r = [c % p for c in a]
    d = len(m) - 1
    for i in range(len(r) - 1, d - 1, -1):
        c = r[i]
        if c:
            for j in range(d + 1):
                r[i - d + j] = (r[i - d + j] - c * m[j]) % p
    return _trim(r[:d])


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _monics(p: int, degree: int) -> Iterator[Poly]:
    """Monic polynomials of a degree, ordered by sum c_i p^i (top coefficient most significant)."""
    for high_first in product(range(p), repeat=degree):
        yield tuple(reversed(high_first)) + (1,)


def is_irreducible(m: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(m)/2."""
    m = _trim([c % p for c in m])
    d = len(m) - 1
    if d < 1:
        return False
    for e in range(1, d // 2 + 1):
        for f in _monics(p, e):
            if not poly_mod(m, f, p):
                return False
    return True


def find_irreducible(p: int, degree: int) -> Poly:
    """Smallest monic irreducible of the given degree, reading coefficients as base-p digits."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    for m in _monics(p, degree):
        if is_irreducible(m, p):
            return m
    raise AssertionError("an irreducible polynomial exists in every degree")


@dataclass(frozen=True)
class FiniteField:
    p: int
    degree: int
    modulus: Poly

    @classmethod
    def of_order(cls, q: int) -> FiniteField:
        f = factorint(q)
        if q < 2 or len(f) != 1:
            raise ValueError(f"{q} is not a prime power")
        ((p, e),) = f.items()
        return cls(p, e, find_irreducible(p, e))

    @property
    def q(self) -> int:
        return self.p**self.degree

    @cached_property
    def group(self) -> AbelianGroup:
        return AbelianGroup((self.p,) * self.degree)

    def zero(self) -> Poly:
        return (0,) * self.degree

    def one(self) -> Poly:
        return (1,) + (0,) * (self.degree - 1)

    def elements(self) -> Iterator[Poly]:
        return product(range(self.p), repeat=self.degree)

    def _pad(self, a: Sequence[int]) -> Poly:
        return tuple(a) + (0,) * (self.degree - len(a))

    def _check(self, a: Sequence[int]):
        if len(a) != self.degree:
            raise ValueError(f"element {tuple(a)} does not have {self.degree} coefficients")

    def add(self, a: Sequence[int], b: Sequence[int]) -> Poly:
        self._check(a)
        self._check(b)
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def mul(self, a: Sequence[int], b: Sequence[int]) -> Poly:
        self._check(a)
        self._check(b)
        return self._pad(poly_mod(poly_mul(a, b, self.p), self.modulus, self.p))


def field_mul(F: FiniteField, a: Sequence[int], b: Sequence[int]) -> Poly:
    return F.mul(a, b)


def paley_pds(q: int) -> CandidateSet:
    """Nonzero squares of F_q as a subset of the additive group (Z_p)^degree."""
    if q % 2 == 0:
        raise ValueError(f"q = {q} must be odd")
    if q % 4 != 1:
        raise ValueError(f"q = {q} is not 1 (mod 4)")
    F = FiniteField.of_order(q)
    squares = {F.mul(a, a) for a in F.elements() if any(a)}
    return CandidateSet(F.group, frozenset(squares))
