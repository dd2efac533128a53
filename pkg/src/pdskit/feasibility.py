"""Order-level existence sieve for Paley-type partial difference sets.

Rule identifiers used in verdicts:

R1  nonsquare Delta forces parameters of Paley type on p^(2s+1), p = 1 (mod 4)
R2  for v = prod p_i^(2k_i) with at least two primes, odd k_i forces p_i = 3 (mod 4)
R3  beta = -1 (up to complementation) forces Paley type or (243, 22, 1, 2)

Known constructions are ``PaleyField`` (nonzero squares of F_q) and
``Polhill`` (all k_i even; recorded as a known existence result only).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint

from .pds import SCHEMA, PdsParams, paley_params

KNOWN_EXISTS = "KnownExists"
INFEASIBLE = "Infeasible"
OPEN = "Open"
NOT_APPLICABLE = "NotApplicable"

EXCEPTIONAL = PdsParams(243, 22, 1, 2)


class InternalConsistencyError(RuntimeError):
    """A known construction and a nonexistence rule disagree on one order."""


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


@dataclass(frozen=True)
class OrderFactorization:
    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, v: int) -> OrderFactorization:
        if v < 1:
            raise ValueError(f"order must be positive, got {v}")
        return cls(tuple(sorted(factorint(v).items())))

    @property
    def v(self) -> int:
        return math.prod(p**e for p, e in self.pairs)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    @property
    def is_square(self) -> bool:
        return all(e % 2 == 0 for _, e in self.pairs)

    @property
    def is_prime_power(self) -> bool:
        return len(self.pairs) == 1

    def __str__(self) -> str:
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.pairs)


@dataclass(frozen=True)
class RuleOutcome:
    rule: str
    passed: bool
    detail: str
    applicable: bool = True


@dataclass(frozen=True)
class Verdict:
    v: int
    kind: str
    rule: str | None
    detail: str

    def to_dict(self) -> dict:
        return {"schema": SCHEMA, "v": self.v, "kind": self.kind,
                "rule": self.rule, "detail": self.detail}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    def __str__(self) -> str:
        head = self.kind if self.rule is None else f"{self.kind} ({self.rule})"
        return f"{head}: {self.detail}"


def rule_delta_square(params: PdsParams) -> RuleOutcome:
    """R1: a nonsquare Delta only occurs for Paley type on p^(2s+1) with p = 1 (mod 4)."""
    d = params.delta
    if _is_square(d):
        return RuleOutcome("R1", True, f"Delta = {d} is a perfect square; no constraint")
    f = OrderFactorization.of(params.v)
    if f.is_prime_power:
        (p, e), = f.pairs
        if e % 2 == 1 and p % 4 == 1 and params.is_paley():
            return RuleOutcome("R1", True, f"Delta = {d} not square; Paley type on {p}^{e}, {p} ≡ 1 (mod 4)")
    reasons = []
    if not params.is_paley():
        reasons.append(f"{params} is not of Paley type")
    if not (f.is_prime_power and f.pairs[0][1] % 2 == 1):
        reasons.append(f"v = {f} is not an odd power of a prime")
    elif f.pairs[0][0] % 4 != 1:
        p = f.pairs[0][0]
        reasons.append(f"{p} ≡ {p % 4} (mod 4)")
    return RuleOutcome("R1", False, f"Delta = {d} not square and " + "; ".join(reasons))


def rule_beta_minus_one(params: PdsParams) -> RuleOutcome:
    """R3: beta = -1 on params or on the complement pins down the parameter shape."""
    comp = params.complement()
    if params.beta != -1 and comp.beta != -1:
        return RuleOutcome("R3", True, f"beta = {params.beta}; rule does not apply")
    allowed = {EXCEPTIONAL, EXCEPTIONAL.complement()}
    if params.v % 4 == 1 and params.v >= 5:
        allowed.add(paley_params(params.v))
    if params in allowed:
        what = "Paley type" if params.is_paley() else "the (243, 22, 1, 2) exception up to complement"
        return RuleOutcome("R3", True, f"beta = -1 and {params} is {what}")
    return RuleOutcome(
        "R3", False,
        f"beta = -1 (or for the complement) but {params} is neither Paley type nor (243, 22, 1, 2) up to complement",
    )


def congruence_rule(p: int, e: int) -> bool:
    """Whether 1 + p + ... + p^(e-1) = 0 (mod 4), for even e."""
    if e % 2 or e < 2:
        raise ValueError(f"exponent must be even and >= 2, got {e}")
    return _geometric_sum_mod4(p, e) == 0


def _geometric_sum_mod4(p: int, e: int) -> int:
    return sum(pow(p, j, 4) for j in range(e)) % 4


def rule_main_theorem(f: OrderFactorization) -> RuleOutcome:
    """R2: for square v with two or more odd primes, odd k_i requires p_i = 3 (mod 4)."""
    if not f.is_square or len(f.pairs) < 2 or 2 in f.primes:
        return RuleOutcome("R2", True, f"v = {f} outside the rule's hypotheses", applicable=False)
    v = f.v
    for p, e in f.pairs:
        k = e // 2
        if not congruence_rule(p, e):
            s = _geometric_sum_mod4(p, e)
            terms = f"{p} + 1" if e == 2 else f"{p}^{e - 1} + ... + {p} + 1"
            n_order = v // p**e
            gap = (v - n_order) // 4
            return RuleOutcome(
                "R2", False,
                f"v = {f}: k = {k} is odd at p = {p} and {p} ≡ 1 (mod 4); "
                f"{terms} ≡ {s} (mod 4), so p - 1 = {p - 1} does not divide "
                f"(v - |N|)/4 = ({v} - {n_order})/4 = {gap}",
            )
    return RuleOutcome("R2", True, f"v = {f}: every odd k_i sits on a prime ≡ 3 (mod 4)")


@dataclass(frozen=True)
class SubgroupRestriction:
    """Parameters forced on D intersect N for a Hall subgroup N of order v1."""

    v1: int
    pi: int
    theta: int
    beta1: int
    delta1: int
    discriminant: int
    k1_plus: Fraction | None
    k1_minus: Fraction | None

    def _roots(self) -> list[Fraction]:
        return [r for r in (self.k1_plus, self.k1_minus) if r is not None]

    def integral_roots(self) -> list[int]:
        out = []
        for r in self._roots():
            if r.denominator == 1 and 0 <= r <= self.v1 - 1 and int(r) not in out:
                out.append(int(r))
        return out

    @property
    def locally_infeasible(self) -> bool:
        return not self.integral_roots()

    def candidate_params(self) -> list[PdsParams]:
        """Sub-parameters (v1, k1, lambda1, mu1) for each admissible integral root."""
        out = []
        for k1 in self.integral_roots():
            num = self.delta1 - self.beta1**2
            if num % 4:
                continue
            mu1 = k1 - num // 4
            lam1 = mu1 + self.beta1
            if lam1 >= 0 and mu1 >= 0:
                out.append(PdsParams(self.v1, k1, lam1, mu1))
        return out


def subgroup_restriction(params: PdsParams, n_order: int) -> SubgroupRestriction:
    if not params.delta_is_square:
        raise ValueError(f"Delta = {params.delta} is not a perfect square")
    v = params.v
    if n_order < 1 or v % n_order:
        raise ValueError(f"{n_order} does not divide v = {v}")
    index = v // n_order
    if math.gcd(n_order, index) != 1:
        raise ValueError(f"gcd({n_order}, {index}) != 1")
    if index % 2 == 0:
        raise ValueError(f"index {index} is even")

    beta = params.beta
    pi = math.gcd(n_order, math.isqrt(params.delta))
    # unique theta with (2 theta - 1) pi <= beta < (2 theta + 1) pi
    theta = (beta + pi) // (2 * pi)
    beta1 = beta - 2 * theta * pi
    delta1 = pi * pi
    s = n_order + beta1
    disc = s * s - (delta1 - beta1 * beta1) * (n_order - 1)
    if disc >= 0 and _is_square(disc):
        r = math.isqrt(disc)
        plus, minus = Fraction(s + r, 2), Fraction(s - r, 2)
    else:
        plus = minus = None
    return SubgroupRestriction(n_order, pi, theta, beta1, delta1, disc, plus, minus)


def paley_existence(f: OrderFactorization) -> Verdict | None:
    """A known construction for Paley-type parameters on this order, if any."""
    v = f.v
    if f.is_prime_power and v % 4 == 1:
        return Verdict(v, KNOWN_EXISTS, "PaleyField",
                       f"nonzero squares of F_{v} (v = {f}) form a Paley-type PDS")
    if (len(f.pairs) >= 2 and 2 not in f.primes and f.is_square
            and all((e // 2) % 2 == 0 for _, e in f.pairs)):
        return Verdict(v, KNOWN_EXISTS, "Polhill",
                       f"v = {f} has every k_i even; Polhill's construction applies")
    return None


def sieve(v: int) -> Verdict:
    """Classify an order as KnownExists, Infeasible, Open, or NotApplicable."""
    if v < 5 or v % 4 != 1:
        return Verdict(v, NOT_APPLICABLE, None,
                       f"Paley parameters need v ≡ 1 (mod 4) and v >= 5; got v = {v}")
    f = OrderFactorization.of(v)
    params = paley_params(v)

    outcomes = []
    if not f.is_square:
        outcomes.append(rule_delta_square(params))
    outcomes.append(rule_main_theorem(f))
    outcomes.append(rule_beta_minus_one(params))
    failed = [o for o in outcomes if o.applicable and not o.passed]

    known = paley_existence(f)
    if known is not None:
        if failed:
            raise InternalConsistencyError(
                f"v = {v}: construction {known.rule} exists but {failed[0].rule} fires: {failed[0].detail}")
        return known
    if failed:
        return Verdict(v, INFEASIBLE, failed[0].rule, failed[0].detail)
    return Verdict(v, OPEN, None, f"v = {f}: no construction known and no rule excludes it")


def atlas(max_v: int) -> list[Verdict]:
    """Sieve verdicts for every v = 1 (mod 4) with 5 <= v <= max_v."""
    return [sieve(v) for v in range(5, max_v + 1, 4)]
