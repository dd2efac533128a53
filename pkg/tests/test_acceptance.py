"""Exit criteria.  Each test records one PASS/FAIL line in the terminal summary."""

import io
import json
import random
import subprocess
import sys
import time
from fractions import Fraction

from pdskit.cli import run
from pdskit.feasibility import INFEASIBLE, KNOWN_EXISTS, OPEN, congruence_rule, sieve, subgroup_restriction
from pdskit.gf import paley_pds
from pdskit.groups import parse_group, power_class_partition
from pdskit.pds import (
    CandidateSet,
    PdsParams,
    cayley_srg_params,
    character_sum_check,
    paley_params,
    verify_pds,
)
from pdskit.search import (
    BRUTE,
    ORBIT,
    SearchProblem,
    mixed_orbit_closure_check,
    multiplier_closure_check,
    search,
)

from conftest import criterion, naive_counts
from test_feasibility import geometric_sum, prime_powers_1_mod_4

PALEY_QS = [5, 9, 13, 17, 25, 29, 37, 41, 49]


def cli(argv, stdin=None):
    out = io.StringIO()
    saved = sys.stdin
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        code = run(argv, out)
    finally:
        sys.stdin = saved
    return code, out.getvalue()


def test_criterion_1_paley_constructions():
    with criterion(1, "paley --q | verify gives exact Paley params, regular, nontrivial, < 5 s"):
        start = time.perf_counter()
        for q in PALEY_QS:
            code, emitted = cli(["paley", "--q", str(q)])
            assert code == 0
            code, out = cli(["verify", "--json"], stdin=emitted)
            report = json.loads(out)
            assert code == 0
            assert report["is_pds"] and report["is_regular"] and not report["is_trivial"]
            assert tuple(report["params"]) == paley_params(q).as_tuple()
        assert time.perf_counter() - start < 5


def test_criterion_2_sieve_on_paper_instances():
    with criterion(2, "sieve(225), sieve(1225) Infeasible R2; 441, 3969 Open; prime powers KnownExists, < 5 s"):
        start = time.perf_counter()
        v225 = sieve(225)
        assert v225.kind == INFEASIBLE and v225.rule == "R2" and "5 ≡ 1 (mod 4)" in v225.detail
        v1225 = sieve(1225)
        assert v1225.kind == INFEASIBLE and v1225.rule == "R2"
        assert sieve(441).kind == OPEN
        assert sieve(3**4 * 7**2).kind == OPEN
        qs = prime_powers_1_mod_4(2000)
        assert len(qs) > 150
        assert all(sieve(q).kind == KNOWN_EXISTS for q in qs)
        assert time.perf_counter() - start < 5


def test_criterion_3_hall_restriction_arithmetic():
    with criterion(3, "subgroup_restriction((225,112,55,56), 9 | 25) = (9,4,1,2) | (25,12,5,6)"):
        params = PdsParams(225, 112, 55, 56)
        for n, expected in [(9, PdsParams(9, 4, 1, 2)), (25, PdsParams(25, 12, 5, 6))]:
            r = subgroup_restriction(params, n)
            assert r.beta1 == -1
            assert r.delta1 == r.pi**2 == n
            assert r.k1_plus == r.k1_minus == Fraction(expected.k)
            assert r.candidate_params() == [expected]
            assert expected == paley_params(n)


def test_criterion_4_orbit_restriction_soundness():
    with criterion(4, "orbit search == unrestricted brute force in Z3xZ3, Z5xZ5; closure checks hold, < 60 s"):
        start = time.perf_counter()
        for spec in ["Z3^2", "Z5^2"]:
            G = parse_group(spec)
            target = paley_params(G.v)
            orbit = search(SearchProblem(G, target, mode=ORBIT))
            brute = search(SearchProblem(G, target, mode=BRUTE), prune=False)
            assert orbit.complete and brute.complete
            assert orbit.solutions
            assert {D.members for D in orbit.solutions} == {D.members for D in brute.solutions}
            for D in orbit.solutions:
                assert multiplier_closure_check(D) == (True, None)
                assert mixed_orbit_closure_check(D) == (True, None)
        assert time.perf_counter() - start < 60


def test_criterion_5_congruence_oracle():
    with criterion(5, "congruence_rule matches big-integer geometric sums, odd p < 1000, k <= 6, < 5 s"):
        start = time.perf_counter()
        for p in range(3, 1000, 2):
            for k in range(1, 7):
                direct = geometric_sum(p, 2 * k) % 4 == 0
                assert congruence_rule(p, 2 * k) == direct
                if k % 2:
                    assert direct == (p % 4 == 3)
                else:
                    assert direct
        assert time.perf_counter() - start < 5


def _found_and_constructed():
    sets = [paley_pds(q) for q in prime_powers_1_mod_4(251)]
    for spec in ["Z3^2", "Z5^2"]:
        G = parse_group(spec)
        sets += search(SearchProblem(G, paley_params(G.v))).solutions
    sets += search(SearchProblem(parse_group("Z13"), paley_params(13), mode=BRUTE)).solutions
    sets += search(SearchProblem(parse_group("Z17"), paley_params(17), mode=BRUTE)).solutions
    G = parse_group("Z15^2")
    lines = [{G.scale(s, gen) for s in range(15)} for gen in [(1, 0, 1, 0), (0, 1, 0, 1)]]
    sets.append(CandidateSet(G, frozenset(set().union(*lines) - {G.identity})))
    return sets


def test_criterion_6_srg_cross_check():
    with criterion(6, "cayley_srg_params(Paley 13) = SRG(13,6,2,3); agrees with verify_pds for v <= 250"):
        assert cayley_srg_params(paley_pds(13)).params == PdsParams(13, 6, 2, 3)
        sets = _found_and_constructed()
        assert len(sets) > 60
        for D in sets:
            assert D.group.v <= 250
            report = verify_pds(D)
            assert report.is_pds and report.is_regular
            assert cayley_srg_params(D).params == report.params


ACCEPTANCE_GROUPS = ["Z5", "Z3^2", "Z9", "Z13", "Z2^4", "Z4^2", "Z17", "Z5^2",
                     "Z3^3", "Z3xZ9", "Z29", "Z3^2xZ5", "Z37", "Z41", "Z7^2", "Z2xZ3xZ7"]


def _random_candidate(G, rng):
    nonid = [g for g in G.elements() if g != G.identity]
    kind = rng.randrange(3)
    if kind == 0:
        return CandidateSet.of(G, rng.sample(nonid, rng.randint(0, len(nonid))))
    if kind == 1:
        members = set()
        for g in rng.sample(nonid, rng.randint(0, len(nonid))):
            members |= {g, G.neg(g)}
        return CandidateSet.of(G, members)
    classes = power_class_partition(G)
    return CandidateSet.of(G, set().union(*rng.sample(classes, rng.randint(0, len(classes)))))


def test_criterion_7_counting_identity_suite():
    with criterion(7, "1000 random candidates, v <= 49: identity + character sums on accept, witness on reject"):
        rng = random.Random(20261016)
        accepted = rejected = 0
        for i in range(1000):
            G = parse_group(ACCEPTANCE_GROUPS[i % len(ACCEPTANCE_GROUPS)])
            assert G.v <= 49
            D = _random_candidate(G, rng)
            report = verify_pds(D)
            if report.is_pds:
                accepted += 1
                assert report.params.satisfies_counting_identity()
                if report.is_regular:
                    assert character_sum_check(D, report.params, tol=1e-6)
            else:
                rejected += 1
                w = report.failing_element
                assert w is not None
                counts = naive_counts(G, D.members)
                same_side = [g for g in counts if (g in D.members) == (w in D.members)]
                assert any(counts[g] != counts[w] for g in same_side)
        assert accepted >= 50 and rejected >= 50


def test_criterion_8_atlas_determinism():
    with criterion(8, "atlas --max 500 --json is byte-identical across two runs"):
        cmd = [sys.executable, "-m", "pdskit", "atlas", "--max", "500", "--json"]
        first = subprocess.run(cmd, capture_output=True, check=True).stdout
        second = subprocess.run(cmd, capture_output=True, check=True).stdout
        assert first == second
        lines = first.decode("utf-8").splitlines()
        assert len(lines) == len(range(5, 501, 4))
        assert json.loads(lines[0])["schema"] == "pds-kit/1"
