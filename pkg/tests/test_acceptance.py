"""Acceptance gate: one check per criterion, one PASS/FAIL line each.

Every criterion runs its scenario on a fresh context (so runtimes include
all the linear algebra) and also compares against values written out here,
independently of the targets file the scenarios read.
"""

from __future__ import annotations

import random
import time

import numpy as np
import pytest

from f2workbench.f2alg import monomial_basis
from f2workbench.gf2la import BitMatrix, kernel, rank, rref
from f2workbench.invariants import act, action_on_degree, dickson, poly_algebra, substitution
from f2workbench.scenarios import Context, run_scenario
from f2workbench.series import RationalSeries
from f2workbench.steenrod import sq, sq1
from strategies import gl_elements

CASES = 200


def scenario_ok(name: str, max_degree: int | None = None) -> tuple[bool, str, object]:
    rep = run_scenario(name, max_degree, 0, Context())
    detail = f"{name} {rep.verdict}"
    if rep.mismatches:
        detail += f" first mismatch {rep.mismatches[0]}"
    return rep.passed, detail, rep


def table(rep, name: str) -> list[int]:
    return list(next(t for t in rep.tables if t.name == name).dims)


def expansion(exponents, denominator, n_max):
    return RationalSeries.from_terms(exponents, denominator).expand(n_max)


# ---------------------------------------------------------------------------


def crit_dickson_series():
    ok, detail, rep = scenario_ok("dickson-series", 30)
    dims = table(rep, "gl4-fixed-dims")
    ok &= dims == expansion([0], [8, 12, 14, 15], 30)
    ok &= [g.degree for g in dickson(4)] == [8, 12, 14, 15]
    return ok, detail, 60


def crit_a6_invariants():
    ok, detail, rep = scenario_ok("a6-invariants", 40)
    ok &= table(rep, "a6-fixed-dims") == expansion([0, 9, 15, 24], [3, 5, 8, 12], 40)
    return ok, detail, 120


def crit_a7_invariants():
    ok, detail, rep = scenario_ok("a7-invariants", 46)
    dims = table(rep, "a7-fixed-dims")
    eight = expansion([0, 18, 20, 21, 24, 25, 27, 45], [8, 12, 14, 15], 46)
    seven = expansion([0, 18, 20, 21, 24, 25, 45], [8, 12, 14, 15], 46)
    without_45 = expansion([0, 18, 20, 21, 24, 25, 27], [8, 12, 14, 15], 46)
    ok &= dims == eight and dims[27] != seven[27] and dims[45] != without_45[45]
    return ok, f"{detail}; dim in degree 27 = {dims[27]}, degree 45 = {dims[45]}", 600


def crit_coproduct_identities():
    ok, detail, rep = scenario_ok("lemma-3-1")
    held = sum(c.holds for c in rep.checks)
    ok &= held == len(rep.checks) and len(rep.checks) >= 7
    return ok, f"{detail}; {held}/{len(rep.checks)} identities", 1


def crit_em_e2():
    ok, detail, rep = scenario_ok("em-e2", 14)
    koszul, presented = table(rep, "koszul-ext"), table(rep, "presented")
    ok &= koszul == presented and presented[:7] == [1, 0, 1, 2, 2, 4, 5] and presented[8] == 9
    return ok, f"{detail}; dims {presented}", None


def crit_em_e3():
    ok, detail, rep = scenario_ok("em-e3", 8)
    e3 = table(rep, "e3")
    ok &= e3 == [1, 0, 1, 1, 0, 2, 2, 1, 3] and e3[5] == 2
    return ok, f"{detail}; dims {e3}", None


def crit_psu_expansion():
    ok, detail, rep = scenario_ok("psu-expansion", 24)
    printed = [1, 0, 0, 1, 0, 2, 2, 0, 3, 4, 2, 3, 5, 4, 6, 8, 5, 10, 11, 7, 15, 16, 12, 18, 22]
    twice = [2 * a - b for a, b in zip(expansion([0, 9, 15, 24], [3, 5, 8, 12], 24), expansion([0, 3, 15, 18], [8, 12], 24))]
    ok &= table(rep, "2A-D") == printed and twice == printed
    return ok, detail, None


def crit_bockstein_a6():
    ok, detail, rep = scenario_ok("bockstein-a6", 30)
    ok &= table(rep, "sq1-homology") == expansion([0, 3, 15, 18], [8, 12], 30)
    return ok, detail, None


def crit_sq1_and_d14():
    ok1, d1, _ = scenario_ok("sq1-identities")
    ok2, d2, _ = scenario_ok("d14-relation")
    return ok1 and ok2, f"{d1}; {d2}", None


def crit_restriction():
    ok, detail, rep = scenario_ok("restriction-22")
    named = [c.name for c in rep.checks if c.name.endswith("restricts to 0")]
    ok &= len(named) == 4
    return ok, detail, None


def crit_mcl():
    ok1, d1, _ = scenario_ok("mcl-series", 40)
    ok2, d2, rep = scenario_ok("mcl-connectivity", 8)
    dims = table(rep, "mcl")
    ok = ok1 and ok2 and dims[1:7] == [0] * 6 and dims[7:9] == [1, 1]
    return ok, f"{d1}; {d2}", None


def crit_ly_n_series():
    ok, detail, rep = scenario_ok("ly-n-series", 20)
    dims = table(rep, "summands")
    ok &= min(dims) >= 0 and dims[1] == 1
    return ok, detail, None


# ---------------------------------------------------------------------------
# property suites, seeded so the gate is reproducible


def _random_poly(rng: random.Random, alg, lo=0, hi=5):
    d = rng.randint(lo, hi)
    basis = monomial_basis(alg, d)
    return alg.element(rng.sample(basis, rng.randint(0, min(len(basis), 10))))


def _ring_hom(rng, alg, group):
    f = substitution(rng.choice(group))
    a, b = _random_poly(rng, alg), _random_poly(rng, alg)
    return f(a * b) == f(a) * f(b) and f(a + b) == f(a) + f(b)


def _cartan(rng, alg, group):
    a, b, k = _random_poly(rng, alg), _random_poly(rng, alg), rng.randint(0, 10)
    rhs = alg.zero()
    for i in range(k + 1):
        rhs = rhs + sq(i, a) * sq(k - i, b)
    return sq(k, a * b) == rhs


def _sq1_sq1(rng, alg, group):
    a = _random_poly(rng, alg, 0, 8)
    return not sq1(sq1(a))


def _unstable(rng, alg, group):
    a = _random_poly(rng, alg, 1, 7)
    d = a.degree if a else 0
    return not sq(d + 1 + rng.randint(0, 3), a) and sq(d, a) == a * a


def _representation(rng, alg, group):
    g, h, d = rng.choice(group), rng.choice(group), rng.randint(0, 6)
    return action_on_degree(g * h, d) == action_on_degree(g, d) @ action_on_degree(h, d)


def _equivariant(rng, alg, group):
    g, a = rng.choice(group), _random_poly(rng, alg, 0, 7)
    return sq1(act(g, a)) == act(g, sq1(a))


def _random_matrix(rng):
    nrng = np.random.default_rng(rng.getrandbits(32))
    return BitMatrix.random(rng.randint(0, 40), rng.randint(1, 90), nrng, rng.choice([0.05, 0.3, 0.5, 0.9]))


def _rank_nullity(rng, alg, group):
    m = _random_matrix(rng)
    return rank(m) + kernel(m).dim == m.cols


def _rref_idempotent(rng, alg, group):
    m = _random_matrix(rng)
    r, red = rref(m)
    r2, red2 = rref(red)
    return r == r2 and red == red2


PROPERTIES = [
    ("ring homomorphism", _ring_hom),
    ("Cartan formula", _cartan),
    ("Sq1 Sq1 = 0", _sq1_sq1),
    ("unstability", _unstable),
    ("rho(gh) = rho(g) rho(h)", _representation),
    ("Sq1 equivariance", _equivariant),
    ("rank-nullity", _rank_nullity),
    ("RREF idempotence", _rref_idempotent),
]


def crit_property_suites():
    rng = random.Random(20240)
    alg = poly_algebra(4)
    group = gl_elements(4)
    parts, ok = [], True
    for name, law in PROPERTIES:
        failures = sum(not law(rng, alg, group) for _ in range(CASES))
        ok &= failures == 0
        parts.append(f"{name} {CASES - failures}/{CASES}")
    return ok, "; ".join(parts), None


CRITERIA = [
    (1, "dickson-series", crit_dickson_series),
    (2, "a6-invariants", crit_a6_invariants),
    (3, "a7-invariants", crit_a7_invariants),
    (4, "lemma-3-1", crit_coproduct_identities),
    (5, "em-e2", crit_em_e2),
    (6, "em-e3", crit_em_e3),
    (7, "psu-expansion", crit_psu_expansion),
    (8, "bockstein-a6", crit_bockstein_a6),
    (9, "sq1-identities and d14-relation", crit_sq1_and_d14),
    (10, "restriction-22", crit_restriction),
    (11, "mcl-series and mcl-connectivity", crit_mcl),
    (12, "ly-n-series", crit_ly_n_series),
    (13, "property suites", crit_property_suites),
]


@pytest.mark.parametrize("number, name, check", CRITERIA, ids=[f"{n:02d}-{name.split()[0]}" for n, name, _ in CRITERIA])
def test_criterion(number, name, check, acceptance_log):
    start = time.perf_counter()
    ok, detail, limit = check()
    elapsed = time.perf_counter() - start
    timing = f"{elapsed:.2f} s"
    if limit is not None:
        timing += f" (limit {limit} s)"
        ok = ok and elapsed <= limit
    line = f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {name}: {detail} [{timing}]"
    acceptance_log.append(line)
    print(line)
    assert ok, line
