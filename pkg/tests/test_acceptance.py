"""Exit criteria.  Each test prints one PASS/FAIL line with its runtime.

Run just this module with ``pytest tests/test_acceptance.py -s`` (the lines
are also printed without ``-s``, through the terminal reporter).
"""

import itertools
import math
import random
import time
from contextlib import contextmanager

import pytest

from coprimality.arith import factorize, is_prime, radical
from coprimality.expr import evaluate_text
from coprimality.golomb import coarseness_demo, golomb_basic
from coprimality.oracle import oracle_closure_check, oracle_golomb_check, oracle_open_check
from coprimality.perset import EMPTY, NATURALS, complement, intersect, is_subset, make_explicit, multiples, union
from coprimality.primefam import ALL_PRIMES, FERMAT, MERSENNE, density_probe, euclid_chain, partition_check
from coprimality.topology import closure, interior, is_closed, is_dense, is_nowhere_dense, is_open, sigma

from .conftest import random_suite
from .curated import CURATED

pytestmark = pytest.mark.acceptance


@contextmanager
def criterion(request, number, title, limit):
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")
    start = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        line = f"ACCEPTANCE {number:>2} {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s / {limit}s)"
        if reporter is not None:
            reporter.write_line(line)
        else:
            print(line)


def primes_below(n):
    return [p for p in range(2, n) if is_prime(p)]


def test_01_singleton_closure_formula(request):
    with criterion(request, 1, "cl({n}) = intersection of M_p over p | n, n in [2,500]", 1.0):
        for n in range(2, 501):
            expected = NATURALS
            for p, _ in factorize(n):
                expected = intersect(expected, multiples(p))
            assert closure(make_explicit({n})) == expected, n


def test_02_prime_closures(request):
    with criterion(request, 2, "cl({p}) = M_p and M_p closed, primes p < 100", 1.0):
        for p in primes_below(100):
            assert closure(make_explicit({p})) == multiples(p)
            assert is_closed(multiples(p))


def test_03_base_law(request):
    with criterion(request, 3, "sigma(nm) = sigma(n) ∩ sigma(m), n, m <= 60", 1.0):
        for n in range(1, 61):
            for m in range(1, 61):
                assert sigma(n * m) == intersect(sigma(n), sigma(m)), (n, m)


def test_04_kuratowski(request):
    with criterion(request, 4, "Kuratowski axioms + interior duality on 500 random EPSets", 30.0):
        suite = random_suite(500, seed=2024)
        assert closure(EMPTY) == EMPTY
        for s, t in zip(suite, suite[1:] + suite[:1]):
            cs, ct = closure(s), closure(t)
            assert is_subset(s, cs)
            assert closure(cs) == cs
            u = union(s, t)
            assert closure(u) == union(cs, ct)
            assert is_subset(cs, closure(u))
            assert is_subset(closure(intersect(s, t)), cs)
            assert interior(s) == complement(closure(complement(s)))
            assert is_subset(interior(s), s)
            assert is_open(s) == is_closed(complement(s))


def test_05_oracle_equivalence(request):
    with criterion(request, 5, "curated 50-case suite: engine vs brute-force oracle", 60.0):
        assert len(CURATED) == 50
        for text in CURATED:
            s = evaluate_text(text)
            for verdict in (
                oracle_closure_check(s, 200, prime_bound=31, subset_size=5),
                oracle_open_check(s, 20, 10**4),
                oracle_golomb_check(s, 10, 5000),
            ):
                assert verdict.discrepancies == (), (text, verdict.check, verdict.discrepancies[:3])
                assert verdict.inconclusive == []


def test_06_dichotomy_and_connectedness(request):
    with criterion(request, 6, "dense/nowhere-dense dichotomy, hyper- and ultraconnectedness", 10.0):
        suite = random_suite(200, seed=7, nonempty=True)
        for s in suite:
            assert is_dense(s) != is_nowhere_dense(s)
        sigmas = {n: sigma(n) for n in range(1, 101)}
        unions = list(sigmas.values())
        unions += [union(sigmas[a], sigmas[b]) for a, b in itertools.combinations(range(1, 101), 2)]
        rng = random.Random(6)
        while len(unions) < 100 + 4950 + 300:
            ns = rng.sample(range(1, 101), rng.randint(3, 6))
            if math.lcm(*(radical(n) for n in ns)) > 10**5:
                continue  # residue table too large to materialize
            u = EMPTY
            for n in ns:
                u = union(u, sigmas[n])
            unions.append(u)
        for u in unions:
            assert is_dense(u)
        closures = list({closure(s) for s in suite})
        for a, b in itertools.combinations_with_replacement(closures, 2):
            assert not intersect(a, b).is_empty()


def test_07_primes_dense_and_new_primes(request):
    with criterion(request, 7, "all-primes probe to 10^4 (witness <= 37) and ten new primes from {2}", 5.0):
        table = density_probe(ALL_PRIMES, 10**4)
        assert table.resolved
        assert max(r.witness for r in table.rows) <= 37
        found = euclid_chain((2,), 10)
        assert len(set(found)) == 10 and all(is_prime(q) for q in found)


def test_08_partition_window(request):
    with criterion(request, 8, "union of M_p over primes covers [2, 10^5]", 1.0):
        assert partition_check(10**5)


def test_09_strict_coarseness(request):
    with criterion(request, 9, "tau strictly coarser than Golomb's topology", 30.0):
        report = coarseness_demo(200)
        assert report.all_sigma_golomb_open and report.witness_is_golomb_open
        assert not report.witness_is_tau_open and report.strict
        assert report.witness == golomb_basic(1, 4)
        verdict = oracle_open_check(report.witness, 5, 10**4)
        assert verdict.agrees
        # 1 lies in every sigma(n), so no witness for x = 1 means no sigma(n) inside
        assert verdict.evidence[1] is None


def test_10_named_family_probes(request):
    with criterion(request, 10, "Mersenne and Fermat probes to n = 200 resolve", 5.0):
        mersenne = density_probe(MERSENNE, 200)
        fermat = density_probe(FERMAT, 200)
        assert mersenne.resolved and fermat.resolved
        assert {r.witness for r in mersenne.rows} <= {3, 7, 31, 127, 8191}
        assert {r.witness for r in fermat.rows} <= {3, 5, 17, 257, 65537}
