import math

import pytest

from coprimality.arith import is_prime
from coprimality.perset import N1, make_explicit, multiples
from coprimality.primefam import (
    ALL_PRIMES,
    FERMAT,
    MERSENNE,
    TWIN,
    Family,
    FamilyError,
    custom,
    density_probe,
    euclid_chain,
    family_enumerate,
    load_family_file,
    next_new_prime,
    partition_check,
    progression,
    verify_paper_chain,
)
from coprimality.topology import closure

from .test_arith import trial_is_prime


def test_mersenne_enumeration():
    got = family_enumerate(MERSENNE, 4)
    assert got.members == [3, 7, 31, 127] and not got.exhausted
    assert all(trial_is_prime(2**p - 1) for p in (2, 3, 5, 7))
    full = family_enumerate(MERSENNE, 50)
    assert full.exhausted
    # exponents p <= 61 with 2^p - 1 prime
    assert [m.bit_length() for m in full.members] == [2, 3, 5, 7, 13, 17, 19, 31, 61]


def test_fermat_enumeration():
    got = family_enumerate(FERMAT, 5)
    assert got.members == [3, 5, 17, 257, 65537]
    assert all(trial_is_prime(q) for q in got.members)
    assert family_enumerate(FERMAT, 6).exhausted


def test_progression_and_twin_enumeration():
    assert family_enumerate(progression(1, 4), 3).members == [5, 13, 17]
    assert [p for p in range(2, 18) if trial_is_prime(p) and p % 4 == 1] == [5, 13, 17]
    twins = family_enumerate(TWIN, 8).members
    assert twins == [p for p in range(2, 80) if trial_is_prime(p) and trial_is_prime(p + 2)][:8]


def test_family_validation():
    with pytest.raises(FamilyError):
        progression(2, 4)
    with pytest.raises(FamilyError):
        custom([2, 4])
    with pytest.raises(FamilyError):
        Family("weird")
    assert family_enumerate(custom([7, 3, 7]), 5) == ([3, 7], True)


def test_family_file(tmp_path):
    f = tmp_path / "fam.txt"
    f.write_text("# small primes\n3\n\n5  # five\n7\n")
    fam = load_family_file(f)
    assert family_enumerate(fam, 10).members == [3, 5, 7]
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n9\n")
    with pytest.raises(FamilyError, match=r"bad.txt:2"):
        load_family_file(bad)


def test_probe_examples():
    assert density_probe(ALL_PRIMES, 10).witness_for(10) == 3
    assert density_probe(MERSENNE, 21).witness_for(21) == 31
    assert density_probe(FERMAT, 15).witness_for(15) == 17


def _family_member(kind, w):
    if kind is MERSENNE:
        return (w + 1) & w == 0 and is_prime(w)
    if kind is FERMAT:
        return w in (3, 5, 17, 257, 65537)
    return is_prime(w)


@pytest.mark.parametrize("kind", [ALL_PRIMES, MERSENNE, FERMAT, TWIN])
def test_probe_witnesses_rederived(kind):
    table = density_probe(kind, 300)
    assert table.resolved
    for row in table.rows:
        w = row.witness
        assert math.gcd(row.n, w) == 1 and is_prime(w) and _family_member(kind, w)
        # smallest qualifying member
        earlier = [v for v in family_enumerate(kind, 30).members if v < w]
        assert all(math.gcd(row.n, v) != 1 for v in earlier)


def test_probe_all_primes_witness_bound():
    table = density_probe(ALL_PRIMES, 10**4)
    assert table.resolved
    for row in table.rows:
        smallest = next(p for p in range(2, 100) if trial_is_prime(p) and row.n % p)
        assert row.witness == smallest <= 37


def test_probe_unresolved_rows():
    table = density_probe(FERMAT, 300)
    assert table.unresolved() == []
    # the Fermat primes below 20 are 3, 5, 17 and all divide 255
    small = density_probe(FERMAT, 300, search_bound=20)
    assert small.unresolved() == [255]
    row = next(r for r in small.rows if r.n == 255)
    assert row.witness is None and row.bound == 20
    assert small.to_json()["rows"][253] == {"n": 255, "witness": None, "bound": 20}


def test_next_new_prime_examples():
    assert next_new_prime([]) == 2
    assert next_new_prime([2]) == 3
    assert next_new_prime([2, 3, 5]) == 7
    assert next_new_prime([3, 5]) == 2
    with pytest.raises(ValueError):
        next_new_prime([4])
    with pytest.raises(OverflowError):
        next_new_prime([p for p in range(2, 100) if trial_is_prime(p)])


def test_euclid_chain_is_new_each_time():
    found = euclid_chain((2,), 10)
    assert len(set(found)) == 10
    product = 2
    for q in found:
        assert product % q != 0 and is_prime(q)
        product *= q


@pytest.mark.parametrize("n", [2, 10, 10**5])
def test_partition_check(n):
    assert partition_check(n)


def test_subspace_closure_consistency():
    for s in [make_explicit({6, 10}), multiples(9), make_explicit({2}) | multiples(15)]:
        assert (s & N1) == s
        full = closure(s)
        diff = full - (full & N1)
        assert diff.enumerate(3) in ([], [1])


def test_verify_quick_all_pass():
    report = verify_paper_chain("quick")
    assert report.passed
    assert report.window == 1000
    assert len({c.name for c in report.checks}) == len(report.checks) == 7
    assert all(c.statement for c in report.checks)
