import math
import random

import pytest

from coprimality.golomb import coarseness_demo, golomb_basic, golomb_interior_point, is_golomb_open
from coprimality.oracle import oracle_golomb_check, oracle_open_check
from coprimality.perset import EMPTY, EPSet, make_explicit, make_periodic, multiples, union
from coprimality.topology import is_open, sigma, sigma_decomposition

from .conftest import random_suite


def test_golomb_basic_examples():
    assert golomb_basic(1, 4) == make_periodic(4, {1})
    assert golomb_basic(5, 6) == make_periodic(6, {5})
    assert golomb_basic(7, 3) == EPSet.build(3, {1}, removed=(1, 4))
    assert golomb_basic(7, 3).enumerate(3) == [7, 10, 13]
    with pytest.raises(ValueError):
        golomb_basic(2, 4)


def test_is_golomb_open_examples():
    assert is_golomb_open(sigma(4))
    assert is_golomb_open(golomb_basic(1, 4))
    assert not is_golomb_open(multiples(2))
    assert is_golomb_open(EMPTY)
    assert not is_golomb_open(make_explicit({5}))


def test_sigma_is_union_of_golomb_basics():
    for n in range(1, 201):
        s = sigma(n)
        assert is_golomb_open(s)
        u = EMPTY
        for a, b in sigma_decomposition(n):
            u = union(u, golomb_basic(a, b))
        assert u == s


def test_strictness_witness():
    w = golomb_basic(1, 4)
    assert is_golomb_open(w) and not is_open(w)
    assert 1 in w and 3 not in w


@pytest.mark.parametrize("n_max", [4, 200])
def test_coarseness_demo(n_max):
    report = coarseness_demo(n_max)
    assert report.all_sigma_golomb_open
    assert report.witness_is_golomb_open
    assert not report.witness_is_tau_open
    assert report.strict
    assert report.to_json()["strictly_coarser"] is True


def test_coarseness_demo_validates_range():
    with pytest.raises(ValueError):
        coarseness_demo(3)


def _brute_golomb_point(s, x, b_bound=5000):
    """Raw search: a step coprime to x keeping x + b*k inside s for a full period."""
    top = s.max_exception
    res, added, removed = set(s.residues), set(s.added), set(s.removed)

    def inside(y):
        return (y % s.m in res or y in added) and y not in removed

    for b in range(1, b_bound + 1):
        if math.gcd(b, x) != 1:
            continue
        count = s.m // math.gcd(b, s.m) + max(0, top - x) // b + 2
        if all(inside(x + k * b) for k in range(count)):
            return True
    return False


def test_sampled_soundness_against_raw_search():
    for s in random_suite(100, seed=17):
        for x in s.enumerate(30):
            assert golomb_interior_point(s, x) == _brute_golomb_point(s, x), (s, x)
        if s.added:
            assert not is_golomb_open(s)


def test_oracle_golomb_examples():
    assert oracle_golomb_check(sigma(4), 10, 5000).agrees
    v = oracle_golomb_check(multiples(2), 5, 5000)
    assert v.agrees and set(v.evidence.values()) == {None}
    v = oracle_golomb_check(golomb_basic(7, 3), 10, 5000)
    assert v.agrees and all(v.evidence.values())


def test_open_oracle_confirms_witness_not_tau_open():
    v = oracle_open_check(golomb_basic(1, 4), 1, 10**4)
    assert v.agrees and v.evidence == {1: None}


def test_random_golomb_open_sets_have_open_points():
    rng = random.Random(4)
    for _ in range(50):
        u = EMPTY
        for _ in range(rng.randint(1, 3)):
            b = rng.randint(1, 30)
            a = rng.choice([a for a in range(1, 40) if math.gcd(a, b) == 1])
            u = union(u, golomb_basic(a, b))
        assert is_golomb_open(u)
