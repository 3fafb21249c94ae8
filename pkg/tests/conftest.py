import random

import pytest
from hypothesis import strategies as st

from coprimality import kernels
from coprimality.perset import EPSet

# divisors of 2^3 * 3^2 * 5 * 7 keep every lcm small
MODULI = [d for d in range(1, 2521) if 2520 % d == 0]


# exception points with prime factors <= 13 keep lcm moduli (and so the
# residue tables) bounded by 2520 * 11 * 13
SMOOTH_POINTS = [x for x in range(1, 121) if all(x % p for p in range(17, x + 1) if all(p % q for q in range(2, p)))]


def random_epset(rng: random.Random) -> EPSet:
    m = rng.choice(MODULI)
    k = rng.randint(0, min(m, 6))
    residues = rng.sample(range(m), k) if rng.random() < 0.85 else []
    added = rng.sample(SMOOTH_POINTS, rng.randint(0, 3))
    removed = rng.sample(SMOOTH_POINTS, rng.randint(0, 3))
    return EPSet.build(m, residues, added, removed)


def random_suite(count, seed=0, nonempty=False):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        s = random_epset(rng)
        if nonempty and s.is_empty():
            continue
        out.append(s)
    return out


@st.composite
def epsets(draw, max_point=40):
    m = draw(st.sampled_from(MODULI[:-8]))
    residues = draw(st.sets(st.integers(0, m - 1), max_size=min(m, 5)))
    added = draw(st.sets(st.integers(1, max_point), max_size=3))
    removed = draw(st.sets(st.integers(1, max_point), max_size=3))
    return EPSet.build(m, residues, added, removed)


def brute_members(s: EPSet, n: int) -> list[int]:
    """Membership by the raw definition (P | A) - B, bypassing the engine."""
    res = set(s.residues)
    return [x for x in range(1, n + 1) if (x % s.m in res or x in s.added) and x not in s.removed]


@pytest.fixture(scope="session", autouse=True)
def _compiled_kernels():
    kernels.warmup()
