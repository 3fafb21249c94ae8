"""Time the numba kernels against their pure-numpy twins.

    python benchmarks/bench_kernels.py [--repeat 5]

Both paths are imported directly, so the COPRIMALITY_PURE_NUMPY flag does not
matter here.  The first numba call of each kernel is a warm-up and excluded.
"""

import argparse
import time

import numpy as np

from coprimality.kernels import _numba, _numpy, set_arrays
from coprimality.perset import EPSet
from coprimality.topology import sigma


def workloads():
    primes = np.flatnonzero(_numpy.spf_sieve(2000) == np.arange(2001))
    primes = primes[primes >= 2].astype(np.int64)
    ns = np.arange(2, 100_001, dtype=np.int64)
    m6 = set_arrays(EPSet.build(6, {0}))
    dense = set_arrays(sigma(2310))
    gappy = set_arrays(EPSet.build(2520, {0, 840, 1680}, (7, 11), (840,)))
    return {
        "spf_sieve(10^6)": lambda k: k.spf_sieve(10**6),
        "first_coprime(n<=1e5, primes)": lambda k: k.first_coprime(ns, primes),
        "find_first: empty M6∩sigma(30030)": lambda k: k.find_first(*m6, 30030, 30030 * 6, True),
        "find_first: sigma(2310) ⊆ itself": lambda k: k.find_first(*dense, 2310, 2310, False),
        "progression_step: none exists": lambda k: k.progression_step(*gappy, 7, 5000),
    }


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"{'kernel':<36} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for name, run in workloads().items():
        a = run(_numba)
        b = run(_numpy)
        assert np.array_equal(np.asarray(a), np.asarray(b)), name
        t_jit = best_of(lambda: run(_numba), args.repeat)
        t_np = best_of(lambda: run(_numpy), args.repeat)
        print(f"{name:<36} {t_jit * 1e3:>10.2f} {t_np * 1e3:>10.2f} {t_np / t_jit:>7.1f}x")


if __name__ == "__main__":
    main()
