"""numba-compiled versions of the hot loops (see ``_numpy`` for contracts)."""

import numpy as np
from numba import njit


@njit(cache=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def _contains(arr, y):
    lo = 0
    hi = arr.shape[0]
    while lo < hi:
        mid = (lo + hi) // 2
        if arr[mid] < y:
            lo = mid + 1
        else:
            hi = mid
    return lo < arr.shape[0] and arr[lo] == y


@njit(cache=True)
def _member(y, mask, m, added, removed):
    if mask[y % m]:
        return not _contains(removed, y)
    return _contains(added, y)


@njit(cache=True)
def spf_sieve(limit):
    spf = np.zeros(limit + 1, dtype=np.int64)
    primes = np.empty(limit + 1, dtype=np.int64)
    count = 0
    for i in range(2, limit + 1):
        if spf[i] == 0:
            spf[i] = i
            primes[count] = i
            count += 1
        j = 0
        while j < count:
            p = primes[j]
            if p > spf[i] or i * p > limit:
                break
            spf[i * p] = p
            j += 1
    return spf


@njit(cache=True)
def first_coprime(ns, members):
    out = np.full(ns.shape[0], -1, dtype=np.int64)
    for i in range(ns.shape[0]):
        n = ns[i]
        for j in range(members.shape[0]):
            if _gcd(n, members[j]) == 1:
                out[i] = j
                break
    return out


@njit(cache=True)
def find_first(mask, m, added, removed, n, window, want_member):
    for y in range(1, window + 1):
        if _member(y, mask, m, added, removed) == want_member and _gcd(y, n) == 1:
            return y
    return 0


@njit(cache=True)
def progression_step(mask, m, added, removed, x, b_bound):
    top = 0
    if added.shape[0]:
        top = max(top, added[-1])
    if removed.shape[0]:
        top = max(top, removed[-1])
    for b in range(1, b_bound + 1):
        if _gcd(b, x) != 1:
            continue
        count = m // _gcd(b, m) + max(0, top - x) // b + 2
        ok = True
        for k in range(count):
            if not _member(x + k * b, mask, m, added, removed):
                ok = False
                break
        if ok:
            return b
    return 0
