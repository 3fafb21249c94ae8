"""Pure-numpy implementations of the hot loops.

Every function here has a twin in ``_numba`` with the same signature and
the same results; the test suite checks them against each other.
"""

import numpy as np

_CHUNK = 1 << 14


def spf_sieve(limit):
    """Smallest-prime-factor table for 0..limit (spf[0] = spf[1] = 0)."""
    spf = np.zeros(limit + 1, dtype=np.int64)
    if limit < 2:
        return spf
    r = int(np.sqrt(limit))
    while r * r > limit:
        r -= 1
    while (r + 1) * (r + 1) <= limit:
        r += 1
    for p in range(2, r + 1):
        if spf[p] == 0:
            seg = spf[p * p :: p]
            seg[seg == 0] = p
            spf[p] = p
    rest = spf == 0
    rest[:2] = False
    spf[rest] = np.flatnonzero(rest)
    return spf


def first_coprime(ns, members):
    """For each n, the index of the first member coprime to n, else -1."""
    ns = np.asarray(ns, dtype=np.int64)
    members = np.asarray(members, dtype=np.int64)
    out = np.full(ns.shape[0], -1, dtype=np.int64)
    pending = np.arange(ns.shape[0])
    start = 0
    step = 8
    while pending.size and start < members.shape[0]:
        block = members[start : start + step]
        hits = np.gcd.outer(ns[pending], block) == 1
        found = hits.any(axis=1)
        out[pending[found]] = start + hits[found].argmax(axis=1)
        pending = pending[~found]
        start += block.shape[0]
        step *= 2
    return out


def _membership(ys, mask, m, added, removed):
    inside = mask[ys % m]
    if added.shape[0]:
        inside |= np.isin(ys, added)
    if removed.shape[0]:
        inside &= ~np.isin(ys, removed)
    return inside


def find_first(mask, m, added, removed, n, window, want_member):
    """Smallest y in [1, window] with gcd(y, n) == 1 and (y in S) == want_member.

    S is the eventually periodic set described by the residue ``mask`` mod ``m``
    plus sorted ``added`` / ``removed`` exception arrays. Returns 0 when none.
    """
    lo = 1
    size = 256
    while lo <= window:
        hi = min(window, lo + size - 1)
        ys = np.arange(lo, hi + 1, dtype=np.int64)
        ok = _membership(ys, mask, m, added, removed) == bool(want_member)
        ok &= np.gcd(ys, n) == 1
        idx = np.flatnonzero(ok)
        if idx.size:
            return int(ys[idx[0]])
        lo = hi + 1
        size = min(size * 4, _CHUNK * 64)
    return 0


def progression_step(mask, m, added, removed, x, b_bound):
    """Smallest step b <= b_bound, gcd(b, x) == 1, whose progression from x
    stays inside S through one full period past the exceptions; 0 if none."""
    top = 0
    if added.shape[0]:
        top = max(top, int(added[-1]))
    if removed.shape[0]:
        top = max(top, int(removed[-1]))
    for b in range(1, b_bound + 1):
        if np.gcd(b, x) != 1:
            continue
        count = m // np.gcd(b, m) + max(0, top - x) // b + 2
        ys = x + b * np.arange(count, dtype=np.int64)
        if _membership(ys, mask, m, added, removed).all():
            return b
    return 0
