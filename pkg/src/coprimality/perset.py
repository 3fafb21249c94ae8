"""Exact algebra of eventually periodic subsets of the positive integers.

An :class:`EPSet` denotes ``S = (Periodic(m, R) | A) - B`` where
``Periodic(m, R) = {x >= 1 : x % m in R}``.  Values are always kept in
canonical form (minimal modulus, genuine exceptions), so ``==`` on two
EPSets is set equality.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .arith import INT64_MAX, check_pos, checked_lcm, prime_divisors

# Largest modulus whose residue table we are willing to materialize.
MAX_MODULUS = 1 << 24


def _check_materializable(m: int) -> None:
    if m > INT64_MAX:
        raise OverflowError(f"modulus {m} exceeds the 64-bit range")
    if m > MAX_MODULUS:
        raise OverflowError(f"modulus {m} is too large to materialize (limit {MAX_MODULUS})")


def _minimize(m: int, mask: np.ndarray) -> tuple[int, np.ndarray]:
    # the periods of a purely periodic sequence are closed under gcd, so
    # greedily dropping prime factors reaches the minimal period
    changed = True
    while changed and m > 1:
        changed = False
        for p in prime_divisors(m):
            while m % p == 0:
                rows = mask.reshape(p, m // p)
                if not (rows == rows[0]).all():
                    break
                mask = rows[0]
                m //= p
                changed = True
    return m, mask


@dataclass(frozen=True)
class EPSet:
    """Canonical eventually periodic set.  Build with :meth:`build` or the
    module-level constructors; the raw constructor does not canonicalize."""

    m: int
    residues: tuple[int, ...]
    added: tuple[int, ...] = ()
    removed: tuple[int, ...] = ()

    @classmethod
    def build(cls, m, residues=(), added=(), removed=()) -> EPSet:
        """Canonical form of ``(Periodic(m, residues) | added) - removed``.

        Residues may be any integers (they are reduced mod m); ``added`` and
        ``removed`` may overlap the periodic part or each other, removal wins.
        """
        m = check_pos(m, "m")
        _check_materializable(m)
        mask = np.zeros(m, dtype=bool)
        residues = np.fromiter((int(r) for r in residues), dtype=np.int64)
        mask[residues % m] = True
        added = {check_pos(a, "added element") for a in added}
        removed = {check_pos(b, "removed element") for b in removed}
        members = added - removed
        return _from_mask(m, mask, members | removed, lambda x: x in members or (mask[x % m] and x not in removed))

    @cached_property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.m, dtype=bool)
        mask[list(self.residues)] = True
        mask.setflags(write=False)
        return mask

    @property
    def max_exception(self) -> int:
        return max(self.added + self.removed, default=0)

    def member(self, x: int) -> bool:
        x = check_pos(x, "x")
        return self._has(x)

    def _has(self, x: int) -> bool:
        if x % self.m in self._resset:
            return x not in self._removed_set
        return x in self._added_set

    @cached_property
    def _resset(self):
        return frozenset(self.residues)

    @cached_property
    def _added_set(self):
        return frozenset(self.added)

    @cached_property
    def _removed_set(self):
        return frozenset(self.removed)

    def __contains__(self, x) -> bool:
        return self.member(x)

    def is_empty(self) -> bool:
        return not self.residues and not self.added

    def is_finite(self) -> bool:
        return not self.residues

    def __iter__(self):
        """Members in ascending order (unbounded unless the set is finite)."""
        if self.residues:
            offsets = sorted(r if r else self.m for r in self.residues)
            periodic = (q * self.m + off for q in itertools.count() for off in offsets)
        else:
            periodic = iter(())
        removed = self._removed_set
        for x in heapq.merge(periodic, self.added):
            if x not in removed:
                yield x

    def enumerate(self, k: int) -> list[int]:
        """The ``k`` smallest members (fewer if the set is smaller)."""
        if k < 0:
            raise ValueError("k must be >= 0")
        return list(itertools.islice(iter(self), k))

    def natural_density(self) -> Fraction:
        return Fraction(len(self.residues), self.m)

    def window(self, n: int) -> np.ndarray:
        """Boolean membership vector for ``1..n`` (index 0 is x = 1)."""
        xs = np.arange(1, n + 1)
        out = self.mask[xs % self.m].copy()
        for a in self.added:
            if a <= n:
                out[a - 1] = True
        for b in self.removed:
            if b <= n:
                out[b - 1] = False
        return out

    def __and__(self, other):
        return intersect(self, other)

    def __or__(self, other):
        return union(self, other)

    def __sub__(self, other):
        return difference(self, other)

    def __invert__(self):
        return complement(self)

    def __le__(self, other):
        return is_subset(self, other)

    def render(self) -> str:
        text = f"Periodic({self.m}; {','.join(map(str, self.residues))})"
        if self.added:
            text += " + {" + ",".join(map(str, self.added)) + "}"
        if self.removed:
            text += " − {" + ",".join(map(str, self.removed)) + "}"
        return text

    __str__ = render

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "residues": list(self.residues),
            "added": list(self.added),
            "removed": list(self.removed),
        }

    @classmethod
    def from_json(cls, data: dict) -> EPSet:
        return cls.build(data["m"], data["residues"], data.get("added", ()), data.get("removed", ()))


def from_mask(m: int, mask: np.ndarray) -> EPSet:
    """Canonical purely periodic set from a boolean residue table of length m."""
    return _from_mask(m, np.asarray(mask, dtype=bool), (), None)


def _from_mask(m, mask, candidates, is_member) -> EPSet:
    m, mask = _minimize(m, mask)
    added = []
    removed = []
    for x in sorted(candidates):
        periodic = bool(mask[x % m])
        actual = bool(is_member(x))
        if actual and not periodic:
            added.append(x)
        elif periodic and not actual:
            removed.append(x)
    return _with_mask(EPSet(m, tuple(np.flatnonzero(mask).tolist()), tuple(added), tuple(removed)), mask)


def _with_mask(s: EPSet, mask: np.ndarray) -> EPSet:
    # seed the cached residue table so it is not rebuilt from the tuple
    mask = np.array(mask, dtype=bool)
    mask.setflags(write=False)
    s.__dict__["mask"] = mask
    return s


def make_periodic(m: int, residues) -> EPSet:
    """``{x >= 1 : x % m in residues}`` in canonical form."""
    m = check_pos(m, "m")
    residues = np.fromiter((int(r) for r in residues), dtype=np.int64)
    if residues.size and (residues.min() < 0 or residues.max() >= m):
        bad = residues[(residues < 0) | (residues >= m)][0]
        raise ValueError(f"residue {bad} out of range for modulus {m}")
    _check_materializable(m)
    mask = np.zeros(m, dtype=bool)
    mask[residues] = True
    return from_mask(m, mask)


def make_explicit(elems) -> EPSet:
    return EPSet.build(1, (), elems)


NATURALS = EPSet(1, (0,))
EMPTY = EPSet(1, ())
N1 = EPSet(1, (0,), (), (1,))


def multiples(r: int) -> EPSet:
    """``M_r``, the positive multiples of ``r``."""
    return make_periodic(r, {0})


def member(s: EPSet, x: int) -> bool:
    return s.member(x)


def _combine(s: EPSet, t: EPSet, op) -> EPSet:
    L = checked_lcm(s.m, t.m)
    _check_materializable(L)
    idx = np.arange(L)
    mask = op(s.mask[idx % s.m], t.mask[idx % t.m])
    candidates = set(s.added) | set(s.removed) | set(t.added) | set(t.removed)
    return _from_mask(L, mask, candidates, lambda x: op(s._has(x), t._has(x)))


def intersect(s: EPSet, t: EPSet) -> EPSet:
    return _combine(s, t, np.logical_and)


def union(s: EPSet, t: EPSet) -> EPSet:
    return _combine(s, t, np.logical_or)


def _and_not(a, b):
    return np.logical_and(a, np.logical_not(b))


def difference(s: EPSet, t: EPSet) -> EPSet:
    return _combine(s, t, _and_not)


def complement(s: EPSet) -> EPSet:
    mask = ~s.mask
    return _with_mask(EPSet(s.m, tuple(np.flatnonzero(mask).tolist()), s.removed, s.added), mask)


def union_all(sets) -> EPSet:
    out = EMPTY
    for s in sets:
        out = union(out, s)
    return out


def union_of_multiples(radicals) -> EPSet:
    """``Union of M_r`` over ``radicals``, built on one lcm-sized mask."""
    radicals = sorted(set(radicals))
    if not radicals:
        return EMPTY
    L = 1
    for r in radicals:
        L = checked_lcm(L, r)
    _check_materializable(L)
    mask = np.zeros(L, dtype=bool)
    for r in radicals:
        mask[::r] = True
    return _from_mask(L, mask, (), None)


def equals(s: EPSet, t: EPSet) -> bool:
    return s == t


def is_subset(s: EPSet, t: EPSet) -> bool:
    return difference(s, t).is_empty()


def is_empty(s: EPSet) -> bool:
    return s.is_empty()


def is_finite(s: EPSet) -> bool:
    return s.is_finite()


def natural_density(s: EPSet) -> Fraction:
    return s.natural_density()


def lift(s: EPSet, k: int) -> tuple[int, tuple[int, ...]]:
    """Non-canonical modulus ``k*m`` description of the periodic part."""
    km = s.m * k
    return km, tuple(r for r in range(km) if s.mask[r % s.m])


def equality_window(s: EPSet, t: EPSet) -> int:
    """A window ``[1, W]`` on which agreement of memberships implies s == t."""
    return math.lcm(s.m, t.m) + max(s.max_exception, t.max_exception) + 1
