"""Prime families, bounded density probes and the witness generator.

Density of a family ``A`` of primes means ``A`` meets every ``sigma(n)``.
That is only semi-decidable for opaque families, so a probe reports, per
``n``, the smallest member coprime to ``n`` or ``None`` when the search
bound was exhausted.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, NamedTuple

import numpy as np

from . import kernels
from .arith import INT64_MAX, check_pos, checked_prod, is_prime, iter_primes, spf_table
from .perset import N1, make_explicit, multiples
from .topology import closure, closure_singleton, sigma


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class Family:
    """A family of primes: ``all_primes``, ``progression``, ``mersenne``,
    ``fermat``, ``twin`` or ``custom``."""

    tag: str
    a: int = 0
    b: int = 0
    members: tuple[int, ...] = field(default=(), repr=False)
    label: str = ""

    def __post_init__(self):
        if self.tag not in {"all_primes", "progression", "mersenne", "fermat", "twin", "custom"}:
            raise FamilyError(f"unknown family {self.tag!r}")
        if self.tag == "progression" and (self.a < 1 or self.b < 1 or math.gcd(self.a, self.b) != 1):
            raise FamilyError(f"progression family needs gcd(a, b) = 1, got ({self.a}, {self.b})")
        if self.tag == "custom":
            bad = [x for x in self.members if x < 1 or not is_prime(x)]
            if bad:
                raise FamilyError(f"custom family contains non-primes: {bad}")
            if list(self.members) != sorted(set(self.members)):
                object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    @property
    def name(self) -> str:
        if self.label:
            return self.label
        if self.tag == "progression":
            return f"progression({self.a},{self.b})"
        return self.tag

    def __iter__(self) -> Iterator[int]:
        return iter_family(self)


ALL_PRIMES = Family("all_primes")
MERSENNE = Family("mersenne")
FERMAT = Family("fermat")
TWIN = Family("twin")


def progression(a: int, b: int) -> Family:
    return Family("progression", a, b)


def custom(members, label: str = "custom") -> Family:
    return Family("custom", members=tuple(int(x) for x in members), label=label)


def load_family_file(path) -> Family:
    """Newline-separated decimal primes; ``#`` starts a comment."""
    members = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            value = int(text, 10)
        except ValueError:
            raise FamilyError(f"{path}:{lineno}: not a decimal integer: {text!r}") from None
        if value < 1 or value > INT64_MAX or not is_prime(value):
            raise FamilyError(f"{path}:{lineno}: {value} is not a prime")
        members.append(value)
    return custom(members, label=f"custom:{Path(path).name}")


def iter_family(kind: Family) -> Iterator[int]:
    """Ascending members of ``kind``; stops when the family is exhausted."""
    if kind.tag == "all_primes":
        yield from iter_primes()
    elif kind.tag == "progression":
        for p in iter_primes():
            if p % kind.b == kind.a % kind.b:
                yield p
    elif kind.tag == "mersenne":
        for p in iter_primes():
            if p > 61:
                return
            q = (1 << p) - 1
            if is_prime(q):
                yield q
    elif kind.tag == "fermat":
        for k in range(6):
            q = (1 << (1 << k)) + 1
            if q > INT64_MAX:
                return
            if is_prime(q):
                yield q
    elif kind.tag == "twin":
        prev = None
        for p in iter_primes():
            if prev is not None and p - prev == 2:
                yield prev
            prev = p
    else:
        yield from kind.members


class Enumeration(NamedTuple):
    members: list[int]
    exhausted: bool


def family_enumerate(kind: Family, count: int) -> Enumeration:
    """First ``count`` members; ``exhausted`` is set when fewer exist."""
    if count < 1:
        raise ValueError("count must be >= 1")
    members = list(itertools.islice(iter_family(kind), count))
    return Enumeration(members, len(members) < count)


@dataclass(frozen=True)
class WitnessRow:
    n: int
    witness: int | None
    bound: int


@dataclass(frozen=True)
class WitnessTable:
    family: str
    rows: tuple[WitnessRow, ...]

    @property
    def resolved(self) -> bool:
        return all(r.witness is not None for r in self.rows)

    def unresolved(self) -> list[int]:
        return [r.n for r in self.rows if r.witness is None]

    def witness_for(self, n: int) -> int | None:
        for r in self.rows:
            if r.n == n:
                return r.witness
        raise KeyError(n)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rows": [{"n": r.n, "witness": r.witness, "bound": r.bound} for r in self.rows],
        }


def density_probe(kind: Family, n_max: int, search_bound: int = INT64_MAX) -> WitnessTable:
    """Smallest member ``w <= search_bound`` coprime to each ``n`` in ``[2, n_max]``."""
    n_max = check_pos(n_max, "n_max")
    search_bound = check_pos(search_bound, "search_bound")
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    ns = np.arange(2, n_max + 1, dtype=np.int64)
    witness = np.full(ns.shape[0], -1, dtype=np.int64)
    pending = np.arange(ns.shape[0])
    source = iter_family(kind)
    chunk = 16
    while pending.size:
        block = [w for w in itertools.islice(source, chunk) if w <= search_bound]
        if not block:
            break
        idx = kernels.first_coprime(ns[pending], np.array(block, dtype=np.int64))
        hit = idx >= 0
        witness[pending[hit]] = np.array(block, dtype=np.int64)[idx[hit]]
        pending = pending[~hit]
        if block[-1] >= search_bound or len(block) < chunk:
            # bound reached or family exhausted
            break
        chunk *= 2
    rows = tuple(
        WitnessRow(int(n), int(w) if w >= 0 else None, search_bound) for n, w in zip(ns, witness)
    )
    return WitnessTable(kind.name, rows)


def next_new_prime(known) -> int:
    """Smallest prime coprime to the product of ``known`` (all primes)."""
    known = sorted(set(int(p) for p in known))
    for p in known:
        if not is_prime(check_pos(p, "prime")):
            raise ValueError(f"{p} is not prime")
    x = checked_prod(known)
    for q in iter_primes():
        if math.gcd(q, x) == 1:
            return q
    raise AssertionError("unreachable")


def euclid_chain(start=(2,), steps: int = 10) -> list[int]:
    """Iterate :func:`next_new_prime`, returning the ``steps`` new primes."""
    known = list(start)
    found = []
    for _ in range(steps):
        q = next_new_prime(known)
        found.append(q)
        known.append(q)
    return found


def partition_check(n: int) -> bool:
    """Every ``x`` in ``[2, n]`` is a multiple of some prime."""
    n = check_pos(n)
    if n < 2:
        raise ValueError("n must be >= 2")
    spf = spf_table()
    if n >= spf.shape[0]:
        spf = kernels.spf_sieve(n)
    xs = np.arange(2, n + 1)
    p = spf[2 : n + 1]
    if (p < 2).any() or (xs % p != 0).any():
        return False
    # each spf value must itself be prime
    return bool((spf[p] == p).all())


@dataclass(frozen=True)
class CheckResult:
    name: str
    statement: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "statement": self.statement, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class ChainReport:
    level: str
    window: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "window": self.window,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def _check(name, statement, fn) -> CheckResult:
    try:
        ok, detail = fn()
    except Exception as exc:  # a crashing check is a failed check
        return CheckResult(name, statement, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, statement, bool(ok), detail)


def _singleton_closures(lo=2, hi=500):
    from .arith import prime_divisors
    from .perset import intersect

    for n in range(lo, hi + 1):
        expected = None
        for p in prime_divisors(n):
            expected = multiples(p) if expected is None else intersect(expected, multiples(p))
        if closure(make_explicit({n})) != expected or closure_singleton(n) != expected:
            return False, f"mismatch at n={n}"
    return True, f"n in [{lo}, {hi}]"


def _subspace_prime_closures(window):
    primes = [p for p in itertools.takewhile(lambda p: p <= min(window, 1000), iter_primes())]
    for p in primes:
        sub = closure(make_explicit({p})) & N1
        if sub != multiples(p):
            return False, f"cl_X1({{{p}}}) != M_{p}"
    return True, f"{len(primes)} primes <= {primes[-1]}"


def _subspace_transfer():
    if closure(N1) != closure(make_explicit({1})) or not closure(N1).member(1):
        return False, "N1 is not dense in X"
    samples = [make_explicit({6, 10}), multiples(4), sigma(6) & N1, make_explicit({15}) | multiples(7)]
    for s in samples:
        full = closure(s)
        if (full - (full & N1)).enumerate(2) not in ([], [1]):
            return False, f"subspace closure of {s} differs by more than the point 1"
    return True, f"{len(samples)} subsets of N1"


def _base_law(limit=60):
    from .perset import intersect

    for n in range(1, limit + 1):
        for m in range(n, limit + 1):
            if sigma(n * m) != intersect(sigma(n), sigma(m)):
                return False, f"mismatch at ({n}, {m})"
    return True, f"n, m <= {limit}"


def _probe_all_primes(n_max):
    table = density_probe(ALL_PRIMES, n_max)
    if not table.resolved:
        return False, f"unresolved rows: {table.unresolved()[:5]}"
    worst = max(r.witness for r in table.rows)
    return True, f"n <= {n_max}, largest witness {worst}"


def _euclid():
    found = euclid_chain((2,), 10)
    ok = len(set(found)) == 10 and all(is_prime(q) for q in found) and 2 not in found
    return ok, "new primes " + ",".join(map(str, found))


def verify_paper_chain(level: str = "quick") -> ChainReport:
    """Run the bounded checks of the density argument for infinitely many primes."""
    if level not in {"quick", "full"}:
        raise ValueError("level must be 'quick' or 'full'")
    window = 10**3 if level == "quick" else 10**5
    checks = (
        _check("base-law", "sigma(nm) = sigma(n) ∩ sigma(m)", _base_law),
        _check("singleton-closure", "cl({n}) = ⋂_{p|n} M_p", _singleton_closures),
        _check("prime-closure-subspace", "cl_X1({p}) = cl({p}) ∩ N1 = M_p", lambda: _subspace_prime_closures(window)),
        _check("subspace-density", "P dense in X1 ⇔ P dense in X", _subspace_transfer),
        _check(
            "partition",
            "⋃_{p prime} M_p = N1",
            lambda: (partition_check(window), f"window [2, {window}]"),
        ),
        _check("primes-dense", "P meets every sigma(n)", lambda: _probe_all_primes(window)),
        _check("new-prime-chain", "for finitely many primes, a prime coprime to their product", _euclid),
    )
    return ChainReport(level, window, checks)
