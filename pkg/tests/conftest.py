"""Shared fixtures and slow reference implementations.

The ``brute_*`` helpers work on Python ``frozenset``s with ``itertools`` and
share no code with the package, so they serve as independent oracles.
"""
from __future__ import annotations

import itertools
import random

import pytest

from domdodom import Family, make_family
from domdodom.constructions import fano


def as_sets(F: Family) -> list[frozenset[int]]:
    return [frozenset(s) for s in F.as_lists()]


def to_mask(s) -> int:
    return sum(1 << (e - 1) for e in s)


def brute_beta(F: Family, p: int, q: int, meet: bool = False):
    """(value, A, B) minimizing, ties broken by (A mask, B mask)."""
    sets = as_sets(F)
    ground = range(1, F.n + 1)
    best = None
    for A in itertools.combinations(ground, p):
        a = frozenset(A)
        rest = [x for x in ground if x not in a]
        for B in itertools.combinations(rest, q):
            b = frozenset(B)
            if meet:
                v = sum(1 for s in sets if s & a and not s & b)
            else:
                v = sum(1 for s in sets if a <= s and not s & b)
            cand = (v, to_mask(a), to_mask(b))
            if best is None or cand < best:
                best = cand
    return best


def brute_tau(sets, n: int) -> int:
    sets = [frozenset(s) for s in sets]
    for size in range(n + 1):
        for X in itertools.combinations(range(1, n + 1), size):
            x = frozenset(X)
            if all(s & x for s in sets):
                return size
    raise ValueError("no cover")


def brute_minimal_covers(sets, n: int, max_size: int) -> list[frozenset[int]]:
    sets = [frozenset(s) for s in sets]
    covers = []
    for size in range(max_size + 1):
        for X in itertools.combinations(range(1, n + 1), size):
            x = frozenset(X)
            if not all(s & x for s in sets):
                continue
            if all(not all(s & (x - {e}) for s in sets) for e in x):
                covers.append(x)
    return covers


def random_family(rng: random.Random, n: int, k: int, size: int) -> Family:
    pool = [c for c in itertools.combinations(range(1, n + 1), k)]
    return make_family(n, k, rng.sample(pool, min(size, len(pool))))


def random_intersecting(rng: random.Random, n: int, k: int, tries: int = 60) -> Family:
    """Greedy random intersecting family (not necessarily maximal)."""
    chosen: list[frozenset[int]] = []
    for _ in range(tries):
        s = frozenset(rng.sample(range(1, n + 1), k))
        if all(s & t for t in chosen) and s not in chosen:
            chosen.append(s)
    return make_family(n, k, [sorted(s) for s in chosen])


@pytest.fixture
def fano_family() -> Family:
    return fano()


@pytest.fixture
def triangle_family() -> Family:
    return make_family(3, 2, [[1, 2], [2, 3], [1, 3]])


# acceptance bookkeeping: one PASS/FAIL line per criterion, echoed at the end
_ACCEPTANCE: list[str] = []


class _Criterion:
    def __init__(self, number: int, text: str, limit_s: float | None):
        self.number, self.text, self.limit_s = number, text, limit_s

    def __enter__(self):
        import time
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        import time
        elapsed = time.perf_counter() - self.t0
        slow = self.limit_s is not None and elapsed > self.limit_s
        ok = exc_type is None and not slow
        note = f" (took {elapsed:.1f}s, limit {self.limit_s:g}s)" if slow else f" ({elapsed:.1f}s)"
        line = f"criterion {self.number:2d}: {'PASS' if ok else 'FAIL'}  {self.text}{note}"
        if exc is not None:
            line += f": {exc}"
        _ACCEPTANCE.append(line)
        print(line)
        if slow and exc_type is None:
            raise AssertionError(f"criterion {self.number} exceeded {self.limit_s}s ({elapsed:.1f}s)")
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)
