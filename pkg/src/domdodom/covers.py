"""Covers (transversals), minimal covers and up-closures.

For a maximal intersecting k-uniform family ``F`` every member is a cover,
so the minimal covers of size at most ``k`` determine ``F`` completely:
``F`` is the union of the up-closures of its minimal covers.

The empty family is covered by the empty set, so its covering number is 0;
its minimal-cover list is reported empty.  A family containing the empty
set has no cover at all and raises :class:`NoCoverExists`.

The bound "at most k^k minimal covers of size <= k" is applied to every
k-uniform family, intersecting or not.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import CoverTooLarge, NoCoverExists, NotIntersecting
from .family import Family, SetWord, binom, elements_of, is_intersecting, k_subsets


@dataclass(frozen=True)
class CoverReport:
    tau: int
    minimal_covers: tuple[SetWord, ...] = field(default=())
    support: SetWord | None = None

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(c.bits for c in self.minimal_covers)

    def to_dict(self) -> dict:
        return {
            "tau": self.tau,
            "minimal_covers": [c.elements for c in self.minimal_covers],
            "support": self.support.elements if self.support is not None else [],
        }


def _masks(F) -> list[int]:
    return list(F.masks) if isinstance(F, Family) else [int(getattr(m, "bits", m)) for m in F]


def is_cover(X: int, masks: Iterable[int]) -> bool:
    return all(m & X for m in masks)


def _cover_candidates(masks: list[int], n: int, size: int, support: int):
    """All covers of exactly ``size`` elements inside ``support``, ascending."""
    arr = np.array(masks, dtype=np.uint64)
    xs = np.fromiter(k_subsets(n, size, within=support), dtype=np.uint64)
    step = max(1, (1 << 20) // max(1, len(arr)))
    for lo in range(0, len(xs), step):
        chunk = xs[lo:lo + step]
        hit = ((chunk[:, None] & arr[None, :]) != 0).all(axis=1)
        for x in chunk[hit]:
            yield int(x)


def covering_number(F: Family) -> int:
    masks = _masks(F)
    if not masks:
        return 0
    if 0 in masks:
        raise NoCoverExists("a family containing the empty set has no cover")
    support = 0
    for m in masks:
        support |= m
    n = support.bit_length()
    for size in range(1, n + 1):
        for _ in _cover_candidates(masks, n, size, support):
            return size
    raise AssertionError("unreachable: the support is always a cover")


def minimal_covers(F: Family, max_size: int | None = None) -> CoverReport:
    """Every inclusion-minimal cover of ``F`` with at most ``max_size`` elements.

    Subsets of the support are tried by increasing size; a cover is minimal
    exactly when it contains no cover found at an earlier size.  Covers are
    returned in ascending integer order.  ``tau`` is the true covering
    number, which may exceed ``max_size``.
    """
    masks = _masks(F)
    n = F.n
    if max_size is None:
        max_size = F.k
    if not masks:
        return CoverReport(0, (), SetWord(0, n))
    if 0 in masks:
        raise NoCoverExists("a family containing the empty set has no cover")
    support = 0
    for m in masks:
        support |= m
    found: list[int] = []
    for size in range(1, min(max_size, n) + 1):
        new = [x for x in _cover_candidates(masks, n, size, support)
               if not any(c & x == c for c in found)]
        found.extend(new)
    tau = min((c.bit_count() for c in found), default=None)
    if tau is None:
        tau = covering_number(F)
    found.sort()
    union = 0
    for c in found:
        union |= c
    return CoverReport(tau, tuple(SetWord(c, n) for c in found), SetWord(union, n))


def up_closure(T, n: int, k: int) -> Family:
    """All k-subsets of ``[n]`` containing ``T``."""
    t = int(getattr(T, "bits", T))
    size = t.bit_count()
    if size > k:
        raise CoverTooLarge(f"cover {elements_of(t)} has more than k = {k} elements")
    rest = ((1 << n) - 1) & ~t
    return Family.from_masks(n, k, (t | g for g in k_subsets(n, k - size, within=rest)))


def close_to_maximal(covers: Iterable, n: int, k: int) -> Family:
    """Union of the up-closures of ``covers`` inside ``binom([n], k)``."""
    masks: set[int] = set()
    for T in covers:
        t = int(getattr(T, "bits", T))
        if t.bit_count() > k:
            raise CoverTooLarge(f"cover {elements_of(t)} has more than k = {k} elements")
        rest = ((1 << n) - 1) & ~t
        masks.update(t | g for g in k_subsets(n, k - t.bit_count(), within=rest))
    return Family(n, k, tuple(sorted(masks)))


def is_maximal_intersecting(F: Family) -> bool:
    """True iff no k-set outside ``F`` meets every member of ``F``."""
    if not is_intersecting(F):
        raise NotIntersecting("is_maximal_intersecting needs an intersecting family")
    members = set(F.masks)
    for g in k_subsets(F.n, F.k):
        if g not in members and g and all(g & m for m in F.masks):
            return False
    return True


def cover_bound(k: int) -> int:
    """Upper bound on the number of minimal covers of size <= k."""
    return k ** k


def tau_upper_bound(n: int, k: int, p: int, tau: int) -> int:
    """Finite form of the large-n bound on ``|F(P, Q̄)|`` when ``tau > q``."""
    return k ** (k + 1) * binom(n - p - tau, k - p - tau)


def pairwise_intersecting(sets: Sequence) -> bool:
    return all(a & b for a, b in combinations([int(getattr(s, "bits", s)) for s in sets], 2))
