"""Ground-set and k-uniform family value types.

Sets are Python ints used as bitmasks: element ``i`` (1-indexed) lives at
bit ``i - 1``.  A :class:`Family` keeps its members sorted ascending as
integers, so two families are equal exactly when their mask tuples are.

Conventions worth knowing:

* the empty family is legal everywhere and is intersecting;
* ``k = 0`` is allowed; its only possible member is the empty set and the
  family ``{∅}`` is *not* intersecting, because ``∅ ∩ ∅ = ∅``.
"""
from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from math import comb

from .errors import (
    ElementOutOfRange,
    GroundSetTooLarge,
    NonUniformSet,
    OverlappingAB,
)

MAX_N = 64


def binom(m: int, r: int) -> int:
    """Binomial coefficient with ``C(m, r) = 0`` whenever ``r < 0`` or ``r > m``."""
    if r < 0 or m < 0 or r > m:
        return 0
    return comb(m, r)


def popcount(x: int) -> int:
    return x.bit_count()


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def full_mask(n: int) -> int:
    return (1 << n) - 1


def k_subsets(n: int, k: int, within: int | None = None) -> Iterator[int]:
    """Yield every k-subset of ``[n]`` (or of the mask ``within``) in
    ascending integer order."""
    if within is None:
        if k < 0 or k > n:
            return
        if k == 0:
            yield 0
            return
        # Gosper's hack walks same-popcount words in increasing order.
        x = (1 << k) - 1
        limit = 1 << n
        while x < limit:
            yield x
            c = x & -x
            r = x + c
            x = (((r ^ x) >> 2) // c) | r
        return
    pos = [i for i in range(n) if within >> i & 1]
    for sub in k_subsets(len(pos), k):
        m = 0
        j = 0
        while sub:
            if sub & 1:
                m |= 1 << pos[j]
            sub >>= 1
            j += 1
        yield m


@dataclass(frozen=True, order=True)
class SetWord:
    """One subset of ``[n]`` stored as a bitmask."""

    bits: int
    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise GroundSetTooLarge(f"ground set size {self.n} outside 1..{MAX_N}")
        if self.bits < 0 or self.bits >> self.n:
            raise ElementOutOfRange(f"bits {self.bits:#x} exceed ground set [{self.n}]")

    @classmethod
    def of(cls, elements: Iterable[int], n: int) -> SetWord:
        elements = list(elements)
        for e in elements:
            if not 1 <= e <= n:
                raise ElementOutOfRange(f"element {e} not in [1, {n}]")
        return cls(mask_of(elements), n)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(elements_of(self.bits))

    def __contains__(self, x: int) -> bool:
        return 1 <= x <= self.n and bool(self.bits >> (x - 1) & 1)

    @property
    def elements(self) -> list[int]:
        return elements_of(self.bits)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


@dataclass(frozen=True)
class Family:
    """A k-uniform family on ``[n]``; ``masks`` is strictly ascending."""

    n: int
    k: int
    masks: tuple[int, ...] = ()

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise GroundSetTooLarge(f"n = {self.n} outside 1..{MAX_N}")
        if not 0 <= self.k <= self.n:
            raise NonUniformSet(f"k = {self.k} outside 0..{self.n}")
        masks = tuple(self.masks)
        object.__setattr__(self, "masks", masks)
        limit = 1 << self.n
        prev = -1
        for m in masks:
            if m <= prev:
                raise ValueError("family masks must be strictly ascending; use make_family")
            if m >= limit:
                raise ElementOutOfRange(f"set {elements_of(m)} leaves [{self.n}]")
            if m.bit_count() != self.k:
                raise NonUniformSet(f"set {elements_of(m)} does not have {self.k} elements")
            prev = m

    @classmethod
    def from_masks(cls, n: int, k: int, masks: Iterable[int]) -> Family:
        return cls(n, k, tuple(sorted(set(masks))))

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[int]:
        return iter(self.masks)

    def __contains__(self, item) -> bool:
        m = item.bits if isinstance(item, SetWord) else item
        i = bisect_left(self.masks, m)
        return i < len(self.masks) and self.masks[i] == m

    @property
    def sets(self) -> tuple[SetWord, ...]:
        return tuple(SetWord(m, self.n) for m in self.masks)

    @property
    def support(self) -> int:
        s = 0
        for m in self.masks:
            s |= m
        return s

    def as_lists(self) -> list[list[int]]:
        return [elements_of(m) for m in self.masks]

    def issubset(self, other: Family) -> bool:
        return all(m in other for m in self.masks)

    def union(self, other: Family) -> Family:
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("union of families on different (n, k)")
        return Family.from_masks(self.n, self.k, self.masks + other.masks)

    def with_n(self, n: int) -> Family:
        """Same sets viewed inside a different ground set."""
        return Family(n, self.k, self.masks)

    def __repr__(self) -> str:
        body = ", ".join("".join(map(str, e)) if self.n < 10 else str(e) for e in self.as_lists())
        return f"Family(n={self.n}, k={self.k}, [{body}])"


def make_family(n: int, k: int, sets: Iterable[Sequence[int]]) -> Family:
    """Build a canonical family from 1-indexed element lists.

    Duplicates are dropped and sets are sorted.  Raises
    :class:`GroundSetTooLarge` for ``n > 64``, :class:`ElementOutOfRange`
    for elements outside ``[n]`` and :class:`NonUniformSet` when a listed
    set does not have exactly ``k`` distinct elements.
    """
    if not 1 <= n <= MAX_N:
        raise GroundSetTooLarge(f"n = {n} outside 1..{MAX_N}")
    if not 0 <= k <= n:
        raise NonUniformSet(f"k = {k} outside 0..{n}")
    masks = set()
    for s in sets:
        s = list(s)
        for e in s:
            if not 1 <= e <= n:
                raise ElementOutOfRange(f"element {e} not in [1, {n}]")
        if len(set(s)) != len(s) or len(s) != k:
            raise NonUniformSet(f"set {s} is not a {k}-set of distinct elements")
        masks.add(mask_of(s))
    return Family(n, k, tuple(sorted(masks)))


def _bits(x) -> int:
    return x.bits if isinstance(x, SetWord) else int(x)


def restrict(F: Family, A, B) -> Family:
    """Members of ``F`` containing all of ``A`` and missing all of ``B``."""
    a, b = _bits(A), _bits(B)
    if a & b:
        raise OverlappingAB(f"A={elements_of(a)} and B={elements_of(b)} overlap")
    if (a | b) >> F.n:
        raise ElementOutOfRange("A or B leaves the ground set")
    return Family(F.n, F.k, tuple(m for m in F.masks if m & a == a and not m & b))


def is_intersecting(F: Family | Sequence[int]) -> bool:
    masks = F.masks if isinstance(F, Family) else list(F)
    for i, x in enumerate(masks):
        if not x:
            return False
        for y in masks[i + 1:]:
            if not x & y:
                return False
    return True


def degrees(F: Family) -> list[int]:
    """Degree of each element 1..n, as a list indexed from 0."""
    deg = [0] * F.n
    for m in F.masks:
        while m:
            low = m & -m
            deg[low.bit_length() - 1] += 1
            m ^= low
    return deg


def degree_stats(F: Family) -> tuple[int, int, int]:
    """``(min_degree, max_degree, diversity)`` over all of ``[n]``."""
    if not F.masks:
        return (0, 0, 0)
    deg = degrees(F)
    return min(deg), max(deg), len(F) - max(deg)
