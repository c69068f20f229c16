"""The (p,q)-dömdödöm of a family and its intersection variant.

``beta(F, p, q)`` is the least number of members of ``F`` that contain a
p-set ``A`` and avoid a disjoint q-set ``B``.  ``beta_prime`` swaps "contain
``A``" for "meet ``P``".  Both return the value together with the
lexicographically least minimizing pair (``A`` first, then ``B``, each
compared as an integer bitmask).

``beta``/``beta_prime`` scan every disjoint pair of ``[n]`` and serve as the
reference.  ``beta_fast`` scans only the support of ``F`` plus ``p + q``
spare elements outside it: off-support elements are interchangeable, and
any minimizer can be moved onto the smallest spare elements without
increasing its integer order, so value *and* witness agree with the full
scan.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import QueryTooLarge, ZeroP
from .family import Family, SetWord, full_mask, k_subsets

# rows x columns of the (members x B-candidates) block evaluated at once
_BLOCK = 1 << 22


class Variant(str, enum.Enum):
    CONTAINMENT = "containment"
    INTERSECTION = "intersection"


@dataclass(frozen=True)
class BetaQuery:
    p: int
    q: int
    variant: Variant = Variant.CONTAINMENT

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("p and q must be nonnegative")
        object.__setattr__(self, "variant", Variant(self.variant))

    def check(self, n: int) -> None:
        if self.p + self.q > n:
            raise QueryTooLarge(f"p + q = {self.p + self.q} exceeds n = {n}")
        if self.variant is Variant.INTERSECTION and self.p == 0:
            raise ZeroP("the intersection variant needs p >= 1")


@dataclass(frozen=True)
class WitnessedValue:
    value: int
    witness_A: SetWord
    witness_B: SetWord

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "witness_A": self.witness_A.elements,
            "witness_B": self.witness_B.elements,
        }


def _as_query(p, q, variant) -> BetaQuery:
    if isinstance(p, BetaQuery):
        return p
    return BetaQuery(p, q, variant)


def _scan(F: Family, p: int, q: int, variant: Variant, universe: int) -> tuple[int, int, int]:
    arr = np.fromiter(F.masks, dtype=np.uint64, count=len(F.masks))
    n = F.n
    best = (len(F) + 1, 0, 0)
    containment = variant is Variant.CONTAINMENT
    for a in k_subsets(n, p, within=universe):
        ua = np.uint64(a)
        if containment:
            sub = arr[(arr & ua) == ua]
        else:
            sub = arr[(arr & ua) != 0]
        bs = np.fromiter(k_subsets(n, q, within=universe & ~a), dtype=np.uint64)
        if len(bs) == 0:
            continue
        if len(sub) == 0:
            # every B gives 0; the first B is the smallest
            cand = (0, a, int(bs[0]))
            if cand < best:
                best = cand
            break
        step = max(1, _BLOCK // len(sub))
        for lo in range(0, len(bs), step):
            chunk = bs[lo:lo + step]
            counts = ((sub[:, None] & chunk[None, :]) == 0).sum(axis=0)
            j = int(np.argmin(counts))
            v = int(counts[j])
            if v < best[0]:
                best = (v, a, int(chunk[j]))
            if v == 0:
                break
        if best[0] == 0:
            break
    return best


def _evaluate(F: Family, query: BetaQuery, universe: int) -> WitnessedValue:
    query.check(F.n)
    if query.p == 0 and query.q == 0:
        return WitnessedValue(len(F), SetWord(0, F.n), SetWord(0, F.n))
    value, a, b = _scan(F, query.p, query.q, query.variant, universe)
    return WitnessedValue(value, SetWord(a, F.n), SetWord(b, F.n))


def beta(F: Family, p: int | BetaQuery = 0, q: int = 0) -> WitnessedValue:
    """Minimum of ``|F(A, B̄)|`` over all disjoint ``|A| = p``, ``|B| = q``.

    ``p`` may also be a :class:`BetaQuery` (its variant is ignored).
    Raises :class:`QueryTooLarge` when ``p + q > n``.
    """
    query = _as_query(p, q, Variant.CONTAINMENT)
    query = BetaQuery(query.p, query.q, Variant.CONTAINMENT)
    return _evaluate(F, query, full_mask(F.n))


def beta_prime(F: Family, p: int | BetaQuery = 1, q: int = 0) -> WitnessedValue:
    """Minimum of ``|{G in F : G meets P, G misses Q}|`` over disjoint
    ``|P| = p >= 1``, ``|Q| = q``.  ``p = 0`` raises :class:`ZeroP`."""
    query = _as_query(p, q, Variant.INTERSECTION)
    query = BetaQuery(query.p, query.q, Variant.INTERSECTION)
    return _evaluate(F, query, full_mask(F.n))


def spare_universe(F: Family, extra: int) -> int:
    """Support of ``F`` plus its ``extra`` smallest non-support elements."""
    universe = F.support
    outside = full_mask(F.n) & ~universe
    while extra and outside:
        low = outside & -outside
        universe |= low
        outside ^= low
        extra -= 1
    return universe


def beta_fast(F: Family, p: int | BetaQuery = 0, q: int = 0,
              variant: Variant | str = Variant.CONTAINMENT) -> WitnessedValue:
    query = _as_query(p, q, Variant(variant))
    return _evaluate(F, query, spare_universe(F, query.p + query.q))
