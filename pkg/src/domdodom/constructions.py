"""Explicit intersecting families used as lower-bound witnesses."""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .covers import close_to_maximal, up_closure
from .errors import BadParams
from .family import Family, SetWord, binom, k_subsets, make_family, mask_of

FANO_LINES = ((1, 2, 3), (3, 4, 5), (5, 6, 1), (2, 4, 6), (1, 4, 7), (3, 6, 7), (2, 5, 7))

# One triple from each complementary pair of triples of [6]; every pair of
# points lies in exactly two of them.
DESIGN10_TRIPLES = (
    (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
    (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
)


def check_design10(F: Family) -> list[str]:
    """Reasons ``F`` fails to be a one-per-complement-pair 2-(6,3,2) design."""
    problems = []
    if (F.n, F.k, len(F)) != (6, 3, 10):
        problems.append(f"expected 10 triples on [6], got {len(F)} {F.k}-sets on [{F.n}]")
    full = (1 << 6) - 1
    members = set(F.masks)
    for t in k_subsets(6, 3):
        if t < full ^ t and (t in members) == ((full ^ t) in members):
            problems.append(f"complement pair {sorted(SetWord(t, 6))}|{sorted(SetWord(full ^ t, 6))} not split")
    for pair in k_subsets(6, 2):
        hits = sum(1 for m in F.masks if m & pair == pair)
        if hits != 2:
            problems.append(f"pair {SetWord(pair, 6)} lies in {hits} triples")
    return problems


def fano() -> Family:
    return make_family(7, 3, FANO_LINES)


def _load_design10() -> Family:
    F = make_family(6, 3, DESIGN10_TRIPLES)
    problems = check_design10(F)
    if problems:
        raise RuntimeError("shipped design10 instance is invalid: " + "; ".join(problems))
    return F


_DESIGN10 = _load_design10()


def design10() -> Family:
    return _DESIGN10


def triangle() -> list[SetWord]:
    return [SetWord.of(e, 3) for e in ((1, 2), (2, 3), (1, 3))]


def star(T, n: int, k: int) -> Family:
    """All k-subsets of ``[n]`` containing ``T`` (a SetWord, mask or element list)."""
    return up_closure(_gen_mask(T), n, k)


def lift(covers: Iterable, n: int, k: int) -> Family:
    """Union of up-closures of the generators inside ``binom([n], k)``.

    Generators may be SetWords, masks, element lists or a whole
    :class:`Family` of smaller uniformity.
    """
    gens = covers.masks if isinstance(covers, Family) else [_gen_mask(c) for c in covers]
    for g in gens:
        if g >> n:
            raise BadParams(f"generator {sorted(SetWord(g, g.bit_length()))} leaves [{n}]")
    return close_to_maximal(gens, n, k)


def f23(n: int, k: int) -> Family:
    """All k-subsets of ``[n]`` meeting ``{1, 2, 3}`` in at least two points."""
    if not (2 <= k <= n and n >= 3):
        raise BadParams(f"f23 needs 2 <= k <= n and n >= 3, got n={n}, k={k}")
    return Family(n, k, tuple(m for m in k_subsets(n, k) if (m & 0b111).bit_count() >= 2))


def fano_lift(n: int, k: int) -> Family:
    if not (3 <= k <= n and n >= 7):
        raise BadParams(f"fano_lift needs 3 <= k <= n and n >= 7, got n={n}, k={k}")
    return lift(fano(), n, k)


def design10_lift(n: int, k: int) -> Family:
    if not (3 <= k <= n and n >= 6):
        raise BadParams(f"design10_lift needs 3 <= k <= n and n >= 6, got n={n}, k={k}")
    return lift(design10(), n, k)


def _gen_mask(T) -> int:
    if isinstance(T, SetWord):
        return T.bits
    if isinstance(T, int):
        return T
    return mask_of(T)


# closed-form predictions -------------------------------------------------

def f23_size(n: int, k: int) -> int:
    # exactly two points of [3], plus all three
    return 3 * binom(n - 3, k - 2) + binom(n - 3, k - 3)


def f23_beta_p1(n: int, k: int, p: int) -> int:
    return binom(n - 3 - p, k - 2 - p)


def fano_beta_p2(n: int, k: int, p: int) -> int:
    return 2 * binom(n - 5 - p, k - 3 - p) - binom(n - 7 - p, k - 5 - p)


def lift_beta_lower(n: int, k: int, p: int, q: int) -> int:
    """Guaranteed ``beta_{p,q}`` of a lift of a (q+1)-uniform family with cover number q+1."""
    return binom(n - p - 2 * q - 1, k - p - q - 1)


@dataclass(frozen=True)
class NamedConstruction:
    name: str
    n: int
    k: int
    generators: tuple[int, ...] = ()

    def build(self) -> Family:
        name, n, k = self.name, self.n, self.k
        if name == "fano":
            return fano()
        if name == "design10":
            return design10()
        if name == "triangle":
            return Family.from_masks(3, 2, (t.bits for t in triangle()))
        if name == "f23":
            return f23(n, k)
        if name == "fano_lift":
            return fano_lift(n, k)
        if name == "design10_lift":
            return design10_lift(n, k)
        if name == "star":
            gens = self.generators or (1,)
            if len(gens) != 1:
                raise BadParams("star takes exactly one generator set")
            return star(gens[0], n, k)
        if name == "lift":
            if not self.generators:
                raise BadParams("lift needs generator sets")
            return lift(self.generators, n, k)
        raise BadParams(f"unknown construction {name!r}")


CONSTRUCTION_NAMES = ("star", "f23", "fano", "fano_lift", "design10", "design10_lift", "triangle", "lift")


