"""Canonical forms of set families under relabeling of the ground set.

The canonical form of a family is the lexicographically least sorted mask
sequence among all its relabelings, with the used vertices compacted onto
``1..v``.  Moving a used vertex onto a smaller unused label never increases
any mask, so the least image over all of ``Sym(n)`` is automatically
compact; the two definitions agree.

Two exact routes compute it:

* :func:`canonical_form` assigns labels ``1, 2, ...`` one vertex at a time.
  Once labels ``1..j`` are fixed, the sets inside those vertices are exactly
  the images below ``2**j``, so they form a frozen prefix of the answer and
  branches can be compared level by level.  Vertices whose transposition is
  an automorphism ("twins") are interchangeable and only one is tried.
* :class:`PermTable` applies every permutation of ``[v]`` at once through a
  lookup table; it backs the hot canonicity test of the orderly search for
  ``v <= 8``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from .errors import SupportTooLarge
from .family import Family, elements_of

MAX_SUPPORT = 12
_INF = 1 << 65


@dataclass(frozen=True, order=True)
class CanonicalForm:
    k: int
    v: int
    masks: tuple[int, ...]

    @property
    def family(self) -> Family:
        return Family(max(self.v, self.k, 1), self.k, self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def to_lists(self) -> list[list[int]]:
        return [elements_of(m) for m in self.masks]


def _swap(m: int, u: int, w: int) -> int:
    bu, bw = m >> u & 1, m >> w & 1
    if bu != bw:
        m ^= (1 << u) | (1 << w)
    return m


def twin_classes(masks, vertices: list[int]) -> dict[int, int]:
    """Map each vertex to the smallest vertex it is a twin of."""
    members = set(masks)
    rep: dict[int, int] = {}
    for i, u in enumerate(vertices):
        if u in rep:
            continue
        rep[u] = u
        for w in vertices[i + 1:]:
            if w in rep:
                continue
            if all(_swap(m, u, w) in members for m in masks):
                rep[w] = u
    return rep


def canonical_form(F: Family, max_support: int = MAX_SUPPORT) -> CanonicalForm:
    """Least relabeled image of ``F`` with its support compacted to ``1..v``.

    Raises :class:`SupportTooLarge` when the support exceeds ``max_support``.
    """
    masks = list(F.masks)
    support = F.support
    vertices = [i for i in range(support.bit_length()) if support >> i & 1]
    v = len(vertices)
    if v > max_support:
        raise SupportTooLarge(f"support of {v} vertices exceeds the limit {max_support}")
    if v == 0:
        return CanonicalForm(F.k, 0, tuple(masks))
    rep = twin_classes(masks, vertices)
    by_vertex = {u: [m for m in masks if m >> u & 1] for u in vertices}

    # branch: (key prefix, assigned mask, label of each assigned vertex)
    branches = [((), 0, {})]
    for j in range(v):
        scored = []
        best = None
        for prefix, assigned, labels in branches:
            seen_classes = set()
            for x in vertices:
                if assigned >> x & 1:
                    continue
                cls = rep[x]
                if cls in seen_classes:
                    continue
                seen_classes.add(cls)
                now = assigned | (1 << x)
                new_labels = dict(labels)
                new_labels[x] = j
                new = []
                for m in by_vertex[x]:
                    if m & now == m:
                        img = 0
                        mm = m
                        while mm:
                            low = mm & -mm
                            img |= 1 << new_labels[low.bit_length() - 1]
                            mm ^= low
                        new.append(img)
                new.sort()
                key = prefix + tuple(new)
                cmp_key = key + (_INF,)
                if best is None or cmp_key < best:
                    best = cmp_key
                    scored = [(key, now, new_labels)]
                elif cmp_key == best:
                    scored.append((key, now, new_labels))
        branches = scored
    return CanonicalForm(F.k, v, branches[0][0])


def is_isomorphic(F: Family, G: Family) -> bool:
    return len(F) == len(G) and F.k == G.k and canonical_form(F) == canonical_form(G)


def relabel(F: Family, perm: dict[int, int] | list[int], n: int | None = None) -> Family:
    """Apply an element map (1-indexed, ``perm[x]`` or ``perm[x - 1]``) to every set."""
    n = F.n if n is None else n
    if isinstance(perm, dict):
        f = perm.__getitem__
    else:
        f = lambda x: perm[x - 1]  # noqa: E731
    out = []
    for m in F.masks:
        img = 0
        for e in elements_of(m):
            img |= 1 << (f(e) - 1)
        out.append(img)
    return Family.from_masks(n, F.k, out)


class PermTable:
    """Images of every subset of ``[v]`` under every permutation of ``[v]``."""

    def __init__(self, v: int):
        if v > 8:
            raise SupportTooLarge("permutation tables are limited to 8 vertices")
        self.v = v
        perms = np.array(list(permutations(range(v))), dtype=np.int64).reshape(-1, v)
        subsets = np.arange(1 << v, dtype=np.int64)
        table = np.zeros((len(perms), 1 << v), dtype=np.int64)
        for i in range(v):
            bit = (subsets >> i) & 1
            table |= bit[None, :] << perms[:, i:i + 1]
        self.table = table.astype(np.uint16)

    def min_image(self, masks) -> tuple[int, ...]:
        if not masks:
            return ()
        imgs = np.sort(self.table[:, list(masks)], axis=1)
        rows = np.arange(len(imgs))
        for col in range(imgs.shape[1]):
            c = imgs[rows, col]
            rows = rows[c == c.min()]
            if len(rows) == 1:
                break
        return tuple(int(x) for x in imgs[rows[0]])

    def is_canonical(self, masks) -> bool:
        """True iff the ascending mask list equals its least image."""
        if not masks:
            return True
        target = np.array(masks, dtype=np.uint16)
        imgs = np.sort(self.table[:, masks], axis=1)
        diff = imgs != target[None, :]
        first = diff.argmax(axis=1)
        differs = diff.any(axis=1)
        smaller = imgs[np.arange(len(imgs)), first] < target[first]
        return not bool((differs & smaller).any())


@lru_cache(maxsize=None)
def perm_table(v: int) -> PermTable:
    return PermTable(v)
