"""Exhaustive searches over small intersecting families.

Two search spaces are covered:

* :func:`enumerate_maximal` lists every maximal intersecting k-uniform
  family on ``[n]``.  These are the maximal cliques of the graph on
  ``binom([n], k)`` joining intersecting sets, found with pivoting
  Bron-Kerbosch on integer bitsets.  ``beta`` is monotone under inclusion,
  so :func:`exact_beta` only has to look at maximal families.
* :func:`enumerate_tau_full` lists, up to isomorphism, every (q+1)-uniform
  intersecting family with covering number q+1 on at most ``max_vertices``
  points.  It is an orderly generation: a family is grown by adding sets
  larger than its current largest set, and a node is kept only if its mask
  list is its own least relabeled image.  Deleting the largest set of a
  canonical family leaves a canonical family, so every isomorphism class is
  reached exactly once, through its canonical representative.

The orderly search is split into top-level branches (the canonical
two-set families) which can be checkpointed and run in worker processes;
the merged output is sorted, so it does not depend on scheduling.
"""
from __future__ import annotations

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .beta import beta, beta_fast
from .canonical import CanonicalForm, canonical_form, perm_table
from .errors import BadParams, BudgetExceeded, InstanceTooLarge
from .family import Family, binom, degree_stats, k_subsets

log = logging.getLogger(__name__)

MAX_CLIQUE_VERTICES = 150
MAX_TAU_VERTICES = 8


@dataclass
class EnumerationResult:
    families: list[Family]
    constraints: dict
    stats: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "constraints": self.constraints,
            "families": [{"n": F.n, "k": F.k, "sets": F.as_lists()} for F in self.families],
            "stats": self.stats,
        }


def _ms(t0: float) -> int:
    return int(round((time.perf_counter() - t0) * 1000))


# ---------------------------------------------------------------------------
# maximal intersecting families

def _maximal_cliques(adj: list[int], nv: int) -> tuple[list[int], int]:
    cliques: list[int] = []
    nodes = 0

    def expand(r: int, p: int, x: int) -> None:
        nonlocal nodes
        nodes += 1
        if not p and not x:
            cliques.append(r)
            return
        # Tomita pivot: the vertex of P | X with most neighbours in P
        px = p | x
        pivot, best = -1, -1
        while px:
            low = px & -px
            u = low.bit_length() - 1
            c = (adj[u] & p).bit_count()
            if c > best:
                pivot, best = u, c
            px ^= low
        cand = p & ~adj[pivot]
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            expand(r | low, p & adj[u], x & adj[u])
            p &= ~low
            x |= low
            cand ^= low

    expand(0, (1 << nv) - 1, 0)
    return cliques, nodes


def enumerate_maximal(n: int, k: int, *, force: bool = False, classify: bool = True) -> EnumerationResult:
    """All maximal intersecting k-uniform families on ``[n]``, sorted.

    Raises :class:`InstanceTooLarge` if ``C(n, k) > 150`` unless ``force``.
    The list is not reduced by isomorphism; ``stats["classes"]`` counts the
    isomorphism classes when ``classify`` is set.
    """
    if not 1 <= k <= n:
        raise BadParams(f"need 1 <= k <= n, got n={n}, k={k}")
    nv = binom(n, k)
    if nv > MAX_CLIQUE_VERTICES:
        if not force:
            raise InstanceTooLarge(f"C({n},{k}) = {nv} exceeds {MAX_CLIQUE_VERTICES}")
        log.warning("enumerate_maximal: C(%d,%d) = %d beyond the guard, forced", n, k, nv)
    t0 = time.perf_counter()
    verts = list(k_subsets(n, k))
    adj = [0] * nv
    for i, a in enumerate(verts):
        for j in range(i + 1, nv):
            if a & verts[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    cliques, nodes = _maximal_cliques(adj, nv)
    families = []
    for c in cliques:
        masks = []
        while c:
            low = c & -c
            masks.append(verts[low.bit_length() - 1])
            c ^= low
        families.append(Family(n, k, tuple(sorted(masks))))
    families.sort(key=lambda F: F.masks)
    stats = {"nodes": nodes, "families": len(families)}
    if classify:
        stats["classes"] = len({canonical_form(F) for F in families})
    stats["elapsed_ms"] = _ms(t0)
    constraints = {"n": n, "k": k, "intersecting": True, "maximal": True}
    return EnumerationResult(families, constraints, stats)


def exact_beta(n: int, k: int, p: int, q: int, *, force: bool = False,
               families: list[Family] | None = None) -> tuple[int, list[Family]]:
    """``max beta_{p,q}(F)`` over intersecting k-uniform ``F`` on ``[n]``,
    with every maximal family attaining it."""
    if families is None:
        families = enumerate_maximal(n, k, force=force, classify=False).families
    best, winners = -1, []
    for F in families:
        v = beta_fast(F, p, q).value
        if v > best:
            best, winners = v, [F]
        elif v == best:
            winners.append(F)
    return best, winners


# ---------------------------------------------------------------------------
# (q+1)-uniform families with full covering number

def _hit_table(n: int, q: int, sets: list[int]) -> dict[int, int]:
    """For every candidate set, a bitmask over the q-subsets of [n] hitting it."""
    small = list(k_subsets(n, q))
    table = {}
    for s in sets:
        h = 0
        for i, x in enumerate(small):
            if x & s:
                h |= 1 << i
        table[s] = h
    return table


class _Orderly:
    def __init__(self, q: int, v: int, max_nodes: int | None):
        self.q, self.k, self.v = q, q + 1, v
        self.sets = list(k_subsets(v, q + 1))
        self.hits = _hit_table(v, q, self.sets)
        self.all_q = (1 << binom(v, q)) - 1
        self.table = perm_table(v)
        self.max_nodes = max_nodes
        self.nodes = 0

    def children(self, fam: list[int], cands: list[int]):
        """Canonical one-set extensions, each with its own candidate list."""
        for i, s in enumerate(cands):
            child = fam + [s]
            if self.table.is_canonical(child):
                yield child, [c for c in cands[i + 1:] if c & s]

    def roots(self) -> list[tuple[list[int], list[int]]]:
        first = self.sets[0]
        cands = [c for c in self.sets[1:] if c & first]
        return list(self.children([first], cands))

    def run(self, fam: list[int], cands: list[int], uncovered: int, out: list[tuple[int, ...]]) -> None:
        # ``uncovered``: q-sets meeting every member so far (bit per q-set)
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(f"more than {self.max_nodes} search nodes")
        reach = uncovered
        for c in cands:
            reach &= self.hits[c]
            if not reach:
                break
        if reach:
            # even adding every remaining candidate leaves a q-cover
            return
        if not uncovered:
            out.append(tuple(fam))
        for child, sub in self.children(fam, cands):
            self.run(child, sub, uncovered & self.hits[child[-1]], out)

    def run_branch(self, fam: list[int], cands: list[int]) -> list[tuple[int, ...]]:
        out: list[tuple[int, ...]] = []
        unc = self.all_q
        for s in fam:
            unc &= self.hits[s]
        self.run(fam, cands, unc, out)
        return out


def _branch_worker(args):
    q, v, fam, cands, max_nodes = args
    search = _Orderly(q, v, max_nodes)
    out = search.run_branch(fam, cands)
    return out, search.nodes


def enumerate_tau_full(q: int, max_vertices: int, *, checkpoint: str | Path | None = None,
                       threads: int = 1, force: bool = False,
                       max_nodes: int | None = None) -> EnumerationResult:
    """Every (q+1)-uniform intersecting family with covering number ``q + 1``
    on at most ``max_vertices`` points, one canonical representative per
    isomorphism class.

    ``checkpoint`` names a JSON file recording finished top-level branches
    and their output; rerunning with the same file resumes.  ``max_nodes``
    bounds each branch's search tree and raises :class:`BudgetExceeded`.
    """
    if q < 1:
        raise BadParams("q must be at least 1")
    if max_vertices < q + 1:
        raise BadParams(f"need max_vertices >= q + 1 = {q + 1}")
    if max_vertices > MAX_TAU_VERTICES:
        raise BudgetExceeded(f"vertex budget {max_vertices} exceeds {MAX_TAU_VERTICES}")
    if max_vertices > 7 and q >= 2 and not force:
        raise BudgetExceeded(f"q={q} with {max_vertices} vertices needs force=True")
    t0 = time.perf_counter()
    v = max_vertices
    search = _Orderly(q, v, max_nodes)
    found: list[tuple[int, ...]] = []
    root_nodes = 1  # the single-set family
    # a single set has cover number 1 < q + 1, so it is never recorded itself
    branches = search.roots()

    done: dict[str, dict] = {}
    ckpt = Path(checkpoint) if checkpoint else None
    key = {"q": q, "max_vertices": v, "branches": len(branches)}
    if ckpt and ckpt.exists():
        data = json.loads(ckpt.read_text())
        if data.get("key") == key:
            done = data.get("completed", {})
        else:
            log.warning("checkpoint %s is for a different run; starting over", ckpt)

    def save() -> None:
        if ckpt:
            tmp = ckpt.with_suffix(ckpt.suffix + ".tmp")
            tmp.write_text(json.dumps({"key": key, "completed_indices": sorted(map(int, done)),
                                       "completed": done}))
            os.replace(tmp, ckpt)

    todo = [i for i in range(len(branches)) if str(i) not in done]
    jobs = [(q, v, branches[i][0], branches[i][1], max_nodes) for i in todo]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for i, (out, nodes) in zip(todo, pool.map(_branch_worker, jobs)):
                done[str(i)] = {"families": [list(f) for f in out], "nodes": nodes}
                save()
    else:
        for i, job in zip(todo, jobs):
            out, nodes = _branch_worker(job)
            done[str(i)] = {"families": [list(f) for f in out], "nodes": nodes}
            save()
            log.info("branch %d/%d done: %d classes, %d nodes", i + 1, len(branches), len(out), nodes)

    nodes = root_nodes
    for i in range(len(branches)):
        entry = done[str(i)]
        nodes += entry["nodes"]
        found.extend(tuple(f) for f in entry["families"])
    found.sort(key=lambda f: (len(f), f))
    families = [Family(v, q + 1, f) for f in found]
    constraints = {"k": q + 1, "intersecting": True, "tau": q + 1,
                   "max_vertices": v, "maximal": False}
    stats = {"nodes": nodes, "classes": len(families), "branches": len(branches),
             "elapsed_ms": _ms(t0)}
    return EnumerationResult(families, constraints, stats)


def compact(F: Family) -> Family:
    """Canonical representative of ``F`` on its own support ``[v]``."""
    return canonical_form(F).family


def beta_constant(q: int, max_vertices: int, *, result: EnumerationResult | None = None,
                  **kwargs) -> tuple[int, list[Family]]:
    """Largest ``beta_{0,q}`` among the classes of :func:`enumerate_tau_full`.

    Each class is evaluated inside ``[max_vertices + q]`` so the avoided
    q-set may use points outside the family's support.
    """
    if result is None:
        result = enumerate_tau_full(q, max_vertices, **kwargs)
    best, winners = 0, []
    for F in result.families:
        value = beta(F.with_n(max_vertices + q), 0, q).value
        if value > best:
            best, winners = value, [F]
        elif value == best:
            winners.append(F)
    return best, winners


def min_degree_on_support(F: Family) -> int:
    sup = F.support
    n = sup.bit_length()
    return min(sum(1 for m in F.masks if m >> i & 1) for i in range(n) if sup >> i & 1)


def canonical_classes(families: list[Family]) -> dict[CanonicalForm, list[Family]]:
    groups: dict[CanonicalForm, list[Family]] = {}
    for F in families:
        groups.setdefault(canonical_form(F), []).append(F)
    return dict(sorted(groups.items()))


__all__ = [
    "EnumerationResult", "enumerate_maximal", "exact_beta", "enumerate_tau_full",
    "beta_constant", "compact", "canonical_classes", "min_degree_on_support", "degree_stats",
]
