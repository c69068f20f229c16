"""Exhaustive search: which triple systems keep two members after any two
points are deleted?

The orderly search lists every intersecting 3-uniform family with covering
number 3 on at most 7 points, one per isomorphism class.  Only two classes
reach beta_02 = 2: the Fano plane and a 10-triple design on 6 points.
"""
import tempfile
from pathlib import Path

from domdodom import beta_fast, enumerate_maximal, enumerate_tau_full, exact_beta
from domdodom.verify import classify_charact

with tempfile.TemporaryDirectory() as tmp:
    ckpt = Path(tmp) / "run.json"
    result = enumerate_tau_full(2, 7, checkpoint=ckpt)
    print(f"{len(result.families)} classes, {result.stats['nodes']} search nodes")

for F in result.families:
    value = beta_fast(F.with_n(9), 0, 2).value
    if value == 2:
        print(f"beta_02 = 2: {classify_charact(F)} with {len(F)} triples", F.as_lists())

# the largest intersecting families on [7] come from maximal cliques of the
# disjointness complement
maximal = enumerate_maximal(7, 3)
print(f"\n{len(maximal.families)} maximal intersecting families on [7]")
for q in range(3):
    value, winners = exact_beta(7, 3, 0, q, families=maximal.families)
    print(f"max beta_0{q} = {value}, attained by {len(winners)} families")
