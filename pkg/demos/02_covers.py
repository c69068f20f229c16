"""Minimal covers of an intersecting family, and rebuilding from them.

A maximal intersecting family is the union of the up-closures of its
minimal covers.  For the Fano plane the minimal covers are the lines
themselves, so closing them up in a bigger ground set gives the Fano lift.
"""
from domdodom import covering_number, fano, minimal_covers
from domdodom.constructions import f23
from domdodom.covers import close_to_maximal, cover_bound, is_maximal_intersecting

F = fano()
rep = minimal_covers(F)
print("tau(Fano) =", rep.tau)
print("minimal covers:", [sorted(c.elements) for c in rep.minimal_covers])
print("covers are the lines:", rep.masks == F.masks)

G = f23(7, 3)
rep = minimal_covers(G)
print(f"\nf23(7,3): {len(G)} sets, tau = {covering_number(G)}")
print("minimal covers:", [sorted(c.elements) for c in rep.minimal_covers])
print("at most k^k =", cover_bound(3))

rebuilt = close_to_maximal(rep.masks, 7, 3)
print("rebuilt from covers:", rebuilt == G, " maximal:", is_maximal_intersecting(G))
