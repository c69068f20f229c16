"""How robust is the Fano plane?

The (p,q)-domdodom asks: fix p points that must be inside and q points that
must be outside; how many members survive in the worst case?  The Fano
plane is the classic example where forbidding any two points still leaves
two lines.
"""
from domdodom import beta, beta_prime, fano, restrict
from domdodom.family import SetWord

F = fano()
print("Fano lines:", F.as_lists())

# (0,0) is just the size, (1,0) the minimum degree
for p, q in [(0, 0), (1, 0), (0, 1), (0, 2), (1, 1)]:
    r = beta(F, p, q)
    print(f"beta_{p}{q} = {r.value}   witness A={r.witness_A.elements} B={r.witness_B.elements}")

# the witness pair is the least one; look at what survives it
r = beta(F, 0, 2)
print("lines avoiding", r.witness_B.elements, "->", restrict(F, r.witness_A, r.witness_B).as_lists())

# the intersection variant asks A to be met rather than contained
print("beta'_12 =", beta_prime(F, 1, 2).value)

# a single point removed kills every line through it but no more
print("lines avoiding {7}:", restrict(F, SetWord(0, 7), SetWord.of([7], 7)).as_lists())
