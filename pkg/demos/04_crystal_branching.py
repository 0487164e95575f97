"""Signature combinatorics: normal nodes, good nodes and branching.

For each residue i, the addable and removable i-nodes along the rim form a
+/- string; cancelling adjacent "-+" pairs leaves the normal nodes.  Removing
the good node (the bottom-left-most normal node) is the combinatorial shadow
of branching to S_{n-1}, and it provably preserves p-regularity.
"""

from symlevel import (
    Partition,
    e_tilde,
    epsilon,
    good_node,
    i_signature,
    is_jantzen_seitz,
    rank_formula,
    reduced_signature,
    specht_rank_formula,
)

lam = Partition([4, 2, 1])
p = 2
print(f"lambda = {lam.literal()}, p = {p}")
for i in range(p):
    sig = i_signature(lam, i, p)
    red = reduced_signature(sig)
    print(f"  i={i}: signature [{sig}]  reduced [{red}]  eps={epsilon(lam, i, p)}  good={good_node(lam, i, p)}")
print()

# Follow a chain of good-node removals at residue 0.
chain = [lam]
while True:
    nxt = e_tilde(chain[-1], 0, p)
    if nxt is None:
        break
    chain.append(nxt)
print("good-node chain at i=0:", " -> ".join(c.literal() for c in chain))
print()

# Jantzen-Seitz partitions restrict irreducibly to S_{n-1}.
print("Jantzen-Seitz at p=3 among partitions of 6 (3-regular only):")
from symlevel import is_p_regular, partitions_of

for mu in partitions_of(6):
    if is_p_regular(mu, 3) and is_jantzen_seitz(mu, 3):
        print("  ", mu.literal())
print()

# Closed-form ranks: min(level, n/2) away from p=2, min(level, n/3) at p=2.
for mu, q in [(Partition([5, 2]), 0), (Partition([2, 1]), 2), (Partition([4, 3, 1]), 3)]:
    print(f"rank of D^{mu.literal()} at p={q}: {rank_formula(mu, q)}")
print(f"Specht 3-rank of (3,3): {specht_rank_formula(Partition([3, 3]), 'rank3')} = min(3, 4, 2)")
