"""Partitions, Young diagrams and the level statistic.

The level of a partition of n is n minus its first part: the number of boxes
below the first row.  Dropping the first row ("bar") leaves a partition of the
level, which is the basic bookkeeping device behind all the dimension bounds
in this package.
"""

from symlevel import (
    Partition,
    addable_nodes,
    bar,
    conjugate,
    dominates,
    enumerate_partitions,
    level,
    removable_nodes,
    residue,
    sum_partitions,
)

lam = Partition([5, 2, 1])
print(f"lambda        = {lam.literal()}  (n = {lam.n})")
print(f"level         = {level(lam)}")
print(f"bar           = {bar(lam).literal()}   (a partition of the level)")
print(f"conjugate     = {conjugate(lam).literal()}")
print(f"(2,1) + (1,1) = {sum_partitions(Partition([2, 1]), Partition([1, 1])).literal()}")
print()

# Enumeration is reverse-lexicographic, the fixed order used by every table.
print("partitions of 5:", " ".join(p.literal() for p in enumerate_partitions(5)))
print()

# Dominance order: (4,1) covers more weight at every prefix than (3,2)?
a, b = Partition([4, 1]), Partition([3, 2])
print(f"{a.literal()} dominates {b.literal()}: {dominates(a, b)}")
print(f"{b.literal()} dominates {a.literal()}: {dominates(b, a)}")
print()

# The rim of the diagram, read bottom left to top right: removable nodes can
# be deleted, addable nodes can be appended, and each carries a residue
# (column minus row, mod p when p > 0).
print(f"removable nodes of {lam.literal()}:", removable_nodes(lam))
print(f"addable nodes of {lam.literal()}:  ", addable_nodes(lam))
for node in removable_nodes(lam):
    print(f"  node {node}: residue mod 3 = {residue(node, 3)}, over Z = {residue(node, 0)}")
