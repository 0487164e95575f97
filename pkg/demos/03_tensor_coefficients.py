"""Kronecker products, Littlewood-Richardson coefficients, and the
maximal-level identity connecting them.

When level(nu) = level(lambda) + level(mu), the Kronecker coefficient
g(lambda, mu, nu) collapses to a Littlewood-Richardson coefficient of the
partitions with their first rows removed.  The package verifies this
exhaustively; here we just watch it happen on a few instances.
"""

from symlevel import (
    Partition,
    bar,
    kronecker_coeff,
    kronecker_decompose,
    level,
    lr_coeff_characters,
    lr_coeff_tableaux,
    verify_murnaghan_littlewood,
)

lam = Partition([3, 1])
dec = kronecker_decompose(lam, lam)
print(f"chi^{lam.literal()} * chi^{lam.literal()} =")
for nu, m in dec.items():
    print(f"  {m} x {nu.literal()}   (level {level(nu)})")
print()

# The constituent of maximal level 2 is (2,2); its multiplicity must match
# the LR coefficient of the barred triple.
nu = Partition([2, 2])
print(f"g({lam.literal()}, {lam.literal()}, {nu.literal()}) =", kronecker_coeff(lam, lam, nu))
print(
    f"c^{bar(nu).literal()}_({bar(lam).literal()},{bar(lam).literal()}) =",
    lr_coeff_tableaux(bar(lam), bar(lam), bar(nu)),
)
print()

# Two independent LR algorithms: tableau enumeration and Frobenius reciprocity.
triples = [
    ([2, 1], [2, 1], [3, 2, 1]),
    ([2], [1], [2, 1]),
    ([3, 1], [2, 1], [4, 2, 1]),
]
for a, b, c in triples:
    lam, mu, nu = Partition(a), Partition(b), Partition(c)
    t = lr_coeff_tableaux(lam, mu, nu)
    f = lr_coeff_characters(lam, mu, nu)
    print(f"c^{nu.literal()}_({lam.literal()},{mu.literal()}) = {t} (tableaux) = {f} (characters)")
print()

rep = verify_murnaghan_littlewood(7)
print(f"exhaustive maximal-level check at n=7: {rep.status}, {rep.instances_checked} triples")
