"""Restriction-type rank oracles versus the closed-form level formulas.

The 2-rank of a character is read off from its restriction to floor(n/2)
disjoint transpositions, the 3-rank from floor(n/3) disjoint copies of S_3.
Neither oracle knows anything about levels, yet on every Specht character they
reproduce min(level, n/2) and min(level, level of conjugate, n/3).
"""

from symlevel import (
    Partition,
    character_table,
    conjugate,
    kronecker_decompose,
    level,
    module_rank2,
    partitions_of,
    rank2_oracle,
    rank3_oracle,
    specht_rank_formula,
    type_profile_e2,
    verify_tensor_rank_additivity,
)

n = 9
t = character_table(n)
print(f"n = {n}: oracle vs formula on every Specht character")
print(f"{'lambda':>16} {'r2 oracle':>9} {'formula':>8} {'r3 oracle':>9} {'formula':>8}")
for lam in partitions_of(n):
    chi = t.row(lam)
    print(
        f"{lam.literal():>16} {rank2_oracle(chi):>9} {specht_rank_formula(lam, 'rank2'):>8}"
        f" {rank3_oracle(chi):>9} {specht_rank_formula(lam, 'rank3'):>8}"
    )
print()

# The full type profile of the standard character: how the restriction to the
# transposition subgroup splits by number of sign factors.
lam = Partition([n - 1, 1])
profile = type_profile_e2(t.row(lam))
print(f"E2 type profile of chi^{lam.literal()}: {list(profile.counts)} (degree {t.degree(lam)})")
print(f"max(r2(lam), r2(lam')) = {max(rank2_oracle(t.row(lam)), rank2_oracle(t.row(conjugate(lam))))}"
      f" = floor(n/2) = {n // 2}")
print()

# Rank additivity for tensor products, as long as the ranks fit in n/2.
lam, mu = Partition([8, 1]), Partition([7, 2])
dec = kronecker_decompose(lam, mu, t)
print(f"r2({lam.literal()}) + r2({mu.literal()}) = "
      f"{specht_rank_formula(lam, 'rank2') + specht_rank_formula(mu, 'rank2')}")
print(f"r2 of the tensor product = {module_rank2(dec, t)}")
print(f"levels of constituents: {sorted({level(nu) for nu in dec.mult})}")
print()

rep = verify_tensor_rank_additivity(8)
print(f"exhaustive additivity sweep at n=8: {rep.status}, {rep.instances_checked} pairs")
