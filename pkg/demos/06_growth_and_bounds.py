"""Plancherel measure, tensor growth, and the hook-product machinery.

The Plancherel measure of a module is the sum of squared dimensions of its
distinct constituents.  Tensor products of low-level representations grow:
the measure of V (x) W stays close to |V||W|, and the report records the
empirical exponent log|VW| / log(|V||W|) together with the maximal-level
witness constituent.
"""

from symlevel import (
    Decomposition,
    Partition,
    an_plancherel,
    check_F_submultiplicative,
    check_G_submultiplicative,
    check_lambda_upper,
    check_lambda_vs_bar,
    dim_lower_bound,
    G_of,
    growth_report,
    growth_sweep,
    plancherel,
    specht_dim,
)
from symlevel.growth import GROWTH_CSV_HEADER

rec = growth_report(Partition([2, 1]), Partition([2, 1]))
print(f"|V| = {rec.plancherel_v}, |W| = {rec.plancherel_w}, |V(x)W| = {rec.plancherel_tensor}")
print(f"exponent = {rec.exponent:.6f}, maximal-level witness: {rec.max_level_witness}")
print()

print("growth sweep over pairs of partitions of 6 (first rows):")
print(GROWTH_CSV_HEADER)
for r in growth_sweep(6)[:8]:
    print(r.csv_row())
print()

# Hook-distance products and their submultiplicativity, checked exactly.
lam = Partition([4, 2, 1])
print(f"G({lam.literal()}) = {G_of(lam)}")
for rep in (check_F_submultiplicative(15, 15, 15), check_G_submultiplicative(10)):
    print(f"{rep.theorem}: {rep.status} on {rep.instances_checked} instances,"
          f" worst ratio {rep.observations['worst_ratio']}")
print()

# Dimension bounds: every level-l irreducible is at least this large.
for n, l in [(10, 2), (20, 4)]:
    print(f"n={n}, level {l}: dim >= {dim_lower_bound(n, l, 0)} (p!=2),"
          f" dim >= {dim_lower_bound(n, l, 2)} (p=2)")
for rep in (check_lambda_vs_bar(18), check_lambda_upper(16)):
    print(f"{rep.theorem}: {rep.status} on {rep.instances_checked} instances")
print()

# Over the alternating group, self-conjugate constituents split in half.
dec = Decomposition(3, {Partition([2, 1]): 1})
print(f"S_3 measure of chi^[2,1]: {plancherel(dec)}  (dim {specht_dim(Partition([2, 1]))})")
print(f"A_3 measure of chi^[2,1]: {an_plancherel(dec)}  (splits into two halves)")
print()

# The asymptotic approximations have no effective constants, so the package
# only reports their observed extremes, never asserts them.
from symlevel import observe_degree_vs_hook_products, observe_sum_triple_degree_ratios

rep = observe_degree_vs_hook_products(16)
print(f"dim * G / (n-1)! over n<=16: min {rep.observations['min_ratio']}"
      f" at {rep.observations['min_at']}, max {rep.observations['max_ratio']}")
rep = observe_sum_triple_degree_ratios(24)
print(f"scaled sum-triple degree ratio over n<=24: min {rep.observations['min_scaled_ratio']}")
