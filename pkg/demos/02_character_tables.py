"""Exact character tables of symmetric groups.

Character values come from rim-hook recursion, dimensions independently from
the hook length formula; the table below is printed with rows and columns in
the canonical reverse-lexicographic order.  Tables are cached on disk (one
JSON file per n, directory taken from $SYMLEVEL_CACHE_DIR, default
./.symlevel_cache), so the second run of this script is instant.
"""

from math import factorial

from symlevel import character_table, inner_product, specht_dim

n = 5
t = character_table(n)

width = max(len(lam.literal()) for lam in t.classes)
header = " ".join(f"{mu.literal():>{width}}" for mu in t.classes)
print(f"character table of S_{n}")
print(f"{'':{width}} {header}")
for lam in t.classes:
    row = " ".join(f"{v:>{width}}" for v in t.row_values(lam))
    print(f"{lam.literal():>{width}} {row}")
print()

print("class sizes:", list(t.class_sizes), "  sum =", sum(t.class_sizes), f"= {n}!")
print("degrees:    ", [t.degree(lam) for lam in t.classes])
print("sum of squared degrees:", sum(t.degree(lam) ** 2 for lam in t.classes), f"= {factorial(n)}")
print()

# Rows are orthonormal for the class-size-weighted inner product.
chi_a = t.row(t.classes[1])
chi_b = t.row(t.classes[2])
print(f"<{t.classes[1].literal()}, {t.classes[1].literal()}> =", inner_product(chi_a, chi_a))
print(f"<{t.classes[1].literal()}, {t.classes[2].literal()}> =", inner_product(chi_a, chi_b))
print()

# The hook length formula gives the same degrees without any recursion.
print("hook-formula degrees:", [specht_dim(lam) for lam in t.classes])
