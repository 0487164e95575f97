"""Kronecker coefficients, Littlewood-Richardson coefficients, and the
characteristic-zero maximal-level identity relating them.

Kronecker multiplicities come from exact class-weighted character sums (no
combinatorial rule exists for them in general).  LR coefficients are computed
two independent ways: enumeration of lattice skew tableaux, and the induction
multiplicity via Frobenius reciprocity; agreement of the two is part of the
test contract.
"""

from __future__ import annotations

from math import factorial

from .characters import CharacterTable, character_table, character_value, class_size, specht_dim
from .errors import ArithmeticBugError, DomainError, SizeLimitError
from .partitions import Partition, bar, contains, level, partitions_of
from .reports import Stopwatch, VerificationReport

#: Cap on the exhaustive maximal-level sweep (triple counts grow quickly).
MURNAGHAN_CAP = 10


class Decomposition:
    """Multiset of irreducible constituents: partition -> positive multiplicity."""

    __slots__ = ("n", "mult")

    def __init__(self, n: int, mult: dict[Partition, int]):
        for lam, m in mult.items():
            if m <= 0:
                raise DomainError(f"multiplicities must be positive, got {m} for {lam.literal()}")
            if lam.n != n:
                raise DomainError(f"constituent {lam.literal()} is not a partition of {n}")
        self.n = n
        self.mult = mult

    def items(self) -> list[tuple[Partition, int]]:
        """Constituents in canonical (reverse-lexicographic) order."""
        return sorted(self.mult.items(), key=lambda kv: kv[0].parts, reverse=True)

    def constituents(self) -> list[Partition]:
        return [lam for lam, _ in self.items()]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Decomposition) and self.n == other.n and self.mult == other.mult

    def __repr__(self) -> str:
        inner = ", ".join(f"{lam.literal()}: {m}" for lam, m in self.items())
        return f"Decomposition(n={self.n}, {{{inner}}})"


def _table(n: int, table: CharacterTable | None) -> CharacterTable:
    return table if table is not None and table.n == n else character_table(n)


def kronecker_coeff(
    lam: Partition, mu: Partition, nu: Partition, table: CharacterTable | None = None
) -> int:
    """Multiplicity of chi^nu in chi^lambda * chi^mu, by the class-weighted triple sum."""
    n = lam.n
    if mu.n != n or nu.n != n:
        raise DomainError("Kronecker coefficients need three partitions of the same n")
    t = _table(n, table)
    rl, rm, rn = t.row_values(lam), t.row_values(mu), t.row_values(nu)
    total = 0
    for cs, a, b, c in zip(t.class_sizes, rl, rm, rn):
        total += cs * a * b * c
    coeff, rem = divmod(total, factorial(n))
    if rem or coeff < 0:
        raise ArithmeticBugError(
            f"Kronecker sum is not a nonnegative integer for {lam.literal()},{mu.literal()},{nu.literal()}"
        )
    return coeff


def kronecker_decompose(
    lam: Partition, mu: Partition, table: CharacterTable | None = None
) -> Decomposition:
    """Full decomposition of the tensor square-free product chi^lambda * chi^mu."""
    n = lam.n
    if mu.n != n:
        raise DomainError("tensor decomposition needs two partitions of the same n")
    t = _table(n, table)
    rl, rm = t.row_values(lam), t.row_values(mu)
    weighted = [cs * a * b for cs, a, b in zip(t.class_sizes, rl, rm)]
    nfact = factorial(n)
    mult: dict[Partition, int] = {}
    dim_total = 0
    for nu in t.classes:
        total = 0
        for w, c in zip(weighted, t.row_values(nu)):
            total += w * c
        coeff, rem = divmod(total, nfact)
        if rem or coeff < 0:
            raise ArithmeticBugError(f"non-integral Kronecker multiplicity at {nu.literal()}")
        if coeff:
            mult[nu] = coeff
            dim_total += coeff * t.degree(nu)
    if dim_total != t.degree(lam) * t.degree(mu):
        raise ArithmeticBugError("tensor decomposition dimensions do not add up")
    return Decomposition(n, mult)


# -- Littlewood-Richardson -----------------------------------------------------


def lr_coeff_tableaux(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Number of LR skew tableaux of shape nu/lam and weight mu.

    Semistandard fillings whose reverse reading word (right to left, top to
    bottom) is a lattice word; cells are filled in exactly that order so the
    lattice condition is a prefix check.
    """
    if lam.n + mu.n != nu.n:
        raise DomainError("LR coefficients need |lam| + |mu| = |nu|")
    if not contains(nu, lam):
        return 0
    if mu.n == 0:
        return 1  # nu == lam forced by the size check
    k = len(mu.parts)

    cells = []  # reverse reading order
    for row in range(1, len(nu.parts) + 1):
        lo, hi = lam.part(row), nu.part(row)
        for col in range(hi, lo, -1):
            cells.append((row, col))
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * (k + 1)  # counts[v] = number of entries v placed so far

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        row, col = cells[idx]
        hi = grid[(row, col + 1)] if (row, col + 1) in grid else k
        above = grid.get((row - 1, col), 0) if col > lam.part(row - 1) else 0
        total = 0
        for v in range(above + 1, hi + 1):
            if counts[v] >= mu.parts[v - 1]:
                continue
            if v > 1 and counts[v - 1] <= counts[v]:
                continue  # lattice prefix condition
            grid[(row, col)] = v
            counts[v] += 1
            total += fill(idx + 1)
            counts[v] -= 1
            del grid[(row, col)]
        return total

    return fill(0)


def lr_coeff_characters(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The same coefficient as the induction multiplicity, via Frobenius reciprocity.

    <chi^lam x chi^mu, Res chi^nu> over the Young subgroup S_l x S_m: an exact
    double sum over pairs of classes, whose union of cycles is a class of S_n.
    """
    l, m = lam.n, mu.n
    if l + m != nu.n:
        raise DomainError("LR coefficients need |lam| + |mu| = |nu|")
    memo_l: dict = {}
    memo_m: dict = {}
    memo_n: dict = {}
    total = 0
    for alpha in partitions_of(l):
        va = character_value(lam, alpha, memo_l)
        if va == 0:
            continue
        wa = class_size(alpha) * va
        for beta in partitions_of(m):
            vb = character_value(mu, beta, memo_m)
            if vb == 0:
                continue
            merged = Partition(sorted(alpha.parts + beta.parts, reverse=True))
            total += wa * class_size(beta) * vb * character_value(nu, merged, memo_n)
    coeff, rem = divmod(total, factorial(l) * factorial(m))
    if rem or coeff < 0:
        raise ArithmeticBugError(
            f"induction multiplicity is not a nonnegative integer for "
            f"{lam.literal()},{mu.literal()},{nu.literal()}"
        )
    return coeff


def max_level_constituent(dec: Decomposition) -> int:
    """Largest level among the constituents of a decomposition."""
    if not dec.mult:
        raise DomainError("empty decomposition")
    return max(level(nu) for nu in dec.mult)


def verify_murnaghan_littlewood(
    n: int, table: CharacterTable | None = None, cap: int = MURNAGHAN_CAP
) -> VerificationReport:
    """Check, exhaustively over triples of partitions of n at maximal level, that
    the Kronecker coefficient equals the LR coefficient of the barred triple.

    A triple qualifies when level(nu) = level(lam) + level(mu); then
    g(lam, mu, nu) must equal c^{bar nu}_{bar lam, bar mu}.
    """
    if n > cap:
        raise SizeLimitError(f"maximal-level sweep capped at n <= {cap}, got {n}")
    watch = Stopwatch()
    t = _table(n, table)
    lams = partitions_of(n)
    by_level: dict[int, list[Partition]] = {}
    for nu in lams:
        by_level.setdefault(level(nu), []).append(nu)

    checked = 0
    failures: list[dict] = []
    for lam in lams:
        ll = level(lam)
        for mu in lams:
            lm = level(mu)
            for nu in by_level.get(ll + lm, ()):
                lhs = kronecker_coeff(lam, mu, nu, t)
                rhs = lr_coeff_tableaux(bar(lam), bar(mu), bar(nu))
                checked += 1
                if lhs != rhs:
                    failures.append(
                        {
                            "lambda": list(lam.parts),
                            "mu": list(mu.parts),
                            "nu": list(nu.parts),
                            "lhs": str(lhs),
                            "rhs": str(rhs),
                        }
                    )
    return VerificationReport(
        theorem="murnaghan_littlewood",
        parameters={"n": n, "p": 0},
        instances_checked=checked,
        failures=failures,
        wall_time_ms=watch.ms(),
    )


def plancherel_dim_check(dec: Decomposition) -> int:
    """Total dimension of a decomposition with multiplicities (bookkeeping helper)."""
    return sum(m * specht_dim(lam) for lam, m in dec.mult.items())
