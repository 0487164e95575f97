"""Plancherel measures, hook-distance products, dimension bounds and
tensor-growth reports.

Every inequality here is checked on cross-multiplied exact integers; floating
point appears only in reported growth exponents, never in an assertion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .characters import CharacterTable, character_table, specht_dim
from .errors import ArithmeticBugError, DomainError, SizeLimitError, check_characteristic
from .partitions import Partition, bar, conjugate, level, partitions_of, sum_partitions
from .reports import Stopwatch, VerificationReport
from .tensor import Decomposition, kronecker_decompose

GROWTH_CAP = 14
F_SWEEP_CAP = 60
G_SWEEP_CAP = 14
LAMBDA_VS_BAR_CAP = 30
LAMBDA_UPPER_CAP = 30
DIM_BOUND_CAP = 24


def plancherel(dec: Decomposition) -> int:
    """Sum of squared dimensions over the distinct constituents (multiplicity ignored)."""
    return sum(specht_dim(lam) ** 2 for lam in dec.mult)


def f_pair(i: int, j: int) -> int:
    """max(1, |i - j|)."""
    return max(1, abs(i - j))


def F_prod(i: int, k: int) -> int:
    """Product of f(i, j) for j = 1..k; empty product is 1."""
    out = 1
    for j in range(1, k + 1):
        out *= f_pair(i, j)
    return out


def G_of(lam: Partition) -> int:
    """Hook-distance product of a partition, computed by both defining formulas.

    Diagonal form: product over the main diagonal of (lam_i - i)! (lam'_i - i)!.
    Nodewise form: product of f(i, j) over all nodes.  The two must agree
    exactly; a mismatch is an internal bug.
    """
    conj = conjugate(lam)
    diag_len = sum(1 for i in range(1, len(lam.parts) + 1) if lam.part(i) >= i)
    diagonal_form = 1
    for i in range(1, diag_len + 1):
        diagonal_form *= factorial(lam.part(i) - i) * factorial(conj.part(i) - i)
    nodewise = 1
    for i in range(1, len(lam.parts) + 1):
        nodewise *= F_prod(i, lam.part(i))
    if diagonal_form != nodewise:
        raise ArithmeticBugError(f"hook-distance product formulas disagree on {lam.literal()}")
    return nodewise


def check_F_submultiplicative(max_i: int, max_j: int, max_k: int) -> VerificationReport:
    """F(i, j+k) <= 3^(j+k) F(i,j) F(i,k), exhaustively over the given box."""
    if max(max_i, max_j, max_k) > F_SWEEP_CAP:
        raise SizeLimitError(f"F sweep capped at bounds <= {F_SWEEP_CAP}")
    watch = Stopwatch()
    table = [[F_prod(i, k) for k in range(max_j + max_k + 1)] for i in range(max_i + 1)]
    checked = 0
    failures: list[dict] = []
    worst = Fraction(0)
    for i in range(1, max_i + 1):
        row = table[i]
        for j in range(max_j + 1):
            for k in range(max_k + 1):
                lhs = row[j + k]
                rhs = 3 ** (j + k) * row[j] * row[k]
                checked += 1
                if lhs > rhs:
                    failures.append({"i": i, "j": j, "k": k, "lhs": str(lhs), "rhs": str(rhs)})
                ratio = Fraction(lhs, rhs)
                if ratio > worst:
                    worst = ratio
    return VerificationReport(
        theorem="hook_product_F",
        parameters={"max_i": max_i, "max_j": max_j, "max_k": max_k},
        instances_checked=checked,
        failures=failures,
        wall_time_ms=watch.ms(),
        observations={"worst_ratio": str(worst)},
    )


def check_G_submultiplicative(max_n: int) -> VerificationReport:
    """G(lam + mu) <= 3^(l+m) G(lam) G(mu) over all pairs with l + m <= max_n."""
    if max_n > G_SWEEP_CAP:
        raise SizeLimitError(f"G sweep capped at |lam|+|mu| <= {G_SWEEP_CAP}")
    watch = Stopwatch()
    checked = 0
    failures: list[dict] = []
    worst = Fraction(0)
    g_cache: dict[Partition, int] = {}

    def g(lam: Partition) -> int:
        if lam not in g_cache:
            g_cache[lam] = G_of(lam)
        return g_cache[lam]

    for l in range(max_n + 1):
        for m in range(max_n - l + 1):
            for lam in partitions_of(l):
                for mu in partitions_of(m):
                    lhs = g(sum_partitions(lam, mu))
                    rhs = 3 ** (l + m) * g(lam) * g(mu)
                    checked += 1
                    if lhs > rhs:
                        failures.append(
                            {"lambda": list(lam.parts), "mu": list(mu.parts), "lhs": str(lhs), "rhs": str(rhs)}
                        )
                    ratio = Fraction(lhs, rhs)
                    if ratio > worst:
                        worst = ratio
    return VerificationReport(
        theorem="hook_product_G",
        parameters={"max_n": max_n},
        instances_checked=checked,
        failures=failures,
        wall_time_ms=watch.ms(),
        observations={"worst_ratio": str(worst)},
    )


def check_lambda_vs_bar(max_n: int) -> VerificationReport:
    """Two-sided comparison of dim(lam) against binom(n, l) dim(bar lam) for
    level l <= n/3, plus the (n-2l over l)^l lower bound for l >= 1; all
    inequalities cross-multiplied, no division."""
    if max_n > LAMBDA_VS_BAR_CAP:
        raise SizeLimitError(f"sweep capped at n <= {LAMBDA_VS_BAR_CAP}")
    watch = Stopwatch()
    checked = 0
    failures: list[dict] = []
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            l = level(lam)
            if 3 * l > n:
                continue
            dim = specht_dim(lam)
            dim_bar = specht_dim(bar(lam))
            binom = comb(n, l)
            checked += 1
            if binom * dim_bar > 2 * dim:
                failures.append({"lambda": list(lam.parts), "which": "lower", "n": n})
            if dim > binom * dim_bar:
                failures.append({"lambda": list(lam.parts), "which": "upper", "n": n})
            if l >= 1 and l**l * dim < (n - 2 * l) ** l:
                failures.append({"lambda": list(lam.parts), "which": "power_lower", "n": n})
    return VerificationReport(
        theorem="lambda_vs_bar",
        parameters={"max_n": max_n},
        instances_checked=checked,
        failures=failures,
        wall_time_ms=watch.ms(),
    )


def check_lambda_upper(max_n: int) -> VerificationReport:
    """dim(lam)^2 * l! <= n^(2l) for every partition (squared-integer form)."""
    if max_n > LAMBDA_UPPER_CAP:
        raise SizeLimitError(f"sweep capped at n <= {LAMBDA_UPPER_CAP}")
    watch = Stopwatch()
    checked = 0
    failures: list[dict] = []
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            l = level(lam)
            checked += 1
            if specht_dim(lam) ** 2 * factorial(l) > n ** (2 * l):
                failures.append({"lambda": list(lam.parts), "n": n})
    return VerificationReport(
        theorem="lambda_upper",
        parameters={"max_n": max_n},
        instances_checked=checked,
        failures=failures,
        wall_time_ms=watch.ms(),
    )


def dim_lower_bound(n: int, l: int, p: int) -> int:
    """Dimension lower bound for an irreducible of level l: binom(floor(n/2), l)
    away from characteristic 2, and 2^l binom(floor(n/3), l) at p = 2 (the
    exponent is read as the level; binomials vanish when l is too large)."""
    check_characteristic(p)
    if n < 0 or l < 0:
        raise DomainError("n and l must be nonnegative")
    if p == 2:
        return 2**l * comb(n // 3, l)
    return comb(n // 2, l)


def check_dim_bound_char0(max_n: int) -> VerificationReport:
    """dim(lam) >= binom(floor(n/2), min(level, floor(n/2))) for every partition."""
    if max_n > DIM_BOUND_CAP:
        raise SizeLimitError(f"sweep capped at n <= {DIM_BOUND_CAP}")
    watch = Stopwatch()
    checked = 0
    failures: list[dict] = []
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            r = min(level(lam), n // 2)
            checked += 1
            if specht_dim(lam) < comb(n // 2, r):
                failures.append({"lambda": list(lam.parts), "n": n})
    return VerificationReport(
        theorem="dim_bound_char0",
        parameters={"max_n": max_n, "p": 0},
        instances_checked=checked,
        failures=failures,
        wall_time_ms=watch.ms(),
    )


# -- growth reports ------------------------------------------------------------


@dataclass
class GrowthRecord:
    """Plancherel data of one tensor product, with the empirical growth exponent."""

    n: int
    lam: Partition
    mu: Partition
    plancherel_v: int
    plancherel_w: int
    plancherel_tensor: int
    exponent: float | None
    max_level_witness: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "lambda": list(self.lam.parts),
            "mu": list(self.mu.parts),
            "pv": str(self.plancherel_v),
            "pw": str(self.plancherel_w),
            "pt": str(self.plancherel_tensor),
            "exponent": None if self.exponent is None else round(self.exponent, 9),
            "max_level_witness": self.max_level_witness,
        }

    def csv_row(self) -> str:
        d = self.to_dict()
        exp = "" if d["exponent"] is None else f"{d['exponent']:.9f}"
        return ",".join(
            [
                str(self.n),
                self.lam.literal().replace(",", " "),
                self.mu.literal().replace(",", " "),
                d["pv"],
                d["pw"],
                d["pt"],
                exp,
                "1" if self.max_level_witness else "0",
            ]
        )


GROWTH_CSV_HEADER = "n,lambda,mu,pv,pw,pt,exponent,max_level_witness"


def _log_int(x: int) -> float:
    # math.log overflows above ~2**1023; split off high bits first.
    if x <= 0:
        raise DomainError("log of a nonpositive integer")
    bits = x.bit_length()
    if bits <= 512:
        return math.log(x)
    shift = bits - 512
    return math.log(x >> shift) + shift * math.log(2)


def growth_report(lam: Partition, mu: Partition, table: CharacterTable | None = None) -> GrowthRecord:
    """Exact Plancherel measures of V, W and V tensor W, the empirical exponent
    log|VW| / log(|V||W|), and whether a constituent of maximal level appears."""
    n = lam.n
    if mu.n != n:
        raise DomainError("growth reports need two partitions of the same n")
    if n > GROWTH_CAP:
        raise SizeLimitError(f"growth reports capped at n <= {GROWTH_CAP}, got {n}")
    t = table if table is not None and table.n == n else character_table(n)
    dec = kronecker_decompose(lam, mu, t)
    pv = specht_dim(lam) ** 2
    pw = specht_dim(mu) ** 2
    pt = plancherel(dec)
    target = level(lam) + level(mu)
    witness = any(level(nu) == target for nu in dec.mult)
    denom = pv * pw
    exponent = None if denom == 1 else _log_int(pt) / _log_int(denom)
    return GrowthRecord(n, lam, mu, pv, pw, pt, exponent, witness)


def growth_sweep(n: int, table: CharacterTable | None = None) -> list[GrowthRecord]:
    """Growth records for all unordered pairs of partitions of n, canonical order."""
    if n > GROWTH_CAP:
        raise SizeLimitError(f"growth sweeps capped at n <= {GROWTH_CAP}, got {n}")
    t = table if table is not None and table.n == n else character_table(n)
    lams = partitions_of(n)
    return [growth_report(lam, mu, t) for i, lam in enumerate(lams) for mu in lams[i:]]


def observe_degree_vs_hook_products(max_n: int) -> VerificationReport:
    """Observed ratios dim(lam) * G(lam) / (n-1)! over all partitions.

    The degree of a low-level character tracks (n-1)!/G(lambda) up to
    subexponential factors, but with no effective constant; this sweep only
    records the extreme exact ratios, it asserts nothing.
    """
    if max_n > LAMBDA_VS_BAR_CAP:
        raise SizeLimitError(f"sweep capped at n <= {LAMBDA_VS_BAR_CAP}")
    watch = Stopwatch()
    lo = hi = Fraction(1)
    lo_at = hi_at = "[1]"
    checked = 0
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            ratio = Fraction(specht_dim(lam) * G_of(lam), factorial(n - 1))
            checked += 1
            if ratio < lo:
                lo, lo_at = ratio, lam.literal()
            if ratio > hi:
                hi, hi_at = ratio, lam.literal()
    return VerificationReport(
        theorem="degree_vs_hook_product",
        parameters={"max_n": max_n},
        instances_checked=checked,
        failures=[],
        wall_time_ms=watch.ms(),
        observations={"min_ratio": str(lo), "min_at": lo_at, "max_ratio": str(hi), "max_at": hi_at},
    )


def observe_sum_triple_degree_ratios(max_n: int) -> VerificationReport:
    """Observed deg(nu) / (deg(lam) deg(mu)) over sum-partition triples.

    Instances have bar(nu) = bar(lam) + bar(mu) with both levels at most n/6.
    The scaled column divides out the (2/15)^(l+m) reference; the epsilon-
    dependent constant in the underlying estimate is not effective, so this is
    reporting only.
    """
    if max_n > LAMBDA_VS_BAR_CAP:
        raise SizeLimitError(f"sweep capped at n <= {LAMBDA_VS_BAR_CAP}")
    watch = Stopwatch()
    worst: Fraction | None = None
    worst_at: dict | None = None
    checked = 0
    for n in range(6, max_n + 1):
        for l in range(n // 6 + 1):
            for m in range(n // 6 + 1):
                if l + m == 0:
                    continue
                for lam_bar in partitions_of(l):
                    lam = Partition((n - l,) + lam_bar.parts)
                    for mu_bar in partitions_of(m):
                        mu = Partition((n - m,) + mu_bar.parts)
                        nu_bar = sum_partitions(lam_bar, mu_bar)
                        nu = Partition((n - l - m,) + nu_bar.parts)
                        ratio = Fraction(specht_dim(nu), specht_dim(lam) * specht_dim(mu))
                        scaled = ratio * Fraction(15, 2) ** (l + m)
                        checked += 1
                        if worst is None or scaled < worst:
                            worst = scaled
                            worst_at = {
                                "n": n,
                                "lambda": list(lam.parts),
                                "mu": list(mu.parts),
                                "nu": list(nu.parts),
                                "ratio": str(ratio),
                            }
    obs = {} if worst is None else {"min_scaled_ratio": str(worst), "min_at": worst_at}
    return VerificationReport(
        theorem="sum_triple_degree_ratio",
        parameters={"max_n": max_n},
        instances_checked=checked,
        failures=[],
        wall_time_ms=watch.ms(),
        observations=obs,
    )


def an_plancherel(dec: Decomposition) -> int:
    """Plancherel measure of a characteristic-zero module over the alternating group.

    A non-self-conjugate constituent restricts irreducibly and is identified
    with its conjugate, contributing dim^2 once per unordered pair present; a
    self-conjugate constituent splits into two halves of equal dimension,
    contributing 2 (dim/2)^2.
    """
    if dec.n < 2:
        raise DomainError("alternating-group measure needs n >= 2")
    total = 0
    seen: set[Partition] = set()
    for lam in dec.mult:
        conj = conjugate(lam)
        if conj == lam:
            d = specht_dim(lam)
            half, rem = divmod(d, 2)
            if rem:
                raise ArithmeticBugError(f"self-conjugate {lam.literal()} has odd dimension {d}")
            total += 2 * half**2
        else:
            rep = lam if lam.parts > conj.parts else conj
            if rep in seen:
                continue
            seen.add(rep)
            total += specht_dim(lam) ** 2
    return total
