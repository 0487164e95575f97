"""Characteristic-zero rank oracles via restriction to Young subgroups.

The 2-rank of a character is computed from its restriction to the subgroup
generated by floor(n/2) disjoint transpositions: the largest number of sign
factors appearing in a constituent linear character.  Because characters are
class functions, the 2^m-term sum over that subgroup collates to m + 1 terms
weighted by Krawtchouk-style coefficients.  The 3-rank uses the product of
floor(n/3) disjoint copies of S_3 and counts factors equal to its 2-dimensional
irreducible; the collation there is a 2-variable generating polynomial per
factor type.  These oracles are the brute-force check against the closed-form
level formulas, so they never consult them.
"""

from __future__ import annotations

from math import comb, factorial

from .characters import CharacterTable, ClassFunction, character_table
from .crystal import specht_rank_formula
from .errors import ArithmeticBugError, DomainError, SizeLimitError
from .partitions import Partition, level, partitions_of
from .reports import Stopwatch, VerificationReport
from .tensor import Decomposition, kronecker_decompose

#: Cap on the exhaustive tensor-additivity sweep.
ADDITIVITY_CAP = 10


class TypeProfile:
    """Multiplicities of restriction types r = 0..top in a restricted module.

    For kind 'E2' the type-r count aggregates all linear characters with r sign
    factors; for kind 'E3' all irreducibles with r two-dimensional factors
    (each of dimension 2^r).
    """

    __slots__ = ("n", "kind", "counts")

    def __init__(self, n: int, kind: str, counts: tuple[int, ...]):
        self.n = n
        self.kind = kind
        self.counts = counts

    def max_type(self) -> int:
        top = 0
        for r, c in enumerate(self.counts):
            if c > 0:
                top = r
        return top

    def __repr__(self) -> str:
        return f"TypeProfile({self.kind}, n={self.n}, counts={list(self.counts)})"


def _transposition_class(n: int, t: int) -> Partition:
    return Partition([2] * t + [1] * (n - 2 * t))


def type_profile_e2(chi: ClassFunction) -> TypeProfile:
    """Type multiplicities of chi restricted to floor(n/2) disjoint S_2 factors.

    m_r = 2^-m * sum_t chi(t transpositions) * K_r(t) with
    K_r(t) = sum_j (-1)^j C(r,j) C(m-r,t-j); the collation by t = |T| and
    j = |R meet T| is what keeps the sweep polynomial in n.
    """
    n = chi.n
    m = n // 2
    chi_t = [chi.value(_transposition_class(n, t)) for t in range(m + 1)]
    denom = 2**m
    counts = []
    for r in range(m + 1):
        total = 0
        for t in range(m + 1):
            k = 0
            for j in range(max(0, t - (m - r)), min(r, t) + 1):
                term = comb(r, j) * comb(m - r, t - j)
                k += -term if j % 2 else term
            total += chi_t[t] * k
        mult, rem = divmod(total, denom)
        if rem:
            raise DomainError(f"type multiplicity not integral at r={r}; input is not a character")
        if mult < 0:
            raise DomainError(f"negative type multiplicity at r={r}; input is not a character")
        counts.append(comb(m, r) * mult)
    if sum(counts) != chi_t[0]:
        raise ArithmeticBugError("E2 type multiplicities do not add up to the degree")
    return TypeProfile(n, "E2", tuple(counts))


def rank2_oracle(chi: ClassFunction) -> int:
    """Largest r with a type-r linear constituent in the restriction."""
    return type_profile_e2(chi).max_type()


def _poly_mul(a: dict[tuple[int, int], int], b: dict[tuple[int, int], int]) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for (i, j), x in a.items():
        for (k, l), y in b.items():
            key = (i + k, j + l)
            out[key] = out.get(key, 0) + x * y
    return out


def _poly_pow(base: dict[tuple[int, int], int], e: int) -> dict[tuple[int, int], int]:
    out = {(0, 0): 1}
    for _ in range(e):
        out = _poly_mul(out, base)
    return out

# Per-factor class sums weighted by irreducible character values over S_3;
# u marks a 3-cycle, v a transposition.
_TRIV_FACTOR = {(0, 0): 1, (0, 1): 3, (1, 0): 2}
_SIGN_FACTOR = {(0, 0): 1, (0, 1): -3, (1, 0): 2}
_TWODIM_FACTOR = {(0, 0): 2, (1, 0): -2}


def type_profile_e3(chi: ClassFunction) -> TypeProfile:
    """Type multiplicities of chi restricted to floor(n/3) disjoint S_3 factors.

    Classes of the product group collate by (number of 3-cycle factors, number
    of transposition factors); per tuple shape (x trivial, y sign, r
    two-dimensional factors) the collated weights are the coefficients of
    (1+3v+2u)^x (1-3v+2u)^y (2-2u)^r.
    """
    n = chi.n
    l = n // 3
    denom = 6**l
    chi_ab: dict[tuple[int, int], int] = {}
    for a in range(l + 1):
        for b in range(l - a + 1):
            cls = Partition([3] * a + [2] * b + [1] * (n - 3 * a - 2 * b))
            chi_ab[(a, b)] = chi.value(cls)
    counts = [0] * (l + 1)
    for r in range(l + 1):
        base = _poly_pow(_TWODIM_FACTOR, r)
        for x in range(l - r + 1):
            y = l - r - x
            poly = _poly_mul(_poly_mul(base, _poly_pow(_TRIV_FACTOR, x)), _poly_pow(_SIGN_FACTOR, y))
            total = sum(c * chi_ab[ab] for ab, c in poly.items())
            mult, rem = divmod(total, denom)
            if rem:
                raise DomainError(
                    f"type multiplicity not integral at (x,y,r)=({x},{y},{r}); input is not a character"
                )
            if mult < 0:
                raise DomainError(
                    f"negative type multiplicity at (x,y,r)=({x},{y},{r}); input is not a character"
                )
            # number of distinct factor tuples with this shape
            counts[r] += factorial(l) // (factorial(x) * factorial(y) * factorial(r)) * mult
    if sum(c * 2**r for r, c in enumerate(counts)) != chi.degree():
        raise ArithmeticBugError("E3 type multiplicities do not add up to the degree")
    return TypeProfile(n, "E3", tuple(counts))


def rank3_oracle(chi: ClassFunction) -> int:
    """Largest r with a type-r constituent in the restriction to the S_3 factors."""
    return type_profile_e3(chi).max_type()


def restriction_minus_character(chi: ClassFunction) -> ClassFunction:
    """Character of the sign-isotypic part of the restriction to S_{n-2} x S_2.

    On a class rho of S_{n-2} this is (chi(rho + two fixed points) minus
    chi(rho + one transposition)) / 2.
    """
    n = chi.n
    if n < 2:
        raise DomainError("need n >= 2")
    values: dict[Partition, int] = {}
    for rho in partitions_of(n - 2):
        plus = chi.value(Partition(sorted(rho.parts + (1, 1), reverse=True)))
        minus = chi.value(Partition(sorted(rho.parts + (2,), reverse=True)))
        val, rem = divmod(plus - minus, 2)
        if rem:
            raise DomainError("sign-isotypic character is not integral; input is not a character")
        values[rho] = val
    return ClassFunction(n - 2, values)


def module_rank2(dec: Decomposition, table: CharacterTable | None = None) -> int:
    """2-rank of a characteristic-zero module: the maximum over its constituents."""
    if not dec.mult:
        raise DomainError("empty decomposition has no rank")
    t = table if table is not None and table.n == dec.n else character_table(dec.n)
    return max(rank2_oracle(t.row(nu)) for nu in dec.mult)


def verify_specht_rank(n: int, table: CharacterTable | None = None) -> VerificationReport:
    """Check both restriction-type oracles against the closed-form level formulas,
    exhaustively over partitions of n."""
    watch = Stopwatch()
    t = table if table is not None and table.n == n else character_table(n)
    checked = 0
    failures: list[dict] = []
    for lam in partitions_of(n):
        chi = t.row(lam)
        got2, want2 = rank2_oracle(chi), specht_rank_formula(lam, "rank2")
        got3, want3 = rank3_oracle(chi), specht_rank_formula(lam, "rank3")
        checked += 2
        if got2 != want2:
            failures.append({"lambda": list(lam.parts), "kind": "rank2", "oracle": got2, "formula": want2})
        if got3 != want3:
            failures.append({"lambda": list(lam.parts), "kind": "rank3", "oracle": got3, "formula": want3})
    return VerificationReport(
        theorem="specht_rank",
        parameters={"n": n, "p": 0},
        instances_checked=checked,
        failures=failures,
        wall_time_ms=watch.ms(),
    )


def verify_tensor_rank_additivity(
    n: int, table: CharacterTable | None = None, cap: int = ADDITIVITY_CAP
) -> VerificationReport:
    """For pairs whose 2-ranks sum to at most n/2, the 2-rank of the tensor
    product must equal the sum; swept exhaustively over unordered pairs."""
    if n > cap:
        raise SizeLimitError(f"tensor additivity sweep capped at n <= {cap}, got {n}")
    watch = Stopwatch()
    t = table if table is not None and table.n == n else character_table(n)
    lams = partitions_of(n)
    rank_cache: dict[Partition, int] = {}

    def oracle(nu: Partition) -> int:
        if nu not in rank_cache:
            rank_cache[nu] = rank2_oracle(t.row(nu))
        return rank_cache[nu]

    checked = 0
    failures: list[dict] = []
    for i, lam in enumerate(lams):
        r = specht_rank_formula(lam, "rank2")
        for mu in lams[i:]:
            s = specht_rank_formula(mu, "rank2")
            if 2 * (r + s) > n:
                continue
            dec = kronecker_decompose(lam, mu, t)
            got = max(oracle(nu) for nu in dec.mult)
            checked += 1
            if got != r + s:
                failures.append(
                    {
                        "lambda": list(lam.parts),
                        "mu": list(mu.parts),
                        "expected": r + s,
                        "got": got,
                    }
                )
    return VerificationReport(
        theorem="tensor_rank_additivity",
        parameters={"n": n, "p": 0},
        instances_checked=checked,
        failures=failures,
        wall_time_ms=watch.ms(),
    )


def max_level_rank2_identity(n: int, table: CharacterTable | None = None) -> bool:
    """Characteristic-zero observation: max(r2(lam), r2(lam')) = floor(n/2) for all lam.

    Follows from the closed form; checked here with the oracle directly.
    """
    from .partitions import conjugate

    t = table if table is not None and table.n == n else character_table(n)
    for lam in partitions_of(n):
        if max(rank2_oracle(t.row(lam)), rank2_oracle(t.row(conjugate(lam)))) != n // 2:
            return False
    return True
