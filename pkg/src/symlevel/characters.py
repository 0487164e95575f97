"""Exact ordinary character theory of the symmetric group S_n.

Irreducible characters chi^lambda are computed by rim-hook recursion over
beta-numbers (first-column hook lengths); dimensions independently by the hook
length formula.  Everything is arbitrary-precision integer arithmetic; inner
products are exact rationals.  Full tables can be built in parallel and are
persisted to a JSON cache, one file per n.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from fractions import Fraction
from functools import lru_cache
from math import factorial
from pathlib import Path

from .errors import ArithmeticBugError, DomainError, SizeLimitError
from .parallel import parallel_map
from .partitions import Partition, conjugate, parse_partition, partitions_of

log = logging.getLogger(__name__)

#: Largest n for which a full character table will be built (627 rows at n = 20).
TABLE_CAP = 20

CACHE_ENV_VAR = "SYMLEVEL_CACHE_DIR"
DEFAULT_CACHE_DIR = ".symlevel_cache"
CACHE_SCHEMA = "v1"


def cache_dir_path(cache_dir: str | os.PathLike | None = None) -> Path:
    """Resolve the cache directory: explicit arg, then $SYMLEVEL_CACHE_DIR, then ./.symlevel_cache."""
    if cache_dir is not None:
        return Path(cache_dir)
    return Path(os.environ.get(CACHE_ENV_VAR, DEFAULT_CACHE_DIR))


def class_size(cycle_type: Partition) -> int:
    """Number of permutations of the given cycle type: n! over the centralizer order."""
    n = cycle_type.n
    centralizer = 1
    mult: dict[int, int] = {}
    for k in cycle_type:
        mult[k] = mult.get(k, 0) + 1
    for k, m in mult.items():
        centralizer *= k**m * factorial(m)
    size, rem = divmod(factorial(n), centralizer)
    if rem:
        raise ArithmeticBugError(f"centralizer order does not divide n! for {cycle_type}")
    return size


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = conjugate(lam)
    return [
        [lam.parts[i] - (j + 1) + conj.parts[j] - (i + 1) + 1 for j in range(lam.parts[i])]
        for i in range(len(lam.parts))
    ]


def specht_dim(lam: Partition) -> int:
    """Dimension of the Specht module: n! divided by the product of all hooks."""
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    dim, rem = divmod(factorial(lam.n), prod)
    if rem:
        raise ArithmeticBugError(f"hook product does not divide n! for {lam.literal()}")
    return dim


# -- rim-hook recursion ------------------------------------------------------


def _betas(parts: tuple[int, ...]) -> list[int]:
    # First-column hook lengths, strictly decreasing.
    h = len(parts)
    return [parts[i] + h - 1 - i for i in range(h)]


def _parts_from_betas(betas: list[int]) -> tuple[int, ...]:
    # betas strictly decreasing; strip resulting zero parts.
    h = len(betas)
    parts = [betas[i] - (h - 1 - i) for i in range(h)]
    return tuple(x for x in parts if x > 0)


def _char_rec(parts: tuple[int, ...], cycles: tuple[int, ...], memo: dict) -> int:
    if not cycles:
        return 1
    key = (parts, cycles)
    hit = memo.get(key)
    if hit is not None:
        return hit
    k = cycles[0]  # largest remaining cycle, removed first
    rest = cycles[1:]
    betas = _betas(parts)
    beta_set = set(betas)
    total = 0
    for b in betas:
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in betas if nb < x < b)
        new_betas = sorted((x for x in betas if x != b), reverse=True)
        new_betas.append(nb)
        new_betas.sort(reverse=True)
        term = _char_rec(_parts_from_betas(new_betas), rest, memo)
        total += -term if height % 2 else term
    memo[key] = total
    return total


def character_value(lam: Partition, cycle_type: Partition, memo: dict | None = None) -> int:
    """chi^lambda on the class of cycle_type, by rim-hook removal of the largest cycle."""
    if lam.n != cycle_type.n:
        raise DomainError(f"size mismatch: |{lam.literal()}| = {lam.n} vs |{cycle_type.literal()}| = {cycle_type.n}")
    cycles = tuple(sorted(cycle_type.parts, reverse=True))
    return _char_rec(lam.parts, cycles, {} if memo is None else memo)


# -- class functions and tables ----------------------------------------------


class ClassFunction:
    """An exact integer-valued class function of S_n, indexed by cycle types."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: dict[Partition, int]):
        self.n = n
        self.values = values

    def value(self, cycle_type: Partition) -> int:
        return self.values[cycle_type]

    def degree(self) -> int:
        return self.values[_identity_class(self.n)]

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        if self.n != other.n:
            raise DomainError("pointwise product needs class functions of the same n")
        return ClassFunction(self.n, {mu: v * other.values[mu] for mu, v in self.values.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ClassFunction) and self.n == other.n and self.values == other.values

    def __repr__(self) -> str:
        return f"ClassFunction(n={self.n}, degree={self.degree()})"


@lru_cache(maxsize=None)
def _identity_class(n: int) -> Partition:
    return Partition([1] * n)


def character(lam: Partition) -> ClassFunction:
    """The full row of chi^lambda as a ClassFunction (one shared recursion memo)."""
    memo: dict = {}
    return ClassFunction(
        lam.n, {mu: character_value(lam, mu, memo) for mu in partitions_of(lam.n)}
    )


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """(1/n!) sum over classes of class_size * f * g; exact rational."""
    if f.n != g.n:
        raise DomainError("inner product needs class functions of the same n")
    total = 0
    for mu in partitions_of(f.n):
        total += class_size(mu) * f.values[mu] * g.values[mu]
    return Fraction(total, factorial(f.n))


class CharacterTable:
    """Complete character table of S_n.

    Rows and classes are both indexed by partitions of n in the canonical
    reverse-lexicographic order; rows are stored as tuples of exact integers
    aligned with that class order.  Immutable once built.
    """

    __slots__ = ("n", "classes", "class_sizes", "_rows", "_class_index")

    def __init__(self, n: int, rows: dict[Partition, tuple[int, ...]]):
        self.n = n
        self.classes = partitions_of(n)
        self.class_sizes = tuple(class_size(mu) for mu in self.classes)
        self._rows = rows
        self._class_index = {mu: i for i, mu in enumerate(self.classes)}

    def row_values(self, lam: Partition) -> tuple[int, ...]:
        return self._rows[lam]

    def row(self, lam: Partition) -> ClassFunction:
        return ClassFunction(self.n, dict(zip(self.classes, self._rows[lam])))

    def value(self, lam: Partition, cycle_type: Partition) -> int:
        return self._rows[lam][self._class_index[cycle_type]]

    def degree(self, lam: Partition) -> int:
        return self._rows[lam][0] if self.n == 0 else self._rows[lam][self._class_index[_identity_class(self.n)]]


def _row_worker(args: tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]) -> tuple[int, ...]:
    # One table row; the memo is per worker process and dies with the pool.
    lam_parts, classes = args
    memo = _row_worker.memo  # type: ignore[attr-defined]
    return tuple(_char_rec(lam_parts, mu, memo) for mu in classes)


_row_worker.memo = {}  # type: ignore[attr-defined]


def _compute_rows(n: int, workers: int | None) -> dict[Partition, tuple[int, ...]]:
    lams = partitions_of(n)
    classes = tuple(tuple(sorted(mu.parts, reverse=True)) for mu in lams)
    if workers is None or workers <= 1:
        # one recursion memo per table, discarded afterwards
        memo: dict = {}
        return {lam: tuple(_char_rec(lam.parts, mu, memo) for mu in classes) for lam in lams}
    jobs = [(lam.parts, classes) for lam in lams]
    results = parallel_map(_row_worker, jobs, workers=workers)
    return dict(zip(lams, results))


# -- cache files ---------------------------------------------------------------


def cache_file(n: int, cache_dir: str | os.PathLike | None = None) -> Path:
    return cache_dir_path(cache_dir) / f"chartable_v1_{n}.json"


def table_to_json_dict(table: CharacterTable) -> dict:
    """Cache/CLI serialization; integers as decimal strings to keep consumers overflow-safe."""
    return {
        "schema": CACHE_SCHEMA,
        "n": table.n,
        "classes": [mu.literal() for mu in table.classes],
        "class_sizes": [str(s) for s in table.class_sizes],
        "rows": {lam.literal(): [str(v) for v in table.row_values(lam)] for lam in table.classes},
    }


def _table_from_json_dict(data: dict, n: int) -> CharacterTable:
    if data.get("schema") != CACHE_SCHEMA or data.get("n") != n:
        raise ValueError("schema or n mismatch")
    expected = [mu.literal() for mu in partitions_of(n)]
    if data.get("classes") != expected:
        raise ValueError("class order mismatch")
    sizes = [int(s) for s in data["class_sizes"]]
    if sizes != [class_size(mu) for mu in partitions_of(n)]:
        raise ValueError("class sizes mismatch")
    rows_raw = data["rows"]
    rows: dict[Partition, tuple[int, ...]] = {}
    for lit in expected:
        row = rows_raw[lit]
        if len(row) != len(expected):
            raise ValueError(f"row {lit} has wrong length")
        rows[parse_partition(lit)] = tuple(int(v) for v in row)
    return CharacterTable(n, rows)


def _write_cache(table: CharacterTable, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = json.dumps(table_to_json_dict(table), separators=(",", ":"))
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(payload)
        os.replace(tmp, path)  # atomic on POSIX
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


_MEMORY_TABLES: dict[tuple[int, str], CharacterTable] = {}


def character_table(
    n: int,
    cache_dir: str | os.PathLike | None = None,
    workers: int | None = None,
    persist: bool = True,
    cap: int = TABLE_CAP,
) -> CharacterTable:
    """The full table for S_n, from cache when a valid entry exists, else computed.

    Row construction is pure and distributes across worker processes when
    workers > 1.  A corrupt cache entry is recomputed with a warning.
    """
    if n > cap:
        raise SizeLimitError(f"character tables capped at n <= {cap}, got {n}")
    if n < 0:
        raise DomainError("n must be nonnegative")
    resolved = cache_dir_path(cache_dir)
    mem_key = (n, str(resolved))
    cached = _MEMORY_TABLES.get(mem_key)
    if cached is not None:
        return cached

    path = cache_file(n, cache_dir)
    if path.exists():
        try:
            with open(path) as fh:
                table = _table_from_json_dict(json.load(fh), n)
            _MEMORY_TABLES[mem_key] = table
            return table
        except (ValueError, KeyError, json.JSONDecodeError, OSError) as e:
            log.warning("corrupt character table cache %s (%s); recomputing", path, e)

    table = CharacterTable(n, _compute_rows(n, workers))
    if persist:
        _write_cache(table, path)
    _MEMORY_TABLES[mem_key] = table
    return table
