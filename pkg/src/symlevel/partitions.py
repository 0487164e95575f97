"""Partitions, Young diagrams, nodes and residues.

A partition is a weakly decreasing tuple of positive integers; the empty
partition is a first-class value (it indexes the trivial module of the trivial
group S_0).  Nodes are 1-indexed (row, col) pairs.  All values here are
immutable and hashable, so they can be shared freely across workers.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError, SizeLimitError, check_characteristic

Node = tuple[int, int]

#: Largest n for which enumerate_partitions will run (p(60) = 966467).
ENUMERATION_CAP = 60


class Partition:
    """An integer partition, stored as a weakly decreasing tuple of parts."""

    __slots__ = ("parts", "n")

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        for i, x in enumerate(parts):
            if x < 1:
                raise DomainError(f"partition parts must be positive, got {parts}")
            if i and parts[i - 1] < x:
                raise DomainError(f"partition parts must be weakly decreasing, got {parts}")
        self.parts = parts
        self.n = sum(parts)

    # -- container protocol -------------------------------------------------

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def part(self, row: int) -> int:
        """The row-th part (1-indexed), reading 0 beyond the last row."""
        return self.parts[row - 1] if 1 <= row <= len(self.parts) else 0

    # -- equality / ordering -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        # Plain lexicographic order on parts; the canonical enumeration order
        # used for table indexing is the reverse of this (see partitions_of).
        return self.parts < other.parts

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def literal(self) -> str:
        """Textual literal, e.g. "[5,2,1]"; the empty partition is "[]"."""
        return "[" + ",".join(str(x) for x in self.parts) + "]"


def parse_partition(text: str) -> Partition:
    """Parse "[5,2,1]" (JSON array) or bare "5,2,1"; "" and "[]" are empty."""
    s = text.strip()
    if s in ("", "[]"):
        return Partition()
    if s.startswith("["):
        try:
            data = json.loads(s)
        except json.JSONDecodeError as e:
            raise DomainError(f"bad partition literal {text!r}: {e}") from None
        if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
            raise DomainError(f"bad partition literal {text!r}: expected a JSON array of integers")
        return Partition(data)
    try:
        return Partition(int(tok) for tok in s.split(","))
    except ValueError:
        raise DomainError(f"bad partition literal {text!r}") from None


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order, (n) first.

    This is the canonical total order used to index character tables and
    cache files, so it must never change.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n == 0:
        return (Partition(),)
    out = []
    parts = [n]
    while True:
        out.append(Partition(parts))
        # Find the rightmost part > 1, decrement it and redistribute the rest.
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            break
        rest = len(parts) - i - 1 + 1  # the 1-tail plus the unit removed
        parts = parts[:i] + [parts[i] - 1]
        cap = parts[-1]
        while rest > 0:
            take = min(cap, rest)
            parts.append(take)
            rest -= take
    return tuple(out)


def enumerate_partitions(n: int, cap: int = ENUMERATION_CAP) -> tuple[Partition, ...]:
    """All partitions of n, reverse-lexicographic; refuses n beyond the cap."""
    if n > cap:
        raise SizeLimitError(f"partition enumeration capped at n <= {cap}, got {n}")
    return partitions_of(n)


def is_p_regular(lam: Partition, p: int) -> bool:
    """True iff no part value repeats p or more times; every partition is 0-regular."""
    check_characteristic(p)
    if p == 0:
        return True
    run = 0
    prev = None
    for x in lam.parts:
        run = run + 1 if x == prev else 1
        prev = x
        if run >= p:
            return False
    return True


def level(lam: Partition) -> int:
    """n minus the first part; 0 for the empty partition."""
    return lam.n - lam.part(1)


def bar(lam: Partition) -> Partition:
    """Drop the first part; the result is a partition of level(lam)."""
    return Partition(lam.parts[1:])


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam.parts:
        return Partition()
    cols = [0] * lam.parts[0]
    for x in lam.parts:
        for j in range(x):
            cols[j] += 1
    return Partition(cols)


def sum_partitions(lam: Partition, mu: Partition) -> Partition:
    """Componentwise sum; missing parts read 0."""
    h = max(len(lam), len(mu))
    return Partition(lam.part(i) + mu.part(i) for i in range(1, h + 1))


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order: every partial sum of lam is >= the one of mu."""
    if lam.n != mu.n:
        raise DomainError(f"dominance needs equal sizes, got {lam.n} and {mu.n}")
    acc_l = acc_m = 0
    for i in range(1, max(len(lam), len(mu)) + 1):
        acc_l += lam.part(i)
        acc_m += mu.part(i)
        if acc_l < acc_m:
            return False
    return True


def contains(outer: Partition, inner: Partition) -> bool:
    """True iff the diagram of inner sits inside the diagram of outer."""
    return all(outer.part(i) >= inner.part(i) for i in range(1, len(inner) + 1))


def node_in(lam: Partition, node: Node) -> bool:
    row, col = node
    return 1 <= row and 1 <= col <= lam.part(row)


def residue(node: Node, p: int) -> int:
    """col - row, reduced into {0,...,p-1} for p > 0, left as a plain integer for p = 0."""
    check_characteristic(p)
    row, col = node
    d = col - row
    return d % p if p > 0 else d


def diagonal(node: Node) -> int:
    row, col = node
    return col - row


def removable_nodes(lam: Partition) -> list[Node]:
    """Nodes whose removal leaves a Young diagram, in rim order.

    Rim order is bottom-left to top-right, i.e. increasing diagonal col - row.
    """
    h = len(lam.parts)
    out = []
    for row in range(h, 0, -1):
        if lam.part(row) > lam.part(row + 1):
            out.append((row, lam.part(row)))
    return out


def addable_nodes(lam: Partition) -> list[Node]:
    """Nodes whose addition gives a Young diagram, in rim order (see removable_nodes)."""
    h = len(lam.parts)
    out = [(h + 1, 1)]
    for row in range(h, 0, -1):
        if row == 1 or lam.part(row - 1) > lam.part(row):
            out.append((row, lam.part(row) + 1))
    return out


def remove_node(lam: Partition, node: Node) -> Partition:
    """Remove a removable node; DomainError if the result is not a diagram."""
    row, col = node
    if lam.part(row) != col or lam.part(row + 1) > col - 1:
        raise DomainError(f"node {node} is not removable from {lam.literal()}")
    parts = list(lam.parts)
    parts[row - 1] -= 1
    if parts[row - 1] == 0:
        parts.pop(row - 1)
    return Partition(parts)


def add_node(lam: Partition, node: Node) -> Partition:
    """Add an addable node; DomainError if the result is not a diagram."""
    row, col = node
    if lam.part(row) != col - 1 or (row > 1 and lam.part(row - 1) < col):
        raise DomainError(f"node {node} is not addable to {lam.literal()}")
    parts = list(lam.parts)
    if row == len(parts) + 1:
        parts.append(1)
    else:
        parts[row - 1] += 1
    return Partition(parts)
