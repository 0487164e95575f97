"""Signature combinatorics on Young diagram rims.

For a residue i, the i-addable and i-removable nodes are read along the rim
from bottom left to top right (equivalently, by increasing diagonal col - row)
as a string of +'s and -'s.  Erasing adjacent "-+" pairs to a fixed point
leaves the reduced signature; its surviving -'s mark the normal nodes, the
first of which is the good node.  The same machinery serves characteristic
zero (residues over the integers) and p >= 2 (residues mod p).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, check_characteristic
from .partitions import (
    Node,
    Partition,
    addable_nodes,
    conjugate,
    diagonal,
    is_p_regular,
    level,
    removable_nodes,
    remove_node,
    residue,
)


@dataclass(frozen=True)
class SignatureString:
    """Annotated +/- string: each entry is (sign, node), in rim order."""

    entries: tuple[tuple[str, Node], ...]

    def signs(self) -> str:
        return "".join(sign for sign, _ in self.entries)

    def __str__(self) -> str:
        return " ".join(f"{sign}({r},{c})" for sign, (r, c) in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def i_signature(lam: Partition, i: int, p: int) -> SignatureString:
    """Signs of all i-addable (+) and i-removable (-) nodes in rim order."""
    check_characteristic(p)
    if p > 0 and not 0 <= i < p:
        raise DomainError(f"residue must lie in 0..{p - 1} for p = {p}, got {i}")
    entries = [("-", node) for node in removable_nodes(lam) if residue(node, p) == i]
    entries += [("+", node) for node in addable_nodes(lam) if residue(node, p) == i]
    entries.sort(key=lambda e: diagonal(e[1]))  # rim order, bottom left to top right
    return SignatureString(tuple(entries))


def reduced_signature(sig: SignatureString) -> SignatureString:
    """Fixed point of erasing adjacent "-+" pairs (order-independent)."""
    stack: list[tuple[str, Node]] = []
    for entry in sig.entries:
        if entry[0] == "+" and stack and stack[-1][0] == "-":
            stack.pop()
        else:
            stack.append(entry)
    return SignatureString(tuple(stack))


def normal_nodes(lam: Partition, i: int, p: int) -> list[Node]:
    """Nodes of the surviving -'s in the reduced i-signature, in rim order."""
    return [node for sign, node in reduced_signature(i_signature(lam, i, p)).entries if sign == "-"]


def epsilon(lam: Partition, i: int, p: int) -> int:
    """Number of i-normal nodes."""
    return len(normal_nodes(lam, i, p))


def good_node(lam: Partition, i: int, p: int) -> Node | None:
    """The first i-normal node in rim order (bottom-left-most), if any.

    This reading makes good-node removal preserve p-regularity; the opposite
    convention already fails on (2,1) at p = 2.
    """
    nodes = normal_nodes(lam, i, p)
    return nodes[0] if nodes else None


def e_tilde(lam: Partition, i: int, p: int, k: int = 1) -> Partition | None:
    """Remove the i-good node k times; None once fewer than k normal nodes remain."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    current = lam
    for _ in range(k):
        node = good_node(current, i, p)
        if node is None:
            return None
        current = remove_node(current, node)
    return current


def _candidate_residues(lam: Partition, p: int) -> list[int]:
    if p > 0:
        return list(range(p))
    # p = 0: residues live in Z; only diagonals of removable nodes can be normal.
    return sorted({diagonal(node) for node in removable_nodes(lam)})


def total_normal_nodes(lam: Partition, p: int) -> int:
    check_characteristic(p)
    return sum(epsilon(lam, i, p) for i in _candidate_residues(lam, p))


def is_jantzen_seitz(lam: Partition, p: int) -> bool:
    """True iff lam has exactly one normal node over all residues.

    These are exactly the p-regular partitions whose restriction to S_{n-1}
    stays irreducible.
    """
    check_characteristic(p)
    if not is_p_regular(lam, p):
        raise DomainError(f"{lam.literal()} is not {p}-regular")
    return total_normal_nodes(lam, p) == 1


def rank_formula(lam: Partition, p: int) -> int:
    """Closed-form rank of the irreducible module labelled by a p-regular lam:
    min(level, floor(n/2)) away from characteristic 2, min(level, floor(n/3)) at p = 2."""
    check_characteristic(p)
    if not is_p_regular(lam, p):
        raise DomainError(f"{lam.literal()} is not {p}-regular")
    if p == 2:
        return min(level(lam), lam.n // 3)
    return min(level(lam), lam.n // 2)


def specht_rank_formula(lam: Partition, kind: str) -> int:
    """Closed-form Specht module ranks: 'rank2' -> min(l, floor(n/2)),
    'rank3' -> min(l, l', floor(n/3)) with l' the level of the conjugate."""
    if kind == "rank2":
        return min(level(lam), lam.n // 2)
    if kind == "rank3":
        return min(level(lam), level(conjugate(lam)), lam.n // 3)
    raise DomainError(f"kind must be 'rank2' or 'rank3', got {kind!r}")
