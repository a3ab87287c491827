"""Partitions, multipartitions, nodes, residues and ladders.

A partition is a tuple of positive integers in weakly decreasing order (no
trailing zeros); a multipartition is a tuple of partitions.  Nodes use
1-based ``(row, col, comp)`` coordinates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]


class Node(NamedTuple):
    row: int
    col: int
    comp: int

    def order_key(self) -> tuple[int, int]:
        # smaller key = higher in the (untwisted) node order
        return (self.comp, self.row)


class Ladder(NamedTuple):
    index: int
    size: int
    residue: int


@dataclass(frozen=True)
class Charge:
    """A residue tuple in (Z/eZ)^r."""

    residues: tuple[int, ...]
    e: int

    def __init__(self, residues: Sequence[int], e: int):
        if e < 2:
            raise ValueError(f"modulus must be at least 2, got {e}")
        if not residues:
            raise ValueError("charge must have at least one component")
        object.__setattr__(self, "residues", tuple(int(x) % e for x in residues))
        object.__setattr__(self, "e", int(e))

    @property
    def r(self) -> int:
        return len(self.residues)

    def __getitem__(self, k: int) -> int:
        """Residue of component ``k`` (1-based)."""
        return self.residues[k - 1]

    def truncate(self) -> Charge:
        if self.r == 1:
            raise ValueError("cannot truncate a level-one charge")
        return Charge(self.residues[1:], self.e)

    def first(self) -> Charge:
        return Charge(self.residues[:1], self.e)


# -- construction and validation -------------------------------------------


def partition(parts: Sequence[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts):
        raise ValueError(f"negative or interior zero part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    return parts


def multipartition(components: Sequence[Sequence[int]]) -> Multipartition:
    if len(components) < 1:
        raise ValueError("a multipartition needs at least one component")
    return tuple(partition(c) for c in components)


def size(la: Multipartition | Partition) -> int:
    if la and isinstance(la[0], tuple):
        return sum(sum(c) for c in la)
    return sum(la)


def empty(r: int) -> Multipartition:
    return ((),) * r


# -- enumeration ------------------------------------------------------------


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n``, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def multipartitions(n: int, r: int) -> tuple[Multipartition, ...]:
    """All r-multipartitions of total size ``n``."""
    if r == 1:
        return tuple((p,) for p in partitions(n))
    out = []
    for a in range(n, -1, -1):
        for p in partitions(a):
            for rest in multipartitions(n - a, r - 1):
                out.append((p,) + rest)
    return tuple(out)


def multipartitions_up_to(n: int, r: int) -> Iterator[Multipartition]:
    for m in range(n + 1):
        yield from multipartitions(m, r)


# -- orders -----------------------------------------------------------------


def dominates(la: Multipartition, mu: Multipartition) -> bool:
    """``la`` dominates ``mu`` (non-strict)."""
    if len(la) != len(mu):
        raise ValueError("multipartitions have different numbers of components")
    offset_la = offset_mu = 0
    for a, b in zip(la, mu):
        sa, sb = offset_la, offset_mu
        for j in range(max(len(a), len(b))):
            sa += a[j] if j < len(a) else 0
            sb += b[j] if j < len(b) else 0
            if sa < sb:
                return False
        offset_la, offset_mu = sa, sb
    return True


def partition_dominates(a: Partition, b: Partition) -> bool:
    return dominates((a,), (b,))


def refine_order_gte(mu: Multipartition, nu: Multipartition) -> bool:
    """The order used by the recursion: bigger first component, or first components dominating."""
    if len(mu) != len(nu):
        raise ValueError("multipartitions have different numbers of components")
    m1, n1 = mu[0], nu[0]
    return sum(m1) > sum(n1) or partition_dominates(m1, n1)


def refine_order_gt(mu: Multipartition, nu: Multipartition) -> bool:
    return refine_order_gte(mu, nu) and not refine_order_gte(nu, mu)


def sort_key(la: Multipartition) -> tuple:
    """Key whose descending order is a linear extension of dominance."""
    return tuple(x for c in la for x in (sum(c),) + c + (0,))


def sorted_labels(labels) -> list[Multipartition]:
    """Sort by size, then dominance-compatibly (most dominant first)."""
    return sorted(labels, key=lambda la: (size(la), tuple(-x for x in sort_key(la))))


# -- regularity -------------------------------------------------------------


def is_regular(la: Partition, e: int) -> bool:
    if e < 2:
        raise ValueError("modulus must be at least 2")
    return all(la[i] != la[i + e - 1] for i in range(len(la) - e + 1))


def is_multiregular(mu: Multipartition, e: int) -> bool:
    return all(is_regular(c, e) for c in mu)


# -- nodes and residues -----------------------------------------------------


def residue(node: Node, s: Charge) -> int:
    return (node.col - node.row + s[node.comp]) % s.e


def nodes(la: Multipartition) -> Iterator[Node]:
    for k, comp in enumerate(la, 1):
        for i, part in enumerate(comp, 1):
            for j in range(1, part + 1):
                yield Node(i, j, k)


def all_addable(la: Multipartition) -> list[Node]:
    out = []
    for k, comp in enumerate(la, 1):
        prev = None
        for i, part in enumerate(comp, 1):
            if prev is None or part < prev:
                out.append(Node(i, part + 1, k))
            prev = part
        out.append(Node(len(comp) + 1, 1, k))
    return out


def all_removable(la: Multipartition) -> list[Node]:
    out = []
    for k, comp in enumerate(la, 1):
        for i, part in enumerate(comp, 1):
            if i == len(comp) or comp[i] < part:
                out.append(Node(i, part, k))
    return out


def addable_nodes(la: Multipartition, i: int, s: Charge) -> list[Node]:
    """Addable ``i``-nodes, highest first."""
    _check_rank(la, s)
    return sorted((n for n in all_addable(la) if residue(n, s) == i % s.e), key=Node.order_key)


def removable_nodes(la: Multipartition, i: int, s: Charge) -> list[Node]:
    """Removable ``i``-nodes, highest first."""
    _check_rank(la, s)
    return sorted((n for n in all_removable(la) if residue(n, s) == i % s.e), key=Node.order_key)


def _check_rank(la: Multipartition, s: Charge) -> None:
    if len(la) != s.r:
        raise ValueError(f"multipartition has {len(la)} components but charge has {s.r}")


def add_node(la: Multipartition, n: Node) -> Multipartition:
    if n not in all_addable(la):
        raise ValueError(f"{n} is not addable for {la}")
    comp = list(la[n.comp - 1])
    if n.row > len(comp):
        comp.append(1)
    else:
        comp[n.row - 1] += 1
    return la[: n.comp - 1] + (tuple(comp),) + la[n.comp:]


def remove_node(la: Multipartition, n: Node) -> Multipartition:
    if n not in all_removable(la):
        raise ValueError(f"{n} is not removable for {la}")
    comp = list(la[n.comp - 1])
    comp[n.row - 1] -= 1
    if comp[-1] == 0:
        comp.pop()
    return la[: n.comp - 1] + (tuple(comp),) + la[n.comp:]


def residue_content(la: Multipartition, s: Charge) -> tuple[int, ...]:
    """Number of nodes of each residue 0..e-1."""
    counts = [0] * s.e
    for k, comp in enumerate(la, 1):
        sk = s[k]
        for i, part in enumerate(comp, 1):
            for j in range(1, part + 1):
                counts[(j - i + sk) % s.e] += 1
    return tuple(counts)


# -- ladders ----------------------------------------------------------------


def ladder_decomposition(la: Partition, e: int, s1: int) -> list[Ladder]:
    """Non-empty ladders of ``la`` in increasing index, with their sizes and residues."""
    sizes: dict[int, int] = {}
    for i, part in enumerate(la, 1):
        for j in range(1, part + 1):
            l = i + (e - 1) * (j - 1)
            sizes[l] = sizes.get(l, 0) + 1
    return [Ladder(l, a, (s1 + 1 - l) % e) for l, a in sorted(sizes.items())]


# -- truncation and extension ----------------------------------------------


def truncate(mu: Multipartition) -> Multipartition:
    if len(mu) <= 1:
        raise ValueError("cannot truncate a multipartition with one component")
    return mu[1:]


def extend(nu: Multipartition) -> Multipartition:
    return ((),) + tuple(nu)


def zero_first(mu: Multipartition) -> Multipartition:
    return ((),) + tuple(mu[1:])


# -- text syntax ------------------------------------------------------------

_PART_RE = re.compile(r"^\d+(,\d+)*$")


def parse_multipartition(text: str) -> Multipartition:
    """Parse ``"2,1|-|1"`` into ``((2, 1), (), (1,))``."""
    text = re.sub(r"\s+", "", text)
    comps = []
    for chunk in text.split("|"):
        if chunk in ("-", "0"):
            comps.append(())
            continue
        if not _PART_RE.match(chunk):
            raise ValueError(f"malformed partition {chunk!r} in {text!r}")
        parts = tuple(int(x) for x in chunk.split(","))
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts not weakly decreasing in {chunk!r}")
        comps.append(partition(parts))
    return tuple(comps)


def format_multipartition(la: Multipartition) -> str:
    return "|".join(",".join(map(str, c)) if c else "-" for c in la)


def pretty(la: Multipartition) -> str:
    """Compact notation used in reports, e.g. ``((2,1),(1^2))``."""

    def comp(p: Partition) -> str:
        if not p:
            return "-"
        out, i = [], 0
        while i < len(p):
            j = i
            while j < len(p) and p[j] == p[i]:
                j += 1
            out.append(str(p[i]) if j - i == 1 else f"{p[i]}^{j - i}")
            i = j
        return "(" + ",".join(out) + ")"

    return "(" + ",".join(comp(c) for c in la) + ")"

