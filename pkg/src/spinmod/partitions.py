"""Partitions, Young diagram nodes, residues, ladders and slopes (p = 2)."""

import re
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import (BoundExceeded, MalformedText, NonIntegralScale,
                     NotTwoRegular, NotWeaklyDecreasing, SizeMismatch)

MAX_ENUMERATION_SIZE = 60


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so two partitions are equal
    exactly when their stored parts agree.  Being a tuple, a Partition is
    hashable, compares lexicographically and can be indexed as usual.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise NotWeaklyDecreasing(f"parts {tuple(parts)} are not weakly decreasing")
        if parts and parts[-1] < 0:
            raise NotWeaklyDecreasing(f"negative part in {tuple(parts)}")
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def part(self, r):
        """The r-th part (1-based), zero beyond the length."""
        return self[r - 1] if r <= len(self) else 0

    def conjugate(self):
        return conjugate(self)

    def is_two_regular(self):
        return all(a > b for a, b in zip(self, self[1:]))

    def nodes(self):
        return [Node(r, c) for r, p in enumerate(self, 1) for c in range(1, p + 1)]

    def __str__(self):
        return format_partition(self)

    def __repr__(self):
        return f"Partition({format_partition(self)})"


EMPTY = Partition()


class Node(NamedTuple):
    row: int
    col: int


class NodeData(NamedTuple):
    residue: int
    spin_residue: int
    ladder: int
    slope: int


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse(text):
    """Parse text such as "4^2,3,1^3" into a Partition.

    "0", "-", "()" and the empty string all denote the empty partition.
    Surrounding parentheses and whitespace are ignored.
    """
    if isinstance(text, Partition):
        return text
    s = str(text).strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1].strip()
    if s in ("", "0", "-"):
        return EMPTY
    parts = []
    for token in s.split(","):
        m = _TOKEN.match(token.strip())
        if not m:
            raise MalformedText(f"cannot parse {token.strip()!r} in {text!r}")
        value, mult = int(m.group(1)), int(m.group(2) or 1)
        parts.extend([value] * mult)
    return Partition(parts)


def format_partition(lam):
    """Canonical text: comma-separated parts, "()" for the empty partition."""
    return ",".join(map(str, lam)) if lam else "()"


def conjugate(lam):
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p >= c) for c in range(1, lam[0] + 1))


def dominates(lam, mu):
    """True iff lam dominates mu (both partitions of the same n)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    a = b = 0
    for r in range(max(len(lam), len(mu))):
        a += lam.part(r + 1)
        b += mu.part(r + 1)
        if a < b:
            return False
    return True


def scale(a, lam):
    """The partition (a*lam_1, a*lam_2, ...); a may be a Fraction."""
    a = Fraction(a)
    parts = []
    for p in lam:
        q = a * p
        if q.denominator != 1:
            raise NonIntegralScale(f"{a} * {p} is not an integer")
        parts.append(int(q))
    return Partition(parts)


def add(lam, mu):
    """Partwise sum lam + mu."""
    n = max(len(lam), len(mu))
    lam, mu = Partition(lam), Partition(mu)
    return Partition(lam.part(r) + mu.part(r) for r in range(1, n + 1))


def union(lam, mu):
    """Multiset union of parts, re-sorted."""
    return Partition(sorted(tuple(lam) + tuple(mu), reverse=True))


def combine(kind, lam, mu=None, factor=None):
    """Dispatch to scale, add or union by name.

    Written expressions bind scale tightest, then sum, then union, so
    lam + 4mu ⊔ nu means union(add(lam, scale(4, mu)), nu).
    """
    if kind == "scale":
        return scale(factor, lam)
    if kind == "sum":
        return add(lam, mu)
    if kind == "union":
        return union(lam, mu)
    raise ValueError(f"unknown combination {kind!r}")


def node_data(node):
    r, c = node
    return NodeData((c - r) % 2, (c // 2) % 2, r + c - 2, 2 * r + c // 2 - 2)


def residue(node):
    return (node[1] - node[0]) % 2


def spin_residue(node):
    return (node[1] // 2) % 2


def boundary_nodes(lam, which, residue_filter=None, spin_filter=None):
    """Removable or addable nodes of lam, listed top to bottom.

    residue_filter keeps nodes of that residue, spin_filter nodes of that
    spin residue.
    """
    lam = Partition(lam)
    nodes = []
    if which == "removable":
        for r, p in enumerate(lam, 1):
            if p > lam.part(r + 1):
                nodes.append(Node(r, p))
    elif which == "addable":
        for r in range(1, len(lam) + 2):
            if r == 1 or lam.part(r - 1) > lam.part(r):
                nodes.append(Node(r, lam.part(r) + 1))
    else:
        raise ValueError(f"which must be 'removable' or 'addable', got {which!r}")
    if residue_filter is not None:
        nodes = [n for n in nodes if residue(n) == residue_filter]
    if spin_filter is not None:
        nodes = [n for n in nodes if spin_residue(n) == spin_filter]
    return nodes


def removable_nodes(lam, residue_filter=None):
    return boundary_nodes(lam, "removable", residue_filter)


def addable_nodes(lam, residue_filter=None):
    return boundary_nodes(lam, "addable", residue_filter)


def remove_node(lam, node):
    parts = list(lam)
    parts[node.row - 1] -= 1
    return Partition(parts)


def add_node(lam, node):
    parts = list(lam)
    if node.row > len(parts):
        parts.append(0)
    parts[node.row - 1] += 1
    return Partition(parts)


def spin_removable_steps(lam, i):
    """Removable nodes of spin residue i whose removal keeps lam 2-regular."""
    out = []
    for node in boundary_nodes(lam, "removable", spin_filter=i):
        if remove_node(lam, node).is_two_regular():
            out.append(node)
    return out


def spin_addable_steps(lam, i):
    """Addable nodes of spin residue i whose addition keeps lam 2-regular."""
    out = []
    for node in boundary_nodes(lam, "addable", spin_filter=i):
        if add_node(lam, node).is_two_regular():
            out.append(node)
    return out


def spin_strip(lam, i):
    """Return (lam down i, removed nodes).

    lam down i is the smallest 2-regular partition reachable from lam by
    deleting nodes of spin residue i.  A removal never blocks another one,
    so deleting eligible nodes until none is left reaches it.
    """
    lam = Partition(lam)
    if not lam.is_two_regular():
        raise NotTwoRegular(f"{lam} is not 2-regular")
    cur = lam
    steps = spin_removable_steps(cur, i)
    while steps:
        cur = remove_node(cur, steps[0])
        steps = spin_removable_steps(cur, i)
    removed = [Node(r, c) for r, p in enumerate(lam, 1)
               for c in range(cur.part(r) + 1, p + 1)]
    return cur, removed


def ev(lam):
    """Number of positive even parts."""
    return sum(1 for p in lam if p % 2 == 0)


def sign_class(lam):
    """'D+' or 'D-' for 2-regular lam, None otherwise."""
    lam = Partition(lam)
    if not lam.is_two_regular():
        return None
    return "D+" if ev(lam) % 2 == 0 else "D-"


@lru_cache(maxsize=None)
def _partitions(n, largest, distinct):
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(n, largest), 0, -1):
        nxt = first - 1 if distinct else first
        for rest in _partitions(n - first, nxt, distinct):
            out.append(Partition((first,) + rest))
    return tuple(out)


def enumerate_partitions(n, two_regular=False, bound=MAX_ENUMERATION_SIZE):
    """All partitions of n (or only the 2-regular ones), descending lexicographic."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the enumeration bound {bound}")
    return list(_partitions(n, n, bool(two_regular)))


def ladder_of(node):
    return node[0] + node[1] - 2


def slope_of(node):
    return 2 * node[0] + node[1] // 2 - 2
