"""Regularization, doubling, 4-bar-cores and spin blocks."""

from collections import Counter
from dataclasses import dataclass

from .abacus import content_of_core_and_weight, staircase_height, two_core
from .errors import NotTwoRegular
from .partitions import Partition, ladder_of, slope_of


def _require_regular(lam):
    lam = Partition(lam)
    if not lam.is_two_regular():
        raise NotTwoRegular(f"{lam} is not 2-regular")
    return lam


def _trim(counts):
    counts = list(counts)
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


def ladder_counts(lam):
    """Number of nodes on ladder l = r + c - 2, for l = 0, 1, ..."""
    c = Counter(ladder_of(n) for n in Partition(lam).nodes())
    return _trim(c[l] for l in range(max(c, default=-1) + 1))


def slope_counts(lam):
    """Number of nodes on slope l = 2r + floor(c/2) - 2, for l = 0, 1, ..."""
    lam = _require_regular(lam)
    c = Counter(slope_of(n) for n in lam.nodes())
    return _trim(c[l] for l in range(max(c, default=-1) + 1))


def regularize(lam):
    """Move every node as far up its ladder as it will go."""
    rows = Counter()
    for l, k in enumerate(ladder_counts(lam)):
        for r in range(1, k + 1):
            rows[r] += 1
    return Partition(rows[r] for r in range(1, len(rows) + 1))


def double(lam):
    """Split each part p into (ceil(p/2), floor(p/2))."""
    lam = _require_regular(lam)
    parts = []
    for p in lam:
        parts.extend(((p + 1) // 2, p // 2))
    return Partition(parts)


def dblreg(lam):
    return regularize(double(lam))


def _reduce_once(parts):
    """One round of the three reductions, or None if parts is already a bar core."""
    evens = [p for p in parts if p % 2 == 0]
    if evens:
        return [p for p in parts if p % 2]
    for x in range(len(parts)):
        for y in range(x + 1, len(parts)):
            if (parts[x] + parts[y]) % 4 == 0:
                return parts[:x] + parts[x + 1:y] + parts[y + 1:]
    for x, p in enumerate(parts):
        if p >= 5 and p - 4 not in parts:
            return sorted(parts[:x] + [p - 4] + parts[x + 1:], reverse=True)
    return None


def four_bar_core(lam):
    """Fixed point of: drop even parts, drop pairs summing to 0 mod 4, lower odd parts by 4."""
    parts = list(_require_regular(lam))
    while True:
        nxt = _reduce_once(parts)
        if nxt is None:
            return Partition(parts)
        parts = nxt


def four_bar_weight(lam):
    lam = Partition(lam)
    return (lam.size - four_bar_core(lam).size) // 2


def bar_core_shape(tau):
    """Return (l, i) with tau = (4l - 4 + i, ..., i) for i in {1, 3}; (0, None) for the empty core."""
    tau = Partition(tau)
    if not tau:
        return 0, None
    i = tau[-1]
    l = len(tau)
    if i not in (1, 3) or tau != Partition(range(4 * l - 4 + i, 0, -4)):
        raise ValueError(f"{tau} is not a 4-bar-core")
    return l, i


def bar_core_for_staircase(core):
    """The 4-bar-core tau whose double is the staircase core."""
    # both shapes double to a staircase whose height c has 2c - 1 as top bar part
    c = staircase_height(core)
    return Partition(range(2 * c - 1, 0, -4))


@dataclass(frozen=True)
class BlockId:
    """A 2-block, given by its 2-core (a staircase) and weight."""

    core: Partition
    weight: int

    def __post_init__(self):
        object.__setattr__(self, "core", Partition(self.core))
        staircase_height(self.core)
        if self.weight < 0:
            raise ValueError("weight must be nonnegative")

    @property
    def height(self):
        return len(self.core)

    @property
    def size(self):
        return self.core.size + 2 * self.weight

    def content(self):
        return content_of_core_and_weight(self.core, self.weight)


def spin_block(lam):
    """Block of the spin character labelled lam: the 2-core and weight of double(lam)."""
    d = double(lam)
    core = two_core(d)
    return BlockId(core, (d.size - core.size) // 2)


def is_s_partition(lam):
    """Every odd ladder of lam holds an even number of nodes."""
    lam = _require_regular(lam)
    return all(k % 2 == 0 for l, k in enumerate(ladder_counts(lam)) if l % 2)


def is_rouquier(block):
    return block.weight <= block.height + 1
