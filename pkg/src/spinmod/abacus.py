"""Two-runner abacus: 2-cores, 2-weights, 2-quotients, 2-signs and 2-contents."""

from dataclasses import dataclass
from typing import NamedTuple

from .errors import NotAStaircase
from .partitions import Partition, residue


@dataclass(frozen=True)
class AbacusDisplay:
    """Bead positions lam_r - r for r = 1..depth; every position below -depth is beaded."""

    beads: tuple
    depth: int

    def runner(self, a):
        """Bead positions on runner a, highest first."""
        return tuple(p for p in self.beads if p % 2 == a)

    def lowest_on_runner(self, a):
        """Lowest explicit position on runner a."""
        return -self.depth if (-self.depth) % 2 == a else -self.depth + 1

    def to_partition(self):
        return Partition(p + r for r, p in enumerate(self.beads, 1))


class Content(NamedTuple):
    zeros: int
    ones: int


def display(lam, depth=None):
    lam = Partition(lam)
    n = max(len(lam), 1) if depth is None else depth
    if n < len(lam):
        raise ValueError("depth must be at least the length of the partition")
    return AbacusDisplay(tuple(lam.part(r) - r for r in range(1, n + 1)), n)


def _runner_gaps(disp, a):
    """Empty positions on runner a strictly below each bead, highest bead first."""
    low = disp.lowest_on_runner(a)
    beads = disp.runner(a)
    k = len(beads)
    return [(b - low) // 2 - (k - 1 - j) for j, b in enumerate(beads)]


def two_quotient(lam, depth=None):
    disp = display(lam, depth)
    return Partition(_runner_gaps(disp, 0)), Partition(_runner_gaps(disp, 1))


def two_core(lam, depth=None):
    disp = display(lam, depth)
    beads = []
    for a in (0, 1):
        low = disp.lowest_on_runner(a)
        beads.extend(low + 2 * j for j in range(len(disp.runner(a))))
    beads.sort(reverse=True)
    return AbacusDisplay(tuple(beads), disp.depth).to_partition()


def two_weight(lam):
    lam = Partition(lam)
    return (lam.size - two_core(lam).size) // 2


def staircase(c):
    return Partition(range(c, 0, -1))


def staircase_height(core):
    """c for core = (c, c-1, ..., 1); raises NotAStaircase otherwise."""
    core = Partition(core)
    if core != staircase(len(core)):
        raise NotAStaircase(f"{core} is not of the form (c,...,1)")
    return len(core)


def from_core_and_quotient(core, q0, q1):
    """The partition with the given 2-core and 2-quotient."""
    c = staircase_height(core)
    q = (Partition(q0), Partition(q1))
    depth = c + 2 * max(len(q[0]), len(q[1])) + 2
    disp = display(core, depth)
    beads = []
    for a in (0, 1):
        on_runner = disp.runner(a)
        for j, b in enumerate(on_runner):
            beads.append(b + 2 * q[a].part(j + 1))
    beads.sort(reverse=True)
    return AbacusDisplay(tuple(beads), depth).to_partition()


def two_sign(lam):
    """(-1) to the number of vertical dominoes removed on the way to the 2-core.

    Sliding a bead from p to p-2 removes a domino, which is vertical exactly
    when p-1 is occupied.
    """
    disp = display(lam)
    low = -disp.depth
    occupied = set(disp.beads)

    def filled(p):
        return p < low or p in occupied

    sign = 1
    moved = True
    while moved:
        moved = False
        for p in sorted(occupied, reverse=True):
            if not filled(p - 2):
                if filled(p - 1):
                    sign = -sign
                occupied.remove(p)
                occupied.add(p - 2)
                moved = True
                break
    return sign


def two_content(lam):
    zeros = sum(1 for node in Partition(lam).nodes() if residue(node) == 0)
    return Content(zeros, Partition(lam).size - zeros)


def content_of_core_and_weight(core, weight):
    """2-content of any partition with this core and weight."""
    z, o = two_content(core)
    return Content(z + weight, o + weight)



def rim_dominoes(lam):
    """Dominoes that can be removed from the rim of lam, as (new partition, vertical)."""
    lam = Partition(lam)
    out = []
    for r, p in enumerate(lam, 1):
        # horizontal: two end nodes of row r
        if p >= 2 and p - 2 >= lam.part(r + 1):
            out.append((Partition(lam[:r - 1] + (p - 2,) + lam[r:]), False))
        # vertical: end nodes of rows r and r+1 in the same column
        if lam.part(r + 1) == p and p > lam.part(r + 2):
            parts = list(lam)
            parts[r - 1] -= 1
            parts[r] -= 1
            out.append((Partition(parts), True))
    return out


def random_domino_sign(lam, rng):
    """2-sign computed on the Young diagram, removing dominoes in a random order."""
    lam = Partition(lam)
    sign = 1
    moves = rim_dominoes(lam)
    while moves:
        lam, vertical = rng.choice(moves)
        if vertical:
            sign = -sign
        moves = rim_dominoes(lam)
    return sign
