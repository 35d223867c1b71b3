"""Which spin characters stay irreducible in characteristic 2.

spin_irreducible decides the question by matching lam against six explicit
families; it needs nothing beyond partition arithmetic and is_2carter.
The verification suites compare its answers with consequences that can be
checked independently (degrees, strips, separated partitions).
"""

import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .abacus import random_domino_sign, two_sign
from .degrees import spin_degree
from .errors import BoundExceeded, NotTwoRegular
from .partitions import EMPTY, Partition, conjugate, enumerate_partitions, spin_strip
from .regdouble import dblreg, four_bar_core

MAX_SUITE_SIZE = 40


def _v2(x):
    return (x & -x).bit_length() - 1


def is_2carter(lam):
    """For every r, 2^v2(lam_r - lam_{r+1} + 1) exceeds lam_{r+1} - lam_{r+2}."""
    lam = Partition(lam)
    for r in range(1, len(lam)):
        a, b, c = lam.part(r), lam.part(r + 1), lam.part(r + 2)
        if 2 ** _v2(a - b + 1) <= b - c:
            return False
    return True


def linear_irreducible(lam):
    """Whether the ordinary character [lam] of the symmetric group stays irreducible mod 2."""
    lam = Partition(lam)
    return is_2carter(lam) or is_2carter(conjugate(lam)) or lam == (2, 2)


class SepForm(NamedTuple):
    tau: Partition
    alpha: Partition
    b: int

    def partition(self):
        odd = [t + 4 * self.alpha.part(k) for k, t in enumerate(self.tau, 1)]
        return Partition(sorted(odd + ([2 * self.b] if self.b else []), reverse=True))


def _require_regular(lam):
    lam = Partition(lam)
    if not lam.is_two_regular():
        raise NotTwoRegular(f"{lam} is not 2-regular")
    return lam


def _staircase_shift(odd, i):
    """alpha with odd = tau + 4 alpha, tau = (4l - 4 + i, ..., i), l = len(odd)."""
    l = len(odd)
    tau = Partition(range(4 * l - 4 + i, 0, -4))
    return tau, Partition((p - t) // 4 for p, t in zip(odd, tau))


def separated(lam):
    """SepForm(tau, alpha, b) if lam is 1- or 3-separated, else None."""
    lam = _require_regular(lam)
    odd = [p for p in lam if p % 2]
    even = [p for p in lam if p % 2 == 0]
    if len(even) > 1:
        return None
    for i in (3, 1):
        if any(p % 4 != i for p in odd):
            continue
        if even and any(q not in lam for q in range(i, even[0], 4)):
            continue
        tau, alpha = _staircase_shift(odd, i)
        form = SepForm(tau, alpha, even[0] // 2 if even else 0)
        if tau != four_bar_core(lam) or form.partition() != lam:
            raise AssertionError(f"inconsistent separated form for {lam}")
        return form
    return None


CASES = ("X3", "X1", "Y3", "Y1", "Z", "STAIR321")


@dataclass(frozen=True)
class Verdict:
    irreducible: bool
    case: Optional[str] = None
    witness: Optional[SepForm] = field(default=None)

    def describe(self):
        if not self.irreducible:
            return "reducible"
        if self.case == "STAIR321":
            return "irreducible (case: (3,2,1))"
        if self.witness is None:
            return f"irreducible (case: {self.case})"
        t, a, b = self.witness
        return f"irreducible (case: {self.case}; tau={t} alpha={a} b={b})"


def spin_irreducible(lam):
    """Decide whether the 2-modular reduction of <lam> is irreducible, with the matching case.

    X3 / X1: lam = tau + 4 alpha with tau = (4l-1, ..., 3) / (4l-3, ..., 1), alpha 2-Carter.
    Y3 / Y1: lam = tau + 4 alpha ⊔ (2), same tau shapes, alpha 2-Carter; for Y1 the
    smallest part of tau + 4 alpha must be 1.
    Z: (2b) or (4b-2, 1) with b >= 2.  Finally (3,2,1).
    """
    lam = _require_regular(lam)
    odd = [p for p in lam if p % 2]
    even = [p for p in lam if p % 2 == 0]
    if len(even) <= 1 and (not even or even[0] == 2):
        tag = "X" if not even else "Y"
        for i in (3, 1):
            if any(p % 4 != i for p in odd):
                continue
            if i == 1 and not odd:
                continue
            tau, alpha = _staircase_shift(odd, i)
            if tag == "Y" and i == 1 and len(alpha) > len(tau) - 1:
                continue
            if is_2carter(alpha):
                return Verdict(True, f"{tag}{i}", SepForm(tau, alpha, len(even)))
    if len(lam) == 1 and lam[0] % 2 == 0 and lam[0] >= 4:
        return Verdict(True, "Z")
    if len(lam) == 2 and lam[1] == 1 and lam[0] % 4 == 2 and lam[0] >= 6:
        return Verdict(True, "Z")
    if lam == (3, 2, 1):
        return Verdict(True, "STAIR321")
    return Verdict(False)


@dataclass
class SuiteReport:
    name: str
    max_n: int
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def summary(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {status} ({self.checked} checks, n <= {self.max_n}, {len(self.failures)} failures)"


def _minimal_degree(n, report):
    classes = defaultdict(list)
    for lam in enumerate_partitions(n, two_regular=True):
        classes[dblreg(lam)].append(lam)
    for members in classes.values():
        degrees = {lam: spin_degree(lam) for lam in members}
        low = min(degrees.values())
        for lam in members:
            if spin_irreducible(lam).irreducible:
                report.checked += 1
                if degrees[lam] != low:
                    report.failures.append((lam, "degree not minimal in its dblreg class"))


def _strip_closure(n, report):
    for lam in enumerate_partitions(n, two_regular=True):
        if not spin_irreducible(lam).irreducible:
            continue
        for i in (0, 1):
            down = spin_strip(lam, i)[0]
            report.checked += 1
            if down != EMPTY and not spin_irreducible(down).irreducible:
                report.failures.append((lam, f"strip {i} gives reducible {down}"))


def _separated_consistency(n, report):
    for lam in enumerate_partitions(n, two_regular=True):
        form = separated(lam)
        if form is None:
            continue
        report.checked += 1
        expected = form.b <= 1 and is_2carter(form.alpha)
        if spin_irreducible(lam).irreducible != expected:
            report.failures.append((lam, "classifier disagrees with the separated criterion"))


def _domino_order(n, report, rng):
    # the abacus sign must not depend on the order dominoes come off the diagram
    for lam in enumerate_partitions(n):
        report.checked += 1
        if random_domino_sign(lam, rng) != two_sign(lam):
            report.failures.append((lam, "2-sign depends on the domino order"))


SUITES = {
    "minimal_degree": _minimal_degree,
    "strip_closure": _strip_closure,
    "separated_consistency": _separated_consistency,
    "domino_order": _domino_order,
}
RANDOMIZED = {"domino_order"}
DEFAULT_SEED = 2024


def verify_suite(name, max_n, seed=DEFAULT_SEED):
    """Run a named consistency suite over every n from 1 to max_n.

    Only randomized suites use the seed; the others are exhaustive.
    """
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if max_n > MAX_SUITE_SIZE:
        raise BoundExceeded(f"max_n={max_n} exceeds {MAX_SUITE_SIZE}")
    report = SuiteReport(name, max_n)
    rng = random.Random(seed)
    for n in range(1, max_n + 1):
        if name in RANDOMIZED:
            SUITES[name](n, report, rng)
        else:
            SUITES[name](n, report)
    return report
