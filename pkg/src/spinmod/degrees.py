"""Exact spin character degrees and the partition pairs used to compare them."""

from fractions import Fraction
from math import factorial, prod

from .errors import (InternalNonIntegral, NotTwoRegular, ParameterOutOfRange,
                     RowTooShort, SizeMismatch)
from .partitions import Partition, union


def spin_degree(lam):
    """Degree of the spin character labelled by the 2-regular partition lam.

    2^floor((n-m)/2) * n! / prod(lam_i!) * prod_{i<j} (lam_i - lam_j)/(lam_i + lam_j),
    evaluated in exact rationals.
    """
    lam = Partition(lam)
    if not lam.is_two_regular():
        raise NotTwoRegular(f"{lam} is not 2-regular")
    n, m = lam.size, len(lam)
    value = Fraction(2 ** ((n - m) // 2) * factorial(n), prod(factorial(p) for p in lam))
    for i in range(m):
        for j in range(i + 1, m):
            value *= Fraction(lam[i] - lam[j], lam[i] + lam[j])
    if value.denominator != 1:
        raise InternalNonIntegral(f"degree of {lam} came out as {value}")
    return int(value)


def _run(start, stop):
    """The arithmetic progression start, start-4, ..., stop (empty if start < stop)."""
    return list(range(start, stop - 1, -4)) if start >= stop else []


def family(kind, a, m):
    """The pair (lam, mu) of a degree-comparison family.

    In every family the two partitions have the same dblreg and lam has the
    larger degree.
    """
    if kind == "dimen1":
        if m < 2:
            raise ParameterOutOfRange("dimen1 needs m >= 2")
        lam = [4 * m] + _run(4 * m - 3, 5)
        mu = [4 * m + 1] + _run(4 * m - 3, 9) + [4]
        return Partition(lam), Partition(mu)
    if a < 1 or m < 0:
        raise ParameterOutOfRange(f"{kind} needs a >= 1 and m >= 0")
    if kind == "first":
        lam = union(_run(4 * a + 4 * m - 3, 1), [4 * a])
        mu = _run(4 * a + 4 * m + 1, 4 * m + 5) + _run(4 * m - 3, 1)
    elif kind == "second":
        lam = union(_run(4 * a + 4 * m + 1, 1), [4 * a + 2])
        mu = _run(4 * a + 4 * m + 5, 4 * m + 9) + _run(4 * m + 1, 5) + [2, 1]
    elif kind == "third":
        lam = union(_run(4 * a + 4 * m - 1, 3), [4 * a])
        mu = _run(4 * a + 4 * m + 3, 4 * m + 7) + _run(4 * m - 1, 3)
    elif kind == "fourth":
        lam = union(_run(4 * a + 4 * m - 1, 3), [4 * a + 2])
        mu = _run(4 * a + 4 * m + 3, 4 * m + 7) + _run(4 * m - 1, 3) + [2]
    else:
        raise ParameterOutOfRange(f"unknown family {kind!r}")
    return Partition(lam), Partition(mu)


FAMILIES = ("dimen1", "first", "second", "third", "fourth")


def row_extend(lam, mu, l):
    """Put a new first row of length l on top of both partitions."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    if l <= lam.part(1) or l <= mu.part(1):
        raise RowTooShort(f"row of length {l} does not exceed the first rows")
    return Partition((l,) + lam), Partition((l,) + mu)


def domdim_ratio(lam, l):
    """prod (l + lam_i) / (l - lam_i), the factor a new row of length l contributes."""
    return prod((Fraction(l + p, l - p) for p in lam), start=Fraction(1))
