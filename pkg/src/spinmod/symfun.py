"""Symmetric functions in the Schur basis, with exact integer coefficients.

Multiplication by h_r and e_r uses the Pieri rules.  Littlewood-Richardson
coefficients are counted directly from LR tableaux; schur_product computes
the same numbers through Jacobi-Trudi and Pieri, so the two can be checked
against each other.
"""

from functools import lru_cache
from itertools import permutations

from .abacus import two_core, two_quotient
from .errors import SizeMismatch
from .partitions import EMPTY, Partition, conjugate, enumerate_partitions, union


class SchurPoly:
    """A finite sum of Schur functions s_lambda with integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for lam, c in (coeffs or {}).items():
            if c:
                clean[Partition(lam)] = clean.get(Partition(lam), 0) + int(c)
        self._coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def schur(cls, lam):
        return cls({Partition(lam): 1})

    def __getitem__(self, lam):
        return self._coeffs.get(Partition(lam), 0)

    def items(self):
        return sorted(self._coeffs.items(), reverse=True)

    def __iter__(self):
        return iter(sorted(self._coeffs, reverse=True))

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        return isinstance(other, SchurPoly) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other):
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, 0) + v
        return SchurPoly(out)

    def __neg__(self):
        return SchurPoly({k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return SchurPoly({k: v * scalar for k, v in self._coeffs.items()})

    __rmul__ = __mul__

    def inner(self, other):
        """Hall inner product; the Schur functions are orthonormal."""
        return sum(v * other[k] for k, v in self._coeffs.items())

    def __repr__(self):
        if not self._coeffs:
            return "0"
        return " + ".join(f"{v}*s({lam})" for lam, v in self.items())


def _horizontal_strips(lam, r):
    """All partitions obtained from lam by adding r nodes, no two in one column."""
    lam = Partition(lam)
    n = len(lam) + 1
    out = []

    def rec(row, left, parts):
        if row > n:
            if left == 0:
                out.append(Partition(parts))
            return
        cap = left if row == 1 else min(left, lam.part(row - 1) - lam.part(row))
        for k in range(cap, -1, -1):
            rec(row + 1, left - k, parts + [lam.part(row) + k])

    rec(1, r, [])
    return out


def _vertical_strips(lam, r):
    """All partitions obtained from lam by adding r nodes, no two in one row."""
    return [conjugate(mu) for mu in _horizontal_strips(conjugate(lam), r)]


def mul_h(r, f):
    if r < 0:
        return SchurPoly()
    out = {}
    for lam, c in f.items():
        for mu in _horizontal_strips(lam, r):
            out[mu] = out.get(mu, 0) + c
    return SchurPoly(out)


def mul_e(r, f):
    if r < 0:
        return SchurPoly()
    out = {}
    for lam, c in f.items():
        for mu in _vertical_strips(lam, r):
            out[mu] = out.get(mu, 0) + c
    return SchurPoly(out)


ONE = SchurPoly.schur(EMPTY)


@lru_cache(maxsize=None)
def h_to_schur(mu):
    f = ONE
    for r in Partition(mu):
        f = mul_h(r, f)
    return f


@lru_cache(maxsize=None)
def e_to_schur(mu):
    f = ONE
    for r in Partition(mu):
        f = mul_e(r, f)
    return f


def kostka(lam, mu):
    """Number of semistandard tableaux of shape lam and content mu."""
    return h_to_schur(Partition(mu))[lam]


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            sign *= -1 if length % 2 == 0 else 1
    return sign


def schur_product(beta, gamma):
    """s_beta * s_gamma via Jacobi-Trudi on s_gamma and iterated Pieri rules."""
    gamma = Partition(gamma)
    m = len(gamma)
    out = SchurPoly()
    for perm in permutations(range(m)):
        idx = [gamma[i] - i + perm[i] for i in range(m)]
        if any(k < 0 for k in idx):
            continue
        f = SchurPoly.schur(beta)
        for k in idx:
            f = mul_h(k, f)
        out = out + f * _perm_sign(perm)
    return out


def lr_coeff(alpha, beta, gamma):
    """Littlewood-Richardson coefficient: the multiplicity of s_alpha in s_beta s_gamma.

    Counts fillings of the skew shape alpha/beta with content gamma whose rows
    weakly increase, columns strictly increase, and whose reverse reading word
    (right to left along rows, top to bottom) is a lattice word.
    """
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if alpha.size != beta.size + gamma.size:
        raise SizeMismatch(f"|{alpha}| != |{beta}| + |{gamma}|")
    if len(beta) > len(alpha) or any(b > alpha.part(r) for r, b in enumerate(beta, 1)):
        return 0
    cells = [(r, c) for r in range(1, len(alpha) + 1)
             for c in range(alpha.part(r), beta.part(r), -1)]
    filling = {}
    counts = [0] * (len(gamma) + 1)
    total = 0

    def rec(k):
        nonlocal total
        if k == len(cells):
            total += 1
            return
        r, c = cells[k]
        right = filling.get((r, c + 1))
        above = filling.get((r - 1, c))
        hi = len(gamma) if right is None else right
        lo = 1 if above is None else above + 1
        for v in range(lo, hi + 1):
            if counts[v] >= gamma[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            rec(k + 1)
            del filling[(r, c)]
            counts[v] -= 1

    rec(0)
    return total


def kappa(alpha, mu):
    """LR coefficient of alpha against the 2-quotient of mu, or 0 if mu has a nonempty 2-core."""
    alpha, mu = Partition(alpha), Partition(mu)
    if mu.size != 2 * alpha.size:
        raise SizeMismatch(f"|{mu}| != 2|{alpha}|")
    if two_core(mu):
        return 0
    q0, q1 = two_quotient(mu)
    return lr_coeff(alpha, q0, q1)


@lru_cache(maxsize=None)
def _h_in_e(k):
    """h_k in the e-basis as a tuple of (partition, coefficient), from
    h_k = sum_{i=1..k} (-1)^(i+1) e_i h_{k-i}."""
    if k == 0:
        return ((EMPTY, 1),)
    out = {}
    for i in range(1, k + 1):
        sign = 1 if i % 2 else -1
        for mu, c in _h_in_e(k - i):
            nu = union(mu, (i,))
            out[nu] = out.get(nu, 0) + sign * c
    return tuple(sorted(((m, c) for m, c in out.items() if c), reverse=True))


@lru_cache(maxsize=None)
def h_in_e(lam):
    """h_lam in the e-basis, as a dict partition -> coefficient."""
    out = {EMPTY: 1}
    for k in Partition(lam):
        nxt = {}
        for mu, c in out.items():
            for nu, d in _h_in_e(k):
                key = union(mu, nu)
                nxt[key] = nxt.get(key, 0) + c * d
        out = {m: c for m, c in nxt.items() if c}
    return tuple(sorted(out.items(), reverse=True))


def spade(lam, mu):
    """Coefficient of e_mu in h_lam."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    return dict(h_in_e(lam)).get(mu, 0)


def spade_matrix(n):
    """{(lam, mu): spade(lam, mu)} over all partitions of n."""
    parts = enumerate_partitions(n)
    return {(l, m): spade(l, m) for l in parts for m in parts}
