"""Rouquier blocks: projective characters, inverse decomposition numbers and E = JA.

A 2-block with core (c, ..., 1) and weight w is Rouquier when w <= c + 1.
Its 2-regular ordinary labels are sigma + 2*alpha for alpha of size w, and
its spin labels have the form tau + 4*alpha ⊔ 2*beta, where tau is the
4-bar-core doubling to sigma.

Decomposition matrices of the classical and (-1)-quantized Schur algebras
are inputs here (see load_matrix and the bundled data directory); nothing
in this module attempts to compute them.
"""

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .abacus import from_core_and_quotient, staircase_height, two_sign
from .characters import FormalChar, Ord, divided, inner, spin_label
from .errors import (LabelMismatch, NegativeAdjustment, NotRouquier,
                     NotUnitriangular, ParseError, ShapeMismatch, SizeMismatch)
from .partitions import (Partition, add, conjugate, enumerate_partitions,
                         format_partition, parse, remove_node, removable_nodes,
                         scale, union)
from .regdouble import BlockId, bar_core_for_staircase, four_bar_core, is_rouquier
from .symfun import kappa, spade

FIXTURE_ENV = "SPINMOD_FIXTURES"


def dup(alpha):
    """alpha ⊔ alpha: the partition whose columns are the doubled columns of alpha."""
    return union(alpha, alpha)


def has_odd_column(mu, skip_first=False):
    cols = conjugate(mu)
    if skip_first:
        cols = cols[1:]
    return any(c % 2 for c in cols)


def format_label(label):
    if isinstance(label, Partition):
        return format_partition(label)
    alpha, beta = label
    return f"({format_partition(alpha)}|{format_partition(beta)})"


def parse_label(text):
    text = text.strip()
    if "|" in text:
        if not (text.startswith("(") and text.endswith(")")):
            raise ParseError(f"pair label {text!r} must look like (alpha|beta)")
        left, right = text[1:-1].split("|")
        return parse(left), parse(right)
    return parse(text)


class PartMatrix:
    """An integer matrix whose rows and columns are labelled by partitions.

    Row labels may also be (alpha, beta) pairs.  Entries are Python integers
    held in a numpy object array, so arithmetic stays exact.
    """

    def __init__(self, row_labels, col_labels, entries):
        self.row_labels = tuple(row_labels)
        self.col_labels = tuple(Partition(c) for c in col_labels)
        if len(set(self.row_labels)) != len(self.row_labels):
            raise LabelMismatch("duplicate row labels")
        if len(set(self.col_labels)) != len(self.col_labels):
            raise LabelMismatch("duplicate column labels")
        arr = np.empty((len(self.row_labels), len(self.col_labels)), dtype=object)
        rows = list(entries)
        if len(rows) != len(self.row_labels):
            raise SizeMismatch("number of rows does not match the row labels")
        for i, row in enumerate(rows):
            row = list(row)
            if len(row) != len(self.col_labels):
                raise SizeMismatch(f"row {i} has {len(row)} entries, expected {len(self.col_labels)}")
            for j, x in enumerate(row):
                arr[i, j] = int(x)
        self.entries = arr
        self._row_index = {r: i for i, r in enumerate(self.row_labels)}
        self._col_index = {c: j for j, c in enumerate(self.col_labels)}

    @classmethod
    def from_array(cls, row_labels, col_labels, arr):
        return cls(row_labels, col_labels, [list(r) for r in arr])

    @property
    def shape(self):
        return self.entries.shape

    def __getitem__(self, key):
        r, c = key
        return self.entries[self._row_index[r], self._col_index[Partition(c)]]

    def row(self, label):
        return [int(x) for x in self.entries[self._row_index[label]]]

    def rows(self):
        return [self.row(r) for r in self.row_labels]

    def reindex(self, row_labels=None, col_labels=None):
        row_labels = self.row_labels if row_labels is None else tuple(row_labels)
        col_labels = self.col_labels if col_labels is None else tuple(Partition(c) for c in col_labels)
        if set(row_labels) != set(self.row_labels) or set(col_labels) != set(self.col_labels):
            raise LabelMismatch("reindexing must permute the existing labels")
        return PartMatrix(row_labels, col_labels,
                          [[self[r, c] for c in col_labels] for r in row_labels])

    def __matmul__(self, other):
        if self.col_labels != other.row_labels:
            if set(self.col_labels) != set(other.row_labels):
                raise LabelMismatch("inner labels of a product differ")
            other = other.reindex(row_labels=self.col_labels)
        return PartMatrix.from_array(self.row_labels, other.col_labels,
                                     self.entries.dot(other.entries))

    def __eq__(self, other):
        if not isinstance(other, PartMatrix):
            return NotImplemented
        if set(self.row_labels) != set(other.row_labels) or set(self.col_labels) != set(other.col_labels):
            return False
        other = other.reindex(self.row_labels, self.col_labels)
        return self.rows() == other.rows()

    def is_nonnegative(self):
        return all(x >= 0 for x in self.entries.flat)

    def to_text(self):
        lines = ["cols: " + "; ".join(format_partition(c) for c in self.col_labels)]
        for r in self.row_labels:
            cells = " ".join(str(x) if x else "." for x in self.row(r))
            lines.append(f"{format_label(r)} | {cells}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines or not lines[0].startswith("cols:"):
            raise ParseError("matrix text must start with a 'cols:' line")
        try:
            cols = [parse(c) for c in lines[0][len("cols:"):].split(";")]
            rows, entries = [], []
            for ln in lines[1:]:
                if "|" not in ln:
                    raise ParseError(f"row line {ln!r} has no '|' separator")
                label, cells = ln.rsplit("|", 1)
                rows.append(parse_label(label))
                entries.append([0 if x == "." else int(x) for x in cells.split()])
        except (ValueError, TypeError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc)) from exc
        return cls(rows, cols, entries)

    def __repr__(self):
        return "PartMatrix(\n" + self.to_text() + ")"


def identity(labels):
    labels = tuple(labels)
    return PartMatrix(labels, labels, [[int(r == c) for c in labels] for r in labels])


def load_matrix(path):
    with open(path, encoding="utf-8") as fh:
        return PartMatrix.from_text(fh.read())


def save_matrix(matrix, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(matrix.to_text())


def fixture_path(name):
    """Path of a bundled matrix file, overridable through $SPINMOD_FIXTURES."""
    base = os.environ.get(FIXTURE_ENV)
    if base:
        return os.path.join(base, name)
    return os.path.join(os.path.dirname(__file__), "data", name)


def load_fixture(name):
    return load_matrix(fixture_path(name if name.endswith(".txt") else name + ".txt"))


def schur_algebra_matrices(w):
    """(D, Dbar) for the weight-w Schur algebras, from the fixture directory.

    Weights 0 and 1 have identity matrices and need no file.
    """
    if w <= 1:
        labels = enumerate_partitions(w)
        return identity(labels), identity(labels)
    return load_fixture(f"D_w{w}"), load_fixture(f"Dbar_w{w}")


def unitri_inverse(m):
    """Exact inverse of a unitriangular square PartMatrix.

    Labels are put in descending lexicographic order, which refines the
    dominance order, and the matrix must then be lower or upper unitriangular.
    """
    if set(m.row_labels) != set(m.col_labels):
        raise LabelMismatch("unitri_inverse needs matching row and column labels")
    order = sorted(m.row_labels, reverse=True)
    a = m.reindex(order, order).entries
    n = len(order)
    lower = all(a[i, j] == 0 for i in range(n) for j in range(i + 1, n))
    upper = all(a[i, j] == 0 for i in range(n) for j in range(i))
    if not (lower or upper) or any(a[i, i] != 1 for i in range(n)):
        raise NotUnitriangular("matrix is not unitriangular in a dominance-compatible order")
    if upper:
        a = a.T
    inv = np.zeros((n, n), dtype=object)
    for i in range(n):
        inv[i, i] = 1
        for j in range(i):
            inv[i, j] = -sum(a[i, k] * inv[k, j] for k in range(j, i))
    if upper:
        inv = inv.T
    result = PartMatrix.from_array(order, order, inv)
    check = m.reindex(order, order) @ result
    if check != identity(order):
        raise NotUnitriangular("inverse check failed")
    return result.reindex(m.row_labels, m.col_labels)


def steinberg_entry(alpha, mu, d_small=None):
    """Closed form for an entry of Dbar^-1 (d_small None) or D^-1.

    Row dup(alpha) when |mu| = 2|alpha|, row dup(alpha) ⊔ (1) when
    |mu| = 2|alpha| + 1.  For D^-1, d_small is the decomposition matrix of
    the Schur algebra of degree |alpha|.
    """
    alpha, mu = Partition(alpha), Partition(mu)
    n = mu.size
    if n == 2 * alpha.size:
        sign = -1 if (n // 2) % 2 else 1

        def pairing(beta):
            return two_sign(mu) * kappa(beta, mu)
    elif n == 2 * alpha.size + 1:
        sign = -1 if ((n - 1) // 2) % 2 else 1
        smaller = [remove_node(mu, node) for node in removable_nodes(mu)]

        def pairing(beta):
            return sum(two_sign(nu) * kappa(beta, nu) for nu in smaller)
    else:
        raise ShapeMismatch(f"|{mu}| must be 2|{alpha}| or 2|{alpha}| + 1")
    if d_small is None:
        return sign * pairing(alpha)
    d_inv = unitri_inverse(d_small)
    return sign * sum(d_inv[alpha, beta] * pairing(beta)
                      for beta in enumerate_partitions(alpha.size))


def steinberg_rows(w, d_small=None):
    """All rows of Dbar^-1 (or D^-1) given by steinberg_entry, indexed by alpha."""
    alphas = enumerate_partitions(w // 2)
    cols = enumerate_partitions(w)
    return PartMatrix(alphas, cols, [[steinberg_entry(a, m, d_small) for m in cols] for a in alphas])


@dataclass(frozen=True)
class RouquierBlock:
    core: Partition
    weight: int

    def __post_init__(self):
        object.__setattr__(self, "core", Partition(self.core))
        staircase_height(self.core)
        if not is_rouquier(BlockId(self.core, self.weight)):
            raise NotRouquier(f"core {self.core} with weight {self.weight} is not Rouquier")

    @property
    def height(self):
        return len(self.core)

    @property
    def tau(self):
        return bar_core_for_staircase(self.core)

    @property
    def addable_residue(self):
        return self.height % 2

    @property
    def size(self):
        return self.core.size + 2 * self.weight

    def sub_block(self, weight):
        return RouquierBlock(self.core, weight)

    def regular_label(self, alpha):
        """sigma + 2 alpha."""
        return add(self.core, scale(2, alpha))

    def spin_row_partition(self, alpha):
        """tau + 4 alpha (even weight) or tau + 4 alpha ⊔ (2) (odd weight)."""
        lam = add(self.tau, scale(4, alpha))
        return union(lam, (2,)) if self.weight % 2 else lam

    def spin_partition(self, alpha, beta):
        return union(add(self.tau, scale(4, alpha)), scale(2, beta))


class BlockLabels(NamedTuple):
    ordinary: list
    ordinary_regular: list
    spin: list


def spin_form(block, lam):
    """(alpha, beta) with lam = tau + 4 alpha ⊔ 2 beta, or None."""
    lam = Partition(lam)
    tau = block.tau
    odd = [p for p in lam if p % 2]
    even = [p // 2 for p in lam if p % 2 == 0]
    if len(odd) != len(tau):
        return None
    diffs = [p - t for p, t in zip(odd, tau)]
    if any(d < 0 or d % 4 for d in diffs):
        return None
    alpha = [d // 4 for d in diffs]
    if any(a < b for a, b in zip(alpha, alpha[1:])):
        return None
    return Partition(alpha), Partition(even)


@lru_cache(maxsize=None)
def block_labels(block):
    w = block.weight
    ordinary = set()
    for k in range(w + 1):
        for q0 in enumerate_partitions(k):
            for q1 in enumerate_partitions(w - k):
                ordinary.add(from_core_and_quotient(block.core, q0, q1))
    regular = [block.regular_label(a) for a in enumerate_partitions(w)]
    spin = [lam for lam in enumerate_partitions(block.size, two_regular=True)
            if four_bar_core(lam) == block.tau]
    for lam in spin:
        if spin_form(block, lam) is None:
            raise AssertionError(f"spin label {lam} is not of the form tau + 4 alpha ⊔ 2 beta")
    return BlockLabels(sorted(ordinary, reverse=True), regular, spin)


def induce_step(block, r, chi):
    """The doubled induction adding r nodes of the core's addable residue, then r of the other."""
    a = block.addable_residue
    return divided(1 - a, r, "f", divided(a, r, "f", chi))


@lru_cache(maxsize=None)
def psi(block, mu):
    """The projective character psi^mu, built one column of mu at a time."""
    mu = Partition(mu)
    if mu.size != block.weight:
        raise SizeMismatch(f"|{mu}| != weight {block.weight}")
    if not mu:
        return FormalChar.of(Ord(block.core), *spin_label(block.tau))
    cols = conjugate(mu)
    r = cols[-1]
    rho = conjugate(cols[:-1])
    return induce_step(block, r, psi(block.sub_block(block.weight - r), rho))


def upsilon(block, lam):
    """sum over mu of spade(lam, mu) psi^(mu')."""
    lam = Partition(lam)
    total = FormalChar()
    for mu in enumerate_partitions(block.weight):
        c = spade(lam, mu)
        if c:
            total = total + psi(block, conjugate(mu)) * c
    return total


@lru_cache(maxsize=None)
def psi_gram(block):
    """M[mu, nu] = (psi^mu : [sigma + 2 nu])."""
    labels = enumerate_partitions(block.weight)
    rows = []
    for mu in labels:
        p = psi(block, mu)
        row = []
        for nu in labels:
            x = inner(p, Ord(block.regular_label(nu)))
            if x.denominator != 1:
                raise AssertionError("non-integral psi pairing")
            row.append(int(x))
        rows.append(row)
    return PartMatrix(labels, labels, rows)


@lru_cache(maxsize=None)
def omega_coefficients(block):
    """The matrix a with omega^lam = sum_mu a[lam, mu] psi^mu."""
    return unitri_inverse(psi_gram(block))


@lru_cache(maxsize=None)
def omega(block, lam):
    """The virtual projective character with (omega^lam : [sigma + 2 nu]) = delta."""
    lam = Partition(lam)
    a = omega_coefficients(block)
    total = FormalChar()
    for mu in enumerate_partitions(block.weight):
        c = a[lam, mu]
        if c:
            total = total + psi(block, mu) * c
    return total


def omega_spin_matrix(block):
    """Rows alpha, columns lam: (omega^lam : <spin_row_partition(alpha)>).

    For a D- label both associates must give the same value.
    """
    w = block.weight
    alphas = enumerate_partitions(w // 2)
    cols = enumerate_partitions(w)
    rows = []
    for alpha in alphas:
        labels = spin_label(block.spin_row_partition(alpha))
        row = []
        for lam in cols:
            values = {inner(omega(block, lam), s) for s in labels}
            if len(values) != 1:
                raise AssertionError(f"omega^{lam} is not sign-symmetric")
            x = values.pop()
            if x.denominator != 1:
                raise AssertionError(f"non-integral coefficient {x}")
            row.append(int(x))
        rows.append(row)
    return PartMatrix(alphas, cols, rows)


def j_matrix(w):
    """J[alpha, mu] = 1 iff mu = dup(alpha) (w even) or dup(alpha) ⊔ (1) (w odd)."""
    alphas = enumerate_partitions(w // 2)
    cols = enumerate_partitions(w)
    target = {a: dup(a) if w % 2 == 0 else union(dup(a), (1,)) for a in alphas}
    return PartMatrix(alphas, cols, [[int(m == target[a]) for m in cols] for a in alphas])


def adjustment_matrix(d, dbar):
    """A = Dbar^-1 D, which must have nonnegative entries."""
    a = unitri_inverse(dbar) @ d.reindex(row_labels=dbar.col_labels)
    if not a.is_nonnegative():
        raise NegativeAdjustment("Dbar^-1 D has a negative entry; check the input matrices")
    return a


def assemble_E(block, d, dbar):
    """(E, J, A) with A = Dbar^-1 D and E = J A.

    Row alpha of E holds the decomposition numbers of the spin character
    labelled block.spin_row_partition(alpha), against the Brauer characters
    labelled sigma + 2 mu.
    """
    w = block.weight
    labels = set(enumerate_partitions(w))
    for m in (d, dbar):
        if set(m.row_labels) != labels or set(m.col_labels) != labels:
            raise SizeMismatch(f"decomposition matrices must be indexed by the partitions of {w}")
    order = enumerate_partitions(w)
    d = d.reindex(order, order)
    dbar = dbar.reindex(order, order)
    a = adjustment_matrix(d, dbar).reindex(order, order)
    j = j_matrix(w)
    return j @ a, j, a


def brauer_columns(block):
    """The Brauer labels sigma + 2 mu in the column order used by assemble_E."""
    return [block.regular_label(mu) for mu in enumerate_partitions(block.weight)]

