"""Acceptance criteria, one PASS/FAIL line each.

The lines are printed while the tests run (visible with ``-s``) and repeated in
the pytest terminal summary. ``python3 tests/test_acceptance.py`` prints the
bare report and exits nonzero if anything fails.
"""

import sys
import time
from collections import defaultdict
from fractions import Fraction

import pytest

from oracles import bar_core_oracle, branch_power_closed_form, spin_subpartitions

from spinmod.abacus import two_core, two_quotient, two_sign, two_weight
from spinmod.characters import (FormalChar, Ord, Spin, brauer_max, divided, e_step,
                                kleshchev, signature_text, spin_label)
from spinmod.classify import is_2carter, verify_suite
from spinmod.degrees import FAMILIES, family, spin_degree
from spinmod.partitions import (Node, Partition, conjugate, dominates, enumerate_partitions, ev,
                                scale)
from spinmod.regdouble import (dblreg, double, four_bar_core, ladder_counts, slope_counts,
                               spin_block)
from spinmod.rouquier import (RouquierBlock, assemble_E, brauer_columns, j_matrix,
                              load_fixture, omega_spin_matrix, psi, schur_algebra_matrices,
                              spin_form, unitri_inverse)
from spinmod.symfun import (SchurPoly, e_to_schur, h_to_schur, kostka, lr_coeff,
                            schur_product, spade)

STAIR = (3, 2, 1)
CRITERIA = {}
REPORT = []


def criterion(number, title, limit=None):
    def register(fn):
        CRITERIA[number] = (title, limit, fn)
        return fn
    return register


def O(*parts):
    return Ord(Partition(parts))


def S(*parts, sign=None):
    return Spin(Partition(parts), sign)


def _tau_form(block, lam):
    form = spin_form(block, lam)
    return form is not None and not form[1]


def _regular_ordinary(chi):
    return chi.restrict_to(lambda lab: isinstance(lab, Ord) and lab.partition.is_two_regular())


def _tau_spin(block, chi):
    return chi.restrict_to(lambda lab: isinstance(lab, Spin) and _tau_form(block, lab.partition))


@criterion(1, "E = JA at even weight 4 reproduces the fixture 2x5 E", limit=1.0)
def check_even_weight():
    d, dbar = schur_algebra_matrices(4)
    e, _, _ = assemble_E(RouquierBlock(STAIR, 4), d, dbar)
    assert list(e.row_labels) == [(2,), (1, 1)]
    assert e.shape == (2, 5)
    assert e == load_fixture("E_w4")


@criterion(2, "E = JA at odd weight 5 reproduces the fixture 2x7 E", limit=1.0)
def check_odd_weight():
    # core (3,2,1) is not Rouquier at weight 5, so the block uses (4,3,2,1)
    d, dbar = schur_algebra_matrices(5)
    e, _, _ = assemble_E(RouquierBlock((4, 3, 2, 1), 5), d, dbar)
    assert e.shape == (2, 7)
    assert e == load_fixture("E_w5")


@criterion(3, "psi characters for core (3,2,1) match every listed coefficient", limit=5.0)
def check_psi_goldens():
    # f_0^(2) f_1^(2) takes (3,2,1) through (4,2,1,1) to (5,2,1^3)
    assert psi(RouquierBlock(STAIR, 2), (1, 1)) == FormalChar.of(
        O(5, 4, 1), O(5, 2, 1, 1, 1), O(3, 2, 2, 2, 1), S(9, 1), S(5, 4, 1, sign="+"),
        S(5, 4, 1, sign="-"))
    assert psi(RouquierBlock(STAIR, 3), (1, 1, 1)) == FormalChar.of(
        O(5, 4, 3), O(5, 4, 1, 1, 1), O(5, 2, 2, 2, 1), O(3, 3, 3, 2, 1),
        *spin_label((9, 2, 1)), *spin_label((6, 5, 1)))
    b = RouquierBlock(STAIR, 4)
    goldens = {
        (2, 2): (FormalChar.of(O(7, 6, 1), O(7, 4, 3), O(5, 4, 3, 2)), FormalChar.of(S(13, 1), S(9, 5))),
        (2, 1, 1): (FormalChar.of(O(7, 4, 3), O(5, 4, 3, 2)), FormalChar()),
    }
    for mu, (regular, tau_part) in goldens.items():
        p = psi(b, mu)
        assert _regular_ordinary(p) == regular
        assert _tau_spin(b, p) == tau_part
        # the unlisted remainder has no 2-regular [lam] and no tau-form <lam>
        rest = p - regular - tau_part
        for lab in rest:
            if isinstance(lab, Spin):
                assert not _tau_form(b, lab.partition)
            else:
                assert not lab.partition.is_two_regular()


@criterion(4, "omega spin coefficients at weight 4 equal the fixture J Dbar^-1 = E D^-1")
def check_omega_golden():
    m = omega_spin_matrix(RouquierBlock(STAIR, 4))
    assert [list(r) for r in m.entries.tolist()] == [[1, -1, 1, 0, 0], [0, 0, 1, -1, 1]]
    assert m == load_fixture("JDbarinv_w4")
    d, dbar = schur_algebra_matrices(4)
    e, _, _ = assemble_E(RouquierBlock(STAIR, 4), d, dbar)
    assert e @ unitri_inverse(d) == m


@criterion(5, "double cover of S5: E = JA and spin regularisation give the two entries")
def check_s5():
    spin = load_fixture("S5_spin")
    b = RouquierBlock((1,), 2)
    d, dbar = schur_algebra_matrices(2)
    e, _, _ = assemble_E(b, d, dbar)
    assert b.spin_row_partition((1,)) == (5,)
    cols = dict(zip(brauer_columns(b), e.col_labels))
    assert e[(1,), cols[Partition((3, 2))]] == 1 == spin[(5,), (3, 2)]
    lam = Partition((4, 1))
    assert dblreg(lam) == (3, 2)
    assert 2 ** (ev(lam) // 2) == 1 == spin[lam, (3, 2)]


@criterion(6, "weight 7 fixture rows ((alpha),(1)) of E A^-1 equal J")
def check_weight_seven():
    ea = load_fixture("EAinv_w7")
    j = j_matrix(7)
    assert [list(a) for a in j.row_labels] == [[3], [2, 1], [1, 1, 1]]
    for alpha in j.row_labels:
        assert ea.row((alpha, Partition((1,)))) == j.row(alpha)


@criterion(7, "branching goldens for (11,9,7,5,4,1) and the Kleshchev example")
def check_branching():
    chi = FormalChar.of(S(11, 9, 7, 5, 4, 1, sign="+"))
    assert e_step(0, chi) == FormalChar.of(S(11, 9, 7, 5, 4, sign="+"), S(11, 9, 7, 5, 3, 1),
                                           S(11, 8, 7, 5, 4, 1))
    half = Fraction(1, 2)
    assert divided(0, 2, "e", chi) == FormalChar({
        S(11, 9, 7, 5, 3): 1, S(11, 8, 7, 5, 4): 1,
        S(11, 9, 7, 4, 3, 1, sign="+"): half, S(11, 9, 7, 4, 3, 1, sign="-"): half,
        S(11, 8, 7, 5, 3, 1, sign="+"): 1, S(11, 8, 7, 5, 3, 1, sign="-"): 1,
    })
    mu = (15, 11, 8, 6, 5, 2)
    k = kleshchev(mu, 0)
    assert signature_text(k.signature) == "-++---+"
    assert signature_text(k.reduced) == "--+"
    assert k.normal == (Node(1, 15), Node(6, 2))
    assert brauer_max(mu, 0, "e") == (14, 11, 8, 6, 5, 1)


@criterion(8, "divided power branching closed form, n <= 16, both residues, all r", limit=60.0)
def check_branch_powers():
    for n in range(1, 17):
        for lam in enumerate_partitions(n, two_regular=True):
            for i in (0, 1):
                for label in spin_label(lam):
                    chi = FormalChar.of(label)
                    for r in range(n + 2):
                        res = divided(i, r, "e", chi)
                        targets = spin_subpartitions(lam, i, r)
                        assert {lab.partition for lab in res} == set(targets), (lam, i, r)
                        for mu in targets:
                            got = sum(res[lab] for lab in spin_label(mu))
                            assert got == branch_power_closed_form(lam, mu, r), (lam, mu, i, r)


@criterion(9, "slopes equal ladders of the double and dblreg classes are slope classes, n <= 22",
           limit=60.0)
def check_slopes():
    for n in range(23):
        by_dblreg, by_slope = defaultdict(set), defaultdict(set)
        for lam in enumerate_partitions(n, two_regular=True):
            slopes = tuple(slope_counts(lam))
            assert list(slopes) == ladder_counts(double(lam)), lam
            by_dblreg[dblreg(lam)].add(lam)
            by_slope[slopes].add(lam)
        assert sorted(map(sorted, by_dblreg.values())) == sorted(map(sorted, by_slope.values()))


@criterion(10, "degree families share dblreg with strictly ordered degrees", limit=30.0)
def check_families():
    cases = [("dimen1", None, m) for m in range(2, 9)]
    cases += [(kind, a, m) for kind in FAMILIES[1:] for a in range(1, 6) for m in range(6)]
    assert len(cases) == 7 + 4 * 30
    for kind, a, m in cases:
        lam, mu = family(kind, a, m)
        assert dblreg(lam) == dblreg(mu), (kind, a, m)
        assert spin_degree(lam) > spin_degree(mu), (kind, a, m)


@criterion(11, "2-Carter partitions with first part at most 5")
def check_carter():
    expected = {Partition(p) for p in [
        (), (1,), (2,), (2, 1), (3,), (3, 2, 1), (4,), (4, 1), (4, 3, 2, 1),
        (5,), (5, 2), (5, 2, 1), (5, 4, 3, 2, 1)]}
    # 2-Carter forces distinct parts, so nothing with first part <= 5 exceeds size 15
    found = {lam for n in range(16) for lam in enumerate_partitions(n)
             if (not lam or lam[0] <= 5) and is_2carter(lam)}
    assert found == expected and len(found) == 13


@criterion(12, "classifier suites to 26, 26 and 30", limit=300.0)
def check_suites():
    for name, n in [("minimal_degree", 26), ("strip_closure", 26), ("separated_consistency", 30)]:
        report = verify_suite(name, n)
        assert report.passed, report.summary()


@criterion(13, "symmetric function identities up to degree 8", limit=60.0)
def check_symfun():
    top = 8
    for n in range(1, top + 1):
        parts = enumerate_partitions(n)
        for mu in parts:
            e, h = e_to_schur(mu), h_to_schur(mu)
            for lam in parts:
                assert e[lam] == h[conjugate(lam)]
                k = kostka(lam, mu)
                if lam == mu:
                    assert k == 1
                if k:
                    assert dominates(lam, mu)
            total = SchurPoly()
            for nu in parts:
                c = spade(mu, nu)
                if c:
                    total = total + e_to_schur(nu) * c
            assert total == h
    for n in range(top + 1):
        for k in range(n + 1):
            for beta in enumerate_partitions(k):
                for gamma in enumerate_partitions(n - k):
                    prod = schur_product(beta, gamma)
                    for alpha in enumerate_partitions(n):
                        c = lr_coeff(alpha, beta, gamma)
                        assert c == prod[alpha]
                        assert c == lr_coeff(conjugate(alpha), conjugate(beta), conjugate(gamma))
    for k in range(1, top // 2 + 1):
        sign = (-1) ** k
        for mu in enumerate_partitions(k):
            assert spade((2 * k,), scale(2, mu)) == sign * spade((k,), mu)
            for lam in enumerate_partitions(k):
                assert spade(scale(2, lam), scale(2, mu)) == sign * spade(lam, mu)
            for lam in enumerate_partitions(2 * k):
                if any(p % 2 for p in lam):
                    assert spade(lam, scale(2, mu)) == 0


@criterion(14, "block theory and conjugation lemmas, n <= 24", limit=60.0)
def check_blocks():
    for n in range(25):
        by_core, by_block = defaultdict(set), defaultdict(set)
        for lam in enumerate_partitions(n, two_regular=True):
            core = four_bar_core(lam)
            assert core == bar_core_oracle(lam), lam
            assert double(core) == two_core(double(lam)), lam
            by_core[core].add(lam)
            by_block[spin_block(lam)].add(lam)
        assert sorted(map(sorted, by_core.values())) == sorted(map(sorted, by_block.values()))
        for lam in enumerate_partitions(n):
            q0, q1 = two_quotient(lam)
            conj = conjugate(lam)
            assert two_quotient(conj) == (conjugate(q1), conjugate(q0))
            assert two_sign(conj) == (-1) ** two_weight(lam) * two_sign(lam)


def evaluate(number):
    title, limit, fn = CRITERIA[number]
    start = time.perf_counter()
    problem = None
    try:
        fn()
    except AssertionError as exc:
        problem = " ".join(f"assertion failed {exc}".split())
    elapsed = time.perf_counter() - start
    if problem is None and limit is not None and elapsed >= limit:
        problem = f"took {elapsed:.2f}s, limit {limit:g}s"
    timing = f"{elapsed:.2f}s" + (f" < {limit:g}s" if limit is not None else "")
    verdict = "PASS" if problem is None else "FAIL"
    line = f"{verdict} criterion {number:2d}: {title} [{timing}]"
    if problem:
        line += f" ({problem})"
    return problem is None, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, line = evaluate(number)
    print(line)
    REPORT.append(line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
