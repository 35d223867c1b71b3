from fractions import Fraction

import pytest

from spinmod.characters import (ZERO, Brauer, FormalChar, Ord, Spin, brauer_max, divided,
                                e_step, eps, f_step, inner, kleshchev, max_op, parse_char,
                                parse_label, phi, signature_text, spin_label)
from spinmod.errors import MalformedText, MixedKinds, MixedLevels, NotTwoRegular, ZeroCharacter
from spinmod.partitions import Node, Partition, enumerate_partitions, spin_strip

from oracles import branch_power_closed_form, spin_subpartitions


def S(*parts, sign=None):
    return Spin(Partition(parts), sign)


def test_label_text_round_trip():
    for label in (Ord((3, 1)), S(9, 1), S(5, 4, 1, sign="+"), Brauer((7, 2, 1)), Ord(())):
        assert parse_label(str(label)) == label
    assert str(S(5, 4, 1, sign="-")) == "<5,4,1>-"
    assert str(Brauer((7, 2, 1))) == "phi(7,2,1)"


def test_label_validation():
    with pytest.raises(NotTwoRegular):
        Spin((2, 2))
    with pytest.raises(ValueError):
        Spin((5, 4, 1))
    with pytest.raises(ValueError):
        Spin((9, 1), "+")
    with pytest.raises(MalformedText):
        parse_label("{3}")
    assert S(5, 4, 1, sign="+").associate() == S(5, 4, 1, sign="-")
    assert spin_label((5, 4, 1)) == [S(5, 4, 1, sign="+"), S(5, 4, 1, sign="-")]
    assert spin_label((9, 1)) == [S(9, 1)]


def test_formal_char_arithmetic():
    a = FormalChar.of(Ord((2,)), S(2, sign="+"))
    b = 2 * a - a
    assert b == a
    assert (a / 2)[Ord((2,))] == Fraction(1, 2)
    assert a - a == 0
    assert not ZERO
    assert a.swap_signs() != a
    assert (a + a.swap_signs()).is_sign_symmetric()
    with pytest.raises(MixedLevels):
        FormalChar.of(Ord((2,)), Ord((1,)))
    with pytest.raises(MixedKinds):
        FormalChar.of(Ord((2,)), Brauer((2,)))


def test_char_text_round_trip():
    chi = FormalChar({Ord((3, 1)): 2, S(4, sign="+"): Fraction(1, 2), S(3, 1): -1})
    assert parse_char(str(chi)) == chi
    assert parse_char("0") == ZERO


def test_inner_checks_levels():
    chi = FormalChar.of(S(9, 1))
    assert inner(chi, S(9, 1)) == 1
    with pytest.raises(MixedLevels):
        inner(chi, Ord((3,)))
    with pytest.raises(MixedKinds):
        inner(chi, Brauer((9, 1)))


def test_e0_golden():
    lam = S(11, 9, 7, 5, 4, 1, sign="+")
    expected = FormalChar.of(S(11, 9, 7, 5, 4, sign="+"), S(11, 9, 7, 5, 3, 1), S(11, 8, 7, 5, 4, 1))
    assert e_step(0, FormalChar.of(lam)) == expected
    assert e_step(0, FormalChar.of(S(11, 9, 7, 5, 4, sign="+"))) == FormalChar.of(
        S(11, 9, 7, 5, 3), S(11, 8, 7, 5, 4))
    assert e_step(0, FormalChar.of(S(11, 8, 7, 5, 4, 1))) == FormalChar.of(
        S(11, 8, 7, 5, 4), *spin_label((11, 8, 7, 5, 3, 1)))


def test_e0_divided_square_golden():
    result = divided(0, 2, "e", FormalChar.of(S(11, 9, 7, 5, 4, 1, sign="+")))
    half = Fraction(1, 2)
    expected = FormalChar({
        S(11, 9, 7, 5, 3): 1,
        S(11, 8, 7, 5, 4): 1,
        S(11, 9, 7, 4, 3, 1, sign="+"): half,
        S(11, 9, 7, 4, 3, 1, sign="-"): half,
        S(11, 8, 7, 5, 3, 1, sign="+"): 1,
        S(11, 8, 7, 5, 3, 1, sign="-"): 1,
    })
    assert result == expected


def test_ordinary_branching():
    chi = FormalChar.of(Ord((3, 1)))
    assert e_step(0, chi) == FormalChar.of(Ord((2, 1)))
    assert e_step(1, chi) == FormalChar.of(Ord((3,)))
    assert f_step(1, FormalChar.of(Ord((1,)))) == FormalChar.of(Ord((2,)), Ord((1, 1)))


def test_kleshchev_golden():
    mu = (15, 11, 8, 6, 5, 2)
    k = kleshchev(mu, 0)
    assert signature_text(k.signature) == "-++---+"
    assert signature_text(k.reduced) == "--+"
    assert k.normal == (Node(1, 15), Node(6, 2))
    assert k.conormal == (Node(7, 1),)
    assert brauer_max(mu, 0, "e") == (14, 11, 8, 6, 5, 1)
    assert brauer_max(mu, 0, "f") == (15, 11, 8, 6, 5, 2, 1)


def test_eps_and_phi():
    chi = FormalChar.of(S(11, 9, 7, 5, 4, 1, sign="+"))
    assert eps(0, chi) == len(spin_strip((11, 9, 7, 5, 4, 1), 0)[1])
    assert phi(0, FormalChar.of(Ord(()))) == 1
    assert phi(1, FormalChar.of(Ord(()))) == 0
    with pytest.raises(ZeroCharacter):
        eps(0, ZERO)


def _spin_char(lam):
    return FormalChar.of(spin_label(lam)[0])


def test_spin_branch_power_small():
    # quick version of the n <= 16 acceptance sweep
    for n in range(1, 11):
        for lam in enumerate_partitions(n, two_regular=True):
            for i in (0, 1):
                chi = _spin_char(lam)
                for r in range(0, n + 1):
                    res = divided(i, r, "e", chi)
                    targets = spin_subpartitions(lam, i, r)
                    support = {lab.partition for lab in res}
                    assert support == set(targets)
                    for mu in targets:
                        got = sum(res[lab] for lab in spin_label(mu))
                        assert got == branch_power_closed_form(lam, mu, r), (lam, mu, i, r)
                    if not targets:
                        break


def test_max_branch_is_single_partition():
    for n in range(1, 13):
        for lam in enumerate_partitions(n, two_regular=True):
            for i in (0, 1):
                top = max_op(i, "e", _spin_char(lam))
                assert {lab.partition for lab in top} == {spin_strip(lam, i)[0]}


def test_induction_is_adjoint_to_restriction():
    for n in range(1, 10):
        for lam in enumerate_partitions(n, two_regular=True):
            for i in (0, 1):
                for src in spin_label(lam):
                    down = e_step(i, FormalChar.of(src))
                    for mu in enumerate_partitions(n - 1, two_regular=True):
                        for tgt in spin_label(mu):
                            up = f_step(i, FormalChar.of(tgt))
                            assert down[tgt] == up[src]
