import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinmod.errors import (BoundExceeded, MalformedText, NonIntegralScale,
                            NotTwoRegular, NotWeaklyDecreasing, SizeMismatch)
from spinmod.partitions import (EMPTY, Node, Partition, add, add_node, addable_nodes,
                                combine, conjugate, dominates, enumerate_partitions,
                                ev, ladder_of, node_data, parse, remove_node,
                                removable_nodes, scale, sign_class, slope_of,
                                spin_residue, spin_strip, union)

from oracles import strip_oracle

partitions_st = st.lists(st.integers(1, 12), max_size=8).map(
    lambda xs: Partition(sorted(xs, reverse=True)))
regular_st = st.sets(st.integers(1, 15), max_size=6).map(
    lambda xs: Partition(sorted(xs, reverse=True)))


def test_parse_forms():
    assert parse("4^2,3,1^3") == (4, 4, 3, 1, 1, 1)
    assert parse("9, 6,4,3,1") == (9, 6, 4, 3, 1)
    assert parse("()") == EMPTY
    assert parse("-") == EMPTY
    assert parse("0") == EMPTY
    assert parse("(5,4,1)") == (5, 4, 1)


@pytest.mark.parametrize("text", ["a", "3,,1", "2^", "1.5"])
def test_parse_rejects_garbage(text):
    with pytest.raises(MalformedText):
        parse(text)


def test_parse_rejects_increasing():
    with pytest.raises(NotWeaklyDecreasing):
        parse("1,2")


@given(partitions_st)
def test_parse_format_round_trip(lam):
    assert parse(str(lam)) == lam


@given(partitions_st)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


def test_conjugate_golden():
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)


def test_dominance():
    assert dominates((3, 1), (2, 2))
    assert not dominates((2, 2), (3, 1))
    assert not dominates((3, 1, 1, 1), (2, 2, 2))
    with pytest.raises(SizeMismatch):
        dominates((2,), (1,))


@given(partitions_st, partitions_st)
def test_dominance_reverses_under_conjugation(lam, mu):
    if lam.size == mu.size:
        assert dominates(lam, mu) == dominates(conjugate(mu), conjugate(lam))


def test_combine_golden():
    lam, mu, nu = (11, 7, 3), (3, 1, 1), (10, 2)
    assert union(add(lam, scale(4, mu)), nu) == (23, 11, 10, 7, 2)
    assert combine("union", combine("sum", lam, combine("scale", mu, factor=4)), nu) == (23, 11, 10, 7, 2)


def test_scale_fraction():
    assert scale(0.5, (4, 2)) == (2, 1)
    with pytest.raises(NonIntegralScale):
        scale(0.5, (3,))


def test_node_residues():
    # first row spin residues repeat 0,1,1,0
    assert [spin_residue(Node(1, c)) for c in range(1, 9)] == [0, 1, 1, 0, 0, 1, 1, 0]
    d = node_data(Node(3, 5))
    assert d.residue == 0 and d.spin_residue == 0
    assert d.ladder == 6 and d.slope == 6


def test_add_remove_inverse():
    lam = Partition((5, 3, 3, 1))
    for node in removable_nodes(lam):
        assert add_node(remove_node(lam, node), node) == lam
    for node in addable_nodes(lam):
        assert remove_node(add_node(lam, node), node) == lam


def test_spin_strip_golden():
    lam = (9, 6, 4, 3, 1)
    assert spin_strip(lam, 0)[0] == (7, 6, 4, 3)
    assert spin_strip(lam, 1)[0] == (9, 5, 4, 2, 1)


def test_spin_strip_matches_exhaustive_search():
    for n in range(1, 13):
        for lam in enumerate_partitions(n, two_regular=True):
            for i in (0, 1):
                assert spin_strip(lam, i)[0] == strip_oracle(lam, i), (lam, i)


# p(n) and q(n) for n = 0..20
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627]
DISTINCT_COUNTS = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27, 32, 38, 46, 54, 64]


def test_enumeration_counts():
    for n in range(21):
        assert len(enumerate_partitions(n)) == PARTITION_COUNTS[n]
        assert len(enumerate_partitions(n, two_regular=True)) == DISTINCT_COUNTS[n]


def test_enumeration_is_descending_lex():
    parts = enumerate_partitions(7)
    assert parts == sorted(parts, reverse=True)
    assert parts[0] == (7,) and parts[-1] == (1,) * 7


def test_enumeration_bound():
    with pytest.raises(BoundExceeded):
        enumerate_partitions(61)


def test_sign_classes():
    assert ev((5, 4, 1)) == 1 and sign_class((5, 4, 1)) == "D-"
    assert sign_class((4, 2, 1)) == "D+"
    assert sign_class((2, 2)) is None


@given(regular_st)
@settings(max_examples=200)
def test_ladders_and_slopes_partition_nodes(lam):
    nodes = lam.nodes()
    assert len(nodes) == lam.size
    assert all(ladder_of(n) == n.row + n.col - 2 for n in nodes)
    assert all(slope_of(n) == 2 * n.row + n.col // 2 - 2 for n in nodes)


def test_spin_strip_requires_regular():
    with pytest.raises(NotTwoRegular):
        spin_strip((2, 2), 0)
