import itertools

import pytest
from hypothesis import given, strategies as st

from ferrers.core import (
    ABWord, FerrersGraph, Partition, conjugate, graph_from_partition,
    parse_partition, partition_to_word, partitions_of, partitions_up_to,
    word_to_partition, words_up_to,
)
from ferrers.errors import DomainError, ParseError


def test_parse_partition_running_example():
    assert parse_partition("4,4,2").parts == (4, 4, 2)
    assert parse_partition("1").parts == (1,)
    assert parse_partition(" 3, 1 ").parts == (3, 1)


@pytest.mark.parametrize("text, index", [
    ("2,3", 1),
    ("3,0", 1),
    ("3,-1", 1),
    ("4,x,1", 1),
    ("1.5", 0),
])
def test_parse_partition_errors_carry_index(text, index):
    with pytest.raises(ParseError) as info:
        parse_partition(text)
    assert info.value.index == index


def test_parse_partition_rejects_empty():
    with pytest.raises(ParseError):
        parse_partition("")


@pytest.mark.parametrize("lam, dual", [
    ((4, 4, 2), (3, 3, 2, 2)),
    ((1,), (1,)),
    ((3, 1), (2, 1, 1)),
])
def test_conjugate_examples(lam, dual):
    assert conjugate(Partition(lam)).parts == dual


@pytest.mark.parametrize("word, lam", [
    ("babba", (4, 4, 2)),
    ("", (1,)),
    ("ba", (2, 2)),
    ("a", (1, 1)),
    ("b", (2,)),
    ("ab", (2, 1)),
])
def test_word_partition_examples(word, lam):
    assert word_to_partition(ABWord(word)).parts == lam
    assert str(partition_to_word(Partition(lam))) == word


def test_word_rejects_other_letters():
    with pytest.raises(ParseError) as info:
        ABWord("abc")
    assert info.value.index == 2


def test_word_runs_and_counts():
    w = ABWord("babba")
    assert w.runs == (0, 1, 0, 1)
    assert (w.m, w.n) == (3, 2)
    assert ABWord.from_runs(w.runs) == w


def test_conjugate_involution_exhaustive():
    count = 0
    for p in partitions_up_to(12):
        assert conjugate(conjugate(p)) == p
        count += 1
    assert count == sum(1 for k in range(1, 13) for _ in partitions_of(k))


partitions = st.lists(st.integers(1, 40), min_size=1, max_size=25).map(
    lambda xs: Partition(tuple(sorted(xs, reverse=True))))


@given(partitions)
def test_conjugate_involution_random(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).size == p.size


@given(partitions)
def test_word_of_conjugate_is_reverse_swap(p):
    assert partition_to_word(conjugate(p)) == partition_to_word(p).conjugate()


def test_word_round_trip_exhaustive():
    for w in words_up_to(10):
        assert partition_to_word(word_to_partition(w)) == w
    for p in partitions_up_to(10):
        assert word_to_partition(partition_to_word(p)) == p


def test_partition_counts():
    # p(1..10)
    assert [sum(1 for _ in partitions_of(k)) for k in range(1, 11)] == \
        [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_graph_examples():
    g = graph_from_partition(Partition((4, 4, 2)))
    assert g.vertex_count == 7 and g.edge_count == 10
    assert FerrersGraph(Partition((1,))).edges() == [(0, 0)]
    k22 = FerrersGraph(Partition((2, 2)))
    assert sorted(k22.edges()) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def _structural_checks(g: FerrersGraph):
    edges = set(g.edges())
    for i, j in edges:
        for p, q in itertools.product(range(i + 1), range(j + 1)):
            assert (p, q) in edges
    assert (0, g.m) in edges and (g.n, 0) in edges
    assert sum(g.u_degrees()) == sum(g.v_degrees()) == g.partition.size
    deg_u = [sum(1 for e in edges if e[0] == i) for i in range(g.row_count)]
    deg_v = [sum(1 for e in edges if e[1] == j) for j in range(g.col_count)]
    assert tuple(deg_u) == g.u_degrees()
    assert tuple(deg_v) == g.v_degrees()
    # connected
    adj = g.adjacency()
    seen, stack = {0}, [0]
    while stack:
        for b in adj[stack.pop()]:
            if b not in seen:
                seen.add(b)
                stack.append(b)
    assert len(seen) == g.vertex_count


def test_graph_structure_exhaustive():
    for p in partitions_up_to(10):
        _structural_checks(FerrersGraph(p))


def test_transpose_swaps_sides():
    g = FerrersGraph(Partition((4, 4, 2)))
    assert g.transpose().partition.parts == (3, 3, 2, 2)
    assert g.transpose().transpose() == g


def test_vertex_labels():
    g = FerrersGraph(Partition((4, 4, 2)))
    assert g.parse_vertex("u2") == 2
    assert g.parse_vertex("v0") == 3
    assert g.vertex_label(6) == "v3"
    with pytest.raises(DomainError):
        g.parse_vertex("v4")
    with pytest.raises(ParseError):
        g.parse_vertex("w1")


def test_with_edge():
    h = FerrersGraph(Partition((2, 1)))
    assert h.with_edge(1, 1).partition.parts == (2, 2)
    with pytest.raises(DomainError):
        h.with_edge(0, 1)  # already an edge
    with pytest.raises(DomainError):
        FerrersGraph(Partition((3, 1, 1))).with_edge(2, 1)  # breaks monotone closure
    with pytest.raises(DomainError):
        h.with_edge(1, 2)  # v2 does not exist


def test_values_are_immutable():
    p = Partition((2, 1))
    with pytest.raises(AttributeError):
        p.parts = (3,)
    assert hash(p) == hash(Partition((2, 1)))
