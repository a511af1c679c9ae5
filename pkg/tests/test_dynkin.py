import pytest
from hypothesis import given, strategies as st

import oracles
from envlat.dynkin import (Kind, NodeSet, build_diagram, classify_subdiagram, component_masks,
                           connected_components, end_nodes, leaf_nodes, parse_diagram)
from envlat.errors import InvalidInputError

ALL_SMALL = [("A", n) for n in range(1, 7)] + [("B", n) for n in range(2, 6)] + \
            [("C", n) for n in range(3, 6)] + [("D", n) for n in range(4, 7)] + \
            [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]


@pytest.mark.parametrize("kind,rank", ALL_SMALL)
def test_standard_diagram_is_a_tree(kind, rank):
    d = build_diagram(kind, rank)
    g = oracles.diagram_graph(d)
    assert g.number_of_nodes() == rank
    assert g.number_of_edges() == rank - 1
    assert max(dict(g.degree).values(), default=0) <= 3
    assert len(oracles.components(d, range(1, rank + 1))) == 1


@pytest.mark.parametrize("kind,rank", [("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("B", 1), ("C", 2), ("A", 0)])
def test_rank_out_of_range(kind, rank):
    with pytest.raises(InvalidInputError):
        build_diagram(kind, rank)


def test_parse_is_case_insensitive():
    assert parse_diagram("a4") == build_diagram(Kind.A, 4)
    assert parse_diagram(" F4 ").name == "F4"
    with pytest.raises(InvalidInputError):
        parse_diagram("Q3")
    with pytest.raises(InvalidInputError, match="rank >= 4"):
        parse_diagram("D3")


def test_cartan_matrices():
    assert build_diagram("B", 2).cartan_matrix == ((2, -2), (-1, 2)) or \
        build_diagram("B", 2).cartan_matrix == ((2, -1), (-2, 2))
    # B and C are transposes of each other
    b3, c3 = build_diagram("B", 3).cartan_matrix, build_diagram("C", 3).cartan_matrix
    assert tuple(zip(*b3)) == c3
    g2 = build_diagram("G", 2).cartan_matrix
    assert sorted((g2[0][1], g2[1][0])) == [-3, -1]


def test_e_and_d_branching():
    e6 = build_diagram("E", 6)
    assert e6.degree(4) == 3 and e6.adjacent(2, 4)
    d5 = build_diagram("D", 5)
    assert d5.degree(3) == 3 and d5.adjacent(3, 5) and not d5.adjacent(4, 5)


def test_leaf_nodes():
    assert leaf_nodes(build_diagram("A", 4)).sorted() == (1, 4)
    assert leaf_nodes(build_diagram("D", 4)).sorted() == (1, 3, 4)
    assert leaf_nodes(build_diagram("E", 7)).sorted() == (1, 2, 7)
    assert leaf_nodes(build_diagram("A", 1)).sorted() == (1,)


def test_end_nodes_relative_to_subset():
    d = build_diagram("A", 5)
    assert end_nodes(d, d.subset([2, 3])).sorted() == (2, 3)
    assert end_nodes(d, d.nodes).sorted() == ()


def test_nodeset_algebra():
    a, b = NodeSet.of(4, [1, 2]), NodeSet.of(4, [2, 3])
    assert (a | b).sorted() == (1, 2, 3)
    assert (a & b).sorted() == (2,)
    assert (a - b).sorted() == (1,)
    assert a.complement().sorted() == (3, 4)
    assert repr(a) == "{1,2}" and repr(NodeSet.empty(3)) == "{}"
    with pytest.raises(InvalidInputError):
        NodeSet.of(3, [4])


@pytest.mark.parametrize("kind,rank", [("A", 5), ("D", 5), ("E", 6), ("F", 4), ("B", 4)])
def test_components_match_networkx(kind, rank):
    d = build_diagram(kind, rank)
    for K in oracles.subsets(range(1, rank + 1)):
        ours = {frozenset(c) for c in connected_components(d, d.subset(K))}
        assert ours == set(oracles.components(d, K))


@given(st.integers(0, (1 << 8) - 1))
def test_component_masks_partition_e8(mask):
    d = build_diagram("E", 8)
    parts = component_masks(d, mask)
    total = 0
    for p in parts:
        assert total & p == 0
        total |= p
    assert total == mask


@pytest.mark.parametrize("kind,rank,K,expected", [
    ("B", 4, [2, 3, 4], [(Kind.B, 3)]),
    ("C", 4, [2, 3, 4], [(Kind.C, 3)]),
    ("B", 4, [1, 2], [(Kind.A, 2)]),
    ("B", 3, [2, 3], [(Kind.B, 2)]),
    ("F", 4, [1, 2, 3], [(Kind.B, 3)]),
    ("F", 4, [2, 3, 4], [(Kind.C, 3)]),
    ("E", 8, [1, 2, 3, 4, 5, 6, 7], [(Kind.E, 7)]),
    ("E", 8, [2, 3, 4, 5, 6, 7, 8], [(Kind.D, 7)]),
    ("E", 6, [2, 3, 4, 5], [(Kind.D, 4)]),
    ("D", 5, [1, 4], [(Kind.A, 1), (Kind.A, 1)]),
    ("G", 2, [1, 2], [(Kind.G, 2)]),
])
def test_classify_subdiagram(kind, rank, K, expected):
    d = build_diagram(kind, rank)
    assert sorted(classify_subdiagram(d, d.subset(K))) == sorted(expected)
