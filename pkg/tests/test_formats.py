import pytest
from hypothesis import given

from conftest import nx_graph, trees
from eds_lab import constructions as fam
from eds_lab.formats import (
    FormatError,
    from_edgelist,
    from_graph6,
    graph6_edges,
    read_tree_text,
    to_edgelist,
    to_graph6,
)
from eds_lab.tree import CycleError, tree_from_edges


def test_edgelist_text():
    assert to_edgelist(fam.path(3)) == "3\n0 1\n1 2\n"


@given(trees())
def test_edgelist_roundtrip(t):
    assert from_edgelist(to_edgelist(t)) == t


@given(trees(max_n=70))
def test_graph6_roundtrip(t):
    assert from_graph6(to_graph6(t)) == t


@given(trees(max_n=70))
def test_graph6_matches_networkx(t):
    nx = pytest.importorskip("networkx")
    ours = to_graph6(t)
    theirs = nx.to_graph6_bytes(nx_graph(t), header=False).decode().strip()
    assert ours == theirs
    back = nx.from_graph6_bytes(ours.encode())
    assert sorted(tuple(sorted(e)) for e in back.edges()) == list(t.edges)


def test_graph6_known_strings():
    assert to_graph6(fam.path(4)) == "Ch"
    assert to_graph6(tree_from_edges(1, [])) == "@"
    assert from_graph6(">>graph6<<Ch") == fam.path(4)


def test_graph6_large_header():
    t = fam.path(100)
    s = to_graph6(t)
    assert s[0] == "~" and len(s) == 4 + (100 * 99 // 2 + 5) // 6
    assert from_graph6(s) == t


@pytest.mark.parametrize("bad", ["", "C", "Chh", "C\x10", "~~"])
def test_graph6_malformed(bad):
    with pytest.raises(FormatError):
        graph6_edges(bad)


def test_graph6_cycle_is_not_a_tree():
    with pytest.raises(CycleError):
        from_graph6("Bw")


@pytest.mark.parametrize("bad", ["x y\n", "3\n0 1\n1\n", "3\n0 a\n"])
def test_edgelist_malformed(bad):
    with pytest.raises(FormatError):
        from_edgelist(bad)


def test_read_tree_text_dispatch():
    assert read_tree_text("4\n0 1\n1 2\n2 3\n") == fam.path(4)
    assert read_tree_text("Ch\n") == fam.path(4)
    with pytest.raises(FormatError):
        read_tree_text("not a tree at all")
