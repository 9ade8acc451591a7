import pytest
from hypothesis import given

from conftest import nx_graph, trees
from eds_lab import constructions as fam
from eds_lab.tree import (
    CycleError,
    DisconnectedError,
    DuplicateEdgeError,
    SelfLoopError,
    VertexRangeError,
    bipartition_sizes,
    center,
    degree_distance,
    diameter,
    distance_matrix,
    ecc_connectivity,
    eccentricities,
    eccentricity,
    eds,
    eds_pair_form,
    invariant_record,
    leaves,
    radius,
    total_eccentricity,
    transmission,
    tree_from_edges,
    tree_from_parents,
    wiener,
)

# values worked out by hand from eccentricity and transmission tables
GOLDEN_EDS = [
    ("path:4", 52),
    ("star:4", 33),
    ("spider:1,2,2", 205),
    ("dstar:3,4", 235),
    ("ts:4,5,2", 534),
    ("tprime:4,5,1", 564),
    ("bspider:7,3", 330),
]


@pytest.mark.parametrize("spec,value", GOLDEN_EDS)
def test_golden_eds(spec, value):
    t = fam.build_family(spec)
    assert eds(t) == value
    assert eds_pair_form(t) == value


def test_p4_tables():
    t = fam.path(4)
    assert eccentricities(t) == (3, 2, 2, 3)
    assert [transmission(t, v) for v in range(4)] == [6, 4, 4, 6]
    assert wiener(t) == 10
    assert degree_distance(t) == 6 + 8 + 8 + 6
    assert ecc_connectivity(t) == 3 + 4 + 4 + 3
    assert total_eccentricity(t) == 10
    assert center(t) == (1, 2)
    assert (radius(t), diameter(t)) == (2, 3)


def test_single_vertex():
    t = tree_from_edges(1, [])
    assert eds(t) == 0 and wiener(t) == 0
    rec = invariant_record(t)
    assert rec.leaf_count == 0 and rec.center == (0,) and rec.diameter == 0


def test_two_vertices():
    t = tree_from_edges(2, [(0, 1)])
    assert eds(t) == 2
    assert leaves(t) == (0, 1)


@pytest.mark.parametrize(
    "n,edges,exc",
    [
        (0, [], VertexRangeError),
        (3, [(0, 3), (1, 2)], VertexRangeError),
        (3, [(1, 1), (0, 1)], SelfLoopError),
        (3, [(0, 1), (1, 0)], DuplicateEdgeError),
        (3, [(0, 1), (1, 2), (2, 0)], CycleError),
        (4, [(0, 1), (2, 3)], DisconnectedError),
        (3, [(0, 1)], DisconnectedError),
    ],
)
def test_rejects_non_trees(n, edges, exc):
    with pytest.raises(exc):
        tree_from_edges(n, edges)


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        tree_from_edges(2, [])


def test_bad_vertex_query():
    with pytest.raises(ValueError):
        eccentricity(fam.path(3), 7)


def test_parents_roundtrip():
    t = tree_from_parents([0, 0, 1, 1, 3])
    assert t.edges == ((0, 1), (1, 2), (1, 3), (3, 4))


@given(trees())
def test_pair_form_matches_vertex_form(t):
    assert eds(t) == eds_pair_form(t)


@given(trees(max_n=25))
def test_against_networkx(t):
    nx = pytest.importorskip("networkx")
    g = nx_graph(t)
    ecc = nx.eccentricity(g) if t.n > 1 else {0: 0}
    assert eccentricities(t) == tuple(ecc[v] for v in range(t.n))
    assert wiener(t) == int(nx.wiener_index(g)) if t.n > 1 else True
    lengths = dict(nx.all_pairs_shortest_path_length(g))
    assert distance_matrix(t) == [[lengths[u][v] for v in range(t.n)] for u in range(t.n)]


@given(trees(min_n=2))
def test_structure_facts(t):
    ecc = eccentricities(t)
    assert diameter(t) <= 2 * radius(t)
    assert len(center(t)) in (1, 2)
    # a tree's center lies at the middle of every longest path
    assert radius(t) == (diameter(t) + 1) // 2
    p, q = bipartition_sizes(t)
    assert p <= q and p + q == t.n
    assert total_eccentricity(t) == sum(ecc)
    assert 2 * wiener(t) == sum(transmission(t, v) for v in range(t.n))
    assert leaves(t)


@given(trees())
def test_relabeling_invariance(t):
    perm = list(reversed(range(t.n)))
    u = tree_from_edges(t.n, [(perm[a], perm[b]) for a, b in t.edges])
    assert invariant_record(t).as_dict().keys() == invariant_record(u).as_dict().keys()
    for fn in (eds, wiener, degree_distance, ecc_connectivity, total_eccentricity, diameter, radius):
        assert fn(t) == fn(u)


def test_record_dict_order():
    rec = invariant_record(fam.star(5)).as_dict()
    assert list(rec) == [
        "eds",
        "wiener",
        "degree_distance",
        "ecc_connectivity",
        "total_eccentricity",
        "radius",
        "diameter",
        "center",
        "leaf_count",
        "bipartition",
    ]
    assert rec["eds"] == 4 * 15 and rec["bipartition"] == [1, 4]
