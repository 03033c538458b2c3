import json
import random

import pytest

from aztec_spectra.algebra import charpoly
from aztec_spectra.bipoly import U, V
from aztec_spectra.graphs import (
    PARITIES,
    BipartiteGraph,
    SignedGridGraph,
    adjacency_matrix,
    check_product_identities,
    checkerboard,
    checkerboard_charpoly,
    interior_dual,
    is_isomorphic_by_coordinates,
    opposite,
    path_graph,
    product_component,
)
from oracles import board_edges, board_points


def test_path_graph_examples():
    assert path_graph(1).part_sizes == (1, 0) and path_graph(1).edges == []
    assert path_graph(2).biadjacency == ((1,),)
    p4 = path_graph(4)
    assert p4.part_sizes == (2, 2)
    assert p4.biadjacency == ((1, 0), (1, 1))


def test_checkerboard_examples():
    oc = checkerboard(3, 3, "odd")
    assert oc.vertices == ((1, 2), (2, 1), (2, 3), (3, 2))
    assert len(oc.edges) == 4 and oc.sign_counts() == (2, 2)
    assert oc.degrees() == [2, 2, 2, 2]
    ec = checkerboard(3, 3, "even")
    assert ec.order == 5 and ec.sign_counts() == (2, 2)
    centre = ec.index()[(2, 2)]
    assert all(centre in (a, b) for a, b, _ in ec.edges)
    empty = checkerboard(1, 1, "odd")
    assert empty.order == 0 and empty.edges == ()


@pytest.mark.parametrize("parity", PARITIES)
def test_checkerboard_against_coordinate_oracle(parity):
    for m in range(1, 13):
        for n in range(1, 13):
            g = checkerboard(m, n, parity)
            assert list(g.vertices) == board_points(m, n, parity)
            expected = (m * n + 1) // 2 if parity == "even" else m * n // 2
            assert g.order == expected
            got = {(g.vertices[a], g.vertices[b], s) for a, b, s in g.edges}
            assert got == board_edges(m, n, parity)
            for a, b, s in g.edges:
                (xa, ya), (xb, yb) = g.vertices[a], g.vertices[b]
                assert abs(xa - xb) == abs(ya - yb) == 1
                assert s == (xa - xb) * (ya - yb)


def test_checkerboard_rejects_bad_input():
    with pytest.raises(ValueError):
        checkerboard(3, 3, "red")
    with pytest.raises(ValueError):
        checkerboard(-1, 3, "odd")


@pytest.mark.parametrize("parity", PARITIES)
def test_graph_json_round_trip(parity):
    g = checkerboard(4, 5, parity)
    obj = json.loads(json.dumps(g.to_json()))
    assert obj["kind"] == g.kind
    assert obj["edges"][0].keys() == {"a", "b", "sign"}
    assert SignedGridGraph.from_json(obj) == g


def test_graph_json_rejects_tampering():
    obj = checkerboard(3, 3, "odd").to_json()
    obj["edges"][0]["sign"] *= -1
    with pytest.raises(ValueError):
        SignedGridGraph.from_json(obj)


def test_product_component_examples():
    p2, p3 = path_graph(2), path_graph(3)
    e = product_component(p2, p2, "even")
    assert e.part_sizes == (1, 1) and e.edges == [(0, 1)]
    o = product_component(p3, p3, "odd")
    assert o.part_sizes == (2, 2)
    assert o.biadjacency == ((1, 1), (1, 1))
    assert charpoly(adjacency_matrix(o)) == checkerboard_charpoly(3, 3, "odd")


@pytest.mark.parametrize("parity", PARITIES)
def test_product_component_is_the_board(parity):
    for m in range(1, 8):
        for n in range(1, 8):
            assert is_isomorphic_by_coordinates(m, n, parity), (m, n)


def test_product_identities_on_random_pairs():
    rng = random.Random(99)
    for _ in range(30):
        graphs = []
        for _ in range(2):
            p, q = rng.randint(0, 4), rng.randint(0, 4)
            graphs.append(BipartiteGraph.from_biadjacency(
                [[rng.randint(0, 1) for _ in range(q)] for _ in range(p)], q))
        chk = check_product_identities(*graphs)
        assert chk.product_holds and chk.shift_holds


def test_adjacency_examples():
    assert adjacency_matrix(checkerboard(1, 1, "even")).to_lists() == [[0]]
    assert adjacency_matrix(path_graph(2)).to_lists() == [[0, 1], [1, 0]]
    w = adjacency_matrix(checkerboard(3, 3, "even"), "signed-uv")
    flat = [x for r in w.to_lists() for x in r]
    assert flat.count(U) == 4 and flat.count(V) == 4
    assert w.is_symmetric()
    with pytest.raises(ValueError):
        adjacency_matrix(path_graph(2), "signed-uv")


def test_interior_dual_examples():
    d = interior_dual(checkerboard(3, 3, "odd"))
    assert d.face_graph.order == 1 and d.face_graph.kind == "EC"
    assert sorted(d.face_of_edge) == [(0, None)] * 4
    d = interior_dual(checkerboard(4, 4, "even"))
    assert d.face_graph.order == 2 and len(d.face_graph.edges) == 1
    d = interior_dual(checkerboard(5, 5, "odd"))
    assert d.face_graph == checkerboard(3, 3, "even")
    with pytest.raises(ValueError):
        interior_dual(checkerboard(1, 4, "odd"))


@pytest.mark.parametrize("parity", PARITIES)
def test_interior_faces_are_diamonds(parity):
    for m in range(3, 11):
        for n in range(3, 11):
            g = checkerboard(m, n, parity)
            d = interior_dual(g)
            assert d.face_graph == checkerboard(m - 2, n - 2, opposite(parity))
            for bnd in d.face_boundaries:
                signs = sorted(g.edges[e][2] for e in bnd)
                assert signs == [-1, -1, 1, 1]
            # Euler for a connected plane graph, counting the exterior face
            assert g.order - len(g.edges) + d.face_graph.order + 1 == 2
            for k, e in enumerate(d.crossed_edge):
                a, b, _ = d.face_graph.edges[k]
                assert set(d.face_of_edge[e]) == {a, b}
