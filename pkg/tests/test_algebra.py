import random

import pytest
import sympy

from aztec_spectra.algebra import (
    BIPOLY,
    INT,
    CharPoly,
    RingMatrix,
    bipoly_eval,
    charpoly,
    charpoly_via_traces,
    det_bareiss,
    det_mod2,
    kronecker,
    poly_from_json,
    poly_to_json,
    reciprocal_transform,
)
from aztec_spectra.bipoly import U, V, BiPoly
from aztec_spectra.errors import InconsistencyError
from aztec_spectra.graphs import adjacency_matrix, checkerboard, path_graph
from oracles import sympy_charpoly, to_sympy


def _random_int_matrix(rng, n, lo=-3, hi=3):
    return RingMatrix.from_rows([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def test_kronecker_examples():
    assert kronecker(RingMatrix.from_rows([[2]]), RingMatrix.from_rows([[3]])).to_lists() == [[6]]
    m = [[1, 2], [3, 4]]
    k = kronecker(RingMatrix.identity(2), RingMatrix.from_rows(m)).to_lists()
    assert k == [[1, 2, 0, 0], [3, 4, 0, 0], [0, 0, 1, 2], [0, 0, 3, 4]]


def test_kronecker_of_p2_spectrum():
    a = adjacency_matrix(path_graph(2))
    assert charpoly(kronecker(a, a)) == CharPoly.from_roots([1, 1, -1, -1])


def test_kronecker_rejects_mixed_rings():
    a = RingMatrix.from_rows([[U]])
    with pytest.raises(TypeError):
        kronecker(a, RingMatrix.from_rows([[1]]))


def test_kronecker_eigenvalues_are_products():
    np = pytest.importorskip("numpy")
    rng = random.Random(11)
    for _ in range(20):
        a = [[0] * 3 for _ in range(3)]
        b = [[0] * 4 for _ in range(4)]
        for mat in (a, b):
            n = len(mat)
            for i in range(n):
                for j in range(i, n):
                    mat[i][j] = mat[j][i] = rng.randint(-2, 2)
        ev = np.sort(np.linalg.eigvalsh(np.array(kronecker(RingMatrix.from_rows(a), RingMatrix.from_rows(b)).to_lists(), float)))
        ea, eb = np.linalg.eigvalsh(np.array(a, float)), np.linalg.eigvalsh(np.array(b, float))
        assert np.allclose(ev, np.sort(np.outer(ea, eb).ravel()), atol=1e-9)


def test_charpoly_examples():
    assert charpoly(adjacency_matrix(path_graph(3))).coeffs == (1, 0, -2, 0)
    ec33 = charpoly(adjacency_matrix(checkerboard(3, 3, "even"), "signed-uv"))
    assert ec33.ring == BIPOLY
    assert ec33.coeffs == (1, 0, -2 * U**2 - 2 * V**2, 0, 0, 0)
    empty = charpoly(RingMatrix.from_rows([]))
    assert empty.coeffs == (1,) and empty.degree == 0


def test_charpoly_random_vs_trace_oracle_and_sympy():
    rng = random.Random(2024)
    for trial in range(200):
        n = rng.randint(1, 8)
        a = _random_int_matrix(rng, n)
        p = charpoly(a)
        assert p.degree == n and p.coeffs[0] == 1
        assert p == charpoly_via_traces(a)
        if trial % 10 == 0:
            assert to_sympy(p) == sympy_charpoly(a.to_lists())


def test_charpoly_bipoly_matrix_vs_sympy():
    rng = random.Random(5)
    for _ in range(10):
        n = rng.randint(1, 5)
        rows = [[rng.choice([0, 1, U, V, U + V, 2 * U * V]) for _ in range(n)] for _ in range(n)]
        p = charpoly(RingMatrix.from_rows(rows))
        assert to_sympy(p) == sympy_charpoly(rows)


def test_trace_oracle_examples():
    p2 = adjacency_matrix(path_graph(2))
    assert charpoly_via_traces(p2).coeffs == (1, 0, -1)
    c4 = adjacency_matrix(checkerboard(3, 3, "odd"))
    assert charpoly_via_traces(c4).coeffs == (1, 0, -4, 0, 0)
    d = RingMatrix.from_rows([[3, 0, 0], [0, -1, 0], [0, 0, 2]])
    assert charpoly_via_traces(d) == CharPoly.from_roots([3, -1, 2])


def test_trace_oracle_limits():
    with pytest.raises(ValueError):
        charpoly_via_traces(RingMatrix.identity(41))
    with pytest.raises(TypeError):
        charpoly_via_traces(RingMatrix.from_rows([[U]]))


def test_trace_oracle_detects_inconsistent_traces(monkeypatch):
    import aztec_spectra.algebra as alg

    monkeypatch.setattr(alg, "power_traces", lambda a, k: [1, 0][:k])
    with pytest.raises(InconsistencyError):
        alg.charpoly_via_traces(RingMatrix.from_rows([[0, 1], [1, 0]]))


def test_bareiss_examples():
    assert det_bareiss(RingMatrix.from_rows([[2, 1], [1, 2]])) == 3
    ec33 = adjacency_matrix(checkerboard(3, 3, "even"))
    assert det_bareiss(ec33.scalar_minus(4)) == 768
    assert det_bareiss(RingMatrix.from_rows([])) == 1


def test_bareiss_vs_sympy_and_constant_term():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(1, 7)
        a = _random_int_matrix(rng, n, -5, 5)
        d = det_bareiss(a)
        assert d == sympy.Matrix(a.to_lists()).det()
        assert d == (-1) ** n * charpoly(a).coefficient(0)


def test_bareiss_needs_row_swap():
    assert det_bareiss(RingMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert det_bareiss(RingMatrix.from_rows([[0, 0], [0, 1]])) == 0


def test_det_mod2_examples():
    assert det_mod2(adjacency_matrix(path_graph(2))) == 1
    assert det_mod2(adjacency_matrix(path_graph(4))) == 1
    assert det_mod2(adjacency_matrix(path_graph(3))) == 0
    assert det_mod2(adjacency_matrix(path_graph(6))) == 1


def test_det_mod2_agrees_with_bareiss_parity():
    rng = random.Random(3)
    for _ in range(100):
        a = _random_int_matrix(rng, rng.randint(1, 9), -4, 4)
        assert det_mod2(a) == det_bareiss(a) % 2


def test_bipoly_eval_examples():
    assert bipoly_eval(CharPoly((1, 0, -1)), 2 * U + 2 * V) == 4 * U**2 + 8 * U * V + 4 * V**2 - 1
    assert bipoly_eval(CharPoly((1, 0)), 2 * U + 2 * V) == 2 * U + 2 * V
    ec35 = charpoly(adjacency_matrix(checkerboard(3, 5, "even"), "signed-uv"))
    expected = 64 * (U + V) ** 4 * (U**2 + 3 * U * V + V**2) * (U**2 + 5 * U * V + V**2)
    assert bipoly_eval(ec35, 2 * U + 2 * V) == expected


def test_reciprocal_transform():
    assert reciprocal_transform(2 * U + 2 * V, 2, 2) == 2 * U * V**2 + 2 * U**2 * V
    assert reciprocal_transform(U**2 + V**2, 2, 2) == U**2 + V**2
    assert reciprocal_transform(1, 0, 0) == 1
    with pytest.raises(ValueError):
        reciprocal_transform(U**3, 2, 0)


def test_charpoly_helpers():
    p = CharPoly.from_roots([0, 0, 2])
    assert p.zero_multiplicity() == 2
    assert p.shift(1).coeffs == (1, -2, 0, 0, 0)
    assert p(2) == 0 and p(3) == 9
    assert p.a_coefficients() == (1, 2, 0, 0)
    w = CharPoly.from_coeffs([1, 0, -(U**2) - V**2])
    assert w.specialize(1, 1).coeffs == (1, 0, -2)
    with pytest.raises(ValueError):
        CharPoly((2, 1))


@pytest.mark.parametrize("p", [
    CharPoly((1, 0, -2, 0)),
    CharPoly.from_coeffs([1, 0, -2 * U**2 - 2 * V**2, 0, 10**30 * U * V]),
    CharPoly.one(),
])
def test_polynomial_json_round_trip(p):
    import json

    obj = json.loads(json.dumps(p.to_json()))
    assert CharPoly.from_json(obj) == p
    assert all(isinstance(t["c"], str) for e in obj["coeffs"] for t in e["terms"])


def test_poly_json_shape():
    obj = poly_to_json([BiPoly({(1, 2): 3}), 0, 5], var="x")
    assert obj == {"var": "x", "coeffs": [
        {"xdeg": 2, "terms": [{"u": 1, "v": 2, "c": "3"}]},
        {"xdeg": 0, "terms": [{"u": 0, "v": 0, "c": "5"}]},
    ]}
    assert poly_from_json(obj) == [BiPoly({(1, 2): 3}), 0, 5]


def test_ring_matrix_validation():
    with pytest.raises(ValueError):
        RingMatrix.from_rows([[1, 2]])
    a = RingMatrix.from_rows([[1, 2], [3, 4]])
    assert a.ring == INT and a.transpose().to_lists() == [[1, 3], [2, 4]]
    assert not a.is_symmetric()
    assert (a @ RingMatrix.identity(2)) == a
    assert a.minor(0).to_lists() == [[4]]
    assert a.trace() == 5
