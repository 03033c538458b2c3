import math

import numpy as np
import pytest

from aztec_spectra.algebra import CharPoly
from aztec_spectra.graphs import adjacency_matrix, checkerboard, checkerboard_charpoly, path_graph
from aztec_spectra.spectral import (
    IdentityReport,
    aztec_count_closed_form,
    checkerboard_product_spectrum,
    ec_odd_closed_form,
    expand_roots,
    path_eigenvalues,
    relative_error,
    verify_eq5,
    verify_eq8,
    verify_eq13,
)
from aztec_spectra.trees import spanning_tree_count


def _numeric_eigs(rows):
    if not rows:
        return np.array([])
    return np.sort(np.linalg.eigvalsh(np.array(rows, dtype=float)))[::-1]


def test_path_eigenvalue_examples():
    assert path_eigenvalues(1).as_floats() == [0.0]
    assert path_eigenvalues(2).as_floats() == pytest.approx([1, -1], abs=1e-15)
    assert path_eigenvalues(3).as_floats() == pytest.approx([math.sqrt(2), 0, -math.sqrt(2)], abs=1e-15)
    with pytest.raises(ValueError):
        path_eigenvalues(0)


def test_path_eigenvalues_against_numpy():
    for m in range(1, 51):
        ev = _numeric_eigs(adjacency_matrix(path_graph(m)).to_lists())
        assert np.allclose(path_eigenvalues(m).as_floats(), ev, atol=1e-10)


def test_product_spectrum_examples():
    assert sorted(checkerboard_product_spectrum(2, 2).as_floats()) == pytest.approx([-1, -1, 1, 1])
    s33 = checkerboard_product_spectrum(3, 3).as_floats()
    assert sorted(s33) == pytest.approx(sorted([2, 0, -2, 0, 0, 0, -2, 0, 2]), abs=1e-30)
    assert checkerboard_product_spectrum(1, 1).as_floats() == [0.0]


def test_product_spectrum_is_union_spectrum():
    for m in range(1, 9):
        for n in range(1, 9):
            ev = np.concatenate([
                _numeric_eigs(adjacency_matrix(checkerboard(m, n, p)).to_lists())
                for p in ("even", "odd")
            ])
            spec = checkerboard_product_spectrum(m, n)
            assert len(spec) == m * n
            assert np.allclose(spec.as_floats(), np.sort(ev)[::-1], atol=1e-9), (m, n)


def test_cosine_product_check_examples():
    exact = checkerboard_charpoly(3, 3, "even") * checkerboard_charpoly(3, 3, "odd")
    assert exact.coeffs == (1, 0, -8, 0, 16, 0, 0, 0, 0, 0)
    assert verify_eq5(3, 3).passed
    assert verify_eq5(1, 1, tol=0).passed
    assert verify_eq5(5, 5).passed
    with pytest.raises(ValueError):
        verify_eq5(13, 2)


def test_cosine_product_check_whole_supported_range():
    # sizes 11 and 12 need more than the base 50 digits
    bad = [(m, n) for m in range(1, 13) for n in range(1, 13) if not verify_eq5(m, n).passed]
    assert bad == []


def test_cosine_product_check_detects_a_wrong_spectrum(monkeypatch):
    import aztec_spectra.spectral as sp
    from aztec_spectra.spectral import SpectrumList

    real = sp.checkerboard_product_spectrum
    monkeypatch.setattr(sp, "checkerboard_product_spectrum",
                        lambda m, n: SpectrumList.of([v * 1.0001 for v in real(m, n).values]))
    assert not sp.verify_eq5(3, 3).passed


def test_aztec_closed_form_examples():
    assert float(aztec_count_closed_form(1)) == 4
    assert relative_error(768, aztec_count_closed_form(2)) < 1e-30
    assert relative_error(18_170_880, aztec_count_closed_form(3)) < 1e-30
    for n in range(1, 7):
        rep = verify_eq8(n)
        assert rep.passed and rep.max_rel_err < 1e-30


def test_aztec_closed_form_against_kirchhoff():
    for n in range(1, 4):
        exact = spanning_tree_count(checkerboard(2 * n + 1, 2 * n + 1, "odd"))
        assert verify_eq8(n, exact=exact).passed


def test_closed_form_examples():
    c = ec_odd_closed_form(3, 3)
    assert c.zero_multiplicity == 3
    assert [float(r) for r in c.nonzero_roots] == pytest.approx([2, -2])
    c = ec_odd_closed_form(1, 1)
    assert (c.zero_multiplicity, len(c.nonzero_roots)) == (1, 0)
    with pytest.raises(ValueError):
        ec_odd_closed_form(2, 3)


def test_closed_form_3_5_reconstructs_exact_polynomial():
    # x^4 (x^2 - 6)(x^2 - 2); the sign of the last factor follows from the
    # exact weighted charpoly at u = v = 1
    expected = CharPoly.x_power(4) * CharPoly((1, 0, -6)) * CharPoly((1, 0, -2))
    assert checkerboard_charpoly(3, 5, "even") == expected
    coeffs = ec_odd_closed_form(3, 5).coefficients()
    assert [round(float(c)) for c in coeffs] == list(expected.coeffs)
    wrong = CharPoly.x_power(4) * CharPoly((1, 0, -6)) * CharPoly((1, 0, 2))
    assert checkerboard_charpoly(3, 5, "even") != wrong


def test_odd_board_closed_form_all_odd_sizes():
    for m in range(1, 10, 2):
        for n in range(1, 10, 2):
            assert verify_eq13(m, n).passed, (m, n)


def test_relative_error_floor():
    assert relative_error(0, 1e-13) == pytest.approx(1e-13)
    assert relative_error(100, 101) == pytest.approx(1 / 101)


def test_expand_roots():
    assert [int(c) for c in expand_roots([1, 2])] == [1, -3, 2]


def test_identity_report_json_round_trip():
    import json

    rep = verify_eq5(4, 3)
    obj = json.loads(json.dumps(rep.to_json()))
    assert obj["pass"] is True
    assert IdentityReport.from_json(obj) == rep
