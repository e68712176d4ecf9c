import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from toriccodes.codes import (
    bipartite_params,
    code_params,
    decompose_degree,
    decomposition_monotone,
    dimension,
    dimension_torus_formula,
    evaluation_matrix,
    generator_basis,
    max_zeros_formula,
    min_distance_oracle,
    min_distance_p1_p2,
    min_distance_torus_formula,
    span_table,
    vanishing_forms_basis,
)
from toriccodes.errors import CapExceededError, DiscrepancyError, PreconditionError
from toriccodes.geometry import (
    characteristic_vectors,
    complete_bipartite_clutter,
    projective_torus,
    toric_set_from_exponents,
)
from toriccodes.gf import field_for_order
from toriccodes.interfaces import CodeParameters
from toriccodes.polyeval import count_zeros_projective


def torus(q, s):
    return projective_torus(field_for_order(q), s)


def bipartite_set(q, k, l):
    return toric_set_from_exponents(field_for_order(q), characteristic_vectors(complete_bipartite_clutter(k, l)))


def test_evaluation_matrix_line(gf3):
    m = evaluation_matrix(projective_torus(gf3, 2), 1)
    assert m.monomials == ((1, 0), (0, 1))
    assert m.entries.tolist() == [[1, 1], [1, 2]]
    assert m.to_text() == "1 1\n1 2\n"
    assert m.to_json() == {"q": 3, "n": 2, "k_rows": 2, "entries": [[1, 1], [1, 2]]}


def test_degree_zero_is_the_repetition_code():
    x = torus(4, 3)
    m = evaluation_matrix(x, 0)
    assert m.shape == (1, 9)
    assert (m.entries == 1).all()
    assert dimension(x, 0) == 1
    assert min_distance_oracle(m) == 9
    assert vanishing_forms_basis(x, 0) == []


def test_evaluation_matrix_preconditions(gf3):
    x = projective_torus(gf3, 3)
    with pytest.raises(PreconditionError):
        evaluation_matrix(x, -1)
    with pytest.raises(CapExceededError):
        evaluation_matrix(x, 2, cap=10)


@pytest.mark.parametrize("q,s,d,expected", [(5, 2, 1, 2), (5, 3, 1, 3), (3, 3, 1, 3), (4, 3, 3, 8)])
def test_dimension(q, s, d, expected):
    assert dimension(torus(q, s), d) == expected


def test_vanishing_forms_on_the_line(gf3):
    x = projective_torus(gf3, 2)
    basis = vanishing_forms_basis(x, 2)
    assert len(basis) == 1
    form = basis[0]
    # a nonzero multiple of t1^2 - t2^2
    assert set(form.terms) == {(2, 0), (0, 2)}
    assert gf3.add(form.terms[(2, 0)], form.terms[(0, 2)]) == 0
    assert count_zeros_projective(form, x) == len(x)


@pytest.mark.parametrize("q,s,d", [(3, 3, 2), (4, 3, 2), (4, 2, 4), (5, 3, 3)])
def test_vanishing_basis_size_and_zeros(q, s, d):
    x = torus(q, s)
    m = evaluation_matrix(x, d)
    basis = vanishing_forms_basis(x, d)
    assert len(basis) + dimension(x, d) == m.shape[0]
    for form in basis:
        assert form.degree == d
        assert count_zeros_projective(form, x) == len(x)


@pytest.mark.parametrize("q,s,d,delta", [(5, 2, 1, 3), (4, 3, 1, 6), (3, 3, 1, 2), (4, 2, 1, 2)])
def test_oracle(q, s, d, delta):
    assert min_distance_oracle(evaluation_matrix(torus(q, s), d)) == delta


def test_oracle_cap_and_workers():
    m = evaluation_matrix(torus(4, 3), 1)
    with pytest.raises(CapExceededError) as info:
        min_distance_oracle(m, cap=10)
    assert info.value.required == 63
    assert min_distance_oracle(m, workers=3) == 6


def test_span_table_lists_every_codeword(gf3):
    m = evaluation_matrix(projective_torus(gf3, 3), 1)
    basis = generator_basis(m)
    table = span_table(gf3, basis)
    assert table.shape == (27, 4)
    assert not table[0].any()
    assert len({tuple(row) for row in table.tolist()}) == 27


@pytest.mark.parametrize("d,q,k,ell", [(1, 3, 0, 1), (5, 4, 2, 1), (4, 3, 3, 1), (7, 5, 2, 1), (6, 5, 1, 3)])
def test_decompose_degree(d, q, k, ell):
    dec = decompose_degree(d, q)
    assert (dec.k, dec.ell) == (k, ell)


@given(d=st.integers(1, 200), q=st.integers(3, 64))
def test_decomposition_is_unique(d, q):
    dec = decompose_degree(d, q)
    assert 1 <= dec.ell <= q - 2 and dec.k >= 0
    assert dec.k * (q - 2) + dec.ell == d


def test_decomposition_needs_q_at_least_3():
    with pytest.raises(PreconditionError, match="q < 3"):
        decompose_degree(1, 2)
    with pytest.raises(PreconditionError):
        decompose_degree(0, 5)


@pytest.mark.parametrize("q,s,d,expected", [(4, 3, 1, 6), (4, 3, 3, 2), (4, 3, 4, 1), (3, 4, 1, 4), (3, 4, 2, 2),
                                            (3, 4, 3, 1), (5, 2, 2, 2)])
def test_min_distance_formula(q, s, d, expected):
    assert min_distance_torus_formula(q, s, d) == expected


def test_min_distance_formula_on_a_point():
    assert min_distance_torus_formula(5, 1, 3) == 1
    assert dimension_torus_formula(5, 1, 3) == 1


@pytest.mark.parametrize("q,s,d,expected", [(3, 2, 1, 2), (5, 3, 1, 3), (4, 3, 3, 8), (3, 4, 3, 8)])
def test_dimension_formula(q, s, d, expected):
    assert dimension_torus_formula(q, s, d) == expected


@pytest.mark.parametrize("q", [3, 4, 5, 7])
@pytest.mark.parametrize("s", [2, 3, 4])
def test_dimension_formula_stabilizes(q, s):
    reg = (s - 1) * (q - 2)
    for d in range(reg, reg + 3):
        assert dimension_torus_formula(q, s, d) == (q - 1) ** (s - 1)
    if reg:
        assert dimension_torus_formula(q, s, reg - 1) < (q - 1) ** (s - 1)


@pytest.mark.parametrize("q,s,d,expected", [(5, 2, 1, 3), (5, 3, 4, 3), (5, 2, 3, 1), (7, 3, 6, 5), (7, 3, 10, 1)])
def test_line_plane_formulas(q, s, d, expected):
    assert min_distance_p1_p2(q, s, d) == expected


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
@pytest.mark.parametrize("s", [2, 3])
def test_line_plane_formulas_match_general(q, s):
    for d in range(1, (s - 1) * (q - 2) + 3):
        assert min_distance_p1_p2(q, s, d) == min_distance_torus_formula(q, s, d)


def test_line_plane_formulas_reject_other_dimensions():
    with pytest.raises(PreconditionError):
        min_distance_p1_p2(5, 4, 1)


def test_max_zeros_formula():
    assert max_zeros_formula(4, 3, 3) == 7
    assert max_zeros_formula(3, 4, 1) == 4
    with pytest.raises(PreconditionError):
        max_zeros_formula(4, 3, 4)


@pytest.mark.parametrize("q,k,l,d,n,dim,delta", [(3, 2, 2, 1, 4, 4, 1), (4, 2, 2, 1, 9, 4, 4), (3, 2, 3, 1, 8, 6, 2),
                                                  (5, 1, 1, 2, 1, 1, 1)])
def test_bipartite_params(q, k, l, d, n, dim, delta):
    params = bipartite_params(q, k, l, d)
    assert (params.n, params.k, params.delta, params.source) == (n, dim, delta, "formula")


@pytest.mark.parametrize("q,k,l", [(3, 2, 2), (4, 2, 2), (3, 2, 3)])
def test_bipartite_product_matches_oracle(q, k, l):
    x = bipartite_set(q, k, l)
    for d in range(1, (k * l - 1) * (q - 2) + 2):
        params = code_params(x, d, bipartite_shape=(k, l))
        expected = bipartite_params(q, k, l, d)
        assert (params.n, params.k, params.delta) == (expected.n, expected.k, expected.delta)
        assert params.source == "both-agree"


def test_code_params_torus():
    params = code_params(torus(3, 3), 1)
    assert (params.n, params.k, params.delta, params.source) == (4, 3, 2, "both-agree")
    line = code_params(torus(4, 2), 1)
    assert (line.n, line.k, line.delta) == (3, 2, 2)
    assert line.mds and line.report()["mds"] is True
    assert line.report()["rate"] == round(2 / 3, 6)


def test_code_params_degree_zero():
    params = code_params(torus(4, 3), 0)
    assert (params.n, params.k, params.delta, params.source) == (9, 1, 9, "oracle")


def test_code_params_non_torus_is_oracle_only():
    params = code_params(bipartite_set(3, 2, 2), 1)
    assert params.source == "oracle"
    assert params.delta_formula is None


def test_code_params_reports_disagreement(monkeypatch):
    monkeypatch.setattr("toriccodes.codes.service.min_distance_torus_formula", lambda q, s, d: 99)
    with pytest.raises(DiscrepancyError) as info:
        code_params(torus(3, 3), 1)
    assert info.value.details["delta_torus"] == 99
    assert info.value.details["delta_oracle"] == 2
    assert info.value.exit_code == 3


def test_code_parameters_validation():
    with pytest.raises(ValidationError):
        CodeParameters(q=3, s=2, d=1, n=2, k=0, delta=1, source="oracle")


@pytest.mark.parametrize("q", [3, 4, 5])
@pytest.mark.parametrize("s", [2, 3])
def test_formula_agrees_with_oracle(q, s):
    x = torus(q, s)
    for d in range(1, (s - 1) * (q - 2) + 2):
        if q ** dimension_torus_formula(q, s, d) > 10 ** 6:
            continue
        params = code_params(x, d)
        assert params.delta == min_distance_torus_formula(q, s, d)
        assert params.k == dimension_torus_formula(q, s, d)
        assert params.delta <= params.n - params.k + 1
        if s == 2 and d <= q - 2:
            assert params.mds


@pytest.mark.slow
@pytest.mark.parametrize("q", [3, 4, 5])
def test_formula_agrees_with_oracle_in_p3(q):
    x = torus(q, 4)
    for d in range(1, 3 * (q - 2) + 2):
        if q ** dimension_torus_formula(q, 4, d) > 10 ** 7:
            continue
        assert code_params(x, d).delta == min_distance_torus_formula(q, 4, d)


@pytest.mark.parametrize("q,s", [(3, 3), (4, 3), (5, 2), (3, 4)])
def test_min_distance_strictly_decreases_then_stays_one(q, s):
    x = torus(q, s)
    deltas = [min_distance_oracle(evaluation_matrix(x, d)) for d in range(1, (s - 1) * (q - 2) + 3)]
    for a, b in zip(deltas, deltas[1:]):
        assert a > b or a == b == 1
    assert deltas[-1] == deltas[-2] == 1


@pytest.mark.parametrize("q", range(3, 10))
@pytest.mark.parametrize("s", range(2, 7))
def test_decomposition_monotone(q, s):
    assert decomposition_monotone(q, s) == []


def test_dimension_is_monotone_and_stabilizes():
    x = bipartite_set(4, 2, 2)
    values = [dimension(x, d) for d in range(6)]
    assert values == sorted(values)
    assert values[-1] == len(x)
    assert np.all(np.diff(values) >= 0)
