from __future__ import annotations

import pytest
import sympy as sp

from oracles import q as sq, r_std, skew_inverse_trace_matrix, sym_scalar
from qmads.braidings import (
    HECKE,
    INVOLUTIVE,
    baxterize,
    builtin,
    flip,
    format_rmatrix,
    hecke_residual,
    load_rmatrix,
    parse_rmatrix,
    qybe_residual,
    save_rmatrix,
    skew_inverse,
    skew_inverse_residual,
    standard_hecke,
    validate,
)
from qmads.errors import BirankError, NotSkewInvertible, NotSymmetry, NotYangBaxter, ParseError
from qmads.scalars import mpq, param, q_symbol, register_parameters
from qmads.tensors import TensorOperator, embed_adjacent

q = q_symbol()


def test_flip_validates_as_involutive():
    b = validate(flip(2))
    assert b.kind == INVOLUTIVE
    assert b.skew_inverse == flip(2)
    assert b.trace_matrix == TensorOperator.identity(2, 1)
    assert b.birank_m == 2


def test_standard_hecke_layout_and_kind():
    R = standard_hecke(2)
    dense = R.to_dense()
    expected = [[q, 0, 0, 0], [0, q - 1 / q, 1, 0], [0, 1, 0, 0], [0, 0, 0, q]]
    assert all(dense[i][j] == expected[i][j] for i in range(4) for j in range(4))
    b = validate(R, q)
    assert b.kind == HECKE and b.birank_m == 2


def test_trace_matrix_against_sympy_solver():
    D_ref = skew_inverse_trace_matrix(r_std(2), 2)
    assert sp.simplify(D_ref - sp.diag(sq**-3, sq**-1)) == sp.zeros(2, 2)
    D = builtin("uq-gl", 2).trace_matrix
    for i in range(2):
        for j in range(2):
            assert sp.simplify(sym_scalar(D[i, j]) - D_ref[i, j]) == 0


def test_trace_matrix_n3_frozen():
    D = builtin("uq-gl", 3).trace_matrix
    assert [D[i, i] for i in range(3)] == [q**-5, q**-3, q**-1]
    assert D.nnz() == 3


def test_perturbed_matrix_fails_with_witness():
    R = standard_hecke(2)
    bad = TensorOperator.from_entries(2, 2, {((i // 2, i % 2), (j // 2, j % 2)): v for i, j, v in R.items()} | {((0, 1), (1, 0)): 2})
    with pytest.raises(NotYangBaxter) as exc:
        validate(bad, q)
    assert exc.value.residual
    assert not qybe_residual(bad).is_zero()


def test_zero_operator_is_not_skew_invertible():
    with pytest.raises(NotSkewInvertible):
        skew_inverse(TensorOperator.zero(2, 2))


def test_non_symmetry_rejected():
    # a diagonal braiding that is neither involutive nor Hecke for q = 3
    R = TensorOperator.from_entries(2, 2, {((0, 0), (0, 0)): 2, ((1, 1), (1, 1)): 3, ((0, 1), (1, 0)): 1, ((1, 0), (0, 1)): 1})
    with pytest.raises(NotSymmetry):
        validate(R, mpq(3))


def test_identity_is_not_skew_invertible():
    with pytest.raises(NotSkewInvertible):
        validate(TensorOperator.identity(2, 2))


def test_minus_flip_fails_birank_probe():
    # -P is involutive and skew-invertible, but its tower consists of symmetrizers
    with pytest.raises(BirankError):
        validate(-flip(2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_builtin_hecke_residuals(n):
    b = builtin("uq-gl", n)
    assert qybe_residual(b.R).is_zero()
    assert hecke_residual(b.R, b.q).is_zero()
    assert not skew_inverse_residual(b.R, b.skew_inverse)
    assert b.birank_m == n
    assert b.R @ b.R_inv == TensorOperator.identity(n, 2)


@pytest.mark.parametrize("name,n", [("flip", 2), ("uq-gl", 2), ("uq-gl", 3)])
def test_mirrored_skew_inverse_contraction(name, n):
    """sum_{b,x} Psi[(a,b),(a',x)] R[(x,c),(b,c')] = delta(a,c') delta(c,a')."""
    b = builtin(name, n)
    R, psi = b.R, b.skew_inverse
    for a in range(n):
        for ap in range(n):
            for c in range(n):
                for cp in range(n):
                    acc = sum((psi[(a, bb), (ap, x)] * R[(x, c), (bb, cp)] for bb in range(n) for x in range(n)), mpq(0))
                    assert acc == (1 if (a == cp and c == ap) else 0)


def test_classification_is_exclusive():
    b = builtin("flip", 3)
    assert b.kind == INVOLUTIVE
    assert not hecke_residual(flip(3), mpq(2)).is_zero()


def test_baxterization():
    register_parameters("u", "v")
    u, v = param("u"), param("v")
    assert baxterize(builtin("flip", 2)).g() == 1 / (u - v)
    assert baxterize(builtin("uq-gl", 2)).g() == (q - 1 / q) * u / (u - v)
    c = baxterize(builtin("flip", 2))
    prod = c.at(u, v) @ c.at(v, u)
    assert prod == TensorOperator.scalar(2, 2, 1 - 1 / (u - v) ** 2)


def test_rmatrix_file_round_trip(tmp_path):
    R = standard_hecke(3)
    path = tmp_path / "r.txt"
    save_rmatrix(R, path)
    assert load_rmatrix(path) == R
    assert format_rmatrix(parse_rmatrix(format_rmatrix(R))) == format_rmatrix(R)


@pytest.mark.parametrize("text", [
    "",
    "rmatrix N=x\n",
    "rmatrix N=2\n1 1 1\n",
    "rmatrix N=2\n1 1 1 3 q\n",
    "rmatrix N=2\n1 1 1 1 q\n1 1 1 1 q\n",
])
def test_rmatrix_parse_errors(text):
    with pytest.raises(ParseError):
        parse_rmatrix(text)


def test_specialized_braiding_keeps_invariants():
    b = builtin("uq-gl", 2).specialize({"q": mpq(5, 3)})
    assert not b.is_symbolic
    assert hecke_residual(b.R, b.q).is_zero()
    assert b.trace_matrix[0, 0] == mpq(27, 125)
