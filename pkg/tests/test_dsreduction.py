from __future__ import annotations

import pytest

from qmads.algebras import present
from qmads.braidings import builtin
from qmads.charpoly import characteristic_polynomial, elementary_symmetric, substitute
from qmads.dsreduction import (
    CONSTANT_ROW,
    SERIES_COLUMN,
    canonical_form,
    canonical_form_series,
    krylov_matrix,
    krylov_series,
    random_vectors,
    shift_operator_conjugate,
    similarity_residual_constant,
    vector,
    verify_similarity_constant,
    verify_similarity_yangian,
)
from qmads.errors import ZeroVector
from qmads.freealg import FreeElement, letter, membership, row_vector_times
from qmads.scalars import mpq, q_symbol
from qmads.yangians import current_relations, elementary_symmetric_series, shift_series

q = q_symbol()


@pytest.fixture(scope="module")
def re2():
    return present("RE", builtin("uq-gl", 2))


def test_canonical_form_re(re2):
    cf = canonical_form(re2)
    assert cf.variant == CONSTANT_ROW and cf.m == 2
    assert cf.a(1) == elementary_symmetric(re2, 1).value * q
    assert cf.a(2) == elementary_symmetric(re2, 2).value * (-(q**2))
    grid = cf.grid()
    assert grid[0] == [FreeElement.zero(), FreeElement.one()]
    assert grid[1] == [cf.a(2), cf.a(1)]


def test_canonical_form_series_rational():
    p = current_relations(builtin("flip", 2), d_rel=2)
    cf = canonical_form_series(p, 2)
    assert cf.variant == SERIES_COLUMN
    e1 = elementary_symmetric_series(p, 1, 2)
    e2 = elementary_symmetric_series(p, 2, 2)
    assert cf.a(1) == shift_series(e1, additive=-1)
    assert cf.a(2) == [-x for x in shift_series(e2, additive=-1)]
    g = cf.grid()
    assert g[1][0][0] == FreeElement.one() and g[0][1] == cf.a(2)


def test_canonical_form_series_hecke():
    p = current_relations(builtin("uq-gl", 2), d_rel=2)
    cf = canonical_form_series(p, 2)
    e1 = elementary_symmetric_series(p, 1, 2)
    assert cf.a(1) == [x * q for x in shift_series(e1, multiplicative=q**2)]


def test_krylov_rows(re2):
    K = krylov_matrix(re2, [1, 0])
    assert K.body[0] == [FreeElement.one(), FreeElement.zero()]
    l = lambda i, j: FreeElement.generator(letter("l", i - 1, j - 1))
    assert K.body[1] == [l(1, 1), l(1, 2)]


def test_krylov_columns():
    p = current_relations(builtin("flip", 2), d_rel=2)
    K = krylov_series(p, 2, [0, 1])
    L = p.series(2)
    assert K.body[0][0][0] == FreeElement.zero() and K.body[1][0][0] == FreeElement.one()
    assert K.body[0][1] == L.entry(0, 1)


def test_vector_modes():
    v = vector(2)
    assert [str(x) for x in v] == ["v1", "v2"]
    assert vector(2, [1, "1/2"]) == [mpq(1), mpq(1, 2)]
    with pytest.raises(ZeroVector):
        vector(3, [0, 0, 0])
    with pytest.raises(ValueError):
        vector(2, [1])


def test_shift_operator_conjugate():
    f = [FreeElement.one(), FreeElement.generator(letter("l", 0, 0, 1)), FreeElement.generator(letter("l", 0, 0, 2))]
    assert shift_operator_conjugate(f, "additive_exp") == shift_series(f, additive=-1)
    assert shift_operator_conjugate(f, "multiplicative_q", q)[2] == f[2] * q**-4
    with pytest.raises(ValueError):
        shift_operator_conjugate(f, "multiplicative_q")
    with pytest.raises(ValueError):
        shift_operator_conjugate(f, "other")


def test_first_rows_vanish_exactly(re2):
    res = similarity_residual_constant(re2)
    assert all(x.is_zero() for x in res[0])


def test_last_row_is_contracted_polynomial(re2):
    v = vector(2, [2, 3])
    res = similarity_residual_constant(re2, [2, 3])
    Q = substitute(re2, characteristic_polynomial(re2))
    vQ = row_vector_times([FreeElement.scalar(x) for x in v], Q)
    for x, y in zip(res[-1], vQ):
        assert membership(x - y, re2.ideal).in_ideal


@pytest.mark.parametrize("kind,b", [("RE", "flip"), ("RE", "uq-gl"), ("mRE", "uq-gl"), ("UglN", "flip")])
def test_similarity_constant(kind, b):
    a = present(kind, builtin(b, 2))
    rep = verify_similarity_constant(a)
    assert rep.passed and len(rep.items) == 4


def test_similarity_random_vectors(re2):
    for v in random_vectors(2, seed=3):
        assert verify_similarity_constant(re2, v).passed


def test_similarity_wrong_canonical_form_fails(re2):
    res = similarity_residual_constant(re2)
    extra = FreeElement.generator(letter("l", 0, 1))
    bad = res[-1][0] + extra * FreeElement.generator(letter("l", 1, 0))
    assert not membership(bad, re2.ideal).in_ideal


def test_rtt_rejected():
    with pytest.raises(ValueError):
        verify_similarity_constant(present("RTT", builtin("flip", 2)))


@pytest.mark.parametrize("name", ["flip", "uq-gl"])
def test_similarity_yangian(name):
    p = current_relations(builtin(name, 2), d_rel=3)
    rep = verify_similarity_yangian(p, "symbolic", 3, 3)
    assert rep.passed


def test_random_vectors_deterministic():
    assert random_vectors(3, 7) == random_vectors(3, 7)
    assert all(any(x) for x in random_vectors(3, 7))


def test_shift_examples():
    one = [FreeElement.one(), FreeElement.zero(), FreeElement.zero(), FreeElement.zero()]
    assert shift_operator_conjugate(one, "additive_exp") == one
    assert shift_operator_conjugate(one, "multiplicative_q", q) == one
    inv_u = [FreeElement.zero(), FreeElement.one(), FreeElement.zero(), FreeElement.zero()]
    # (u+1)^-1 = u^-1 - u^-2 + u^-3 - ...
    got = shift_operator_conjugate(inv_u, "additive_exp")
    assert got == [FreeElement.zero(), FreeElement.one(), -FreeElement.one(), FreeElement.one()]
    got = shift_operator_conjugate(inv_u, "multiplicative_q", q)
    assert got[1] == FreeElement.scalar(q**-2) and got[2].is_zero()
