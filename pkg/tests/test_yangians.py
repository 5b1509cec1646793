from __future__ import annotations

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from oracles import abelianize
from qmads.braidings import builtin
from qmads.errors import InsufficientTruncation
from qmads.freealg import FreeElement, decode, letter, membership, pbw_normal_form
from qmads.scalars import mpq, q_symbol
from qmads.yangians import (
    TruncatedMatrixSeries,
    ch_series,
    current_relations,
    elementary_symmetric_series,
    quantum_power_series,
    shift_series,
    verify_ch_yangian,
)

q = q_symbol()
u = sp.Symbol("u")


def lv(i, j, level, fam="l"):
    return FreeElement.generator(letter(fam, i - 1, j - 1, level))


def _scalar_series(D):
    return [FreeElement.one()] + [lv(1, 1, k) for k in range(1, D + 1)]


def _sympy_series(coeffs, D):
    return sum(abelianize(c) * u**-i for i, c in enumerate(coeffs[: D + 1]))


def _series_coeffs(expr, D):
    w = sp.Symbol("w")
    e = sp.series(expr.subs(u, 1 / w), w, 0, D + 1).removeO()
    return [sp.expand(e.coeff(w, i)) for i in range(D + 1)]


@pytest.mark.parametrize("c", [-2, -1, 1, 3])
def test_additive_shift_matches_sympy(c):
    D = 4
    f = _scalar_series(D)
    got = shift_series(f, additive=c)
    expected = _series_coeffs(_sympy_series(f, D).subs(u, u - c), D)
    for o in range(D + 1):
        assert sp.expand(abelianize(got[o]) - expected[o]) == 0


def test_multiplicative_shift():
    f = _scalar_series(3)
    got = shift_series(f, multiplicative=q**2)
    assert got[0] == f[0]
    assert got[2] == f[2] * q**-4
    assert got[3] == f[3] * q**-6


@given(st.integers(-5, 5))
def test_shift_inverse(c):
    f = _scalar_series(4)
    assert shift_series(shift_series(f, additive=c), additive=-c) == f


def test_shift_rejects_two_kinds():
    with pytest.raises(ValueError):
        shift_series(_scalar_series(2), additive=1, multiplicative=q)


def test_alphabet_size():
    p = current_relations(builtin("flip", 2), d_rel=2)
    assert len(p.relations.alphabet) == 8


@pytest.mark.parametrize("name", ["flip", "uq-gl"])
@pytest.mark.parametrize("kind", ["braided", "rtt"])
def test_relations_have_no_constant_term(name, kind):
    """With L(u) = I every relation vanishes."""
    p = current_relations(builtin(name, 2), kind=kind, d_rel=2)
    assert p.relations.relations
    for r in p.relations.relations:
        assert () not in r.terms


def _evaluation(x, sign=1):
    """l^(1)_ij -> sign * m_ij, higher levels -> 0."""
    out = FreeElement.zero()
    for w, c in x.terms.items():
        t = FreeElement.scalar(c)
        for a in w:
            _, level, i, j = decode(a)
            if level != 1:
                t = FreeElement.zero()
                break
            t = t * FreeElement.generator(letter("m", i, j)) * sign
        out = out + t
    return out


@pytest.mark.parametrize("kind", ["braided", "rtt"])
@pytest.mark.parametrize("n", [2, 3])
def test_evaluation_map_into_ugl(kind, n):
    """L(u) = I + M u^-1 is a representation of the rational relations."""
    p = current_relations(builtin("flip", n), kind=kind, d_rel=3)
    assert all(pbw_normal_form(_evaluation(r)).is_zero() for r in p.relations.relations)
    assert not all(pbw_normal_form(_evaluation(r, -1)).is_zero() for r in p.relations.relations)


def test_ch_series_under_evaluation():
    p = current_relations(builtin("flip", 2), d_rel=3)
    S = ch_series(p, 3)
    for r in range(2):
        for c in range(2):
            for x in S.entry(r, c):
                assert pbw_normal_form(_evaluation(x)).is_zero()


def test_quantum_power_first_order():
    p = current_relations(builtin("flip", 2), d_rel=2)
    L2 = quantum_power_series(p, 2, 2)
    L = p.series(2)
    assert L2.coeffs[1] == L.coeffs[1].scale(mpq(2))
    h = current_relations(builtin("uq-gl", 2), d_rel=2)
    H2 = quantum_power_series(h, 2, 2)
    assert H2.coeffs[1] == h.series(2).coeffs[1].scale(q**2 + 1)


def test_e1_order_zero_is_trace_of_identity():
    p = current_relations(builtin("uq-gl", 2), d_rel=2)
    e1 = elementary_symmetric_series(p, 1, 2)
    assert e1[0] == FreeElement.scalar(q**-3 + q**-1)
    f = current_relations(builtin("flip", 3), d_rel=2)
    assert elementary_symmetric_series(f, 1, 2)[0] == FreeElement.scalar(3)


def test_series_product_truncates():
    A = TruncatedMatrixSeries.generating(2, "l", 2)
    B = A @ A
    assert B.order == 2 and len(B.coeffs) == 3
    assert B.coeffs[1] == A.coeffs[1].scale(mpq(2))


@pytest.mark.parametrize("name", ["flip", "uq-gl"])
def test_ch_yangian(name):
    p = current_relations(builtin(name, 2), d_rel=3)
    rep = verify_ch_yangian(p, 3, 4)
    assert rep.passed
    assert len(rep.items) == 16


def test_ch_yangian_mutation():
    p = current_relations(builtin("uq-gl", 2), d_rel=2)
    S = ch_series(p, 2)
    bad = S.entry(0, 0)[2] + lv(1, 2, 1, "l") * lv(2, 1, 1, "l")
    assert not membership(bad, p.ideal, 2).in_ideal


def test_insufficient_truncation():
    p = current_relations(builtin("flip", 2), d_rel=2)
    with pytest.raises(InsufficientTruncation):
        verify_ch_yangian(p, 3, 2)
    with pytest.raises(InsufficientTruncation):
        verify_ch_yangian(p, 3, 4)


def test_unknown_kind():
    with pytest.raises(ValueError):
        current_relations(builtin("flip", 2), kind="twisted")
