"""Independent reference computations used by the tests.

Everything here goes through sympy, never through the qmads free-algebra
or linear-algebra code, so agreement is a genuine cross-check.
"""

from __future__ import annotations

import itertools

import sympy as sp

from qmads.freealg import FreeElement, decode
from qmads.scalars import format_scalar

q = sp.Symbol("q")


def sym_scalar(c) -> sp.Expr:
    return sp.sympify(format_scalar(c).replace("^", "**"), locals={"q": q})


def letter_symbol(a: int, commutative: bool) -> sp.Symbol:
    fam, level, i, j = decode(a)
    name = f"{fam}{level}_{i + 1}{j + 1}"
    return sp.Symbol(name, commutative=commutative)


def abelianize(x: FreeElement) -> sp.Expr:
    """Image of x in the commutative polynomial ring."""
    total = sp.Integer(0)
    for w, c in x.terms.items():
        total += sym_scalar(c) * sp.Mul(*[letter_symbol(a, True) for a in w])
    return sp.expand(total)


def to_noncommutative(x: FreeElement) -> sp.Expr:
    total = sp.Integer(0)
    for w, c in x.terms.items():
        total += sym_scalar(c) * sp.Mul(*[letter_symbol(a, False) for a in w])
    return sp.expand(total)


def commuting_matrix(n: int, family: str = "l") -> sp.Matrix:
    return sp.Matrix(n, n, lambda i, j: sp.Symbol(f"{family}0_{i + 1}{j + 1}"))


def noncommuting_matrix(n: int, family: str = "l") -> sp.Matrix:
    return sp.Matrix(n, n, lambda i, j: sp.Symbol(f"{family}0_{i + 1}{j + 1}", commutative=False))


def r_std(n: int) -> sp.Matrix:
    """Standard Hecke symmetry in the row convention R[(a,b),(c,d)]."""
    R = sp.zeros(n * n, n * n)
    for i in range(n):
        R[i * n + i, i * n + i] = q
        for j in range(n):
            if i != j:
                R[i * n + j, j * n + i] = 1
            if i < j:
                R[i * n + j, i * n + j] = q - 1 / q
    return R


def skew_inverse_trace_matrix(R: sp.Matrix, n: int) -> sp.Matrix:
    """Solve sum_{b,x} R[(a,b),(a',x)] Psi[(x,c),(b,c')] = delta(a,c') delta(c,a')
    with sympy and return D = Tr_(2) Psi."""
    psi = {k: sp.Symbol(f"psi_{'_'.join(map(str, k))}") for k in itertools.product(range(n), repeat=4)}
    eqs = []
    for a, ap, c, cp in itertools.product(range(n), repeat=4):
        lhs = sum(R[a * n + b, ap * n + x] * psi[(x, c, b, cp)] for b in range(n) for x in range(n))
        eqs.append(sp.Eq(lhs, 1 if (a == cp and c == ap) else 0))
    sol = sp.solve(eqs, list(psi.values()), dict=True)[0]
    D = sp.zeros(n, n)
    for x, b in itertools.product(range(n), repeat=2):
        D[x, b] = sp.simplify(sum(sol[psi[(x, c, b, c)]] for c in range(n)))
    return D


def nc_monomial_coefficients(expr: sp.Expr) -> dict:
    """{ordered tuple of symbols: coefficient} for an expanded noncommutative polynomial."""
    out: dict = {}
    for term in sp.Add.make_args(sp.expand(expr)):
        c, nc = term.args_cnc()
        key = []
        for f in nc:
            if isinstance(f, sp.Pow):
                key.extend([f.base] * int(f.exp))
            else:
                key.append(f)
        coeff = sp.Mul(*c)
        out[tuple(key)] = out.get(tuple(key), 0) + coeff
    return {k: sp.simplify(v) for k, v in out.items() if sp.simplify(v) != 0}


def kron_nc(A: sp.Matrix, B: sp.Matrix) -> sp.Matrix:
    """Kronecker product keeping the left factor's entries on the left."""
    ra, ca = A.shape
    rb, cb = B.shape
    M = sp.zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            for k in range(rb):
                for l in range(cb):
                    M[i * rb + k, j * cb + l] = A[i, j] * B[k, l]
    return M
