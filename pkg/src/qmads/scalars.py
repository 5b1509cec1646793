"""Exact scalars: Q, the rational function field Q(q), and extensions of Q(q)
by central commuting parameters (vector components, the spectral variable t).

Two concrete types carry scalars through the library:

* ``gmpy2.mpq`` for plain rationals (the fast path used after q has been
  specialized to a number), and
* :class:`RationalFunction` for everything involving indeterminates.

Both support ``+ - * /``, ``==`` and truthiness (``not x`` is the zero test),
so downstream code is written once against "a field element".
"""

from __future__ import annotations

import ast
import threading
from typing import Mapping, Union

import flint
import gmpy2

from .errors import GenericityError, ParseError, PoleError

mpq = gmpy2.mpq

# Indeterminate names. The list only ever grows, so the flint context for the
# first k names is a prefix of every later one and lifting pads exponents.
_NAMES: list[str] = ["q", "t"]
_LOCK = threading.Lock()


def _context(nvars: int) -> flint.fmpq_mpoly_ctx:
    return flint.fmpq_mpoly_ctx.get(tuple(_NAMES[:nvars]), "deglex")


def register_parameters(*names: str) -> None:
    """Adjoin central commuting parameters (idempotent)."""
    with _LOCK:
        for name in names:
            if not name.isidentifier():
                raise ValueError(f"invalid parameter name {name!r}")
            if name not in _NAMES:
                _NAMES.append(name)


def parameter_names() -> tuple[str, ...]:
    return tuple(_NAMES)


def _lift(p: flint.fmpq_mpoly, nvars: int) -> flint.fmpq_mpoly:
    ctx = p.context()
    if ctx.nvars() == nvars:
        return p
    pad = (0,) * (nvars - ctx.nvars())
    return _context(nvars).from_dict({e + pad: c for e, c in p.to_dict().items()})


def _to_fmpq(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    if isinstance(x, int):
        return flint.fmpq(x)
    x = mpq(x)
    return flint.fmpq(int(x.numerator), int(x.denominator))


class RationalFunction:
    """An element of Q(q, params) stored as a reduced fraction.

    Canonical form: gcd(num, den) = 1 and the leading coefficient of ``den``
    in deglex order is 1, so equal values have equal representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        if not isinstance(num, flint.fmpq_mpoly):
            num = _context(len(_NAMES)).constant(_to_fmpq(num))
        if den is None:
            den = num.context().constant(1)
            _reduced = True
        elif not isinstance(den, flint.fmpq_mpoly):
            den = num.context().constant(_to_fmpq(den))
        if num.context() is not den.context():
            n = max(num.context().nvars(), den.context().nvars())
            num, den = _lift(num, n), _lift(den, n)
        if not _reduced:
            if den.is_zero():
                raise PoleError("zero denominator")
            if num.is_zero():
                den = den.context().constant(1)
            else:
                if not den.is_constant():
                    g = num.gcd(den)
                    if not g.is_one():
                        num = num / g
                        den = den / g
                lc = den.leading_coefficient()
                if lc != 1:
                    num = num / lc
                    den = den / lc
        self.num = num
        self.den = den

    # construction helpers -------------------------------------------------
    @classmethod
    def variable(cls, name: str) -> "RationalFunction":
        register_parameters(name)
        ctx = _context(len(_NAMES))
        return cls(ctx.gens()[_NAMES.index(name)])

    @classmethod
    def constant(cls, value) -> "RationalFunction":
        return cls(_context(len(_NAMES)).constant(_to_fmpq(value)))

    # coercion -------------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, type(mpq(0)), flint.fmpq)):
            return RationalFunction.constant(other)
        try:
            from fractions import Fraction

            if isinstance(other, Fraction):
                return RationalFunction.constant(mpq(other.numerator, other.denominator))
        except ImportError:  # pragma: no cover
            pass
        return None

    def _aligned(self, other: "RationalFunction"):
        a, b = self, other
        if a.num.context() is b.num.context():
            return a.num, a.den, b.num, b.den
        n = max(a.num.context().nvars(), b.num.context().nvars())
        return _lift(a.num, n), _lift(a.den, n), _lift(b.num, n), _lift(b.den, n)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        an, ad, bn, bd = self._aligned(o)
        if ad.is_one() and bd.is_one():
            return RationalFunction(an + bn, ad, _reduced=True)
        if ad == bd:
            return RationalFunction(an + bn, ad)
        return RationalFunction(an * bd + bn * ad, ad * bd)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        an, ad, bn, bd = self._aligned(o)
        if ad.is_one() and bd.is_one():
            return RationalFunction(an * bn, ad, _reduced=True)
        if an.is_zero() or bn.is_zero():
            return RationalFunction(an.context().constant(0), ad.context().constant(1), _reduced=True)
        return RationalFunction(an * bn, ad * bd)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise PoleError("division by zero scalar")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num**k, self.den**k, _reduced=True)

    # comparison -----------------------------------------------------------
    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        an, ad, bn, bd = self._aligned(o)
        return an == bn and ad == bd

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.to_rational())
        return hash((str(self.num), str(self.den)))

    # inspection -----------------------------------------------------------
    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def to_rational(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        c = self.num.leading_coefficient() if not self.num.is_zero() else flint.fmpq(0)
        d = self.den.leading_coefficient()
        c = c / d
        return mpq(int(c.p), int(c.q))

    def variables(self) -> set[str]:
        names = _NAMES[: self.num.context().nvars()]
        used = set()
        for p in (self.num, self.den):
            for exps in p.to_dict():
                used.update(n for n, e in zip(names, exps) if e)
        return used

    def specialize(self, assignment: Mapping[str, object]) -> "RationalFunction":
        return specialize(self, assignment)

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


Scalar = Union[int, "gmpy2.mpq", RationalFunction]


def rational(a, b=1):
    return mpq(a, b)


def q_symbol() -> RationalFunction:
    return RationalFunction.variable("q")


def param(name: str) -> RationalFunction:
    return RationalFunction.variable(name)


def normalize(x):
    """Collapse constant rational functions to mpq; leave everything else alone."""
    if isinstance(x, RationalFunction):
        return x.to_rational() if x.is_constant() else x
    if isinstance(x, int):
        return mpq(x)
    return x


def is_symbolic(x) -> bool:
    return isinstance(x, RationalFunction) and not x.is_constant()


def q_number(k: int, mode: str = "hecke"):
    """The q-integer k_q = (q^k - q^-k)/(q - q^-1); ``mode="classical"`` gives k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if mode == "classical":
        return mpq(k)
    if mode != "hecke":
        raise ValueError(f"unknown mode {mode!r}")
    if k == 0:
        return RationalFunction.constant(0)
    q = q_symbol()
    # k_q = q^{1-k} (1 + q^2 + ... + q^{2(k-1)})
    s = sum((q ** (2 * j) for j in range(1, k)), q**0)
    return s * q ** (1 - k)


def specialize(x, assignment: Mapping[str, object]):
    """Substitute rationals for named indeterminates.

    Raises PoleError if a denominator vanishes and GenericityError if q is
    sent to 0 or +-1. A total specialization still returns a RationalFunction
    (a constant); use :func:`normalize` to get an mpq.
    """
    # Pole detection runs first so 1/(q-1) at q=1 reports the pole itself.
    if not isinstance(x, RationalFunction):
        _check_generic(assignment)
        return RationalFunction.constant(x)
    nvars = x.num.context().nvars()
    names = _NAMES[:nvars]
    values = {n: _to_fmpq(v) for n, v in assignment.items() if n in names}
    if values:
        num = x.num.subs(values)
        den = x.den.subs(values)
        if den.is_zero():
            raise PoleError(f"denominator {x.den} vanishes at {dict(assignment)}")
    _check_generic(assignment)
    if not values:
        return x
    return RationalFunction(num, den)


def _check_generic(assignment: Mapping[str, object]) -> None:
    if "q" in assignment:
        qv = mpq(assignment["q"])
        if qv in (0, 1, -1):
            raise GenericityError(f"q may not be specialized to {qv}")


def specialize_value(x, assignment: Mapping[str, object]):
    """Like :func:`specialize` but returns mpq whenever the result is constant."""
    if isinstance(x, RationalFunction):
        return normalize(specialize(x, assignment))
    _check_generic(assignment)
    return x


def polynomial_parts(x, names: tuple[str, ...]):
    """Split a scalar polynomial in ``names`` into {exponent tuple: coefficient}.

    The coefficients lie in Q(q, other params). Returns None when some name
    occurs in a denominator (the split is then not polynomial).
    """
    if not isinstance(x, RationalFunction):
        return {(0,) * len(names): x}
    nvars = x.num.context().nvars()
    all_names = _NAMES[:nvars]
    idx = [all_names.index(n) if n in all_names else None for n in names]
    for exps in x.den.to_dict():
        if any(i is not None and exps[i] for i in idx):
            return None
    buckets: dict[tuple, dict] = {}
    for exps, c in x.num.to_dict().items():
        key = tuple(exps[i] if i is not None else 0 for i in idx)
        rest = list(exps)
        for i in idx:
            if i is not None:
                rest[i] = 0
        buckets.setdefault(key, {})[tuple(rest)] = c
    ctx = x.num.context()
    out = {}
    for key, terms in buckets.items():
        out[key] = normalize(RationalFunction(ctx.from_dict(terms), x.den))
    return out


# --- parsing ----------------------------------------------------------------

_BINOPS = {ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow}


def parse_scalar(text: str):
    """Parse the plain-text scalar grammar: integers, a/b, q, parameter names,
    ``+ - * / ^`` and parentheses. Returns mpq for constants."""
    src = text.strip().replace("−", "-").replace("^", "**")
    if not src:
        raise ParseError("empty scalar expression")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse scalar {text!r}") from exc

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return mpq(node.value)
        if isinstance(node, ast.Name):
            return RationalFunction.variable(node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            a = ev(node.left)
            if isinstance(node.op, ast.Pow):
                e = ev(node.right)
                if isinstance(e, RationalFunction) or e.denominator != 1:
                    raise ParseError(f"exponent must be an integer in {text!r}")
                e = int(e)
                if isinstance(a, RationalFunction):
                    return a**e
                if e < 0 and a == 0:
                    raise PoleError("zero to a negative power")
                return a**e
            b = ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if not b:
                raise PoleError(f"division by zero in {text!r}")
            if isinstance(a, RationalFunction) or isinstance(b, RationalFunction):
                return RationalFunction.constant(a) / b if not isinstance(a, RationalFunction) else a / b
            return a / b
        raise ParseError(f"unsupported syntax in scalar {text!r}")

    return normalize(ev(tree))


def format_scalar(x) -> str:
    """Text form accepted back by :func:`parse_scalar`."""
    x = normalize(x)
    if isinstance(x, RationalFunction):
        return str(x)
    x = mpq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
