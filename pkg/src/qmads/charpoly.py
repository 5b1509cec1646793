"""Quantum symmetric functions, characteristic polynomials and the
constant-R verification drivers."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .algebras import MODIFIED_RE, RE, RTT, UGL, AlgebraPresentation
from .errors import NormalizationError
from .freealg import FreeElement, FreeMatrix, commutator, letter
from .report import NONZERO, ZERO, ReportItem, VerificationReport, membership_item, zero_item
from .scalars import mpq, normalize
from .tensors import TensorOperator, embed_adjacent

ELEMENTARY = "elementary"
POWER_SUM = "power_sum"

RE_Q = "RE_Q"
MRE_QHAT = "mRE_Qhat"
UGL_QCAL = "Ugl_Qcal"
_VARIANT = {RE: RE_Q, MODIFIED_RE: MRE_QHAT, UGL: UGL_QCAL}

ANCHORS = {
    "ch": "quantum Cayley-Hamilton identity",
    "centrality": "centrality of the characteristic coefficients",
    "psum-commute": "commutative family of power sums",
    "simplifications": "power sums and quantum powers in RE vs RTT",
}


@dataclass
class SymmetricElement:
    kind: str
    k: int
    value: FreeElement
    algebra: str

    def __str__(self) -> str:
        tag = "e" if self.kind == ELEMENTARY else "p"
        return f"{tag}_{self.k} = {self.value}"


@dataclass
class CharacteristicPolynomial:
    coefficients: list[FreeElement]  # index = power of t
    monic: bool
    variant: str
    leading_scalar: object = 1

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        parts = []
        for p in range(self.degree, -1, -1):
            c = self.coefficients[p]
            if c:
                parts.append(f"t^{p}*({c})")
        return " + ".join(parts) or "0"


def _weight(a: AlgebraPresentation, k: int) -> TensorOperator | None:
    D = a.trace_matrix
    if D is None:
        return None
    key = ("Dpow", k)
    hit = a._copies.get(key)
    if hit is None:
        hit = D
        for _ in range(k - 1):
            hit = hit.kron(D)
        a._copies[key] = hit
    return hit


def _copies_product(a: AlgebraPresentation, k: int) -> FreeMatrix:
    key = ("prod", k)
    hit = a._copies.get(key)
    if hit is None:
        hit = a.copy(1, k)
        for j in range(2, k + 1):
            hit = hit @ a.copy(j, k)
        a._copies[key] = hit
    return hit


def _r_descending(a: AlgebraPresentation, k: int) -> TensorOperator:
    """R_{k-1} R_{k-2} ... R_1 on V^{(x)k}."""
    out = TensorOperator.identity(a.n, k)
    for j in range(k - 1, 0, -1):
        out = out @ embed_adjacent(a.braiding.R, k, j)
    return out


def r_trace_all(a: AlgebraPresentation, X: FreeMatrix, front: TensorOperator | None = None) -> FreeElement:
    """Tr_R over every position of front @ X."""
    W = _weight(a, X.arity)
    if front is not None:
        W = front if W is None else W @ front
    return X.trace_against(W)


def elementary_symmetric(a: AlgebraPresentation, k: int) -> SymmetricElement:
    if k < 0:
        raise ValueError("k must be >= 0")
    key = ("e", k)
    if key not in a._copies:
        if k == 0:
            val = FreeElement.one()
        else:
            A = a.skew_symmetrizer(k)
            val = FreeElement.zero() if A.is_zero() else r_trace_all(a, _copies_product(a, k), A)
        a._copies[key] = val
    return SymmetricElement(ELEMENTARY, k, a._copies[key], a.kind)


def power_sum(a: AlgebraPresentation, k: int, route: str = "formula") -> SymmetricElement:
    """p_k by the descending-R formula, or (route='trace_power') as Tr_R G^k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    key = ("p", k, route)
    if key not in a._copies:
        if route == "formula":
            val = r_trace_all(a, _copies_product(a, k), _r_descending(a, k))
        elif route == "trace_power":
            val = r_trace_all(a, a.generators.power(k))
        else:
            raise ValueError(f"unknown route {route!r}")
        a._copies[key] = val
    return SymmetricElement(POWER_SUM, k, a._copies[key], a.kind)


def quantum_power(a: AlgebraPresentation, k: int, placement: str = "right") -> FreeMatrix:
    """Tr_R(2..k) of the ordered product of copies and R_{k-1}...R_1.

    placement="right" multiplies the R-product after the copies; this form
    equals G^k word for word in RE algebras. placement="left" puts it in
    front, which agrees with G^k only modulo the RE relations (already for
    the flip it reverses the word order).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return FreeMatrix.identity(a.n)
    if k == 1:
        return a.generators
    if placement == "right":
        X = _copies_product(a, k) @ _r_descending(a, k)
    elif placement == "left":
        X = _r_descending(a, k) @ _copies_product(a, k)
    else:
        raise ValueError(f"unknown placement {placement!r}")
    return X.r_trace(range(2, k + 1), a.trace_matrix)


def _scalar_poly_product(factors: list[tuple[object, object, FreeMatrix]], arity: int, n: int) -> dict[int, FreeMatrix]:
    """Expand prod_j (c_j t - s_j - G_j) as {power of t: FreeMatrix}."""
    poly = {0: FreeMatrix.identity(n, arity)}
    for c, s, G in factors:
        const = FreeMatrix.constant(TensorOperator.scalar(n, arity, -s)) - G if s else -G
        nxt: dict[int, FreeMatrix] = {}
        for p, X in poly.items():
            hi = X.scale(c)
            nxt[p + 1] = nxt[p + 1] + hi if p + 1 in nxt else hi
            lo = X @ const
            nxt[p] = nxt[p] + lo if p in nxt else lo
        poly = nxt
    return poly


def characteristic_polynomial(a: AlgebraPresentation) -> CharacteristicPolynomial:
    key = ("charpoly",)
    if key in a._copies:
        return a._copies[key]
    if a.kind == RTT:
        raise ValueError("characteristic polynomials are defined for RE, ModifiedRE and UglN")
    if a.kind == RE:
        m = a.braiding.birank_m
        q = a.hecke_q
        coeffs = [FreeElement.zero()] * (m + 1)
        for k in range(m + 1):
            coeffs[m - k] = elementary_symmetric(a, k).value * normalize((-q) ** k)
        out = CharacteristicPolynomial(coeffs, True, RE_Q, mpq(1))
    else:
        if a.kind == UGL:
            m = a.n
            q = None
        else:
            m = a.braiding.birank_m
            q = None if a.braiding.q is None else a.braiding.q
        factors = []
        for j in range(1, m + 1):
            if q is None:
                c, s = mpq(1), mpq(j - 1)
            else:
                from .skewsym import qint

                c = normalize(q ** (2 * (j - 1)))
                s = normalize(q ** (j - 1) * qint(j - 1, q))
            factors.append((c, s, a.copy(j, m)))
        poly = _scalar_poly_product(factors, m, a.n)
        A = a.skew_symmetrizer(m)
        raw = [r_trace_all(a, poly.get(p, FreeMatrix(a.n, m)), A) for p in range(m + 1)]
        lead = raw[m]
        if lead.degree() != 0:
            raise NormalizationError(f"leading coefficient {lead} is not a scalar")
        lead_scalar = lead.terms[()]
        if not lead_scalar:
            raise NormalizationError("leading coefficient vanishes")
        coeffs = [c * (1 / lead_scalar) for c in raw]
        out = CharacteristicPolynomial(coeffs, True, _VARIANT[a.kind], lead_scalar)
    a._copies[key] = out
    return out


def substitute(a: AlgebraPresentation, poly: CharacteristicPolynomial) -> FreeMatrix:
    """sum_p G^p * c_p with each coefficient on the right of its power."""
    out = FreeMatrix(a.n, 1)
    power = FreeMatrix.identity(a.n)
    for p, c in enumerate(poly.coefficients):
        if p:
            power = power @ a.generators
        if c:
            out = out + power.times_element(c)
    return out


def _describe(a: AlgebraPresentation) -> str:
    if a.kind == UGL:
        return f"U(gl({a.n})) (flip, classical antisymmetrizer)"
    return a.braiding.describe()


def _entry_id(i: int, j: int) -> str:
    return f"entry[{i + 1},{j + 1}]"


def verify_ch(a: AlgebraPresentation) -> VerificationReport:
    t0 = time.perf_counter()
    poly = characteristic_polynomial(a)
    Q = substitute(a, poly)
    rep = VerificationReport("ch", ANCHORS["ch"], _describe(a), a.kind)
    rep.notes["degree"] = str(poly.degree)
    rep.notes["setup_secs"] = f"{time.perf_counter() - t0:.3f}"
    grid = Q.grid()
    for i in range(a.n):
        for j in range(a.n):
            rep.add(membership_item(_entry_id(i, j), grid[i][j], a.ideal, poly.degree))
    return rep


def verify_centrality(a: AlgebraPresentation, k: int) -> VerificationReport:
    if a.kind != RE:
        raise ValueError("centrality is checked for RE algebras")
    rep = VerificationReport("centrality", ANCHORS["centrality"], _describe(a), a.kind)
    e = elementary_symmetric(a, k).value
    for i in range(a.n):
        for j in range(a.n):
            g = FreeElement.generator(letter(a.family, i, j))
            rep.add(membership_item(f"[e_{k},{a.family}_{i + 1}^{j + 1}]", commutator(e, g), a.ideal, k + 1))
    return rep


def verify_powersum_commutativity(a: AlgebraPresentation, kmax: int) -> VerificationReport:
    if a.kind not in (RE, RTT):
        raise ValueError("power-sum commutativity is checked for RE and RTT algebras")
    rep = VerificationReport("psum-commute", ANCHORS["psum-commute"], _describe(a), a.kind)
    for j in range(1, kmax + 1):
        for k in range(j + 1, kmax + 1):
            x = commutator(power_sum(a, j).value, power_sum(a, k).value)
            rep.add(membership_item(f"[p_{j},p_{k}]", x, a.ideal, j + k))
    return rep


def verify_simplifications(a: AlgebraPresentation, kmax: int = 3) -> VerificationReport:
    """p_k(formula) - Tr_R G^k and G^[k] - G^k as free-algebra elements.

    Both vanish identically for RE; for RTT they are expected to be nonzero
    from k = 2 on.
    """
    if a.kind not in (RE, RTT):
        raise ValueError("simplification identities concern RE and RTT algebras")
    rep = VerificationReport("simplifications", ANCHORS["simplifications"], _describe(a), a.kind)
    hecke_rtt = a.kind == RTT and a.braiding.kind == "hecke"
    informational = a.kind == RTT and not hecke_rtt
    for k in range(1, kmax + 1):
        t0 = time.perf_counter()
        diff = power_sum(a, k).value - power_sum(a, k, "trace_power").value
        it = zero_item(f"p_{k}-TrG^{k}", diff, k, not (hecke_rtt and k > 1))
        if informational:
            it.expected = (ZERO, NONZERO)
        it.elapsed = time.perf_counter() - t0
        rep.add(it)
        t0 = time.perf_counter()
        Gk = a.generators.power(k)
        dm = quantum_power(a, k) - Gk
        it = zero_item(f"G^[{k}]-G^{k}", _first_nonzero(dm), k, not (hecke_rtt and k > 1))
        if informational:
            it.expected = (ZERO, NONZERO)
        it.elapsed = time.perf_counter() - t0
        rep.add(it)
        if a.kind == RE and k > 1:
            left = quantum_power(a, k, "left") - Gk
            for (r, c), x in sorted(left.entries().items()):
                rep.add(membership_item(f"G^[{k}]left-G^{k}{_entry_id(r, c)}", x, a.ideal, k))
    return rep


def _first_nonzero(X: FreeMatrix) -> FreeElement:
    for x in X.entries().values():
        if x:
            return x
    return FreeElement.zero()
