"""The operator engine: commuting Sutherland integrals acting on z-polynomials.

The engine realizes the gauge-transformed integrals of motion of order
j = 2, 3, 4 through the x-representation.  The coordinate dictionary is
fixed once, for x_j on the unit circle:

    derivative factor   ->  2i * (x_j d/dx_j - d/N)   per homogeneous degree d
    gauge potential A_j ->  i * B_j,  B_j = sum_{k!=j} (x_j+x_k)/(x_j-x_k)
    curvature (dA)_jk   ->  -4 x_j x_k / (x_j - x_k)^2

A term of order j is a product of curvature pairs, gauge factors and
derivative factors over j distinct particle indices, summed over all
non-equivalent index assignments; the kappa power of a term is the number
of gauge factors plus twice the number of curvature pairs.  Applying the
engine to a polynomial and subtracting its action on 1 realizes normal
ordering semantically.

``apply_integral(2, . )`` is normalized to have the non-negative spectrum
(its eigenvalue on an eigenpolynomial is the excitation energy); higher
orders keep their natural normalization, which the characteristic-operator
calibration pins against the spectral product form.
"""
from __future__ import annotations

import functools
import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .scalars import (
    GR_I,
    GR_ONE,
    GaussRational,
    KappaPolynomial,
    KappaRational,
    kr,
)
from .symfun import (
    RankMismatch,
    Weight,
    XPolynomial,
    XRational,
    ZPolynomial,
    _lift_monomial,
    divide_exact,
    grlex_key,
    project,
    weighted_degree,
    xr_sum,
)

SUPPORTED_ORDERS = (2, 3, 4)


class EngineError(ArithmeticError):
    """Internal consistency failure of the operator engine."""


class ConventionMismatch(EngineError):
    """No affine recombination of the engine output fits the spectral
    product form; signals an engine bug."""


# ---------------------------------------------------------------------------
# elementary factors
# ---------------------------------------------------------------------------

def apply_momentum(f: XPolynomial, j: int) -> XPolynomial:
    """Baricentric momentum: x_j d/dx_j - d/N on each homogeneous component."""
    N = f.nvars
    if not 1 <= j <= N:
        raise ValueError(f"index {j} out of range")
    ji = j - 1
    out: dict[tuple, KappaRational] = {}
    for e, c in f.terms.items():
        d = sum(e)
        factor = Fraction(e[ji] * N - d, N)
        if factor:
            out[e] = c * kr(factor)
    return XPolynomial(N, out)


def _momentum_on_component(f: XPolynomial, j: int, degree: int) -> XPolynomial:
    ji = j - 1
    N = f.nvars
    out: dict[tuple, KappaRational] = {}
    for e, c in f.terms.items():
        factor = Fraction(e[ji] * N - degree, N)
        if factor:
            out[e] = c * kr(factor)
    return XPolynomial(N, out)


def pair_potential(nvars: int, j: int, k: int) -> XRational:
    """i (x_j + x_k) / (x_j - x_k), the one-pair gauge summand; antisymmetric
    under swapping j and k."""
    sign = 1
    if j > k:
        j, k = k, j
        sign = -1
    num = (XPolynomial.variable(nvars, j) + XPolynomial.variable(nvars, k))
    num = num.scale(KappaRational(KappaPolynomial.const(GR_I.__mul__(sign))))
    return XRational(num, {(j, k): 1})


@functools.lru_cache(maxsize=None)
def _gauge_row(N: int, j: int) -> XRational:
    """The full gauge potential i*B_j over one common row denominator."""
    parts = []
    for k in range(1, N + 1):
        if k == j:
            continue
        a, b = (j, k) if j < k else (k, j)
        sign = GR_I if j < k else -GR_I
        num = (XPolynomial.variable(N, j) + XPolynomial.variable(N, k))
        num = num.scale(KappaRational(KappaPolynomial.const(sign)))
        parts.append(XRational(num, {(a, b): 1}))
    return xr_sum(parts, N)


def apply_gauge_potential(f: XRational, j: int) -> XRational:
    """Multiply by the gauge potential of particle j (exact, imaginary unit
    carried in the scalar; denominators recorded, reduction stays lazy)."""
    N = f.nvars
    if not 1 <= j <= N:
        raise ValueError(f"index {j} out of range")
    row = _gauge_row(N, j)
    pairs = dict(f.den_pairs)
    for key, e in row.den_pairs.items():
        pairs[key] = pairs.get(key, 0) + e
    return XRational(f.num * row.num, pairs, f.den_mono)


def pair_curvature(nvars: int, a: int, b: int) -> XRational:
    """-4 x_a x_b / (x_a - x_b)^2, the derivative of the gauge potential."""
    if a > b:
        a, b = b, a
    e = [0] * nvars
    e[a - 1] = 1
    e[b - 1] = 1
    num = XPolynomial.monomial(nvars, tuple(e), kr(-4))
    return XRational(num, {(a, b): 2})


# ---------------------------------------------------------------------------
# term table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TermShape:
    """One term pattern of the gauge-transformed expansion of order j:
    `curv` curvature pairs, `gauge` gauge factors, `mom` derivative factors,
    using curv*2 + gauge + mom distinct indices."""
    curv: int
    gauge: int
    mom: int

    @property
    def order(self) -> int:
        return 2 * self.curv + self.gauge + self.mom

    @property
    def kappa_power(self) -> int:
        return self.gauge + 2 * self.curv

    @property
    def prefactor(self) -> GaussRational:
        """(-i)^order * (2i)^mom; gauge factors carry their own i."""
        out = GR_ONE
        for _ in range(self.order):
            out = out * GaussRational(0, -1)
        for _ in range(self.mom):
            out = out * GaussRational(0, 2)
        return out


_TERM_TABLE: dict[int, tuple[TermShape, ...]] = {
    2: (TermShape(0, 0, 2), TermShape(0, 1, 1)),
    3: (TermShape(0, 0, 3), TermShape(0, 1, 2),
        TermShape(1, 0, 1), TermShape(0, 2, 1)),
    4: (TermShape(0, 0, 4), TermShape(0, 1, 3),
        TermShape(1, 0, 2), TermShape(0, 2, 2),
        TermShape(1, 1, 1), TermShape(0, 3, 1)),
}


def integral_term_table(order: int) -> tuple[TermShape, ...]:
    if order not in _TERM_TABLE:
        raise ValueError(f"integral order {order} not supported (need 2..4)")
    return _TERM_TABLE[order]


# ---------------------------------------------------------------------------
# the integral action
# ---------------------------------------------------------------------------

_monomial_cache: dict[tuple[int, int, Weight], ZPolynomial] = {}
_monomial_lock = threading.RLock()


def _engine_monomial(order: int, w: Weight, N: int) -> ZPolynomial:
    """Raw engine action on the single monomial z^w (natural normalization)."""
    key = (N, order, w)
    with _monomial_lock:
        hit = _monomial_cache.get(key)
        if hit is not None:
            return hit
        f = _lift_monomial(N, w)
        degree = weighted_degree(w)
        indices = range(1, N + 1)
        parts: list[XRational] = []
        for shape in integral_term_table(order):
            kpow = shape.kappa_power
            pre = KappaRational(
                KappaPolynomial([0] * kpow + [shape.prefactor]))
            for mset in itertools.combinations(indices, shape.mom):
                g = f
                for a in mset:
                    g = _momentum_on_component(g, a, degree)
                if g.is_zero:
                    continue
                rest = [a for a in indices if a not in mset]
                for bset in itertools.combinations(rest, shape.gauge):
                    term = XRational(g)
                    for a in bset:
                        term = apply_gauge_potential(term, a)
                    if shape.curv:
                        left = [a for a in rest if a not in bset]
                        for vpair in itertools.combinations(left, 2):
                            parts.append(
                                (term * pair_curvature(N, *vpair)).scale(pre))
                    else:
                        parts.append(term.scale(pre))
        total = xr_sum(parts, N)
        poly = divide_exact(total)
        result = project(poly)
        if not result.is_real():
            raise EngineError(
                f"non-real engine output for order {order}, weight {w}")
        _monomial_cache[key] = result
        return result


def apply_integral(order: int, p: ZPolynomial, N: Optional[int] = None) -> ZPolynomial:
    """Action of the order-j commuting integral on a z-polynomial.

    Order 2 is normalized so eigenpolynomials have their excitation energies
    as eigenvalues; the action on constants is zero for every order.
    """
    if order not in SUPPORTED_ORDERS:
        raise ValueError(f"integral order {order} not supported (need 2..4)")
    if N is None:
        N = p.rank + 1
    if p.rank != N - 1:
        raise RankMismatch(f"rank {p.rank} polynomial with N={N}")
    if N < order:
        raise ValueError(f"order {order} needs at least {order} particles, got {N}")
    rank = p.rank
    out = ZPolynomial.zero(rank)
    for w, c in p.terms.items():
        out = out + _engine_monomial(order, w, N).scale(c)
    # semantic normal ordering: subtract the purely multiplicative action
    one_action = _engine_monomial(order, (0,) * rank, N)
    if not one_action.is_zero:
        c0 = one_action.coefficient((0,) * rank)
        out = out - p.scale(c0)
    if order == 2:
        out = -out
    return out


# ---------------------------------------------------------------------------
# transcriptions of the closed-form z-space operators
# ---------------------------------------------------------------------------

class ZOperator:
    """Differential operator in the z coordinates: a sum of
    coefficient-polynomial times derivative-monomial terms."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms):
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "terms", tuple(terms))

    def __setattr__(self, name, value):
        raise AttributeError("ZOperator is immutable")

    def apply(self, p: ZPolynomial) -> ZPolynomial:
        if p.rank != self.rank:
            raise RankMismatch(f"rank {p.rank} vs operator rank {self.rank}")
        out = ZPolynomial.zero(self.rank)
        for coeff, deriv in self.terms:
            q = p
            for i, e in enumerate(deriv, start=1):
                for _ in range(e):
                    q = q.derivative(i)
                    if q.is_zero:
                        break
            if not q.is_zero:
                out = out + coeff * q
        return out

    def sorted_terms(self):
        return sorted(self.terms, key=lambda t: grlex_key(t[1]), reverse=True)


def _zp(rank: int, entries: dict) -> ZPolynomial:
    return ZPolynomial(rank, entries)


def transcribed_operator(N: int, order: int) -> ZOperator:
    """Closed-form z-space operator for the supported (N, order) pairs,
    matching apply_integral's normalization exactly."""
    if (N, order) == (3, 2):
        s = kr(4, 3)
        lin1 = KappaRational(KappaPolynomial.linear(1, 3))  # 1 + 3k
        return ZOperator(2, [
            (_zp(2, {(2, 0): s, (0, 1): s * kr(-3)}), (2, 0)),
            (_zp(2, {(0, 2): s, (1, 0): s * kr(-3)}), (0, 2)),
            (_zp(2, {(1, 1): s, (0, 0): s * kr(-9)}), (1, 1)),
            (_zp(2, {(1, 0): s * lin1}), (1, 0)),
            (_zp(2, {(0, 1): s * lin1}), (0, 1)),
        ])
    if (N, order) == (4, 2):
        h = kr(1, 2)
        lin1 = KappaRational(KappaPolynomial.linear(1, 4))  # 1 + 4k
        return ZOperator(3, [
            (_zp(3, {(2, 0, 0): h * kr(3), (0, 1, 0): h * kr(-8)}), (2, 0, 0)),
            (_zp(3, {(0, 0, 2): h * kr(3), (0, 1, 0): h * kr(-8)}), (0, 0, 2)),
            (_zp(3, {(0, 2, 0): h * kr(4), (1, 0, 1): h * kr(-8),
                     (0, 0, 0): h * kr(-16)}), (0, 2, 0)),
            (_zp(3, {(1, 1, 0): h * kr(4), (0, 0, 1): h * kr(-24)}), (1, 1, 0)),
            (_zp(3, {(0, 1, 1): h * kr(4), (1, 0, 0): h * kr(-24)}), (0, 1, 1)),
            (_zp(3, {(1, 0, 1): h * kr(2), (0, 0, 0): h * kr(-32)}), (1, 0, 1)),
            (_zp(3, {(1, 0, 0): h * kr(3) * lin1}), (1, 0, 0)),
            (_zp(3, {(0, 0, 1): h * kr(3) * lin1}), (0, 0, 1)),
            (_zp(3, {(0, 1, 0): h * kr(4) * lin1}), (0, 1, 0)),
        ])
    if (N, order) == (3, 3):
        s = kr(8, 27)
        lin2 = KappaRational(KappaPolynomial.linear(2, 3))  # 2 + 3k
        lin1 = KappaRational(KappaPolynomial.linear(1, 3))  # 1 + 3k
        return ZOperator(2, [
            (_zp(2, {(3, 0): s * kr(2), (1, 1): s * kr(-9),
                     (0, 0): s * kr(27)}), (3, 0)),
            (_zp(2, {(2, 1): s * kr(3), (0, 2): s * kr(-18),
                     (1, 0): s * kr(27)}), (2, 1)),
            (_zp(2, {(1, 2): s * kr(-3), (2, 0): s * kr(18),
                     (0, 1): s * kr(-27)}), (1, 2)),
            (_zp(2, {(0, 3): s * kr(-2), (1, 1): s * kr(9),
                     (0, 0): s * kr(-27)}), (0, 3)),
            (_zp(2, {(2, 0): s * kr(3) * lin2,
                     (0, 1): s * kr(-9) * lin2}), (2, 0)),
            (_zp(2, {(0, 2): s * kr(-3) * lin2,
                     (1, 0): s * kr(9) * lin2}), (0, 2)),
            (_zp(2, {(1, 0): s * lin2 * lin1}), (1, 0)),
            (_zp(2, {(0, 1): s * kr(-1) * lin2 * lin1}), (0, 1)),
        ])
    raise ValueError(f"no transcribed operator for N={N}, order={order}")


# ---------------------------------------------------------------------------
# characteristic operator and its calibration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Calibration:
    """Affine recombination O_j = scale_j * apply_integral(j, .) + offset_j
    that puts each integral into the spectral product normalization."""
    N: int
    scales: dict[int, Fraction]
    offsets: dict[int, KappaRational]


_calibration_cache: dict[int, Calibration] = {}
_calibration_lock = threading.RLock()


def calibrate(N: int) -> Calibration:
    """Fix (scale_j, offset_j) for j = 2..N on known eigenpolynomials and
    verify on a fourth one; N in {3, 4}."""
    if N not in (3, 4):
        raise ValueError(f"calibration supports N in {{3, 4}}, got {N}")
    with _calibration_lock:
        hit = _calibration_cache.get(N)
        if hit is not None:
            return hit
        from . import gegenbauer as gg

        rank = N - 1
        zero_w = (0,) * rank
        e1_w = tuple(1 if i == 0 else 0 for i in range(rank))
        en_w = tuple(1 if i == rank - 1 else 0 for i in range(rank))
        extra_w = (1, 1) if N == 3 else (0, 1, 0)
        vectors = [gg.gen_eigen(w, N) for w in (e1_w, en_w, extra_w)]
        weights = [e1_w, en_w, extra_w]

        scales: dict[int, Fraction] = {}
        offsets: dict[int, KappaRational] = {}
        for j in range(2, N + 1):
            offset = gg.l_elementary(zero_w, N, j)
            base = apply_integral(j, ZPolynomial.variable(rank, 1), N)
            if set(base.terms) != {e1_w}:
                raise ConventionMismatch(
                    f"order {j} does not act diagonally on z_1")
            lam = base.coefficient(e1_w)
            target = gg.l_elementary(e1_w, N, j)
            scale_val = (target - offset) / lam
            if not scale_val.is_constant:
                raise ConventionMismatch(
                    f"order {j} scale is not a rational constant: {scale_val!r}")
            gr = scale_val.constant_value()
            if not gr.is_real:
                raise ConventionMismatch(f"order {j} scale is not real")
            scale = Fraction(gr.re)
            for w, vec in zip(weights, vectors):
                lhs = apply_integral(j, vec, N).scale(kr(scale)) + vec.scale(offset)
                rhs = vec.scale(gg.l_elementary(w, N, j))
                if lhs != rhs:
                    raise ConventionMismatch(
                        f"order {j} calibration fails on weight {w}")
            scales[j] = scale
            offsets[j] = offset
        cal = Calibration(N, scales, offsets)
        _calibration_cache[N] = cal
        return cal


def char_apply(p: ZPolynomial, N: int, t: Optional[KappaRational] = None):
    """Shifted characteristic operator.

    With symbolic t (t=None) returns the list of z-polynomial coefficients of
    t^0 .. t^N; with a numeric KappaRational t returns the single evaluated
    z-polynomial.  On an eigenpolynomial the result factorizes as the product
    of (t - spectral component) times the polynomial.
    """
    cal = calibrate(N)
    rank = N - 1
    if p.rank != rank:
        raise RankMismatch(f"rank {p.rank} polynomial with N={N}")
    coeffs: list[ZPolynomial] = [ZPolynomial.zero(rank) for _ in range(N + 1)]
    coeffs[N] = p
    for j in range(2, N + 1):
        oj = apply_integral(j, p, N).scale(kr(cal.scales[j])) + p.scale(cal.offsets[j])
        if j % 2:
            oj = -oj
        coeffs[N - j] = oj
    if t is None:
        return coeffs
    out = ZPolynomial.zero(rank)
    power = KappaRational.one()
    for c in coeffs:
        if not c.is_zero:
            out = out + c.scale(power)
        power = power * t
    return out


# ---------------------------------------------------------------------------
# commutativity check
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CommutatorReport:
    orders: tuple[int, int]
    N: int
    degree_bound: int
    checked: int
    failures: tuple[tuple[Weight, int], ...]

    @property
    def max_norm(self) -> int:
        return max((n for _, n in self.failures), default=0)

    @property
    def is_zero(self) -> bool:
        return not self.failures


def _monomials_up_to(rank: int, degree: int) -> list[Weight]:
    out = []
    for w in itertools.product(*(range(degree + 1) for _ in range(rank))):
        if weighted_degree(w) <= degree:
            out.append(w)
    out.sort(key=grlex_key)
    return out


def commutator_residual(j: int, k: int, N: int, degree_bound: int) -> CommutatorReport:
    """Residual of the commutator of the order-j and order-k integrals on all
    z-monomials of weighted degree <= degree_bound; must be exactly zero."""
    rank = N - 1
    failures = []
    monos = _monomials_up_to(rank, degree_bound)
    for w in monos:
        p = ZPolynomial.monomial(rank, w)
        r = (apply_integral(j, apply_integral(k, p, N), N)
             - apply_integral(k, apply_integral(j, p, N), N))
        if not r.is_zero:
            failures.append((w, len(r.terms)))
    return CommutatorReport((j, k), N, degree_bound, len(monos), tuple(failures))
