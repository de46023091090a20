"""Generalized Gegenbauer polynomials of A_n type and their spectral data.

Two independent generation routes are provided:

* ``gen_eigen`` solves the order-2 eigenproblem triangularly over the
  dominance cone of the target weight (works for every N >= 2);
* ``gen_recurrence`` builds the family inductively from the closed-form
  multiplication rules for z_1, z_2, z_3 (N = 3 and 4).

On top of these sit the spectral vectors of the characteristic operator,
the closed-form recurrence coefficients, and the raising/lowering (step)
operators together with their proportionality factors.
"""
from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .scalars import (
    KappaPolynomial,
    KappaRational,
    SpectralDegeneracy,
    kr,
)
from .symfun import (
    Weight,
    ZPolynomial,
    dominance_key,
    dominated_weights,
    weighted_degree,
)
from . import integrals as _integrals


class ShiftNotTabulated(ValueError):
    """Raised when a step-operator shift has no closed-form entry."""


def _require_dominant(m: Weight):
    if len(m) < 1 or any((e < 0 or not isinstance(e, int)) for e in m):
        raise ValueError(f"{m} is not a dominant weight")


# ---------------------------------------------------------------------------
# eigenvalues and spectral vectors
# ---------------------------------------------------------------------------

def epsilon2(m: Weight, N: int) -> KappaPolynomial:
    """Excitation eigenvalue of the order-2 integral: affine in κ."""
    _require_dominant(m)
    n = N - 1
    if len(m) != n:
        raise ValueError(f"weight {m} has rank {len(m)}, expected {n}")
    const = Fraction(0)
    for kk in range(1, n + 1):
        const += Fraction(2 * kk * (N - kk), N) * m[kk - 1] ** 2
    for l in range(1, n + 1):
        for kk in range(l + 1, n + 1):
            const += Fraction(4 * l * (N - kk), N) * m[l - 1] * m[kk - 1]
    slope = Fraction(0)
    for kk in range(1, n + 1):
        slope += 2 * kk * (N - kk) * m[kk - 1]
    return KappaPolynomial.linear(const, slope)


def ground_energy(N: int) -> KappaPolynomial:
    """Ground-state energy N(N+1)(N-1)/6 * κ^2."""
    if N < 2:
        raise ValueError("need at least two particles")
    return KappaPolynomial([0, 0, Fraction(N * (N + 1) * (N - 1), 6)])


@dataclass(frozen=True)
class LVector:
    """Spectral vector of the characteristic operator: N components, each
    affine in κ as (constant, slope); the components sum to zero."""
    N: int
    entries: tuple[tuple[Fraction, Fraction], ...]

    def component(self, j: int) -> KappaRational:
        """1-based affine component as a scalar."""
        c, s = self.entries[j - 1]
        return KappaRational(KappaPolynomial.linear(c, s))

    def polynomials(self) -> tuple[KappaPolynomial, ...]:
        return tuple(KappaPolynomial.linear(c, s) for c, s in self.entries)

    def __iter__(self):
        return iter(self.entries)


def l_vector(m: Weight, N: int) -> LVector:
    """Spectral vector: twice the κ-shifted weight in the N-dim realization."""
    _require_dominant(m)
    n = N - 1
    if len(m) != n:
        raise ValueError(f"weight {m} has rank {len(m)}, expected {n}")
    base = sum((N - kk) * m[kk - 1] for kk in range(1, n + 1))
    entries = []
    for j in range(1, N + 1):
        head = sum(m[kk - 1] for kk in range(1, j))  # m_0 := 0
        const = Fraction(2 * (base - N * head), N)
        slope = Fraction(N + 1 - 2 * j)
        entries.append((const, slope))
    return LVector(N, tuple(entries))


def char_eigenvalue(m: Weight, N: int) -> list[KappaRational]:
    """Coefficients, ascending in t, of the spectral product
    prod_j (t - l_j) for the weight m."""
    lv = l_vector(m, N)
    coeffs = [KappaPolynomial.one()]
    for lp in lv.polynomials():
        nxt = [KappaPolynomial.zero()] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] = nxt[i] + c * (-lp)
            nxt[i + 1] = nxt[i + 1] + c
        coeffs = nxt
    return [KappaRational(c) for c in coeffs]


def l_elementary(m: Weight, N: int, j: int) -> KappaRational:
    """Elementary symmetric function e_j of the spectral vector components."""
    coeffs = char_eigenvalue(m, N)
    val = coeffs[N - j]
    return val if j % 2 == 0 else -val


# ---------------------------------------------------------------------------
# shift vectors
# ---------------------------------------------------------------------------

def mu_vector(i: int, n: int) -> Weight:
    """The i-th elementary shift (i = 1..N): components δ_{k,i} - δ_{k,i-1}."""
    if not 1 <= i <= n + 1:
        raise ValueError(f"shift index {i} out of range")
    return tuple((1 if k == i else 0) - (1 if k == i - 1 else 0)
                 for k in range(1, n + 1))


def _mu_sum(subset, n: int) -> Weight:
    out = [0] * n
    for i in subset:
        for k in range(n):
            out[k] += mu_vector(i, n)[k]
    return tuple(out)


def shift_decompose(s: Weight, N: int):
    """Write a shift as +/- a sum of r distinct elementary shifts of equal
    sign; returns (sign, subset, r).  A positive decomposition is preferred:
    the tabulated step operators realize every double shift through the
    raising-side spectral product."""
    n = N - 1
    if len(s) != n:
        raise ValueError(f"shift {s} has wrong rank")
    for r in range(1, N):
        for sign in (1, -1):
            for subset in itertools.combinations(range(1, N + 1), r):
                ms = _mu_sum(subset, n)
                if tuple(sign * e for e in ms) == s:
                    return (sign, subset, r)
    raise ShiftNotTabulated(f"{s} is not a signed sum of distinct elementary shifts")


def l_shift(m: Weight, s: Weight, N: int) -> LVector:
    """Spectral vector of m+s computed through the shift identity
    l'_j = l_j -/+ 2r/N +/- 2[j in subset]; agrees with l_vector(m+s)."""
    sign, subset, r = shift_decompose(s, N)
    target = tuple(a + b for a, b in zip(m, s))
    if any(e < 0 for e in target):
        raise ValueError(f"shifted weight {target} is not dominant")
    lv = l_vector(m, N)
    shift_all = Fraction(2 * r, N) * sign
    entries = []
    for j in range(1, N + 1):
        c, sl = lv.entries[j - 1]
        c = c - shift_all
        if j in subset:
            c = c + 2 * sign
        entries.append((c, sl))
    return LVector(N, tuple(entries))


# ---------------------------------------------------------------------------
# generation: eigen route
# ---------------------------------------------------------------------------

_eigen_cache: dict[tuple[int, Weight], ZPolynomial] = {}
_gen_lock = threading.RLock()


def gen_eigen(m: Weight, N: Optional[int] = None,
              kappa: Optional[Fraction] = None) -> ZPolynomial:
    """Monic eigenpolynomial of the order-2 integral with leading weight m.

    Symbolic in κ by default; with a numeric κ the triangular solve runs over
    plain rationals and raises SpectralDegeneracy when two eigenvalues of the
    dominance cone collide at that coupling.
    """
    m = tuple(m)
    _require_dominant(m)
    if N is None:
        N = len(m) + 1
    if len(m) != N - 1:
        raise ValueError(f"weight {m} has rank {len(m)}, expected {N - 1}")
    if kappa is None:
        with _gen_lock:
            hit = _eigen_cache.get((N, m))
            if hit is not None:
                return hit
            result = _solve_eigen(m, N, None)
            _eigen_cache[(N, m)] = result
            return result
    return _solve_eigen(m, N, Fraction(kappa))


def _solve_eigen(m: Weight, N: int, kappa: Optional[Fraction]) -> ZPolynomial:
    rank = N - 1
    cone = dominated_weights(m)  # sorted leading-first
    eps: dict[Weight, KappaPolynomial] = {w: epsilon2(w, N) for w in cone}
    if kappa is not None:
        eps_num: dict[Weight, Fraction] = {w: e(kappa).re for w, e in eps.items()}
        for w in cone[1:]:
            if eps_num[w] == eps_num[m]:
                raise SpectralDegeneracy(f"spectral degeneracy at κ={kappa}")
    actions = {w: _integrals.apply_integral(2, ZPolynomial.monomial(rank, w), N)
               for w in cone}
    coeffs: dict[Weight, KappaRational] = {m: KappaRational.one()}
    order_index = {w: i for i, w in enumerate(cone)}
    for mu in cone[1:]:
        acc = KappaRational.zero()
        for nu in cone:
            if nu == mu:
                continue
            contrib = actions[nu].coefficient(mu)
            if contrib.is_zero:
                continue
            if nu not in coeffs:
                # a contribution from a not-yet-solved weight would mean the
                # processing order is not dominance compatible
                if order_index[nu] > order_index[mu]:
                    raise _integrals.EngineError(
                        f"triangularity violated: {nu} feeds {mu}")
                continue
            acc = acc + coeffs[nu] * contrib
        if acc.is_zero:
            continue
        denom = KappaRational(eps[m]) - KappaRational(eps[mu])
        coeffs[mu] = acc / denom
    poly = ZPolynomial(rank, coeffs)
    if kappa is not None:
        poly = poly.substitute_kappa(kappa)
    return poly


# ---------------------------------------------------------------------------
# closed-form recurrence coefficients
# ---------------------------------------------------------------------------

def _aff(c: int, slope: int = 1) -> KappaRational:
    """The affine factor c + slope*κ."""
    return KappaRational(KappaPolynomial.linear(c, slope))


def recurrence_coefficient(kind: str, args) -> KappaRational:
    """Closed-form coefficient of the multiplication rules.

    Kinds: 'c' (1 index), 'a' (2 indices), 'd', 'f', 'g' (3 indices).
    Returns 0 whenever the leading index factor vanishes.
    """
    args = tuple(int(x) for x in args)
    if any(x < 0 for x in args):
        raise ValueError(f"negative index in {kind}{args}")
    if kind == "c":
        (m,) = args
        if m == 0:
            return KappaRational.zero()
        num = kr(m) * _aff(m - 1, 2)
        den = _aff(m) * _aff(m - 1)
        return num / den
    if kind == "a":
        p, q = args
        if q == 0:
            return KappaRational.zero()
        num = kr(q) * _aff(p + q) * _aff(q - 1, 2) * _aff(p + q - 1, 3)
        den = _aff(q) * _aff(q - 1) * _aff(p + q, 2) * _aff(p + q - 1, 2)
        return num / den
    if kind == "d":
        m, l, n = args
        if n == 0:
            return KappaRational.zero()
        num = (kr(n) * _aff(l + n) * _aff(n - 1, 2) * _aff(m + l + n, 2)
               * _aff(l + n - 1, 3) * _aff(m + l + n - 1, 4))
        den = (_aff(n) * _aff(n - 1) * _aff(l + n, 2) * _aff(l + n - 1, 2)
               * _aff(m + l + n, 3) * _aff(m + l + n - 1, 3))
        return num / den
    if kind == "f":
        m, l, n = args
        if m == 0 or n == 0:
            return KappaRational.zero()
        num = (kr(m * n) * _aff(m - 1, 2) * _aff(n - 1, 2)
               * _aff(m + l + n, 2) * _aff(m + l + n - 1, 4))
        den = (_aff(m) * _aff(n) * _aff(m - 1) * _aff(n - 1)
               * _aff(m + l + n, 3) * _aff(m + l + n - 1, 3))
        return num / den
    if kind == "g":
        m, l, n = args
        if l == 0:
            return KappaRational.zero()
        num = (kr(l) * _aff(m + l) * _aff(l + n) * _aff(l - 1, 2)
               * _aff(m + l + n, 2) * _aff(m + l - 1, 3) * _aff(l + n - 1, 3)
               * _aff(m + l + n - 1, 4))
        den = (_aff(l) * _aff(l - 1) * _aff(m + l, 2) * _aff(m + l - 1, 2)
               * _aff(l + n, 2) * _aff(l + n - 1, 2)
               * _aff(m + l + n, 3) * _aff(m + l + n - 1, 3))
        return num / den
    raise ValueError(f"unknown coefficient kind {kind!r}")


def recurrence_rows(N: int):
    """Multiplication rules z_r * P_m = sum coeff * P_{m+shift} as a mapping
    r -> list of (shift, coefficient function of m)."""
    if N == 3:
        def row1(m):
            mm, nn = m
            return [((1, 0), KappaRational.one()),
                    ((-1, 1), recurrence_coefficient("c", (mm,))),
                    ((0, -1), recurrence_coefficient("a", (mm, nn)))]

        def row2(m):
            mm, nn = m
            return [((0, 1), KappaRational.one()),
                    ((1, -1), recurrence_coefficient("c", (nn,))),
                    ((-1, 0), recurrence_coefficient("a", (nn, mm)))]

        return {1: row1, 2: row2}
    if N == 4:
        def row1(m):
            mm, ll, nn = m
            return [((1, 0, 0), KappaRational.one()),
                    ((-1, 1, 0), recurrence_coefficient("c", (mm,))),
                    ((0, -1, 1), recurrence_coefficient("a", (mm, ll))),
                    ((0, 0, -1), recurrence_coefficient("d", (mm, ll, nn)))]

        def row2(m):
            # adjusted reading of the z_2 rule: the two order-one mixed terms
            # target P_{m-1,l,n+1} and P_{m+1,l,n-1} respectively
            mm, ll, nn = m
            return [((0, 1, 0), KappaRational.one()),
                    ((1, -1, 1), recurrence_coefficient("c", (ll,))),
                    ((-1, 0, 1), recurrence_coefficient("a", (ll, mm))),
                    ((1, 0, -1), recurrence_coefficient("a", (ll, nn))),
                    ((-1, 1, -1), recurrence_coefficient("f", (mm, ll, nn))),
                    ((0, -1, 0), recurrence_coefficient("g", (mm, ll, nn)))]

        def row3(m):
            mm, ll, nn = m
            return [((0, 0, 1), KappaRational.one()),
                    ((0, 1, -1), recurrence_coefficient("c", (nn,))),
                    ((1, -1, 0), recurrence_coefficient("a", (nn, ll))),
                    ((-1, 0, 0), recurrence_coefficient("d", (nn, ll, mm)))]

        return {1: row1, 2: row2, 3: row3}
    raise ValueError(f"recurrence rows available for N in {{3, 4}}, got {N}")


@dataclass(frozen=True)
class RecurrenceTable:
    """Closed-form recurrence coefficients for one rank."""
    rank: int

    @property
    def kinds(self) -> tuple[str, ...]:
        return ("a", "c") if self.rank == 2 else ("a", "c", "d", "f", "g")

    def coefficient(self, kind: str, args) -> KappaRational:
        if kind not in self.kinds:
            raise ValueError(f"kind {kind!r} not available at rank {self.rank}")
        return recurrence_coefficient(kind, args)


# ---------------------------------------------------------------------------
# generation: recurrence route
# ---------------------------------------------------------------------------

_recurrence_cache: dict[tuple[int, Weight], ZPolynomial] = {}


def gen_recurrence(m: Weight, N: Optional[int] = None) -> ZPolynomial:
    """Build P_m from P_0 = 1 by the closed-form multiplication rules,
    solving each rule for its top term; N in {3, 4}."""
    m = tuple(m)
    _require_dominant(m)
    if N is None:
        N = len(m) + 1
    if N not in (3, 4):
        raise ValueError(f"recurrence generation supports N in {{3, 4}}, got {N}")
    if len(m) != N - 1:
        raise ValueError(f"weight {m} has rank {len(m)}, expected {N - 1}")
    with _gen_lock:
        return _gen_recurrence_inner(m, N)


def _gen_recurrence_inner(m: Weight, N: int) -> ZPolynomial:
    hit = _recurrence_cache.get((N, m))
    if hit is not None:
        return hit
    rank = N - 1
    if all(e == 0 for e in m):
        result = ZPolynomial.one(rank)
        _recurrence_cache[(N, m)] = result
        return result
    # choose the rule whose top shift reaches m
    if m[0] >= 1:
        r = 1
        top_shift = (1,) + (0,) * (rank - 1)
    elif rank >= 2 and m[-1] >= 1:
        r = rank
        top_shift = (0,) * (rank - 1) + (1,)
    else:
        r = 2
        top_shift = (0, 1) + (0,) * (rank - 2)
    source = tuple(a - b for a, b in zip(m, top_shift))
    base = _gen_recurrence_inner(source, N)
    zr = ZPolynomial.variable(rank, r)
    acc = zr * base
    for shift, coeff in recurrence_rows(N)[r](source):
        if shift == top_shift:
            continue
        if coeff.is_zero:
            continue
        target = tuple(a + b for a, b in zip(source, shift))
        if any(e < 0 for e in target):
            continue  # labels with negative entries are the zero polynomial
        acc = acc - _gen_recurrence_inner(target, N).scale(coeff)
    _recurrence_cache[(N, m)] = acc
    return acc


# ---------------------------------------------------------------------------
# multiplication expansion and its closed-form dual
# ---------------------------------------------------------------------------

class DecompositionError(ArithmeticError):
    """A product failed to decompose in the polynomial basis."""


def expand_product(r: int, m: Weight, N: int) -> dict[Weight, KappaRational]:
    """Exact decomposition of z_r * P_m in the P basis, keyed by the net
    shift; every admissible shift of r elementary steps gets an entry
    (zero when absent)."""
    m = tuple(m)
    _require_dominant(m)
    n = N - 1
    if not 1 <= r <= n:
        raise ValueError(f"z_{r} out of range for rank {n}")
    admissible = [_mu_sum(sub, n)
                  for sub in itertools.combinations(range(1, N + 1), r)]
    work = ZPolynomial.variable(n, r) * gen_eigen(m, N)
    result: dict[Weight, KappaRational] = {}
    while not work.is_zero:
        nu = work.leading_weight()
        shift = tuple(a - b for a, b in zip(nu, m))
        if shift not in admissible:
            raise DecompositionError(
                f"leading weight {nu} is not an admissible target of z_{r}*P_{m}")
        c = work.coefficient(nu)
        work = work - gen_eigen(nu, N).scale(c)
        result[shift] = c
    for shift in admissible:
        result.setdefault(shift, KappaRational.zero())
    return result


# ---------------------------------------------------------------------------
# step operators
# ---------------------------------------------------------------------------

def step(m: Weight, s: Weight, N: int) -> tuple[ZPolynomial, KappaRational]:
    """Apply the raising/lowering operator for the shift s to P_m.

    Returns (P_{m+s}, sigma) with sigma the proportionality factor; at a
    boundary where the target does not exist the result is (0, 0).
    """
    m = tuple(m)
    s = tuple(s)
    _require_dominant(m)
    if N not in (3, 4):
        raise ValueError(f"step operators support N in {{3, 4}}, got {N}")
    sign, subset, r = shift_decompose(s, N)
    rank = N - 1
    if sign > 0:
        zr = r
        t_shift = kr(-2 * r, N)
    else:
        zr = N - r
        t_shift = kr(2 * r, N)
    lv = l_vector(m, N)
    q = ZPolynomial.variable(rank, zr) * gen_eigen(m, N)
    for i in subset:
        t_val = lv.component(i) + t_shift
        q = _integrals.char_apply(q, N, t_val)
    if q.is_zero:
        return ZPolynomial.zero(rank), KappaRational.zero()
    target = tuple(a + b for a, b in zip(m, s))
    if any(e < 0 for e in target):
        raise DecompositionError(
            f"nonzero step result for invalid target {target}")
    p_target = gen_eigen(target, N)
    sigma = q.coefficient(target)
    if q != p_target.scale(sigma):
        raise DecompositionError(
            f"step result for shift {s} at {m} is not proportional to one polynomial")
    return p_target, sigma


# ---------------------------------------------------------------------------
# closed-form step factors
# ---------------------------------------------------------------------------

def _prod(*factors: KappaRational) -> KappaRational:
    out = KappaRational.one()
    for f in factors:
        out = out * f
    return out


def _pair_norm(a: int, b: int) -> KappaRational:
    """8 (a+b+2κ)(a+κ): single-shift normalization for three particles."""
    return kr(8) * _aff(a + b, 2) * _aff(a)


def _pair_norm_mixed(a: int, b: int) -> KappaRational:
    """8 (a+κ)(b+κ): mixed single-shift normalization for three particles."""
    return kr(8) * _aff(a) * _aff(b)


def _chain_norm(m: int, l: int, n: int) -> KappaRational:
    """16 (m+κ)(m+l+2κ)(m+l+n+3κ): single-shift normalization, four particles."""
    return kr(16) * _aff(m) * _aff(m + l, 2) * _aff(m + l + n, 3)


def _chain_norm_mixed(m: int, l: int, n: int) -> KappaRational:
    """16 (m+κ)(l+κ)(l+n+2κ): mixed single-shift normalization, four particles."""
    return kr(16) * _aff(m) * _aff(l) * _aff(l + n, 2)


def _double_norm_adjacent(m: int, l: int, n: int) -> KappaRational:
    """256 (l+κ)(m+1+κ)(m-1+κ)(m+l+2κ)(l+n+2κ)(m+l+n+3κ)."""
    return _prod(kr(256), _aff(l), _aff(m + 1), _aff(m - 1),
                 _aff(m + l, 2), _aff(l + n, 2), _aff(m + l + n, 3))


def _double_norm_split(m: int, l: int, n: int) -> KappaRational:
    """256 (m+κ)(l+κ)(n+κ)(m+l+1+2κ)(m+l-1+2κ)(m+l+n+3κ)."""
    return _prod(kr(256), _aff(m), _aff(l), _aff(n),
                 _aff(m + l + 1, 2), _aff(m + l - 1, 2), _aff(m + l + n, 3))


def _double_norm_outer(m: int, l: int, n: int) -> KappaRational:
    """256 (m+κ)(n+κ)(m+l+2κ)(l+n+2κ)(m+l+n+1+3κ)(m+l+n-1+3κ)."""
    return _prod(kr(256), _aff(m), _aff(n), _aff(m + l, 2), _aff(l + n, 2),
                 _aff(m + l + n + 1, 3), _aff(m + l + n - 1, 3))


def _double_norm_inner(m: int, l: int, n: int) -> KappaRational:
    """256 (m+κ)(n+κ)(l+1+κ)(l-1+κ)(m+l+2κ)(l+n+2κ)."""
    return _prod(kr(256), _aff(m), _aff(n), _aff(l + 1), _aff(l - 1),
                 _aff(m + l, 2), _aff(l + n, 2))


def _rc(kind: str, *args: int) -> KappaRational:
    return recurrence_coefficient(kind, args)


_SIGMA_RANK2: dict[Weight, Callable[[int, int], KappaRational]] = {
    (1, 0): lambda m, n: -_pair_norm(m, n),
    (-1, 1): lambda m, n: _pair_norm_mixed(m, n) * _rc("c", m),
    (0, -1): lambda m, n: -_pair_norm(n, m) * _rc("a", m, n),
    (-1, 0): lambda m, n: _pair_norm(m, n) * _rc("a", n, m),
    (1, -1): lambda m, n: -_pair_norm_mixed(m, n) * _rc("c", n),
    (0, 1): lambda m, n: _pair_norm(n, m),
}

# The two mixed double shifts carry the same adjusted reading as the z_2
# multiplication rule: their order-one factors are a(l,n) and a(l,m).
_SIGMA_RANK3: dict[Weight, Callable[[int, int, int], KappaRational]] = {
    (1, 0, 0): lambda m, l, n: -_chain_norm(m, l, n),
    (-1, 1, 0): lambda m, l, n: _chain_norm_mixed(m, l, n) * _rc("c", m),
    (0, -1, 1): lambda m, l, n: -_chain_norm_mixed(n, l, m) * _rc("a", m, l),
    (0, 0, -1): lambda m, l, n: _chain_norm(n, l, m) * _rc("d", m, l, n),
    (0, 0, 1): lambda m, l, n: -_chain_norm(n, l, m),
    (0, 1, -1): lambda m, l, n: _chain_norm_mixed(n, l, m) * _rc("c", n),
    (1, -1, 0): lambda m, l, n: -_chain_norm_mixed(m, l, n) * _rc("a", n, l),
    (-1, 0, 0): lambda m, l, n: _chain_norm(m, l, n) * _rc("d", n, l, m),
    (0, 1, 0): lambda m, l, n: -_double_norm_adjacent(m, l, n),
    (1, -1, 1): lambda m, l, n: _double_norm_split(m, l, n) * _rc("c", l),
    (1, 0, -1): lambda m, l, n: -_double_norm_outer(m, l, n) * _rc("a", l, n),
    (-1, 0, 1): lambda m, l, n: -_double_norm_inner(m, l, n) * _rc("a", l, m),
    (-1, 1, -1): lambda m, l, n: _double_norm_split(n, l, m) * _rc("f", m, l, n),
    (0, -1, 0): lambda m, l, n: -_double_norm_adjacent(n, l, m) * _rc("g", m, l, n),
}


def tabulated_shifts(N: int) -> tuple[Weight, ...]:
    if N == 3:
        return tuple(_SIGMA_RANK2)
    if N == 4:
        return tuple(_SIGMA_RANK3)
    raise ValueError(f"step tables available for N in {{3, 4}}, got {N}")


def sigma_closed_form(m: Weight, s: Weight, N: int) -> KappaRational:
    """Closed-form proportionality factor of the step operator for shift s."""
    m = tuple(m)
    s = tuple(s)
    _require_dominant(m)
    if N == 3:
        table = _SIGMA_RANK2
    elif N == 4:
        table = _SIGMA_RANK3
    else:
        raise ValueError(f"step tables available for N in {{3, 4}}, got {N}")
    fn = table.get(s)
    if fn is None:
        raise ShiftNotTabulated(f"shift {s} has no tabulated step operator")
    return fn(*m)


@dataclass(frozen=True)
class SigmaTable:
    """Closed-form step factors for one rank."""
    rank: int

    @property
    def shifts(self) -> tuple[Weight, ...]:
        return tabulated_shifts(self.rank + 1)

    def closed_form(self, m: Weight, s: Weight) -> KappaRational:
        return sigma_closed_form(m, s, self.rank + 1)
