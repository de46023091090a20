"""Exact scalar arithmetic: Gaussian rationals and rational functions of the
coupling parameter kappa.

The scalar tower is

    Fraction  ->  GaussRational  ->  KappaPolynomial  ->  KappaRational

and ``KappaRational`` is the coefficient field used by every polynomial layer
in the package.  Gaussian rationals are carried internally because the
operator engine picks up explicit factors of the imaginary unit; all public
results are asserted real rather than proven real term by term.

Every value is immutable and kept in a canonical form, so equality of
representations is equality of values.  Canonical form of ``num/den``:

* gcd(num, den) = 1 as polynomials over the Gaussian rationals,
* den has real coefficients (division by a genuinely non-real polynomial
  is rejected),
* num and den are jointly scaled by one positive rational so that their
  coefficients are coprime integers and den's leading coefficient is a
  positive rational.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd
from typing import Iterable, Union

try:  # GMP-backed rationals are interchangeable with Fraction and much faster
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    Q = Fraction

Rational = Fraction

_F0 = Q(0)
_F1 = Q(1)
_QT = type(Q(0))


def _to_q(x):
    """Coerce ints, Fractions (even with non-int internals) and mpq to Q."""
    if type(x) is _QT:
        return x
    if isinstance(x, int):
        return Q(x)
    if isinstance(x, Fraction):
        return Q(int(x.numerator), int(x.denominator))
    return Q(x)


class KappaZeroDivision(ZeroDivisionError):
    """Raised on division by the zero element of the kappa field."""


class KappaPole(ArithmeticError):
    """Raised when a rational function is evaluated at a zero of its
    denominator.  Carries the vanishing denominator factor."""

    def __init__(self, factor: "KappaPolynomial", point: Fraction):
        self.factor = factor
        self.point = point
        super().__init__(f"κ-pole: denominator {factor} vanishes at κ={point}")


class NonRealDenominator(ArithmeticError):
    """Raised when normalization would need a denominator that is not a
    scalar multiple of a real polynomial."""


class SpectralDegeneracy(ArithmeticError):
    """Raised by numeric-kappa generation when two eigenvalues collide."""


ScalarLike = Union[int, Fraction, "GaussRational"]


class GaussRational:
    """A Gaussian rational re + i*im with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0):
        object.__setattr__(self, "re", re if type(re) is _QT else _to_q(re))
        object.__setattr__(self, "im", im if type(im) is _QT else _to_q(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    @staticmethod
    def _raw(re: Fraction, im: Fraction) -> "GaussRational":
        g = GaussRational.__new__(GaussRational)
        object.__setattr__(g, "re", re)
        object.__setattr__(g, "im", im)
        return g

    @staticmethod
    def coerce(x: ScalarLike) -> "GaussRational":
        if isinstance(x, GaussRational):
            return x
        return GaussRational(_to_q(x))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "GaussRational":
        return GaussRational._raw(self.re, -self.im)

    def __add__(self, other: ScalarLike) -> "GaussRational":
        o = other if type(other) is GaussRational else GaussRational.coerce(other)
        return GaussRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "GaussRational":
        o = other if type(other) is GaussRational else GaussRational.coerce(other)
        return GaussRational._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: ScalarLike) -> "GaussRational":
        return GaussRational.coerce(other) - self

    def __neg__(self) -> "GaussRational":
        return GaussRational._raw(-self.re, -self.im)

    def __mul__(self, other: ScalarLike) -> "GaussRational":
        o = other if type(other) is GaussRational else GaussRational.coerce(other)
        if not self.im:
            if not o.im:
                return GaussRational._raw(self.re * o.re, _F0)
            if not self.re:
                return _GR_ZERO
            if not o.re:
                return GaussRational._raw(_F0, self.re * o.im)
        elif not self.re and not o.im:
            return GaussRational._raw(_F0, self.im * o.re)
        elif not self.re and not o.re:
            return GaussRational._raw(-(self.im * o.im), _F0)
        return GaussRational._raw(self.re * o.re - self.im * o.im,
                                  self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "GaussRational":
        o = other if type(other) is GaussRational else GaussRational.coerce(other)
        if not o:
            raise KappaZeroDivision("division by zero in κ-field")
        if not self.im and not o.im:
            return GaussRational._raw(self.re / o.re, _F0)
        n = o.re * o.re + o.im * o.im
        return GaussRational._raw((self.re * o.re + self.im * o.im) / n,
                                  (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other: ScalarLike) -> "GaussRational":
        return GaussRational.coerce(other) / self

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GaussRational(other)
        if not isinstance(other, GaussRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return f"{self.re}"
        if self.re == 0:
            return f"{self.im}*i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}*i)"


GR_ZERO = GaussRational(0)
GR_ONE = GaussRational(1)
GR_I = GaussRational(0, 1)
_GR_ZERO = GR_ZERO


def _content(fractions: Iterable[Fraction]) -> Fraction:
    """Positive rational c with entries/c coprime integers; 0 for no entries."""
    num = 0
    den = 1
    for f in fractions:
        num = _igcd(num, int(f.numerator))
        den = den * int(f.denominator) // _igcd(den, int(f.denominator))
    if num == 0:
        return Fraction(0)
    return Fraction(num, den)


class KappaPolynomial:
    """Polynomial in κ with GaussRational coefficients, ascending powers,
    no trailing zeros (the zero polynomial has an empty coefficient tuple)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        cs = [GaussRational.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("KappaPolynomial is immutable")

    # -- constructors ------------------------------------------------------
    @staticmethod
    def _raw(coeffs: tuple) -> "KappaPolynomial":
        """Trusted constructor: coeffs already GaussRational, no trailing zeros."""
        p = KappaPolynomial.__new__(KappaPolynomial)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @staticmethod
    def _trim(cs: list) -> "KappaPolynomial":
        while cs and not cs[-1]:
            cs.pop()
        return KappaPolynomial._raw(tuple(cs))

    @staticmethod
    def zero() -> "KappaPolynomial":
        return _KP_ZERO

    @staticmethod
    def one() -> "KappaPolynomial":
        return _KP_ONE

    @staticmethod
    def kappa() -> "KappaPolynomial":
        return _KP_KAPPA

    @staticmethod
    def const(x: ScalarLike) -> "KappaPolynomial":
        return KappaPolynomial([GaussRational.coerce(x)])

    @staticmethod
    def linear(c0: ScalarLike, c1: ScalarLike) -> "KappaPolynomial":
        """The affine polynomial c0 + c1*κ."""
        return KappaPolynomial([c0, c1])

    # -- structure ---------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_real(self) -> bool:
        return all(c.is_real for c in self.coeffs)

    @property
    def leading(self) -> GaussRational:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other: "KappaPolynomial") -> "KappaPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return KappaPolynomial._trim(out)

    def __sub__(self, other: "KappaPolynomial") -> "KappaPolynomial":
        return self + (-other)

    def __neg__(self) -> "KappaPolynomial":
        return KappaPolynomial._raw(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "KappaPolynomial") -> "KappaPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _KP_ZERO
        if len(a) == 1 and len(b) == 1:
            c = a[0] * b[0]
            return KappaPolynomial._raw((c,)) if c else _KP_ZERO
        out = [GR_ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        return KappaPolynomial._trim(out)

    def scale(self, s: ScalarLike) -> "KappaPolynomial":
        s = GaussRational.coerce(s)
        if not s:
            return _KP_ZERO
        return KappaPolynomial._raw(tuple(c * s for c in self.coeffs))

    def __pow__(self, n: int) -> "KappaPolynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = _KP_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "KappaPolynomial"):
        """Polynomial division over the Gaussian-rational field."""
        if other.is_zero:
            raise KappaZeroDivision("division by zero in κ-field")
        rem = list(self.coeffs)
        dn = other.coeffs
        dd = len(dn) - 1
        lead_inv = GR_ONE / dn[-1]
        if len(rem) - 1 < dd:
            return _KP_ZERO, self
        quot = [GR_ZERO] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = c * lead_inv
            quot[i - dd] = q
            for j, d in enumerate(dn):
                rem[i - dd + j] = rem[i - dd + j] - q * d
        return KappaPolynomial(quot), KappaPolynomial(rem)

    def __mod__(self, other: "KappaPolynomial") -> "KappaPolynomial":
        return self.divmod(other)[1]

    def exact_div(self, other: "KappaPolynomial") -> "KappaPolynomial":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "KappaPolynomial":
        if self.is_zero:
            return self
        return self.scale(GR_ONE / self.leading)

    @staticmethod
    def gcd(a: "KappaPolynomial", b: "KappaPolynomial") -> "KappaPolynomial":
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def content(self) -> Fraction:
        """Positive rational content over all real/imaginary coefficient parts."""
        entries = []
        for c in self.coeffs:
            if c.re:
                entries.append(c.re)
            if c.im:
                entries.append(c.im)
        return _content(entries)

    # -- evaluation --------------------------------------------------------
    def __call__(self, x: ScalarLike) -> GaussRational:
        x = GaussRational.coerce(x)
        acc = GR_ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def real_fractions(self) -> tuple[Fraction, ...]:
        """Coefficients as Fractions; requires a real polynomial."""
        if not self.is_real:
            raise NonRealDenominator("polynomial has non-real coefficients")
        return tuple(Fraction(c.re) for c in self.coeffs)

    # -- comparisons -------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, KappaPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"{c}*κ")
            else:
                parts.append(f"{c}*κ^{i}")
        return " + ".join(parts)


_KP_ZERO = KappaPolynomial.__new__(KappaPolynomial)
object.__setattr__(_KP_ZERO, "coeffs", ())
_KP_ONE = KappaPolynomial.__new__(KappaPolynomial)
object.__setattr__(_KP_ONE, "coeffs", (GR_ONE,))
_KP_KAPPA = KappaPolynomial.__new__(KappaPolynomial)
object.__setattr__(_KP_KAPPA, "coeffs", (GR_ZERO, GR_ONE))

KappaLike = Union[int, Fraction, GaussRational, KappaPolynomial, "KappaRational"]


def _to_poly(x) -> KappaPolynomial:
    if isinstance(x, KappaPolynomial):
        return x
    return KappaPolynomial.const(GaussRational.coerce(x))


class KappaRational:
    """Reduced ratio of KappaPolynomials; the universal scalar of the package."""

    __slots__ = ("num", "den")

    def __init__(self, num: KappaLike = 0, den: KappaLike = 1):
        if isinstance(num, KappaRational) or isinstance(den, KappaRational):
            a = num if isinstance(num, KappaRational) else KappaRational(num)
            b = den if isinstance(den, KappaRational) else KappaRational(den)
            r = a / b
            object.__setattr__(self, "num", r.num)
            object.__setattr__(self, "den", r.den)
            return
        n, d = _normalize(_to_poly(num), _to_poly(den))
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, name, value):
        raise AttributeError("KappaRational is immutable")

    @staticmethod
    def _raw(num: KappaPolynomial, den: KappaPolynomial) -> "KappaRational":
        """Internal constructor for values already in canonical form."""
        r = KappaRational.__new__(KappaRational)
        object.__setattr__(r, "num", num)
        object.__setattr__(r, "den", den)
        return r

    @staticmethod
    def zero() -> "KappaRational":
        return _KR_ZERO

    @staticmethod
    def one() -> "KappaRational":
        return _KR_ONE

    @staticmethod
    def kappa() -> "KappaRational":
        return KappaRational._raw(_KP_KAPPA, _KP_ONE)

    @staticmethod
    def const(x: ScalarLike) -> "KappaRational":
        return KappaRational(_to_poly(x), _KP_ONE)

    # -- structure ---------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_real(self) -> bool:
        return self.num.is_real and self.den.is_real

    @property
    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self) -> GaussRational:
        if not self.is_constant:
            raise ValueError(f"{self!r} is not constant in κ")
        if self.num.is_zero:
            return GR_ZERO
        return self.num.coeffs[0] / self.den.coeffs[0]

    def __bool__(self) -> bool:
        return not self.num.is_zero

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other) -> "KappaRational":
        o = _coerce_kr(other)
        if o is None:
            return NotImplemented
        if self.den is _KP_ONE and o.den is _KP_ONE:
            return KappaRational._raw(self.num + o.num, _KP_ONE)
        return KappaRational(self.num * o.den + o.num * self.den,
                             self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other) -> "KappaRational":
        o = _coerce_kr(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "KappaRational":
        o = _coerce_kr(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "KappaRational":
        return KappaRational._raw(-self.num, self.den)

    def __mul__(self, other) -> "KappaRational":
        o = _coerce_kr(other)
        if o is None:
            return NotImplemented
        if self.den is _KP_ONE and o.den is _KP_ONE:
            return KappaRational._raw(self.num * o.num, _KP_ONE)
        return KappaRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "KappaRational":
        o = _coerce_kr(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise KappaZeroDivision("division by zero in κ-field")
        return KappaRational(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "KappaRational":
        o = _coerce_kr(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> "KappaRational":
        if n < 0:
            return _KR_ONE / (self ** (-n))
        out = _KR_ONE
        for _ in range(n):
            out = out * self
        return out

    # -- evaluation --------------------------------------------------------
    def __call__(self, kappa0: int | Fraction | GaussRational) -> GaussRational:
        d = self.den(kappa0)
        if not d:
            raise KappaPole(self.den, Fraction(kappa0) if not isinstance(kappa0, GaussRational) else kappa0.re)
        return self.num(kappa0) / d

    # -- comparisons -------------------------------------------------------
    def __eq__(self, other) -> bool:
        o = _coerce_kr(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den is _KP_ONE or self.den == _KP_ONE:
            return f"({self.num})"
        return f"({self.num})/({self.den})"


def _coerce_kr(x) -> KappaRational | None:
    if isinstance(x, KappaRational):
        return x
    if isinstance(x, (int, Fraction, GaussRational)):
        return KappaRational.const(x)
    if isinstance(x, KappaPolynomial):
        return KappaRational(x, _KP_ONE)
    return None


def _normalize(num: KappaPolynomial, den: KappaPolynomial):
    if den.is_zero:
        raise KappaZeroDivision("division by zero in κ-field")
    if num.is_zero:
        return _KP_ZERO, _KP_ONE
    if den is _KP_ONE:
        return num, _KP_ONE
    g = KappaPolynomial.gcd(num, den)
    if g.degree > 0:
        num = num.exact_div(g)
        den = den.exact_div(g)
    lam = GR_ONE / den.leading
    num = num.scale(lam)
    den = den.scale(lam)
    if not den.is_real:
        raise NonRealDenominator(f"denominator {den} is not a real κ-polynomial")
    if den == _KP_ONE:
        return num, _KP_ONE
    entries = []
    for c in num.coeffs:
        if c.re:
            entries.append(c.re)
        if c.im:
            entries.append(c.im)
    for c in den.coeffs:
        if c.re:
            entries.append(c.re)
    c = _content(entries)
    if c != 1:
        inv = 1 / c
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


_KR_ZERO = KappaRational._raw(_KP_ZERO, _KP_ONE)
_KR_ONE = KappaRational._raw(_KP_ONE, _KP_ONE)


# -- spec-level operation surface ------------------------------------------

def kr_normalize(num: KappaPolynomial, den: KappaPolynomial) -> KappaRational:
    """Canonical reduced form of num/den."""
    return KappaRational(num, den)


def kr_eval(r: KappaRational, kappa0: int | Fraction) -> GaussRational:
    """Exact substitution κ -> kappa0; raises KappaPole at a denominator zero."""
    return r(Fraction(kappa0))


def kr_arith(a: KappaRational, b: KappaRational, op: str) -> KappaRational:
    """Field arithmetic dispatch for op in '+', '-', '*', '/'."""
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def kappa() -> KappaRational:
    """The coordinate function κ as a KappaRational."""
    return KappaRational.kappa()


def kr(num: int | Fraction, den: int | Fraction = 1) -> KappaRational:
    """Shorthand for a constant rational value."""
    return KappaRational.const(_to_q(num) / _to_q(den))


def lin(c0: int | Fraction, c1: int | Fraction = 1) -> KappaRational:
    """Shorthand for the affine value c0 + c1*κ."""
    return KappaRational(KappaPolynomial.linear(Fraction(c0), Fraction(c1)))
