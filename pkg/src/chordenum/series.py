"""Exact truncated formal power series in t over rationals or marker polynomials.

Coefficients live in one of two rings: plain ``Fraction``s, or bivariate
polynomials in the formal markers z and x with rational coefficients
(``MarkerPoly``).  All arithmetic is exact modulo t^(order+1); precondition
violations raise ``SeriesError`` rather than truncating silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class SeriesError(ValueError):
    pass


class MarkerPoly:
    """Polynomial in the markers z and x over the rationals.

    Stored as a map (z degree, x degree) -> nonzero Fraction.  Degrees stay
    naturally bounded in every construction here (the t^n coefficient of a
    generating function never exceeds z-degree n+1 and x-degree n), so no
    truncation in the markers is applied.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {k: v for k, v in terms.items() if v != 0}

    @classmethod
    def constant(cls, value) -> "MarkerPoly":
        return cls({(0, 0): Fraction(value)})

    @classmethod
    def marker(cls, name: str) -> "MarkerPoly":
        if name == "z":
            return cls({(1, 0): Fraction(1)})
        if name == "x":
            return cls({(0, 1): Fraction(1)})
        raise SeriesError(f"unknown marker {name!r}")

    def _coerce(self, other):
        if isinstance(other, MarkerPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MarkerPoly.constant(other)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return MarkerPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MarkerPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                k = (a + c, b + d)
                out[k] = out.get(k, Fraction(0)) + u * v
        return MarkerPoly(out)

    __rmul__ = __mul__

    def scaled(self, q: Fraction) -> "MarkerPoly":
        return MarkerPoly({k: v * q for k, v in self.terms.items()})

    def differentiate(self, marker: str) -> "MarkerPoly":
        pos = 0 if marker == "z" else 1
        out = {}
        for (a, b), v in self.terms.items():
            deg = (a, b)[pos]
            if deg == 0:
                continue
            k = (a - 1, b) if pos == 0 else (a, b - 1)
            out[k] = out.get(k, Fraction(0)) + v * deg
        return MarkerPoly(out)

    def substitute(self, z=None, x=None):
        """Evaluate markers; returns a Fraction once both are assigned."""
        out: dict[tuple[int, int], Fraction] = {}
        for (a, b), v in self.terms.items():
            if z is not None:
                v = v * Fraction(z) ** a
                a = 0
            if x is not None:
                v = v * Fraction(x) ** b
                b = 0
            k = (a, b)
            out[k] = out.get(k, Fraction(0)) + v
        poly = MarkerPoly(out)
        if z is not None and x is not None:
            return poly.terms.get((0, 0), Fraction(0))
        return poly

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise SeriesError(f"not a constant polynomial: {self}")
        return self.terms.get((0, 0), Fraction(0))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, b), v in sorted(self.terms.items()):
            part = str(v)
            if a:
                part += f"*z^{a}" if a > 1 else "*z"
            if b:
                part += f"*x^{b}" if b > 1 else "*x"
            bits.append(part)
        return " + ".join(bits)


class _RationalRing:
    name = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def embed(value) -> Fraction:
        return Fraction(value)

    @staticmethod
    def invert(c: Fraction) -> Fraction:
        if c == 0:
            raise SeriesError("constant term is not invertible")
        return 1 / c

    @staticmethod
    def scale(c: Fraction, q: Fraction) -> Fraction:
        return c * q


class _MarkerRing:
    name = "markers"
    zero = MarkerPoly()
    one = MarkerPoly.constant(1)

    @staticmethod
    def embed(value) -> MarkerPoly:
        if isinstance(value, MarkerPoly):
            return value
        return MarkerPoly.constant(value)

    @staticmethod
    def invert(c: MarkerPoly) -> MarkerPoly:
        value = c.constant_value()  # raises on genuine marker content
        if value == 0:
            raise SeriesError("constant term is not invertible")
        return MarkerPoly.constant(1 / value)

    @staticmethod
    def scale(c: MarkerPoly, q: Fraction) -> MarkerPoly:
        return c.scaled(q)


RATIONAL = _RationalRing()
MARKERS = _MarkerRing()


@dataclass(frozen=True)
class TruncatedSeries:
    """Formal power series in t, exact modulo t^(order+1)."""

    ring: object
    coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, value, order: int, ring=RATIONAL) -> "TruncatedSeries":
        coeffs = [ring.embed(value)] + [ring.zero] * order
        return cls(ring, tuple(coeffs))

    @classmethod
    def identity(cls, order: int, ring=RATIONAL) -> "TruncatedSeries":
        """The series t."""
        if order < 1:
            raise SeriesError("order must be at least 1 for the identity series")
        coeffs = [ring.zero] * (order + 1)
        coeffs[1] = ring.one
        return cls(ring, tuple(coeffs))

    def lift_to_markers(self) -> "TruncatedSeries":
        if self.ring is MARKERS:
            return self
        return TruncatedSeries(MARKERS, tuple(MarkerPoly.constant(c) for c in self.coeffs))

    # -- ring operations ----------------------------------------------

    def _pair(self, other):
        if isinstance(other, TruncatedSeries):
            if other.ring is not self.ring:
                raise SeriesError("mixed coefficient rings; lift explicitly")
            return other
        return TruncatedSeries.constant(other, self.order, self.ring)

    def __add__(self, other):
        other = self._pair(other)
        order = min(self.order, other.order)
        return TruncatedSeries(
            self.ring, tuple(a + b for a, b in zip(self.coeffs[: order + 1], other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.ring, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._pair(other))

    def __rsub__(self, other):
        return (-self) + self._pair(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return TruncatedSeries(self.ring, tuple(self.ring.scale(c, q) for c in self.coeffs))
        other = self._pair(other)
        order = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(order + 1):
            acc = self.ring.zero
            for i in range(n + 1):
                acc = acc + a[i] * b[n - i]
            out.append(acc)
        return TruncatedSeries(self.ring, tuple(out))

    __rmul__ = __mul__

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.ring, self.coeffs[: order + 1])

    def reciprocal(self) -> "TruncatedSeries":
        inv0 = self.ring.invert(self.coeffs[0])
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = self.ring.zero
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * out[n - k]
            out.append(-(inv0 * acc))
        return TruncatedSeries(self.ring, tuple(out))

    def sqrt(self) -> "TruncatedSeries":
        if self.coeffs[0] != self.ring.one:
            raise SeriesError("square root requires constant term 1")
        half = Fraction(1, 2)
        out = [self.ring.one]
        for n in range(1, self.order + 1):
            acc = self.coeffs[n]
            for k in range(1, n):
                acc = acc - out[k] * out[n - k]
            out.append(self.ring.scale(acc, half))
        return TruncatedSeries(self.ring, tuple(out))

    def exp(self) -> "TruncatedSeries":
        if self.coeffs[0] != self.ring.zero:
            raise SeriesError("exponential requires constant term 0")
        # f' = g' f, solved coefficientwise with exact division by n
        g = self.coeffs
        out = [self.ring.one]
        for n in range(1, self.order + 1):
            acc = self.ring.zero
            for k in range(1, n + 1):
                acc = acc + self.ring.scale(g[k], Fraction(k)) * out[n - k]
            out.append(self.ring.scale(acc, Fraction(1, n)))
        return TruncatedSeries(self.ring, tuple(out))

    def derivative(self) -> "TruncatedSeries":
        """d/dt; the result is exact only to order-1."""
        if self.order == 0:
            raise SeriesError("cannot differentiate an order-0 truncation")
        out = [self.ring.scale(self.coeffs[n + 1], Fraction(n + 1)) for n in range(self.order)]
        return TruncatedSeries(self.ring, tuple(out))

    def antiderivative(self) -> "TruncatedSeries":
        """Integral from 0; raises the order by one."""
        out = [self.ring.zero]
        out += [self.ring.scale(self.coeffs[n], Fraction(1, n + 1)) for n in range(self.order + 1)]
        return TruncatedSeries(self.ring, tuple(out))

    # -- marker operations --------------------------------------------

    def marker_derivative(self, marker: str) -> "TruncatedSeries":
        if self.ring is not MARKERS:
            raise SeriesError("marker derivative requires marker coefficients")
        return TruncatedSeries(MARKERS, tuple(c.differentiate(marker) for c in self.coeffs))

    def substitute_markers(self, z=None, x=None) -> "TruncatedSeries":
        """Assign markers; drops to rational coefficients once none remain."""
        if self.ring is not MARKERS:
            raise SeriesError("marker substitution requires marker coefficients")
        subbed = []
        for c in self.coeffs:
            value = c.substitute(z=z, x=x)
            subbed.append(MarkerPoly.constant(value) if isinstance(value, Fraction) else value)
        if all(c.is_constant() for c in subbed):
            return TruncatedSeries(RATIONAL, tuple(c.constant_value() for c in subbed))
        return TruncatedSeries(MARKERS, tuple(subbed))

    def is_zero(self) -> bool:
        return all(c == self.ring.zero for c in self.coeffs)


# ---------------------------------------------------------------------------
# Named closed forms


def _sqrt_one_minus_2t(order: int) -> TruncatedSeries:
    t = TruncatedSeries.identity(order)
    return (TruncatedSeries.constant(1, order) - 2 * t).sqrt()


def named_series(name: str, order: int) -> TruncatedSeries:
    """Construct one of the closed-form generating functions exactly.

    Univariate names (rational coefficients):

    * ``b``   -- EGF of all matchings, 1/sqrt(1-2t);
    * ``phi`` -- loopless linear diagrams;
    * ``chi`` -- the shifted loopless linear EGF (integral of phi minus t);
    * ``psi`` -- loopless chord diagrams;
    * ``W``   -- simple linear diagrams, coefficient n holding n+1 chords;
    * ``U``   -- simple chord diagrams.

    Marker names (MarkerPoly coefficients):

    * ``wz``  -- loopless-side classifier, z marking loops;
    * ``wzx`` -- full classifier, z marking loops, x marking parallel pairs,
      coefficient n holding n+1 chords;
    * ``wx``  -- classifier by parallel pairs only.
    """
    if order < 1:
        raise SeriesError("order must be at least 1")
    t = TruncatedSeries.identity(order)
    s = _sqrt_one_minus_2t(order)
    one = TruncatedSeries.constant(1, order)

    if name == "b":
        return s.reciprocal()
    if name == "phi":
        return (s - 1).exp() * s.reciprocal()
    if name == "chi":
        return one - t - (s - 1).exp()
    if name == "psi":
        return (s - 1).exp() * s.reciprocal() - 2 + t + (s - 1).exp()
    if name == "W":
        return (one - s) * (s * s * s).reciprocal() * (s - 1 - t).exp()
    if name == "U":
        return (s - 1 - t).exp() * s.reciprocal() * (one + s) - (2 - t) * (-t).exp()

    tm = TruncatedSeries.identity(order, MARKERS)
    sm = s.lift_to_markers()
    one_m = TruncatedSeries.constant(1, order, MARKERS)
    z = MarkerPoly.marker("z")
    x = MarkerPoly.marker("x")

    if name == "wz":
        return ((sm - 1) * (1 - z)).exp() * sm.reciprocal()
    if name == "wx":
        return (sm * sm * sm).reciprocal() * (tm * (x - 1)).exp()
    if name == "wzx":
        prefactor = (sm * (z - 1) + 1) * (sm * sm * sm).reciprocal()
        series = prefactor * ((one_m - sm) * (z - 1) + tm * (x - 1)).exp()
        if series[0] != z:
            raise SeriesError("classifier does not start from a single loop chord")
        return series
    raise SeriesError(f"unknown series name {name!r}")


SERIES_NAMES = ("b", "phi", "chi", "psi", "W", "U", "wz", "wx", "wzx")
MARKER_SERIES = ("wz", "wx", "wzx")


def integer_coeffs(series: TruncatedSeries, z=None, x=None) -> list[int]:
    """n! times each coefficient, which must come out integral.

    Marker series require the markers they contain to be assigned (0 or 1)
    first.  A non-integer value signals a construction bug and raises.
    """
    if series.ring is MARKERS:
        series = series.substitute_markers(z=z, x=x)
        if series.ring is not RATIONAL:
            raise SeriesError("marker assignment left free markers behind")
    elif z is not None or x is not None:
        raise SeriesError("marker assignment given for a series without markers")
    out = []
    for n, c in enumerate(series.coeffs):
        value = c * math.factorial(n)
        if value.denominator != 1:
            raise SeriesError(f"coefficient {n} times {n}! is not an integer: {value}")
        out.append(int(value))
    return out


def marker_triangle(series: TruncatedSeries) -> dict:
    """n! times each coefficient of t^n z^k x^l, as integers keyed (n, k, l)."""
    if series.ring is not MARKERS:
        raise SeriesError("marker triangle requires marker coefficients")
    out = {}
    for n, poly in enumerate(series.coeffs):
        fact = math.factorial(n)
        for (k, l), v in poly.terms.items():
            value = v * fact
            if value.denominator != 1:
                raise SeriesError(f"coefficient ({n},{k},{l}) is not integral: {value}")
            out[(n, k, l)] = int(value)
    return out


# ---------------------------------------------------------------------------
# Defining-equation residuals (sanity checks for the closed forms)


def loop_pde_residual(order: int) -> TruncatedSeries:
    """Residual of the defining PDE of ``wz``, exact to the given order.

    The classifier satisfies w_t = z w + 2t w_t + (1-z) w_z with w(z,0)=1;
    the returned series is the left side minus the right side.
    """
    w = named_series("wz", order + 1)
    z = MarkerPoly.marker("z")
    t = TruncatedSeries.identity(order, MARKERS)
    wt = w.derivative()
    w = w.truncate(order)
    wz = w.marker_derivative("z")
    return wt - w * z - 2 * (t * wt) - wz * (1 - z)


def full_pde_residual(order: int) -> TruncatedSeries:
    """Residual of the defining PDE of ``wzx``, exact to the given order.

    The classifier satisfies
    w_t = (z+x+1) w + 2t w_t - (z-1) w_z - 2(x-1) w_x with w(0,z,x) = z.
    """
    w = named_series("wzx", order + 1)
    z = MarkerPoly.marker("z")
    x = MarkerPoly.marker("x")
    t = TruncatedSeries.identity(order, MARKERS)
    wt = w.derivative()
    w = w.truncate(order)
    wz = w.marker_derivative("z")
    wx = w.marker_derivative("x")
    return wt - w * (z + x + 1) - 2 * (t * wt) + wz * (z - 1) + wx * (2 * (x - 1))
