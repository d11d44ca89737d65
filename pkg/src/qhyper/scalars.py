"""Numeric backends.

Three kinds of values flow through the library:

* exact rationals, represented by ``gmpy2.mpq`` (plain ``int`` is accepted
  wherever a rational is),
* truncated power series in the nome ``p`` with rational coefficients,
  represented by :class:`PSeries`,
* arbitrary-precision complex numbers, represented by ``gmpy2.mpc``.

Values are used directly, without a wrapper, so that the inner loops of the
lattice sums run at native gmpy2 speed.  Integers and rationals act as
embedded constants in every backend; a :class:`PSeries` refuses to combine
with a floating value.
"""

from contextlib import contextmanager
from fractions import Fraction
from numbers import Integral, Rational

import gmpy2
from gmpy2 import mpc, mpfr, mpq

from .errors import InvalidArgument

EXACT = "exact"
PSERIES = "pseries"
FLOAT = "float"
MODES = (EXACT, PSERIES, FLOAT)

_MPQ = type(mpq(0))
_MPC = type(mpc(0))
_MPFR = type(mpfr(0))


def as_rational(x):
    """Convert an int/Fraction/mpq to ``mpq``; anything else is rejected."""
    if isinstance(x, _MPQ):
        return x
    if isinstance(x, (Integral, Rational)):
        return mpq(int(x.numerator), int(x.denominator))
    raise InvalidArgument(f"expected a rational value, got {type(x).__name__}")


def _is_constant(x):
    return isinstance(x, (int, _MPQ, Fraction)) and not isinstance(x, bool)


class PSeries:
    """A truncated power series ``sum_{j<K} c_j p^j`` with rational ``c_j``.

    Instances are immutable.  Arithmetic with another series requires equal
    order ``K``; ints and rationals are treated as constant series.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(as_rational(c) for c in coeffs)
        if not coeffs:
            raise InvalidArgument("a p-series needs order K >= 1")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("PSeries is immutable")

    @classmethod
    def _raw(cls, coeffs):
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        return obj

    @classmethod
    def constant(cls, c, order):
        if order < 1:
            raise InvalidArgument("a p-series needs order K >= 1")
        zero = mpq(0)
        return cls._raw((as_rational(c),) + (zero,) * (order - 1))

    @classmethod
    def variable(cls, order):
        """The series ``p`` itself (zero when ``order == 1``)."""
        coeffs = [mpq(0)] * order
        if order > 1:
            coeffs[1] = mpq(1)
        return cls._raw(coeffs)

    @property
    def order(self):
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j]

    def constant_term(self):
        return self.coeffs[0]

    def valuation(self):
        """Index of the first nonzero coefficient, or ``order`` for zero."""
        for j, c in enumerate(self.coeffs):
            if c:
                return j
        return len(self.coeffs)

    def is_zero(self):
        return not any(self.coeffs)

    def _other(self, other):
        if isinstance(other, PSeries):
            if len(other.coeffs) != len(self.coeffs):
                raise InvalidArgument(
                    f"p-series orders differ: {len(self.coeffs)} vs {len(other.coeffs)}"
                )
            return other
        if _is_constant(other):
            return None
        raise InvalidArgument(
            f"cannot combine a p-series with {type(other).__name__}"
        )

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            c = self.coeffs
            return PSeries._raw((c[0] + other,) + c[1:])
        return PSeries._raw(a + b for a, b in zip(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return PSeries._raw(-a for a in self.coeffs)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            c = self.coeffs
            return PSeries._raw((c[0] - other,) + c[1:])
        return PSeries._raw(a - b for a, b in zip(self.coeffs, o.coeffs))

    def __rsub__(self, other):
        self._other(other)
        c = self.coeffs
        return PSeries._raw((other - c[0],) + tuple(-a for a in c[1:]))

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            if other == 1:
                return self
            return PSeries._raw(a * other for a in self.coeffs)
        return pseries_mul(self, o)

    __rmul__ = __mul__

    def inverse(self):
        a = self.coeffs
        if not a[0]:
            raise ZeroDivisionError("p-series with zero constant term is not invertible")
        k = len(a)
        inv0 = 1 / a[0]
        b = [inv0]
        nonzero = [i for i in range(1, k) if a[i]]
        for n in range(1, k):
            s = mpq(0)
            for i in nonzero:
                if i > n:
                    break
                s += a[i] * b[n - i]
            b.append(-s * inv0)
        return PSeries._raw(b)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            if not other:
                raise ZeroDivisionError("division of a p-series by zero")
            inv = 1 / as_rational(other)
            return PSeries._raw(a * inv for a in self.coeffs)
        return pseries_mul(self, o.inverse())

    def __rtruediv__(self, other):
        self._other(other)
        inv = self.inverse()
        if other == 1:
            return inv
        return PSeries._raw(a * other for a in inv.coeffs)

    def __pow__(self, n):
        if not isinstance(n, Integral):
            raise InvalidArgument("p-series powers must be integers")
        n = int(n)
        base = self
        if n < 0:
            base, n = self.inverse(), -n
        result = PSeries.constant(1, len(self.coeffs))
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, m):
        """Multiply by ``p**m`` (``m >= 0``), truncating at the order."""
        if m < 0:
            raise InvalidArgument("shift exponent must be nonnegative")
        k = len(self.coeffs)
        zero = mpq(0)
        return PSeries._raw(((zero,) * m + self.coeffs)[:k])

    def __eq__(self, other):
        if isinstance(other, PSeries):
            return self.coeffs == other.coeffs
        if _is_constant(other):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return hash(("PSeries", self.coeffs))

    def __repr__(self):
        return "PSeries([" + ", ".join(str(c) for c in self.coeffs) + "])"


def pseries_mul(f, g):
    """Cauchy product of two series of equal order, truncated at that order."""
    if not isinstance(f, PSeries) or not isinstance(g, PSeries):
        raise InvalidArgument("pseries_mul expects two PSeries")
    a, b = f.coeffs, g.coeffs
    k = len(a)
    if len(b) != k:
        raise InvalidArgument(f"p-series orders differ: {k} vs {len(b)}")
    out = [mpq(0)] * k
    bnz = [j for j in range(k) if b[j]]
    for i in range(k):
        ai = a[i]
        if not ai:
            continue
        lim = k - i
        for j in bnz:
            if j >= lim:
                break
            out[i + j] += ai * b[j]
    return PSeries._raw(out)


def backend_of(x):
    """Return the backend tag of a scalar value."""
    if isinstance(x, PSeries):
        return PSERIES
    if isinstance(x, (_MPC, _MPFR, complex, float)):
        return FLOAT
    if _is_constant(x):
        return EXACT
    raise InvalidArgument(f"not a scalar: {type(x).__name__}")


@contextmanager
def precision_scope(bits):
    """Run a block with gmpy2 real and complex precision set to ``bits``."""
    if bits < 64:
        raise InvalidArgument("float precision must be at least 64 bits")
    cur = gmpy2.get_context()
    if cur.precision == bits and cur.real_prec in (bits, -1) and cur.imag_prec in (bits, -1):
        yield
        return
    with gmpy2.context(gmpy2.get_context(), precision=bits, real_prec=bits, imag_prec=bits):
        yield


def to_float(x, bits=None):
    """Convert a rational or complex value to ``mpc`` at the active (or given) precision."""
    if isinstance(x, PSeries):
        raise InvalidArgument("cannot convert a p-series to a float scalar")
    if bits is None:
        return mpc(x)
    with precision_scope(bits):
        return mpc(x)


def scalar_from_rational(num, den, ctx):
    """Embed ``num/den`` in the backend selected by ``ctx.mode``."""
    if den == 0:
        raise InvalidArgument("denominator must be nonzero")
    value = mpq(int(num), int(den))
    if ctx.mode == EXACT:
        return value
    if ctx.mode == PSERIES:
        return PSeries.constant(value, ctx.pseries_order)
    return to_float(value, ctx.float_precision)


def scalar_is_zero(x, tol=0):
    """Zero test: exact for rationals and p-series, ``|x| <= tol`` for floats."""
    kind = backend_of(x)
    if kind == FLOAT:
        return abs(x) <= tol
    if tol:
        raise InvalidArgument("a positive tolerance is only meaningful for float scalars")
    if kind == PSERIES:
        return x.is_zero()
    return x == 0


def magnitude(x):
    """Absolute value as an ``mpfr`` (p-series: absolute value of the constant term)."""
    if isinstance(x, PSeries):
        return mpfr(abs(x.coeffs[0]))
    return abs(x) if not isinstance(x, int) else mpfr(abs(x))


def scalar_to_json(x):
    """Lossless JSON-friendly rendering of a scalar."""
    if isinstance(x, PSeries):
        return [_rational_str(c) for c in x.coeffs]
    kind = backend_of(x)
    if kind == EXACT:
        return _rational_str(x)
    z = mpc(x)
    return [str(z.real), str(z.imag)]


def _rational_str(x):
    x = as_rational(x)
    if x == 0:
        return "0"
    return f"{x.numerator}/{x.denominator}"
