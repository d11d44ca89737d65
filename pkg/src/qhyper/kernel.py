"""q-shifted factorials, theta functions and lattice factors.

Everything here is parametrised by a :class:`QContext`.  When the context
carries a nonzero nome ``p`` (p-series mode, or float mode with ``p != 0``)
the helpers switch to their elliptic form: every factor ``1 - w`` becomes
``theta(w)`` and every difference ``u - v`` becomes ``u * theta(v / u)``.
Identities written against :func:`one_minus`, :func:`diff` and
:func:`qpoch` therefore evaluate as their elliptic analogues without any
change.
"""

import math
from dataclasses import dataclass, field
from functools import reduce
from operator import mul

import gmpy2
from gmpy2 import mpc, mpfr, mpq

from .errors import ConvergenceError, InvalidArgument, ModeError, PoleError
from .scalars import (
    EXACT,
    FLOAT,
    MODES,
    PSERIES,
    PSeries,
    as_rational,
    precision_scope,
)


def binom2(r):
    return r * (r - 1) // 2


def binom3(r):
    return r * (r - 1) * (r - 2) // 6


def default_epsilon(bits):
    """Tail threshold used by adaptive sums: ``10**(-0.65 * decimal digits)``."""
    digits = bits * math.log10(2)
    return mpfr(10) ** mpfr(-0.65 * digits)


def default_tolerance(bits):
    """Float verification tolerance: ``10**(-0.6 * decimal digits)``."""
    digits = bits * math.log10(2)
    return mpfr(10) ** mpfr(-0.6 * digits)


@dataclass(frozen=True, eq=False)
class QContext:
    """Ambient data for a computation: base ``q``, nome ``p`` and numeric policy.

    ``probe`` is a positive window size used by the sampler: adaptive and
    bilateral sums then stop after that window instead of converging, which
    is enough to surface poles cheaply.
    """

    mode: str
    q: object
    p: object = 0
    float_precision: int = 256
    pseries_order: int = 8
    epsilon: object = None
    max_terms: int = 1024
    guard: float = 1e-6
    probe: int = 0
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.mode not in MODES:
            raise InvalidArgument(f"unknown mode {self.mode!r}")
        if self.float_precision < 64:
            raise InvalidArgument("float precision must be at least 64 bits")
        if self.pseries_order < 1:
            raise InvalidArgument("p-series order must be at least 1")
        if self.max_terms < 1:
            raise InvalidArgument("max_terms must be positive")
        set_ = object.__setattr__
        if self.mode == FLOAT:
            with precision_scope(self.float_precision):
                q = mpc(self.q)
                p = mpc(self.p) if self.p is not None else mpc(0)
                eps = mpfr(self.epsilon) if self.epsilon is not None else default_epsilon(
                    self.float_precision
                )
            if not 0 < abs(q) < 1:
                raise InvalidArgument("float mode needs 0 < |q| < 1")
            if not abs(p) < 1:
                raise InvalidArgument("float mode needs |p| < 1")
            set_(self, "q", q)
            set_(self, "p", p if p != 0 else 0)
            set_(self, "epsilon", eps)
        else:
            q = as_rational(self.q)
            if not 0 < abs(q) < 1:
                raise InvalidArgument("q must be a nonzero rational with |q| < 1")
            set_(self, "q", q)
            if self.mode == EXACT:
                if self.p not in (0, None):
                    raise InvalidArgument("exact mode has p = 0")
                set_(self, "p", 0)
            else:
                set_(self, "p", PSeries.variable(self.pseries_order))
            set_(self, "epsilon", mpq(0))

    @property
    def elliptic(self):
        """True when factors are theta functions rather than ``1 - x``."""
        return not (isinstance(self.p, int) and self.p == 0)

    def replace(self, **changes):
        """Copy with some fields changed (caches are not shared)."""
        fields = dict(
            mode=self.mode,
            q=self.q,
            p=self.p if self.mode == FLOAT else 0,
            float_precision=self.float_precision,
            pseries_order=self.pseries_order,
            epsilon=self.epsilon if self.mode == FLOAT else None,
            max_terms=self.max_terms,
            guard=self.guard,
            probe=self.probe,
        )
        if "float_precision" in changes and "epsilon" not in changes:
            fields["epsilon"] = None
        fields.update(changes)
        return QContext(**fields)

    def scope(self):
        """Context manager fixing gmpy2 precision for float computations."""
        return precision_scope(self.float_precision)

    def embed(self, x):
        """Bring a rational or complex input into this context's backend."""
        if self.mode == FLOAT:
            with self.scope():
                return mpc(x)
        if isinstance(x, PSeries):
            return x
        return as_rational(x)

    @property
    def one(self):
        """The unit of this context's backend (never a bare ``int``)."""
        return mpc(1) if self.mode == FLOAT else mpq(1)

    def qpow(self, k):
        """``q**k`` for an integer ``k`` (cached)."""
        cache = self._cache.setdefault("qpow", {})
        v = cache.get(k)
        if v is None:
            if self.mode == FLOAT:
                with self.scope():
                    v = self.q ** k
            else:
                v = self.q ** k
            cache[k] = v
        return v


def exact_context(q, **kw):
    return QContext(EXACT, q, **kw)


def pseries_context(q, order=8, **kw):
    return QContext(PSERIES, q, pseries_order=order, **kw)


def float_context(q, precision=256, p=0, **kw):
    return QContext(FLOAT, q, p=p, float_precision=precision, **kw)


@dataclass(frozen=True)
class LatticePoint:
    """A summation multi-index ``k`` with optional deformation parameters ``x``."""

    k: tuple
    x: tuple = None

    def __post_init__(self):
        k = tuple(int(v) for v in self.k)
        if not k:
            raise InvalidArgument("a lattice point needs rank r >= 1")
        object.__setattr__(self, "k", k)
        if self.x is not None:
            x = tuple(self.x)
            if len(x) != len(k):
                raise InvalidArgument("k and x must have the same length")
            object.__setattr__(self, "x", x)

    @property
    def rank(self):
        return len(self.k)


def prod(values, start=1):
    return reduce(mul, values, start)


def _is_zero_factor(v, ctx):
    if ctx.mode == FLOAT:
        return abs(v) < ctx.guard
    if isinstance(v, PSeries):
        return v.coeffs[0] == 0
    return v == 0


def check_denominator(v, ctx, index=None):
    """Raise :class:`PoleError` if ``v`` is (numerically) zero as a divisor."""
    if _is_zero_factor(v, ctx):
        raise PoleError("vanishing denominator", index)
    return v


def theta(x, ctx):
    """``theta(x) = (x; p)_inf (p/x; p)_inf``; equals ``1 - x`` when ``p = 0``."""
    if isinstance(x, PSeries):
        if x.is_zero():
            raise InvalidArgument("theta(0) is undefined")
    elif x == 0:
        raise InvalidArgument("theta(0) is undefined")
    if not ctx.elliptic:
        return 1 - x
    if ctx.mode == PSERIES:
        return _theta_series(x, ctx)
    return _theta_float(x, ctx)


def _theta_series(x, ctx):
    k = ctx.pseries_order
    if not isinstance(x, PSeries):
        x = as_rational(x)
        cache = ctx._cache.setdefault("theta", {})
        v = cache.get(x)
        if v is None:
            v = _theta_constant(x, k)
            cache[x] = v
        return v
    if len(x) != k:
        raise InvalidArgument("p-series order does not match the context")
    val = x.valuation()
    if val == 0:
        w = ctx.p * x.inverse()
    elif val == 1:
        # x = p*y with y invertible; the argument is read as a polynomial
        y = PSeries._raw(x.coeffs[1:] + (mpq(0),))
        w = y.inverse()
    else:
        raise InvalidArgument("theta argument must have p-valuation 0 or 1")
    out = PSeries.constant(1, k)
    for j in range(k):
        out = out * (1 - x.shift(j))
        out = out * (1 - w.shift(j))
    return out


def _theta_constant(x, k):
    """Exact truncated expansion of ``theta(x)`` for a rational constant ``x``."""
    coeffs = [mpq(0)] * k
    coeffs[0] = mpq(1)
    inv = 1 / x
    for j in range(k):
        # multiply by (1 - x p^j)
        for i in range(k - 1, j - 1, -1):
            coeffs[i] -= x * coeffs[i - j]
        # multiply by (1 - p^{j+1}/x)
        s = j + 1
        for i in range(k - 1, s - 1, -1):
            coeffs[i] -= inv * coeffs[i - s]
    return PSeries._raw(coeffs)


def _theta_float(x, ctx):
    with ctx.scope():
        x = mpc(x)
        return _pinf(x, ctx.p, ctx) * _pinf(ctx.p / x, ctx.p, ctx)


def _pinf(a, base, ctx):
    """``(a; base)_inf`` by the epsilon truncation rule (float only)."""
    eps = ctx.epsilon
    out = mpc(1)
    term = a
    j = 0
    while True:
        if abs(term) < eps and j >= 16:
            return out
        if j >= ctx.max_terms:
            raise ConvergenceError("infinite product did not reach epsilon within max_terms")
        out *= 1 - term
        term *= base
        j += 1


def one_minus(w, ctx):
    """``1 - w``, or ``theta(w)`` in elliptic contexts."""
    if ctx.elliptic:
        return theta(w, ctx)
    return 1 - w


def diff(u, v, ctx):
    """``u - v``, or ``u * theta(v / u)`` in elliptic contexts."""
    if ctx.elliptic:
        return u * theta(v / u, ctx)
    return u - v


def _factor(x, ctx, elliptic):
    if elliptic:
        return theta(x, ctx)
    return 1 - x


def _poch(a, k, ctx, elliptic, tag):
    if k == 0:
        return ctx.one
    cache = ctx._cache.setdefault(tag, {})
    key = (a, k)
    v = cache.get(key)
    if v is not None:
        return v
    if ctx.mode == FLOAT:
        with ctx.scope():
            v = _poch_eval(a, k, ctx, elliptic, cache)
    else:
        v = _poch_eval(a, k, ctx, elliptic, cache)
    cache[key] = v
    return v


def _poch_eval(a, k, ctx, elliptic, cache):
    if k > 0:
        # extend from the largest cached prefix
        start, acc = 0, ctx.one
        for m in range(k - 1, 0, -1):
            hit = cache.get((a, m))
            if hit is not None:
                start, acc = m, hit
                break
        for j in range(start, k):
            acc = acc * _factor(a * ctx.qpow(j), ctx, elliptic)
            if j + 1 < k:
                cache[(a, j + 1)] = acc
        return acc
    den = ctx.one
    for j in range(1, -k + 1):
        f = _factor(a * ctx.qpow(-j), ctx, elliptic)
        if _is_zero_factor(f, ctx):
            raise PoleError(f"(a;q)_{k} has a vanishing factor at j={-j}", -j)
        den = den * f
    return 1 / den


def qpoch(a, k, ctx):
    """q-shifted factorial ``(a;q)_k`` for any integer ``k``.

    Negative ``k`` uses ``(a;q)_k = 1 / prod_{j=1}^{-k} (1 - a q^{-j})``.
    In elliptic contexts every factor ``1 - a q^j`` is ``theta(a q^j)``.
    """
    return _poch(a, int(k), ctx, ctx.elliptic, "qpoch")


def epoch(a, k, ctx):
    """Elliptic shifted factorial ``(a;q,p)_k = prod_{j<k} theta(a q^j)``."""
    return _poch(a, int(k), ctx, True, "epoch")


def qpoch_inf(a, ctx):
    """``(a;q)_inf`` in float mode, truncated once ``|a q^j| < epsilon`` (j >= 16)."""
    if ctx.mode != FLOAT:
        raise ModeError("infinite products are only available in float mode")
    cache = ctx._cache.setdefault("qinf", {})
    with ctx.scope():
        a = mpc(a)
        v = cache.get(a)
        if v is None:
            v = _pinf(a, ctx.q, ctx)
            cache[a] = v
    return v


def qpoch_many(args, k, ctx):
    """Product of ``(a;q)_k`` over ``args``."""
    out = ctx.one
    for a in args:
        out = out * qpoch(a, k, ctx)
    return out


def c_factor(t, a, ctx):
    """``prod_{i<j} (t_i - t_j)(1 - a t_i t_j) * prod_i (1 - a t_i^2)`` (elliptic-aware)."""
    r = len(t)
    out = ctx.one
    for i in range(r):
        ti = t[i]
        for j in range(i + 1, r):
            out = out * diff(ti, t[j], ctx) * one_minus(a * ti * t[j], ctx)
        out = out * one_minus(a * ti * ti, ctx)
    return out


def a_factor(t, ctx):
    """``prod_{i<j} (t_i - t_j)`` (elliptic-aware)."""
    r = len(t)
    out = ctx.one
    for i in range(r):
        for j in range(i + 1, r):
            out = out * diff(t[i], t[j], ctx)
    return out


def _point_args(point, ctx):
    x = point.x if point.x is not None else (1,) * point.rank
    if ctx.mode == FLOAT:
        with ctx.scope():
            return [xi * ctx.qpow(ki) for xi, ki in zip(x, point.k)]
    return [xi * ctx.qpow(ki) for xi, ki in zip(x, point.k)]


def lattice_factor_c(point, a, ctx):
    """Type-C factor at ``point``: ``c_factor`` of ``t_i = x_i q^{k_i}``."""
    t = _point_args(point, ctx)
    if ctx.mode == FLOAT:
        with ctx.scope():
            return c_factor(t, a, ctx)
    return c_factor(t, a, ctx)


def lattice_factor_a(point, ctx):
    """Type-A Vandermonde factor ``prod_{i<j} (x_i q^{k_i} - x_j q^{k_j})``."""
    t = _point_args(point, ctx)
    if ctx.mode == FLOAT:
        with ctx.scope():
            return a_factor(t, ctx)
    return a_factor(t, ctx)
