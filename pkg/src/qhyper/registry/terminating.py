"""Terminating entries: rank-one classics, C_r 10phi9/8phi7/6phi5 and A_{r-1} 3phi2 families.

All of these are exact in rational arithmetic.  Those written purely with
``om``/``df``/``P``/``R`` also make sense elliptically; the elliptic module
reuses their evaluators.
"""

from ..kernel import binom2, binom3
from ..scalars import EXACT, FLOAT
from . import classical
from .core import IdentityDef, free, mono

BASIC = (EXACT, FLOAT)


# ---------------------------------------------------------------------------
# rank-one classics


def _vwp_series(V, a, params, z, n):
    q = V.q
    num = (a,) + tuple(params)
    den = (q,) + tuple(a * q / p for p in params)
    return V.box(n, [lambda k: V.vwp(a, k) * V.R(k, num, den) * z ** k])


def _lhs_87(V):
    return _vwp_series(V, V.a, (V.b, V.c, V.d, V.e, V.qp(-V.n)), V.q, V.n)


def _rhs_87(V):
    a, b, c, d, q, n = V.a, V.b, V.c, V.d, V.q, V.n
    return V.R(n, (a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)),
               (a * q / b, a * q / c, a * q / d, a * q / (b * c * d)))


def _lhs_109(V):
    return _vwp_series(V, V.a, (V.b, V.c, V.d, V.e, V.f, V.g, V.qp(-V.n)), V.q, V.n)


def _rhs_109(V):
    a, b, c, d, e, f, g, q, n, lam = V.a, V.b, V.c, V.d, V.e, V.f, V.g, V.q, V.n, V.lam
    pre = V.R(n, (a * q, a * q / (e * f), lam * q / e, lam * q / f),
              (a * q / e, a * q / f, lam * q / (e * f), lam * q))
    return pre * _vwp_series(V, lam, (lam * b / a, lam * c / a, lam * d / a, e, f, g, V.qp(-n)), q, n)


# ---------------------------------------------------------------------------
# C_r terminating 10phi9


def _cnt109_lhs(V):
    a, b, c, d, q = V.a, V.b, V.c, V.d, V.q

    def axis(i):
        num = (a, b, c, d, V.e[i], V.f[i], V.g[i], V.qp(-V.n[i]))
        den = (q, a * q / b, a * q / c, a * q / d, a * q / V.e[i], a * q / V.f[i], a * q / V.g[i],
               a * V.qp(1 + V.n[i]))
        return lambda k: V.vwp(a, k) * V.R(k, num, den) * V.qp(k)

    return V.box(V.n, [axis(i) for i in range(V.r)], V.type_c(a))


def _cnt109_rhs(V):
    a, b, c, d, q, r, lam = V.a, V.b, V.c, V.d, V.q, V.r, V.lam
    out = (lam / a) ** binom2(r)
    for i in range(1, r):
        out = out * V.R(i, (b, c, d), (b * lam / a, c * lam / a, d * lam / a))
    for i in range(r):
        e, f, n = V.e[i], V.f[i], V.n[i]
        out = out * V.R(n, (a * q, lam * q / e, lam * q / f, a * q / (e * f)),
                        (lam * q, a * q / e, a * q / f, lam * q / (e * f)))

    def axis(i):
        num = (lam, lam * b / a, lam * c / a, lam * d / a, V.e[i], V.f[i], V.g[i], V.qp(-V.n[i]))
        den = (q, a * q / b, a * q / c, a * q / d, lam * q / V.e[i], lam * q / V.f[i],
               lam * q / V.g[i], lam * V.qp(1 + V.n[i]))
        return lambda k: V.vwp(lam, k) * V.R(k, num, den) * V.qp(k)

    return out * V.box(V.n, [axis(i) for i in range(r)], V.type_c(lam))


def _cnt109n_lhs(V):
    a, b, c, d, e, f, g, q = V.a, V.b, V.c, V.d, V.e, V.f, V.g, V.q

    def axis(i):
        n = V.n[i]
        num = (a, b, c, d, e * V.qp(n), f, g, V.qp(-n))
        den = (q, a * q / b, a * q / c, a * q / d, a * V.qp(1 - n) / e, a * q / f, a * q / g,
               a * V.qp(1 + n))
        return lambda k: V.vwp(a, k) * V.R(k, num, den) * V.qp(k)

    return V.box(V.n, [axis(i) for i in range(V.r)], V.type_c(a))


def _cnt109n_rhs(V):
    a, b, c, d, e, f, g, q, r = V.a, V.b, V.c, V.d, V.e, V.f, V.g, V.q, V.r
    t = a * V.qp(2 - r) / b
    out = (a * a * V.qp(4 - 2 * r) / (b * b * c * d * f * g)) ** binom2(r)
    for i in range(1, r):
        out = out * V.R(i, (b, c, d, f, g),
                        (t / c, t / d, t / f, t / g, a * a * V.qp(4 - 2 * r) / (b * c * d * f * g)))
    for i in range(r):
        n = V.n[i]
        s = a * V.qp(1 - n) / e
        out = out * V.R(n, (a * q, s / c, s / d, s / f, s / g, b * V.qp(r - 1)),
                        (a * q / c, a * q / d, s, a * q / f, a * q / g, b * V.qp(r - 1 - n) / e))
        out = out * (e * V.qp(n)) ** n
    lam = e * V.qp(1 - r) / b

    def axis(i):
        n = V.n[i]
        num = (lam, e * V.qp(1 - r) / a, t / f, t / g, e * V.qp(n), t / c, t / d, V.qp(-n))
        den = (q, a * q / b, e * f / a, e * g / a, V.qp(2 - r - n) / b, e * c / a, e * d / a,
               e * V.qp(2 - r + n) / b)
        return lambda k: V.vwp(lam, k) * V.R(k, num, den) * V.qp(k)

    return out * V.box(V.n, [axis(i) for i in range(r)], V.type_c(lam))


def _c_coupling_x(V, a):
    """Normalised type-C coupling in the points ``x_i q^{k_i}``."""
    x = V.x
    base = V.pairs(lambda i, j: V.df(x[i - 1], x[j - 1]) * V.om(a * x[i - 1] * x[j - 1]))
    inv = V.div(1, base)
    coupling = V.type_c(a, x)
    return lambda k: coupling(k) * inv


def _cnt109i2_lhs(V, duplicate=False):
    a, b, c, d, e, f, g, q, N = V.a, V.b, V.c, V.d, V.e, V.f, V.g, V.q, V.N

    def axis(i):
        x = V.x[i]
        A = a * x * x
        num = (A, b * x, c * x, d * x, e * x, f * x, g * x, V.qp(-N))
        den = [q, a * x * q / b, a * x * q / c, a * x * q / d, a * x * q / e, a * x * q / f,
               a * x * q / g, A * V.qp(1 + N)]
        if duplicate:
            den.insert(5, a * x * q / e)
        return lambda k: V.vwp(A, k) * V.R(k, num, den) * V.qp(k)

    return V.box(N, [axis(i) for i in range(V.r)], _c_coupling_x(V, a))


def _cnt109i2_lhs_printed(V):
    return _cnt109i2_lhs(V, duplicate=True)


def _cnt109i2_rhs_printed(V):
    return _cnt109i2_rhs(V, printed=True)


def _cnt109i2_rhs(V, printed=False):
    a, b, c, d, e, f, g, q, N, r, x = V.a, V.b, V.c, V.d, V.e, V.f, V.g, V.q, V.N, V.r, V.x
    t = a * V.qp(2 - r) / b
    out = q ** binom3(r) * (V.qp(N + 1) / b) ** binom2(r)
    out = V.div(out, V.P(N + r - 1, (b / e,)) ** r)
    out = V.div(out, V.pairs(lambda i, j: V.df(x[i - 1], x[j - 1]) * V.om(a * x[i - 1] * x[j - 1])))
    for i in range(1, r + 1):
        xi = x[i - 1]
        top = ((b if printed else e) * xi) ** N * V.P(N, (a * xi * xi * q,)) * V.P(N + r - 1, (b * xi,)) \
            * V.P(r - 1, (t * xi,))
        out = out * top * V.R(i - 1, (), (V.qp(N + r + 1 - i), t / e, t / c, t / d, t / f, t / g))
        s = V.qp(2 - i) * a
        out = out * V.P(N + i - 1, (s / (c * e), s / (d * e), s / (e * f), s / (e * g)))
        out = V.div(out, V.P(N, (a * xi * q / c, a * xi * q / d, a * xi * q / e, a * xi * q / f,
                                 a * xi * q / g)))
    lam = e * V.qp(1 - r - N) / b

    def axis(i):
        xi = x[i]
        num = (lam, e * xi, e * V.qp(-N) / (a * xi), V.qp(1 - r - N), t / c, t / d, t / f, t / g)
        den = (q, V.qp(2 - r - N) / (b * xi), a * xi * V.qp(2 - r) / b, e * q / b,
               c * e * V.qp(-N) / a, d * e * V.qp(-N) / a, e * f * V.qp(-N) / a,
               e * g * V.qp(-N) / a)
        return lambda k: V.vwp(lam, k) * V.R(k, num, den) * V.qp(k)

    return out * V.box(N + r - 1, [axis(i) for i in range(r)], V.type_c(lam))


# ---------------------------------------------------------------------------
# Watson and Sears


def _mwatson_lhs(V):
    a, b, c, q, r = V.a, V.b, V.c, V.q, V.r

    def axis(i):
        d, e, n = V.d[i], V.e[i], V.n[i]
        z = a * a * V.qp(3 - r + n) / (b * c * d * e)
        num = (a, b, c, d, e, V.qp(-n))
        den = (q, a * q / b, a * q / c, a * q / d, a * q / e, a * V.qp(1 + n))
        return lambda k: V.vwp(a, k) * V.R(k, num, den) * z ** k

    return V.box(V.n, [axis(i) for i in range(r)], V.type_c(a))


def _mwatson_rhs(V):
    a, b, c, q, r = V.a, V.b, V.c, V.q, V.r
    t = a * V.qp(2 - r) / (b * c)
    out = (-a / (b * c)) ** binom2(r) * V.qp(-2 * binom3(r))
    for i in range(1, r):
        out = out * V.R(i, (b, c), (t,))
    for i in range(r):
        d, e, n = V.d[i], V.e[i], V.n[i]
        out = out * V.R(n, (a * q, a * q / (d * e)), (a * q / d, a * q / e))

    def axis(i):
        d, e, n = V.d[i], V.e[i], V.n[i]
        num = (t, d, e, V.qp(-n))
        den = (q, a * q / b, a * q / c, d * e * V.qp(-n) / a)
        return lambda k: V.R(k, num, den) * V.qp(k)

    return out * V.box(V.n, [axis(i) for i in range(r)], V.type_a())


def _msears_lhs(V):
    b, c, d, q, r = V.b, V.c, V.d, V.q, V.r

    def axis(i):
        a, e, n = V.a[i], V.e[i], V.n[i]
        num = (a, b, c, V.qp(-n))
        den = (q, d, e, a * b * c * V.qp(r - n) / (d * e))
        return lambda k: V.R(k, num, den) * V.qp(k)

    return V.box(V.n, [axis(i) for i in range(r)], V.type_a())


def _msears_rhs_with(shift):
    """Right side with ``d e_i q^{shift(r)} / (b c)`` in the shifted parameters."""

    def rhs(V):
        b, c, d, q, r = V.b, V.c, V.d, V.q, V.r
        u = d * V.qp(1 - r)
        out = (u / (b * c)) ** binom2(r)
        for i in range(1, r):
            out = out * V.R(i, (b, c), (u / b, u / c))
        w = V.qp(shift(r))
        for i in range(r):
            a, e, n = V.a[i], V.e[i], V.n[i]
            out = out * V.R(n, (d * e * w / (b * c), e / a), (e, d * e * w / (a * b * c)))

        def axis(i):
            a, e, n = V.a[i], V.e[i], V.n[i]
            num = (a, u / b, u / c, V.qp(-n))
            den = (q, d, d * e * w / (b * c), a * V.qp(1 - n) / e)
            return lambda k: V.R(k, num, den) * V.qp(k)

        return out * V.box(V.n, [axis(i) for i in range(r)], V.type_a())

    return rhs


_msears_rhs = _msears_rhs_with(lambda r: 1 - r)
_msears_rhs_printed = _msears_rhs_with(lambda r: -r)


# ---------------------------------------------------------------------------
# C_r Jackson summations


def _cnt87_lhs(V):
    a, b, q = V.a, V.b, V.q

    def axis(i):
        c, d, e, n = V.c[i], V.d[i], V.e[i], V.n[i]
        num = (a, b, c, d, e, V.qp(-n))
        den = (q, a * q / b, a * q / c, a * q / d, a * q / e, a * V.qp(1 + n))
        return lambda k: V.vwp(a, k) * V.R(k, num, den) * V.qp(k)

    return V.box(V.n, [axis(i) for i in range(V.r)], V.type_c(a))


def _cnt87_rhs(V):
    a, b, q, r = V.a, V.b, V.q, V.r
    t = a * V.qp(2 - r) / b
    out = V.div(V.qp(-2 * binom3(r)), (-b) ** binom2(r))
    for i in range(1, r + 1):
        c, d, e, n = V.c[i - 1], V.d[i - 1], V.e[i - 1], V.n[i - 1]
        out = out * V.P(r - 1, (t,)) * V.R(i - 1, (b,), (a * V.qp(2 + r - 2 * i) / b,))
        out = out * V.R(n, (a * q, a * q / (c * d), a * q / (c * e), a * q / (d * e)),
                        (a * q / c, a * q / d, a * q / e, a * q / (c * d * e)))

    def entry(i, m):
        c, d, e, n = V.c[i], V.d[i], V.e[i], V.n[i]
        return V.R(m, (c, d, e, V.qp(-n)), (t / c, t / d, t / e, t * V.qp(n)))

    return out * V.det(entry)


def _cnt87a_lhs(V):
    a, b, c, d, e, q = V.a, V.b, V.c, V.d, V.e, V.q

    def axis(i):
        n = V.n[i]
        num = (a, b, c, d, e * V.qp(n), V.qp(-n))
        den = (q, a * q / b, a * q / c, a * q / d, a * V.qp(1 - n) / e, a * V.qp(1 + n))
        return lambda k: V.vwp(a, k) * V.R(k, num, den) * V.qp(k)

    return V.box(V.n, [axis(i) for i in range(V.r)], V.type_c(a))


def _cnt87a_rhs(V, printed=False):
    a, b, c, d, e, q, r = V.a, V.b, V.c, V.d, V.e, V.q, V.r
    t = a * V.qp(2 - r)
    out = (e / a) ** binom2(r)
    if printed:
        out = out * V.qp(-binom3(r))
    for i in range(1, r):
        out = out * V.R(i, (b, c, d), (t / (b * c), t / (b * d), t / (c * d)))
    qn = [V.qp(n) for n in V.n]
    out = out * V.pairs(lambda i, j: V.df(qn[i - 1], qn[j - 1]) * V.om(e * qn[i - 1] * qn[j - 1]))
    for n in V.n:
        out = out * V.R(n, (a * q, t / (b * c), t / (b * d), t / (c * d)),
                        (a * q / b, a * q / c, a * q / d, t / (b * c * d)))
    return out


def _cnt87a_rhs_printed(V):
    return _cnt87a_rhs(V, printed=True)


def _cnt87b_lhs(V):
    a, b, c, d, e, q, N = V.a, V.b, V.c, V.d, V.e, V.q, V.N

    def axis(i):
        x = V.x[i]
        num = (a, b, c, d * x, e / x, V.qp(-N))
        den = (q, a * q / b, a * q / c, a * q / (d * x), a * q * x / e, a * V.qp(1 + N))
        return lambda k: V.vwp(a, k) * V.R(k, num, den) * V.qp(k)

    return V.box(N, [axis(i) for i in range(V.r)], V.type_c(a))


def _cnt87b_rhs(V, printed=False):
    a, b, c, d, e, q, N, r, x = V.a, V.b, V.c, V.d, V.e, V.q, V.N, V.r, V.x
    t = a * V.qp(2 - r)
    u = t if printed else a * q
    out = (e * e / (a * d)) ** binom2(r)
    out = out * V.pairs(lambda i, j: V.df(x[i - 1], x[j - 1]) * V.om(d * x[i - 1] * x[j - 1] / e))
    for i in range(1, r):
        out = out * V.R(i, (b, c, V.qp(-N)), (t / (b * c),))
    for i in range(1, r + 1):
        xi = x[i - 1]
        top = V.P(N, (a * q, t / (b * c))) * V.P(N + 1 - r, (u / (b * d * xi), u / (c * d * xi)))
        bot = xi ** (2 * (r - 1)) * V.P(N + 1 - i, (a * (V.qp(2 - i) if printed else q) / b,
                                                    a * (V.qp(2 - i) if printed else q) / c)) \
            * V.P(N, (a * q / (d * xi), t / (b * c * d * xi)))
        out = out * V.div(top, bot)
    return out


def _cnt87b_rhs_printed(V):
    return _cnt87b_rhs(V, printed=True)


def _cnt87c_lhs(V):
    a, b, e, q = V.a, V.b, V.e, V.q

    def axis(i):
        x, c, d, n = V.x[i], V.c[i], V.d[i], V.n[i]
        A = a * x * x
        num = (A, b * x, c * x, d * x, e * x, V.qp(-n))
        den = (q, a * x * q / b, a * x * q / c, a * x * q / d, a * x * q / e, A * V.qp(1 + n))
        return lambda k: V.vwp(A, k) * V.R(k, num, den) * V.qp(k)

    return V.box(V.n, [axis(i) for i in range(V.r)], _c_coupling_x(V, a))


def _cnt87c_rhs(V):
    a, b, e, q, r, x = V.a, V.b, V.e, V.q, V.r, V.x
    t = a * V.qp(2 - r) / b
    out = V.div((-1) ** binom2(r) * V.qp(-2 * binom3(r)), b ** binom2(r))
    out = V.div(out, V.pairs(lambda i, j: V.df(x[i - 1], x[j - 1]) * V.om(a * x[i - 1] * x[j - 1])))
    for i in range(1, r + 1):
        xi, c, d, n = x[i - 1], V.c[i - 1], V.d[i - 1], V.n[i - 1]
        top = V.P(n, (a * q * xi * xi, t / c, t / d)) * V.P(n + i - r, (a * q / (c * d),)) \
            * V.P(r - 1, (b * xi,))
        bot = V.P(n, (a * q * xi / c, a * q * xi / d, t / (c * d * xi))) \
            * V.P(n + 1 - r, (a * q * xi / b,)) * V.P(i - 1, (e * V.qp(2 + r - 2 * i) / b,))
        out = out * V.div(top, bot)

    def entry(i, m):
        xi, c, d, n = x[i], V.c[i], V.d[i], V.n[i]
        num = (e * xi, e * c / a, e * d / a, e * V.qp(-n) / (a * xi))
        den = (V.qp(2 - r) / (b * xi), V.qp(-n) * e * d / a, V.qp(-n) * e * c / a, t * V.qp(n) * xi)
        return V.R(m, num, den)

    return out * V.det(entry)


# ---------------------------------------------------------------------------
# C_r terminating 6phi5 summations


def _vwp65_lhs(params, power):
    """LHS of the terminating 6phi5 family.

    ``params(V, i)`` gives the two free upper parameters and the bound of
    axis ``i``; ``power`` is the power of ``a`` in the argument (one is the
    correct value, two the printed one).
    """

    def lhs(V):
        a, q, r = V.a, V.q, V.r

        def axis(i):
            b, c, n, z = params(V, i)
            z = a ** power * z
            num = (a, b, c, V.qp(-n))
            den = (q, a * q / b, a * q / c, a * V.qp(1 + n))
            return lambda k: V.vwp(a, k) * V.R(k, num, den) * z ** k

        bounds = tuple(params(V, i)[2] for i in range(r))
        return V.box(bounds, [axis(i) for i in range(r)], V.type_c(a))

    return lhs


def _p65(V, i):
    n = V.n[i]
    return V.b[i], V.c[i], n, V.qp(2 - V.r + n) / (V.b[i] * V.c[i])


def _p65a(V, i):
    n = V.n[i]
    return V.b, V.c, n, V.qp(2 - V.r + n) / (V.b * V.c)


def _p65b(V, i):
    return V.b, V.c[i], V.N, V.qp(2 - V.r + V.N) / (V.b * V.c[i])


def _p65c(V, i):
    x = V.x[i]
    return V.b * x, V.c / x, V.N, V.qp(2 - V.r + V.N) / (V.b * V.c)


def _p65d(V, i):
    n = V.n[i]
    return V.b, V.c * V.qp(n), n, V.qp(2 - V.r) / (V.b * V.c)


def _cnt65_rhs(V):
    a, q, r = V.a, V.q, V.r
    out = V.qp(-binom3(r))
    for i in range(r):
        b, c, n = V.b[i], V.c[i], V.n[i]
        out = out * V.R(n, (a * q, a * q / (b * c)), (a * q / b, a * q / c))

    def entry(i, m):
        b, c, n = V.b[i], V.c[i], V.n[i]
        return V.R(m, (b, c, V.qp(-n)), (b * c * V.qp(-n) / a,))

    return out * V.det(entry)


def _cnt65a_rhs(V):
    a, b, c, q, r = V.a, V.b, V.c, V.q, V.r
    qn = [V.qp(n) for n in V.n]
    out = V.pairs(lambda i, j: V.df(qn[i - 1], qn[j - 1]))
    for i in range(1, r + 1):
        n = V.n[i - 1]
        out = out * V.div(V.P(i - 1, (b, c, b * c / a)), V.P(r - 1, (b * c / a,)))
        out = out * V.R(n, (a * q, a * V.qp(2 - r) / (b * c)), (a * q / b, a * q / c))
    return out


def _cnt65b_rhs(V):
    a, b, q, r, N = V.a, V.b, V.q, V.r, V.N
    cs = V.c
    out = V.pairs(lambda i, j: V.df(cs[j - 1], cs[i - 1]))
    for i in range(1, r + 1):
        c = cs[i - 1]
        out = out * V.div(V.P(i - 1, (b, V.qp(-N), b * V.qp(-N) / a)),
                          V.P(r - 1, (b * c * V.qp(-N) / a,)))
        out = out * V.R(N, (a * q, a * q / (b * c)), (a * q / b, a * q / c))
    return out


def _cnt65c_rhs(V):
    a, b, c, q, r, N, x = V.a, V.b, V.c, V.q, V.r, V.N, V.x
    out = b ** binom2(r)
    out = out * V.pairs(lambda i, j: V.df(x[j - 1], x[i - 1]) * V.om(c / (b * x[i - 1] * x[j - 1])))
    for i in range(1, r + 1):
        xi = x[i - 1]
        out = out * V.R(i - 1, (V.qp(-N),), (b * c * V.qp(-N) / a,))
        out = out * V.R(N, (a * q, a * q / (b * c)), (a * q / (b * xi), a * xi * q / c))
    return out


def _cnt65d_rhs(V):
    a, b, c, q, r = V.a, V.b, V.c, V.q, V.r
    qn = [V.qp(-n) for n in V.n]
    out = V.pairs(lambda i, j: V.df(qn[j - 1], qn[i - 1]) * V.om(c / (qn[i - 1] * qn[j - 1])))
    for i in range(1, r + 1):
        n = V.n[i - 1]
        out = out * V.R(i - 1, (b,), (b * c / a,))
        out = out * V.R(n, (a * q, a * V.qp(1 - n) / (b * c)), (a * q / b, a * V.qp(1 - n) / c))
    return out


# ---------------------------------------------------------------------------
# A_{r-1} terminating 3phi2 summations


def _an32_lhs_from(params):
    def lhs(V):
        c, q, r = V.c, V.q, V.r

        def axis(i):
            a, b, n, low = params(V, i)
            num = (a, b, V.qp(-n))
            den = (q, c * V.qp(r - 1), low)
            return lambda k: V.R(k, num, den) * V.qp(k)

        bounds = tuple(params(V, i)[2] for i in range(r))
        return V.box(bounds, [axis(i) for i in range(r)], V.type_a())

    return lhs


def _p32(V, i):
    a, b, n = V.a[i], V.b[i], V.n[i]
    return a, b, n, a * b * V.qp(1 - n) / V.c


def _p32a(V, i):
    n = V.n[i]
    return V.a, V.b, n, V.a * V.b * V.qp(1 - n) / V.c


def _p32b(V, i):
    b = V.b[i]
    return V.a, b, V.N, V.a * b * V.qp(1 - V.N) / V.c


def _p32c(V, i):
    n = V.n[i]
    return V.a, V.b * V.qp(n), n, V.a * V.b * V.q / V.c


def _p32d(V, i):
    x = V.x[i]
    return V.a * x, V.b / x, V.N, V.a * V.b * V.qp(1 - V.N) / V.c


def _an32_rhs(V):
    c, r = V.c, V.r
    out = c ** binom2(r)
    for i in range(1, r + 1):
        a, b, n = V.a[i - 1], V.b[i - 1], V.n[i - 1]
        out = out * V.div(V.P(r - 1, (c,)), V.P(i - 1, (c * V.qp(2 * r - 2 * i),)))
        out = out * V.R(n, (c / a, c / b), (c, c / (a * b)))

    def entry(i, m):
        a, b, n = V.a[i], V.b[i], V.n[i]
        w = V.div(1, (a * b * V.qp(-n)) ** m)
        return w * V.R(m, (a, b, V.qp(-n)), (c / a, c / b, c * V.qp(n)))

    return out * V.det(entry)


def _an32a_rhs(V):
    a, b, c, r = V.a, V.b, V.c, V.r
    qn = [V.qp(n) for n in V.n]
    out = (c / (a * b)) ** binom2(r) * V.pairs(lambda i, j: V.df(qn[i - 1], qn[j - 1]))
    for i in range(1, r + 1):
        n = V.n[i - 1]
        out = out * V.R(i - 1, (a, b), (c / a, c / b))
        out = out * V.R(n, (c / a, c / b), (c * V.qp(r - 1), c / (a * b)))
    return out


def _an32b_rhs(V):
    a, c, r, N = V.a, V.c, V.r, V.N
    bs = V.b
    out = (c * V.qp(N) / a) ** binom2(r)
    out = out * V.pairs(lambda i, j: V.div(V.df(bs[j - 1], bs[i - 1]), bs[i - 1] * bs[j - 1]))
    for i in range(1, r + 1):
        b = bs[i - 1]
        out = out * V.div(V.P(r - 1, (c,)) * V.P(i - 1, (a, V.qp(-N))),
                          V.P(r - 1, (c / b,)) * V.P(i - 1, (c / a, c * V.qp(N))))
        out = out * V.R(N, (c / a, c / b), (c, c / (a * b)))
    return out


def _an32c_rhs(V):
    a, b, c, r = V.a, V.b, V.c, V.r
    qn = [V.qp(-n) for n in V.n]
    out = V.div(V.qp(-binom3(r)), a ** binom2(r))
    out = out * V.pairs(lambda i, j: V.df(qn[i - 1], qn[j - 1]) * V.om(b / (qn[i - 1] * qn[j - 1])))
    for i in range(1, r + 1):
        n = V.n[i - 1]
        out = out * V.R(i - 1, (a,), (c / a, b * V.qp(2 - r) / c))
        out = out * V.R(n, (c / a, c * V.qp(r - 1 - n) / b), (c * V.qp(r - 1), c * V.qp(-n) / (a * b)))
    return out


def _an32d_rhs(V):
    a, b, c, q, r, N, x = V.a, V.b, V.c, V.q, V.r, V.N, V.x
    out = q ** binom3(r) * (c * V.qp(N) / b) ** binom2(r)
    out = out * V.pairs(lambda i, j: V.df(x[j - 1], x[i - 1]) * V.om(b / (a * x[i - 1] * x[j - 1])))
    for i in range(1, r + 1):
        xi = x[i - 1]
        out = out * V.div(V.P(r - 1, (c,)) * V.P(i - 1, (c / (a * b), V.qp(-N))),
                          V.P(i - 1, (c * V.qp(N),)) * V.P(r - 1, (c / (a * xi), c * xi / b)))
        out = out * V.R(N, (c / (a * xi), c * xi / b), (c, c / (a * b)))
    return out


# ---------------------------------------------------------------------------
# determinant lemmas as catalogue entries


def _lemdet1_lhs(V):
    A, B, C, X = V.A, V.B, V.C, V.X

    def entry(i, m):
        x = X[i]
        return V.R(m, (A * x, A * C / x), (B * x, B * C / x))

    return V.det(entry)


def _lemdet1_rhs(V):
    A, B, C, X, q, r = V.A, V.B, V.C, V.X, V.q, V.r
    out = A ** binom2(r) * q ** binom3(r)
    out = out * V.pairs(lambda i, j: V.df(X[j - 1], X[i - 1]) * V.om(C / (X[i - 1] * X[j - 1])))
    for i in range(1, r + 1):
        x = X[i - 1]
        out = out * V.div(V.P(i - 1, (B / A, A * B * C * V.qp(2 * r - 2 * i))),
                          V.P(r - 1, (B * x, B * C / x)))
    return out


def _lemdet1a_lhs(V):
    A, B, X = V.A, V.B, V.X

    def entry(i, m):
        x = X[i]
        return x ** m * V.R(m, (A / x,), (B * x,))

    return V.det(entry)


def _lemdet1a_rhs(V):
    A, B, X, q, r = V.A, V.B, V.X, V.q, V.r
    out = V.pairs(lambda i, j: V.df(X[i - 1], X[j - 1]))
    for i in range(1, r + 1):
        out = out * V.div(V.P(i - 1, (A * B * V.qp(2 * r - 2 * i),)), V.P(r - 1, (B * X[i - 1],)))
    return out


def _dettf_lhs(V):
    a, z = V.a, V.z
    return V.det(lambda i, m: V.R(m, (z[i],), (a[i] * z[i],)))


def _dettf_rhs(V):
    a, z, q, r = V.a, V.z, V.q, V.r
    pre = (-1) ** binom2(r) * q ** binom3(r)
    return pre * V.det(lambda i, m: z[i] ** m * V.R(m, (a[i],), (a[i] * z[i],)))


# ---------------------------------------------------------------------------
# rank-one audits


def _audit_cnt109(V):
    return classical.bailey_109(V.a, V.b, V.c, V.d, V.e[0], V.f[0], V.n[0], V.ctx)


def _audit_cnt109n(V):
    return classical.bailey_109(V.a, V.b, V.c, V.d, V.e * V.qp(V.n[0]), V.f, V.n[0], V.ctx)


def _audit_cnt109i2(V):
    x = V.x[0]
    return classical.bailey_109(V.a * x * x, V.b * x, V.c * x, V.d * x, V.e * x, V.f * x, V.N, V.ctx)


def _audit_mwatson(V):
    return classical.watson(V.a, V.b, V.c, V.d[0], V.e[0], V.n[0], V.ctx)


def _audit_msears(V):
    return classical.sears(V.a[0], V.b, V.c, V.d, V.e[0], V.n[0], V.ctx)


def _audit_cnt87(V):
    return classical.jackson_87(V.a, V.b, V.c[0], V.d[0], V.n[0], V.ctx)


def _audit_cnt87a(V):
    return classical.jackson_87(V.a, V.b, V.c, V.d, V.n[0], V.ctx)


def _audit_cnt87b(V):
    return classical.jackson_87(V.a, V.b, V.c, V.d * V.x[0], V.N, V.ctx)


def _audit_cnt87c(V):
    x = V.x[0]
    return classical.jackson_87(V.a * x * x, V.b * x, V.c[0] * x, V.d[0] * x, V.n[0], V.ctx)


def _audit_65(params):
    def audit(V):
        b, c, n, _ = params(V, 0)
        return classical.terminating_65(V.a, b, c, n, V.ctx)

    return audit


def _audit_32(params):
    def audit(V):
        a, b, n, _ = params(V, 0)
        return classical.pfaff_saalschutz(a, b, V.c, n, V.ctx)

    return audit


# ---------------------------------------------------------------------------
# catalogue

_SIX_FIVE_NOTE = ("argument corrected from a^2 q^(2-r) to a q^(2-r) per axis; the printed power of a "
                  "fails already at r = 1 against the classical 6phi5 sum")

R1 = (1,)
RANKS = (1, 2, 3, 4)

CATALOGUE = [
    IdentityDef(
        "109", "Bailey terminating 10phi9 transformation",
        "Rank-one terminating very-well-poised 10phi9 transformation; a^3 q^(2+n) = bcdefg, "
        "lambda = a^2 q/(bcd)",
        R1, BASIC, _lhs_109, _rhs_109,
        free=free("a", "b", "c", "d", "e", "f"), discrete=free("n"),
        dependent=(mono("g", {"a": 3, "b": -1, "c": -1, "d": -1, "e": -1, "f": -1}, q0=2, qd={"n": 1},
                        text="g = a^3 q^(2+n)/(bcdef)"),
                   mono("lam", {"a": 2, "b": -1, "c": -1, "d": -1}, q0=1, text="lambda = a^2 q/(bcd)")),
        as_printed=False,
        note="balancing condition corrected from a^3 q^(3+n) to a^3 q^(2+n)",
        printed={"dependent": (
            mono("g", {"a": 3, "b": -1, "c": -1, "d": -1, "e": -1, "f": -1}, q0=3, qd={"n": 1},
                 text="g = a^3 q^(3+n)/(bcdef)"),
            mono("lam", {"a": 2, "b": -1, "c": -1, "d": -1}, q0=1, text="lambda = a^2 q/(bcd)"))},
        audit=lambda V: classical.bailey_109(V.a, V.b, V.c, V.d, V.e, V.f, V.n, V.ctx),
        max_n=4,
    ),
    IdentityDef(
        "87", "Jackson terminating 8phi7 summation",
        "Rank-one terminating balanced very-well-poised 8phi7 sum; a^2 q^(1+n) = bcde",
        R1, BASIC, _lhs_87, _rhs_87,
        free=free("a", "b", "c", "d"), discrete=free("n"),
        dependent=(mono("e", {"a": 2, "b": -1, "c": -1, "d": -1}, q0=1, qd={"n": 1},
                        text="e = a^2 q^(1+n)/(bcd)"),),
        audit=lambda V: classical.jackson_87(V.a, V.b, V.c, V.d, V.n, V.ctx),
        max_n=4,
    ),
    IdentityDef(
        "cnt109", "C_r terminating 10phi9 transformation",
        "C_r terminating 10phi9 transformation; a^3 q^(3-r+n_i) = b c d e_i f_i g_i, "
        "lambda = a^2 q^(2-r)/(bcd)",
        RANKS, BASIC, _cnt109_lhs, _cnt109_rhs,
        free=free("a", "b", "c", "d", "e_i", "f_i"), discrete=free("n_i"),
        dependent=(mono("lam", {"a": 2, "b": -1, "c": -1, "d": -1}, q0=2, qr=-1,
                        text="lambda = a^2 q^(2-r)/(bcd)"),
                   mono("g", {"a": 3, "b": -1, "c": -1, "d": -1, "e": -1, "f": -1}, q0=3, qr=-1,
                        qd={"n": 1}, text="g_i = a^3 q^(3-r+n_i)/(b c d e_i f_i)")),
        perturb="g", audit=_audit_cnt109,
    ),
    IdentityDef(
        "cnt109n", "C_r terminating 10phi9 transformation (iterated form)",
        "C_r terminating 10phi9 transformation with upper parameters e q^(n_i); bcdefg = a^3 q^(3-r)",
        RANKS, BASIC, _cnt109n_lhs, _cnt109n_rhs,
        free=free("a", "b", "c", "d", "e", "f"), discrete=free("n_i"),
        dependent=(mono("g", {"a": 3, "b": -1, "c": -1, "d": -1, "e": -1, "f": -1}, q0=3, qr=-1,
                        text="g = a^3 q^(3-r)/(bcdef)"),),
        audit=_audit_cnt109n,
    ),
    IdentityDef(
        "cnt109i2", "C_r terminating 10phi9 transformation on a shifted lattice",
        "C_r terminating 10phi9 transformation in points x_i; a^3 q^(3-r+N) = bcdefg",
        RANKS, BASIC, _cnt109i2_lhs, _cnt109i2_rhs,
        free=free("a", "b", "c", "d", "e", "f", "x_i"), discrete=free("N"),
        dependent=(mono("g", {"a": 3, "b": -1, "c": -1, "d": -1, "e": -1, "f": -1}, q0=3, qr=-1,
                        qd={"N": 1}, text="g = a^3 q^(3-r+N)/(bcdef)"),),
        as_printed=False,
        note="the printed left side repeats the lower parameter a x_i q/e (the very-well-poised "
             "pairing needs it once) and the right side needs (e x_i)^N in place of (b x_i)^N",
        printed={"lhs": _cnt109i2_lhs_printed, "rhs": _cnt109i2_rhs_printed},
        audit=_audit_cnt109i2,
    ),
    IdentityDef(
        "mwatson", "C_r Watson transformation",
        "C_r very-well-poised 8phi7 to A_{r-1} balanced 4phi3 transformation; no constraint",
        RANKS, BASIC, _mwatson_lhs, _mwatson_rhs,
        free=free("a", "b", "c", "d_i", "e_i"), discrete=free("n_i"),
        audit=_audit_mwatson,
    ),
    IdentityDef(
        "msears", "A_{r-1} Sears transformation",
        "A_{r-1} balanced 4phi3 transformation; no constraint",
        RANKS, BASIC, _msears_lhs, _msears_rhs,
        free=free("a_i", "b", "c", "d", "e_i"), discrete=free("n_i"),
        as_printed=False,
        note="the shifted parameter d e_i q^(-r)/(bc) on the right must be d e_i q^(1-r)/(bc); "
             "the printed form fails at r = 1 against the classical Sears transformation",
        printed={"rhs": _msears_rhs_printed},
        audit=_audit_msears,
    ),
    IdentityDef(
        "cnt87", "C_r Jackson summation (determinant form)",
        "C_r Jackson summation; b c_i d_i e_i = a^2 q^(2-r+n_i)",
        RANKS, BASIC, _cnt87_lhs, _cnt87_rhs,
        free=free("a", "b", "c_i", "d_i"), discrete=free("n_i"),
        dependent=(mono("e", {"a": 2, "b": -1, "c": -1, "d": -1}, q0=2, qr=-1, qd={"n": 1},
                        text="e_i = a^2 q^(2-r+n_i)/(b c_i d_i)"),),
        audit=_audit_cnt87,
    ),
    IdentityDef(
        "cnt87a", "C_r Jackson summation (product form)",
        "C_r Jackson summation with upper parameters e q^(n_i); bcde = a^2 q^(2-r)",
        RANKS, BASIC, _cnt87a_lhs, _cnt87a_rhs,
        free=free("a", "b", "c", "d"), discrete=free("n_i"),
        dependent=(mono("e", {"a": 2, "b": -1, "c": -1, "d": -1}, q0=2, qr=-1,
                        text="e = a^2 q^(2-r)/(bcd)"),),
        as_printed=False,
        note="the printed right side carries a spurious factor q^(-C(r,3)); without it the sum "
             "agrees with the determinant form at every rank",
        printed={"rhs": _cnt87a_rhs_printed},
        audit=_audit_cnt87a,
    ),
    IdentityDef(
        "cnt87b", "C_r Jackson summation in points x_i",
        "C_r Jackson summation with parameters d x_i, e/x_i; bcde = a^2 q^(2-r+N)",
        RANKS, BASIC, _cnt87b_lhs, _cnt87b_rhs,
        free=free("a", "b", "c", "d", "x_i"), discrete=free("N"),
        dependent=(mono("e", {"a": 2, "b": -1, "c": -1, "d": -1}, q0=2, qr=-1, qd={"N": 1},
                        text="e = a^2 q^(2-r+N)/(bcd)"),),
        as_printed=False,
        note="right side corrected: (a q^(2-r)/(b d x_i), a q^(2-r)/(c d x_i))_(N+1-r) becomes "
             "(a q/(b d x_i), a q/(c d x_i))_(N+1-r) and (a q^(2-i)/b, a q^(2-i)/c)_(N+1-i) becomes "
             "(a q/b, a q/c)_(N+1-i); both forms agree at r = 1",
        printed={"rhs": _cnt87b_rhs_printed},
        audit=_audit_cnt87b,
    ),
    IdentityDef(
        "cnt87c", "C_r Jackson summation of the second type",
        "C_r Jackson summation over points x_i q^(k_i); b c_i d_i e = a^2 q^(2-r+n_i)",
        RANKS, BASIC, _cnt87c_lhs, _cnt87c_rhs,
        free=free("a", "b", "c_i", "e", "x_i"), discrete=free("n_i"),
        dependent=(mono("d", {"a": 2, "b": -1, "c": -1, "e": -1}, q0=2, qr=-1, qd={"n": 1},
                        text="d_i = a^2 q^(2-r+n_i)/(b c_i e)"),),
        audit=_audit_cnt87c,
    ),
    IdentityDef(
        "cnt65", "C_r terminating 6phi5 summation (determinant form)",
        "C_r terminating very-well-poised 6phi5 sum with argument a q^(2-r+n_i)/(b_i c_i)",
        RANKS, BASIC, _vwp65_lhs(_p65, 1), _cnt65_rhs,
        free=free("a", "b_i", "c_i"), discrete=free("n_i"),
        as_printed=False, note=_SIX_FIVE_NOTE, printed={"lhs": _vwp65_lhs(_p65, 2)},
        audit=_audit_65(_p65),
    ),
    IdentityDef(
        "cnt65a", "C_r terminating 6phi5 summation, equal parameters",
        "C_r terminating 6phi5 sum with b_i = b, c_i = c",
        RANKS, BASIC, _vwp65_lhs(_p65a, 1), _cnt65a_rhs,
        free=free("a", "b", "c"), discrete=free("n_i"),
        as_printed=False, note=_SIX_FIVE_NOTE, printed={"lhs": _vwp65_lhs(_p65a, 2)},
        audit=_audit_65(_p65a),
    ),
    IdentityDef(
        "cnt65b", "C_r terminating 6phi5 summation, common bound",
        "C_r terminating 6phi5 sum with b_i = b, n_i = N",
        RANKS, BASIC, _vwp65_lhs(_p65b, 1), _cnt65b_rhs,
        free=free("a", "b", "c_i"), discrete=free("N"),
        as_printed=False, note=_SIX_FIVE_NOTE, printed={"lhs": _vwp65_lhs(_p65b, 2)},
        audit=_audit_65(_p65b),
    ),
    IdentityDef(
        "cnt65c", "C_r terminating 6phi5 summation in points x_i",
        "C_r terminating 6phi5 sum with b_i = b x_i, c_i = c/x_i, n_i = N",
        RANKS, BASIC, _vwp65_lhs(_p65c, 1), _cnt65c_rhs,
        free=free("a", "b", "c", "x_i"), discrete=free("N"),
        as_printed=False, note=_SIX_FIVE_NOTE, printed={"lhs": _vwp65_lhs(_p65c, 2)},
        audit=_audit_65(_p65c),
    ),
    IdentityDef(
        "cnt65d", "C_r terminating 6phi5 summation, shifted parameter",
        "C_r terminating 6phi5 sum with b_i = b, c_i = c q^(n_i)",
        RANKS, BASIC, _vwp65_lhs(_p65d, 1), _cnt65d_rhs,
        free=free("a", "b", "c"), discrete=free("n_i"),
        as_printed=False, note=_SIX_FIVE_NOTE, printed={"lhs": _vwp65_lhs(_p65d, 2)},
        audit=_audit_65(_p65d),
    ),
    IdentityDef(
        "an32", "A_{r-1} terminating 3phi2 summation (determinant form)",
        "A_{r-1} balanced terminating 3phi2 sum; no constraint",
        RANKS, BASIC, _an32_lhs_from(_p32), _an32_rhs,
        free=free("a_i", "b_i", "c"), discrete=free("n_i"),
        audit=_audit_32(_p32),
    ),
    IdentityDef(
        "an32a", "A_{r-1} terminating 3phi2 summation, equal parameters",
        "A_{r-1} 3phi2 sum with a_i = a, b_i = b",
        RANKS, BASIC, _an32_lhs_from(_p32a), _an32a_rhs,
        free=free("a", "b", "c"), discrete=free("n_i"),
        audit=_audit_32(_p32a),
    ),
    IdentityDef(
        "an32b", "A_{r-1} terminating 3phi2 summation, common bound",
        "A_{r-1} 3phi2 sum with a_i = a, n_i = N",
        RANKS, BASIC, _an32_lhs_from(_p32b), _an32b_rhs,
        free=free("a", "b_i", "c"), discrete=free("N"),
        audit=_audit_32(_p32b),
    ),
    IdentityDef(
        "an32c", "A_{r-1} terminating 3phi2 summation, shifted parameter",
        "A_{r-1} 3phi2 sum with a_i = a, b_i = b q^(n_i)",
        RANKS, BASIC, _an32_lhs_from(_p32c), _an32c_rhs,
        free=free("a", "b", "c"), discrete=free("n_i"),
        audit=_audit_32(_p32c),
    ),
    IdentityDef(
        "an32d", "A_{r-1} terminating 3phi2 summation in points x_i",
        "A_{r-1} 3phi2 sum with a_i = a x_i, b_i = b/x_i, n_i = N",
        RANKS, BASIC, _an32_lhs_from(_p32d), _an32d_rhs,
        free=free("a", "b", "c", "x_i"), discrete=free("N"),
        audit=_audit_32(_p32d),
    ),
    IdentityDef(
        "lemdet1", "Determinant of products of q-shifted factorials (type C)",
        "det((A X_i, AC/X_i)_(r-j) / (B X_i, BC/X_i)_(r-j)) evaluated as a product",
        RANKS, BASIC, _lemdet1_lhs, _lemdet1_rhs,
        free=free("X_i", "A", "B", "C"),
        perturb=None,
    ),
    IdentityDef(
        "lemdet1a", "Determinant of products of q-shifted factorials (type A limit)",
        "det(X_i^(r-j) (A/X_i)_(r-j) / (B X_i)_(r-j)) evaluated as a product",
        RANKS, BASIC, _lemdet1a_lhs, _lemdet1a_rhs,
        free=free("X_i", "A", "B"),
    ),
    IdentityDef(
        "dettf", "Determinant transformation",
        "det((z_i)_(r-j)/(a_i z_i)_(r-j)) = (-1)^C(r,2) q^C(r,3) det(z_i^(r-j) (a_i)_(r-j)/(a_i z_i)_(r-j))",
        RANKS, BASIC, _dettf_lhs, _dettf_rhs,
        free=free("a_i", "z_i"),
    ),
]
