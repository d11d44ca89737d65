"""Nonterminating entries, checked in complex floating point.

Covers the nonterminating 10phi9 transformation in series, q-integral and
subset-sum form, the bilateral 1psi1 sums, and the C_r 6phi5, A_{r-1}
q-Gauss and q-binomial summations.
"""

from ..kernel import binom2, binom3
from ..scalars import FLOAT
from ..summation import Region, SubsetMask, TermOracle, multi_q_integral, sum_over_subsets
from . import classical
from .core import FloatRanges, IdentityDef, free, mono, pred

FL = (FLOAT,)
R1 = (1,)
RANKS = (1, 2, 3)

# q-integrals and argument-q series decay like q^k per axis
_SMALL_Q = (3e-4, 9e-4)


# ---------------------------------------------------------------------------
# rank-one nonterminating 10phi9


def _vwp_orthant(V, a, params):
    """Very-well-poised series with argument ``q``, summed to convergence."""
    q = V.q
    num = (a,) + tuple(params)
    den = (q,) + tuple(a * q / p for p in params)
    return V.orthant([lambda k: V.vwp(a, k) * V.R(k, num, den) * V.qp(k)])


def _lhs_109nt(V):
    a, b, q = V.a, V.b, V.q
    six = (V.c, V.d, V.e, V.f, V.g, V.h)
    first = _vwp_orthant(V, a, (b,) + six)
    w = V.I((a * q, b / a) + six + tuple(b * q / x for x in six),
            (b * b * q / a, a / b) + tuple(a * q / x for x in six) + tuple(b * x / a for x in six))
    return first + w * _vwp_orthant(V, b * b / a, (b,) + tuple(b * x / a for x in six))


def _rhs_109nt(V):
    a, b, q, lam = V.a, V.b, V.q, V.lam
    cde = (V.c, V.d, V.e)
    fgh = (V.f, V.g, V.h)
    aq = tuple(a * q / x for x in cde + fgh)
    one = V.I((a * q, b / a) + tuple(lam * q / x for x in fgh) + tuple(b * x / lam for x in fgh),
              (lam * q, b / lam) + aq[3:] + tuple(b * x / a for x in fgh))
    one = one * _vwp_orthant(V, lam, (b,) + tuple(lam * x / a for x in cde) + fgh)
    two = V.I((a * q, b / a) + fgh + tuple(b * q / x for x in fgh) + tuple(lam * x / a for x in cde)
              + tuple(a * b * q / (lam * x) for x in cde),
              (b * b * q / lam, lam / b) + aq + tuple(b * x / a for x in cde + fgh))
    two = two * _vwp_orthant(V, b * b / lam, (b,) + tuple(b * x / a for x in cde)
                             + tuple(b * x / lam for x in fgh))
    return one + two


# ---------------------------------------------------------------------------
# multiple q-integrals


def _c_integral(V, A, lower, axis):
    """``int_{lower_i}^b prod_{i<j}(t_i - t_j)(1 - t_i t_j/A) prod_i axis(i, t_i)``.

    The per-axis factor is cached by point, so each subset of the Jackson
    expansion only pays for the coupling at each lattice point.
    """
    r = V.r
    caches = [dict() for _ in range(r)]

    def f(t):
        out = V.one
        for i in range(r):
            c = caches[i]
            v = c.get(t[i])
            if v is None:
                v = axis(i, t[i])
                c[t[i]] = v
            out *= v
        for i in range(r):
            for j in range(i + 1, r):
                out *= V.df(t[i], t[j]) * V.om(t[i] * t[j] / A)
        return out

    return multi_q_integral(f, lower, (V.b,) * r, V.ctx)


def _cnint109_side(V, A, x, *slots):
    """Integral of the C_r 10phi9 form with base ``A``.

    Each of the six ``slots`` is a per-axis tuple of parameters ``P``,
    entering as ``(qt/P)_inf`` over ``(Pt/A)_inf``.
    """
    b, q = V.b, V.q

    def axis(i, t):
        num = (q * t / (A * x[i]), q * t / b) + tuple(q * t / P[i] for P in slots)
        den = (t * x[i], b * t / A) + tuple(P[i] * t / A for P in slots)
        return V.om(t * t / A) * V.I(num, den)

    return _c_integral(V, A, tuple(A * xi for xi in x), axis)


def _cnint109_lhs(V):
    r = V.r
    rep = lambda v: (v,) * r  # noqa: E731
    return _cnint109_side(V, V.a, V.x, V.c, V.d, V.e, rep(V.f), rep(V.g), rep(V.h))


def _cnint109_rhs(V):
    a, b, q, r, lam, x = V.a, V.b, V.q, V.r, V.lam, V.x
    f, g, h = V.f, V.g, V.h
    out = (a / lam) ** binom2(r + 1)
    for i in range(r):
        c, d, e, xi, s = V.c[i], V.d[i], V.e[i], x[i], V.qp(i)
        out = out * V.I((b / (a * xi), a * xi * q / b, lam * c * xi / a, lam * d * xi / a, lam * e * xi / a,
                         b * f * s / lam, b * g * s / lam, b * h * s / lam),
                        (b / (lam * xi), lam * xi * q / b, c * xi, d * xi, e * xi,
                         b * f * s / a, b * g * s / a, b * h * s / a))
    # (a q t/(c lam)) over (c t/a) is the generic slot at lam c/a
    C = tuple(lam * c / a for c in V.c)
    D = tuple(lam * d / a for d in V.d)
    E = tuple(lam * e / a for e in V.e)
    return out * _cnint109_side(V, lam, x, C, D, E, (f,) * r, (g,) * r, (h,) * r)


def _int109_lhs(V):
    return _cnint109_side(V, V.a, (V.one,), (V.c,), (V.d,), (V.e,), (V.f,), (V.g,), (V.h,))


def _int109_rhs(V):
    a, b, q, lam = V.a, V.b, V.q, V.lam
    cde = (V.c, V.d, V.e)
    fgh = (V.f, V.g, V.h)
    pre = a / lam * V.I((b / a, a * q / b) + tuple(lam * x / a for x in cde) + tuple(b * x / lam for x in fgh),
                        (b / lam, lam * q / b) + cde + tuple(b * x / a for x in fgh))
    C, D, E = (tuple((lam * x / a,)) for x in cde)
    return pre * _cnint109_side(V, lam, (V.one,), C, D, E, (V.f,), (V.g,), (V.h,))


def _cnint109c_lhs(V):
    r, x = V.r, V.x
    rep = lambda v: (v,) * r  # noqa: E731
    G = tuple(V.g / xi for xi in x)
    return _cnint109_side(V, V.a, x, rep(V.c), rep(V.d), rep(V.e), rep(V.f), G, rep(V.h))


def _cnint109c_rhs(V):
    a, b, c, d, e, f, g, h, q, r, x = V.a, V.b, V.c, V.d, V.e, V.f, V.g, V.h, V.q, V.r, V.x
    L = b * h * V.qp(r - 1) / g
    out = (a / L) ** binom2(r + 1)
    for i in range(1, r + 1):
        xi = x[i - 1]
        s = V.qp(i - 1)
        u = a * V.qp(2 - i) / h
        out = out * V.I((b / (a * xi), a * xi * q / b, a * xi * q / (c * g), a * xi * q / (d * g),
                         a * xi * q / (e * g), a * xi * q / (f * g), b * h * V.qp(r - 1) / a,
                         g * V.qp(1 - i), u / c, u / d, u / e, u / f),
                        (c * xi, d * xi, e * xi, f * xi, g, g * V.qp(1 - r) / (h * xi), h * V.qp(r) * xi / g,
                         b * c * s / a, b * d * s / a, b * e * s / a, b * f * s / a, b * h * s / a))

    # the transformed integrand is the generic one at base L with these slots
    def axis(i, t):
        xi = x[i]
        num = (g * V.qp(2 - r) * t / (b * h * xi), q * t / b, c * g * t / a, d * g * t / a,
               e * g * t / a, f * g * t / a, a * V.qp(2 - r) * t * xi / (b * h), q * t / h)
        den = (t * xi, g * V.qp(1 - r) * t / h, a * t * V.qp(2 - r) / (b * c * h),
               a * t * V.qp(2 - r) / (b * d * h), a * t * V.qp(2 - r) / (b * e * h),
               a * t * V.qp(2 - r) / (b * f * h), g * t / (a * xi), g * V.qp(1 - r) * t / b)
        return V.om(t * t / L) * V.I(num, den)

    return out * _c_integral(V, L, tuple(L * xi for xi in x), axis)


# ---------------------------------------------------------------------------
# subset-sum form


def _subset_side(V, A, x, slots, mixed=None, inner_den=None):
    """Sum over subsets ``S`` of the normalised C_r 10phi9 pieces.

    ``slots[i]`` holds the six parameters ``(C, D, E, F, G, H)`` of axis
    ``i``; indices in ``S`` run along ``x_i q^k`` with base ``A x_i^2``, the
    others along ``b q^k/A`` with base ``b^2/A``.  ``mixed`` and
    ``inner_den`` override the mixed-pair normaliser and the second lower
    parameter of the ``S`` part (used only to reproduce misprints).
    """
    b, q, r = V.b, V.q, V.r
    B = b * b / A
    inside, outside, pre = [], [], []
    for i in range(r):
        xi, P = x[i], slots[i]
        A2 = A * xi * xi
        second = A * xi * q / b if inner_den is None else inner_den(i)
        num = (A2, b * xi) + tuple(p * xi for p in P)
        den = (q, second) + tuple(A * xi * q / p for p in P)
        inside.append((A2, num, den))
        num = (B, b * xi) + tuple(b * p / A for p in P)
        den = (q, b * q / (A * xi)) + tuple(b * q / p for p in P)
        outside.append((B, num, den))
        pre.append(V.I((A2 * q,) + tuple(p * xi for p in P) + (b / (A * xi),) + tuple(b * q / p for p in P),
                       (A * xi / b,) + tuple(A * xi * q / p for p in P) + (b * b * q / A,)
                       + tuple(b * p / A for p in P)))
    cache = {}

    def axis(i, k, member):
        key = (i, k, member)
        v = cache.get(key)
        if v is None:
            base, num, den = inside[i] if member else outside[i]
            v = V.vwp(base, k) * V.R(k, num, den) * V.qp(k)
            cache[key] = v
        return v

    weights = {}
    for s in SubsetMask.all(r):
        w = (b / A) ** binom2(r - s.size)
        for i in range(r):
            if i not in s:
                w = w * pre[i]
        for i in range(r):
            for j in range(i + 1, r):
                if (i in s) != (j in s) and mixed is not None:
                    w = w / mixed(i, j)
                else:
                    w = w / (V.df(x[i], x[j]) * V.om(A * x[i] * x[j]))
        weights[s.bits] = w

    def term(s, k):
        out = weights[s.bits]
        t = [x[i] * V.qp(k[i]) if i in s else b * V.qp(k[i]) / A for i in range(r)]
        for i in range(r):
            for j in range(i + 1, r):
                inn, jnn = i in s, j in s
                kk = V.qp(k[i] + k[j])
                if inn and jnn:
                    out = out * V.df(t[i], t[j]) * V.om(A * x[i] * x[j] * kk)
                elif not inn and not jnn:
                    out = out * V.df(V.qp(k[i]), V.qp(k[j])) * V.om(B * kk)
                elif inn:
                    out = out * V.df(t[i], t[j]) * V.om(b * x[i] * kk)
                else:
                    # (x_j q^{k_j} - b q^{k_i}/A) over (x_j - x_i)
                    out = out * V.df(t[i], t[j]) * V.om(b * x[j] * kk)
        for i in range(r):
            out = out * axis(i, k[i], i in s)
        return out

    return sum_over_subsets(TermOracle(term, r, uses_subset=True), Region.orthant(r), V.ctx)


def _cnnt109_lhs(V):
    slots = [(V.c[i], V.d[i], V.e[i], V.f, V.g, V.h) for i in range(V.r)]
    return _subset_side(V, V.a, V.x, slots)


def _cnnt109_rhs(V):
    a, b, q, r, lam, x, f, g, h = V.a, V.b, V.q, V.r, V.lam, V.x, V.f, V.g, V.h
    out = V.pairs(lambda i, j: V.div(V.om(lam * x[i - 1] * x[j - 1]), V.om(a * x[i - 1] * x[j - 1])))
    for i in range(1, r + 1):
        xi, s = x[i - 1], V.qp(i - 1)
        out = out * V.I((a * xi * xi * q, b / (a * xi), lam * xi * q / f, lam * xi * q / g, lam * xi * q / h,
                         b * f * s / lam, b * g * s / lam, b * h * s / lam),
                        (lam * xi * xi * q, b / (lam * xi), a * xi * q / f, a * xi * q / g, a * xi * q / h,
                         b * f * s / a, b * g * s / a, b * h * s / a))
    slots = [(lam * V.c[i] / a, lam * V.d[i] / a, lam * V.e[i] / a, f, g, h) for i in range(r)]
    return out * _subset_side(V, lam, x, slots)


def _cnnt109c_lhs(V):
    slots = [(V.c, V.d, V.e, V.f, V.g / xi, V.h) for xi in V.x]
    return _subset_side(V, V.a, V.x, slots)


def _cnnt109c_rhs(V, printed=False):
    a, b, c, d, e, f, g, h, q, r, x = V.a, V.b, V.c, V.d, V.e, V.f, V.g, V.h, V.q, V.r, V.x
    L = b * h * V.qp(r - 1) / g
    out = V.pairs(lambda i, j: V.div(V.om(L * x[i - 1] * x[j - 1]), V.om(a * x[i - 1] * x[j - 1])))
    for i in range(1, r + 1):
        xi, s = x[i - 1], V.qp(i - 1)
        m = b * h * V.qp(r - 1) * xi / a
        u = a * V.qp(2 - i) / h
        out = out * V.I((a * xi * xi * q, b / (a * xi), b * xi * V.qp(r) / g, m * c, m * d, m * e, m * f,
                         g * V.qp(1 - i), u / c, u / d, u / e, u / f),
                        (L * xi * xi * q, g * V.qp(1 - r) / (h * xi), a * xi * q / c, a * xi * q / d,
                         a * xi * q / e, a * xi * q / f, a * xi * q / h,
                         b * c * s / a, b * d * s / a, b * e * s / a, b * f * s / a, b * h * s / a))
    slots = [(a * q / (c * g), a * q / (d * g), a * q / (e * g), a * q / (f * g),
              b * h * V.qp(r - 1) / (a * xi), h) for xi in x]
    if not printed:
        return out * _subset_side(V, L, x, slots)
    Lp = b * h * V.qp(1 - r) / g
    return out * _subset_side(
        V, L, x, slots,
        mixed=lambda i, j: V.df(x[i], x[j]) * V.om(Lp * x[i] * x[j]),
        inner_den=lambda i: h * x[i] * V.qp(r) / b,
    )


def _cnnt109c_rhs_printed(V):
    return _cnnt109c_rhs(V, printed=True)


# ---------------------------------------------------------------------------
# bilateral 1psi1 sums


def _lhs_11(V):
    a, b, z = V.a, V.b, V.z
    return V.bilateral([lambda k: V.R(k, (a,), (b,)) * z ** k])


def _rhs_11(V):
    a, b, z, q = V.a, V.b, V.z, V.q
    return V.I((q, a * z, q / (a * z), b / a), (b, z, b / (a * z), q / a))


def _an11_sum(V, a, b, z):
    """``sum over Z^r`` of the Vandermonde in ``q^{k_i}`` times ``prod (a_i)_k/(b_i)_k z_i^k``."""

    def axis(i):
        return lambda k: V.R(k, (a[i],), (b[i],)) * z[i] ** k

    return V.bilateral([axis(i) for i in range(V.r)], V.type_a())


def _an11_lhs(V):
    return _an11_sum(V, V.a, V.b, V.z)


def _an11_rhs(V):
    a, b, z, q, r = V.a, V.b, V.z, V.q, V.r
    out = q ** binom2(r) * V.det(lambda i, m: V.R(m, (z[i],), (a[i] * z[i] * q / b[i],)) * b[i] ** (-m))
    return out * V.prod(lambda i: V.I((q, a[i - 1] * z[i - 1], q / (a[i - 1] * z[i - 1]), b[i - 1] / a[i - 1]),
                                      (b[i - 1], z[i - 1], b[i - 1] / (a[i - 1] * z[i - 1]), q / a[i - 1])))


def _an11b_lhs(V):
    r = V.r
    return _an11_sum(V, tuple(V.a * xi for xi in V.x), tuple(V.b * xi for xi in V.x), (V.z,) * r)


def _an11b_rhs(V):
    a, b, z, q, r, x = V.a, V.b, V.z, V.q, V.r, V.x
    out = (a * z) ** (-binom2(r)) * q ** (-binom3(r)) * V.pairs(lambda i, j: V.df(1 / x[j - 1], 1 / x[i - 1]))
    for i in range(1, r + 1):
        xi = x[i - 1]
        out = out * V.I((q, a * z * xi, q / (a * z * xi), b / a),
                        (b * xi, z * V.qp(i - 1), b * V.qp(1 - i) / (a * z), q / (a * xi)))
    return out


def _an11e_lhs(V):
    x = V.x
    return _an11_sum(V, tuple(V.a / xi for xi in x), tuple(V.b * xi for xi in x), tuple(V.z * xi for xi in x))


def _an11e_rhs(V, shift=1):
    a, b, z, q, r, x = V.a, V.b, V.z, V.q, V.r, V.x
    out = a ** (-binom2(r)) * V.pairs(lambda i, j: V.df(x[i - 1], x[j - 1]))
    for i in range(1, r + 1):
        xi = x[i - 1]
        out = out * V.P(i - 1, (b * V.qp(1 - 2 * r + i) / (a * z * z),))
        out = out * V.I((q, a * z, q / (a * z), b * xi * xi / a),
                        (b * xi, z * xi, b * xi * V.qp(shift - r) / (a * z), xi * q / a))
    return out


def _an11e_rhs_printed(V):
    return _an11e_rhs(V, shift=2)


# ---------------------------------------------------------------------------
# C_r nonterminating 6phi5


def _cn65_lhs_from(params, power=1):
    """LHS of the 6phi5 family; ``params(V, i)`` gives ``(b, c, d)`` of axis ``i``."""

    def lhs(V):
        a, q, r = V.a, V.q, V.r

        def axis(i):
            b, c, d = params(V, i)
            z = a ** power * V.qp(2 - r) / (b * c * d)
            num = (a, b, c, d)
            den = (q, a * q / b, a * q / c, a * q / d)
            return lambda k: V.vwp(a, k) * V.R(k, num, den) * z ** k

        return V.orthant([axis(i) for i in range(r)], V.type_c(a))

    return lhs


def _p65(V, i):
    return V.b[i], V.c[i], V.d[i]


def _p65a(V, i):
    return V.b, V.c, V.d[i]


def _p65b(V, i):
    x = V.x[i]
    return V.b, V.c * x, V.d / x


def _rogers(V, b, c, d):
    a, q = V.a, V.q
    return V.I((a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)),
               (a * q / b, a * q / c, a * q / d, a * q / (b * c * d)))


def _cn65_rhs(V):
    a, b, c, d, r = V.a, V.b, V.c, V.d, V.r
    out = V.qp(-binom3(r)) * V.det(lambda i, m: V.R(m, (b[i], c[i], d[i]), (b[i] * c[i] * d[i] / a,)))
    return out * V.prod(lambda i: _rogers(V, b[i - 1], c[i - 1], d[i - 1]))


def _cn65a_rhs(V):
    a, b, c, d, r = V.a, V.b, V.c, V.d, V.r
    out = V.pairs(lambda i, j: V.df(d[j - 1], d[i - 1]))
    for i in range(1, r + 1):
        out = out * V.div(V.P(i - 1, (b, c, b * c / a)), V.P(r - 1, (b * c * d[i - 1] / a,)))
        out = out * _rogers(V, b, c, d[i - 1])
    return out


def _cn65b_rhs(V):
    a, b, c, d, r, x = V.a, V.b, V.c, V.d, V.r, V.x
    out = c ** binom2(r) * V.pairs(lambda i, j: V.df(x[j - 1], x[i - 1]) * V.om(d / (c * x[i - 1] * x[j - 1])))
    for i in range(1, r + 1):
        out = out * V.div(V.P(i - 1, (b,)), V.P(i - 1, (b * c * d / a,)))
        out = out * _rogers(V, b, c * x[i - 1], d / x[i - 1])
    return out


# ---------------------------------------------------------------------------
# A_{r-1} q-Gauss and q-binomial


def _an_orthant(V, num, den, z):
    """Vandermonde-coupled orthant sum of ``prod (num_i)_k/(q, den_i)_k z_i^k``."""
    q = V.q

    def axis(i):
        top, bot, w = num[i], (q,) + den[i], z[i]
        return lambda k: V.R(k, top, bot) * w ** k

    return V.orthant([axis(i) for i in range(V.r)], V.type_a())


def _an21_lhs(V):
    a, b, c, r = V.a, V.b, V.c, V.r
    cq = c * V.qp(r - 1)
    return _an_orthant(V, [(a[i], b[i]) for i in range(r)], [(cq,)] * r,
                       [c / (a[i] * b[i]) for i in range(r)])


def _an21_rhs(V):
    a, b, c, q, r = V.a, V.b, V.c, V.q, V.r
    out = (-c) ** binom2(r) * q ** binom3(r)
    for i in range(1, r + 1):
        ai, bi = a[i - 1], b[i - 1]
        out = out * V.div(V.P(r - 1, (c,)), V.P(i - 1, (c * V.qp(2 * r - 2 * i),)))
        out = out * V.I((c / ai, c / bi), (c, c / (ai * bi)))
    det = V.det(lambda i, m: V.R(m, (a[i], b[i]), (c / a[i], c / b[i])) * (a[i] * b[i]) ** (-m))
    return out * det


def _an21a_lhs(V):
    a, b, c, r, x = V.a, V.b, V.c, V.r, V.x
    z = c * V.qp(1 - r) / (a * b)
    return _an_orthant(V, [(a * xi, b / xi) for xi in x], [(c,)] * r, [z] * r)


def _an21a_rhs(V):
    a, b, c, q, r, x = V.a, V.b, V.c, V.q, V.r, V.x
    out = (c / (b * q)) ** binom2(r) * V.qp(-binom3(r))
    out = out * V.pairs(lambda i, j: V.df(x[i - 1], x[j - 1]) * V.om(b / (a * x[i - 1] * x[j - 1])))
    for i in range(1, r + 1):
        xi = x[i - 1]
        out = out * V.I((c / (a * xi), c * xi / b), (c, c * V.qp(1 - i) / (a * b)))
    return out


def _an21b_lhs(V):
    a, b, c, r = V.a, V.b, V.c, V.r
    return _an_orthant(V, [(a, bi) for bi in b], [(c,)] * r, [c * V.qp(1 - r) / (a * bi) for bi in b])


def _an21b_rhs(V, printed=False):
    a, b, c, q, r = V.a, V.b, V.c, V.q, V.r
    out = (c / (a * q)) ** binom2(r) * V.qp(-2 * binom3(r))
    if printed:
        out = out * V.pairs(lambda i, j: V.df(1 / b[i - 1], 1 / b[j - 1]))
    else:
        out = out * V.pairs(lambda i, j: V.df(1 / b[j - 1], 1 / b[i - 1]))
    for i in range(1, r + 1):
        bi = b[i - 1]
        s = V.qp(i - 1) if printed else V.qp(1 - i)
        out = out * V.P(i - 1, (a,)) * V.I((c * s / a, c / bi), (c, c * V.qp(1 - r) / (a * bi)))
    return out


def _an21b_rhs_printed(V):
    return _an21b_rhs(V, printed=True)


def _binomial_products(V, a, z):
    return V.prod(lambda i: V.I((a[i - 1] * z[i - 1],), (z[i - 1],)))


def _an10_lhs(V):
    r = V.r
    return _an_orthant(V, [(ai,) for ai in V.a], [()] * r, V.z)


def _an10_rhs(V):
    a, z, q, r = V.a, V.z, V.q, V.r
    det = V.det(lambda i, m: z[i] ** m * V.R(m, (a[i],), (a[i] * z[i],)))
    return (-1) ** binom2(r) * q ** binom3(r) * det * _binomial_products(V, a, z)


def _an10v_rhs(V):
    a, z = V.a, V.z
    det = V.det(lambda i, m: V.R(m, (z[i],), (a[i] * z[i],)))
    return det * _binomial_products(V, a, z)


def _cn10a_lhs(V):
    r = V.r
    return _an_orthant(V, [(V.a,)] * r, [()] * r, V.z)


def _cn10a_rhs(V):
    a, z, q, r = V.a, V.z, V.q, V.r
    out = q ** binom3(r) * V.pairs(lambda i, j: V.df(z[j - 1], z[i - 1]))
    for i in range(1, r + 1):
        out = out * V.P(i - 1, (a,)) * V.I((a * z[i - 1] * V.qp(r - 1),), (z[i - 1],))
    return out


def _cn10b_lhs(V):
    r, x = V.r, V.x
    return _an_orthant(V, [(V.a / xi,) for xi in x], [()] * r, [V.z * xi for xi in x])


def _cn10b_rhs(V):
    a, z, q, r, x = V.a, V.z, V.q, V.r, V.x
    out = z ** binom2(r) * q ** binom3(r) * V.pairs(lambda i, j: V.df(x[j - 1], x[i - 1]))
    for i in range(1, r + 1):
        out = out * V.I((a * z * V.qp(i - 1),), (z * x[i - 1],))
    return out


def _cn10c_lhs(V):
    r = V.r
    return _an_orthant(V, [(ai,) for ai in V.a], [()] * r, (V.z,) * r)


def _cn10c_rhs(V):
    a, z, q, r = V.a, V.z, V.q, V.r
    out = z ** binom2(r) * q ** (2 * binom3(r)) * V.pairs(lambda i, j: V.df(a[i - 1], a[j - 1]))
    for i in range(1, r + 1):
        out = out * V.I((a[i - 1] * z * V.qp(r - 1),), (z * V.qp(i - 1),))
    return out


# ---------------------------------------------------------------------------
# rank-one audits


def _audit_109nt(V):
    return classical.bailey_109_nonterminating(V.a, V.b, V.c, V.d, V.e, V.f, V.g, V.ctx)


def _audit_int109(V):
    return classical.bailey_109_integral(V.a, V.b, V.c, V.d, V.e, V.f, V.g, V.ctx)


def _audit_cnint109(V):
    x = V.x[0]
    left, right = classical.bailey_109_integral(V.a * x * x, V.b * x, V.c[0] * x, V.d[0] * x, V.e[0] * x,
                                                V.f * x, V.g * x, V.ctx)
    return left / x, right / x


def _audit_cnint109c(V):
    x = V.x[0]
    left, right = classical.bailey_109_integral(V.a * x * x, V.b * x, V.c * x, V.d * x, V.e * x,
                                                V.f * x, V.g, V.ctx)
    return left / x, right / x


def _audit_cnnt109(V):
    x = V.x[0]
    return classical.bailey_109_nonterminating(V.a * x * x, V.b * x, V.c[0] * x, V.d[0] * x, V.e[0] * x,
                                               V.f * x, V.g * x, V.ctx)


def _audit_cnnt109c(V):
    x = V.x[0]
    return classical.bailey_109_nonterminating(V.a * x * x, V.b * x, V.c * x, V.d * x, V.e * x,
                                               V.f * x, V.g, V.ctx)


# ---------------------------------------------------------------------------
# predicates and sampling ranges


def _each(fn):
    """Predicate check that ``fn(V, i)`` holds for every axis."""
    return lambda V: all(fn(V, i) for i in range(V.r))


def _annulus(lo, z):
    return abs(lo) < abs(z) < 1


_INTEGRAL_RANGES = FloatRanges(q=_SMALL_Q, default=(0.5, 2.0))
_SERIES_RANGES = FloatRanges(q=(0.02, 0.05), default=(0.5, 2.0), params=(("z", (1e-4, 8e-4)),))
_PSI_RANGES = FloatRanges(q=(0.02, 0.05), default=(0.5, 2.0),
                          params=(("a", (1e5, 1e6)), ("b", (1e-12, 5e-12)),
                                  ("z", (1e-6, 4e-6))))
_SIX_FIVE_RANGES = FloatRanges(q=(0.03, 0.06), default=(0.3, 1.0),
                               params=(("b", (40.0, 100.0)), ("c", (40.0, 100.0)), ("d", (40.0, 100.0)),
                                       ("x", (0.7, 1.4))))
_GAUSS_RANGES = FloatRanges(q=(0.02, 0.05), default=(0.5, 2.0), params=(("c", (5e-5, 2e-4)),))
_GAUSS_SHIFTED = FloatRanges(q=(0.02, 0.05), default=(5.0, 20.0),
                             params=(("c", (2e-6, 8e-6)), ("x", (0.5, 2.0))))

_SIX_FIVE_NOTE = ("argument corrected from a^2 q^(2-r) to a q^(2-r) per axis; the printed power of a "
                  "fails already at r = 1 against Rogers' 6phi5 sum")

_H_109 = mono("h", {"a": 3, "b": -1, "c": -1, "d": -1, "e": -1, "f": -1, "g": -1}, q0=2,
              text="h = a^3 q^2/(bcdefg)")
_LAM_109 = mono("lam", {"a": 2, "c": -1, "d": -1, "e": -1}, q0=1, text="lambda = a^2 q/(cde)")
_E_CN = mono("e", {"a": 2, "c": -1, "d": -1, "x": -1, "lam": -1}, q0=1,
             text="e_i = a^2 q/(c_i d_i x_i lambda)")
_H_CN = mono("h", {"a": 1, "lam": 1, "b": -1, "f": -1, "g": -1}, q0=2, qr=-1,
             text="h = a lambda q^(2-r)/(bfg), i.e. a^3 q^(3-r) = b c_i d_i e_i x_i f g h")
_H_CNC = mono("h", {"a": 3, "b": -1, "c": -1, "d": -1, "e": -1, "f": -1, "g": -1}, q0=3, qr=-1,
              text="h = a^3 q^(3-r)/(bcdefg)")

CATALOGUE = [
    IdentityDef(
        "109nt", "Bailey nonterminating 10phi9 transformation",
        "Four-term nonterminating very-well-poised 10phi9 transformation; a^3 q^2 = bcdefgh, "
        "lambda = a^2 q/(cde)",
        R1, FL, _lhs_109nt, _rhs_109nt,
        free=free("a", "b", "c", "d", "e", "f", "g"), dependent=(_H_109, _LAM_109),
        terminating=False, sampling=_INTEGRAL_RANGES, audit=_audit_109nt,
    ),
    IdentityDef(
        "int109", "Nonterminating 10phi9 transformation as a q-integral",
        "int_a^b of the very-well-poised integrand equals a prefactor times int_lambda^b; "
        "a^3 q^2 = bcdefgh, lambda = a^2 q/(cde)",
        R1, FL, _int109_lhs, _int109_rhs,
        free=free("a", "b", "c", "d", "e", "f", "g"), dependent=(_H_109, _LAM_109),
        terminating=False, sampling=_INTEGRAL_RANGES, audit=_audit_int109,
    ),
    IdentityDef(
        "11", "Ramanujan 1psi1 summation",
        "Bilateral 1psi1 sum as an infinite product, provided |b/a| < |z| < 1",
        R1, FL, _lhs_11, _rhs_11,
        free=free("a", "b", "z"),
        convergence=(pred("|b/a| < |z| < 1", lambda V: _annulus(V.b / V.a, V.z)),),
        terminating=False, sampling=_PSI_RANGES,
        audit=lambda V: classical.ramanujan_11(V.a, V.b, V.z, V.ctx),
    ),
    IdentityDef(
        "cnint109", "C_r multiple q-integral 10phi9 transformation",
        "C_r transformation of multiple Jackson integrals over [a x_i, b]; a^3 q^(3-r) = b c_i d_i e_i x_i f g h "
        "and lambda = a^2 q/(c_i d_i e_i x_i)",
        (1, 2), FL, _cnint109_lhs, _cnint109_rhs,
        free=free("a", "b", "c_i", "d_i", "x_i", "f", "g", "lam"), dependent=(_E_CN, _H_CN),
        terminating=False, sampling=_INTEGRAL_RANGES, audit=_audit_cnint109,
    ),
    IdentityDef(
        "cnint109c", "C_r multiple q-integral 10phi9 transformation (iterated form)",
        "C_r transformation of multiple Jackson integrals with g/x_i and lower limits b h q^(r-1) x_i/g; "
        "a^3 q^(3-r) = bcdefgh",
        (1, 2), FL, _cnint109c_lhs, _cnint109c_rhs,
        free=free("a", "b", "c", "d", "e", "f", "g", "x_i"), dependent=(_H_CNC,),
        terminating=False, sampling=_INTEGRAL_RANGES, audit=_audit_cnint109c,
    ),
    IdentityDef(
        "cnnt109", "C_r nonterminating 10phi9 transformation",
        "C_r nonterminating 10phi9 transformation written as sums over subsets S; "
        "a^3 q^(3-r) = b c_i d_i e_i x_i f g h and lambda = a^2 q/(c_i d_i e_i x_i)",
        (1, 2), FL, _cnnt109_lhs, _cnnt109_rhs,
        free=free("a", "b", "c_i", "d_i", "x_i", "f", "g", "lam"), dependent=(_E_CN, _H_CN),
        terminating=False, sampling=_INTEGRAL_RANGES, audit=_audit_cnnt109,
    ),
    IdentityDef(
        "cnnt109c", "C_r nonterminating 10phi9 transformation (iterated form)",
        "C_r nonterminating 10phi9 transformation with g/x_i, written as sums over subsets S; "
        "a^3 q^(3-r) = bcdefgh",
        (1, 2), FL, _cnnt109c_lhs, _cnnt109c_rhs,
        free=free("a", "b", "c", "d", "e", "f", "g", "x_i"), dependent=(_H_CNC,),
        terminating=False, sampling=_INTEGRAL_RANGES, audit=_audit_cnnt109c,
        as_printed=False,
        note="right side corrected: the second lower parameter of the S-part is h x_i q^r/g (printed "
             "h x_i q^r/b) and the mixed-pair normaliser is 1 - b h x_i x_j q^(r-1)/g (printed q^(1-r)); "
             "the first already fails at r = 1, the second only for r >= 2",
        printed={"rhs": _cnnt109c_rhs_printed},
    ),
    IdentityDef(
        "an11", "A_{r-1} 1psi1 summation (determinant form)",
        "A_{r-1} bilateral 1psi1 sum with a determinant on the right, provided "
        "|b_i q^(1-r)/a_i| < |z_i| < 1",
        RANKS, FL, _an11_lhs, _an11_rhs,
        free=free("a_i", "b_i", "z_i"),
        convergence=(pred("|b_i q^(1-r)/a_i| < |z_i| < 1",
                          _each(lambda V, i: _annulus(V.b[i] * V.qp(1 - V.r) / V.a[i], V.z[i]))),),
        terminating=False, sampling=_PSI_RANGES, audit=lambda V: classical.ramanujan_11(
            V.a[0], V.b[0], V.z[0], V.ctx),
    ),
    IdentityDef(
        "an11b", "A_{r-1} 1psi1 summation with a_i = a x_i, b_i = b x_i",
        "A_{r-1} bilateral 1psi1 sum in product form, provided |b q^(1-r)/a| < |z| < 1",
        RANKS, FL, _an11b_lhs, _an11b_rhs,
        free=free("a", "b", "x_i", "z"),
        convergence=(pred("|b q^(1-r)/a| < |z| < 1", lambda V: _annulus(V.b * V.qp(1 - V.r) / V.a, V.z)),),
        terminating=False, sampling=_PSI_RANGES, audit=lambda V: classical.ramanujan_11(
            V.a * V.x[0], V.b * V.x[0], V.z, V.ctx),
    ),
    IdentityDef(
        "an11e", "A_{r-1} 1psi1 summation with a_i = a/x_i, b_i = b x_i, z_i = z x_i",
        "A_{r-1} bilateral 1psi1 sum in product form, provided |b x_i^2 q^(1-r)/a| < |z x_i| < 1",
        RANKS, FL, _an11e_lhs, _an11e_rhs,
        free=free("a", "b", "x_i", "z"),
        convergence=(pred("|b x_i^2 q^(1-r)/a| < |z x_i| < 1",
                          _each(lambda V, i: _annulus(V.b * V.x[i] ** 2 * V.qp(1 - V.r) / V.a,
                                                      V.z * V.x[i]))),),
        terminating=False, sampling=_PSI_RANGES, audit=lambda V: classical.ramanujan_11(
            V.a / V.x[0], V.b * V.x[0], V.z * V.x[0], V.ctx),
        as_printed=False,
        note="the denominator factor (b x_i q^(2-r)/(a z))_inf must be (b x_i q^(1-r)/(a z))_inf; the "
             "printed form fails at r = 1 against Ramanujan's 1psi1 sum",
        printed={"rhs": _an11e_rhs_printed},
    ),
    IdentityDef(
        "cn65", "C_r nonterminating 6phi5 summation (determinant form)",
        "C_r very-well-poised 6phi5 sum with argument a q^(2-r)/(b_i c_i d_i), provided "
        "|a q^(2-r)/(b_i c_i d_i)| < 1",
        RANKS, FL, _cn65_lhs_from(_p65), _cn65_rhs,
        free=free("a", "b_i", "c_i", "d_i"),
        convergence=(pred("|a q^(2-r)/(b_i c_i d_i)| < 1",
                          _each(lambda V, i: abs(V.a * V.qp(2 - V.r) / (V.b[i] * V.c[i] * V.d[i])) < 1)),),
        terminating=False, sampling=_SIX_FIVE_RANGES,
        as_printed=False, note=_SIX_FIVE_NOTE, printed={"lhs": _cn65_lhs_from(_p65, 2)},
        audit=lambda V: classical.rogers_65(V.a, V.b[0], V.c[0], V.d[0], V.ctx),
    ),
    IdentityDef(
        "cn65a", "C_r nonterminating 6phi5 summation, equal parameters",
        "C_r 6phi5 sum with b_i = b, c_i = c, provided |a q^(2-r)/(b c d_i)| < 1",
        RANKS, FL, _cn65_lhs_from(_p65a), _cn65a_rhs,
        free=free("a", "b", "c", "d_i"),
        convergence=(pred("|a q^(2-r)/(b c d_i)| < 1",
                          _each(lambda V, i: abs(V.a * V.qp(2 - V.r) / (V.b * V.c * V.d[i])) < 1)),),
        terminating=False, sampling=_SIX_FIVE_RANGES,
        as_printed=False, note=_SIX_FIVE_NOTE, printed={"lhs": _cn65_lhs_from(_p65a, 2)},
        audit=lambda V: classical.rogers_65(V.a, V.b, V.c, V.d[0], V.ctx),
    ),
    IdentityDef(
        "cn65b", "C_r nonterminating 6phi5 summation in points x_i",
        "C_r 6phi5 sum with b_i = b, c_i = c x_i, d_i = d/x_i, provided |a q^(2-r)/(bcd)| < 1",
        RANKS, FL, _cn65_lhs_from(_p65b), _cn65b_rhs,
        free=free("a", "b", "c", "d", "x_i"),
        convergence=(pred("|a q^(2-r)/(bcd)| < 1",
                          lambda V: abs(V.a * V.qp(2 - V.r) / (V.b * V.c * V.d)) < 1),),
        terminating=False, sampling=_SIX_FIVE_RANGES,
        as_printed=False, note=_SIX_FIVE_NOTE, printed={"lhs": _cn65_lhs_from(_p65b, 2)},
        audit=lambda V: classical.rogers_65(V.a, V.b, V.c * V.x[0], V.d / V.x[0], V.ctx),
    ),
    IdentityDef(
        "an21", "A_{r-1} q-Gauss summation (determinant form)",
        "A_{r-1} q-Gauss sum with lower parameter c q^(r-1), where |c/(a_i b_i)| < 1",
        RANKS, FL, _an21_lhs, _an21_rhs,
        free=free("a_i", "b_i", "c"),
        convergence=(pred("|c/(a_i b_i)| < 1", _each(lambda V, i: abs(V.c / (V.a[i] * V.b[i])) < 1)),),
        terminating=False, sampling=_GAUSS_RANGES,
        audit=lambda V: classical.q_gauss(V.a[0], V.b[0], V.c, V.ctx),
    ),
    IdentityDef(
        "an21a", "A_{r-1} q-Gauss summation in points x_i",
        "A_{r-1} q-Gauss sum with a_i = a x_i, b_i = b/x_i and argument c q^(1-r)/(ab)",
        RANKS, FL, _an21a_lhs, _an21a_rhs,
        free=free("a", "b", "c", "x_i"),
        convergence=(pred("|c q^(1-r)/(ab)| < 1", lambda V: abs(V.c * V.qp(1 - V.r) / (V.a * V.b)) < 1),),
        terminating=False, sampling=_GAUSS_SHIFTED,
        note="the stated condition |c q^(1-r)| < 1 is replaced by |c q^(1-r)/(ab)| < 1, the modulus of "
             "the series argument",
        audit=lambda V: classical.q_gauss(V.a * V.x[0], V.b / V.x[0], V.c, V.ctx),
    ),
    IdentityDef(
        "an21b", "A_{r-1} q-Gauss summation with a_i = a",
        "A_{r-1} q-Gauss sum with argument c q^(1-r)/(a b_i), where |c q^(1-r)/(a b_i)| < 1",
        RANKS, FL, _an21b_lhs, _an21b_rhs,
        free=free("a", "b_i", "c"),
        convergence=(pred("|c q^(1-r)/(a b_i)| < 1",
                          _each(lambda V, i: abs(V.c * V.qp(1 - V.r) / (V.a * V.b[i])) < 1)),),
        terminating=False, sampling=_GAUSS_SHIFTED,
        as_printed=False,
        note="right side corrected: prod_{i<j}(1/b_j - 1/b_i) in place of (1/b_i - 1/b_j), a sign "
             "(-1)^C(r,2), and (c q^(1-i)/a)_inf in place of (c q^(i-1)/a)_inf; both forms agree at r = 1",
        printed={"rhs": _an21b_rhs_printed},
        audit=lambda V: classical.q_gauss(V.a, V.b[0], V.c, V.ctx),
    ),
    IdentityDef(
        "an10", "A_{r-1} q-binomial theorem (determinant form)",
        "A_{r-1} q-binomial sum with det(z_i^(r-j) (a_i)_(r-j)/(a_i z_i)_(r-j)), where |z_i| < 1",
        RANKS, FL, _an10_lhs, _an10_rhs,
        free=free("a_i", "z_i"),
        convergence=(pred("|z_i| < 1", _each(lambda V, i: abs(V.z[i]) < 1)),),
        terminating=False, sampling=_SERIES_RANGES,
        audit=lambda V: classical.q_binomial(V.a[0], V.z[0], V.ctx),
    ),
    IdentityDef(
        "an10v", "A_{r-1} q-binomial theorem (bilateral specialisation)",
        "A_{r-1} q-binomial sum with det((z_i)_(r-j)/(a_i z_i)_(r-j)), where |z_i| < 1",
        RANKS, FL, _an10_lhs, _an10v_rhs,
        free=free("a_i", "z_i"),
        convergence=(pred("|z_i| < 1", _each(lambda V, i: abs(V.z[i]) < 1)),),
        terminating=False, sampling=_SERIES_RANGES,
        audit=lambda V: classical.q_binomial(V.a[0], V.z[0], V.ctx),
    ),
    IdentityDef(
        "cn10a", "A_{r-1} q-binomial theorem with a_i = a",
        "A_{r-1} q-binomial sum in product form, where |z_i| < 1",
        RANKS, FL, _cn10a_lhs, _cn10a_rhs,
        free=free("a", "z_i"),
        convergence=(pred("|z_i| < 1", _each(lambda V, i: abs(V.z[i]) < 1)),),
        terminating=False, sampling=_SERIES_RANGES,
        audit=lambda V: classical.q_binomial(V.a, V.z[0], V.ctx),
    ),
    IdentityDef(
        "cn10b", "A_{r-1} q-binomial theorem with a_i = a/x_i, z_i = z x_i",
        "A_{r-1} q-binomial sum in product form, where |z x_i| < 1",
        RANKS, FL, _cn10b_lhs, _cn10b_rhs,
        free=free("a", "z", "x_i"),
        convergence=(pred("|z x_i| < 1", _each(lambda V, i: abs(V.z * V.x[i]) < 1)),),
        terminating=False, sampling=_SERIES_RANGES,
        audit=lambda V: classical.q_binomial(V.a / V.x[0], V.z * V.x[0], V.ctx),
    ),
    IdentityDef(
        "cn10c", "A_{r-1} q-binomial theorem with z_i = z",
        "A_{r-1} q-binomial sum in product form, where |z| < 1",
        RANKS, FL, _cn10c_lhs, _cn10c_rhs,
        free=free("a_i", "z"),
        convergence=(pred("|z| < 1", lambda V: abs(V.z) < 1),),
        terminating=False, sampling=_SERIES_RANGES,
        audit=lambda V: classical.q_binomial(V.a[0], V.z, V.ctx),
    ),
]
