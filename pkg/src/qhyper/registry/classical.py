"""Single-variable classical identities, coded directly as series and products.

These serve as independent oracles for the rank-one cases of the
multivariable entries.  Each function returns ``(lhs, rhs)`` for the given
context; terminating series are summed exactly, nonterminating ones with
the adaptive float engine.  Written with ``one_minus``/``qpoch`` so that
the terminating very-well-poised ones also evaluate elliptically.
"""

from ..errors import ModeError
from ..kernel import check_denominator, one_minus, qpoch, qpoch_inf
from ..scalars import FLOAT
from ..summation import TermOracle, sum_adaptive, sum_bilateral


def _ratio(num, den, k, ctx):
    top = ctx.one
    for a in num:
        top = top * qpoch(a, k, ctx)
    if k < 0:
        # 1/(b)_k = (b q^k)_{-k}: no division needed
        for b in den:
            top = top * qpoch(b * ctx.q ** k, -k, ctx)
        return top
    bot = ctx.one
    for b in den:
        v = qpoch(b, k, ctx)
        check_denominator(v, ctx)
        bot = bot * v
    return top / bot


def _inf(num, den, ctx):
    if ctx.mode != FLOAT:
        raise ModeError("infinite products need float mode")
    top = ctx.one
    for a in num:
        top *= qpoch_inf(a, ctx)
    bot = ctx.one
    for b in den:
        bot *= qpoch_inf(b, ctx)
    check_denominator(bot, ctx)
    return top / bot


def phi(num, den, z, ctx, terms=None):
    """``sum_k (num)_k / (q, den)_k z^k``; ``terms`` fixes a terminating length."""
    q = ctx.q
    den = tuple(den) + (q,)

    def term(k):
        return _ratio(num, den, k, ctx) * z ** k

    if terms is not None:
        total = 0
        for k in range(terms + 1):
            total = total + term(k)
        return total
    return sum_adaptive(TermOracle(lambda k: term(k[0]), 1), ctx)


def vwp_phi(a, params, z, ctx, terms=None):
    """Very-well-poised series with numerator parameters ``params`` after ``a``."""
    q = ctx.q

    def term(k):
        w = one_minus(a * q ** (2 * k), ctx)
        check_denominator(one_minus(a, ctx), ctx)
        w = w / one_minus(a, ctx)
        num = (a,) + tuple(params)
        den = (q,) + tuple(a * q / p for p in params)
        return w * _ratio(num, den, k, ctx) * z ** k

    if terms is not None:
        total = 0
        for k in range(terms + 1):
            total = total + term(k)
        return total
    return sum_adaptive(TermOracle(lambda k: term(k[0]), 1), ctx)


def jackson_87(a, b, c, d, n, ctx):
    """Terminating balanced very-well-poised 8phi7 sum; ``e`` fixed by balancing."""
    q = ctx.q
    e = a * a * q ** (1 + n) / (b * c * d)
    lhs = vwp_phi(a, (b, c, d, e, q ** (-n)), q, ctx, terms=n)
    rhs = _ratio((a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)),
                 (a * q / b, a * q / c, a * q / d, a * q / (b * c * d)), n, ctx)
    return lhs, rhs


def bailey_109(a, b, c, d, e, f, n, ctx):
    """Terminating very-well-poised 10phi9 transformation; ``g`` from balancing."""
    q = ctx.q
    g = a ** 3 * q ** (2 + n) / (b * c * d * e * f)
    lam = a * a * q / (b * c * d)
    lhs = vwp_phi(a, (b, c, d, e, f, g, q ** (-n)), q, ctx, terms=n)
    pre = _ratio((a * q, a * q / (e * f), lam * q / e, lam * q / f),
                 (a * q / e, a * q / f, lam * q / (e * f), lam * q), n, ctx)
    rhs = pre * vwp_phi(lam, (lam * b / a, lam * c / a, lam * d / a, e, f, g, q ** (-n)), q, ctx, terms=n)
    return lhs, rhs


def bailey_109_nonterminating(a, b, c, d, e, f, g, ctx):
    """Four-term nonterminating 10phi9 transformation; ``h`` from balancing."""
    q = ctx.q
    h = a ** 3 * q * q / (b * c * d * e * f * g)
    lam = a * a * q / (c * d * e)
    six = (c, d, e, f, g, h)
    lhs = vwp_phi(a, (b,) + six, q, ctx)
    w = (a * q, b / a) + six
    lhs += _inf(w + tuple(b * q / x for x in six),
                (b * b * q / a, a / b) + tuple(a * q / x for x in six) + tuple(b * x / a for x in six), ctx) \
        * vwp_phi(b * b / a, (b,) + tuple(b * x / a for x in six), q, ctx)
    cde = (c, d, e)
    fgh = (f, g, h)
    rhs = _inf((a * q, b / a) + tuple(lam * q / x for x in fgh) + tuple(b * x / lam for x in fgh),
               (lam * q, b / lam) + tuple(a * q / x for x in fgh) + tuple(b * x / a for x in fgh), ctx) \
        * vwp_phi(lam, (b,) + tuple(lam * x / a for x in cde) + fgh, q, ctx)
    rhs += _inf((a * q, b / a) + fgh + tuple(b * q / x for x in fgh)
                + tuple(lam * x / a for x in cde) + tuple(a * b * q / (lam * x) for x in cde),
                (b * b * q / lam, lam / b) + tuple(a * q / x for x in six) + tuple(b * x / a for x in six), ctx) \
        * vwp_phi(b * b / lam, (b,) + tuple(b * x / a for x in cde) + tuple(b * x / lam for x in fgh), q, ctx)
    return lhs, rhs


def ramanujan_11(a, b, z, ctx):
    """Bilateral 1psi1 sum against its product evaluation."""
    q = ctx.q
    lhs = sum_bilateral(TermOracle(lambda k: _ratio((a,), (b,), k[0], ctx) * z ** k[0], 1), ctx)
    rhs = _inf((q, a * z, q / (a * z), b / a), (b, z, b / (a * z), q / a), ctx)
    return lhs, rhs


def q_gauss(a, b, c, ctx):
    lhs = phi((a, b), (c,), c / (a * b), ctx)
    rhs = _inf((c / a, c / b), (c, c / (a * b)), ctx)
    return lhs, rhs


def q_binomial(a, z, ctx):
    lhs = phi((a,), (), z, ctx)
    rhs = _inf((a * z,), (z,), ctx)
    return lhs, rhs


def pfaff_saalschutz(a, b, c, n, ctx):
    """Terminating balanced 3phi2 sum."""
    q = ctx.q
    lhs = phi((a, b, q ** (-n)), (c, a * b * q ** (1 - n) / c), q, ctx, terms=n)
    rhs = _ratio((c / a, c / b), (c, c / (a * b)), n, ctx)
    return lhs, rhs


def watson(a, b, c, d, e, n, ctx):
    """Terminating 8phi7 to balanced 4phi3 transformation."""
    q = ctx.q
    z = a * a * q ** (2 + n) / (b * c * d * e)
    lhs = vwp_phi(a, (b, c, d, e, q ** (-n)), z, ctx, terms=n)
    pre = _ratio((a * q, a * q / (d * e)), (a * q / d, a * q / e), n, ctx)
    rhs = pre * phi((a * q / (b * c), d, e, q ** (-n)),
                    (a * q / b, a * q / c, d * e * q ** (-n) / a), q, ctx, terms=n)
    return lhs, rhs


def sears(a, b, c, d, e, n, ctx):
    """Balanced terminating 4phi3 transformation; the last lower parameter is fixed by balancing."""
    q = ctx.q
    f = a * b * c * q ** (1 - n) / (d * e)
    lhs = phi((q ** (-n), a, b, c), (d, e, f), q, ctx, terms=n)
    pre = _ratio((e / a, f / a), (e, f), n, ctx) * a ** n
    rhs = pre * phi((q ** (-n), a, d / b, d / c), (d, a * q ** (1 - n) / e, a * q ** (1 - n) / f), q, ctx, terms=n)
    return lhs, rhs


def rogers_65(a, b, c, d, ctx):
    """Nonterminating very-well-poised 6phi5 sum."""
    q = ctx.q
    lhs = vwp_phi(a, (b, c, d), a * q / (b * c * d), ctx)
    rhs = _inf((a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)),
               (a * q / b, a * q / c, a * q / d, a * q / (b * c * d)), ctx)
    return lhs, rhs


def terminating_65(a, b, c, n, ctx):
    """Terminating very-well-poised 6phi5 sum."""
    q = ctx.q
    lhs = vwp_phi(a, (b, c, q ** (-n)), a * q ** (1 + n) / (b * c), ctx, terms=n)
    rhs = _ratio((a * q, a * q / (b * c)), (a * q / b, a * q / c), n, ctx)
    return lhs, rhs


def jackson_integral(f, a, b, ctx):
    """``int_a^b f d_q t`` summed directly from the definition."""
    q = ctx.q

    def part(end):
        term = TermOracle(lambda k: f(end * q ** k[0]) * q ** k[0], 1)
        return end * (1 - q) * sum_adaptive(term, ctx)

    return part(b) - part(a)


def bailey_109_integral(a, b, c, d, e, f, g, ctx):
    """q-integral form of the nonterminating 10phi9 transformation; ``h`` from balancing."""
    q = ctx.q
    h = a ** 3 * q * q / (b * c * d * e * f * g)
    lam = a * a * q / (c * d * e)
    cde = (c, d, e)
    fgh = (f, g, h)

    def left(t):
        return (1 - t * t / a) * _inf((q * t / a, q * t / b) + tuple(q * t / x for x in cde + fgh),
                                      (t, b * t / a) + tuple(x * t / a for x in cde + fgh), ctx)

    def right(t):
        return (1 - t * t / lam) * _inf(
            (q * t / lam, q * t / b) + tuple(a * q * t / (x * lam) for x in cde) + tuple(q * t / x for x in fgh),
            (t, b * t / lam) + tuple(x * t / a for x in cde) + tuple(x * t / lam for x in fgh), ctx)

    pre = a / lam * _inf((b / a, a * q / b) + tuple(lam * x / a for x in cde) + tuple(b * x / lam for x in fgh),
                         (b / lam, lam * q / b) + cde + tuple(b * x / a for x in fgh), ctx)
    return jackson_integral(left, a, b, ctx), pre * jackson_integral(right, lam, b, ctx)
