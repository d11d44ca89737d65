import random

import pytest
from gmpy2 import exp, mpc, mpfr, mpq
from hypothesis import given, settings, strategies as st

from qhyper import ConvergenceError, LatticePoint, ModeError, PoleError, exact_context, float_context, qpoch
from qhyper.kernel import lattice_factor_a, qpoch_inf
from qhyper.registry import CATALOGUE, check, classical
from qhyper.summation import (
    Region,
    SubsetMask,
    TermOracle,
    multi_q_integral,
    q_integral,
    q_integral_0a,
    separable_term,
    sum_adaptive,
    sum_bilateral,
    sum_finite,
    sum_over_subsets,
)
from qhyper.scalars import FLOAT

HALF = mpq(1, 2)


def fctx(q=0.5, **kw):
    return float_context(mpc(q), **kw)


def close(x, y, tol=mpfr(10) ** -48):
    return abs(x - y) <= tol * max(abs(y), 1)


def test_finite_counts_points():
    assert sum_finite(TermOracle(lambda k: 1, 2), Region.hypercube((2, 3)), exact_context(HALF)) == 12


def test_finite_vandermonde_cancels():
    ctx = exact_context(HALF)
    term = TermOracle(lambda k: lattice_factor_a(LatticePoint(k), ctx), 2)
    assert sum_finite(term, Region.hypercube((1, 1)), ctx) == 0


def test_finite_jackson_summand():
    q = HALF
    ctx = exact_context(q)
    # d = q^3 would make a q/d = 1, a pole on both sides; any generic d works
    a, b, c, d, n = q ** 2, q, q, mpq(1, 3), 1
    e = a * a * q ** (1 + n) / (b * c * d)
    up = (a, b, c, d, e, q ** -n)
    low = (q,) + tuple(a * q / x for x in (b, c, d, e)) + (a * q ** (1 + n),)

    def term(k):
        k = k[0]
        out = (1 - a * q ** (2 * k)) / (1 - a) * q ** k
        for u in up:
            out *= qpoch(u, k, ctx)
        for v in low:
            out /= qpoch(v, k, ctx)
        return out

    lhs = sum_finite(TermOracle(term, 1), Region.hypercube((n,)), ctx)
    rhs = 1
    for u in (a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)):
        rhs *= qpoch(u, n, ctx)
    for v in (a * q / b, a * q / c, a * q / d, a * q / (b * c * d)):
        rhs /= qpoch(v, n, ctx)
    assert lhs - rhs == 0


def test_finite_pole_carries_index():
    ctx = exact_context(HALF)

    def term(k):
        return 1 / qpoch(mpq(1, 4), -k[1], ctx) if k[1] else 1

    with pytest.raises(PoleError) as err:
        sum_finite(TermOracle(term, 2), Region.hypercube((1, 3)), ctx)
    assert isinstance(err.value.index, (tuple, int))


def test_finite_order_independent():
    ctx = exact_context(mpq(1, 3))
    rng = random.Random(7)
    vals = {(i, j): mpq(rng.randint(-9, 9), rng.randint(1, 9)) for i in range(4) for j in range(3)}
    base = sum_finite(TermOracle(lambda k: vals[k], 2), Region.hypercube((3, 2)), ctx)
    keys = list(vals)
    for _ in range(5):
        rng.shuffle(keys)
        total = 0
        for k in keys:
            total += vals[k]
        assert total == base


def test_adaptive_geometric():
    ctx = fctx()
    with ctx.scope():
        one = sum_adaptive(TermOracle(lambda k: mpc(0.5) ** k[0], 1), ctx)
        two = sum_adaptive(TermOracle(lambda k: mpc(0.5) ** k[0] * (mpc(1) / 3) ** k[1], 2), ctx)
    assert close(one, mpc(2)) and close(two, mpc(3))


def test_adaptive_is_float_only():
    with pytest.raises(ModeError):
        sum_adaptive(TermOracle(lambda k: 1, 1), exact_context(HALF))


def test_adaptive_divergent_raises():
    with pytest.raises(ConvergenceError):
        sum_adaptive(TermOracle(lambda k: mpc(1.01) ** k[0], 1), fctx(max_terms=64))


def test_adaptive_window_stability():
    ctx = fctx()
    loose = ctx.replace(epsilon=ctx.epsilon * 2)
    term = lambda k: mpc(0.6) ** k[0] / (k[0] + 1)  # noqa: E731
    with ctx.scope():
        a = sum_adaptive(TermOracle(term, 1), ctx)
        b = sum_adaptive(TermOracle(term, 1), loose)
        assert abs(a - b) < 10 * ctx.epsilon * max(abs(a), 1)


def test_six_five_rank_one():
    # the rank-one case of the nonterminating C_r 6phi5 sum is Rogers' sum
    res = check(CATALOGUE["cn65"], 1, 0, FLOAT)
    assert res.passed and res.relative_error < mpfr(10) ** -50


def test_bilateral_single_point():
    ctx = fctx()
    with ctx.scope():
        v = sum_bilateral(TermOracle(lambda k: mpc(3.5) if k == (0, 0) else mpc(0), 2), ctx)
    assert v == mpc(3.5)


def test_bilateral_ramanujan():
    # a=2, b=0.2, z=0.4+0.1i, q=0.3 lies inside |b/a| < |z| < 1; value frozen from mpmath
    ctx = fctx(0.3)
    with ctx.scope():
        a, b, z = mpc(2), mpc(0.2), mpc(0.4, 0.1)
        lhs, rhs = classical.ramanujan_11(a, b, z, ctx)
        frozen = mpc("0.2290771136717082738165703169282064423404797956230136531740081339888673745811855"
                     "-0.15863120783248646145053433027309808978264492529713971664702148525925624807186596j")
        assert close(lhs, rhs) and close(rhs, frozen)


def test_bilateral_outside_annulus_diverges():
    # |b/a| = 0.45 > |z|: the negative tail diverges
    ctx = fctx(0.3, max_terms=64)
    with ctx.scope():
        a, b, z = mpc(2), 3 * mpc(0.3), mpc(0.4, 0.1)
        with pytest.raises(ConvergenceError):
            classical.ramanujan_11(a, b, z, ctx)


def test_bilateral_rank_two_closed_form():
    assert check(CATALOGUE["an11b"], 2, 0, FLOAT).passed


def test_subset_masks():
    masks = SubsetMask.all(3)
    assert len(masks) == 8
    assert all(m.size == len(m.members) for m in masks)
    assert 2 in SubsetMask(0b100, 3) and 0 not in SubsetMask(0b100, 3)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_subsets_count(r):
    term = TermOracle(lambda s, k: 1, r, uses_subset=True)
    assert sum_over_subsets(term, Region.hypercube((0,) * r), exact_context(HALF)) == 2 ** r


def test_subsets_rank_one_two_sums():
    seen = []

    def fn(s, k):
        seen.append(s.bits)
        return 1

    sum_over_subsets(TermOracle(fn, 1, uses_subset=True), Region.hypercube((0,)), exact_context(HALF))
    assert sorted(seen) == [0, 1]


def test_subset_side_matches_classical_at_rank_one():
    res = check(CATALOGUE["cnnt109"], 1, 0, FLOAT)
    assert res.passed


def test_q_integral_basic():
    ctx = fctx()
    with ctx.scope():
        a, b = mpc(0.7, 0.1), mpc(-0.3, 0.4)
        assert close(q_integral_0a(lambda t: mpc(1), a, ctx), a)
        assert close(q_integral_0a(lambda t: t, a, ctx), a * a / (1 + ctx.q))
        assert close(q_integral_0a(lambda t: t * t, mpc(1), ctx), mpc(4) / 7)
        assert close(q_integral(lambda t: mpc(1), a, b, ctx), b - a)
        assert q_integral(lambda t: t, a, a, ctx) == 0


def test_q_integral_bailey_rank_one():
    res = check(CATALOGUE["int109"], 1, 0, FLOAT)
    assert res.passed


def test_multi_q_integral():
    ctx = fctx(0.4)
    with ctx.scope():
        lo, hi = [mpc(0.2), mpc(-0.5, 0.1)], [mpc(0.9), mpc(0.3, 0.3)]
        one = multi_q_integral(lambda t: mpc(1), lo, hi, ctx)
        assert close(one, (hi[0] - lo[0]) * (hi[1] - lo[1]))
        g = [lambda t: t * t + 1, lambda t: 1 / (2 - t)]
        sep = multi_q_integral(lambda t: g[0](t[0]) * g[1](t[1]), lo, hi, ctx)
        prod = q_integral(g[0], lo[0], hi[0], ctx) * q_integral(g[1], lo[1], hi[1], ctx)
        assert close(sep, prod)
        single = multi_q_integral(lambda t: g[0](t[0]), lo[:1], hi[:1], ctx)
        assert close(single, q_integral(g[0], lo[0], hi[0], ctx))


@settings(max_examples=10)
@given(st.floats(0.01, 0.1), st.floats(0.01, 0.1), st.floats(-3.0, 3.0))
def test_separable_memoisation_matches_direct(q, z, phase):
    ctx = fctx(q)
    with ctx.scope():
        zc = mpc(z) * exp(mpc(0, phase))
        axes = [lambda k: zc ** k, lambda k: qpoch_inf(zc * ctx.qpow(k), ctx) * ctx.qpow(k)]
        a = sum_adaptive(separable_term(axes), ctx)
        b = sum_adaptive(TermOracle(lambda k: axes[0](k[0]) * axes[1](k[1]), 2), ctx)
    assert a == b
