import pytest
from gmpy2 import mpc, mpfr, mpq
from hypothesis import given, strategies as st

from qhyper import (
    InvalidArgument,
    LatticePoint,
    ModeError,
    PoleError,
    PSeries,
    epoch,
    exact_context,
    float_context,
    lattice_factor_a,
    lattice_factor_c,
    pseries_context,
    qpoch,
    qpoch_inf,
    theta,
)
from qhyper.kernel import QContext, binom2, diff, one_minus

from strategies import bases, rationals

HALF = mpq(1, 2)
# (q;q)_inf and (q^2;q)_inf at q = 1/2, frozen from mpmath.qp at 80 digits
QQ_INF_HALF = "0.28878809508660242127889972192923078008891190484068578411474106618490224090684701"
Q2Q_INF_HALF = "0.57757619017320484255779944385846156017782380968137156822948213236980448181369403"


def test_qpoch_examples():
    ctx = exact_context(HALF)
    assert qpoch(mpq(7, 3), 0, ctx) == 1
    assert qpoch(HALF, 2, ctx) == mpq(3, 8)
    assert qpoch(mpq(2), -1, ctx) == mpq(-1, 3)


def test_qpoch_negative_matches_infinite_ratio():
    ctx = float_context(HALF, epsilon=mpfr(10) ** -80)
    with ctx.scope():
        # at a = 2 both products contain the factor 1 - 2q, so use a generic point
        for a in (mpc(0.3, 0.7), mpc(-1.9, 0.2)):
            for k in (-1, -3):
                ratio = qpoch_inf(a, ctx) / qpoch_inf(a * ctx.qpow(k), ctx)
                assert abs(ratio - qpoch(a, k, ctx)) < mpfr(10) ** -70


def test_qpoch_pole_carries_index():
    ctx = exact_context(HALF)
    with pytest.raises(PoleError) as err:
        qpoch(mpq(1, 4), -3, ctx)
    assert err.value.index == -2


def test_qpoch_inf_values():
    ctx = float_context(HALF, epsilon=mpfr(10) ** -80)
    with ctx.scope():
        assert qpoch_inf(mpc(0), ctx) == 1
        v = qpoch_inf(mpc(0.5), ctx)
        assert abs(v - mpfr(QQ_INF_HALF)) < mpfr(10) ** -70
        w = qpoch_inf(mpc(0.25), ctx)
        assert abs(w - mpfr(Q2Q_INF_HALF)) < mpfr(10) ** -70
        assert abs(v - (1 - mpc(0.5)) * w) < mpfr(10) ** -70


def test_qpoch_inf_default_epsilon():
    ctx = float_context(HALF)
    with ctx.scope():
        assert abs(qpoch_inf(mpc(0.5), ctx) - mpfr(QQ_INF_HALF)) < ctx.epsilon


def test_qpoch_inf_is_float_only():
    with pytest.raises(ModeError):
        qpoch_inf(HALF, exact_context(HALF))


def test_context_invariants():
    with pytest.raises(InvalidArgument):
        exact_context(mpq(3, 2))
    with pytest.raises(InvalidArgument):
        float_context(mpc(0.5), p=mpc(1.2))
    with pytest.raises(InvalidArgument):
        QContext("exact", HALF, p=HALF)
    with pytest.raises(InvalidArgument):
        float_context(mpc(0.5), precision=32)


def test_theta_basic_and_zero():
    assert theta(mpq(3), exact_context(HALF)) == -2
    with pytest.raises(InvalidArgument):
        theta(mpq(0), pseries_context(HALF))


def test_lattice_factor_examples():
    ctx = exact_context(HALF)
    a = mpq(1, 3)
    assert lattice_factor_c(LatticePoint((3,)), a, ctx) == 1 - a * HALF ** 6
    assert lattice_factor_c(LatticePoint((2, 2), (mpq(5), mpq(5))), a, ctx) == 0
    assert lattice_factor_c(LatticePoint((0, 1)), a, ctx) == mpq(55, 216)
    assert lattice_factor_a(LatticePoint((4,)), ctx) == 1
    assert lattice_factor_a(LatticePoint((2, 2)), ctx) == 0
    assert lattice_factor_a(LatticePoint((0, 1, 2)), ctx) == mpq(3, 32)


def test_lattice_point_validation():
    with pytest.raises(InvalidArgument):
        LatticePoint(())
    with pytest.raises(InvalidArgument):
        LatticePoint((1, 2), (HALF,))


def test_epoch_quasi_shift_example():
    # (pa;q,p)_3 = (-1)^3 q^{-3} a^{-3} (a;q,p)_3
    ctx = pseries_context(mpq(1, 3), order=8)
    a = mpq(5, 7)
    left = epoch(ctx.p * a, 3, ctx)
    right = -(ctx.q ** -3) * a ** -3 * epoch(a, 3, ctx)
    assert left == right


@given(rationals(), st.integers(-4, 4), bases())
def test_qpoch_recurrence(a, k, q):
    ctx = exact_context(q)
    try:
        lhs = qpoch(a, k + 1, ctx)
        rhs = qpoch(a, k, ctx) * (1 - a * q ** k)
    except PoleError:
        return
    assert lhs == rhs


@given(rationals(), st.integers(-4, 4), st.integers(-4, 4), bases())
def test_qpoch_splice(a, m, n, q):
    ctx = exact_context(q)
    try:
        lhs = qpoch(a, m + n, ctx)
        rhs = qpoch(a, m, ctx) * qpoch(a * q ** m, n, ctx)
    except PoleError:
        return
    assert lhs == rhs


@given(rationals(), st.integers(1, 12))
def test_theta_inversion(x, order):
    ctx = pseries_context(HALF, order=order)
    assert theta(1 / x, ctx) == -theta(x, ctx) / x


@given(rationals(), bases())
def test_theta_quasi_periodicity(x, q):
    ctx = pseries_context(q, order=8)
    assert theta(ctx.p * x, ctx) == -theta(x, ctx) / x


@given(rationals(), st.integers(0, 5), bases())
def test_p_zero_collapse(a, k, q):
    basic = exact_context(q)
    assert epoch(a, k, basic) == qpoch(a, k, basic)
    assert theta(a, basic) == one_minus(a, basic) == 1 - a
    # constant coefficient of the elliptic value is the basic value
    ell = pseries_context(q, order=6)
    assert _head(epoch(a, k, ell)) == qpoch(a, k, basic)
    assert _head(theta(a, ell)) == 1 - a


def _head(x):
    return x[0] if isinstance(x, PSeries) else x


@given(st.lists(rationals(), min_size=3, max_size=3), st.lists(st.integers(0, 3), min_size=3, max_size=3),
       rationals(), st.sampled_from([(0, 1), (0, 2), (1, 2)]), st.booleans())
def test_lattice_factor_c_antisymmetric(x, k, a, pair, elliptic):
    ctx = pseries_context(HALF, order=4) if elliptic else exact_context(HALF)
    i, j = pair
    x2, k2 = list(x), list(k)
    x2[i], x2[j] = x2[j], x2[i]
    k2[i], k2[j] = k2[j], k2[i]
    f = lattice_factor_c(LatticePoint(tuple(k), tuple(x)), a, ctx)
    g = lattice_factor_c(LatticePoint(tuple(k2), tuple(x2)), a, ctx)
    assert f == -g


@given(rationals(), rationals())
def test_elliptic_difference_rule(u, v):
    ctx = pseries_context(HALF, order=6)
    # u theta(v/u) = -v theta(u/v)
    assert diff(u, v, ctx) == -diff(v, u, ctx)
    assert diff(u, v, exact_context(HALF)) == u - v


def test_float_elliptic_theta_inversion():
    ctx = float_context(mpc(0.3), p=mpc(0.1, 0.05))
    with ctx.scope():
        x = mpc(0.7, 0.2)
        assert abs(theta(1 / x, ctx) + theta(x, ctx) / x) < mpfr(10) ** -60
        assert abs(theta(ctx.p * x, ctx) + theta(x, ctx) / x) < mpfr(10) ** -60


def test_binomials():
    assert [binom2(r) for r in range(5)] == [0, 0, 1, 3, 6]
    assert isinstance(PSeries.variable(3), PSeries)
