import pytest
from gmpy2 import mpc, mpfr, mpq
from hypothesis import given, strategies as st

from qhyper import EXACT, FLOAT, PSERIES, InvalidArgument, PSeries, pseries_mul, scalar_from_rational, scalar_is_zero
from qhyper.kernel import exact_context, float_context, pseries_context
from qhyper.scalars import backend_of, scalar_to_json

from strategies import coeff_lists, rationals

Q = mpq(1, 2)


def test_from_rational_exact():
    assert scalar_from_rational(1, 2, exact_context(Q)) == mpq(1, 2)
    v = scalar_from_rational(3, -6, exact_context(Q))
    assert v == mpq(-1, 2) and v.denominator == 2


def test_from_rational_pseries():
    v = scalar_from_rational(1, 3, pseries_context(Q, order=4))
    assert v.coeffs == (mpq(1, 3), 0, 0, 0)


def test_from_rational_float_and_zero_den():
    v = scalar_from_rational(1, 4, float_context(Q))
    assert backend_of(v) == FLOAT and v == mpc(0.25)
    with pytest.raises(InvalidArgument):
        scalar_from_rational(1, 0, exact_context(Q))


def test_is_zero():
    assert scalar_is_zero(mpq(0), 0)
    assert scalar_is_zero(PSeries([0, 0, 0, 0]), 0)
    assert not scalar_is_zero(PSeries([0, 0, 0, 1]), 0)
    assert scalar_is_zero(mpc(1e-40), 1e-30)
    assert not scalar_is_zero(mpc(1e-20), 1e-30)
    with pytest.raises(InvalidArgument):
        scalar_is_zero(mpq(0), 1e-3)


def test_pseries_mul_examples():
    assert pseries_mul(PSeries([1, 1]), PSeries([1, 1])).coeffs == (1, 2)
    assert pseries_mul(PSeries([1, 0, 0]), PSeries([0, 1, 0])).coeffs == (0, 1, 0)
    got = pseries_mul(PSeries([2, 3, 5]), PSeries([mpq(1, 2), 0, 0]))
    assert got.coeffs == (1, mpq(3, 2), mpq(5, 2))
    with pytest.raises(InvalidArgument):
        pseries_mul(PSeries([1, 2]), PSeries([1, 2, 3]))


def test_backends_do_not_mix():
    with pytest.raises(InvalidArgument):
        PSeries([1, 2]) * mpc(1.5)


def test_zero_head_not_invertible():
    with pytest.raises(ZeroDivisionError):
        PSeries([0, 1, 2]).inverse()


def test_json_rendering():
    assert scalar_to_json(mpq(0)) == "0"
    assert scalar_to_json(mpq(-3, 4)) == "-3/4"
    assert scalar_to_json(PSeries([1, mpq(1, 2)])) == ["1/1", "1/2"]
    re, im = scalar_to_json(mpc(1.5, -2))
    assert (mpfr(re), mpfr(im)) == (1.5, -2)


@given(coeff_lists(6, nonzero_head=True))
def test_inverse_roundtrip(c):
    f = PSeries(c)
    assert f * (1 / f) == PSeries.constant(1, 6)


@given(coeff_lists(5), coeff_lists(5), coeff_lists(5))
def test_ring_axioms(a, b, c):
    f, g, h = PSeries(a), PSeries(b), PSeries(c)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f


@given(coeff_lists(6), coeff_lists(6), st.integers(0, 5))
def test_truncation_is_causal(a, b, j):
    # coefficient j of f*g depends only on coefficients <= j
    full = pseries_mul(PSeries(a), PSeries(b))
    cut_a = a[: j + 1] + [0] * (5 - j)
    cut_b = b[: j + 1] + [0] * (5 - j)
    assert pseries_mul(PSeries(cut_a), PSeries(cut_b))[j] == full[j]


@given(rationals(), rationals())
def test_embedding_commutes(x, y):
    ctx = pseries_context(Q, order=4)
    ex, ey = scalar_from_rational(x.numerator, x.denominator, ctx), scalar_from_rational(
        y.numerator, y.denominator, ctx
    )
    assert ex + ey == PSeries.constant(x + y, 4)
    assert ex - ey == PSeries.constant(x - y, 4)
    assert ex * ey == PSeries.constant(x * y, 4)
    assert ex / ey == PSeries.constant(x / y, 4)


@given(rationals(), rationals(), rationals())
def test_float_field_axioms_to_rounding(x, y, z):
    ctx = float_context(mpc(0.5))
    with ctx.scope():
        a, b, c = mpc(x), mpc(y), mpc(z)
        scale = max(abs(a), abs(b), abs(c), 1) ** 2
        assert abs((a * b) * c - a * (b * c)) <= 4 * 2 ** -256 * scale * max(abs(a * b * c), 1)
        assert abs(a * (b + c) - (a * b + a * c)) <= 8 * 2 ** -256 * scale


def test_mode_names():
    assert (EXACT, PSERIES, FLOAT) == ("exact", "pseries", "float")
