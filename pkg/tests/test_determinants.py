import random

import pytest
from gmpy2 import mpc, mpq
from hypothesis import given, settings, strategies as st

from qhyper import InvalidArgument, PoleError, PSeries, exact_context, float_context, pseries_context
from qhyper.determinants import (
    DetSpec,
    det_generic,
    dettf_residual,
    dettf_sides,
    lemdet1_closed,
    lemdet1_entry,
    lemdet1_matrix,
    lemdet1a_closed,
    lemdet1a_entry,
    lemdet1a_matrix,
)

from strategies import bases

Q = mpq(1, 2)


def _rat(rng):
    n = rng.choice([k for k in range(-9, 10) if k])
    return mpq(n, rng.randint(1, 9))


def _distinct(rng, r):
    xs = []
    while len(xs) < r:
        x = _rat(rng)
        if x not in xs:
            xs.append(x)
    return xs


def _lemdet1_case(rng, r, ctx):
    """A random spec whose matrix and closed form are both pole-free."""
    while True:
        spec = DetSpec(_distinct(rng, r), _rat(rng), _rat(rng), _rat(rng))
        try:
            return spec, det_generic(lemdet1_matrix(spec, ctx)), lemdet1_closed(spec, ctx)
        except PoleError:
            continue


def test_det_generic_examples():
    assert det_generic([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert det_generic([[mpq(1, 3), 2, 5], [7, 1, 1], [mpq(1, 3), 2, 5]]) == 0
    assert det_generic([[1, 2], [3, 4]]) == -2


def test_det_generic_rejects_bad_shapes():
    with pytest.raises(InvalidArgument):
        det_generic([[1, 2]])
    with pytest.raises(InvalidArgument):
        det_generic([])
    with pytest.raises(InvalidArgument):
        det_generic([[0] * 9 for _ in range(9)])


def test_det_generic_float_matches_exact():
    rng = random.Random(3)
    for r in range(1, 7):
        m = [[_rat(rng) for _ in range(r)] for _ in range(r)]
        exact = det_generic(m)
        approx = det_generic([[mpc(v) for v in row] for row in m])
        assert abs(approx - exact) <= 1e-12 * max(1, abs(exact))


@settings(max_examples=40)
@given(st.integers(1, 5), st.randoms(use_true_random=False))
def test_det_generic_multiplicative(r, rng):
    a = [[_rat(rng) for _ in range(r)] for _ in range(r)]
    b = [[_rat(rng) for _ in range(r)] for _ in range(r)]
    ab = [[sum(a[i][k] * b[k][j] for k in range(r)) for j in range(r)] for i in range(r)]
    assert det_generic(ab) == det_generic(a) * det_generic(b)


def test_lemdet1_entry_examples():
    ctx = exact_context(Q)
    A, B, C, X1 = mpq(1, 2), mpq(1, 3), mpq(1, 5), mpq(1, 7)
    spec = DetSpec([X1, mpq(3)], A, B, C)
    assert lemdet1_entry(spec, 1, 2, ctx) == 1
    expected = (1 - A * X1) * (1 - A * C / X1) / ((1 - B * X1) * (1 - B * C / X1))
    assert lemdet1_entry(spec, 1, 1, ctx) == expected
    single = DetSpec([mpq(5, 3)], A, B, C)
    assert lemdet1_entry(single, 1, 1, ctx) == 1
    assert lemdet1_closed(single, ctx) == 1
    with pytest.raises(InvalidArgument):
        lemdet1_entry(spec, 3, 1, ctx)


def test_lemdet1_entry_pole():
    ctx = exact_context(Q)
    # B X_1 = 2 makes (B X_1)_2 contain 1 - 2q = 0
    spec = DetSpec([mpq(6), mpq(1, 5), mpq(2, 7)], mpq(1, 2), mpq(1, 3), mpq(1, 5))
    with pytest.raises(PoleError):
        lemdet1_entry(spec, 1, 1, ctx)


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_lemdet1_closed_form_exact(r):
    rng = random.Random(100 + r)
    ctx = exact_context(mpq(2, 7))
    for _ in range(25):
        _, det, closed = _lemdet1_case(rng, r, ctx)
        assert det == closed


@pytest.mark.parametrize("r", [1, 2, 3])
def test_lemdet1_closed_form_elliptic(r):
    rng = random.Random(200 + r)
    ctx = pseries_context(mpq(-3, 7), order=8)
    for _ in range(5):
        _, det, closed = _lemdet1_case(rng, r, ctx)
        assert isinstance(det, PSeries) or r == 1
        assert det == closed


def test_lemdet1_elliptic_differs_from_basic():
    rng = random.Random(7)
    ctx = pseries_context(Q, order=6)
    spec, det, _ = _lemdet1_case(rng, 2, ctx)
    basic = det_generic(lemdet1_matrix(spec, exact_context(Q)))
    assert det.coeffs[0] == basic
    assert any(c != 0 for c in det.coeffs[1:])


@settings(max_examples=30)
@given(bases(), st.integers(2, 4), st.randoms(use_true_random=False))
def test_lemdet1_coincident_points_vanish(q, r, rng):
    ctx = exact_context(q)
    xs = _distinct(rng, r - 1)
    xs.insert(rng.randrange(r), xs[0])
    spec = DetSpec(xs, _rat(rng), _rat(rng), _rat(rng))
    try:
        det = det_generic(lemdet1_matrix(spec, ctx))
        closed = lemdet1_closed(spec, ctx)
    except PoleError:
        return
    assert det == 0 and closed == 0


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_lemdet1a_closed_form(r):
    rng = random.Random(300 + r)
    ctx = exact_context(mpq(3, 5))
    done = 0
    while done < 25:
        X, A, B = _distinct(rng, r), _rat(rng), _rat(rng)
        try:
            det = det_generic(lemdet1a_matrix(X, A, B, ctx))
            closed = lemdet1a_closed(X, A, B, ctx)
        except PoleError:
            continue
        assert det == closed
        done += 1


def test_lemdet1a_examples():
    ctx = exact_context(Q)
    assert lemdet1a_closed([mpq(4, 3)], mpq(1, 2), mpq(1, 3), ctx) == 1
    X, A, B = [mpq(1, 3), mpq(5)], mpq(2), mpq(-1, 3)
    assert lemdet1a_entry(X, A, B, 2, 1, ctx) == 5 * (1 - A / 5) / (1 - B * 5)
    assert lemdet1a_entry(X, A, B, 2, 2, ctx) == 1


def test_dettf_examples():
    ctx = exact_context(Q)
    assert dettf_residual([mpq(3, 4)], [mpq(2, 9)], ctx) == 0
    assert dettf_sides([mpq(3, 4)], [mpq(2, 9)], ctx) == (1, 1)
    with pytest.raises(InvalidArgument):
        dettf_sides([mpq(1, 2)], [], ctx)


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_dettf_vanishes(r):
    rng = random.Random(400 + r)
    ctx = exact_context(mpq(-2, 9))
    done = nonzero = 0
    while done < 25:
        a = [_rat(rng) for _ in range(r)]
        z = [_rat(rng) for _ in range(r)]
        try:
            lhs, rhs = dettf_sides(a, z, ctx)
        except PoleError:
            continue
        assert lhs == rhs
        nonzero += lhs != 0
        done += 1
    assert nonzero > 20


def test_dettf_float():
    ctx = float_context(Q)
    with ctx.scope():
        a = [mpc(0.3, 0.1), mpc(-0.7, 0.2), mpc(1.3, -0.4)]
        z = [mpc(0.2, 0.5), mpc(-1.1, 0.0), mpc(0.6, -0.9)]
        lhs, rhs = dettf_sides(a, z, ctx)
        assert abs(lhs - rhs) < 1e-60 * abs(lhs)
