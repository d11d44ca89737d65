import pytest
from gmpy2 import mpq

from qhyper import PSERIES, PSeries
from qhyper.registry import CATALOGUE, FAIL, PASS, check, make_context, p0_collapse, solve_constraints, verify
from qhyper.registry.elliptic import CATALOGUE as ELLIPTIC

IDS = [d.id for d in ELLIPTIC]


def test_ell_cnt87a_fixed_point():
    d = CATALOGUE["ell-cnt87a"]
    q = mpq(3, 13)
    free = {"a": mpq(2, 5), "b": mpq(-3, 7), "c": mpq(5, 3), "d": mpq(1, 4)}
    asg = solve_constraints(d, 2, free, {"n": (1, 2)}, mode=PSERIES, q=q)
    res = verify(d, asg, make_context(PSERIES, q, order=8))
    assert res.verdict == PASS
    assert isinstance(res.residual, PSeries)
    assert len(res.residual.coeffs) == 8 and all(c == 0 for c in res.residual.coeffs)
    assert any(c != 0 for c in res.lhs.coeffs[1:])


@pytest.mark.parametrize("ident", IDS)
@pytest.mark.parametrize("r", [1, 2])
def test_elliptic_entries_verify(ident, r):
    for seed in range(2):
        res = check(CATALOGUE[ident], r, seed, PSERIES)
        assert res.verdict == PASS, res.detail
        assert res.lhs.coeffs[0] != 0


@pytest.mark.parametrize("ident", IDS)
def test_p0_collapse(ident):
    for r in (1, 2):
        ok, detail = p0_collapse(CATALOGUE[ident], r, seed=3)
        assert ok, detail


def test_elliptic_is_not_basic():
    # the p-series carries genuine elliptic content beyond the constant term
    res = check(CATALOGUE["ell-cnt109"], 2, 0, PSERIES)
    assert any(c != 0 for c in res.rhs.coeffs[1:])


@pytest.mark.parametrize("ident, r", [("ell-cnt109i2", 1), ("ell-cnt87a", 3), ("ell-cnt87b", 2)])
def test_printed_elliptic_forms_fail(ident, r):
    printed = CATALOGUE[ident].printed_variant()
    assert FAIL in [check(printed, r, seed, PSERIES).verdict for seed in range(5)]


def test_truncation_order():
    res = check(CATALOGUE["ell-cnt87"], 2, 1, PSERIES, order=4)
    assert res.verdict == PASS and len(res.residual.coeffs) == 4
