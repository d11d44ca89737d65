import pytest
from gmpy2 import mpq

from qhyper import EXACT, FLOAT, PSERIES, InvalidArgument, ModeError
from qhyper.registry import (
    CATALOGUE,
    FAIL,
    PASS,
    Env,
    audit_r1,
    check,
    eval_side,
    get,
    list_identities,
    make_context,
    negative_control,
    sample_parameters,
    select,
    solve_constraints,
    verify,
)
from qhyper.scalars import scalar_is_zero

BASIC_IDS = {
    "109nt", "109", "87", "int109", "11", "lemdet1", "cnint109", "cnint109c", "cnnt109", "cnnt109c",
    "cnt109", "cnt109n", "cnt109i2", "an11", "an11b", "an11e", "lemdet1a", "mwatson", "msears",
    "cnt87", "cnt87a", "cnt87b", "cnt87c", "cn65", "cn65a", "cn65b", "cnt65", "cnt65a", "cnt65b",
    "cnt65c", "cnt65d", "an32", "an32a", "an32b", "an32c", "an32d", "an21", "an21a", "an21b",
    "an10", "an10v", "cn10a", "cn10b", "cn10c", "dettf",
}
ELLIPTIC_IDS = {"ell-" + b for b in ("cnt109", "cnt109n", "cnt109i2", "cnt87", "cnt87a", "cnt87b", "cnt87c")}

Q = mpq(2, 7)


def test_catalogue_ids():
    basic = {d.id for d in CATALOGUE.values() if d.family == "basic"}
    elliptic = {d.id for d in CATALOGUE.values() if d.family == "elliptic"}
    assert basic == BASIC_IDS
    assert elliptic == ELLIPTIC_IDS
    for d in CATALOGUE.values():
        assert d.citation and d.name
        assert d.note or d.as_printed


def test_catalogue_citations():
    assert "b c_i d_i e_i = a^2 q^(2-r+n_i)" in CATALOGUE["cnt87"].citation
    assert "|b_i q^(1-r)/a_i| < |z_i| < 1" in CATALOGUE["an11"].citation
    summaries = list_identities()
    assert len(summaries) == len(CATALOGUE)
    assert {s["id"] for s in summaries} == BASIC_IDS | ELLIPTIC_IDS


def test_modes_follow_termination():
    for d in CATALOGUE.values():
        if d.family == "elliptic":
            assert d.modes == (PSERIES,)
            assert CATALOGUE[d.elliptic_of].terminating
        elif d.terminating:
            assert EXACT in d.modes
        else:
            assert d.modes == (FLOAT,)


def test_lookup():
    assert get("cnt87") is CATALOGUE["cnt87"]
    with pytest.raises(InvalidArgument):
        get("cnt88")
    assert [d.id for d in select("ell-cnt87*")] == ["ell-cnt87", "ell-cnt87a", "ell-cnt87b", "ell-cnt87c"]


def test_solve_jackson_rank_one():
    d = CATALOGUE["87"]
    a, b, c, dd = mpq(1, 3), mpq(2, 5), mpq(-3, 4), mpq(5, 2)
    asg = solve_constraints(d, 1, {"a": a, "b": b, "c": c, "d": dd}, {"n": 2}, q=Q)
    assert asg.values["e"] == a**2 * Q**3 / (b * c * dd)


def test_solve_cnt109_rank_two():
    d = CATALOGUE["cnt109"]
    a, b, c, dd = mpq(1, 3), mpq(2, 5), mpq(-3, 4), mpq(5, 2)
    e, f = (mpq(1, 2), mpq(3, 7)), (mpq(-2, 3), mpq(4, 5))
    n = (1, 3)
    asg = solve_constraints(d, 2, {"a": a, "b": b, "c": c, "d": dd, "e": e, "f": f}, {"n": n}, q=Q)
    assert asg.values["lam"] == a**2 / (b * c * dd)
    for i in range(2):
        assert asg.values["g"][i] == a**3 * Q ** (1 + n[i]) / (b * c * dd * e[i] * f[i])


def test_solve_rejects_bad_input():
    d = CATALOGUE["87"]
    free = {"a": mpq(1, 3), "b": mpq(0), "c": mpq(2), "d": mpq(3)}
    with pytest.raises(InvalidArgument):
        solve_constraints(d, 1, free, {"n": 1}, q=Q)
    with pytest.raises(InvalidArgument):
        solve_constraints(d, 1, {"a": mpq(1, 3)}, {"n": 1}, q=Q)
    with pytest.raises(InvalidArgument):
        solve_constraints(d, 1, dict(free, b=mpq(1, 2)), {"n": -1}, q=Q)
    with pytest.raises(InvalidArgument):
        solve_constraints(d, 2, dict(free, b=mpq(1, 2)), {"n": 1}, q=Q)


@pytest.mark.parametrize("ident", ["cnt109", "cnt87c", "an32b", "ell-cnt87a"])
def test_sampler_deterministic_and_consistent(ident):
    d = CATALOGUE[ident]
    mode = d.modes[0]
    a = sample_parameters(d, 2, 5, mode)
    b = sample_parameters(d, 2, 5, mode)
    assert a.canonical() == b.canonical() and a.digest() == b.digest()
    assert sample_parameters(d, 2, 6, mode).digest() != a.digest()
    free = {p.name: a.values[p.name] for p in d.free}
    again = solve_constraints(d, 2, free, a.discrete, mode=mode, q=a.q)
    assert again.values == a.values
    assert not a.trivial


def test_float_sampler_respects_predicates():
    d = CATALOGUE["an11"]
    for seed in range(4):
        asg = sample_parameters(d, 2, seed, FLOAT)
        ctx = make_context(FLOAT, asg.q)
        with ctx.scope():
            env = Env(asg, ctx)
            assert all(p.check(env) for p in d.convergence)


def test_sampler_mode_and_rank_errors():
    with pytest.raises(ModeError):
        sample_parameters(CATALOGUE["cnnt109"], 1, 0, EXACT)
    with pytest.raises(InvalidArgument):
        sample_parameters(CATALOGUE["cnnt109"], 3, 0, FLOAT)
    with pytest.raises(InvalidArgument):
        sample_parameters(CATALOGUE["cnt87"], 1, 0, EXACT, max_n=7)


def test_eval_side_errors():
    d = CATALOGUE["cnt87"]
    asg = sample_parameters(d, 1, 0, EXACT)
    with pytest.raises(InvalidArgument):
        eval_side(d, "middle", asg)
    with pytest.raises(ModeError):
        eval_side(CATALOGUE["an11"], "lhs", asg)
    assert eval_side(d, "lhs", asg) == eval_side(d, "rhs", asg)


def test_cnt87_rank_two_fixed_n():
    d = CATALOGUE["cnt87"]
    free = {"a": mpq(3, 5), "b": mpq(-2, 7), "c": (mpq(1, 3), mpq(5, 4)), "d": (mpq(-3, 2), mpq(2, 9))}
    asg = solve_constraints(d, 2, free, {"n": (1, 1)}, q=Q)
    res = verify(d, asg)
    assert res.verdict == PASS and res.residual == 0
    assert not scalar_is_zero(res.lhs)


def test_lemdet1_entry_rank_three():
    res = check(CATALOGUE["lemdet1"], 3, 0, EXACT)
    assert res.verdict == PASS and res.residual == 0


def test_an10v_at_zero():
    d = CATALOGUE["an10v"]
    asg = sample_parameters(d, 2, 0, FLOAT)
    zero = asg.with_value("a", tuple(0 * v for v in asg.values["a"]))
    res = verify(d, zero)
    assert res.verdict == PASS


@pytest.mark.parametrize(
    "ident, r",
    [
        ("109", 1), ("msears", 1), ("cnt109i2", 1), ("cnt87a", 3), ("cnt87b", 2),
        ("cnt65", 1), ("cnt65a", 1), ("cnt65b", 1), ("cnt65c", 1), ("cnt65d", 1),
        ("an11e", 1), ("an21b", 2), ("cn65", 1), ("cn65a", 1), ("cn65b", 1), ("cnnt109c", 1),
    ],
)
def test_printed_forms_fail(ident, r):
    d = CATALOGUE[ident]
    assert not d.as_printed and d.note
    printed = d.printed_variant()
    verdicts = [check(printed, r, seed, d.modes[0]).verdict for seed in range(5)]
    assert FAIL in verdicts
    assert all(check(d, r, seed, d.modes[0]).verdict == PASS for seed in range(3))


@pytest.mark.parametrize("ident", ["cnt87a", "cnt87b", "an21b"])
def test_printed_forms_agree_at_rank_one(ident):
    d = CATALOGUE[ident]
    printed = d.printed_variant()
    assert all(check(printed, 1, seed, d.modes[0]).verdict == PASS for seed in range(3))


@pytest.mark.parametrize("ident", sorted(i for i, d in CATALOGUE.items() if d.audit is not None))
def test_rank_one_audit(ident):
    result, agreement = audit_r1(CATALOGUE[ident], seed=1)
    assert result.verdict == PASS
    assert agreement is True


def test_audit_without_oracle():
    result, agreement = audit_r1(CATALOGUE["dettf"])
    assert result.verdict == PASS and agreement is None


# determinant entries are the constant 1 at r = 1, so they are perturbed at r = 2
@pytest.mark.parametrize(
    "ident, r",
    [("cnt109", 1), ("cnt87c", 1), ("an32d", 2), ("lemdet1", 2), ("dettf", 2), ("an21", 1), ("cnnt109", 1)],
)
def test_negative_control_fails(ident, r):
    d = CATALOGUE[ident]
    mode = d.modes[0]
    verdicts = []
    for seed in range(3):
        asg = sample_parameters(d, r, seed, mode)
        bad, lhs, rhs = negative_control(d, asg)
        verdicts.append(verify(d, bad, make_context(mode, asg.q), lhs=lhs, rhs=rhs).verdict)
    assert FAIL in verdicts
