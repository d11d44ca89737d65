"""Identity definitions, parameter solving, sampling and verification."""

import hashlib
import math
import random
import time
from dataclasses import dataclass, field

from gmpy2 import mpc, mpfr, mpq

from ..determinants import det_generic
from ..errors import ConvergenceError, InvalidArgument, ModeError, PoleError, SamplingError
from ..kernel import (
    QContext,
    binom2,
    binom3,
    check_denominator,
    default_tolerance,
    diff,
    one_minus,
    qpoch,
    qpoch_inf,
)
from ..scalars import EXACT, FLOAT, MODES, PSERIES, PSeries, magnitude, scalar_is_zero
from ..summation import Region, separable_term, sum_adaptive, sum_bilateral, sum_finite

PASS = "pass"
FAIL = "fail"
POLE = "pole-rejected"
NONCONVERGENT = "convergence-error"

MAX_RANK = 4
MAX_N = 6
MAX_REDRAWS = 1000
# draws whose two sides both vanish exactly are replaced by up to this many others
MAX_TRIVIAL = 200

# exact and p-series samples cycle through these bases
EXACT_Q = (mpq(2, 11), mpq(3, 13), mpq(-3, 13), mpq(5, 17), mpq(2, 7), mpq(-2, 9), mpq(3, 19))


@dataclass(frozen=True)
class Param:
    name: str
    indexed: bool = False


@dataclass(frozen=True)
class Monomial:
    """``target = sign * q**(q0 + qr*r + sum c*d) * prod p**e`` for discrete ``d``.

    When any referenced parameter is indexed, the target is indexed too and
    the relation is applied componentwise.
    """

    target: str
    powers: tuple
    q0: int = 0
    qr: int = 0
    qd: tuple = ()
    sign: int = 1
    text: str = ""

    def names(self):
        return [n for n, _ in self.powers] + [n for n, _ in self.qd]


@dataclass(frozen=True)
class Predicate:
    """A float-mode admissibility test, ``check(env) -> bool``."""

    text: str
    check: object


@dataclass(frozen=True)
class FloatRanges:
    """Modulus ranges (log-uniform, random phase) for float sampling."""

    q: tuple = (0.02, 0.06)
    default: tuple = (0.5, 2.0)
    params: tuple = ()

    def range_of(self, name):
        return dict(self.params).get(name, self.default)


@dataclass
class IdentityDef:
    id: str
    name: str
    citation: str
    ranks: tuple
    modes: tuple
    lhs: object
    rhs: object
    free: tuple = ()
    discrete: tuple = ()
    dependent: tuple = ()
    convergence: tuple = ()
    family: str = "basic"
    terminating: bool = True
    as_printed: bool = True
    note: str = ""
    printed: dict = None
    sampling: FloatRanges = field(default_factory=FloatRanges)
    audit: object = None
    perturb: str = None
    elliptic_of: str = None
    max_n: int = None

    def __post_init__(self):
        if self.family not in ("basic", "elliptic"):
            raise InvalidArgument(f"unknown family {self.family!r}")
        for m in self.modes:
            if m not in MODES:
                raise InvalidArgument(f"unknown mode {m!r} for {self.id}")
        if self.family == "elliptic" and PSERIES not in self.modes:
            raise InvalidArgument(f"elliptic entry {self.id} must support p-series mode")
        known = {p.name for p in self.free} | {p.name for p in self.discrete}
        for mono in self.dependent:
            for n in mono.names():
                if n not in known:
                    raise InvalidArgument(f"{self.id}: {mono.target} depends on unknown {n}")
            known.add(mono.target)

    def printed_variant(self):
        """The entry exactly as printed (when a correction was needed), else ``self``."""
        if not self.printed:
            return self
        changes = dict(self.printed)
        fields = {k: getattr(self, k) for k in self.__dataclass_fields__}
        fields.update(changes)
        fields["printed"] = None
        fields["as_printed"] = True
        fields["id"] = self.id
        return IdentityDef(**fields)

    @property
    def indexed_names(self):
        out = {p.name for p in self.free if p.indexed} | {p.name for p in self.discrete if p.indexed}
        for mono in self.dependent:
            if any(n in out for n in mono.names()):
                out.add(mono.target)
        return out

    def summary(self):
        return {
            "id": self.id,
            "name": self.name,
            "citation": self.citation,
            "family": self.family,
            "ranks": list(self.ranks),
            "modes": list(self.modes),
            "free": [p.name + ("_i" if p.indexed else "") for p in self.free],
            "discrete": [p.name + ("_i" if p.indexed else "") for p in self.discrete],
            "constraints": [m.text for m in self.dependent],
            "convergence": [c.text for c in self.convergence],
            "as_printed": self.as_printed,
            "note": self.note,
        }


@dataclass
class Assignment:
    """Parameter values for one identity at one rank."""

    identity: str
    r: int
    mode: str
    q: object
    values: dict
    discrete: dict
    seed: int = None
    cache: dict = field(default_factory=dict, repr=False, compare=False)
    trivial: bool = field(default=False, compare=False)

    def canonical(self):
        parts = [self.identity, str(self.r), self.mode, _text(self.q)]
        for name in sorted(self.discrete):
            parts.append(f"{name}={self.discrete[name]}")
        for name in sorted(self.values):
            v = self.values[name]
            if isinstance(v, tuple):
                parts.append(name + "=(" + ",".join(_text(x) for x in v) + ")")
            else:
                parts.append(f"{name}={_text(v)}")
        return ";".join(parts)

    def digest(self):
        return hashlib.sha256(self.canonical().encode()).hexdigest()[:16]

    def with_value(self, name, value):
        values = dict(self.values)
        values[name] = value
        return Assignment(self.identity, self.r, self.mode, self.q, values, dict(self.discrete), self.seed)


def _text(x):
    if isinstance(x, mpc):
        return f"{x.real}{'+' if x.imag >= 0 else ''}{x.imag}i"
    return str(x)


@dataclass
class VerificationResult:
    identity: str
    r: int
    mode: str
    seed: int
    digest: str
    lhs: object
    rhs: object
    residual: object
    relative_error: object
    verdict: str
    elapsed: float
    detail: str = ""
    as_printed: bool = True
    discrete: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.verdict == PASS


# ---------------------------------------------------------------------------
# evaluation environment


class Env:
    """Parameter values plus the arithmetic toolkit used by identity evaluators.

    Indexed parameters are tuples (0-based); discrete ones are ints or tuples.
    Every ``1 - w`` is written ``om(w)`` and every ``u - v`` is ``df(u, v)``
    so that the same evaluator yields the elliptic analogue in a context
    with nonzero nome.
    """

    def __init__(self, asg, ctx):
        self.ctx = ctx
        self.r = asg.r
        self.q = ctx.q
        self.one = ctx.one
        self.mode = ctx.mode
        for name, v in asg.values.items():
            if isinstance(v, tuple):
                v = tuple(ctx.embed(x) for x in v)
            else:
                v = ctx.embed(v)
            setattr(self, name, v)
        for name, v in asg.discrete.items():
            setattr(self, name, v)

    def qp(self, k):
        return self.ctx.qpow(k)

    def om(self, w):
        return one_minus(w, self.ctx)

    def df(self, u, v):
        return diff(u, v, self.ctx)

    def div(self, num, den):
        check_denominator(den, self.ctx)
        return (self.one * num) / den

    def P(self, k, args):
        out = self.one
        for a in args:
            out = out * qpoch(a, k, self.ctx)
        return out

    def R(self, k, num, den):
        """``prod (num)_k / prod (den)_k``; negative ``k`` allowed."""
        top = self.P(k, num)
        if k < 0:
            # 1/(b)_k = (b q^k)_{-k}
            qk = self.qp(k)
            for b in den:
                top = top * qpoch(b * qk, -k, self.ctx)
            return top
        bot = self.one
        for b in den:
            v = qpoch(b, k, self.ctx)
            check_denominator(v, self.ctx)
            bot = bot * v
        return top / bot

    def I(self, num, den):
        """Ratio of infinite products (float mode only)."""
        if self.mode != FLOAT:
            raise ModeError("infinite products are only available in float mode")
        out = self.one
        for a in num:
            out *= qpoch_inf(a, self.ctx)
        d = self.one
        for a in den:
            d *= qpoch_inf(a, self.ctx)
        return self.div(out, d)

    def vwp(self, a, k):
        """Very-well-poised factor ``(1 - a q^{2k}) / (1 - a)``."""
        return self.div(self.om(a * self.qp(2 * k)), self.om(a))

    def prod(self, fn):
        """``prod_{i=1}^r fn(i)`` (1-based)."""
        out = self.one
        for i in range(1, self.r + 1):
            out = out * fn(i)
        return out

    def pairs(self, fn):
        """``prod_{1 <= i < j <= r} fn(i, j)`` (1-based)."""
        out = self.one
        for i in range(1, self.r + 1):
            for j in range(i + 1, self.r + 1):
                out = out * fn(i, j)
        return out

    def det(self, entry):
        """``det(entry(i, m))`` with 0-based row ``i`` and ``m = r - j`` for column ``j``."""
        r = self.r
        return det_generic([[entry(i, r - j) for j in range(1, r + 1)] for i in range(r)])

    # couplings between summation indices

    def type_a(self, x=None):
        """``prod_{i<j} (x_i q^{k_i} - x_j q^{k_j})``."""
        r, df, qp = self.r, self.df, self.qp

        def coupling(k):
            out = self.one
            for i in range(r):
                ti = qp(k[i]) if x is None else x[i] * qp(k[i])
                for j in range(i + 1, r):
                    tj = qp(k[j]) if x is None else x[j] * qp(k[j])
                    out = out * df(ti, tj)
            return out

        return coupling

    def type_c(self, a, x=None):
        """``prod_{i<j} (x_i q^{k_i} - x_j q^{k_j})(1 - a x_i x_j q^{k_i+k_j})``."""
        r, df, om, qp = self.r, self.df, self.om, self.qp

        def coupling(k):
            out = self.one
            for i in range(r):
                ti = qp(k[i]) if x is None else x[i] * qp(k[i])
                for j in range(i + 1, r):
                    tj = qp(k[j]) if x is None else x[j] * qp(k[j])
                    out = out * df(ti, tj) * om(a * ti * tj)
            return out

        return coupling

    # lattice sums

    def box(self, bounds, axes, coupling=None):
        if isinstance(bounds, int):
            bounds = (bounds,) * self.r
        term = separable_term(axes, coupling)
        return sum_finite(term, Region.hypercube(bounds), self.ctx)

    def orthant(self, axes, coupling=None):
        return sum_adaptive(separable_term(axes, coupling), self.ctx)

    def bilateral(self, axes, coupling=None):
        return sum_bilateral(separable_term(axes, coupling), self.ctx)


# ---------------------------------------------------------------------------
# contexts, solving, sampling


def make_context(mode, q, precision=256, order=8, **kw):
    if mode == FLOAT:
        return QContext(FLOAT, q, float_precision=precision, **kw)
    if mode == PSERIES:
        return QContext(PSERIES, q, pseries_order=order, **kw)
    return QContext(EXACT, q, **kw)


def _check_rank(defn, r):
    if r not in defn.ranks:
        raise InvalidArgument(f"{defn.id} does not support rank {r} (supported: {defn.ranks})")


def _q_exponent(mono, r, discrete, i):
    e = mono.q0 + mono.qr * r
    for name, coef in mono.qd:
        d = discrete[name]
        e += coef * (d[i] if isinstance(d, tuple) else d)
    return e


def _monomial_value(mono, values, discrete, r, i, ctx):
    out = ctx.one * mono.sign * ctx.qpow(_q_exponent(mono, r, discrete, i))
    for name, power in mono.powers:
        v = values[name]
        if isinstance(v, tuple):
            v = v[i]
        if v == 0:
            raise InvalidArgument(f"parameter {name} is zero; the constraint for {mono.target} is singular")
        out = out * v ** power
    return out


def solve_constraints(defn, r, free_values, discrete, mode=EXACT, q=None, ctx=None, seed=None):
    """Complete ``free_values`` with the dependent parameters of ``defn``.

    Dependent parameters are computed in declared order from their monomial
    relations and re-checked afterwards.
    """
    _check_rank(defn, r)
    if ctx is None:
        if q is None:
            raise InvalidArgument("solve_constraints needs q or a context")
        ctx = make_context(mode, q)
    values = {}
    for p in defn.free:
        if p.name not in free_values:
            raise InvalidArgument(f"{defn.id}: missing free parameter {p.name}")
        v = free_values[p.name]
        if p.indexed:
            v = tuple(ctx.embed(x) for x in v)
            if len(v) != r:
                raise InvalidArgument(f"{defn.id}: {p.name} needs {r} components")
        else:
            v = ctx.embed(v)
        values[p.name] = v
    disc = {}
    for p in defn.discrete:
        if p.name not in discrete:
            raise InvalidArgument(f"{defn.id}: missing discrete parameter {p.name}")
        d = discrete[p.name]
        if p.indexed:
            d = tuple(int(x) for x in d)
            if len(d) != r:
                raise InvalidArgument(f"{defn.id}: {p.name} needs {r} components")
            if any(x < 0 for x in d):
                raise InvalidArgument("discrete parameters must be nonnegative")
        else:
            d = int(d)
            if d < 0:
                raise InvalidArgument("discrete parameters must be nonnegative")
        disc[p.name] = d
    indexed = defn.indexed_names
    with ctx.scope():
        for mono in defn.dependent:
            if mono.target in indexed:
                values[mono.target] = tuple(
                    _monomial_value(mono, values, disc, r, i, ctx) for i in range(r)
                )
            else:
                values[mono.target] = _monomial_value(mono, values, disc, r, 0, ctx)
        # re-verify (catches inconsistent declarations)
        for mono in defn.dependent:
            got = values[mono.target]
            comps = got if isinstance(got, tuple) else (got,)
            for i, v in enumerate(comps):
                want = _monomial_value(mono, values, disc, r, i, ctx)
                if ctx.mode == FLOAT:
                    if abs(v - want) > abs(want) * mpfr(2) ** (20 - ctx.float_precision):
                        raise InvalidArgument(f"constraint for {mono.target} is not satisfied")
                elif v != want:
                    raise InvalidArgument(f"constraint for {mono.target} is not satisfied")
    return Assignment(defn.id, r, ctx.mode, ctx.q, values, disc, seed)


def _rng(defn, r, seed, mode, salt=""):
    digest = hashlib.sha256(f"{defn.id}|{r}|{seed}|{mode}|{salt}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _rational(rng):
    num = rng.randint(1, 12)
    den = rng.randint(1, 12)
    if rng.random() < 0.5:
        num = -num
    return mpq(num, den)


def _complex(rng, lo, hi):
    mod = math.exp(rng.uniform(math.log(lo), math.log(hi)))
    phase = rng.uniform(-math.pi, math.pi)
    return mpc(mod * math.cos(phase), mod * math.sin(phase))


def _draw(defn, r, mode, rng, max_n):
    free = {}
    for p in defn.free:
        count = r if p.indexed else 1
        if mode == FLOAT:
            lo, hi = defn.sampling.range_of(p.name)
            vals = tuple(_complex(rng, lo, hi) for _ in range(count))
        else:
            vals = tuple(_rational(rng) for _ in range(count))
        free[p.name] = vals if p.indexed else vals[0]
    disc = {}
    for p in defn.discrete:
        if p.indexed:
            disc[p.name] = tuple(rng.randint(0, max_n) for _ in range(r))
        else:
            disc[p.name] = rng.randint(0, max_n)
    return free, disc


def _distinct(asg, defn):
    for p in defn.free:
        if p.indexed:
            v = asg.values[p.name]
            if len(set(v)) != len(v):
                return False
    return True


def _ctx_key(ctx):
    return (ctx.mode, str(ctx.q), ctx.float_precision, ctx.pseries_order)


def default_max_n(defn, mode):
    if defn.max_n is not None:
        return defn.max_n
    return 2 if mode == PSERIES else 3


def sample_parameters(defn, r, seed, mode, max_n=None, precision=256, order=8, ctx=None):
    """Draw a reproducible admissible assignment for ``defn`` at rank ``r``.

    Exact and p-series draws are validated by evaluating both sides (the
    values are cached on the assignment) and redrawn while both sides vanish;
    if no nonvanishing draw turns up the first vanishing one is returned with
    ``trivial`` set.  Float draws are probed on a small window of every
    lattice sum and checked against the convergence predicates.
    """
    _check_rank(defn, r)
    if mode not in defn.modes:
        raise ModeError(f"{defn.id} does not support {mode} mode")
    if max_n is None:
        max_n = default_max_n(defn, mode)
    if not 0 <= max_n <= MAX_N:
        raise InvalidArgument(f"max n must lie in [0, {MAX_N}]")
    rng = _rng(defn, r, seed, mode)
    if mode == FLOAT:
        lo, hi = defn.sampling.q
    fallback = None
    trivial = 0
    for _ in range(MAX_REDRAWS):
        if mode == FLOAT:
            q = _complex(rng, lo, hi)
        else:
            q = EXACT_Q[rng.randrange(len(EXACT_Q))]
        free, disc = _draw(defn, r, mode, rng, max_n)
        if ctx is None or ctx.q != q:
            run_ctx = make_context(mode, q, precision, order)
        else:
            run_ctx = ctx
        try:
            asg = solve_constraints(defn, r, free, disc, ctx=run_ctx, seed=seed)
        except (InvalidArgument, ZeroDivisionError):
            continue
        if not _distinct(asg, defn):
            continue
        if mode == FLOAT:
            if not _admissible_float(defn, asg, run_ctx):
                continue
        else:
            try:
                sides = _evaluate(defn, asg, run_ctx)
            except (PoleError, ZeroDivisionError, InvalidArgument):
                continue
            asg.cache[_ctx_key(run_ctx)] = sides
            if scalar_is_zero(sides[0]) and scalar_is_zero(sides[1]):
                # 0 = 0 verifies nothing; keep looking
                asg.trivial = True
                fallback = fallback or asg
                trivial += 1
                if trivial < MAX_TRIVIAL:
                    continue
                return fallback
        return asg
    if fallback is not None:
        return fallback
    raise SamplingError(f"{defn.id}: no admissible sample after {MAX_REDRAWS} draws (r={r}, mode={mode})")


def _admissible_float(defn, asg, ctx):
    with ctx.scope():
        env = Env(asg, ctx)
        try:
            for pred in defn.convergence:
                if not pred.check(env):
                    return False
        except (ZeroDivisionError, PoleError):
            return False
    probe = ctx.replace(probe=3)
    try:
        _evaluate(defn, asg, probe)
    except (PoleError, ZeroDivisionError, InvalidArgument):
        return False
    return True


def _evaluate(defn, asg, ctx, lhs=None, rhs=None):
    lhs = lhs or defn.lhs
    rhs = rhs or defn.rhs
    with ctx.scope():
        env = Env(asg, ctx)
        left = lhs(env)
        env = Env(asg, ctx)
        right = rhs(env)
    return left, right


def eval_side(defn, side, asg, ctx=None, printed=False):
    """Evaluate one side (``"lhs"`` or ``"rhs"``) of ``defn`` at ``asg``."""
    if side not in ("lhs", "rhs"):
        raise InvalidArgument("side must be 'lhs' or 'rhs'")
    if ctx is None:
        ctx = make_context(asg.mode, asg.q)
    if ctx.mode not in defn.modes:
        raise ModeError(f"{defn.id} does not support {ctx.mode} mode")
    if printed:
        defn = defn.printed_variant()
    fn = getattr(defn, side)
    try:
        with ctx.scope():
            return fn(Env(asg, ctx))
    except PoleError as exc:
        raise PoleError(f"{defn.id} {side}: {exc}", exc.index) from exc
    except ConvergenceError as exc:
        raise ConvergenceError(f"{defn.id} {side}: {exc}") from exc


def tolerance_for(ctx, tolerance=None):
    if tolerance is not None:
        return mpfr(tolerance)
    return default_tolerance(ctx.float_precision)


def compare(lhs, rhs, ctx, tolerance=None):
    """Residual, relative error and verdict for two evaluated sides."""
    if ctx.mode == FLOAT:
        with ctx.scope():
            res = lhs - rhs
            scale = max(abs(lhs), abs(rhs), mpfr(1))
            rel = abs(res) / scale
            ok = rel <= tolerance_for(ctx, tolerance)
        return res, rel, PASS if ok else FAIL
    res = lhs - rhs
    zero = scalar_is_zero(res)
    if zero:
        rel = 0
    else:
        scale = max(magnitude(lhs), magnitude(rhs), mpfr(1))
        rel = magnitude(res) / scale if not isinstance(res, PSeries) else _pseries_rel(res, scale)
    return res, rel, PASS if zero else FAIL


def _pseries_rel(res, scale):
    return max(mpfr(abs(c)) for c in res.coeffs) / scale


def verify(defn, asg, ctx=None, tolerance=None, printed=False, lhs=None, rhs=None):
    """Evaluate both sides and classify the residual; never raises on poles."""
    if ctx is None:
        ctx = make_context(asg.mode, asg.q)
    if ctx.mode not in defn.modes:
        raise ModeError(f"{defn.id} does not support {ctx.mode} mode")
    # cached sides belong to the entry as registered, not to its printed form
    cached = lhs is None and rhs is None and not (printed and defn.printed)
    if printed:
        defn = defn.printed_variant()
    start = time.perf_counter()
    detail = ""
    key = _ctx_key(ctx)
    try:
        if cached and key in asg.cache:
            left, right = asg.cache[key]
        else:
            left, right = _evaluate(defn, asg, ctx, lhs, rhs)
        res, rel, verdict = compare(left, right, ctx, tolerance)
    except (PoleError, ZeroDivisionError) as exc:
        left = right = res = rel = None
        verdict, detail = POLE, str(exc)
    except ConvergenceError as exc:
        left = right = res = rel = None
        verdict, detail = NONCONVERGENT, str(exc)
    elapsed = time.perf_counter() - start
    if asg.trivial and not detail:
        detail = "both sides vanish identically at this sample"
    return VerificationResult(
        identity=defn.id,
        r=asg.r,
        mode=ctx.mode,
        seed=asg.seed,
        digest=asg.digest(),
        lhs=left,
        rhs=right,
        residual=res,
        relative_error=rel,
        verdict=verdict,
        elapsed=elapsed,
        detail=detail,
        as_printed=defn.as_printed or printed,
        discrete=dict(asg.discrete),
    )


def check(defn, r, seed, mode, precision=256, order=8, max_n=None, tolerance=None):
    """Sample and verify one ``(identity, rank, seed, mode)`` case."""
    start = time.perf_counter()
    try:
        asg = sample_parameters(defn, r, seed, mode, max_n=max_n, precision=precision, order=order)
    except SamplingError as exc:
        return VerificationResult(defn.id, r, mode, seed, "", None, None, None, None, POLE,
                                  time.perf_counter() - start, str(exc), defn.as_printed)
    ctx = make_context(mode, asg.q, precision, order)
    result = verify(defn, asg, ctx, tolerance)
    result.elapsed = time.perf_counter() - start
    return result


def negative_control(defn, asg):
    """Assignment whose first dependent parameter is multiplied by ``q``.

    Returns ``(assignment, lhs_override, rhs_override)``; identities without
    dependent parameters perturb their first free parameter on the
    right-hand side only.
    """
    name = defn.perturb
    if name is None and defn.dependent:
        name = defn.dependent[0].target
    if name is not None:
        v = asg.values[name]
        q = asg.q
        bumped = (v[0] * q,) + v[1:] if isinstance(v, tuple) else v * q
        return asg.with_value(name, bumped), None, None
    first = defn.free[0].name
    v = asg.values[first]
    q = asg.q
    bumped = (v[0] * q,) + v[1:] if isinstance(v, tuple) else v * q
    moved = asg.with_value(first, bumped)

    def rhs(env, _moved=moved):
        return defn.rhs(Env(_moved, env.ctx))

    return asg, None, rhs


def audit_r1(defn, seed=0, mode=None, precision=256):
    """Verify at ``r = 1`` and compare both sides with the classical oracle.

    Returns ``(result, agreement)`` where ``agreement`` is True/False when an
    oracle is attached and None otherwise.
    """
    if 1 not in defn.ranks:
        raise InvalidArgument(f"{defn.id} has no rank-1 form")
    if mode is None:
        mode = EXACT if EXACT in defn.modes else defn.modes[0]
    asg = sample_parameters(defn, 1, seed, mode, precision=precision)
    ctx = make_context(mode, asg.q, precision)
    result = verify(defn, asg, ctx)
    if defn.audit is None or result.verdict in (POLE, NONCONVERGENT):
        return result, None
    with ctx.scope():
        try:
            c_lhs, c_rhs = defn.audit(Env(asg, ctx))
        except (PoleError, ZeroDivisionError):
            return result, None
        ok = True
        for mine, theirs in ((result.lhs, c_lhs), (result.rhs, c_rhs), (c_lhs, c_rhs)):
            if compare(mine, theirs, ctx)[2] != PASS:
                ok = False
    return result, ok


# ---------------------------------------------------------------------------
# small constructors used by the catalogue modules


def free(*names):
    """``free("a", "b", "c_i")`` -> params; a trailing ``_i`` marks indexed ones."""
    out = []
    for n in names:
        if n.endswith("_i"):
            out.append(Param(n[:-2], True))
        else:
            out.append(Param(n))
    return tuple(out)


def mono(target, powers, q0=0, qr=0, qd=(), sign=1, text=""):
    if isinstance(powers, dict):
        powers = tuple(powers.items())
    if isinstance(qd, dict):
        qd = tuple(qd.items())
    return Monomial(target, tuple(powers), q0, qr, tuple(qd), sign, text)


def pred(text, check):
    return Predicate(text, check)

