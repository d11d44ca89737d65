"""Finite, adaptive and bilateral lattice sums, subset sums and Jackson q-integrals."""

from dataclasses import dataclass
from itertools import product

from gmpy2 import mpc, mpfr

from .errors import ConvergenceError, InvalidArgument, ModeError, PoleError
from .scalars import FLOAT

HYPERCUBE = "hypercube"
ORTHANT = "nonnegative-orthant"
BILATERAL = "bilateral"

# adaptive windows start here and double; the tail test is applied once M >= MIN_WINDOW
_START_WINDOW = 4
MIN_WINDOW = 16


@dataclass(frozen=True)
class Region:
    kind: str
    bounds: tuple = ()
    rank: int = 0

    def __post_init__(self):
        if self.kind not in (HYPERCUBE, ORTHANT, BILATERAL):
            raise InvalidArgument(f"unknown region kind {self.kind!r}")
        bounds = tuple(int(b) for b in self.bounds)
        object.__setattr__(self, "bounds", bounds)
        if self.kind == HYPERCUBE:
            if not bounds or any(b < 0 for b in bounds):
                raise InvalidArgument("hypercube bounds must be nonnegative, r >= 1")
            object.__setattr__(self, "rank", len(bounds))
        elif self.rank < 1:
            raise InvalidArgument("region rank must be at least 1")

    @classmethod
    def hypercube(cls, bounds):
        return cls(HYPERCUBE, tuple(bounds))

    @classmethod
    def orthant(cls, r):
        return cls(ORTHANT, (), r)

    @classmethod
    def bilateral(cls, r):
        return cls(BILATERAL, (), r)


@dataclass(frozen=True)
class SubsetMask:
    """A subset ``S`` of ``{0, ..., r-1}`` encoded as a bit mask."""

    bits: int
    r: int

    def __contains__(self, i):
        return bool(self.bits >> i & 1)

    @property
    def members(self):
        return tuple(i for i in range(self.r) if self.bits >> i & 1)

    @property
    def size(self):
        return bin(self.bits).count("1")

    @classmethod
    def all(cls, r):
        return [cls(bits, r) for bits in range(1 << r)]


class TermOracle:
    """A summand: ``term(k)`` or, when ``uses_subset``, ``term(S, k)``."""

    def __init__(self, fn, rank, uses_subset=False):
        if rank < 1:
            raise InvalidArgument("rank must be at least 1")
        self.fn = fn
        self.rank = rank
        self.uses_subset = uses_subset

    def __call__(self, k, subset=None):
        if self.uses_subset:
            return self.fn(subset, k)
        return self.fn(k)

    def bind(self, subset):
        """Fix the subset argument, giving an ordinary term."""
        if not self.uses_subset:
            return self
        return TermOracle(lambda k: self.fn(subset, k), self.rank)


def separable_term(axis, coupling=None):
    """Term ``coupling(k) * prod_i axis[i](k_i)`` with per-axis memoisation.

    Each ``axis[i]`` is evaluated once per distinct index, which keeps large
    windows affordable when most of the summand factorises.
    """
    r = len(axis)
    caches = [dict() for _ in range(r)]

    def fn(k):
        out = coupling(k) if coupling is not None else 1
        for i in range(r):
            c = caches[i]
            v = c.get(k[i])
            if v is None:
                v = axis[i](k[i])
                c[k[i]] = v
            out = out * v
        return out

    return TermOracle(fn, r)


def _eval(term, k, subset):
    try:
        return term(k, subset)
    except PoleError as exc:
        if exc.index is None or not isinstance(exc.index, tuple):
            raise PoleError(f"{exc} at multi-index {k}", k) from exc
        raise


def sum_finite(term, region, ctx, subset=None):
    """Sum ``term`` over every point of a hypercube region."""
    if region.kind != HYPERCUBE:
        raise InvalidArgument("sum_finite needs a hypercube region")
    if region.rank != term.rank:
        raise InvalidArgument("region and term ranks differ")
    ranges = [range(b + 1) for b in region.bounds]
    if ctx.mode == FLOAT:
        with ctx.scope():
            total = mpc(0)
            for k in product(*ranges):
                total += _eval(term, k, subset)
            return total
    total = 0
    for k in product(*ranges):
        total = total + _eval(term, k, subset)
    return total


def _orthant_shell(r, m_old, m_new):
    """Points of ``[0, m_new]^r`` outside ``[0, m_old]^r``."""
    for i in range(r):
        ranges = (
            [range(m_old + 1)] * i
            + [range(m_old + 1, m_new + 1)]
            + [range(m_new + 1)] * (r - i - 1)
        )
        yield from product(*ranges)


def _bilateral_shell(r, m_old, m_new):
    """Points of ``[-m_new, m_new]^r`` outside ``[-m_old, m_old]^r``."""
    outer = list(range(-m_new, -m_old)) + list(range(m_old + 1, m_new + 1))
    for i in range(r):
        ranges = (
            [range(-m_old, m_old + 1)] * i
            + [outer]
            + [range(-m_new, m_new + 1)] * (r - i - 1)
        )
        yield from product(*ranges)


def _threshold(ctx, total):
    return ctx.epsilon * max(mpfr(1), abs(total))


def sum_adaptive(term, ctx, subset=None):
    """Sum over the nonnegative orthant by doubling hypercube windows.

    Stops once the most recently added shell has aggregate magnitude below
    ``epsilon * max(1, |partial sum|)`` with window ``M >= 16``.
    """
    if ctx.mode != FLOAT:
        raise ModeError("nonterminating sums are only available in float mode")
    r = term.rank
    with ctx.scope():
        if ctx.probe:
            return sum(
                (_eval(term, k, subset) for k in product(range(ctx.probe + 1), repeat=r)),
                mpc(0),
            )
        m = _START_WINDOW
        total = mpc(0)
        for k in product(range(m + 1), repeat=r):
            total += _eval(term, k, subset)
        while True:
            m_new = 2 * m
            if m_new > ctx.max_terms:
                raise ConvergenceError(
                    f"adaptive sum did not converge within {ctx.max_terms} terms per axis"
                )
            shell = mpc(0)
            mag = mpfr(0)
            for k in _orthant_shell(r, m, m_new):
                v = _eval(term, k, subset)
                shell += v
                mag += abs(v)
            total += shell
            m = m_new
            if m >= MIN_WINDOW and mag <= _threshold(ctx, total):
                return total


def sum_bilateral(term, ctx, subset=None):
    """Sum over all of ``Z^r`` with symmetric doubling windows.

    The two tails (shell points with some ``k_i > M`` and the remaining ones
    with some ``k_i < -M``) are tested separately.
    """
    if ctx.mode != FLOAT:
        raise ModeError("bilateral sums are only available in float mode")
    r = term.rank
    with ctx.scope():
        if ctx.probe:
            w = ctx.probe
            return sum(
                (_eval(term, k, subset) for k in product(range(-w, w + 1), repeat=r)),
                mpc(0),
            )
        m = _START_WINDOW
        total = mpc(0)
        for k in product(range(-m, m + 1), repeat=r):
            total += _eval(term, k, subset)
        while True:
            m_new = 2 * m
            if m_new > ctx.max_terms:
                raise ConvergenceError(
                    f"bilateral sum did not converge within {ctx.max_terms} terms per axis"
                )
            shell = mpc(0)
            pos = mpfr(0)
            neg = mpfr(0)
            for k in _bilateral_shell(r, m, m_new):
                v = _eval(term, k, subset)
                shell += v
                if max(k) > m:
                    pos += abs(v)
                else:
                    neg += abs(v)
            total += shell
            m = m_new
            if m >= MIN_WINDOW:
                bound = _threshold(ctx, total)
                if pos <= bound and neg <= bound:
                    return total


def sum_over_subsets(term, inner, ctx):
    """``sum_{S subset {1..r}}`` of the inner sum of ``term(S, .)``."""
    if not term.uses_subset:
        raise InvalidArgument("sum_over_subsets needs a subset-aware term")
    r = term.rank
    total = mpc(0) if ctx.mode == FLOAT else 0
    for s in SubsetMask.all(r):
        try:
            if inner.kind == HYPERCUBE:
                part = sum_finite(term, inner, ctx, subset=s)
            elif inner.kind == ORTHANT:
                part = sum_adaptive(term, ctx, subset=s)
            else:
                raise InvalidArgument("inner region must be a hypercube or the orthant")
        except ConvergenceError as exc:
            raise ConvergenceError(f"{exc} (subset {s.members})") from exc
        except PoleError as exc:
            raise PoleError(f"{exc} (subset {s.members})", exc.index) from exc
        if ctx.mode == FLOAT:
            with ctx.scope():
                total += part
        else:
            total = total + part
    return total


def q_integral_0a(f, a, ctx):
    """Jackson integral ``int_0^a f(t) d_q t = a(1-q) sum_k f(a q^k) q^k``."""
    if ctx.mode != FLOAT:
        raise ModeError("q-integrals are only available in float mode")
    with ctx.scope():
        a = mpc(a)
        term = TermOracle(lambda k: f(a * ctx.qpow(k[0])) * ctx.qpow(k[0]), 1)
        return a * (1 - ctx.q) * sum_adaptive(term, ctx)


def q_integral(f, a, b, ctx):
    """``int_a^b f d_q t = int_0^b f d_q t - int_0^a f d_q t``."""
    return q_integral_0a(f, b, ctx) - q_integral_0a(f, a, ctx)


def multi_q_integral(f, lower, upper, ctx):
    """Multiple Jackson integral over ``prod_i [a_i, b_i]`` via the subset expansion.

    ``f`` takes a sequence of ``r`` points.  For each subset ``S`` the points
    are ``c_i q^{k_i}`` with ``c_i = a_i`` for ``i`` in ``S`` and ``b_i``
    otherwise, weighted by ``prod_{i in S}(-a_i) prod_{i not in S} b_i``.
    """
    if ctx.mode != FLOAT:
        raise ModeError("q-integrals are only available in float mode")
    r = len(lower)
    if r < 1 or len(upper) != r:
        raise InvalidArgument("lower and upper endpoints must have equal length r >= 1")
    with ctx.scope():
        lower = [mpc(v) for v in lower]
        upper = [mpc(v) for v in upper]
        total = mpc(0)
        for s in SubsetMask.all(r):
            c = [lower[i] if i in s else upper[i] for i in range(r)]
            weight = (1 - ctx.q) ** r
            for i in range(r):
                weight *= -lower[i] if i in s else upper[i]

            def fn(k, c=c):
                pts = [c[i] * ctx.qpow(k[i]) for i in range(r)]
                return f(pts) * ctx.qpow(sum(k))

            try:
                inner = sum_adaptive(TermOracle(fn, r), ctx)
            except ConvergenceError as exc:
                raise ConvergenceError(f"{exc} (subset {s.members})") from exc
            total += weight * inner
        return total
