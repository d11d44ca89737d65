"""Generic determinants and the closed-form evaluations built on q-shifted factorials."""

from dataclasses import dataclass

from gmpy2 import mpc, mpq

from .errors import InvalidArgument
from .kernel import binom2, binom3, check_denominator, diff, one_minus, qpoch
from .scalars import FLOAT, backend_of

MAX_RANK = 8


def det_generic(entries):
    """Determinant of a square matrix of scalars.

    Exact and p-series entries use a memoised Laplace expansion (no division,
    so it works over the series ring); float entries use Gaussian
    elimination with partial pivoting.
    """
    rows = [list(row) for row in entries]
    r = len(rows)
    if r == 0 or any(len(row) != r for row in rows):
        raise InvalidArgument("det_generic needs a nonempty square matrix")
    if r > MAX_RANK:
        raise InvalidArgument(f"matrix rank {r} exceeds the supported maximum {MAX_RANK}")
    if any(backend_of(v) == FLOAT for row in rows for v in row):
        return _det_pivot(rows)
    return _det_laplace(rows)


def _det_laplace(rows):
    r = len(rows)
    memo = {}

    def minor(row, used):
        if row == r:
            return mpq(1)
        key = (row, used)
        if key in memo:
            return memo[key]
        total = 0
        sign = 1
        for col in range(r):
            if used >> col & 1:
                continue
            v = rows[row][col]
            if v != 0:
                term = v * minor(row + 1, used | 1 << col)
                total = total + term if sign > 0 else total - term
            sign = -sign  # parity among the columns still available
        memo[key] = total
        return total

    return minor(0, 0)


def _det_pivot(rows):
    m = [[mpc(v) for v in row] for row in rows]
    r = len(m)
    det = mpc(1)
    for col in range(r):
        piv = max(range(col, r), key=lambda i: abs(m[i][col]))
        if m[piv][col] == 0:
            return mpc(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for i in range(col + 1, r):
            f = m[i][col] / p
            if f != 0:
                row_i, row_c = m[i], m[col]
                for j in range(col + 1, r):
                    row_i[j] -= f * row_c[j]
    return det


@dataclass(frozen=True)
class DetSpec:
    """Data of the determinant lemma: points ``X_1..X_r`` and parameters ``A, B, C``."""

    X: tuple
    A: object
    B: object
    C: object

    def __post_init__(self):
        object.__setattr__(self, "X", tuple(self.X))
        if not self.X:
            raise InvalidArgument("DetSpec needs r >= 1 points")

    @property
    def r(self):
        return len(self.X)


def _ratio(num, den, ctx):
    check_denominator(den, ctx)
    return (ctx.one * num) / den


def lemdet1_entry(spec, i, j, ctx):
    """Entry ``(AX_i, AC/X_i)_{r-j} / (BX_i, BC/X_i)_{r-j}`` (1-based ``i, j``)."""
    r = spec.r
    if not (1 <= i <= r and 1 <= j <= r):
        raise InvalidArgument("matrix index out of range")
    x = spec.X[i - 1]
    m = r - j
    if m == 0:
        return ctx.one
    num = qpoch(spec.A * x, m, ctx) * qpoch(spec.A * spec.C / x, m, ctx)
    den = qpoch(spec.B * x, m, ctx) * qpoch(spec.B * spec.C / x, m, ctx)
    return _ratio(num, den, ctx)


def lemdet1_matrix(spec, ctx):
    r = spec.r
    return [[lemdet1_entry(spec, i, j, ctx) for j in range(1, r + 1)] for i in range(1, r + 1)]


def lemdet1_closed(spec, ctx):
    """Closed form of ``det(lemdet1_entry)``."""
    r, X, A, B, C = spec.r, spec.X, spec.A, spec.B, spec.C
    q = ctx.q
    out = A ** binom2(r) * q ** binom3(r)
    for i in range(r):
        for j in range(i + 1, r):
            out = out * diff(X[j], X[i], ctx) * one_minus(C / (X[i] * X[j]), ctx)
    for i in range(1, r + 1):
        x = X[i - 1]
        num = qpoch(B / A, i - 1, ctx) * qpoch(A * B * C * q ** (2 * r - 2 * i), i - 1, ctx)
        den = qpoch(B * x, r - 1, ctx) * qpoch(B * C / x, r - 1, ctx)
        out = out * _ratio(num, den, ctx)
    return out


def lemdet1a_entry(X, A, B, i, j, ctx):
    """Entry ``X_i^{r-j} (A/X_i)_{r-j} / (B X_i)_{r-j}`` (1-based)."""
    r = len(X)
    x = X[i - 1]
    m = r - j
    if m == 0:
        return ctx.one
    return x ** m * _ratio(qpoch(A / x, m, ctx), qpoch(B * x, m, ctx), ctx)


def lemdet1a_matrix(X, A, B, ctx):
    r = len(X)
    return [[lemdet1a_entry(X, A, B, i, j, ctx) for j in range(1, r + 1)] for i in range(1, r + 1)]


def lemdet1a_closed(X, A, B, ctx):
    """Closed form of ``det(lemdet1a_entry)``."""
    X = tuple(X)
    r = len(X)
    if r < 1:
        raise InvalidArgument("need at least one point")
    q = ctx.q
    out = ctx.one
    for i in range(r):
        for j in range(i + 1, r):
            out = out * diff(X[i], X[j], ctx)
    for i in range(1, r + 1):
        num = qpoch(A * B * q ** (2 * r - 2 * i), i - 1, ctx)
        out = out * _ratio(num, qpoch(B * X[i - 1], r - 1, ctx), ctx)
    return out


def dettf_sides(a, z, ctx):
    """The two determinants related by the transformation, prefactor included."""
    a, z = tuple(a), tuple(z)
    r = len(a)
    if r < 1 or len(z) != r:
        raise InvalidArgument("a and z must have equal length r >= 1")
    left = [
        [_ratio(qpoch(z[i], r - j, ctx), qpoch(a[i] * z[i], r - j, ctx), ctx) for j in range(1, r + 1)]
        for i in range(r)
    ]
    right = [
        [
            z[i] ** (r - j)
            * _ratio(qpoch(a[i], r - j, ctx), qpoch(a[i] * z[i], r - j, ctx), ctx)
            for j in range(1, r + 1)
        ]
        for i in range(r)
    ]
    pre = (-1) ** binom2(r) * ctx.q ** binom3(r)
    return det_generic(left), pre * det_generic(right)


def dettf_residual(a, z, ctx):
    """Difference of the two sides of the determinant transformation (zero when valid)."""
    lhs, rhs = dettf_sides(a, z, ctx)
    return lhs - rhs
