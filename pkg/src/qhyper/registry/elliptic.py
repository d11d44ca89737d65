"""Elliptic analogues of the terminating C_r transformations and Jackson sums.

Each entry reuses the evaluators of its basic counterpart.  In a p-series
context every ``1 - w`` becomes ``theta(w)``, every ``u - v`` becomes
``u theta(v/u)`` and every q-shifted factorial becomes an elliptic one, while
monomial factors such as ``q^{k_i}`` or ``(lambda/a)^{C(r,2)}`` are untouched.
"""

import dataclasses

from ..scalars import EXACT, PSERIES, PSeries
from .core import _evaluate, make_context, sample_parameters
from . import terminating

_BASIC = {d.id: d for d in terminating.CATALOGUE}

_SOURCES = (
    ("cnt109", "Elliptic C_r terminating 10phi9 transformation",
     "elliptic C_r 10phi9 transformation; a^3 q^(3-r+n_i) = b c d e_i f_i g_i, lambda = a^2 q^(2-r)/(bcd)"),
    ("cnt109n", "Elliptic C_r terminating 10phi9 transformation (iterated form)",
     "elliptic C_r 10phi9 transformation with upper parameters e q^(n_i); bcdefg = a^3 q^(3-r)"),
    ("cnt109i2", "Elliptic C_r terminating 10phi9 transformation on a shifted lattice",
     "elliptic C_r 10phi9 transformation in points x_i; a^3 q^(3-r+N) = bcdefg"),
    ("cnt87", "Elliptic C_r Jackson summation (determinant form)",
     "elliptic C_r Jackson summation; b c_i d_i e_i = a^2 q^(2-r+n_i)"),
    ("cnt87a", "Elliptic C_r Jackson summation (product form)",
     "elliptic C_r Jackson summation with upper parameters e q^(n_i); bcde = a^2 q^(2-r)"),
    ("cnt87b", "Elliptic C_r Jackson summation in points x_i",
     "elliptic C_r Jackson summation with parameters d x_i, e/x_i; bcde = a^2 q^(2-r+N)"),
    ("cnt87c", "Elliptic C_r Jackson summation of the second type",
     "elliptic C_r Jackson summation over points x_i q^(k_i); b c_i d_i e = a^2 q^(2-r+n_i)"),
)


def _elliptic(base_id, name, citation):
    base = _BASIC[base_id]
    return dataclasses.replace(
        base,
        id="ell-" + base_id,
        name=name,
        citation=citation,
        ranks=(1, 2, 3),
        modes=(PSERIES,),
        family="elliptic",
        elliptic_of=base_id,
        audit=None,
    )


CATALOGUE = [_elliptic(*src) for src in _SOURCES]


def _head(x):
    return x.coeffs[0] if isinstance(x, PSeries) else x


def p0_collapse(defn, r, seed, order=8):
    """Compare the constant p-coefficient of both sides with the basic entry.

    Samples ``defn`` in p-series mode, then evaluates the basic counterpart
    exactly at the same rational point.  Returns ``(ok, detail)``.
    """
    basic = _BASIC[defn.elliptic_of]
    asg = sample_parameters(defn, r, seed, PSERIES, order=order)
    left, right = _evaluate(defn, asg, make_context(PSERIES, asg.q, order=order))
    b_left, b_right = _evaluate(basic, asg, make_context(EXACT, asg.q))
    left, right = _head(left), _head(right)
    ok = left == b_left and right == b_right
    return ok, f"p^0: lhs {left} vs {b_left}, rhs {right} vs {b_right}"
