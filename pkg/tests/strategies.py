"""Shared hypothesis strategies."""

from fractions import Fraction

from gmpy2 import mpq
from hypothesis import strategies as st


def rationals(max_num=12, max_den=12, nonzero=True):
    nums = st.integers(-max_num, max_num)
    if nonzero:
        nums = nums.filter(lambda n: n != 0)
    return st.builds(lambda n, d: mpq(n, d), nums, st.integers(1, max_den))


def bases():
    """Rational q with 0 < |q| < 1."""
    return st.sampled_from([Fraction(1, 2), Fraction(1, 3), Fraction(-1, 2), Fraction(2, 5), Fraction(-3, 7)]).map(
        lambda f: mpq(f.numerator, f.denominator)
    )


def coeff_lists(order, nonzero_head=False):
    head = rationals(9, 9, nonzero=nonzero_head)
    tail = st.lists(rationals(9, 9, nonzero=False), min_size=order - 1, max_size=order - 1)
    return st.builds(lambda h, t: [h] + t, head, tail)
