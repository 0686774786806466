"""
:module: FOLCALC.util.input
:license: AGPL-3.0
:purpose:
    Provide defined methods for checking the validity of
    common input types to classes/methods in FOLCALC that require
    several case tests, and for parsing the command line spellings
    of degree windows, points and integer lists.
"""
from fractions import Fraction
from math import inf

import numpy as np


def bounded_value(x, minimum=None, maximum=None, inclusive=True):
    """Check if input value x falls in a specified numerical value range

    :param x: int-like or float-like value to assess
    :param minimum: minimum value for bounded interval, None or -inf for unbounded
    :param maximum: maximum value for bounded interval, None or inf for unbounded
    :param inclusive: include minimum and maximum values in interval?
    :returns: **status** (*bool*) -- is x in the specified bounds?
    """
    if minimum in [None, -inf, -np.inf]:
        minb = -np.inf
    elif np.isfinite(minimum):
        minb = minimum
    else:
        raise ValueError("specified minimum must be None, inf, or a finite value")

    if maximum in [None, inf, np.inf]:
        maxb = np.inf
    elif np.isfinite(maximum):
        maxb = maximum
    else:
        raise ValueError("specified maximum must be None, -inf or a finite value")

    if not inclusive:
        status = minb < x < maxb
    else:
        status = minb <= x <= maxb
    return status


def bounded_intlike(x, name="x", minimum=1, maximum=None, inclusive=True):
    """If input x is an int-like value in a specified bounded interval,
    return int(x), otherwise raise errors

    :param x: value to assess
    :param name: name of parameter to include in error messages
    :param minimum: minimum bound value - see :meth:`~.bounded_value`
    :param maximum: maximum bound value - see :meth:`~.bounded_value`
    :param inclusive: include min/max in bound?
    :returns: **int(x)**
    :raises TypeError: x is not int-like (bool counts as not int-like)
    :raises ValueError: x is int-like but out of bounds
    """
    if isinstance(x, bool) or not isinstance(x, (int, float, np.integer)):
        raise TypeError(f"{name} must be int-like")
    if not np.isfinite(x):
        raise ValueError(f"{name} must be finite")
    if int(x) != x:
        raise ValueError(f"{name} must be a whole number")
    if bounded_value(x, minimum=minimum, maximum=maximum, inclusive=inclusive):
        return int(x)
    else:
        if inclusive:
            raise ValueError(f"{name} must be in the bounds [{minimum}, {maximum}]")
        else:
            raise ValueError(f"{name} must be in the bounds ({minimum}, {maximum})")


def parse_degree_range(text, name='degrees'):
    """Parse a degree window spelled "A..B" (or a single "A")

    >>> parse_degree_range('0..3')
    [0, 1, 2, 3]

    :param text: degree window text
    :type text: str
    :returns: **degrees** (*list* of *int*) -- A, A+1, ..., B
    """
    if not isinstance(text, str):
        raise TypeError(f'{name} must be type str')
    parts = text.strip().split('..')
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f'{name} "{text}" is not of the form A..B')
    if lo < 0 or hi < lo:
        raise ValueError(f'{name} "{text}" must satisfy 0 <= A <= B')
    return list(range(lo, hi + 1))


def parse_int_list(text, name='k'):
    """Parse a comma delimited list of non-negative integers"""
    if isinstance(text, int):
        return [bounded_intlike(text, name=name, minimum=0)]
    try:
        values = [int(_t) for _t in str(text).split(',') if _t.strip() != '']
    except ValueError:
        raise ValueError(f'{name} "{text}" is not a comma delimited list of integers')
    if len(values) == 0:
        raise ValueError(f'{name} is empty')
    return [bounded_intlike(_v, name=name, minimum=0) for _v in values]


def parse_point(text, name='point'):
    """Parse a comma delimited list of exact rationals, e.g. "0,1/2,-3"

    :returns: **point** (*list* of *fractions.Fraction*)
    """
    if not isinstance(text, str):
        raise TypeError(f'{name} must be type str')
    try:
        point = [Fraction(_t.strip()) for _t in text.split(',')]
    except (ValueError, ZeroDivisionError):
        raise ValueError(f'{name} "{text}" is not a comma delimited list of rationals')
    return point
