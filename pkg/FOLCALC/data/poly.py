"""
:module: FOLCALC.data.poly
:license: AGPL-3.0
:purpose:
    This module holds the :class:`~.Poly` class, an immutable sparse
    multivariate polynomial with exact rational coefficients, and helpers
    for graded monomial bases.

    Polynomials in n variables live in a cached :class:`~sympy.polys.rings.PolyRing`
    over QQ with generators x0, ..., x{n-1} and graded lexicographic order.
    Display names are a rendering concern only: two polynomials are equal
    if they share the ambient dimension and the same term map.

    Grading follows deg x_i = 1. Monomials are exponent tuples.
"""
import itertools
from fractions import Fraction
from functools import lru_cache

from sympy import QQ
from sympy.polys.rings import PolyRing, PolyElement
from sympy.polys.orderings import grlex

from FOLCALC.util.errors import DimensionMismatchError


@lru_cache(maxsize=None)
def poly_ring(nvars, order=grlex):
    """Return the cached rational polynomial ring in **nvars** variables

    :param nvars: number of variables, at least 1
    :type nvars: int
    :param order: monomial order, defaults to graded lexicographic
    :type order: sympy.polys.orderings.MonomialOrder, optional
    :returns: **ring** (*sympy.polys.rings.PolyRing*)
    """
    if not isinstance(nvars, int) or isinstance(nvars, bool):
        raise TypeError('nvars must be type int')
    if nvars < 1:
        raise ValueError('nvars must be g.e. 1')
    return PolyRing([f'x{_i}' for _i in range(nvars)], QQ, order)


def to_rational(value):
    """Convert an int, :class:`~fractions.Fraction`, rational string or
    QQ element into a QQ element

    :raises TypeError: unsupported input type (floats are rejected)
    """
    if isinstance(value, bool):
        raise TypeError('bool is not a rational')
    if isinstance(value, QQ.dtype):
        return value
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        frac = Fraction(value.strip())
        return QQ(frac.numerator, frac.denominator)
    if hasattr(value, 'numerator') and hasattr(value, 'denominator') and not isinstance(value, float):
        return QQ(int(value.numerator), int(value.denominator))
    raise TypeError(f'cannot convert type {type(value)} to an exact rational')


def rational_string(value):
    """Render a QQ element as "3" or "-1/2" """
    num, den = int(value.numerator), int(value.denominator)
    if den == 1:
        return f'{num}'
    return f'{num}/{den}'


@lru_cache(maxsize=None)
def monomial_basis(nvars, degree):
    """All monomials of total degree **degree** in **nvars** variables in
    descending graded lexicographic order

    >>> monomial_basis(2, 2)
    ((2, 0), (1, 1), (0, 2))

    :returns: **basis** (*tuple* of exponent *tuple*) with C(n+l-1, l) members;
        empty for negative degree
    """
    if nvars < 1:
        raise ValueError('nvars must be g.e. 1')
    if degree < 0:
        return ()
    basis = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        expv = [0] * nvars
        for _i in combo:
            expv[_i] += 1
        basis.append(tuple(expv))
    return tuple(basis)


def monomial_string(expv, names=None):
    """Render an exponent tuple as "x0^2*x1" ("1" for the unit monomial)"""
    if names is None:
        names = [f'x{_i}' for _i in range(len(expv))]
    parts = []
    for name, exp in zip(names, expv):
        if exp == 1:
            parts.append(name)
        elif exp > 1:
            parts.append(f'{name}^{exp}')
    if not parts:
        return '1'
    return '*'.join(parts)


class Poly(object):
    """Immutable sparse polynomial with exact rational coefficients

    :param nvars: ambient dimension n
    :type nvars: int
    :param terms: map exponent tuple -> rational coefficient, or a
        :class:`~sympy.polys.rings.PolyElement` of the matching ring,
        defaults to None (zero polynomial)
    :type terms: dict or PolyElement, optional
    """
    __slots__ = ('nvars', 'rep')

    def __init__(self, nvars, terms=None):
        ring = poly_ring(nvars)
        if terms is None:
            rep = ring.zero
        elif isinstance(terms, PolyElement):
            if terms.ring != ring:
                rep = ring.from_dict(dict(terms))
            else:
                rep = terms.copy()
        elif isinstance(terms, dict):
            clean = {}
            for expv, coeff in terms.items():
                expv = tuple(int(_e) for _e in expv)
                if len(expv) != nvars:
                    raise DimensionMismatchError(f'monomial {expv} does not have {nvars} exponents')
                if any(_e < 0 for _e in expv):
                    raise ValueError(f'monomial {expv} has negative exponents')
                coeff = to_rational(coeff)
                if coeff:
                    clean[expv] = clean.get(expv, QQ.zero) + coeff
            rep = ring.from_dict({_k: _v for _k, _v in clean.items() if _v})
        else:
            raise TypeError('terms must be type dict, PolyElement or None')
        object.__setattr__(self, 'nvars', nvars)
        object.__setattr__(self, 'rep', rep)

    def __setattr__(self, key, value):
        raise AttributeError('Poly is immutable')

    ###################
    ## CONSTRUCTORS ##
    ###################
    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, value):
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars):
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars, index):
        if not 0 <= index < nvars:
            raise IndexError(f'variable index {index} out of range for {nvars} variables')
        expv = [0] * nvars
        expv[index] = 1
        return cls(nvars, {tuple(expv): 1})

    @classmethod
    def variables(cls, nvars):
        return [cls.variable(nvars, _i) for _i in range(nvars)]

    @classmethod
    def from_vector(cls, nvars, basis, vector):
        """Build sum(vector[i] * basis[i]) for a list of exponent tuples"""
        return cls(nvars, {_m: _c for _m, _c in zip(basis, vector) if _c})

    def _new(self, rep):
        return Poly(self.nvars, rep)

    ######################
    ## DUNDER METHODS ##
    ######################
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise DimensionMismatchError(
                    f'polynomials in {self.nvars} and {other.nvars} variables cannot be combined')
            return other.rep
        try:
            return poly_ring(self.nvars)(to_rational(other))
        except TypeError:
            return None

    def __add__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return self._new(self.rep + rep)

    __radd__ = __add__

    def __sub__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return self._new(self.rep - rep)

    def __rsub__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return self._new(rep - self.rep)

    def __neg__(self):
        return self._new(-self.rep)

    def __mul__(self, other):
        rep = self._coerce(other)
        if rep is None:
            return NotImplemented
        return self._new(self.rep * rep)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if isinstance(exponent, bool) or not isinstance(exponent, int):
            raise TypeError('exponent must be type int')
        if exponent < 0:
            raise ValueError('exponent must be non-negative')
        return self._new(self.rep ** exponent)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.rep == other.rep
        try:
            return self.rep == poly_ring(self.nvars)(to_rational(other))
        except TypeError:
            return NotImplemented

    def __ne__(self, other):
        out = self.__eq__(other)
        if out is NotImplemented:
            return out
        return not out

    def __hash__(self):
        return hash((self.nvars, frozenset(self.rep.items())))

    def __bool__(self):
        return bool(self.rep)

    def __repr__(self):
        return f'Poly({self.nvars}, {self.to_string()})'

    def __str__(self):
        return self.to_string()

    def __reduce__(self):
        return (Poly, (self.nvars, dict(self.rep)))

    ##################
    ## PROPERTIES ##
    ##################
    def is_zero(self):
        return not self.rep

    def is_constant(self):
        return all(sum(_m) == 0 for _m in self.rep.keys())

    def terms(self):
        """(exponent tuple, coefficient) pairs in descending graded lex order"""
        return self.rep.terms()

    def monomials(self):
        return [_m for _m, _ in self.terms()]

    def coefficient(self, expv):
        return self.rep.get(tuple(expv), QQ.zero)

    def constant_term(self):
        return self.coefficient((0,) * self.nvars)

    def total_degree(self):
        """Maximum total degree of the terms; None for the zero polynomial"""
        if not self.rep:
            return None
        return max(sum(_m) for _m in self.rep.keys())

    def min_degree(self):
        """Minimum total degree of the terms; None for the zero polynomial"""
        if not self.rep:
            return None
        return min(sum(_m) for _m in self.rep.keys())

    def homogeneous_degree(self):
        """Common total degree of all terms, or None if the terms do not
        share one degree (or the polynomial is zero)"""
        degrees = {sum(_m) for _m in self.rep.keys()}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_homogeneous(self):
        return self.homogeneous_degree() is not None

    def leading_coefficient(self):
        if not self.rep:
            return QQ.zero
        return self.rep.LC

    ##################
    ## OPERATIONS ##
    ##################
    def graded_component(self, degree):
        """Sum of the terms of total degree exactly **degree**"""
        if degree < 0:
            raise ValueError('degree must be non-negative')
        return Poly(self.nvars, {_m: _c for _m, _c in self.rep.items() if sum(_m) == degree})

    def jet(self, order):
        """Sum of the terms of total degree at most **order**"""
        return Poly(self.nvars, {_m: _c for _m, _c in self.rep.items() if sum(_m) <= order})

    def derivative(self, index):
        """Formal partial derivative with respect to x_index"""
        if isinstance(index, bool) or not isinstance(index, int):
            raise TypeError('index must be type int')
        if not 0 <= index < self.nvars:
            raise IndexError(f'variable index {index} out of range for {self.nvars} variables')
        ring = poly_ring(self.nvars)
        return self._new(self.rep.diff(ring.gens[index]))

    def gradient(self):
        return [self.derivative(_i) for _i in range(self.nvars)]

    def scale(self, value):
        return self._new(self.rep * to_rational(value))

    def substitute(self, images):
        """Compose with a polynomial map: replace x_i by images[i]

        :param images: one :class:`~.Poly` per variable, all in the same target ring
        :type images: list
        :returns: **composed** (*Poly*) in the target ring
        """
        if len(images) != self.nvars:
            raise DimensionMismatchError(
                f'substitution needs {self.nvars} images, got {len(images)}')
        if not all(isinstance(_p, Poly) for _p in images):
            raise TypeError('images must be type Poly')
        target = images[0].nvars
        if any(_p.nvars != target for _p in images):
            raise DimensionMismatchError('substitution images live in different rings')
        ring = poly_ring(target)
        powers = [{0: ring.one} for _ in images]
        out = ring.zero
        for expv, coeff in self.rep.items():
            term = ring(coeff)
            for _i, exp in enumerate(expv):
                if exp == 0:
                    continue
                cache = powers[_i]
                if exp not in cache:
                    cache[exp] = images[_i].rep ** exp
                term = term * cache[exp]
            out += term
        return Poly(target, out)

    def evaluate(self, point):
        """Exact value at a rational point"""
        point = [to_rational(_c) for _c in point]
        if len(point) != self.nvars:
            raise DimensionMismatchError(f'point needs {self.nvars} coordinates, got {len(point)}')
        value = QQ.zero
        for expv, coeff in self.rep.items():
            term = coeff
            for _c, exp in zip(point, expv):
                if exp:
                    term *= _c ** exp
            value += term
        return value

    def translate(self, point):
        """Return p(x + point), moving **point** to the origin"""
        point = [to_rational(_c) for _c in point]
        if len(point) != self.nvars:
            raise DimensionMismatchError(f'point needs {self.nvars} coordinates, got {len(point)}')
        if not any(point):
            return self
        images = [Poly.variable(self.nvars, _i) + _c for _i, _c in enumerate(point)]
        return self.substitute(images)

    def gcd(self, other):
        """Greatest common divisor normalized to leading coefficient 1
        (gcd(p, 0) is p made monic, gcd(0, 0) is 0)"""
        rep = self._coerce(other)
        if rep is None:
            raise TypeError('gcd needs a Poly or a rational')
        g = self.rep.gcd(rep)
        if g:
            g = g.monic()
        return self._new(g)

    def monic(self):
        """Scale to leading coefficient 1 (zero stays zero)"""
        if not self.rep:
            return self
        return self._new(self.rep.monic())

    def divide(self, other):
        """Exact division; raises :class:`ValueError` on a nonzero remainder"""
        rep = self._coerce(other)
        if not rep:
            raise ZeroDivisionError('polynomial division by zero')
        (quot,), rem = self.rep.div([rep])
        if rem:
            raise ValueError(f'{other} does not divide {self}')
        return self._new(quot)

    def divides(self, other):
        """True if self divides **other** exactly"""
        if not self.rep:
            return not other
        rep = self._coerce(other)
        _, rem = rep.div([self.rep])
        return not rem

    def remainder(self, other):
        """Remainder of division by a single polynomial (linear in self)"""
        rep = self._coerce(other)
        if not rep:
            raise ZeroDivisionError('polynomial division by zero')
        _, rem = self.rep.div([rep])
        return self._new(rem)

    def coordinates(self, basis):
        """Coefficients of self over a list of exponent tuples"""
        return [self.coefficient(_m) for _m in basis]

    ###############
    ## DISPLAY ##
    ###############
    def to_string(self, names=None):
        """Render in descending graded lex order with explicit ``*`` and ``^``,
        e.g. ``3*x0^2*x1 - 1/2*x2``"""
        if not self.rep:
            return '0'
        out = ''
        for _e, (expv, coeff) in enumerate(self.terms()):
            negative = coeff < 0
            mag = -coeff if negative else coeff
            mono = monomial_string(expv, names)
            if mono == '1':
                body = rational_string(mag)
            elif mag == 1:
                body = mono
            else:
                body = f'{rational_string(mag)}*{mono}'
            if _e == 0:
                out = f'-{body}' if negative else body
            else:
                out += f' - {body}' if negative else f' + {body}'
        return out
