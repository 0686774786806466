"""
:module: FOLCALC.data.ideal
:license: AGPL-3.0
:purpose:
    This module holds the :class:`~.Ideal` class, a finitely generated ideal
    of the rational polynomial ring with a write-once cached reduced Groebner
    basis, and the ideal-theoretic operations built on it:

     - membership and normal forms
     - quotients I : f, intersections and saturations I : J^infinity
     - Krull dimension from the leading-term ideal
     - vector space dimension of zero-dimensional quotients
     - local quotient dimensions at the origin by graded truncation
     - rational points of zero-dimensional ideals

    Groebner bases come from the Buchberger implementation in
    :mod:`sympy.polys.groebnertools` (normal selection strategy with the
    coprime and chain criteria). Elimination uses :class:`~.BlockOrder`
    with an auxiliary variable t in the first block.
"""
import itertools
import logging
from fractions import Fraction
from functools import lru_cache

from sympy import QQ
from sympy.polys.groebnertools import groebner
from sympy.polys.orderings import MonomialOrder, grevlex, lex
from sympy.polys.rings import PolyRing

from FOLCALC.data.poly import Poly, poly_ring, monomial_basis
from FOLCALC.util.errors import DimensionMismatchError
from FOLCALC.util.linalg import ExactLinearMap

Logger = logging.getLogger(__name__)

INFINITE = 'infinite'

ORDERS = {'grevlex': grevlex, 'lex': lex}


class BlockOrder(MonomialOrder):
    """Product of two graded reverse lexicographic orders; the first
    **nblock** variables are eliminated before the rest"""
    alias = 'blockgrevlex'
    is_global = True

    def __init__(self, nblock):
        self.nblock = nblock

    def __call__(self, monomial):
        return (grevlex(monomial[:self.nblock]), grevlex(monomial[self.nblock:]))

    def __eq__(self, other):
        return isinstance(other, BlockOrder) and other.nblock == self.nblock

    def __hash__(self):
        return hash((self.__class__.__name__, self.nblock))

    def __repr__(self):
        return f'BlockOrder({self.nblock})'


@lru_cache(maxsize=None)
def elimination_ring(nvars):
    """Ring QQ[t, x0, ..., x{n-1}] with t eliminated first"""
    return PolyRing(['t'] + [f'x{_i}' for _i in range(nvars)], QQ, BlockOrder(1))


class Ideal(object):
    """Finitely generated ideal of QQ[x0, ..., x{n-1}]

    :param generators: generating polynomials (zero generators are dropped)
    :type generators: list of :class:`~FOLCALC.data.poly.Poly`
    :param nvars: ambient dimension, needed only when **generators** is empty
        or all zero, defaults to None
    :type nvars: int, optional
    :param order: monomial order of the cached basis, 'grevlex' (default) or 'lex'
    :type order: str, optional
    """
    def __init__(self, generators, nvars=None, order='grevlex'):
        generators = list(generators)
        if not all(isinstance(_g, Poly) for _g in generators):
            raise TypeError('generators must be type Poly')
        if generators:
            dims = {_g.nvars for _g in generators}
            if len(dims) != 1:
                raise DimensionMismatchError(f'generators live in rings of dimension {sorted(dims)}')
            if nvars is not None and nvars != generators[0].nvars:
                raise DimensionMismatchError(
                    f'generators live in {generators[0].nvars} variables, not {nvars}')
            nvars = generators[0].nvars
        elif nvars is None:
            raise ValueError('nvars is required for an ideal without generators')
        if order not in ORDERS:
            raise ValueError(f'order "{order}" not supported. Use: {list(ORDERS)}')
        self.nvars = nvars
        self.order = order
        self.generators = tuple(_g for _g in generators if _g)
        self._basis = None

    @classmethod
    def unit(cls, nvars):
        return cls([Poly.one(nvars)])

    @classmethod
    def zero(cls, nvars):
        return cls([], nvars=nvars)

    @classmethod
    def maximal(cls, nvars, point=None):
        """Ideal of a rational point, the origin by default"""
        if point is None:
            return cls(Poly.variables(nvars))
        if len(point) != nvars:
            raise DimensionMismatchError(f'point needs {nvars} coordinates')
        return cls([_x - _c for _x, _c in zip(Poly.variables(nvars), point)])

    def __repr__(self):
        return f'Ideal({self.to_string()})'

    def __str__(self):
        return self.to_string()

    def to_string(self, names=None):
        return '(' + ', '.join(_g.to_string(names) for _g in self.generators) + ')'

    ###########################
    ## Groebner basis cache ##
    ###########################
    @property
    def ring(self):
        return poly_ring(self.nvars, ORDERS[self.order])

    def _reps(self):
        ring = self.ring
        return [_g.rep.set_ring(ring) for _g in self.generators]

    def groebner_basis(self):
        """Reduced, monic Groebner basis for the ideal's order, computed on
        first use and cached

        :returns: **basis** (*list* of :class:`~FOLCALC.data.poly.Poly`)
        """
        if self._basis is None:
            reps = self._reps()
            if reps:
                self._basis = tuple(groebner(reps, self.ring, method='buchberger'))
            else:
                self._basis = ()
            Logger.debug(f'groebner basis ({self.order}) of {len(reps)} generators has {len(self._basis)} elements')
        return [Poly(self.nvars, _g) for _g in self._basis]

    def _gb(self):
        self.groebner_basis()
        return self._basis

    def with_order(self, order):
        """Same ideal with a different cached order"""
        return Ideal(self.generators, nvars=self.nvars, order=order)

    def leading_monomials(self):
        return [_g.LM for _g in self._gb()]

    ################
    ## PREDICATES ##
    ################
    def is_zero(self):
        return len(self.generators) == 0

    def is_unit(self):
        return any(sum(_m) == 0 for _m in self.leading_monomials())

    def normal_form(self, poly):
        """Unique remainder of **poly** modulo the ideal for its order; zero
        iff **poly** is a member"""
        if poly.nvars != self.nvars:
            raise DimensionMismatchError(
                f'polynomial in {poly.nvars} variables reduced by an ideal in {self.nvars} variables')
        gb = self._gb()
        rep = poly.rep.set_ring(self.ring)
        if gb:
            rep = rep.rem(list(gb))
        return Poly(self.nvars, rep)

    def __contains__(self, poly):
        return not self.normal_form(poly)

    def contains(self, other):
        """True if every generator of **other** (an Ideal or Poly) lies in self"""
        if isinstance(other, Poly):
            return other in self
        if other.nvars != self.nvars:
            raise DimensionMismatchError('ideals live in different rings')
        return all(_g in self for _g in other.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.nvars == other.nvars and self.contains(other) and other.contains(self)

    def __hash__(self):
        return hash((self.nvars, self.with_order('grevlex')._gb()))

    ################
    ## ARITHMETIC ##
    ################
    def __add__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if other.nvars != self.nvars:
            raise DimensionMismatchError('ideals live in different rings')
        return Ideal(self.generators + other.generators, nvars=self.nvars)

    def __mul__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if other.nvars != self.nvars:
            raise DimensionMismatchError('ideals live in different rings')
        return Ideal([_a * _b for _a in self.generators for _b in other.generators], nvars=self.nvars)

    def intersection(self, other):
        """I cap J as the t-free part of t*I + (1-t)*J"""
        if other.nvars != self.nvars:
            raise DimensionMismatchError('ideals live in different rings')
        if self.is_zero() or other.is_zero():
            return Ideal.zero(self.nvars)
        ring = elimination_ring(self.nvars)
        t = ring.gens[0]

        def lift(poly):
            return ring.from_dict({(0,) + _m: _c for _m, _c in poly.terms()})

        seq = [t * lift(_g) for _g in self.generators]
        seq += [(ring.one - t) * lift(_g) for _g in other.generators]
        basis = groebner(seq, ring, method='buchberger')
        kept = [Poly(self.nvars, {_m[1:]: _c for _m, _c in _g.terms()})
                for _g in basis if all(_m[0] == 0 for _m in _g.keys())]
        Logger.debug(f'intersection: {len(basis)} elimination elements, {len(kept)} kept')
        return Ideal(kept, nvars=self.nvars)

    def quotient(self, poly):
        """I : f = (I cap (f)) / f"""
        if not isinstance(poly, Poly):
            raise TypeError('quotient is taken by type Poly')
        if not poly:
            raise ValueError('quotient by the zero polynomial')
        if poly.is_constant() or poly in self:
            if poly.is_constant():
                return Ideal(self.generators, nvars=self.nvars)
            return Ideal.unit(self.nvars)
        meet = self.intersection(Ideal([poly]))
        return Ideal([_g.divide(poly) for _g in meet.generators], nvars=self.nvars)

    def saturation(self, other):
        """I : J^infinity for an Ideal or Poly **other**

        For one polynomial g the quotient I : g is iterated until it stops
        growing; for an ideal the result is the intersection over its
        generators of the single-polynomial saturations.
        """
        if isinstance(other, Poly):
            if not other:
                raise ValueError('saturation by the zero polynomial')
            current = Ideal(self.generators, nvars=self.nvars)
            niter = 0
            while True:
                nxt = current.quotient(other)
                niter += 1
                if current.contains(nxt):
                    Logger.debug(f'saturation by {other} stable after {niter} quotients')
                    return current
                current = nxt
        if other.nvars != self.nvars:
            raise DimensionMismatchError('ideals live in different rings')
        if other.is_zero():
            raise ValueError('saturation by the zero ideal')
        if other.is_unit() or self.is_unit():
            return Ideal(self.generators, nvars=self.nvars)
        out = None
        for _g in other.generators:
            sat = self.saturation(_g)
            out = sat if out is None else out.intersection(sat)
        return out

    ##################
    ## DIMENSIONS ##
    ##################
    def krull_dimension(self):
        """Krull dimension of the quotient ring: the size of a largest set
        of variables containing the support of no leading monomial
        (-1 for the unit ideal)"""
        if self.is_zero():
            return self.nvars
        lms = self.leading_monomials()
        if any(sum(_m) == 0 for _m in lms):
            return -1
        supports = [frozenset(_i for _i, _e in enumerate(_m) if _e) for _m in lms]
        for size in range(self.nvars, -1, -1):
            for subset in itertools.combinations(range(self.nvars), size):
                chosen = set(subset)
                if not any(_s <= chosen for _s in supports):
                    return size
        return 0

    def standard_monomials(self):
        """Monomials outside the leading-term ideal of a zero-dimensional ideal

        :raises ValueError: the ideal is not zero-dimensional
        """
        if self.krull_dimension() > 0:
            raise ValueError('an ideal of positive dimension has infinitely many standard monomials')
        lms = self.leading_monomials()
        out = []
        degree = 0
        while True:
            layer = [_m for _m in monomial_basis(self.nvars, degree)
                     if not any(all(_a >= _b for _a, _b in zip(_m, _l)) for _l in lms)]
            if not layer:
                return out
            out += layer
            degree += 1

    def vs_dimension(self):
        """Vector space dimension of the quotient ring, or "infinite" """
        dim = self.krull_dimension()
        if dim < 0:
            return 0
        if dim > 0:
            return INFINITE
        return len(self.standard_monomials())

    def truncated_dimension(self, bound):
        """dim QQ[x] / (I + m^bound) where m is the maximal ideal of the origin"""
        codomain = [_m for _d in range(bound) for _m in monomial_basis(self.nvars, _d)]
        columns = []
        for gen in self.generators:
            order = gen.min_degree()
            if order >= bound:
                continue
            for _d in range(bound - order):
                for expv in monomial_basis(self.nvars, _d):
                    col = {}
                    for _m, _c in gen.terms():
                        mono = tuple(_a + _b for _a, _b in zip(_m, expv))
                        if sum(mono) < bound:
                            col[mono] = _c
                    columns.append(col)
        if not columns:
            return len(codomain)
        lmap = ExactLinearMap(list(range(len(columns))), codomain, columns)
        return len(codomain) - lmap.rank()

    def local_dimension(self, bound=30):
        """Dimension of the local quotient at the origin, certified by the
        truncated dimensions d_B stabilizing (d_B == d_{B+1}) before **bound**

        :returns: **dimension** (*int*) or "infinite" when no stabilization
            happens below **bound**
        """
        previous = self.truncated_dimension(1)
        for _b in range(2, bound + 1):
            current = self.truncated_dimension(_b)
            if current == previous:
                Logger.debug(f'local quotient dimension {current} certified at truncation {_b - 1}')
                return current
            previous = current
        Logger.warning(f'local quotient dimension did not stabilize below truncation bound {bound}')
        return INFINITE

    ##################
    ## SOLUTIONS ##
    ##################
    def rational_points(self):
        """All points with rational coordinates of a zero-dimensional ideal,
        read off a lexicographic basis by back substitution from the last
        variable

        :returns: **points** (*list* of *tuple* of :class:`~fractions.Fraction`), sorted
        :raises ValueError: the ideal is not zero-dimensional
        """
        if self.krull_dimension() > 0:
            raise ValueError('rational points are only enumerated for zero-dimensional ideals')
        if self.is_unit():
            return []
        basis = self.with_order('lex').groebner_basis()
        n = self.nvars
        line = poly_ring(1)
        partial = [()]
        for _j in range(n - 1, -1, -1):
            eliminants = [_g for _g in basis
                          if all(_m[_i] == 0 for _m in _g.monomials() for _i in range(_j))]
            extended = []
            for tail in partial:
                images = [Poly.zero(1)] * _j + [Poly.variable(1, 0)]
                images += [Poly.constant(1, _v) for _v in tail]
                uni = [_g.substitute(images) for _g in eliminants]
                uni = [_u for _u in uni if _u]
                if not uni:
                    # eliminants vanish identically; cannot occur for zero-dimensional input
                    continue
                gcd = uni[0]
                for _u in uni[1:]:
                    gcd = gcd.gcd(_u)
                for root in _linear_roots(gcd.rep.set_ring(line)):
                    extended.append((root,) + tail)
            partial = extended
        points = []
        for pt in partial:
            if all(not _g.evaluate(pt) for _g in self.generators):
                points.append(tuple(Fraction(int(_c.numerator), int(_c.denominator)) for _c in pt))
        return sorted(set(points))


def _linear_roots(rep):
    """Rational roots of a univariate polynomial from its linear factors"""
    if rep.is_ground:
        return []
    _, factors = rep.factor_list()
    roots = []
    for fac, _ in factors:
        if fac.degree() == 1:
            a = fac.coeff(fac.ring.gens[0])
            b = fac.coeff(1)
            roots.append(-b / a)
    return roots


#################################
# Module-level ideal operations #
#################################

def groebner_basis(ideal):
    return ideal.groebner_basis()


def normal_form(poly, ideal):
    return ideal.normal_form(poly)


def ideal_quotient(ideal, poly):
    return ideal.quotient(poly)


def saturation(ideal, other):
    return ideal.saturation(other)


def intersection(ideal, other):
    return ideal.intersection(other)


def krull_dimension(ideal):
    return ideal.krull_dimension()


def quotient_vs_dimension(ideal):
    return ideal.vs_dimension()


def rational_points(ideal):
    return ideal.rational_points()


def coefficient_ideal(form):
    """Ideal generated by the coefficients of a differential form"""
    return Ideal(form.coefficients(), nvars=form.nvars)
