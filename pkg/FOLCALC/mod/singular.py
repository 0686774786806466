"""
:module: FOLCALC.mod.singular
:license: AGPL-3.0
:purpose:
    Singularity classification and critical-set machinery:

     - :meth:`~.classify_point` -- NonSingular / Kupka / Morse / OtherSingular
     - :meth:`~.milnor_number` -- local quotient dimension of a Jacobian ideal
     - :meth:`~.critical_ideal` and :meth:`~.check_expected_dimension`
     - :meth:`~.tangency_ideal` and :meth:`~.tangency_analysis`
     - :meth:`~.check_generic_map`

    Pulse modules :class:`~.ClassifyMod` (points in, verdicts out) and
    :class:`~.CriticalMod` (ranks k in, dimension reports out) wrap the
    per-item operations.

    Maps to P^n are handled on the cone of sections: C_k is cut out by the
    (k+2)-minors of the matrix [s | Js], whose rank is the rank of d(pi)
    plus one away from the base locus.
"""
import itertools
import logging
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from FOLCALC.mod.base import BaseMod
from FOLCALC.data.poly import Poly, poly_ring, to_rational, rational_string
from FOLCALC.data.ideal import Ideal, INFINITE
from FOLCALC.data.foliation import FoliationForm, pullback
from FOLCALC.data.polymap import PolyMap
from FOLCALC.util.errors import DimensionMismatchError, PreconditionError
from FOLCALC.util.header import SingularityVerdict

Logger = logging.getLogger(__name__)


##########################
# Pointwise verdicts     #
##########################

def linear_jet_matrix(foliation, point):
    """A with A[i][j] the coefficient of x_j in w_i after moving **point** to the origin"""
    n = foliation.nvars
    local = foliation.omega.translate(point)
    rows = []
    for _i in range(n):
        coeff = local.coefficient((_i,))
        row = []
        for _j in range(n):
            expv = tuple(1 if _t == _j else 0 for _t in range(n))
            row.append(coeff.coefficient(expv))
        rows.append(row)
    return rows


def classify_point(foliation, point):
    """Classify the foliation at a rational point

    :param foliation: the foliation
    :type foliation: :class:`~FOLCALC.data.foliation.FoliationForm`
    :param point: rational coordinates
    :type point: list
    :returns: **verdict** (*SingularityVerdict*)
    """
    point = [to_rational(_c) for _c in point]
    if len(point) != foliation.nvars:
        raise DimensionMismatchError(f'point needs {foliation.nvars} coordinates, got {len(point)}')
    verdict = SingularityVerdict({'point': [rational_string(_c) for _c in point]})
    value = foliation.omega.evaluate(point)
    if value:
        verdict['class'] = 'NonSingular'
        verdict.evidence = {'omega_at_point': _render_values(value)}
        return verdict
    dvalue = foliation.domega.evaluate(point)
    if dvalue:
        verdict['class'] = 'Kupka'
        verdict.evidence = {'domega_at_point': _render_values(dvalue)}
        return verdict
    matrix = linear_jet_matrix(foliation, point)
    symmetric = all(matrix[_i][_j] == matrix[_j][_i]
                    for _i in range(len(matrix)) for _j in range(_i))
    det = DomainMatrix(matrix, (len(matrix), len(matrix)), QQ).det()
    verdict.evidence = {'jet_matrix': [[rational_string(_v) for _v in _r] for _r in matrix],
                        'symmetric': symmetric,
                        'det': rational_string(det)}
    verdict['class'] = 'Morse' if symmetric and det != 0 else 'OtherSingular'
    return verdict


def _render_values(values):
    return {'^'.join(str(_i) for _i in _I) if _I else '0': rational_string(_v)
            for _I, _v in sorted(values.items())}


def milnor_number(poly, point, bound=30):
    """Local quotient dimension of the Jacobian ideal of **poly** at **point**

    :returns: **mu** (*int* or "infinite")
    """
    local = poly.translate(point)
    jacobian = Ideal(local.gradient(), nvars=poly.nvars)
    return jacobian.local_dimension(bound=bound)


########################
# Critical sets        #
########################

def _minors(rows, size):
    """All size x size minors of a matrix of Poly entries"""
    if size == 0:
        return []
    nrows, ncols = len(rows), len(rows[0])
    if size > min(nrows, ncols):
        return []
    nvars = rows[0][0].nvars
    ring = poly_ring(nvars)
    dom = ring.to_domain()
    out = []
    for ridx in itertools.combinations(range(nrows), size):
        for cidx in itertools.combinations(range(ncols), size):
            entries = [[rows[_r][_c].rep for _c in cidx] for _r in ridx]
            det = DomainMatrix(entries, (size, size), dom).det()
            if det:
                out.append(Poly(nvars, det))
    return out


def _rank_range(polymap):
    return min(polymap.source_dim, polymap.target_dim)


def critical_ideal(polymap, k):
    """Ideal of the points where d(pi) has rank at most k

    :param polymap: the map
    :type polymap: :class:`~FOLCALC.data.polymap.PolyMap`
    :param k: rank bound, 0 <= k <= min(m, n)
    :type k: int
    :returns: **ideal** (*Ideal*) -- (k+1)-minors of the Jacobian, or the
        (k+2)-minors of [s | Js] for projective targets
    """
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError('k must be type int')
    top = _rank_range(polymap)
    if not 0 <= k <= top:
        raise ValueError(f'k={k} out of range [0, {top}]')
    if polymap.projective:
        minors = _minors(polymap.augmented_jacobian(), k + 2)
    else:
        minors = _minors(polymap.jacobian(), k + 1)
    Logger.debug(f'critical ideal C_{k}: {len(minors)} nonzero minors')
    return Ideal(minors, nvars=polymap.source_dim)


def check_expected_dimension(polymap, k, names=None):
    """Compare dim C_k with the bounds m - (m - k)(n - k) <= dim <= k

    :param names: variable names for rendering the generators, defaults to None (x0, x1, ...)
    :type names: list, optional
    :returns: **report** (*dict*) with keys k, dim, lower, upper, empty, holds,
        generators (reduced Groebner basis)
    """
    ideal = critical_ideal(polymap, k)
    m, n = polymap.source_dim, polymap.target_dim
    dim = ideal.krull_dimension()
    lower = m - (m - k) * (n - k)
    empty = dim < 0
    # C_k is the whole source once k reaches the largest possible rank
    holds = empty or k == _rank_range(polymap) or lower <= dim <= k
    if not holds:
        Logger.warning(f'dim C_{k} = {dim} outside [{lower}, {k}]')
    return {'k': k, 'dim': dim, 'lower': lower, 'upper': k,
            'empty': empty, 'holds': holds,
            'generators': [_g.to_string(names) for _g in ideal.groebner_basis()]}


def check_generic_map(polymap):
    """Transversality of the sections along the base locus: (s, maximal
    minors of Js) saturated by (x_0, ..., x_{m-1}) must be the unit ideal

    :returns: **report** (*dict*) with keys generic, base_dim
    """
    if not polymap.projective:
        raise PreconditionError('generic-map checks need a map to projective space')
    jac = polymap.jacobian()
    size = min(len(jac), polymap.source_dim)
    gens = list(polymap.components) + _minors(jac, size)
    ideal = Ideal(gens, nvars=polymap.source_dim)
    saturated = ideal.saturation(Ideal.maximal(polymap.source_dim))
    base = polymap.base_ideal()
    return {'generic': saturated.is_unit(),
            'base_dim': base.krull_dimension()}


########################
# Tangency             #
########################

def _tangency(polymap, foliation):
    pulled = pullback(polymap, foliation)
    sing = pulled.singular_ideal()
    removed = Ideal([_g.substitute(list(polymap.components))
                     for _g in foliation.singular_ideal().generators],
                    nvars=polymap.source_dim)
    if removed.is_zero():
        return Ideal.unit(polymap.source_dim), pulled
    return sing.saturation(removed), pulled


def tangency_ideal(polymap, foliation):
    """Sing(pi^* G) with the pulled-back Sing(G) removed by saturation

    :raises DegeneratePullbackError: the pulled-back form vanishes
    """
    return _tangency(polymap, foliation)[0]


def tangency_analysis(polymap, foliation, names=None):
    """Dimension, length and pointwise verdicts of the tangency scheme

    :returns: **report** (*dict*) with keys dim_tang, count_with_multiplicity,
        rational_points, points, consistent, generators
    """
    tang, pulled = _tangency(polymap, foliation)
    dim = tang.krull_dimension()
    count = tang.vs_dimension()
    points = []
    if dim == 0:
        for pt in tang.rational_points():
            verdict = classify_point(pulled, list(pt))
            points.append({'point': verdict.point, 'class': verdict['class']})
        if count != INFINITE and len(points) < count:
            Logger.warning(f'{count - len(points)} tangency points (with multiplicity) '
                           'are non-reduced or have no rational coordinates; left unclassified')
    return {'dim_tang': dim,
            'count_with_multiplicity': count,
            'rational_points': len(points),
            'points': points,
            'consistent': dim <= 0,
            'generators': [_g.to_string(names) for _g in tang.groebner_basis()]}


##################################
# ClassifyMod Class Definition   #
##################################

class ClassifyMod(BaseMod):
    """Pulse module producing a :class:`~FOLCALC.util.header.SingularityVerdict`
    per point popped from the input deque

    :param foliation: the foliation to classify
    :type foliation: :class:`~FOLCALC.data.foliation.FoliationForm`
    """
    def __init__(self, foliation, max_pulse_size=1, maxlen=None, name=None):
        super().__init__(max_pulse_size=max_pulse_size, maxlen=maxlen, name=name)
        if not isinstance(foliation, FoliationForm):
            raise TypeError('foliation must be type FoliationForm')
        self.foliation = foliation

    def run_unit_process(self, unit_input) -> SingularityVerdict:
        """Classify the foliation at the point **unit_input**

        POLYMORPHIC: last update with :class:`~.ClassifyMod`
        """
        return classify_point(self.foliation, unit_input)


##################################
# CriticalMod Class Definition   #
##################################

class CriticalMod(BaseMod):
    """Pulse module producing an expected-dimension report per rank bound
    k popped from the input deque

    :param polymap: the map
    :type polymap: :class:`~FOLCALC.data.polymap.PolyMap`
    """
    def __init__(self, polymap, names=None, max_pulse_size=1, maxlen=None, name=None):
        super().__init__(max_pulse_size=max_pulse_size, maxlen=maxlen, name=name)
        if not isinstance(polymap, PolyMap):
            raise TypeError('polymap must be type PolyMap')
        self.polymap = polymap
        self.names = names

    def run_unit_process(self, unit_input: int) -> dict:
        """Critical ideal dimension check at rank bound **unit_input**

        POLYMORPHIC: last update with :class:`~.CriticalMod`
        """
        return check_expected_dimension(self.polymap, unit_input, names=self.names)
