"""
:module: FOLCALC.data.foliation
:license: AGPL-3.0
:purpose:
    This module holds the :class:`~.FoliationForm` class, a codimension-one
    foliation presented by a nonzero polynomial 1-form, with its pointwise
    and global predicates:

     - integrability (w ^ dw = 0), first integrals, symmetries
     - singular, Kupka and d-singular ideals
     - saturation by the gcd of the coefficients
     - projective descent (homogeneous with i_R w = 0) and cones
     - pullback by polynomial maps
     - multiplicity at a point and invariant hypersurfaces
     - logarithmic vector fields along a hypersurface

    Degrees follow deg x_i = deg dx_i throughout: a foliation of projective
    degree d on P^n is represented on C^{n+1} by a descended form with
    coefficient degree d + 1 and total degree d + 2.
"""
import logging
from fractions import Fraction

from FOLCALC.data.poly import Poly
from FOLCALC.data.form import (DiffForm, VectorField, euler_field, wedge,
                               exterior_derivative, interior_product,
                               lie_derivative, field_basis_labels)
from FOLCALC.data.ideal import Ideal, coefficient_ideal
from FOLCALC.util.errors import (DimensionMismatchError, PreconditionError,
                                 NonIntegrableError, NotHomogeneousError,
                                 NotDescendedError, DegeneratePullbackError)
from FOLCALC.util.linalg import ExactLinearMap

Logger = logging.getLogger(__name__)


class FoliationForm(object):
    """A codimension-one foliation given by a polynomial 1-form

    :param omega: nonzero 1-form
    :type omega: :class:`~FOLCALC.data.form.DiffForm`
    :param name: label used in reports, defaults to None
    :type name: str, optional
    :param is_cone: set by :meth:`~.cone`, defaults to False
    :type is_cone: bool, optional

    :var total_degree: common total degree k, or None if not homogeneous
    :var homogeneous: True when **total_degree** is defined
    :var descends: homogeneous and i_R w = 0
    :var saturated: the coefficients have gcd 1
    """
    def __init__(self, omega, name=None, is_cone=False):
        if not isinstance(omega, DiffForm):
            raise TypeError('omega must be type DiffForm')
        if omega.degree != 1:
            raise ValueError(f'a foliation is given by a 1-form, not a {omega.degree}-form')
        if not omega:
            raise ValueError('omega must be nonzero')
        self.omega = omega
        self.nvars = omega.nvars
        self.name = name
        self.is_cone = is_cone
        self._domega = None

    def __repr__(self):
        label = f'{self.name}: ' if self.name else ''
        return f'FoliationForm({label}{self.omega.to_string()})'

    def __eq__(self, other):
        if not isinstance(other, FoliationForm):
            return NotImplemented
        return self.omega == other.omega

    def __hash__(self):
        return hash(self.omega)

    def to_string(self, names=None):
        return self.omega.to_string(names)

    ###########
    ## FLAGS ##
    ###########
    @property
    def domega(self):
        if self._domega is None:
            self._domega = exterior_derivative(self.omega)
        return self._domega

    @property
    def total_degree(self):
        return self.omega.total_degree()

    @property
    def coefficient_degree(self):
        return self.omega.coefficient_degree()

    @property
    def homogeneous(self):
        return self.total_degree is not None

    @property
    def descends(self):
        return self.descends_to_projective()

    @property
    def saturated(self):
        divisor, _ = self.saturate()
        return divisor == 1

    @property
    def projective_degree(self):
        """Degree d of the foliation on P^{n-1} (coefficient degree - 1)"""
        if not self.descends:
            return None
        return self.coefficient_degree - 1

    def check_graded(self):
        """Return the total degree k of a homogeneous integrable form

        :raises NotHomogeneousError: the form is not homogeneous
        :raises NonIntegrableError: w ^ dw != 0
        """
        k = self.total_degree
        if k is None:
            raise NotHomogeneousError(f'{self._label()} is not homogeneous')
        if not self.is_integrable():
            raise NonIntegrableError(f'{self._label()} is not integrable')
        return k

    def _label(self):
        return f'form "{self.name}"' if self.name else 'form'

    ###################
    ## INTEGRABILITY ##
    ###################
    def integrability_witness(self):
        """The 3-form w ^ dw"""
        return wedge(self.omega, self.domega)

    def is_integrable(self):
        return not self.integrability_witness()

    def first_integral_check(self, numer, denom):
        """True iff w ^ (Q dP - P dQ) = 0, i.e. P/Q is a rational first integral"""
        if not denom:
            raise ValueError('the denominator Q of a first integral must be nonzero')
        if numer.nvars != self.nvars or denom.nvars != self.nvars:
            raise DimensionMismatchError('first integral and form live in different rings')
        eta = (DiffForm.differential(numer) * denom) - (DiffForm.differential(denom) * numer)
        return not wedge(self.omega, eta)

    def is_symmetry(self, field):
        """True iff L_v w ^ w = 0"""
        return not wedge(lie_derivative(field, self.omega), self.omega)

    def integrating_factor_from_symmetry(self, field):
        """h = i_v w for a symmetry v of an integrable form; h dw = dh ^ w
        is verified exactly before returning

        :raises NonIntegrableError: the form is not integrable
        :raises PreconditionError: v is not a symmetry
        """
        if not self.is_integrable():
            raise NonIntegrableError(f'{self._label()} is not integrable')
        if not self.is_symmetry(field):
            raise PreconditionError(f'{field} is not a symmetry of {self._label()}')
        h = interior_product(field, self.omega).as_poly()
        lhs = self.domega * h
        rhs = wedge(DiffForm.differential(h), self.omega)
        if lhs != rhs:
            raise PreconditionError(f'integrating factor identity fails for {field}')
        return h

    def weighted_homogeneity(self, field):
        """The rational c with L_v w = c w, or None if L_v w is not a multiple of w"""
        lie = lie_derivative(field, self.omega)
        coords = self.omega.coordinates()
        label = min(coords)
        ratio = lie.coordinates().get(label, 0) / coords[label]
        if lie != self.omega * ratio:
            return None
        return Fraction(int(ratio.numerator), int(ratio.denominator))

    ######################
    ## SINGULAR LOCI ##
    ######################
    def singular_ideal(self):
        """Ideal of the coefficients of w"""
        return coefficient_ideal(self.omega)

    def d_singular_ideal(self):
        """Ideal of the coefficients of dw (the zero ideal when dw = 0)"""
        return coefficient_ideal(self.domega)

    def kupka_ideal(self):
        """Sing(w) saturated by the coefficients of dw; its zero set is
        the closure of the Kupka set"""
        dsing = self.d_singular_ideal()
        if dsing.is_zero():
            return Ideal.unit(self.nvars)
        return self.singular_ideal().saturation(dsing)

    def saturate(self):
        """Divide out the gcd of the coefficients

        :returns:
            - **divisor** (*Poly*) -- monic gcd of the coefficients
            - **saturated** (*FoliationForm*) -- w / divisor
        """
        coeffs = self.omega.coefficients()
        divisor = coeffs[0]
        for _c in coeffs[1:]:
            divisor = divisor.gcd(_c)
        divisor = divisor.monic()
        if divisor == 1:
            return divisor, self
        return divisor, FoliationForm(self.omega.divide(divisor), name=self.name)

    def check_split_hypothesis(self):
        """Codimension of Sing(dw) and whether it reaches 3"""
        dsing = self.d_singular_ideal()
        codim = self.nvars - dsing.krull_dimension()
        return {'codim_sing_domega': codim, 'holds': codim >= 3}

    def moduli_membership(self):
        """Integrable, descended, codim Sing(w) >= 2, projective degree"""
        sing = self.singular_ideal()
        codim = self.nvars - sing.krull_dimension()
        descends = self.descends
        return {'integrable': self.is_integrable(),
                'descends': descends,
                'saturated': self.saturated,
                'codim_sing': codim,
                'codim_ok': codim >= 2,
                'total_degree': self.total_degree,
                'projective_degree': self.projective_degree}

    ################
    ## PROJECTIVE ##
    ################
    def descends_to_projective(self):
        if not self.homogeneous:
            return False
        return not interior_product(euler_field(self.nvars), self.omega)

    def cone(self):
        """The cone over the projective foliation: the same form, flagged

        :raises NotDescendedError: the form does not descend
        """
        if not self.descends_to_projective():
            raise NotDescendedError(f'{self._label()} does not descend to projective space')
        return FoliationForm(self.omega, name=self.name, is_cone=True)

    ###################
    ## LOCAL DATA ##
    ###################
    def multiplicity_at(self, point):
        """Vanishing order of the blown-up form along the exceptional divisor

        With w_nu the lowest jet of w at the point, the order is nu + 1 when
        i_R w_nu = 0 and nu otherwise.
        """
        local = self.omega.translate(point)
        nu = local.min_coefficient_degree()
        jet = local.coefficient_jet(nu)
        if interior_product(euler_field(self.nvars), jet):
            return nu
        return nu + 1

    def is_invariant_hypersurface(self, poly):
        """True iff every coefficient of w ^ df lies in (f)"""
        _check_hypersurface(poly, self.nvars)
        two_form = wedge(self.omega, DiffForm.differential(poly))
        return all(poly.divides(_c) for _c in two_form.coefficients())


def _check_hypersurface(poly, nvars):
    if not isinstance(poly, Poly):
        raise TypeError('hypersurface equation must be type Poly')
    if poly.nvars != nvars:
        raise DimensionMismatchError(f'hypersurface in {poly.nvars} variables, expected {nvars}')
    if poly.is_constant():
        raise ValueError('hypersurface equation must be non-constant')


#####################
# Module functions  #
#####################

def is_integrable(foliation):
    return foliation.is_integrable()


def singular_ideal(foliation):
    return foliation.singular_ideal()


def saturate_form(foliation):
    return foliation.saturate()


def pullback(sections, foliation, projective=True):
    """Pull a foliation back by a polynomial map and saturate the result

    :param sections: component polynomials on C^m, one per target variable,
        or a :class:`~FOLCALC.data.polymap.PolyMap`
    :type sections: list or PolyMap
    :param foliation: foliation on the target
    :type foliation: :class:`~.FoliationForm`
    :param projective: sections are homogeneous sections of one degree and
        the target foliation must descend, defaults to True
    :type projective: bool, optional
    :returns: **pulled** (*FoliationForm*) -- the saturated pullback
    :raises NotDescendedError: projective target with a non-descended form
    :raises NotHomogeneousError: projective sections not homogeneous of one degree
    :raises DegeneratePullbackError: all sections zero or the pullback vanishes
    """
    if hasattr(sections, 'components'):
        projective = sections.projective
        sections = list(sections.components)
    sections = list(sections)
    if len(sections) != foliation.nvars:
        raise DimensionMismatchError(
            f'pullback of a form on C^{foliation.nvars} needs {foliation.nvars} sections, got {len(sections)}')
    if not any(sections):
        raise DegeneratePullbackError('all sections are zero')
    if projective:
        if not foliation.descends_to_projective():
            raise NotDescendedError('pullback to a projective target needs a descended form')
        degrees = {_s.homogeneous_degree() for _s in sections if _s}
        if None in degrees or len(degrees) != 1:
            raise NotHomogeneousError('projective sections must be homogeneous of one common degree')
    pulled = foliation.omega.substitute(sections)
    if not pulled:
        raise DegeneratePullbackError('the pulled-back form vanishes identically')
    divisor, out = FoliationForm(pulled, name=foliation.name).saturate()
    Logger.debug(f'pullback divided by {divisor}')
    return out


def logarithmic_fields_basis(poly, field_degree):
    """Basis of the vector fields v with components of degree
    field_degree + 1 such that v(f) lies in (f)

    :returns: **basis** (*list* of :class:`~FOLCALC.data.form.VectorField`)
    """
    _check_hypersurface(poly, poly.nvars)
    if field_degree < -1:
        return []
    nvars = poly.nvars
    principal = Ideal([poly])
    labels = field_basis_labels(nvars, field_degree)
    columns = []
    for _i, expv in labels:
        image = Poly(nvars, {expv: 1}) * poly.derivative(_i)
        rem = principal.normal_form(image)
        columns.append(dict(rem.terms()))
    codomain = sorted({_m for _c in columns for _m in _c})
    lmap = ExactLinearMap(labels, codomain, columns)
    return [VectorField.from_vector(nvars, labels, _v) for _v in lmap.kernel()]


def is_logarithmic_field(field, ideal):
    """True iff v(g) lies in I for every generator g of I"""
    if isinstance(ideal, Poly):
        ideal = Ideal([ideal])
    return all(field(_g) in ideal for _g in ideal.generators)
