"""
:module: FOLCALC.data.form
:license: AGPL-3.0
:purpose:
    This module holds the :class:`~.DiffForm` and :class:`~.VectorField`
    classes for polynomial differential forms and vector fields on affine
    n-space, and the exterior calculus operations between them:

     - :meth:`~.wedge` -- exterior product with shuffle signs
     - :meth:`~.exterior_derivative` -- d
     - :meth:`~.interior_product` -- i_v
     - :meth:`~.lie_derivative` -- L_v = i_v d + d i_v
     - :meth:`~.lie_bracket` -- [v, w]

    Forms are stored on strictly increasing index tuples only; the sign of
    any other ordering is absorbed when a coefficient is inserted.
    Grading follows deg x_i = deg dx_i, so a p-form whose coefficients are
    homogeneous of degree c has total degree c + p, and a vector field with
    homogeneous components of degree c has degree c - 1.
"""
import itertools
from functools import lru_cache

from FOLCALC.data.poly import Poly, monomial_basis, to_rational
from FOLCALC.util.errors import DimensionMismatchError


def _sort_indices(indices):
    """Sort a tuple of distinct indices, returning (sign, sorted tuple);
    sign is 0 when an index repeats"""
    if len(set(indices)) != len(indices):
        return 0, None
    idx = list(indices)
    sign = 1
    # insertion sort counting transpositions
    for _i in range(1, len(idx)):
        _j = _i
        while _j > 0 and idx[_j - 1] > idx[_j]:
            idx[_j - 1], idx[_j] = idx[_j], idx[_j - 1]
            sign = -sign
            _j -= 1
    return sign, tuple(idx)


@lru_cache(maxsize=None)
def index_tuples(nvars, degree):
    """Strictly increasing index tuples of length **degree** in lexicographic order"""
    return tuple(itertools.combinations(range(nvars), degree))


def form_basis_labels(nvars, degree, total_degree):
    """Labels (index tuple, monomial) spanning the homogeneous p-forms of
    the given total degree; empty when the coefficient degree is negative"""
    return [(_I, _m) for _I in index_tuples(nvars, degree)
            for _m in monomial_basis(nvars, total_degree - degree)]


def field_basis_labels(nvars, field_degree):
    """Labels (component index, monomial) spanning the homogeneous vector
    fields of the given degree (components of degree field_degree + 1)"""
    return [(_i, _m) for _i in range(nvars)
            for _m in monomial_basis(nvars, field_degree + 1)]


class DiffForm(object):
    """Polynomial differential p-form on n-space

    :param nvars: ambient dimension n
    :type nvars: int
    :param degree: form degree p, 0 <= p <= n
    :type degree: int
    :param coeffs: map index tuple -> :class:`~FOLCALC.data.poly.Poly`;
        unsorted tuples are sorted with the matching sign, tuples with a
        repeated index are dropped, defaults to None (zero form)
    :type coeffs: dict, optional
    """
    __slots__ = ('nvars', 'degree', 'coeffs')

    def __init__(self, nvars, degree, coeffs=None):
        if isinstance(degree, bool) or not isinstance(degree, int):
            raise TypeError('degree must be type int')
        if not 0 <= degree <= nvars:
            raise ValueError(f'form degree {degree} outside [0, {nvars}]')
        clean = {}
        if coeffs is not None:
            if not isinstance(coeffs, dict):
                raise TypeError('coeffs must be type dict')
            for indices, coeff in coeffs.items():
                indices = tuple(indices)
                if len(indices) != degree:
                    raise ValueError(f'index tuple {indices} does not have length {degree}')
                if any(not 0 <= _i < nvars for _i in indices):
                    raise IndexError(f'index tuple {indices} out of range for {nvars} variables')
                if not isinstance(coeff, Poly):
                    coeff = Poly.constant(nvars, coeff)
                elif coeff.nvars != nvars:
                    raise DimensionMismatchError(
                        f'coefficient in {coeff.nvars} variables for a form in {nvars} variables')
                sign, key = _sort_indices(indices)
                if sign == 0 or not coeff:
                    continue
                value = clean.get(key, Poly.zero(nvars)) + (coeff if sign > 0 else -coeff)
                if value:
                    clean[key] = value
                else:
                    clean.pop(key, None)
        object.__setattr__(self, 'nvars', nvars)
        object.__setattr__(self, 'degree', degree)
        object.__setattr__(self, 'coeffs', clean)

    def __setattr__(self, key, value):
        raise AttributeError('DiffForm is immutable')

    ###################
    ## CONSTRUCTORS ##
    ###################
    @classmethod
    def zero(cls, nvars, degree):
        return cls(nvars, degree)

    @classmethod
    def from_poly(cls, poly):
        """0-form carried by a polynomial"""
        return cls(poly.nvars, 0, {(): poly})

    @classmethod
    def basic(cls, nvars, indices, coeff=1):
        """coeff * dx_{i1} ^ ... ^ dx_{ip}"""
        return cls(nvars, len(indices), {tuple(indices): coeff})

    @classmethod
    def differential(cls, poly):
        """df for a polynomial f"""
        return cls(poly.nvars, 1, {(_i,): poly.derivative(_i) for _i in range(poly.nvars)})

    @classmethod
    def from_components(cls, components):
        """1-form sum(components[i] dx_i)"""
        nvars = components[0].nvars
        if len(components) != nvars:
            raise DimensionMismatchError(f'a 1-form in {nvars} variables needs {nvars} components')
        return cls(nvars, 1, {(_i,): _c for _i, _c in enumerate(components)})

    @classmethod
    def volume(cls, nvars):
        return cls.basic(nvars, tuple(range(nvars)))

    @classmethod
    def from_vector(cls, nvars, degree, labels, vector):
        """Build sum(vector[j] * monomial_j dx_{I_j}) over labels (I_j, monomial_j)"""
        coeffs = {}
        for (indices, expv), value in zip(labels, vector):
            if value:
                coeffs.setdefault(indices, {})[expv] = value
        return cls(nvars, degree, {_I: Poly(nvars, _t) for _I, _t in coeffs.items()})

    ######################
    ## DUNDER METHODS ##
    ######################
    def _check(self, other):
        if not isinstance(other, DiffForm):
            raise TypeError(f'expected DiffForm, got {type(other)}')
        if other.nvars != self.nvars:
            raise DimensionMismatchError(
                f'forms in {self.nvars} and {other.nvars} variables cannot be combined')

    def __add__(self, other):
        if not isinstance(other, DiffForm):
            return NotImplemented
        self._check(other)
        if other.degree != self.degree:
            raise ValueError(f'cannot add a {self.degree}-form and a {other.degree}-form')
        coeffs = dict(self.coeffs)
        for _I, _c in other.coeffs.items():
            coeffs[_I] = coeffs[_I] + _c if _I in coeffs else _c
        return DiffForm(self.nvars, self.degree, coeffs)

    def __neg__(self):
        return DiffForm(self.nvars, self.degree, {_I: -_c for _I, _c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, DiffForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        """Multiply by a :class:`~FOLCALC.data.poly.Poly` or a rational scalar"""
        if isinstance(other, DiffForm):
            return NotImplemented
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise DimensionMismatchError(
                    f'polynomial in {other.nvars} variables times a form in {self.nvars} variables')
            return DiffForm(self.nvars, self.degree, {_I: _c * other for _I, _c in self.coeffs.items()})
        try:
            value = to_rational(other)
        except TypeError:
            return NotImplemented
        return DiffForm(self.nvars, self.degree, {_I: _c.scale(value) for _I, _c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DiffForm):
            return NotImplemented
        return (self.nvars == other.nvars and self.degree == other.degree
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.nvars, self.degree, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f'DiffForm({self.nvars}, {self.degree}, {self.to_string()})'

    def __str__(self):
        return self.to_string()

    ##################
    ## PROPERTIES ##
    ##################
    def is_zero(self):
        return not self.coeffs

    def coefficient(self, indices):
        sign, key = _sort_indices(tuple(indices))
        if sign == 0:
            return Poly.zero(self.nvars)
        value = self.coeffs.get(key, Poly.zero(self.nvars))
        return value if sign > 0 else -value

    def coefficients(self):
        """Nonzero coefficients in lexicographic index-tuple order"""
        return [self.coeffs[_I] for _I in sorted(self.coeffs)]

    def components(self):
        """Coefficient list of a 1-form, one Poly per dx_i"""
        if self.degree != 1:
            raise ValueError('components are defined for 1-forms only')
        return [self.coefficient((_i,)) for _i in range(self.nvars)]

    def as_poly(self):
        if self.degree != 0:
            raise ValueError('only 0-forms convert to Poly')
        return self.coefficient(())

    def coefficient_degree(self):
        """Common homogeneous degree c of all coefficients, or None"""
        degrees = set()
        for _c in self.coeffs.values():
            deg = _c.homogeneous_degree()
            if deg is None:
                return None
            degrees.add(deg)
        if len(degrees) != 1:
            return None
        return degrees.pop()

    def total_degree(self):
        """c + p when all coefficients are homogeneous of one degree c"""
        deg = self.coefficient_degree()
        if deg is None:
            return None
        return deg + self.degree

    def is_homogeneous(self):
        return self.total_degree() is not None

    def min_coefficient_degree(self):
        degrees = [_c.min_degree() for _c in self.coeffs.values()]
        if not degrees:
            return None
        return min(degrees)

    def max_coefficient_degree(self):
        degrees = [_c.total_degree() for _c in self.coeffs.values()]
        if not degrees:
            return None
        return max(degrees)

    #################
    ## CALCULUS ##
    #################
    def wedge(self, other):
        return wedge(self, other)

    def d(self):
        return exterior_derivative(self)

    def contract(self, field):
        return interior_product(field, self)

    ##################
    ## OPERATIONS ##
    ##################
    def coefficient_jet(self, order):
        """Graded component of degree **order** of every coefficient"""
        return DiffForm(self.nvars, self.degree,
                        {_I: _c.graded_component(order) for _I, _c in self.coeffs.items()})

    def translate(self, point):
        """Coefficients moved so that **point** becomes the origin"""
        return DiffForm(self.nvars, self.degree,
                        {_I: _c.translate(point) for _I, _c in self.coeffs.items()})

    def evaluate(self, point):
        """Exact coefficient values at a point as {index tuple: rational}"""
        out = {}
        for _I, _c in self.coeffs.items():
            value = _c.evaluate(point)
            if value:
                out[_I] = value
        return out

    def vanishes_at(self, point):
        return not self.evaluate(point)

    def divide(self, poly):
        """Exact division of every coefficient by **poly**"""
        return DiffForm(self.nvars, self.degree,
                        {_I: _c.divide(poly) for _I, _c in self.coeffs.items()})

    def substitute(self, images):
        """Pull back by the polynomial map x_i -> images[i]: substitute the
        coefficients and replace each dx_i by d(images[i])"""
        if len(images) != self.nvars:
            raise DimensionMismatchError(
                f'pullback needs {self.nvars} images, got {len(images)}')
        target = images[0].nvars
        if self.degree > target:
            return DiffForm.zero(target, target)
        diffs = [DiffForm.differential(_s) for _s in images]
        out = DiffForm.zero(target, self.degree)
        for _I, _c in self.coeffs.items():
            term = DiffForm.from_poly(_c.substitute(images))
            for _i in _I:
                term = wedge(term, diffs[_i])
            out = out + term
        return out

    def coordinates(self):
        """Sparse coordinates {(index tuple, monomial): rational}"""
        out = {}
        for _I, _c in self.coeffs.items():
            for expv, value in _c.terms():
                out[(_I, expv)] = value
        return out

    ###############
    ## DISPLAY ##
    ###############
    def to_string(self, names=None):
        """Render as ``(c) * dx0^dx1 + ...`` in lexicographic index-tuple order"""
        if not self.coeffs:
            return '0'
        if self.degree == 0:
            return self.coeffs[()].to_string(names)
        if names is None:
            names = [f'x{_i}' for _i in range(self.nvars)]
        parts = []
        for _I in sorted(self.coeffs):
            basis = '^'.join(f'd{names[_i]}' for _i in _I)
            parts.append(f'({self.coeffs[_I].to_string(names)}) * {basis}')
        return ' + '.join(parts)


class VectorField(object):
    """Polynomial vector field sum(components[i] d/dx_i)

    :param components: one :class:`~FOLCALC.data.poly.Poly` per variable
    :type components: list
    """
    __slots__ = ('nvars', 'components')

    def __init__(self, components):
        components = list(components)
        if len(components) == 0:
            raise ValueError('a vector field needs at least one component')
        if not all(isinstance(_c, Poly) for _c in components):
            raise TypeError('components must be type Poly')
        nvars = components[0].nvars
        if len(components) != nvars or any(_c.nvars != nvars for _c in components):
            raise DimensionMismatchError(
                f'a vector field in {nvars} variables needs {nvars} components in {nvars} variables')
        object.__setattr__(self, 'nvars', nvars)
        object.__setattr__(self, 'components', tuple(components))

    def __setattr__(self, key, value):
        raise AttributeError('VectorField is immutable')

    ###################
    ## CONSTRUCTORS ##
    ###################
    @classmethod
    def zero(cls, nvars):
        return cls([Poly.zero(nvars)] * nvars)

    @classmethod
    def coordinate(cls, nvars, index):
        """d/dx_index"""
        return cls([Poly.one(nvars) if _i == index else Poly.zero(nvars) for _i in range(nvars)])

    @classmethod
    def from_vector(cls, nvars, labels, vector):
        """Build a field from coordinates over labels (component index, monomial)"""
        comps = [{} for _ in range(nvars)]
        for (index, expv), value in zip(labels, vector):
            if value:
                comps[index][expv] = value
        return cls([Poly(nvars, _t) for _t in comps])

    ######################
    ## DUNDER METHODS ##
    ######################
    def _check(self, other):
        if not isinstance(other, VectorField):
            raise TypeError(f'expected VectorField, got {type(other)}')
        if other.nvars != self.nvars:
            raise DimensionMismatchError(
                f'fields in {self.nvars} and {other.nvars} variables cannot be combined')

    def __add__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        self._check(other)
        return VectorField([_a + _b for _a, _b in zip(self.components, other.components)])

    def __neg__(self):
        return VectorField([-_c for _c in self.components])

    def __sub__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, VectorField):
            return NotImplemented
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise DimensionMismatchError('polynomial and field live in different rings')
            return VectorField([_c * other for _c in self.components])
        try:
            value = to_rational(other)
        except TypeError:
            return NotImplemented
        return VectorField([_c.scale(value) for _c in self.components])

    __rmul__ = __mul__

    def __call__(self, poly):
        """Apply the field as a derivation: v(f) = sum v_i df/dx_i"""
        if not isinstance(poly, Poly):
            raise TypeError('a vector field acts on type Poly')
        if poly.nvars != self.nvars:
            raise DimensionMismatchError('polynomial and field live in different rings')
        out = Poly.zero(self.nvars)
        for _i, comp in enumerate(self.components):
            if comp:
                out = out + comp * poly.derivative(_i)
        return out

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __bool__(self):
        return any(bool(_c) for _c in self.components)

    def __getitem__(self, index):
        return self.components[index]

    def __repr__(self):
        return f'VectorField({self.to_string()})'

    def __str__(self):
        return self.to_string()

    ##################
    ## PROPERTIES ##
    ##################
    def is_zero(self):
        return not bool(self)

    def field_degree(self):
        """c - 1 when all nonzero components are homogeneous of one degree c"""
        degrees = set()
        for _c in self.components:
            if not _c:
                continue
            deg = _c.homogeneous_degree()
            if deg is None:
                return None
            degrees.add(deg)
        if len(degrees) != 1:
            return None
        return degrees.pop() - 1

    def evaluate(self, point):
        return [_c.evaluate(point) for _c in self.components]

    def bracket(self, other):
        return lie_bracket(self, other)

    def coordinates(self):
        """Sparse coordinates {(component index, monomial): rational}"""
        out = {}
        for _i, _c in enumerate(self.components):
            for expv, value in _c.terms():
                out[(_i, expv)] = value
        return out

    def to_string(self, names=None):
        """Render as ``[c0, c1, ...]``"""
        return '[' + ', '.join(_c.to_string(names) for _c in self.components) + ']'


#####################
# Exterior calculus #
#####################

def euler_field(nvars):
    """The radial field R = sum x_i d/dx_i"""
    return VectorField(Poly.variables(nvars))


def wedge(alpha, beta):
    """Exterior product alpha ^ beta; the zero form of degree n when p + q > n"""
    alpha._check(beta)
    nvars = alpha.nvars
    degree = alpha.degree + beta.degree
    if degree > nvars:
        return DiffForm.zero(nvars, nvars)
    coeffs = {}
    for _I, _a in alpha.coeffs.items():
        for _J, _b in beta.coeffs.items():
            sign, key = _sort_indices(_I + _J)
            if sign == 0:
                continue
            term = _a * _b
            if sign < 0:
                term = -term
            coeffs[key] = coeffs[key] + term if key in coeffs else term
    return DiffForm(nvars, degree, coeffs)


def exterior_derivative(alpha):
    """d alpha; d of an n-form is the zero n-form"""
    nvars = alpha.nvars
    if alpha.degree == nvars:
        return DiffForm.zero(nvars, nvars)
    coeffs = {}
    for _I, _c in alpha.coeffs.items():
        for _i in range(nvars):
            if _i in _I:
                continue
            deriv = _c.derivative(_i)
            if not deriv:
                continue
            sign, key = _sort_indices((_i,) + _I)
            term = deriv if sign > 0 else -deriv
            coeffs[key] = coeffs[key] + term if key in coeffs else term
    return DiffForm(nvars, alpha.degree + 1, coeffs)


def interior_product(field, alpha):
    """Contraction i_v alpha; zero 0-form when alpha is a 0-form"""
    if not isinstance(field, VectorField):
        raise TypeError('field must be type VectorField')
    if not isinstance(alpha, DiffForm):
        raise TypeError('alpha must be type DiffForm')
    if field.nvars != alpha.nvars:
        raise DimensionMismatchError(
            f'field in {field.nvars} variables contracted with a form in {alpha.nvars} variables')
    nvars = alpha.nvars
    if alpha.degree == 0:
        return DiffForm.zero(nvars, 0)
    coeffs = {}
    for _I, _c in alpha.coeffs.items():
        for _k, _i in enumerate(_I):
            comp = field.components[_i]
            if not comp:
                continue
            key = _I[:_k] + _I[_k + 1:]
            term = comp * _c
            if _k % 2 == 1:
                term = -term
            coeffs[key] = coeffs[key] + term if key in coeffs else term
    return DiffForm(nvars, alpha.degree - 1, coeffs)


def lie_derivative(field, alpha):
    """L_v alpha = i_v d alpha + d i_v alpha"""
    nvars = alpha.nvars
    out = DiffForm.zero(nvars, alpha.degree)
    if alpha.degree < nvars:
        out = out + interior_product(field, exterior_derivative(alpha))
    if alpha.degree > 0:
        out = out + exterior_derivative(interior_product(field, alpha))
    return out


def lie_bracket(v, w):
    """[v, w]_i = v(w_i) - w(v_i)"""
    v._check(w)
    return VectorField([v(_wi) - w(_vi) for _vi, _wi in zip(v.components, w.components)])
