"""
:module: FOLCALC.data.polymap
:license: AGPL-3.0
:purpose:
    This module holds the :class:`~.PolyMap` class, a polynomial map from
    C^m either to affine C^n (n components) or to P^n (n+1 homogeneous
    sections of one common degree, not all zero).
"""
from FOLCALC.data.poly import Poly
from FOLCALC.data.ideal import Ideal
from FOLCALC.util.errors import DimensionMismatchError, NotHomogeneousError, DegeneratePullbackError


class PolyMap(object):
    """Polynomial map on C^m

    :param components: component polynomials (affine) or sections (projective)
    :type components: list of :class:`~FOLCALC.data.poly.Poly`
    :param projective: target is P^n given by n+1 sections, defaults to False
    :type projective: bool, optional
    :param name: label used in reports, defaults to None
    :type name: str, optional

    :var source_dim: m
    :var target_dim: n (the affine or projective dimension of the target)
    """
    def __init__(self, components, projective=False, name=None):
        components = list(components)
        if len(components) == 0:
            raise ValueError('a map needs at least one component')
        if not all(isinstance(_c, Poly) for _c in components):
            raise TypeError('components must be type Poly')
        dims = {_c.nvars for _c in components}
        if len(dims) != 1:
            raise DimensionMismatchError(f'components live in rings of dimension {sorted(dims)}')
        if projective:
            if len(components) < 2:
                raise ValueError('a map to P^n needs at least 2 sections')
            if not any(components):
                raise DegeneratePullbackError('all sections are zero')
            if not all(_c.is_homogeneous() for _c in components if _c):
                raise NotHomogeneousError('sections must be homogeneous')
            degrees = {_c.total_degree() for _c in components if _c}
            if len(degrees) != 1:
                raise NotHomogeneousError('sections must share one total degree')
        self.components = tuple(components)
        self.projective = bool(projective)
        self.name = name
        self.source_dim = components[0].nvars
        self.target_dim = len(components) - 1 if projective else len(components)

    def __repr__(self):
        kind = 'pmap' if self.projective else 'map'
        return f'PolyMap({kind}: {self.to_string()})'

    def __eq__(self, other):
        if not isinstance(other, PolyMap):
            return NotImplemented
        return self.components == other.components and self.projective == other.projective

    def __hash__(self):
        return hash((self.components, self.projective))

    def __len__(self):
        return len(self.components)

    def degree(self):
        """Common total degree of projective sections (max degree for affine maps)"""
        return max(_c.total_degree() for _c in self.components if _c) if any(self.components) else None

    def jacobian(self):
        """Rows [d s_i / d x_j] of the component Jacobian"""
        return [_c.gradient() for _c in self.components]

    def augmented_jacobian(self):
        """Rows [s_i, d s_i / d x_0, ..., d s_i / d x_{m-1}] used for projective targets"""
        return [[_c] + _c.gradient() for _c in self.components]

    def base_ideal(self):
        """Ideal (s_0, ..., s_n) of the base locus"""
        return Ideal(self.components, nvars=self.source_dim)

    def evaluate(self, point):
        return [_c.evaluate(point) for _c in self.components]

    def compose(self, poly):
        """Pull a polynomial on the target back along the map"""
        return poly.substitute(list(self.components))

    def to_string(self, names=None):
        return '(' + ', '.join(_c.to_string(names) for _c in self.components) + ')'
