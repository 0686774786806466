"""
:module: FOLCALC.catalog.entries
:license: AGPL-3.0
:purpose:
    Constructors for reference foliations used as fixtures and oracles, and
    name lookup for the command line:

    ==================  ====================================================
    name                entry
    ==================  ====================================================
    morse:n             d(x_0^2 + ... + x_{n-1}^2) on C^n
    rational:p,q[,n]    q g df - p f dg for seeded random f, g on C^n (n=4)
    e3                  i_R i_X i_Y of the volume form on C^4
    e:n                 the e3 form pulled back to C^{n+1} by a linear projection
    tm:a,b,c,n,d        descended forms on C^4 with i_v w = 0 and L_v w = n w
    sl2q                3 g0 df0 - 2 f0 dg0 for the invariants of binary quartics
    ==================  ====================================================
"""
import logging
from math import comb, gcd

import numpy as np

from FOLCALC.data.poly import Poly, monomial_basis
from FOLCALC.data.form import (DiffForm, VectorField, euler_field, interior_product,
                               form_basis_labels)
from FOLCALC.data.foliation import FoliationForm, pullback
from FOLCALC.util.errors import NonIntegrableError, NotHomogeneousError, NotDescendedError
from FOLCALC.util.input import bounded_intlike, parse_int_list
from FOLCALC.util.linalg import ExactLinearMap

Logger = logging.getLogger(__name__)

DEFAULT_SEED = 0


class CatalogEntry(object):
    """A named reference foliation

    :param name: catalog name
    :type name: str
    :param foliation: the foliation
    :type foliation: :class:`~FOLCALC.data.foliation.FoliationForm`
    :param k: declared total degree
    :type k: int
    :param provenance: short note on where the entry comes from
    :type provenance: str
    :param projective: the entry is the cone of a projective foliation, defaults to True
    :type projective: bool, optional
    :raises NonIntegrableError: the form is not integrable
    :raises NotDescendedError: a projective entry does not descend
    :raises ValueError: the declared degree does not match the form
    """
    def __init__(self, name, foliation, k, provenance, projective=True):
        if not foliation.is_integrable():
            raise NonIntegrableError(f'catalog entry {name} is not integrable')
        if projective and not foliation.descends_to_projective():
            raise NotDescendedError(f'catalog entry {name} does not descend')
        if foliation.total_degree != k:
            raise ValueError(f'catalog entry {name} declares degree {k}, form has {foliation.total_degree}')
        self.name = name
        self.foliation = foliation
        self.nvars = foliation.nvars
        self.k = k
        self.provenance = provenance
        self.projective = projective

    def __repr__(self):
        return f'CatalogEntry({self.name}, n={self.nvars}, k={self.k})'

    def asdict(self):
        return {'name': self.name,
                'nvars': self.nvars,
                'k': self.k,
                'projective': self.projective,
                'provenance': self.provenance,
                'form': self.foliation.to_string()}


def random_homogeneous(nvars, degree, rng, low=-3, high=3):
    """Nonzero homogeneous polynomial with integer coefficients drawn from **rng**"""
    basis = monomial_basis(nvars, degree)
    while True:
        coeffs = rng.integers(low, high + 1, size=len(basis))
        if np.any(coeffs):
            return Poly(nvars, {_m: int(_c) for _m, _c in zip(basis, coeffs)})


#########################
# Catalog constructors  #
#########################

def morse_model(n):
    """d(x_0^2 + ... + x_{n-1}^2) on C^n"""
    n = bounded_intlike(n, name='n', minimum=1)
    square_sum = sum((_x ** 2 for _x in Poly.variables(n)), Poly.zero(n))
    omega = DiffForm.differential(square_sum)
    return CatalogEntry(f'morse:{n}', FoliationForm(omega, name=f'morse:{n}'), 2,
                        'Morse model d(sum x_i^2)', projective=False)


def rational_foliation(f, g, name=None):
    """q g df - p f dg for homogeneous f, g of degrees p, q

    :raises NotHomogeneousError: f or g is not homogeneous
    """
    p, q = f.homogeneous_degree(), g.homogeneous_degree()
    if p is None or q is None:
        raise NotHomogeneousError('rational foliations need homogeneous f and g')
    if p < 1 or q < 1:
        raise ValueError('f and g must have degree at least 1')
    omega = DiffForm.differential(f) * (g * q) - DiffForm.differential(g) * (f * p)
    name = name or f'rational:{p},{q}'
    return CatalogEntry(name, FoliationForm(omega, name=name), p + q,
                        f'rational first integral f^{q}/g^{p}')


def seeded_rational(p, q, n=4, seed=DEFAULT_SEED):
    """:meth:`~.rational_foliation` for seeded random f, g of degrees p, q on C^n"""
    rng = np.random.default_rng(seed)
    f = random_homogeneous(n, p, rng)
    g = random_homogeneous(n, q, rng)
    return rational_foliation(f, g, name=f'rational:{p},{q},{n}')


def e3_fields():
    """The fields X = sum (3 - 2i) z_i d/dz_i and Y = sum z_{i+1} d/dz_i on C^4"""
    z = Poly.variables(4)
    X = VectorField([z[_i] * (3 - 2 * _i) for _i in range(4)])
    Y = VectorField([z[1], z[2], z[3], Poly.zero(4)])
    return X, Y


def exceptional_e3():
    """w = i_R i_X i_Y (dz0 ^ dz1 ^ dz2 ^ dz3) on C^4"""
    X, Y = e3_fields()
    R = euler_field(4)
    omega = interior_product(R, interior_product(X, interior_product(Y, DiffForm.volume(4))))
    for label, field in [('R', R), ('X', X), ('Y', Y)]:
        if interior_product(field, omega):
            raise NotDescendedError(f'e3 form is not annihilated by {label}')
    return CatalogEntry('e3', FoliationForm(omega, name='e3'), 4,
                        'split foliation spanned by R, X, Y with [X, Y] = -2Y')


def exceptional(n):
    """The e3 form pulled back to C^{n+1} by z_j = x_j (j < 3),
    z_3 = x_3 + ... + x_n; e:3 is e3 itself"""
    n = bounded_intlike(n, name='n', minimum=3)
    base = exceptional_e3()
    if n == 3:
        return base
    x = Poly.variables(n + 1)
    sections = x[:3] + [sum(x[3:], Poly.zero(n + 1))]
    pulled = pullback(sections, base.foliation)
    return CatalogEntry(f'e:{n}', FoliationForm(pulled.omega, name=f'e:{n}'), 4,
                        'e3 pulled back by a linear projection')


def tm_family(a, b, c, n, d, nsamples=3, seed=DEFAULT_SEED):
    """Descended 1-forms on C^4 with coefficient degree d + 1 satisfying
    i_v w = 0 and L_v w = n w for v = a x0 d/dx0 + b x1 d/dx1 + c x2 d/dx2

    The linear conditions are solved exactly; every basis member and
    **nsamples** seeded rational combinations are kept when integrable.

    :returns: **entries** (*list* of *CatalogEntry*), possibly empty
    """
    a, b, c = [bounded_intlike(_v, name='weight', minimum=0) for _v in (a, b, c)]
    n = bounded_intlike(n, name='n', minimum=0)
    d = bounded_intlike(d, name='d', minimum=1)
    if not a < b < c:
        raise ValueError('weights must satisfy 0 <= a < b < c')
    if gcd(gcd(a, b), c) != 1:
        raise ValueError('weights must be coprime as a triple')
    weights = (a, b, c, 0)
    nvars = 4
    labels = [(_I, _m) for _I, _m in form_basis_labels(nvars, 1, d + 2)
              if sum(_w * _e for _w, _e in zip(weights, _m)) + weights[_I[0]] == n]
    name = f'tm:{a},{b},{c},{n},{d}'
    if not labels:
        Logger.info(f'{name}: no monomial forms of weight {n}')
        return []
    R = euler_field(nvars)
    v = VectorField([Poly.variable(nvars, _i) * weights[_i] for _i in range(3)] + [Poly.zero(nvars)])
    columns = []
    for indices, expv in labels:
        mono = DiffForm.basic(nvars, indices, Poly(nvars, {expv: 1}))
        col = {('R', _m): _c for _m, _c in interior_product(R, mono).as_poly().terms()}
        col.update({('v', _m): _c for _m, _c in interior_product(v, mono).as_poly().terms()})
        columns.append(col)
    codomain = [(_t, _m) for _t in ('R', 'v') for _m in monomial_basis(nvars, d + 2)]
    kernel = ExactLinearMap(labels, codomain, columns).kernel()
    rng = np.random.default_rng(seed)
    candidates = list(kernel)
    if len(kernel) > 1:
        for _ in range(nsamples):
            weights_s = rng.integers(-3, 4, size=len(kernel))
            candidates.append([sum(int(_w) * _v[_j] for _w, _v in zip(weights_s, kernel))
                               for _j in range(len(labels))])
    entries = []
    for _e, vec in enumerate(candidates):
        omega = DiffForm.from_vector(nvars, 1, labels, vec)
        if not omega:
            continue
        fol = FoliationForm(omega, name=f'{name}#{_e}')
        if not fol.is_integrable():
            Logger.warning(f'{fol.name} fails integrability and is dropped')
            continue
        entries.append(CatalogEntry(fol.name, fol, d + 2, 'weighted family with i_v w = 0'))
    Logger.info(f'{name}: kernel of dimension {len(kernel)}, {len(entries)} integrable entries')
    return entries


##########################
# Binary quartics        #
##########################

def transvectant(F, G, k, x_index, y_index):
    """k-th transvectant of two forms in the variables x, y"""
    out = Poly.zero(F.nvars)
    for _i in range(k + 1):
        dF, dG = F, G
        for _ in range(k - _i):
            dF = dF.derivative(x_index)
        for _ in range(_i):
            dF = dF.derivative(y_index)
            dG = dG.derivative(x_index)
        for _ in range(k - _i):
            dG = dG.derivative(y_index)
        term = dF * dG * comb(k, _i)
        out = out - term if _i % 2 else out + term
    return out


def quartic_invariants():
    """Degree-2 and degree-3 invariants f0, g0 of binary quartics
    sum C(4,i) a_i x^{4-i} y^i, as monic polynomials in a_0, ..., a_4"""
    a = Poly.variables(7)[:5]
    x, y = Poly.variable(7, 5), Poly.variable(7, 6)
    F = sum((a[_i] * comb(4, _i) * x ** (4 - _i) * y ** _i for _i in range(5)), Poly.zero(7))
    hessian = transvectant(F, F, 2, 5, 6)
    images = Poly.variables(5) + [Poly.zero(5), Poly.zero(5)]
    f0 = transvectant(F, F, 4, 5, 6).substitute(images).monic()
    g0 = transvectant(F, hessian, 4, 5, 6).substitute(images).monic()
    return f0, g0


def sl2_fields():
    """H, E, F acting on the coefficients a_0, ..., a_4"""
    a = Poly.variables(5)
    zero = Poly.zero(5)
    H = VectorField([a[_i] * (4 - 2 * _i) for _i in range(5)])
    E = VectorField([zero] + [a[_i - 1] * _i for _i in range(1, 5)])
    F = VectorField([a[_i + 1] * (4 - _i) for _i in range(4)] + [zero])
    return H, E, F


def sl2_quartics():
    """w0 = 3 g0 df0 - 2 f0 dg0 on the space of binary quartics"""
    f0, g0 = quartic_invariants()
    entry = rational_foliation(f0, g0, name='sl2q')
    for field in sl2_fields():
        if interior_product(field, entry.foliation.omega):
            raise NotDescendedError('sl2q form is not annihilated by the sl2 fields')
    entry.provenance = 'invariants of binary quartics; f0^3/g0^2 is a first integral'
    return entry


###################
# Name lookup     #
###################

def lookup(name):
    """Catalog entries by command line name

    :returns: **entries** (*list* of *CatalogEntry*)
    :raises KeyError: unknown name
    """
    name = name.strip()
    head, _, args = name.partition(':')
    if head == 'morse' and args:
        return [morse_model(parse_int_list(args, name='n')[0])]
    if head == 'rational' and args:
        vals = parse_int_list(args, name='rational')
        if len(vals) not in (2, 3):
            raise ValueError('rational needs p,q or p,q,n')
        return [seeded_rational(*vals)]
    if head == 'e3' and not args:
        return [exceptional_e3()]
    if head == 'e' and args:
        return [exceptional(parse_int_list(args, name='n')[0])]
    if head == 'tm' and args:
        vals = parse_int_list(args, name='tm')
        if len(vals) != 5:
            raise ValueError('tm needs a,b,c,n,d')
        return tm_family(*vals)
    if head == 'sl2q' and not args:
        return [sl2_quartics()]
    raise KeyError(f'unknown catalog entry "{name}". Use: morse:n, rational:p,q[,n], e3, e:n, tm:a,b,c,n,d, sl2q')
