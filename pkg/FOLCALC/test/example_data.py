"""
:module: FOLCALC.test.example_data
:license: AGPL-3.0
:purpose:
    Seeded random instances shared by the test suites: polynomials, forms
    and vector fields with small integer coefficients, drawn from
    :func:`numpy.random.default_rng`.
"""
from pathlib import Path

import numpy as np

from FOLCALC.data.poly import Poly, monomial_basis
from FOLCALC.data.form import DiffForm, VectorField, index_tuples
from FOLCALC.catalog.entries import random_homogeneous

FILES = Path(__file__).parent / 'files'


def fixture_path(name):
    """Path of a DSL fixture under test/files"""
    return FILES / name


def fixture_text(name):
    with open(fixture_path(name), 'r', encoding='utf-8') as fid:
        return fid.read()


def fixture_names():
    return sorted(_p.name for _p in FILES.glob('*.fol'))


def random_poly(nvars, max_degree, rng, density=0.4, low=-3, high=3):
    """Polynomial of degree at most **max_degree**; each monomial is kept
    with probability **density**"""
    terms = {}
    for deg in range(max_degree + 1):
        for expv in monomial_basis(nvars, deg):
            if rng.random() < density:
                terms[expv] = int(rng.integers(low, high + 1))
    return Poly(nvars, terms)


def random_form(nvars, degree, max_degree, rng, density=0.4):
    """Form of the given degree with coefficients from :func:`~.random_poly`"""
    coeffs = {_I: random_poly(nvars, max_degree, rng, density=density)
              for _I in index_tuples(nvars, degree)}
    return DiffForm(nvars, degree, coeffs)


def random_homogeneous_form(nvars, degree, coeff_degree, rng):
    """Form whose coefficients are all homogeneous of **coeff_degree** (or zero)"""
    coeffs = {_I: random_homogeneous(nvars, coeff_degree, rng)
              for _I in index_tuples(nvars, degree)}
    return DiffForm(nvars, degree, coeffs)


def random_field(nvars, max_degree, rng, density=0.4):
    return VectorField([random_poly(nvars, max_degree, rng, density=density)
                        for _ in range(nvars)])


def random_quadric(nvars, rng):
    """Non-homogeneous quadratic with every monomial of degree 2 present"""
    quad = random_homogeneous(nvars, 2, rng, low=1, high=3)
    return quad + random_poly(nvars, 1, rng, density=0.6)


def random_nondegenerate_quadric(nvars, rng):
    """sum c_i x_i^2 + (off-diagonal terms) with an invertible symmetric
    matrix, built as a diagonally dominant integer matrix"""
    x = Poly.variables(nvars)
    out = Poly.zero(nvars)
    for _i in range(nvars):
        out = out + x[_i] ** 2 * int(rng.integers(3 * nvars, 4 * nvars))
        for _j in range(_i + 1, nvars):
            out = out + x[_i] * x[_j] * int(rng.integers(-1, 2))
    return out


def seeds(count, start=0):
    return [np.random.default_rng(start + _s) for _s in range(count)]
