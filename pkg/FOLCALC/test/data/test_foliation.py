"""
:module: FOLCALC.test.data.test_foliation
:license: AGPL-3.0
"""
from fractions import Fraction

import pytest

from FOLCALC.data.poly import Poly
from FOLCALC.data.form import DiffForm, VectorField, euler_field, wedge, lie_bracket
from FOLCALC.data.ideal import Ideal
from FOLCALC.data.polymap import PolyMap
from FOLCALC.data.foliation import (FoliationForm, is_integrable, singular_ideal, saturate_form,
                                    pullback, logarithmic_fields_basis, is_logarithmic_field)
from FOLCALC.util.errors import (PreconditionError, NonIntegrableError, NotHomogeneousError,
                                 NotDescendedError, DegeneratePullbackError)
from FOLCALC.test.example_data import random_poly, seeds


def rotation(n=2):
    """x0 dx1 - x1 dx0 in n variables"""
    x = Poly.variables(n)
    return FoliationForm(DiffForm.basic(n, (1,), x[0]) - DiffForm.basic(n, (0,), x[1]))


def exact(f):
    return FoliationForm(DiffForm.differential(f))


class TestConstruction:
    def test_rejects_bad_forms(self):
        with pytest.raises(ValueError):
            FoliationForm(DiffForm.volume(2))
        with pytest.raises(ValueError):
            FoliationForm(DiffForm.zero(2, 1))
        with pytest.raises(TypeError):
            FoliationForm(Poly.variable(2, 0))

    def test_flags(self):
        fol = rotation()
        assert fol.total_degree == 2
        assert fol.coefficient_degree == 1
        assert fol.homogeneous and fol.descends and fol.saturated
        assert fol.projective_degree == 0

    def test_check_graded(self):
        x, y = Poly.variables(2)
        assert rotation().check_graded() == 2
        with pytest.raises(NotHomogeneousError):
            FoliationForm(DiffForm.basic(2, (0,)) + DiffForm.basic(2, (1,), x)).check_graded()
        x, y, z = Poly.variables(3)
        bad = FoliationForm(DiffForm.from_components([Poly.zero(3), x, z]))
        with pytest.raises(NonIntegrableError):
            bad.check_graded()


class TestIntegrability:
    def test_product_form(self):
        x, y, z = Poly.variables(3)
        f, g = x * y + z, x ** 2 - y * z ** 3
        omega = DiffForm.differential(g) * f
        assert is_integrable(FoliationForm(omega))

    def test_two_variables(self):
        assert rotation().is_integrable()

    def test_witness(self):
        x, y, z = Poly.variables(3)
        fol = FoliationForm(DiffForm.from_components([Poly.zero(3), x, z]))
        assert not fol.is_integrable()
        assert fol.integrability_witness() == DiffForm.volume(3) * z


class TestSingularIdeal:
    def test_examples(self):
        assert singular_ideal(rotation()) == Ideal.maximal(2)
        x, y, z = Poly.variables(3)
        assert singular_ideal(exact(x ** 2 + y ** 2 + z ** 2)) == Ideal.maximal(3)
        x, y = Poly.variables(2)
        sing = singular_ideal(exact(x ** 3 + y ** 3))
        assert sing == Ideal([x ** 2, y ** 2])
        assert sing.vs_dimension() == 4

    def test_kupka(self):
        kupka = rotation(3).kupka_ideal()
        assert kupka == Ideal(Poly.variables(3)[:2])
        x, y, z = Poly.variables(3)
        assert exact(x ** 2 + y ** 2 + z ** 2).kupka_ideal().is_unit()

    def test_split_hypothesis(self):
        report = rotation(3).check_split_hypothesis()
        assert report['holds']
        x, y, z = Poly.variables(3)
        report = FoliationForm(DiffForm.basic(3, (2,), x * y)).check_split_hypothesis()
        assert report == {'codim_sing_domega': 2, 'holds': False}


class TestSaturate:
    def test_common_factor(self):
        x, y = Poly.variables(2)
        fol = FoliationForm(DiffForm.from_components([x, x]))
        divisor, sat = saturate_form(fol)
        assert divisor == x
        assert sat.omega == DiffForm.from_components([Poly.one(2), Poly.one(2)])

    def test_idempotent(self):
        fol = rotation()
        divisor, sat = fol.saturate()
        assert divisor == 1
        assert sat is fol

    def test_product_factor(self):
        x, y = Poly.variables(2)
        fol = FoliationForm(DiffForm.from_components([x ** 2 * y, x * y ** 2]))
        divisor, sat = fol.saturate()
        assert divisor == x * y
        assert sat.omega == DiffForm.from_components([x, y])
        assert not fol.saturated


class TestDescent:
    def test_examples(self):
        assert rotation().descends
        assert not FoliationForm(DiffForm.basic(2, (0,))).descends
        x, y, z = Poly.variables(3)
        f, g = x ** 2 + y * z, x ** 3 + y ** 3 + z ** 3
        omega = DiffForm.differential(f) * g * 3 - DiffForm.differential(g) * f * 2
        fol = FoliationForm(omega)
        assert fol.descends
        assert fol.total_degree == 5
        assert fol.projective_degree == 3

    def test_cone(self):
        assert rotation().cone().is_cone
        with pytest.raises(NotDescendedError):
            FoliationForm(DiffForm.basic(2, (0,))).cone()


class TestPullback:
    def test_identity(self):
        fol = rotation(3)
        assert pullback(Poly.variables(3), fol) == fol

    def test_rational_first_integral_form(self):
        x = Poly.variables(3)
        f, g = x[0] ** 2 + x[1], x[2] - x[1] ** 2
        target = FoliationForm(DiffForm.basic(2, (0,), Poly.variable(2, 1))
                               - DiffForm.basic(2, (1,), Poly.variable(2, 0)))
        pulled = pullback([f, g], target, projective=False)
        expected = DiffForm.differential(f) * g - DiffForm.differential(g) * f
        assert not wedge(pulled.omega, expected)
        assert pulled.is_integrable()

    def test_projective_saturates(self):
        x0, x1 = Poly.variables(2)
        pulled = pullback(PolyMap([x0 ** 2, x1 ** 2], projective=True), rotation())
        assert pulled.omega == (DiffForm.basic(2, (1,), x0) - DiffForm.basic(2, (0,), x1)) * 2
        assert pulled.descends

    def test_errors(self):
        x0, x1 = Poly.variables(2)
        with pytest.raises(NotDescendedError):
            pullback([x0, x1], FoliationForm(DiffForm.basic(2, (0,))))
        with pytest.raises(NotHomogeneousError):
            pullback([x0, x1 ** 2], rotation())
        with pytest.raises(DegeneratePullbackError):
            pullback([Poly.zero(2), Poly.zero(2)], rotation())
        with pytest.raises(DegeneratePullbackError):
            pullback([x0, x0], rotation())


class TestSymmetries:
    def test_radial_symmetry(self):
        assert rotation().is_symmetry(euler_field(2))
        assert not rotation().is_symmetry(VectorField.coordinate(2, 0))

    def test_integrating_factor(self):
        x, y, z = Poly.variables(3)
        f, g = x ** 2 + y * z, x ** 3 + y ** 3 + z ** 3
        fol = FoliationForm(DiffForm.differential(g) * f)
        assert fol.integrating_factor_from_symmetry(euler_field(3)) == 3 * f * g

    def test_integrating_factor_errors(self):
        with pytest.raises(PreconditionError):
            rotation().integrating_factor_from_symmetry(VectorField.coordinate(2, 0))
        x, y, z = Poly.variables(3)
        bad = FoliationForm(DiffForm.from_components([Poly.zero(3), x, z]))
        with pytest.raises(NonIntegrableError):
            bad.integrating_factor_from_symmetry(euler_field(3))

    def test_weighted_homogeneity(self):
        assert rotation().weighted_homogeneity(euler_field(2)) == 2
        assert rotation().weighted_homogeneity(VectorField.coordinate(2, 0)) is None
        x, y = Poly.variables(2)
        v = VectorField([x, y * 2])
        fol = exact(x ** 2 + y)
        assert fol.weighted_homogeneity(v) == Fraction(2)


class TestFirstIntegrals:
    def test_exact(self):
        x, y, z = Poly.variables(3)
        f = x * y - z ** 2
        assert exact(f).first_integral_check(f, Poly.one(3))

    def test_wrong_candidate(self):
        x, y = Poly.variables(2)
        fol = FoliationForm(DiffForm.basic(2, (1,), x))
        assert not fol.first_integral_check(x, Poly.one(2))

    def test_rational(self):
        x, y = Poly.variables(2)
        f, g = x ** 2, y ** 3
        fol = FoliationForm(DiffForm.differential(f) * g * 3 - DiffForm.differential(g) * f * 2)
        assert fol.first_integral_check(f ** 3, g ** 2)
        assert not fol.first_integral_check(f, g)
        with pytest.raises(ValueError):
            fol.first_integral_check(f, Poly.zero(2))


class TestLocalData:
    def test_multiplicity(self):
        x, y, z = Poly.variables(3)
        assert exact(x ** 2 + y ** 2 + z ** 2).multiplicity_at([0, 0, 0]) == 1
        assert exact(x ** 3 + y ** 3 + z ** 3).multiplicity_at([0, 0, 0]) == 2
        assert rotation().multiplicity_at([0, 0]) == 2
        assert rotation().multiplicity_at([1, 0]) == 0

    def test_invariant_hypersurface(self):
        x, y = Poly.variables(2)
        fol = FoliationForm(DiffForm.from_components([y, -x]))
        assert fol.is_invariant_hypersurface(x)
        assert not fol.is_invariant_hypersurface(x - 1)
        assert rotation().is_invariant_hypersurface(x ** 2 + y ** 2)
        assert exact(x ** 2 + y ** 2).is_invariant_hypersurface(x ** 2 + y ** 2 - 1)
        with pytest.raises(ValueError):
            fol.is_invariant_hypersurface(Poly.one(2))

    def test_moduli_membership(self):
        report = rotation(3).moduli_membership()
        assert report == {'integrable': True, 'descends': True, 'saturated': True,
                          'codim_sing': 2, 'codim_ok': True, 'total_degree': 2,
                          'projective_degree': 0}


class TestLogarithmicFields:
    def test_coordinate_cross(self):
        x, y, z = Poly.variables(3)
        basis = logarithmic_fields_basis(x * y * z, 0)
        assert len(basis) == 3
        for v in basis:
            assert is_logarithmic_field(v, x * y * z)

    def test_quadric(self):
        x, y, z = Poly.variables(3)
        f = x ** 2 + y ** 2 + z ** 2
        # rotations plus the radial field
        assert len(logarithmic_fields_basis(f, 0)) == 4
        assert logarithmic_fields_basis(f, -2) == []

    def test_bracket_of_logarithmic_fields(self):
        x, y, z = Poly.variables(3)
        f = x ** 2 + y ** 2 + z ** 2
        basis = logarithmic_fields_basis(f, 0) + logarithmic_fields_basis(f, 1)
        for v in basis:
            for w in basis:
                assert is_logarithmic_field(lie_bracket(v, w), Ideal([f]))


def scaling_fields(nvars):
    """x_i d/dx_i for each coordinate"""
    x = Poly.variables(nvars)
    zero = Poly.zero(nvars)
    return [VectorField([x[_i] if _j == _i else zero for _j in range(nvars)])
            for _i in range(nvars)]


class TestHyperplaneBrackets:
    """Fields tangent to Z = V(x) on C^3, i.e. v(x) in (x)"""
    NFIELDS = 100

    def test_logarithmic_brackets_stay_logarithmic(self):
        x, y, z = Poly.variables(3)
        for rng in seeds(self.NFIELDS, start=300):
            a, b, c = (random_poly(3, 2, rng) for _ in range(3))
            v = VectorField([x * a, b, c])
            assert is_logarithmic_field(v, x)
            for w in scaling_fields(3):
                assert is_logarithmic_field(lie_bracket(v, w), x)

    def test_other_fields_fail_some_bracket(self):
        x, y, z = Poly.variables(3)
        for rng in seeds(self.NFIELDS, start=500):
            a, b, c, e, f = (random_poly(3, 2, rng) for _ in range(5))
            # constant term 1 modulo x keeps v(x) outside (x)
            v = VectorField([x * a + Poly.one(3) + y * b + z * c, e, f])
            assert not is_logarithmic_field(v, x)
            assert not all(is_logarithmic_field(lie_bracket(v, w), x)
                           for w in scaling_fields(3))
