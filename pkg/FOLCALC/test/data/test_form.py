"""
:module: FOLCALC.test.data.test_form
:license: AGPL-3.0
:purpose:
    Worked examples for the exterior calculus plus seeded law checks
    (d^2 = 0, Leibniz, graded commutativity, Cartan's formula against the
    component formula for Lie derivatives, Jacobi, the Euler identity).
"""
import itertools

import pytest

from FOLCALC.data.poly import Poly
from FOLCALC.data.form import (DiffForm, VectorField, wedge, exterior_derivative,
                               interior_product, lie_derivative, lie_bracket, euler_field)
from FOLCALC.catalog.entries import e3_fields
from FOLCALC.util.errors import DimensionMismatchError
from FOLCALC.test.example_data import (random_form, random_field, random_poly,
                                       random_homogeneous_form, seeds)


def dx(n, i):
    return DiffForm.basic(n, (i,))


class TestDiffForm:
    def test_sorted_storage(self):
        form = DiffForm(3, 2, {(1, 0): Poly.one(3), (0, 0): Poly.one(3)})
        assert form.coeffs == {(0, 1): Poly.constant(3, -1)}

    def test_degree_range(self):
        with pytest.raises(ValueError):
            DiffForm(2, 3)
        with pytest.raises(ValueError):
            DiffForm(2, 1, {(0, 1): 1})

    def test_total_degree(self):
        x, y = Poly.variables(2)
        omega = DiffForm.from_components([y, -x])
        assert omega.coefficient_degree() == 1
        assert omega.total_degree() == 2
        assert DiffForm.from_components([y, x ** 2]).total_degree() is None

    def test_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            dx(2, 0) + dx(3, 0)


class TestWedge:
    def test_examples(self):
        x, y = Poly.variables(2)
        assert not wedge(dx(2, 0), dx(2, 0))
        assert wedge(dx(2, 0), dx(2, 1)) == -wedge(dx(2, 1), dx(2, 0))
        lhs = wedge(dx(2, 1) * x, dx(2, 0) * y)
        assert lhs == DiffForm.basic(2, (0, 1), -x * y)

    def test_overflow_is_zero_top_form(self):
        out = wedge(DiffForm.volume(2), dx(2, 0))
        assert out.degree == 2 and not out


class TestExteriorDerivative:
    def test_examples(self):
        x, y = Poly.variables(2)
        assert exterior_derivative(DiffForm.from_poly(x * y)) == dx(2, 0) * y + dx(2, 1) * x
        omega = dx(2, 1) * x - dx(2, 0) * y
        assert exterior_derivative(omega) == DiffForm.volume(2) * 2

    def test_top_form(self):
        out = exterior_derivative(DiffForm.volume(3) * Poly.variable(3, 0))
        assert out.degree == 3 and not out


class TestInteriorProduct:
    def test_examples(self):
        n = 3
        R = euler_field(n)
        for _i in range(n):
            assert interior_product(R, dx(n, _i)).as_poly() == Poly.variable(n, _i)
        assert interior_product(VectorField.coordinate(2, 0), DiffForm.volume(2)) == dx(2, 1)
        x, y = Poly.variables(2)
        assert not interior_product(euler_field(2), dx(2, 1) * x - dx(2, 0) * y)

    def test_zero_form(self):
        out = interior_product(euler_field(2), DiffForm.from_poly(Poly.variable(2, 0)))
        assert out.degree == 0 and not out


class TestLieDerivative:
    def test_examples(self):
        x, y = Poly.variables(2)
        R = euler_field(2)
        assert lie_derivative(R, dx(2, 1) * x) == dx(2, 1) * x * 2
        omega = dx(2, 1) * x - dx(2, 0) * y
        assert lie_derivative(VectorField.coordinate(2, 0), omega) == dx(2, 1)

    def test_top_form(self):
        R = euler_field(2)
        assert lie_derivative(R, DiffForm.volume(2)) == DiffForm.volume(2) * 2


class TestLieBracket:
    def test_examples(self):
        x = Poly.variable(1, 0)
        d = VectorField.coordinate(1, 0)
        assert lie_bracket(d, VectorField([x])) == d
        v = VectorField([x ** 2])
        assert not lie_bracket(v, v)

    def test_split_fields(self):
        # [v, w]_i = v(w_i) - w(v_i) gives [X, Y] = -2Y
        X, Y = e3_fields()
        assert lie_bracket(X, Y) == Y * -2
        assert lie_bracket(Y, X) == Y * 2


#########################
# Seeded law checks     #
#########################

NLAW = 500


def component_lie_derivative(v, alpha):
    """(L_v a)_j = sum_i v_i da_j/dx_i + a_i dv_i/dx_j for a 1-form"""
    n = alpha.nvars
    comps = []
    for _j in range(n):
        out = Poly.zero(n)
        for _i in range(n):
            out = out + v[_i] * alpha.coefficient((_j,)).derivative(_i)
            out = out + alpha.coefficient((_i,)) * v[_i].derivative(_j)
        comps.append(out)
    return DiffForm.from_components(comps)


def law_instances():
    for _s, rng in enumerate(seeds(NLAW)):
        n = 2 + _s % 4
        yield rng, n


class TestLaws:
    def test_d_squared(self):
        for rng, n in law_instances():
            p = int(rng.integers(0, n))
            alpha = random_form(n, p, 4, rng)
            assert not exterior_derivative(exterior_derivative(alpha))

    def test_leibniz(self):
        for rng, n in law_instances():
            p, q = int(rng.integers(0, n)), int(rng.integers(0, n))
            a, b = random_form(n, p, 3, rng), random_form(n, q, 3, rng)
            lhs = exterior_derivative(wedge(a, b))
            rhs = wedge(exterior_derivative(a), b)
            rhs = rhs + wedge(a, exterior_derivative(b)) * (-1) ** p
            if p + q + 1 <= n:
                assert lhs == rhs
            else:
                assert not lhs

    def test_graded_commutativity(self):
        for rng, n in law_instances():
            p, q = int(rng.integers(0, n + 1)), int(rng.integers(0, n + 1))
            a, b = random_form(n, p, 3, rng), random_form(n, q, 3, rng)
            assert wedge(a, b) == wedge(b, a) * (-1) ** (p * q)

    def test_cartan_against_components(self):
        for rng, n in law_instances():
            v = random_field(n, 3, rng)
            alpha = random_form(n, 1, 3, rng)
            assert lie_derivative(v, alpha) == component_lie_derivative(v, alpha)

    def test_contraction_squares_to_zero(self):
        for rng, n in law_instances():
            v = random_field(n, 2, rng)
            alpha = random_form(n, 2, 3, rng)
            assert not interior_product(v, interior_product(v, alpha))

    def test_lie_contraction_commutator(self):
        # L_v i_w - i_w L_v = i_[v,w]
        for rng, n in law_instances():
            v, w = random_field(n, 2, rng), random_field(n, 2, rng)
            alpha = random_form(n, 2, 2, rng)
            lhs = lie_derivative(v, interior_product(w, alpha)) - interior_product(w, lie_derivative(v, alpha))
            assert lhs == interior_product(lie_bracket(v, w), alpha)

    def test_jacobi(self):
        for rng, n in law_instances():
            u, v, w = [random_field(n, 2, rng) for _ in range(3)]
            total = (lie_bracket(u, lie_bracket(v, w)) + lie_bracket(v, lie_bracket(w, u))
                     + lie_bracket(w, lie_bracket(u, v)))
            assert not total

    def test_bracket_anticommutes(self):
        for rng, n in law_instances():
            v, w = random_field(n, 3, rng), random_field(n, 3, rng)
            assert lie_bracket(v, w) == -lie_bracket(w, v)

    def test_field_as_derivation(self):
        for rng, n in law_instances():
            v = random_field(n, 2, rng)
            f, g = random_poly(n, 3, rng), random_poly(n, 3, rng)
            assert v(f * g) == v(f) * g + f * v(g)

    def test_euler_identity(self):
        for rng, n in law_instances():
            c = int(rng.integers(0, 4))
            omega = random_homogeneous_form(n, 1, c, rng)
            assert lie_derivative(euler_field(n), omega) == omega * (c + 1)

    def test_pullback_commutes_with_d(self):
        for rng, n in law_instances():
            alpha = random_form(n, 1, 2, rng)
            images = [random_poly(n, 2, rng) for _ in range(n)]
            lhs = exterior_derivative(alpha.substitute(images))
            rhs = exterior_derivative(alpha).substitute(images)
            assert lhs == rhs


class TestEvaluation:
    def test_translate_and_evaluate(self):
        x, y = Poly.variables(2)
        omega = dx(2, 0) * (x - 1) + dx(2, 1) * y
        assert omega.vanishes_at([1, 0])
        assert not omega.vanishes_at([0, 0])
        local = omega.translate([1, 0])
        assert local == dx(2, 0) * x + dx(2, 1) * y

    def test_pairs_of_indices(self):
        for _I in itertools.combinations(range(4), 2):
            form = DiffForm.basic(4, _I)
            assert form.coefficient(_I) == 1
            assert form.coefficient(_I[::-1]) == -1
