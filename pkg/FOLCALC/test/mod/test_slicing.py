"""
:module: FOLCALC.test.mod.test_slicing
:license: AGPL-3.0
:purpose:
    Graded slices I, J, K, Unf and H^1 on reference foliations, the
    regularity and rank checks, and the stability/determinacy reports.
"""
from collections import deque

import pytest

from FOLCALC.data.poly import Poly, monomial_basis
from FOLCALC.data.form import DiffForm, euler_field, interior_product, wedge
from FOLCALC.data.foliation import FoliationForm
from FOLCALC.catalog.entries import (morse_model, exceptional_e3, seeded_rational, rational_foliation,
                                     random_homogeneous)
from FOLCALC.mod.slicing import (slice_I, slice_J, slice_K, cln_h1, unfolding_space, rank,
                                 is_regular, check_stabcones_hypotheses,
                                 infinitesimal_determinacy, default_bound, SliceMod)
from FOLCALC.util.errors import NotDescendedError, NonIntegrableError, NotHomogeneousError
from FOLCALC.util.header import GradedSliceReport
from FOLCALC.util.linalg import vector_space_rank
from FOLCALC.test.example_data import seeds


def rotation():
    x, y = Poly.variables(2)
    return FoliationForm(DiffForm.from_components([-y, x]))


@pytest.fixture(scope='module')
def morse():
    return morse_model(3).foliation


@pytest.fixture(scope='module')
def e3():
    return exceptional_e3().foliation


@pytest.fixture(scope='module')
def e3_stabcones(e3):
    return check_stabcones_hypotheses(e3, bound=8)


class TestSlices:
    def test_morse_unfoldings(self, morse):
        assert unfolding_space(morse, 0, with_h1=False).dim_Unf == 1
        for _l in range(1, 7):
            report = unfolding_space(morse, _l, with_h1=False)
            assert report.dim_Unf == 0, _l

    def test_morse_I_is_everything(self, morse):
        for _l in range(4):
            assert slice_I(morse, _l)[0] == len(monomial_basis(3, _l))

    def test_morse_J(self, morse):
        assert slice_J(morse, 0)[0] == 0
        assert slice_J(morse, 1)[0] == 3

    def test_integrating_factor(self):
        x, y = Poly.variables(2)
        fol = FoliationForm(DiffForm.basic(2, (1,), x))
        dim, basis = slice_K(fol, 1, basis=True)
        assert dim == 1
        assert basis == [x]

    def test_contractions_lie_in_I(self):
        fol = seeded_rational(2, 3, n=3).foliation
        assert not interior_product(euler_field(3), fol.omega)
        labels = list(monomial_basis(3, 5))
        _, basis_i = slice_I(fol, 5, basis=True)
        _, basis_j = slice_J(fol, 5, basis=True)
        vecs_i = [_p.coordinates(labels) for _p in basis_i]
        vecs_j = [_p.coordinates(labels) for _p in basis_j]
        assert vecs_j
        assert vector_space_rank(vecs_i + vecs_j, len(labels)) == len(vecs_i)

    def test_negative_degree(self, morse):
        with pytest.raises(ValueError):
            slice_I(morse, -1)

    def test_non_integrable(self):
        x, y, z = Poly.variables(3)
        fol = FoliationForm(DiffForm.from_components([Poly.zero(3), x, z]))
        with pytest.raises(NonIntegrableError):
            unfolding_space(fol, 1)

    def test_bases(self, morse):
        report = unfolding_space(morse, 0, bases=True)
        assert report.basis_Unf == [Poly.one(3)]
        assert report.basis_J == []
        report = unfolding_space(morse, 1, bases=True, with_h1=False)
        assert len(report.basis_I) == 3 and len(report.basis_J) == 3
        assert report.basis_Unf == []
        assert isinstance(report, GradedSliceReport)


class TestComplex:
    def test_rotation(self):
        assert cln_h1(rotation(), 1) == 0
        assert cln_h1(rotation(), 0) == 0

    def test_rank(self):
        assert rank(rotation()) == 2
        for n in (2, 3, 4):
            assert rank(morse_model(n).foliation) == n

    def test_regular(self):
        regular, table = is_regular(rotation())
        assert regular
        assert table == [{'degree': 1, 'dim_H1': 0}]

    def test_regular_empty_window(self):
        regular, table = is_regular(FoliationForm(DiffForm.basic(2, (0,))))
        assert regular and table == []

    def test_cross_oracle_morse(self, morse):
        report = unfolding_space(morse, 1)
        assert report.dim_H1 == report.dim_Unf == 0

    def test_cross_oracle_e3(self, e3):
        for _l in (1, 2, 3, 5, 6, 7):
            report = unfolding_space(e3, _l)
            assert report.dim_H1 == report.dim_Unf, _l

    def test_cross_oracle_rational(self):
        fol = seeded_rational(2, 3).foliation
        for _l in (1, 2, 3, 4, 6, 7, 8):
            report = unfolding_space(fol, _l)
            assert report.dim_H1 == report.dim_Unf, _l

    def test_cross_oracle_random_rational(self):
        """q g df - p f dg for random homogeneous f, g of degrees 1, 2 on C^3;
        pairs with a common factor are skipped"""
        tested = 0
        for rng in seeds(40, start=50):
            f, g = random_homogeneous(3, 1, rng), random_homogeneous(3, 2, rng)
            if not wedge(DiffForm.differential(f), DiffForm.differential(g)):
                continue
            fol = rational_foliation(f, g).foliation
            if not fol.saturated:
                continue
            assert fol.is_integrable() and fol.descends
            for _l in (1, 2, 4, 5, 6):
                report = unfolding_space(fol, _l)
                assert report.dim_H1 == report.dim_Unf, (f, g, _l)
            tested += 1
            if tested == 10:
                break
        assert tested == 10


class TestHypotheses:
    def test_default_bound(self):
        assert default_bound(4) == 12

    def test_e3_unfoldings_vanish(self, e3_stabcones):
        assert [_r['dim_Unf'] for _r in e3_stabcones['table']] == [0] * 9

    def test_e3_stabcones(self, e3_stabcones):
        assert e3_stabcones['holds']
        assert e3_stabcones['k'] == 4 and e3_stabcones['bound'] == 8
        assert e3_stabcones['k_failures'] == [] and e3_stabcones['unf_failures'] == []

    def test_e3_determined(self, e3):
        report = infinitesimal_determinacy(e3, bound=6)
        assert report['determined']
        assert report['witness'] is None

    def test_rotation_has_integrating_factors(self):
        report = check_stabcones_hypotheses(rotation(), bound=3)
        assert not report['holds']
        assert 2 in report['k_failures']

    def test_rational_fails_at_k(self):
        report = check_stabcones_hypotheses(seeded_rational(2, 3, n=3).foliation, bound=5)
        assert 5 in report['k_failures']
        assert not report['holds']

    def test_morse_not_descended(self, morse):
        with pytest.raises(NotDescendedError):
            check_stabcones_hypotheses(morse)

    def test_morse_determinacy_witness(self, morse):
        report = infinitesimal_determinacy(morse, bound=3)
        assert not report['determined']
        assert report['witness'] == 0
        assert len(report['table']) == 4


class TestSliceMod:
    def test_pulse(self, morse):
        mod = SliceMod(morse, with_h1=False, max_pulse_size=3)
        out = mod.pulse(deque([0, 1, 2]))
        assert [_r.degree for _r in out] == [0, 1, 2]
        assert [_r.dim_Unf for _r in out] == [1, 0, 0]
        assert mod.stats.stop == 'max'

    def test_bad_degree(self, morse):
        mod = SliceMod(morse, with_h1=False)
        with pytest.raises(TypeError):
            mod.pulse(deque(['1']))

    def test_rejects_non_graded(self):
        x, y = Poly.variables(2)
        fol = FoliationForm(DiffForm.from_components([x, y ** 2]))
        with pytest.raises(NotHomogeneousError):
            SliceMod(fol)
        with pytest.raises(TypeError):
            SliceMod(x)
