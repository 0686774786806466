"""
:module: FOLCALC.mod.slicing
:license: AGPL-3.0
:purpose:
    Graded linear algebra for a homogeneous integrable 1-form w of total
    degree k on C^n, one degree l at a time:

     - I(w)(l): h in O(l) with h dw = w ^ (eta - dh) for some eta in Omega^1(l)
     - J(w)(l): h = i_v w for fields v of degree l - k
     - K(w)(l): integrating factors, h dw = dh ^ w
     - Unf(w)(l) = I(w)(l) / J(w)(l)
     - H^1 of T(l - k) -> Omega^1(l) -> Omega^3(l + k) with
       d0(v) = L_v w and d1(eta) = eta ^ dw + w ^ d eta

    and the checks built from them: rank, regularity, the hypotheses for
    stability of cones and infinitesimal determinacy.

    :class:`~.SliceMod` wraps :meth:`~.unfolding_space` in the
    :class:`~FOLCALC.mod.base.BaseMod` pulse: degrees in, reports out.
"""
import logging
from collections import deque

from FOLCALC.mod.base import BaseMod
from FOLCALC.data.poly import Poly, monomial_basis
from FOLCALC.data.form import (DiffForm, VectorField, wedge, exterior_derivative,
                               lie_derivative, form_basis_labels, field_basis_labels)
from FOLCALC.data.foliation import FoliationForm
from FOLCALC.util.errors import FolcalcError, NotDescendedError
from FOLCALC.util.header import GradedSliceReport
from FOLCALC.util.linalg import ExactLinearMap, row_reduce, complete_basis

Logger = logging.getLogger(__name__)


def default_bound(k):
    """Degree bound used when none is given"""
    return 2 * k + 4


def _monomial(nvars, expv):
    return Poly(nvars, {expv: 1})


def _form_codomain(nvars, degree, total_degree):
    if degree > nvars:
        return []
    return form_basis_labels(nvars, degree, total_degree)


######################
# Graded linear maps #
######################

def unfolding_map(foliation, degree):
    """Linear maps of the I(w)(l) system (h, eta) -> h dw + w ^ dh - w ^ eta

    :returns:
        - **full** (*ExactLinearMap*) -- on h and eta coordinates
        - **eta_part** (*ExactLinearMap*) -- restriction to eta coordinates
        - **nh** (*int*) -- number of h coordinates (they come first)
    """
    k = foliation.check_graded()
    n, omega, domega = foliation.nvars, foliation.omega, foliation.domega
    h_labels = list(monomial_basis(n, degree))
    eta_labels = form_basis_labels(n, 1, degree)
    codomain = _form_codomain(n, 2, k + degree)
    h_cols = []
    for expv in h_labels:
        mono = _monomial(n, expv)
        col = domega * mono + wedge(omega, DiffForm.differential(mono))
        h_cols.append(col.coordinates() if col.degree == 2 else {})
    eta_cols = []
    for indices, expv in eta_labels:
        col = -wedge(omega, DiffForm.basic(n, indices, _monomial(n, expv)))
        eta_cols.append(col.coordinates() if col.degree == 2 else {})
    full = ExactLinearMap([('h', _l) for _l in h_labels] + [('eta', _l) for _l in eta_labels],
                          codomain, h_cols + eta_cols)
    eta_part = ExactLinearMap(eta_labels, codomain, eta_cols)
    Logger.debug(f'I-system at degree {degree}: shape {full.shape}')
    return full, eta_part, len(h_labels)


def contraction_map(foliation, degree):
    """v -> i_v w from fields of degree l - k into O(l)"""
    k = foliation.check_graded()
    n, omega = foliation.nvars, foliation.omega
    labels = field_basis_labels(n, degree - k)
    columns = []
    for index, expv in labels:
        columns.append(dict((_monomial(n, expv) * omega.coefficient((index,))).terms()))
    return ExactLinearMap(labels, list(monomial_basis(n, degree)), columns)


def integrating_factor_map(foliation, degree):
    """h -> h dw - dh ^ w on O(l)"""
    k = foliation.check_graded()
    n, omega, domega = foliation.nvars, foliation.omega, foliation.domega
    labels = list(monomial_basis(n, degree))
    codomain = _form_codomain(n, 2, k + degree)
    columns = []
    for expv in labels:
        mono = _monomial(n, expv)
        col = domega * mono - wedge(DiffForm.differential(mono), omega)
        columns.append(col.coordinates() if col.degree == 2 else {})
    return ExactLinearMap(labels, codomain, columns)


def complex_maps(foliation, degree):
    """The two differentials of T(l - k) -> Omega^1(l) -> Omega^3(l + k)

    :returns: **d0**, **d1** (*ExactLinearMap*)
    """
    k = foliation.check_graded()
    n, omega, domega = foliation.nvars, foliation.omega, foliation.domega
    eta_labels = form_basis_labels(n, 1, degree)
    field_labels = field_basis_labels(n, degree - k)
    d0_cols = []
    for index, expv in field_labels:
        comps = [Poly.zero(n)] * n
        comps[index] = _monomial(n, expv)
        d0_cols.append(lie_derivative(VectorField(comps), omega).coordinates())
    d0 = ExactLinearMap(field_labels, eta_labels, d0_cols)
    codomain = _form_codomain(n, 3, degree + k)
    d1_cols = []
    for indices, expv in eta_labels:
        eta = DiffForm.basic(n, indices, _monomial(n, expv))
        col = wedge(eta, domega) + wedge(omega, exterior_derivative(eta))
        d1_cols.append(col.coordinates() if col.degree == 3 else {})
    d1 = ExactLinearMap(eta_labels, codomain, d1_cols)
    return d0, d1


###################
# Graded slices   #
###################

def slice_I(foliation, degree, basis=False):
    """dim I(w)(l) and, when **basis** is True, a basis of polynomials

    :returns: **dim** (*int*), **basis** (*list* of *Poly*)
    """
    if degree < 0:
        raise ValueError('degree must be non-negative')
    full, eta_part, nh = unfolding_map(foliation, degree)
    if not basis:
        return nh - full.rank() + eta_part.rank(), []
    labels = list(monomial_basis(foliation.nvars, degree))
    projected = [_v[:nh] for _v in full.kernel()]
    rows = row_reduce(projected, nh)
    return len(rows), [Poly.from_vector(foliation.nvars, labels, _r) for _r in rows]


def slice_J(foliation, degree, basis=False):
    """dim J(w)(l) and, when **basis** is True, a basis of polynomials"""
    if degree < 0:
        raise ValueError('degree must be non-negative')
    lmap = contraction_map(foliation, degree)
    if not basis:
        return lmap.rank(), []
    labels = list(monomial_basis(foliation.nvars, degree))
    rows = lmap.image()
    return len(rows), [Poly.from_vector(foliation.nvars, labels, _r) for _r in rows]


def slice_K(foliation, degree, basis=False):
    """dim K(w)(l) and, when **basis** is True, a basis of integrating factors"""
    if degree < 0:
        raise ValueError('degree must be non-negative')
    lmap = integrating_factor_map(foliation, degree)
    if not basis:
        return lmap.shape[1] - lmap.rank(), []
    labels = list(monomial_basis(foliation.nvars, degree))
    rows = row_reduce(lmap.kernel(), len(labels))
    return len(rows), [Poly.from_vector(foliation.nvars, labels, _r) for _r in rows]


def cln_h1(foliation, degree):
    """dim H^1 of the graded complex at degree l; d1 o d0 = 0 is verified

    :raises FolcalcError: the composition d1 o d0 is not zero
    """
    if degree < 1:
        foliation.check_graded()
        return 0
    d0, d1 = complex_maps(foliation, degree)
    if not d1.composes_to_zero(d0):
        raise FolcalcError(f'd1 o d0 does not vanish at degree {degree}')
    kernel = d1.shape[1] - d1.rank()
    return kernel - d0.rank()


def unfolding_space(foliation, degree, bases=False, with_h1=True):
    """All graded pieces at one degree

    :param foliation: homogeneous integrable form
    :type foliation: :class:`~FOLCALC.data.foliation.FoliationForm`
    :param degree: degree l >= 0
    :type degree: int
    :param bases: also compute bases (Unf basis completes the J basis), defaults to False
    :type bases: bool, optional
    :param with_h1: evaluate dim H^1, defaults to True
    :type with_h1: bool, optional
    :returns: **report** (*GradedSliceReport*)
    """
    dim_i, basis_i = slice_I(foliation, degree, basis=bases)
    dim_j, basis_j = slice_J(foliation, degree, basis=bases)
    dim_k, basis_k = slice_K(foliation, degree, basis=bases)
    report = GradedSliceReport({'degree': degree, 'dim_I': dim_i,
                                'dim_J': dim_j, 'dim_K': dim_k})
    if with_h1:
        report.dim_H1 = cln_h1(foliation, degree)
    if bases:
        labels = list(monomial_basis(foliation.nvars, degree))
        vecs_i = [_p.coordinates(labels) for _p in basis_i]
        vecs_j = [_p.coordinates(labels) for _p in basis_j]
        extra = complete_basis(vecs_j, vecs_i, len(labels))
        report.basis_I = basis_i
        report.basis_J = basis_j
        report.basis_K = basis_k
        report.basis_Unf = [Poly.from_vector(foliation.nvars, labels, _v) for _v in extra]
    return report.validate()


def rank(foliation):
    """Dimension of the image of the constant fields under v -> L_v w"""
    k = foliation.check_graded()
    d0, _ = complex_maps(foliation, k - 1)
    return d0.rank()


def is_regular(foliation):
    """H^1 = 0 in every degree 1 <= l <= k - 1

    :returns:
        - **regular** (*bool*)
        - **table** (*list* of *dict*) -- degree and dim_H1 per degree checked
    """
    k = foliation.check_graded()
    table = [{'degree': _l, 'dim_H1': cln_h1(foliation, _l)} for _l in range(1, k)]
    return all(_r['dim_H1'] == 0 for _r in table), table


def check_stabcones_hypotheses(foliation, bound=None):
    """K(l) = 0 for 1 <= l <= B and Unf(l) = 0 for 0 <= l <= B, l != k

    :raises NotDescendedError: the form does not descend
    :returns: **report** (*dict*) with keys k, bound, k_failures,
        unf_failures, holds, table
    """
    k = foliation.check_graded()
    if not foliation.descends_to_projective():
        raise NotDescendedError('stability of cones needs a descended form')
    bound = default_bound(k) if bound is None else bound
    table, k_fail, unf_fail = [], [], []
    for _l in range(0, bound + 1):
        report = unfolding_space(foliation, _l, with_h1=False)
        table.append(report.asdict())
        if _l >= 1 and report.dim_K != 0:
            k_fail.append(_l)
        if _l != k and report.dim_Unf != 0:
            unf_fail.append(_l)
    holds = not k_fail and not unf_fail
    if holds:
        Logger.info(f'hypotheses hold up to degree {bound}')
    return {'k': k, 'bound': bound, 'k_failures': k_fail,
            'unf_failures': unf_fail, 'holds': holds, 'table': table}


def infinitesimal_determinacy(foliation, bound=None):
    """K(l) = 0 for l <= k and Unf(l) = 0 for k < l <= B

    :returns: **report** (*dict*) with keys k, bound, determined, witness
        (first failing degree or None), table
    """
    k = foliation.check_graded()
    bound = default_bound(k) if bound is None else bound
    table = []
    witness = None
    for _l in range(0, max(bound, k) + 1):
        report = unfolding_space(foliation, _l, with_h1=False)
        table.append(report.asdict())
        failed = report.dim_K != 0 if _l <= k else report.dim_Unf != 0
        if failed and witness is None:
            witness = _l
    return {'k': k, 'bound': bound, 'determined': witness is None,
            'witness': witness, 'table': table}


###############################
# SliceMod Class Definition   #
###############################

class SliceMod(BaseMod):
    """Pulse module computing one :class:`~FOLCALC.util.header.GradedSliceReport`
    per degree popped from the input deque

    :param foliation: homogeneous integrable form
    :type foliation: :class:`~FOLCALC.data.foliation.FoliationForm`
    :param bases: include bases in the reports, defaults to False
    :type bases: bool, optional
    :param with_h1: evaluate dim H^1, defaults to True
    :type with_h1: bool, optional
    """
    def __init__(self, foliation, bases=False, with_h1=True,
                 max_pulse_size=1, maxlen=None, name=None):
        super().__init__(max_pulse_size=max_pulse_size, maxlen=maxlen, name=name)
        if not isinstance(foliation, FoliationForm):
            raise TypeError('foliation must be type FoliationForm')
        self.k = foliation.check_graded()
        self.foliation = foliation
        self.bases = bool(bases)
        self.with_h1 = bool(with_h1)

    def get_unit_input(self, input: deque):
        """Pop a degree off **input**; non-integer degrees raise

        POLYMORPHIC: last update with :class:`~.SliceMod`
        """
        unit_input = super().get_unit_input(input)
        if self._continue_pulsing:
            if isinstance(unit_input, bool) or not isinstance(unit_input, int):
                raise TypeError(f'degree {unit_input} must be type int')
        return unit_input

    def run_unit_process(self, unit_input: int) -> GradedSliceReport:
        """Compute the graded slices at the degree **unit_input**

        POLYMORPHIC: last update with :class:`~.SliceMod`
        """
        self.Logger.debug(f'slice at degree {unit_input}')
        return unfolding_space(self.foliation, unit_input,
                               bases=self.bases, with_h1=self.with_h1)
