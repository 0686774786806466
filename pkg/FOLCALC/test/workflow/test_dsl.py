"""
:module: FOLCALC.test.workflow.test_dsl
:license: AGPL-3.0
:purpose:
    Session language: evaluation, precedence, positioned diagnostics and
    printing back into session text.
"""
from fractions import Fraction
from pathlib import Path

import pytest

from FOLCALC.data.poly import Poly
from FOLCALC.data.form import DiffForm, VectorField
from FOLCALC.data.polymap import PolyMap
from FOLCALC.catalog.entries import rational_foliation, quartic_invariants
from FOLCALC.workflow.dsl import parse_session, render_form, Session
from FOLCALC.util.errors import DSLError, DSLSyntaxError, DSLEvaluationError
from FOLCALC.test.example_data import fixture_names, fixture_text


class TestEvaluation:
    def test_differential(self):
        session = parse_session('vars x y; let w = d(x^2+y^2);')
        x, y = Poly.variables(2)
        assert session.variables == ['x', 'y']
        assert session.get('w') == DiffForm.from_components([x * 2, y * 2])

    def test_rational_first_integral_shape(self):
        session = parse_session('vars a b;\nlet f = a^2;\nlet g = b^3;\nlet w = 3*g*d(f) - 2*f*d(g);')
        a, b = Poly.variables(2)
        assert session.get('w') == rational_foliation(a ** 2, b ** 3).foliation.omega
        assert session.foliation().total_degree == 5

    def test_precedence(self):
        session = parse_session('vars x y;\n'
                                'let a = -x^2;\n'
                                'let b = x*d(y) /\\ d(x);\n'
                                'let c = d(x) /\\ d(y) + d(y) /\\ d(x);\n'
                                'let e = 2^3 - 1/2*(x + y);\n'
                                'let f = 1 - x - y;\n')
        x, y = Poly.variables(2)
        assert session.get('a') == -(x ** 2)
        assert session.get('b') == DiffForm.basic(2, (0, 1), -x)
        assert not session.get('c') and session.get('c').degree == 2
        assert session.get('e') == 8 - (x + y) * Fraction(1, 2)
        assert session.get('f') == 1 - x - y

    def test_fields_and_contractions(self):
        session = parse_session(fixture_text('fields.fol'))
        x, y, z = Poly.variables(3)
        assert session.get('v') == VectorField([x, -y, Poly.zero(3)])
        assert session.get('t') == DiffForm.from_components([y, x, Poly.zero(3)])
        assert session.get('h') == Poly.zero(3)
        assert session.get('u') == DiffForm.basic(3, (0,), z)
        assert session.get('s') == DiffForm.volume(3)
        assert session.foliation().name == 'u'

    def test_zero_forms_become_polys(self):
        session = parse_session('vars x y; let h = i([1, 0], d(x));')
        assert isinstance(session.get('h'), Poly)
        assert session.get('h') == 1

    def test_maps(self):
        session = parse_session(fixture_text('generic.fol'))
        x = Poly.variables(3)
        assert session.polymap() == PolyMap(x[:2], projective=True)
        assert session.polymap('q').name == 'q'
        assert session.positions['p'] == (3, 1)

    def test_comments(self):
        session = parse_session(fixture_text('comments.fol'))
        x, y = Poly.variables(2)
        assert session.get('c') == x * Fraction(1, 2) - Fraction(3, 4)
        assert session.positions['c'] == (4, 1)

    def test_selection_errors(self):
        session = parse_session('vars x y; let f = x;')
        with pytest.raises(DSLEvaluationError):
            session.foliation()
        with pytest.raises(DSLEvaluationError):
            session.polymap('f')
        with pytest.raises(DSLEvaluationError):
            session.get('g')

    def test_not_text(self):
        with pytest.raises(TypeError):
            parse_session(b'vars x;')


MALFORMED = [
    'vars x y\nlet w = x;',
    'let w = x;\nvars x;',
    'vars x;\nlet w = x +;',
    'vars x;\nlet w = d(x;',
    'vars x;\nlet = x;',
    'vars x;\nlet w = q;',
    'vars x y;\nlet w = x^y;',
    'vars x;\nlet w = x^(1/2);',
    'vars x y;\nlet v = [x];',
    'vars x y;\nlet w = i(x, d(y));',
    'vars x y;\nlet w = d(x)*d(y);',
    'vars x y;\nlet w = d(x) + x;',
    'vars x;\nlet x = x;',
    'vars x;\nlet w = x;\nlet w = x;',
    'vars x x;',
    'vars x;\nvars y;',
    'vars x;\nlet w = 1/0;',
    'vars x y;\nlet p = pmap(x, y^2);',
    'vars x y;\nlet p = pmap(x^2 + x, y^2);',
    'vars x y;\nlet p = pmap(x);',
    'vars x;\nlet w = $;',
    'vars d;',
    'vars x y;\nlet w = (x + y;',
    'vars x;\nlet w = x^-1;',
    'vars x;\nlet w = x',
    'vars x;\nlet w = 2^300;',
    'vars x y;\nlet w = x y;',
    'vars x y;\nlet w = L(x, y);',
]


class TestDiagnostics:
    @pytest.mark.parametrize('text', MALFORMED)
    def test_rejected_with_position(self, text):
        with pytest.raises(DSLError) as excinfo:
            parse_session(text)
        assert excinfo.value.line is not None
        assert excinfo.value.line >= 1 and excinfo.value.col >= 1
        assert str(excinfo.value).startswith(f'line {excinfo.value.line}, col')

    def test_syntax_position(self):
        with pytest.raises(DSLSyntaxError) as excinfo:
            parse_session('vars x;\nlet w = d(x;')
        assert excinfo.value.line == 2

    def test_evaluation_binding(self):
        with pytest.raises(DSLEvaluationError) as excinfo:
            parse_session('vars x y;\nlet f = x;\nlet w = d(f) + f;')
        assert excinfo.value.binding == 'w'
        # the failing sub-expression d(f) + f starts at col 9
        assert excinfo.value.line == 3 and excinfo.value.col == 9


class TestRendering:
    def test_render_form(self):
        x, y = Poly.variables(2)
        omega = DiffForm.from_components([-y, x])
        assert render_form(omega, ['x', 'y']) == '(-y)*d(x) + (x)*d(y)'
        assert render_form(DiffForm.zero(2, 2), ['x', 'y']) == '0*d(x)/\\d(y)'

    @pytest.mark.parametrize('name', fixture_names())
    def test_round_trip(self, name):
        session = parse_session(fixture_text(name))
        again = parse_session(session.to_text())
        assert again == session
        assert again.to_text() == session.to_text()

    def test_empty(self):
        assert parse_session('') == Session()
        assert parse_session('# nothing\n').to_text() == '\n'


EXAMPLE_SESSIONS = Path(__file__).resolve().parents[3] / 'example' / 'sessions'


@pytest.mark.skipif(not EXAMPLE_SESSIONS.is_dir(), reason='example sessions not shipped')
class TestExampleSessions:
    def test_quartic_invariants(self):
        with open(EXAMPLE_SESSIONS / 'sl2_quartics.fol', 'r', encoding='utf-8') as fid:
            session = parse_session(fid.read())
        for name in ('iH', 'iE', 'iF'):
            assert session.get(name) == 0
        f0, g0 = quartic_invariants()
        assert session.get('f0') == f0
        assert session.get('g0') == g0
        assert session.foliation('w').is_integrable()
