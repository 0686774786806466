"""
:module: FOLCALC.workflow.dsl
:license: AGPL-3.0
:purpose:
    Session description language for polynomials, differential forms,
    vector fields and maps::

        # comments run to the end of the line
        vars x y z;
        let f = x^2 + y*z;
        let w = 3*z*d(f) - 2*f*d(z);
        let v = [x, -y, 0];
        let t = i(v, d(x) /\\ d(y));
        let p = pmap(x, y, z);

    Operator precedence, tightest first: ``^`` (non-negative integer
    exponent), unary ``-``, ``*``, ``/\\`` (wedge), binary ``+`` and ``-``.
    Calls: ``d(e)``, ``i(v, e)``, ``L(v, e)``, ``map(...)``, ``pmap(...)``;
    ``[e, ...]`` is a vector field with one component per declared variable.
    All arithmetic is exact.

    :func:`~.parse_session` returns a :class:`~.Session`. Syntax problems
    raise :class:`~FOLCALC.util.errors.DSLSyntaxError` and evaluation
    problems raise :class:`~FOLCALC.util.errors.DSLEvaluationError`, both
    positioned by line and column.
"""
import logging
from fractions import Fraction
from functools import lru_cache

import pyparsing as pp

from FOLCALC.data.poly import Poly
from FOLCALC.data.form import (DiffForm, VectorField, wedge, exterior_derivative,
                               interior_product, lie_derivative)
from FOLCALC.data.foliation import FoliationForm
from FOLCALC.data.polymap import PolyMap
from FOLCALC.util.errors import FolcalcError, DSLSyntaxError, DSLEvaluationError

Logger = logging.getLogger(__name__)

pp.ParserElement.enable_packrat()

RESERVED = ('vars', 'let', 'd', 'i', 'L', 'map', 'pmap')
MAX_EXPONENT = 256


class Node(object):
    """Expression tree node; **loc** is the character offset in the source"""
    __slots__ = ('kind', 'args', 'loc')

    def __init__(self, kind, args, loc):
        self.kind = kind
        self.args = tuple(args)
        self.loc = loc

    def __repr__(self):
        return f'Node({self.kind}, {self.args})'


class Statement(object):
    __slots__ = ('kind', 'name', 'names', 'expr', 'loc')

    def __init__(self, kind, loc, name=None, names=(), expr=None):
        self.kind = kind
        self.loc = loc
        self.name = name
        self.names = tuple(names)
        self.expr = expr


###############
# Grammar     #
###############

def _number(s, loc, toks):
    num, _, den = toks[0].partition('/')
    if den and int(den) == 0:
        raise pp.ParseFatalException(s, loc, 'zero denominator')
    return Node('num', [Fraction(int(num), int(den) if den else 1)], loc)


def _binary(kinds):
    def action(s, loc, toks):
        items = toks[0]
        node = items[0]
        for _o in range(1, len(items), 2):
            node = Node(kinds[items[_o]], [node, items[_o + 1]], loc)
        return node
    return action


def _unary(s, loc, toks):
    items = list(toks[0])
    node = items[-1]
    for _ in items[:-1]:
        node = Node('neg', [node], loc)
    return node


@lru_cache(maxsize=1)
def grammar():
    """The session grammar, built once"""
    LPAR, RPAR, LBRACK, RBRACK, COMMA, SEMI, EQ = map(pp.Suppress, '()[],;=')
    reserved = pp.MatchFirst([pp.Keyword(_k) for _k in RESERVED])
    name = pp.Combine(~reserved + pp.Word(pp.alphas + '_', pp.alphanums + '_'))
    name.set_name('identifier')

    expr = pp.Forward()
    number = pp.Regex(r'\d+(?:/\d+)?').set_name('rational')
    number.set_parse_action(_number)
    ident = name.copy().set_parse_action(lambda s, l, t: Node('name', [t[0]], l))
    d_call = (pp.Keyword('d') + LPAR + expr + RPAR).set_parse_action(
        lambda s, l, t: Node('d', [t[1]], l))
    contract = ((pp.Keyword('i') | pp.Keyword('L')) + LPAR + expr + COMMA + expr + RPAR).set_parse_action(
        lambda s, l, t: Node(t[0], [t[1], t[2]], l))
    field = (LBRACK + pp.DelimitedList(expr) + RBRACK).set_parse_action(
        lambda s, l, t: Node('field', list(t), l))
    mapping = ((pp.Keyword('pmap') | pp.Keyword('map')) + LPAR + pp.DelimitedList(expr) + RPAR).set_parse_action(
        lambda s, l, t: Node(t[0], list(t[1:]), l))
    atom = number | d_call | contract | mapping | field | ident

    expr <<= pp.infix_notation(atom, [
        (pp.Literal('^'), 2, pp.OpAssoc.LEFT, _binary({'^': 'pow'})),
        (pp.Literal('-'), 1, pp.OpAssoc.RIGHT, _unary),
        (pp.Literal('*'), 2, pp.OpAssoc.LEFT, _binary({'*': 'mul'})),
        (pp.Literal('/\\'), 2, pp.OpAssoc.LEFT, _binary({'/\\': 'wedge'})),
        (pp.one_of('+ -'), 2, pp.OpAssoc.LEFT, _binary({'+': 'add', '-': 'sub'})),
    ])

    vars_stmt = (pp.Keyword('vars') - pp.Group(pp.OneOrMore(name)) - SEMI).set_parse_action(
        lambda s, l, t: Statement('vars', l, names=list(t[1])))
    let_stmt = (pp.Keyword('let') - name - EQ - expr - SEMI).set_parse_action(
        lambda s, l, t: Statement('let', l, name=t[1], expr=t[2]))
    session = pp.ZeroOrMore(vars_stmt | let_stmt)
    session.ignore(pp.python_style_comment)
    return session


#################
# Session       #
#################

class Session(object):
    """Declared variables and named bindings of one DSL text

    :var variables: declared variable names, in order (x0, x1, ... internally)
    :var bindings: name -> :class:`~FOLCALC.data.poly.Poly`,
        :class:`~FOLCALC.data.form.DiffForm`,
        :class:`~FOLCALC.data.form.VectorField` or
        :class:`~FOLCALC.data.polymap.PolyMap`, in binding order
    :var positions: name -> (line, col) of the binding statement
    """
    def __init__(self, text=''):
        self.text = text
        self.variables = []
        self.bindings = {}
        self.positions = {}

    def __eq__(self, other):
        if not isinstance(other, Session):
            return NotImplemented
        return self.variables == other.variables and self.bindings == other.bindings

    def __repr__(self):
        return f'Session(vars={self.variables}, bindings={list(self.bindings)})'

    @property
    def nvars(self):
        return len(self.variables)

    def _position(self, loc):
        return pp.lineno(loc, self.text), pp.col(loc, self.text)

    def _error(self, msg, loc, binding=None):
        line, col = self._position(loc)
        return DSLEvaluationError(msg, line=line, col=col, binding=binding)

    ################
    # Statements   #
    ################
    def declare(self, names, loc):
        if self.variables:
            raise self._error('variables are already declared', loc)
        if len(set(names)) != len(names):
            raise self._error(f'repeated variable in {" ".join(names)}', loc)
        self.variables = list(names)

    def bind(self, name, node, loc):
        if not self.variables:
            raise self._error('declare variables with "vars" before "let"', loc, binding=name)
        if name in self.variables or name in self.bindings:
            raise self._error(f'name "{name}" is already defined', loc, binding=name)
        try:
            value = self.evaluate(node, binding=name)
        except DSLEvaluationError:
            raise
        except RecursionError:
            raise self._error('expression nested too deeply', loc, binding=name)
        except (FolcalcError, ValueError, TypeError, IndexError, ZeroDivisionError) as e:
            raise self._error(str(e), loc, binding=name)
        if isinstance(value, DiffForm) and value.degree == 0:
            value = value.as_poly()
        if isinstance(value, PolyMap):
            value.name = name
        self.bindings[name] = value
        self.positions[name] = self._position(loc)
        Logger.debug(f'bound {name} = {self.render(value)}')

    ################
    # Evaluation   #
    ################
    def evaluate(self, node, binding=None):
        """Evaluate an expression tree against the current bindings"""
        n = self.nvars
        kind, args = node.kind, node.args
        if kind == 'num':
            return Poly.constant(n, args[0])
        if kind == 'name':
            if args[0] in self.variables:
                return Poly.variable(n, self.variables.index(args[0]))
            if args[0] in self.bindings:
                return self.bindings[args[0]]
            raise self._error(f'undefined name "{args[0]}"', node.loc, binding)
        values = [self.evaluate(_a, binding) for _a in args]
        if kind == 'neg':
            return self._scalar(values[0], -1, node, binding)
        if kind in ('add', 'sub'):
            left, right = self._same_kind(values[0], values[1], node, binding)
            return left + right if kind == 'add' else left - right
        if kind == 'mul':
            return self._multiply(values[0], values[1], node, binding)
        if kind == 'wedge':
            return wedge(self._as_form(values[0], node, binding),
                         self._as_form(values[1], node, binding))
        if kind == 'pow':
            return self._power(values[0], values[1], node, binding)
        if kind == 'd':
            return exterior_derivative(self._as_form(values[0], node, binding))
        if kind in ('i', 'L'):
            field = values[0]
            if not isinstance(field, VectorField):
                raise self._error(f'{kind}(...) needs a vector field first', node.loc, binding)
            target = values[1]
            if kind == 'L' and isinstance(target, Poly):
                return field(target)
            target = self._as_form(target, node, binding)
            return interior_product(field, target) if kind == 'i' else lie_derivative(field, target)
        if kind == 'field':
            if len(values) != n:
                raise self._error(f'a vector field needs {n} components, got {len(values)}',
                                  node.loc, binding)
            return VectorField([self._as_poly(_v, node, binding) for _v in values])
        if kind in ('map', 'pmap'):
            return PolyMap([self._as_poly(_v, node, binding) for _v in values],
                           projective=kind == 'pmap')
        raise self._error(f'unknown expression "{kind}"', node.loc, binding)

    def _kind(self, value):
        return type(value).__name__

    def _as_poly(self, value, node, binding):
        if isinstance(value, Poly):
            return value
        if isinstance(value, DiffForm) and value.degree == 0:
            return value.as_poly()
        raise self._error(f'expected a polynomial, got {self._kind(value)}', node.loc, binding)

    def _as_form(self, value, node, binding):
        if isinstance(value, Poly):
            return DiffForm.from_poly(value)
        if isinstance(value, DiffForm):
            return value
        raise self._error(f'expected a differential form, got {self._kind(value)}', node.loc, binding)

    def _same_kind(self, left, right, node, binding):
        if isinstance(left, (Poly, DiffForm)) and isinstance(right, (Poly, DiffForm)):
            if isinstance(left, Poly) and isinstance(right, Poly):
                return left, right
            left, right = self._as_form(left, node, binding), self._as_form(right, node, binding)
            if left.degree != right.degree:
                raise self._error(f'cannot add a {left.degree}-form and a {right.degree}-form',
                                  node.loc, binding)
            return left, right
        if isinstance(left, VectorField) and isinstance(right, VectorField):
            return left, right
        raise self._error(f'cannot add {self._kind(left)} and {self._kind(right)}', node.loc, binding)

    def _scalar(self, value, scalar, node, binding):
        if isinstance(value, (Poly, DiffForm, VectorField)):
            return value * scalar
        raise self._error(f'cannot negate {self._kind(value)}', node.loc, binding)

    def _multiply(self, left, right, node, binding):
        if isinstance(left, Poly) and isinstance(right, Poly):
            return left * right
        if isinstance(left, Poly) and isinstance(right, (DiffForm, VectorField)):
            return right * left
        if isinstance(left, (DiffForm, VectorField)) and isinstance(right, Poly):
            return left * right
        raise self._error(f'cannot multiply {self._kind(left)} by {self._kind(right)}; '
                          'use /\\ for the wedge product', node.loc, binding)

    def _power(self, base, exponent, node, binding):
        base = self._as_poly(base, node, binding)
        exponent = self._as_poly(exponent, node, binding)
        if not exponent.is_constant():
            raise self._error('exponent must be a constant', node.loc, binding)
        value = exponent.constant_term()
        if value.denominator != 1 or value < 0:
            raise self._error('exponent must be a non-negative integer', node.loc, binding)
        if value > MAX_EXPONENT:
            raise self._error(f'exponent larger than {MAX_EXPONENT}', node.loc, binding)
        return base ** int(value)

    ################
    # Selection    #
    ################
    def get(self, name):
        if name not in self.bindings:
            raise DSLEvaluationError(f'no binding named "{name}"', binding=name)
        return self.bindings[name]

    def _select(self, kinds, label, name=None):
        if name is not None:
            value = self.get(name)
            if not kinds(value):
                raise DSLEvaluationError(f'binding "{name}" is not a {label}', binding=name)
            return name, value
        matches = [(_n, _v) for _n, _v in self.bindings.items() if kinds(_v)]
        if not matches:
            raise DSLEvaluationError(f'the session binds no {label}')
        return matches[-1]

    def foliation(self, name=None):
        """The 1-form named **name** (default: the last 1-form bound) as a
        :class:`~FOLCALC.data.foliation.FoliationForm`"""
        name, omega = self._select(lambda v: isinstance(v, DiffForm) and v.degree == 1,
                                   '1-form', name)
        return FoliationForm(omega, name=name)

    def polymap(self, name=None):
        """The map named **name** (default: the last map bound)"""
        return self._select(lambda v: isinstance(v, PolyMap), 'map', name)[1]

    def poly(self, name=None):
        return self._select(lambda v: isinstance(v, Poly), 'polynomial', name)[1]

    ################
    # Rendering    #
    ################
    def render(self, value):
        """DSL text for a bound value, using the declared variable names"""
        names = self.variables
        if isinstance(value, Poly):
            return value.to_string(names)
        if isinstance(value, DiffForm):
            return render_form(value, names)
        if isinstance(value, VectorField):
            return '[' + ', '.join(_c.to_string(names) for _c in value.components) + ']'
        if isinstance(value, PolyMap):
            head = 'pmap' if value.projective else 'map'
            return f'{head}(' + ', '.join(_c.to_string(names) for _c in value.components) + ')'
        raise TypeError(f'cannot render {self._kind(value)}')

    def to_text(self):
        """Render the session back into DSL text"""
        lines = []
        if self.variables:
            lines.append('vars ' + ' '.join(self.variables) + ';')
        for name, value in self.bindings.items():
            lines.append(f'let {name} = {self.render(value)};')
        return '\n'.join(lines) + '\n'


def render_form(form, names):
    """``(c)*d(x)/\\d(y) + ...``; a zero p-form renders as ``0*d(x0)/\\...``"""
    if form.degree == 0:
        return form.as_poly().to_string(names)
    def basis(indices):
        return '/\\'.join(f'd({names[_i]})' for _i in indices)
    if not form:
        return f'0*{basis(range(form.degree))}'
    return ' + '.join(f'({_c.to_string(names)})*{basis(_I)}'
                      for _I, _c in sorted(form.coeffs.items()))


def parse_session(text):
    """Parse and evaluate DSL **text**

    :param text: session text
    :type text: str
    :returns: **session** (*Session*)
    :raises DSLSyntaxError: the text does not match the grammar
    :raises DSLEvaluationError: a statement cannot be evaluated
    """
    if not isinstance(text, str):
        raise TypeError('text must be type str')
    try:
        statements = grammar().parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise DSLSyntaxError(e.msg, line=e.lineno, col=e.col)
    except RecursionError:
        raise DSLSyntaxError('expression nested too deeply', line=1, col=1)
    session = Session(text)
    for stmt in statements:
        if stmt.kind == 'vars':
            session.declare(list(stmt.names), stmt.loc)
        else:
            session.bind(stmt.name, stmt.expr, stmt.loc)
    return session
