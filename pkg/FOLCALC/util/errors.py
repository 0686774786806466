"""
:module: FOLCALC.util.errors
:license: AGPL-3.0
:purpose:
    Exception hierarchy for :mod:`~FOLCALC`. Plain argument problems still raise
    builtin :class:`TypeError`, :class:`ValueError` and :class:`IndexError`.

    :class:`~.PreconditionError` and its subclasses flag mathematical
    precondition failures (exit status 2 in :mod:`~FOLCALC.workflow.run`) while
    :class:`~.DSLError` subclasses flag problems in session text (exit status 1).
"""


class FolcalcError(Exception):
    """Root class for all :mod:`~FOLCALC` errors"""


class DimensionMismatchError(FolcalcError, ValueError):
    """Operands live in ambient spaces of different dimension"""


class PreconditionError(FolcalcError, ValueError):
    """A mathematical precondition of an operation is not met"""


class NonIntegrableError(PreconditionError):
    """The 1-form does not satisfy w ^ dw = 0"""


class NotHomogeneousError(PreconditionError):
    """The input is not homogeneous where a graded computation needs it"""


class NotDescendedError(PreconditionError):
    """The 1-form is not homogeneous with vanishing radial contraction"""


class DegeneratePullbackError(PreconditionError):
    """The pulled-back form vanishes identically or the sections are all zero"""


class DSLError(FolcalcError):
    """Error raised while reading session text

    :param msg: human readable message
    :type msg: str
    :param line: 1-indexed line number, defaults to None
    :type line: int, optional
    :param col: 1-indexed column number, defaults to None
    :type col: int, optional
    :param binding: name of the binding being evaluated, defaults to None
    :type binding: str, optional
    """
    def __init__(self, msg, line=None, col=None, binding=None):
        self.msg = msg
        self.line = line
        self.col = col
        self.binding = binding
        super().__init__(str(self))

    def __str__(self):
        where = ''
        if self.line is not None:
            where = f'line {self.line}, col {self.col}: '
        if self.binding is not None:
            where += f'(binding "{self.binding}") '
        return f'{where}{self.msg}'


class DSLSyntaxError(DSLError):
    """Session text does not match the grammar"""


class DSLEvaluationError(DSLError):
    """Session text parses but an expression cannot be evaluated"""


class UsageError(FolcalcError):
    """Command line arguments do not fit the requested command"""
