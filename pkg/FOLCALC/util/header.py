"""
:module: FOLCALC.util.header
:license: AGPL-3.0
:purpose: This module holds class definitions for metadata header objects
    built on :class:`~.AttribHeader`, a typed attribute dictionary.
     - :class:`~FOLCALC.mod.base.BaseMod` and decendents use :class:`~.ModStats`
     - :class:`~FOLCALC.mod.slicing.SliceMod` emits :class:`~.GradedSliceReport`
     - :mod:`~FOLCALC.util.config` populates :class:`~.FolcalcConfig`
"""
import copy
import pandas as pd


class AttribHeader(dict):
    """A :class:`dict` with attribute access, class-level defaults,
    read-only keys and per-key type coercion.

    Subclasses set the class attributes
     - **defaults** -- key: default value
     - **readonly** -- keys that cannot be assigned from outside
     - **_types** -- key: type or tuple of types; values of other types
       are converted with the first listed type

    :param header: initial non-default values
    :type header: dict
    """
    readonly = []
    defaults = {}
    _types = {}

    def __init__(self, header={}):
        super().__init__()
        if not isinstance(header, dict):
            raise TypeError('header must be type dict')
        for _k, _v in self.defaults.items():
            dict.__setitem__(self, _k, copy.deepcopy(_v))
        # Use updated __setitem__ so type and readonly protections apply
        for _k, _v in header.items():
            self.__setitem__(_k, _v)

    def __getattr__(self, key):
        try:
            return self[key]
        except KeyError:
            raise AttributeError(f'{self.__class__.__name__} has no attribute "{key}"')

    def __setitem__(self, key, value):
        if key in self.readonly:
            raise AttributeError(f'Attribute "{key}" in {self.__class__.__name__} is read only!')
        value = self._coerce(key, value)
        super().__setitem__(key, value)

    __setattr__ = __setitem__

    def __delattr__(self, key):
        del self[key]

    def _coerce(self, key, value):
        if key not in self._types:
            return value
        types = self._types[key]
        if isinstance(value, types):
            return value
        ctor = types[0] if isinstance(types, tuple) else types
        try:
            return ctor(value)
        except (TypeError, ValueError):
            raise ValueError(f'Value of type "{type(value)}" could not be converted to approved type for attribute "{key}": {types}')

    def _pretty_str(self, priorized_keys=[], min_label_length=16):
        keys = list(priorized_keys) + sorted(_k for _k in self.keys() if _k not in priorized_keys)
        width = max([min_label_length] + [len(str(_k)) for _k in keys])
        lines = [f'{str(_k).rjust(width)}: {self[_k]}' for _k in keys if _k in self]
        return '\n'.join(lines)

    def __str__(self):
        return self._pretty_str()

    def __deepcopy__(self, memo):
        # bypass __setitem__ so read only keys survive the copy
        new = self.__class__.__new__(self.__class__)
        dict.update(new, copy.deepcopy(dict(self), memo))
        return new

    def copy(self):
        return copy.deepcopy(self)

    def asdict(self):
        return {_k: _v for _k, _v in self.items()}

    def asseries(self):
        return pd.Series(self.asdict())


###############################
# ModStats Class Definition #
###############################

class ModStats(AttribHeader):
    """Metadata header for :class:`~FOLCALC.mod.base.BaseMod` class objects.

    Module Attributes
    -----------------
    :var name: name of the module
    :var mps: maximum pulse size set
    :var maxlen: maximum mod.output size

    `pulse` Metadata Attributes
    -------------------------
    :var starttime: start time of the last call of :meth:`~FOLCALC.mod.base.BaseMod.pulse`
    :var endtime: end time of the last call of :meth:`~FOLCALC.mod.base.BaseMod.pulse`
    :var niter: number of iterations completed
    :var in_init: input size at the start of the call
    :var in_final: input size at the end of the call
    :var out_init: output size at the start of the call
    :var out_final: output size at the end of the call
    :var runtime: number of seconds it took for the call to run
    :var pulserate: iterations per second
    :var stop: reason iteration stopped

    **stop** values
    ---------------
       - 'nodata' -- pulse received an input with 0 length
       - 'early-get' -- pulse iterations stopped early at `get_unit_input`
       - 'early-run' -- pulse iterations stopped early at `run_unit_process`
       - 'early-put' -- pulse iterations stopped early at `put_unit_output`
       - 'max' -- pulse concluded at maximum iterations
    """
    readonly = ['pulserate', 'runtime']
    _refresh_keys = {'starttime', 'endtime', 'niter'}
    defaults = {'name': '',
                'mps': 1,
                'maxlen': None,
                'starttime': None,
                'endtime': None,
                'stop': '',
                'niter': 0,
                'in_init': 0,
                'in_final': 0,
                'out_init': 0,
                'out_final': 0,
                'runtime': 0.,
                'pulserate': 0.}
    _types = {'name': str,
              'mps': int,
              'maxlen': (int, type(None), float),
              'starttime': (pd.Timestamp, type(None)),
              'endtime': (pd.Timestamp, type(None)),
              'stop': str,
              'niter': int,
              'in_init': int,
              'in_final': int,
              'out_init': int,
              'out_final': int,
              'runtime': float,
              'pulserate': float}

    def __setitem__(self, key, value):
        super().__setitem__(key, value)
        if key in self._refresh_keys:
            if isinstance(self.endtime, pd.Timestamp) and isinstance(self.starttime, pd.Timestamp):
                dict.__setitem__(self, 'runtime', (self.endtime - self.starttime).total_seconds())
            if self.runtime > 0:
                dict.__setitem__(self, 'pulserate', float(self.niter) / self.runtime)

    __setattr__ = __setitem__

    def __str__(self):
        prioritized_keys = ['name', 'mps', 'maxlen', 'stop', 'niter',
                            'in_init', 'in_final', 'out_init', 'out_final',
                            'runtime', 'pulserate']
        return self._pretty_str(prioritized_keys)


#########################################
# GradedSliceReport Class Definition #
#########################################

class GradedSliceReport(AttribHeader):
    """Dimensions (and optionally bases) of the graded pieces
    I(w)(l), J(w)(l), K(w)(l), Unf(w)(l) = I/J and H^1(C(w)(l))
    at one degree l.

    **dim_Unf** is read only and refreshed from **dim_I** and **dim_J**.
    **dim_H1** stays None when the complex was not evaluated.
    """
    readonly = ['dim_Unf']
    _refresh_keys = {'dim_I', 'dim_J'}
    report_keys = ['degree', 'dim_I', 'dim_J', 'dim_K', 'dim_Unf', 'dim_H1']
    defaults = {'degree': 0,
                'dim_I': 0,
                'dim_J': 0,
                'dim_K': 0,
                'dim_Unf': 0,
                'dim_H1': None,
                'basis_I': [],
                'basis_J': [],
                'basis_K': [],
                'basis_Unf': []}
    _types = {'degree': int,
              'dim_I': int,
              'dim_J': int,
              'dim_K': int,
              'dim_Unf': int,
              'dim_H1': (int, type(None)),
              'basis_I': list,
              'basis_J': list,
              'basis_K': list,
              'basis_Unf': list}

    def __setitem__(self, key, value):
        super().__setitem__(key, value)
        if key in self._refresh_keys:
            dict.__setitem__(self, 'dim_Unf', self.dim_I - self.dim_J)

    __setattr__ = __setitem__

    def validate(self):
        """Raise :class:`ValueError` if the dimensions break
        J <= I, K <= I, Unf = I - J or non-negativity"""
        dims = [self.dim_I, self.dim_J, self.dim_K, self.dim_Unf]
        if self.dim_H1 is not None:
            dims.append(self.dim_H1)
        if any(_d < 0 for _d in dims):
            raise ValueError(f'negative dimension in slice {self.degree}')
        if self.dim_J > self.dim_I:
            raise ValueError(f'dim J > dim I in slice {self.degree}')
        if self.dim_K > self.dim_I:
            raise ValueError(f'dim K > dim I in slice {self.degree}')
        if self.dim_Unf != self.dim_I - self.dim_J:
            raise ValueError(f'dim Unf != dim I - dim J in slice {self.degree}')
        return self

    def asdict(self, bases=False, names=None):
        """Return the report with stable keys; bases rendered as strings
        when **bases** is True"""
        out = {_k: self[_k] for _k in self.report_keys}
        if bases:
            for _k in ['basis_I', 'basis_J', 'basis_K', 'basis_Unf']:
                out[_k] = [_b.to_string(names) for _b in self[_k]]
        return out

    def asseries(self):
        return pd.Series(self.asdict())

    def __str__(self):
        return self._pretty_str(self.report_keys)


####################################
# FolcalcConfig Class Definition #
####################################

class FolcalcConfig(AttribHeader):
    """Run configuration populated by :func:`~FOLCALC.util.config.load_config`

    :var truncation_bound: bound B for local quotient dimensions (Milnor numbers)
    :var degree_bound: degree bound for stabcones/determinacy checks, None means 2k+4
    :var log_level: terminal logging level
    :var log_file: path of the rotating log file, None disables file logging
    """
    defaults = {'truncation_bound': 30,
                'degree_bound': None,
                'log_level': 'WARNING',
                'log_file': None}
    _types = {'truncation_bound': int,
              'degree_bound': (int, type(None)),
              'log_level': str,
              'log_file': (str, type(None))}


#########################################
# SingularityVerdict Class Definition #
#########################################

class SingularityVerdict(AttribHeader):
    """Pointwise classification of a foliation singularity

    :var point: the rational point, as strings like "1/2"
    :var class: one of **classes**
    :var evidence: the data the verdict rests on (values at the point,
        linear jet matrix and its determinant)
    """
    classes = ['NonSingular', 'Morse', 'Kupka', 'OtherSingular']
    defaults = {'point': [],
                'class': 'NonSingular',
                'evidence': {}}
    _types = {'point': list,
              'class': str,
              'evidence': dict}

    def __setitem__(self, key, value):
        if key == 'class' and value not in self.classes:
            raise ValueError(f'class "{value}" not supported. Use: {self.classes}')
        if key == 'point':
            value = [str(_c) for _c in value]
        super().__setitem__(key, value)

    __setattr__ = __setitem__

    def __str__(self):
        return self._pretty_str(['point', 'class', 'evidence'])
