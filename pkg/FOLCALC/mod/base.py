"""
:module: FOLCALC.mod.base
:license: AGPL-3.0
:purpose:
    Template for the FOLCALC processing modules. A module holds one fixed
    object (a foliation, a map) and consumes a queue of small work units
    (a degree, a point, a rank bound), emitting one report per unit.

    :meth:`~.BaseMod.pulse` runs at most **max_pulse_size** rounds of::

        unit_input = get_unit_input(queue)       # pop from the right
        unit_output = run_unit_process(unit_input)
        put_unit_output(unit_output)             # appendleft onto output

    so that, after the queue is drained, **output** lists the reports in
    the order the units were queued. Subclasses override the three
    sub-methods; each carries a POLYMORPHIC tag naming the last class that
    changed it.
"""
import logging
from copy import deepcopy
from collections import deque

import pandas as pd

from FOLCALC.util.header import ModStats
from FOLCALC.util.log import rich_error_message

Logger = logging.getLogger(__name__)

EXIT_TYPES = ('nodata', 'early-get', 'early-run', 'early-put', 'max')


class BaseMod(object):
    """Queue-driven processing module; the identity process by default

    :param max_pulse_size: maximum units handled per :meth:`~.pulse` call, defaults to 1
    :type max_pulse_size: int, optional
    :param maxlen: bound on the **output** deque, defaults to None (unbounded)
    :type maxlen: int, optional
    :param name: suffix for the module name, see :meth:`~.setname`, defaults to None
    :type name: str, optional

    :var output: reports produced so far, oldest unit first
    :var stats: :class:`~FOLCALC.util.header.ModStats` of the last pulse
    :var Logger: logger named after the module
    """

    def __init__(self, max_pulse_size=1, maxlen=None, name=None):
        self.stats = ModStats()
        self.stats.mps = self._check_pulse_size(max_pulse_size)
        self.setname(name)
        self.Logger = logging.getLogger(self.name)
        self._input_types = [deque]
        self.output = deque(maxlen=maxlen)
        self.stats.maxlen = maxlen
        self._continue_pulsing = True

    @staticmethod
    def _check_pulse_size(value):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise TypeError('max_pulse_size must be int-like')
        if value < 1:
            raise ValueError('max_pulse_size must be g.e. 1')
        return int(value)

    def __repr__(self, full=False):
        rstr = str(self.stats)
        if full:
            rstr += f'\n{self.output}'
        return rstr

    def __str__(self):
        return self.__class__.__name__

    ######################
    ## NAMING & COPYING ##
    ######################
    def setname(self, name=None):
        """Name the module after its class, optionally with a suffix

        >>> mod = BaseMod(name='degrees')
        >>> mod.name
        'BaseMod_degrees'

        :param name: suffix, or a full name already containing the class name
        :type name: str or None, optional
        """
        cls = self.__class__.__name__
        if name is None:
            full = cls
        elif isinstance(name, str):
            full = name if cls in name else f'{cls}_{name}'
        else:
            raise TypeError('name must be type None or str')
        self.stats.name = full
        self.name = full

    def copy(self, newname=None):
        """Deep copy of the module, renamed when **newname** is given"""
        twin = deepcopy(self)
        if newname:
            twin.setname(newname)
        return twin

    #########################
    ## PULSE BOOKKEEPING ##
    #########################
    def check_input(self, input) -> None:
        """Raise TypeError unless **input** is one of the accepted queue types"""
        if not isinstance(input, tuple(self._input_types)):
            raise TypeError(f'input type "{type(input)}" is not in {self._input_types}')

    def pulse_startup(self, input: deque) -> None:
        """Stamp the start time and the initial queue sizes"""
        self.stats.starttime = pd.Timestamp.now()
        self.stats.in_init = self.measure_input(input)
        self.stats.out_init = self.measure_output()
        self._continue_pulsing = True

    def pulse_shutdown(self, input: deque, niter: int, exit_type: str) -> None:
        """Stamp the end time, final queue sizes, iteration count and the
        reason the pulse stopped (one of **EXIT_TYPES**)

        :raises ValueError: unknown **exit_type**
        """
        if exit_type not in EXIT_TYPES:
            raise ValueError(f'exit_type "{exit_type}" not supported')
        self.stats.in_final = self.measure_input(input)
        self.stats.out_final = self.measure_output()
        self.stats.niter = niter if exit_type != 'nodata' else 0
        self.stats.stop = exit_type
        self.stats.endtime = pd.Timestamp.now()

    def measure_input(self, input: deque) -> int:
        """Units waiting in **input**

        POLYMORPHIC: last update with :class:`~.BaseMod`
        """
        return len(input)

    def measure_output(self) -> int:
        """Reports held in **output**

        POLYMORPHIC: last update with :class:`~.BaseMod`
        """
        return len(self.output)

    ######################
    ## UNIT OF WORK ##
    ######################
    def get_unit_input(self, input: deque):
        """Pop the next unit from the right of **input**; an empty queue
        stops the pulse and yields None

        POLYMORPHIC: last update with :class:`~.BaseMod`
        """
        if not input:
            self._continue_pulsing = False
            return None
        return input.pop()

    def run_unit_process(self, unit_input):
        """Identity

        POLYMORPHIC: last update with :class:`~.BaseMod`
        """
        return unit_input

    def put_unit_output(self, unit_output) -> None:
        """Append the report on the left of **output**

        POLYMORPHIC: last update with :class:`~.BaseMod`
        """
        self.output.appendleft(unit_output)

    ###########
    ## PULSE ##
    ###########
    def pulse(self, input: deque) -> deque:
        """Handle up to **max_pulse_size** units from **input**

        A unit whose process raises is pushed back onto **input** before
        the exception propagates.

        :param input: queue of units, consumed from the right
        :type input: collections.deque
        :returns: **output** (*deque*) -- this module's **output** attribute
        """
        self.check_input(input)
        self.pulse_startup(input)
        if self.stats.in_init == 0:
            self.pulse_shutdown(input, niter=0, exit_type='nodata')
            return self.output
        done = 0
        while done < self.stats.mps:
            unit_input = self.get_unit_input(input)
            if not self._continue_pulsing:
                self.pulse_shutdown(input, niter=done, exit_type='early-get')
                return self.output
            try:
                unit_output = self.run_unit_process(unit_input)
            except Exception as e:
                self.Logger.error(rich_error_message(e))
                input.append(unit_input)
                raise
            if not self._continue_pulsing:
                self.pulse_shutdown(input, niter=done, exit_type='early-run')
                return self.output
            self.put_unit_output(unit_output)
            done += 1
            if not self._continue_pulsing:
                self.pulse_shutdown(input, niter=done, exit_type='early-put')
                return self.output
        self.pulse_shutdown(input, niter=done, exit_type='max')
        return self.output

    def drain(self, units):
        """Queue **units** and pulse until none remain

        :param units: work units in the order their reports should appear
        :type units: iterable
        :returns: **reports** (*list*) -- the whole **output**, oldest first
        """
        queue = deque(units)
        while queue:
            self.pulse(queue)
        self.Logger.debug(f'drained {self.measure_output()} reports')
        return list(self.output)
