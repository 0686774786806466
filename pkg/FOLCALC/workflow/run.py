"""
:module: FOLCALC.workflow.run
:license: AGPL-3.0
:purpose:
    Command line entry point ``folcalc <command> <file> [options]``.

    Each invocation parses one session file with
    :func:`~FOLCALC.workflow.dsl.parse_session`, runs one command and prints
    one report, as text tables or (``--json``) a JSON document with stable
    keys. Exit status is 0 on success, 1 on parse or usage errors and 2
    when a mathematical precondition fails (e.g. a non-integrable form
    handed to ``unfold``).

    The ``catalog`` command takes a catalog entry name in place of the file.
"""
import argparse
import json
import logging
import sys

import pandas as pd

from FOLCALC.catalog.entries import lookup
from FOLCALC.mod.slicing import (SliceMod, rank, is_regular, check_stabcones_hypotheses,
                                 infinitesimal_determinacy)
from FOLCALC.mod.singular import (ClassifyMod, CriticalMod, milnor_number, tangency_analysis,
                                  check_generic_map)
from FOLCALC.util.config import load_config
from FOLCALC.util.errors import FolcalcError, PreconditionError, DSLError, UsageError
from FOLCALC.util.input import parse_degree_range, parse_int_list, parse_point
from FOLCALC.util.log import setup_logging, rich_error_message
from FOLCALC.workflow.dsl import Session, parse_session, render_form

Logger = logging.getLogger(__name__)

COMMANDS = ['check', 'sing', 'unfold', 'regularity', 'rank', 'stabcones', 'determinacy',
            'classify', 'tangency', 'critical', 'generic-map', 'catalog', 'milnor']

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2


class FolcalcArgumentParser(argparse.ArgumentParser):
    """Argument parser that raises :class:`~FOLCALC.util.errors.UsageError`
    instead of exiting, so usage problems share exit status 1"""
    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = FolcalcArgumentParser(
        prog='folcalc',
        description='Exact computations with polynomial codimension-one foliations')
    parser.add_argument('command', choices=COMMANDS)
    parser.add_argument('file', help='session file (catalog: entry name such as e3 or morse:3)')
    parser.add_argument('--form', dest='form', default=None,
                        help='binding to use as the 1-form (milnor: the polynomial)')
    parser.add_argument('--map', dest='map', default=None, help='binding to use as the map')
    parser.add_argument('--degrees', dest='degrees', default=None, help='degree window A..B')
    parser.add_argument('--projective-degree', dest='projective', action='store_true',
                        help='read --degrees as projective degrees (total degree minus 2)')
    parser.add_argument('--k', dest='k', default=None, help='comma delimited rank bounds')
    parser.add_argument('--point', dest='points', action='append', default=[],
                        help='rational point c1,c2,... (repeatable)')
    parser.add_argument('--bound', dest='bound', type=int, default=None,
                        help='degree bound (stabcones, determinacy) or truncation bound (milnor)')
    parser.add_argument('--json', dest='json', action='store_true', help='emit a JSON document')
    parser.add_argument('--config', dest='config', default=None, help='.ini run configuration')
    return parser


##########################
# Command implementations #
##########################

def _header(command, **kwargs):
    report = {'command': command}
    report.update(kwargs)
    return report


def _verdict_rows(outputs):
    return [{'point': ','.join(_v.point), 'class': _v['class']} for _v in outputs]


def cmd_check(session, args, config):
    fol = session.foliation(args.form)
    witness = fol.integrability_witness()
    divisor, _ = fol.saturate()
    membership = fol.moduli_membership()
    return _header('check', form=fol.name,
                   integrable=membership['integrable'],
                   witness=render_form(witness, session.variables) if witness else None,
                   homogeneous=fol.homogeneous,
                   total_degree=fol.total_degree,
                   descends=membership['descends'],
                   projective_degree=membership['projective_degree'],
                   saturated=membership['saturated'],
                   divisor=divisor.to_string(session.variables),
                   codim_sing=membership['codim_sing'],
                   codim_ok=membership['codim_ok'])


def cmd_sing(session, args, config):
    fol = session.foliation(args.form)
    names = session.variables
    sing = fol.singular_ideal()
    dsing = fol.d_singular_ideal()
    dim = sing.krull_dimension()
    return _header('sing', form=fol.name,
                   generators=[_g.to_string(names) for _g in sing.groebner_basis()],
                   dim=dim,
                   codim=fol.nvars - dim,
                   vs_dim=sing.vs_dimension(),
                   dim_sing_domega=dsing.krull_dimension(),
                   split_hypothesis=fol.check_split_hypothesis()['holds'],
                   dim_kupka=fol.kupka_ideal().krull_dimension())


def _degree_window(args, k):
    if args.degrees is None:
        degrees = list(range(0, k + 3))
    else:
        degrees = parse_degree_range(args.degrees)
    if args.projective:
        degrees = [_d + 2 for _d in degrees]
    return degrees


def _with_projective(rows, args):
    if args.projective:
        for _r in rows:
            _r['projective_degree'] = _r['degree'] - 2
    return rows


def cmd_unfold(session, args, config):
    fol = session.foliation(args.form)
    k = fol.check_graded()
    degrees = _degree_window(args, k)
    mod = SliceMod(fol, max_pulse_size=len(degrees))
    rows = [_r.asdict() for _r in mod.drain(degrees)]
    return _header('unfold', form=fol.name, k=k, table=_with_projective(rows, args))


def cmd_regularity(session, args, config):
    fol = session.foliation(args.form)
    regular, table = is_regular(fol)
    return _header('regularity', form=fol.name, k=fol.total_degree,
                   window=[1, fol.total_degree - 1], regular=regular, table=table)


def cmd_rank(session, args, config):
    fol = session.foliation(args.form)
    return _header('rank', form=fol.name, k=fol.check_graded(), rank=rank(fol))


def _degree_bound(args, config):
    return args.bound if args.bound is not None else config.degree_bound


def cmd_stabcones(session, args, config):
    fol = session.foliation(args.form)
    report = check_stabcones_hypotheses(fol, bound=_degree_bound(args, config))
    return _header('stabcones', form=fol.name, **report)


def cmd_determinacy(session, args, config):
    fol = session.foliation(args.form)
    report = infinitesimal_determinacy(fol, bound=_degree_bound(args, config))
    return _header('determinacy', form=fol.name, **report)


def _points(args, nvars, default_origin=False):
    if not args.points:
        if default_origin:
            return [[0] * nvars]
        raise UsageError('give at least one --point')
    points = [parse_point(_p) for _p in args.points]
    for point in points:
        if len(point) != nvars:
            raise UsageError(f'--point needs {nvars} coordinates, got {len(point)}')
    return points


def cmd_classify(session, args, config):
    fol = session.foliation(args.form)
    points = _points(args, fol.nvars)
    outputs = ClassifyMod(fol, max_pulse_size=len(points)).drain(points)
    return _header('classify', form=fol.name, points=_verdict_rows(outputs))


def cmd_tangency(session, args, config):
    fol = session.foliation(args.form)
    polymap = session.polymap(args.map)
    report = tangency_analysis(polymap, fol, names=session.variables)
    return _header('tangency', form=fol.name, map=polymap.name, **report)


def cmd_critical(session, args, config):
    polymap = session.polymap(args.map)
    top = min(polymap.source_dim, polymap.target_dim)
    ks = list(range(0, top + 1)) if args.k is None else parse_int_list(args.k)
    for k in ks:
        if k > top:
            raise UsageError(f'--k {k} out of range [0, {top}]')
    outputs = CriticalMod(polymap, names=session.variables, max_pulse_size=len(ks)).drain(ks)
    return _header('critical', map=polymap.name, projective=polymap.projective,
                   source_dim=polymap.source_dim, target_dim=polymap.target_dim,
                   table=outputs)


def cmd_generic_map(session, args, config):
    polymap = session.polymap(args.map)
    return _header('generic-map', map=polymap.name, **check_generic_map(polymap))


def cmd_milnor(session, args, config):
    poly = session.poly(args.form)
    bound = args.bound if args.bound is not None else config.truncation_bound
    rows = []
    for point in _points(args, poly.nvars, default_origin=True):
        mu = milnor_number(poly, point, bound=bound)
        rows.append({'point': ','.join(str(_c) for _c in point),
                     'mu': mu})
    return _header('milnor', poly=poly.to_string(session.variables), bound=bound, points=rows)


def catalog_session(entry):
    """A session binding the entry's form as ``w`` on variables x0, x1, ..."""
    session = Session()
    session.variables = [f'x{_i}' for _i in range(entry.nvars)]
    session.bindings['w'] = entry.foliation.omega
    return session


def cmd_catalog(name, args, config):
    entries = []
    for entry in lookup(name):
        item = entry.asdict()
        item['dsl'] = catalog_session(entry).to_text()
        entries.append(item)
    return _header('catalog', name=name, entries=entries)


COMMAND_TABLE = {'check': cmd_check,
                 'sing': cmd_sing,
                 'unfold': cmd_unfold,
                 'regularity': cmd_regularity,
                 'rank': cmd_rank,
                 'stabcones': cmd_stabcones,
                 'determinacy': cmd_determinacy,
                 'classify': cmd_classify,
                 'tangency': cmd_tangency,
                 'critical': cmd_critical,
                 'generic-map': cmd_generic_map,
                 'milnor': cmd_milnor}


def run_command(session, command, args=None, config=None):
    """Run **command** on a parsed session

    :param session: parsed session (the entry name for ``catalog``)
    :type session: :class:`~FOLCALC.workflow.dsl.Session` or str
    :param command: one of **COMMANDS**
    :type command: str
    :param args: parsed command line options, defaults to None (all defaults)
    :type args: argparse.Namespace, optional
    :param config: run configuration, defaults to None (all defaults)
    :type config: :class:`~FOLCALC.util.header.FolcalcConfig`, optional
    :returns: **report** (*dict*) -- JSON-serializable, keys in a fixed order
    """
    if command not in COMMANDS:
        raise UsageError(f'command "{command}" not supported. Use: {", ".join(COMMANDS)}')
    if args is None:
        args = build_parser().parse_args([command, '-'])
    if config is None:
        config = load_config()
    if command == 'catalog':
        return cmd_catalog(session, args, config)
    return COMMAND_TABLE[command](session, args, config)


######################
# Report rendering   #
######################

def render_json(report):
    return json.dumps(report, indent=2)


def render_text(report):
    """Human-readable rendering of a report: scalars as ``key: value``,
    lists of rows as pandas tables"""
    lines = []
    for key, value in report.items():
        if isinstance(value, list) and value and all(isinstance(_r, dict) for _r in value):
            frame = pd.DataFrame([{_k: _format(_v) for _k, _v in _r.items()} for _r in value])
            lines.append(f'{key}:')
            lines.append(frame.to_string(index=False))
        elif isinstance(value, dict):
            lines.append(f'{key}:')
            lines.extend(f'  {_k}: {_format(_v)}' for _k, _v in value.items())
        else:
            lines.append(f'{key}: {_format(value)}')
    return '\n'.join(lines)


def _format(value):
    if isinstance(value, list):
        return '[' + ', '.join(_format(_v) for _v in value) + ']'
    if isinstance(value, str) and '\n' in value:
        return value.strip().replace('\n', ' ')
    if value is None:
        return '-'
    return str(value)


##########
# main   #
##########

def main(argv=None):
    """Entry point of the ``folcalc`` script; returns the exit status"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = load_config(args.config)
    except (UsageError, FileNotFoundError, KeyError, ValueError) as e:
        setup_logging()
        Logger.error(rich_error_message(e))
        return EXIT_USAGE
    setup_logging(config.log_level, config.log_file)
    try:
        if args.command == 'catalog':
            report = run_command(args.file, 'catalog', args, config)
        else:
            with open(args.file, 'r', encoding='utf-8') as fid:
                text = fid.read()
            session = parse_session(text)
            report = run_command(session, args.command, args, config)
    except PreconditionError as e:
        Logger.error(rich_error_message(e))
        return EXIT_PRECONDITION
    except (DSLError, UsageError, OSError, UnicodeDecodeError, KeyError, ValueError, TypeError) as e:
        Logger.error(rich_error_message(e))
        return EXIT_USAGE
    except FolcalcError as e:
        Logger.critical(rich_error_message(e))
        return EXIT_USAGE
    print(render_json(report) if args.json else render_text(report))
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
