"""
:module: FOLCALC.util.config
:license: AGPL-3.0
:purpose:
    Read ``.ini`` run configurations with :class:`~configparser.ConfigParser`
    (extended interpolation) into a :class:`~FOLCALC.util.header.FolcalcConfig`.

    Required section is [Folcalc]; [Logging] is optional::

        [Folcalc]
        truncation_bound: 30
        degree_bound:

        [Logging]
        level: WARNING
        log_file: ${Folcalc:workdir}/folcalc.log
"""
import configparser, logging, os
from FOLCALC.util.header import FolcalcConfig

Logger = logging.getLogger(__name__)

required_sections = ['Folcalc']


def load_config(config_file=None):
    """Load a run configuration

    :param config_file: path to an ``.ini`` file, defaults to None (all defaults)
    :type config_file: str, optional
    :returns: **config** (*FolcalcConfig*)
    :raises FileNotFoundError: config_file does not exist
    :raises KeyError: a required section is missing
    """
    config = FolcalcConfig()
    if config_file is None:
        return config
    if not os.path.isfile(config_file):
        raise FileNotFoundError(f'config_file "{config_file}" not found')
    cfgpar = configparser.ConfigParser(
        interpolation=configparser.ExtendedInterpolation()
    )
    cfgpar.read(config_file)
    for _sec in required_sections:
        if _sec not in cfgpar.sections():
            raise KeyError(f'required section "{_sec}" not included in config_file')

    fsec = cfgpar['Folcalc']
    if fsec.get('truncation_bound', '').strip():
        config.truncation_bound = fsec.getint('truncation_bound')
    if fsec.get('degree_bound', '').strip():
        config.degree_bound = fsec.getint('degree_bound')
    if cfgpar.has_section('Logging'):
        lsec = cfgpar['Logging']
        if lsec.get('level', '').strip():
            config.log_level = lsec.get('level').strip().upper()
        if lsec.get('log_file', '').strip():
            config.log_file = lsec.get('log_file').strip()
    Logger.debug(f'loaded configuration from {config_file}')
    return config
