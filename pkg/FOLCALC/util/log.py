import logging, os
from logging.handlers import TimedRotatingFileHandler

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def rich_error_message(e):
    etype = type(e).__name__
    emsg = str(e)
    return f'{etype}: {emsg}'


def setup_logging(level='WARNING', log_file=None):
    """Attach a terminal handler and, optionally, a rotating file handler
    to the root logger

    :param level: logging level name for the terminal, defaults to 'WARNING'
    :type level: str, optional
    :param log_file: path of a log file rotated at midnight with 3 backups,
        defaults to None (no file logging)
    :type log_file: str, optional
    :returns: **root** (*logging.Logger*) -- the configured root logger
    """
    if not isinstance(level, str):
        raise TypeError('level must be type str')
    if level.upper() not in ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']:
        raise ValueError(f'level "{level}" not supported. Use: DEBUG, INFO, WARNING, ERROR, or CRITICAL')
    root = logging.getLogger()
    fmt = logging.Formatter(LOG_FORMAT)
    # Drop handlers from earlier calls so repeated CLI runs do not duplicate lines
    for _h in list(root.handlers):
        if getattr(_h, '_folcalc', False):
            root.removeHandler(_h)
    ch = logging.StreamHandler()
    ch.setFormatter(fmt)
    ch.setLevel(level.upper())
    ch._folcalc = True
    root.addHandler(ch)
    if log_file:
        log_dir = os.path.dirname(os.path.abspath(log_file))
        os.makedirs(log_dir, exist_ok=True)
        fh = TimedRotatingFileHandler(filename=log_file,
                                      when='midnight',
                                      interval=1,
                                      backupCount=3)
        fh.setFormatter(fmt)
        fh.setLevel(logging.DEBUG)
        fh._folcalc = True
        root.addHandler(fh)
    root.setLevel(logging.DEBUG)
    return root
