import atexit
import logging
from time import perf_counter
from functools import wraps
from collections import defaultdict
from logging import DEBUG, INFO, WARNING, ERROR
from tqdm import tqdm


class LogFormatter(logging.Formatter):
    """Bare messages at INFO, lowercase level prefixes otherwise."""

    prefixes = {
        DEBUG: "debug [%(module)s]: ",
        WARNING: "warning: ",
        ERROR: "error: ",
    }

    def format(self, record):
        prefix = self.prefixes.get(record.levelno, '') % record.__dict__
        return prefix + record.getMessage()

logger = logging.getLogger('monocover')
logger.propagate = False
_handler = logging.StreamHandler()
_handler.setFormatter(LogFormatter())
logger.addHandler(_handler)

dbg = logger.debug
info = logger.info
warn = logger.warning
error = logger.error

LEVELS = {'debug': DEBUG, 'info': INFO, 'warning': WARNING, 'error': ERROR}

def setloglevel(level):
    if isinstance(level, str): level = LEVELS[level.lower()]
    logger.setLevel(level)

def verbosity(verbose=0, quiet=False):
    """The log level for `-v` counts and `-q`: WARNING by default."""
    if quiet: return ERROR
    return [WARNING, INFO, DEBUG][min(verbose, 2)]


class Profile:
    """ Accumulates calls and wall time per name.

    The totals are logged at exit when the level allows INFO.
    """
    calls = defaultdict(int)
    millis = defaultdict(float)

    def __init__(self, name):
        self.name = name

    def __enter__(self):
        self.start = perf_counter()
        return self

    def __exit__(self, *_):
        ms = (perf_counter() - self.start) * 1000
        self.calls[self.name] += 1
        self.millis[self.name] += ms
        dbg('%s took %.2f ms', self.name, ms)

    @classmethod
    def report(cls):
        """(name, calls, total ms) rows, slowest first."""
        return sorted(((name, cls.calls[name], ms) for name, ms in cls.millis.items()),
                      key=lambda row: -row[2])

    @classmethod
    def log_report(cls):
        rows = cls.report()
        if not rows: return
        info('%-24s %7s %12s', 'profile', 'calls', 'ms')
        for name, calls, ms in rows:
            info('%-24s %7d %12.2f', name, calls, ms)

atexit.register(Profile.log_report)

def timeit(fn):
    @wraps(fn)
    def wrapper(*args, **kwds):
        with Profile(fn.__qualname__):
            return fn(*args, **kwds)
    return wrapper


def progbar(iterable, unit='step', **kwds):
    """A progress bar, shown only when INFO messages are."""
    if not logger.isEnabledFor(INFO): return iterable
    return tqdm(iterable, unit=unit, leave=False, dynamic_ncols=True, **kwds)
