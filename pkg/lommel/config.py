import configparser
import logging
import math
import os
from dataclasses import dataclass, field, replace

from . import settings
from .errors import ConfigError

log = logging.getLogger(__name__)

# grid entries that have to be whole numbers
INTEGER_GRIDS = ('n', 'm', 'K')


def _default_grids():
    return {name: tuple(values) for name, values in settings.DEFAULT_GRIDS.items()}


@dataclass(frozen=True)
class Config:
    series_eps: float = settings.SERIES_EPS
    max_terms: int = settings.MAX_TERMS
    quad_tol_finite: float = settings.QUAD_TOL_FINITE
    quad_tol_osc: float = settings.QUAD_TOL_OSC
    max_segments: int = settings.MAX_SEGMENTS
    integer_eps: float = settings.INTEGER_EPS
    grids: dict = field(default_factory=_default_grids)
    output_dir: str = settings.OUTPUT_DIR
    workers: int = 1
    # overrides every identity tolerance when set (--tol)
    case_tol: float = None

    def __post_init__(self):
        for name in ('series_eps', 'quad_tol_finite', 'quad_tol_osc', 'integer_eps'):
            if not getattr(self, name) > 0:
                raise ConfigError('{} must be > 0, got {!r}'.format(name, getattr(self, name)))
        for name in ('max_terms', 'max_segments', 'workers'):
            if getattr(self, name) < 1:
                raise ConfigError('{} must be >= 1, got {!r}'.format(name, getattr(self, name)))
        if self.case_tol is not None and not self.case_tol > 0:
            raise ConfigError('tolerance must be > 0, got {!r}'.format(self.case_tol))

    def series_options(self):
        """Keyword arguments understood by every series evaluator"""
        return dict(series_eps=self.series_eps, max_terms=self.max_terms, integer_eps=self.integer_eps)

    def tolerance_for(self, identity_id):
        if self.case_tol is not None:
            return self.case_tol
        return settings.IDENTITY_TOLERANCES[str(identity_id)]

    def grid(self, name):
        return self.grids.get(name, tuple(settings.DEFAULT_GRIDS.get(name, ())))

    def with_grids(self, **overrides):
        grids = dict(self.grids)
        grids.update({k: tuple(v) for k, v in overrides.items()})
        return replace(self, grids=grids)

    @property
    def conventions_path(self):
        return os.path.join(self.output_dir, settings.CONVENTIONS_FILENAME)


def parse_number_list(text, name='grid'):
    """
    Parses "0.5, 1, 2" into a tuple of floats. Integer grids (n, m, K) come
    back as ints.
    """
    values = []
    for piece in text.split(','):
        piece = piece.strip()
        if not piece:
            continue
        try:
            value = float(piece)
        except ValueError:
            raise ConfigError('bad number {!r} in {}'.format(piece, name))
        if name in INTEGER_GRIDS:
            if not math.isfinite(value) or value != int(value):
                raise ConfigError('{} needs whole numbers, got {!r}'.format(name, piece))
            value = int(value)
        values.append(value)
    return tuple(values)


def _get(parser, section, key, kind, default):
    if not parser.has_option(section, key):
        return default
    raw = parser.get(section, key)
    try:
        return kind(raw)
    except ValueError:
        raise ConfigError('[{}] {} = {!r} is not a valid {}'.format(section, key, raw, kind.__name__))


def load_config(path=None, environ=None):
    """
    Reads an INI file on top of the defaults in lommel.settings.

    Arguments:
        path: file to read, None for pure defaults
        environ: mapping used for the output directory override (os.environ)
    Returns:
        Config
    """
    environ = os.environ if environ is None else environ
    parser = configparser.ConfigParser(interpolation=None)
    # keep K and friends case sensitive
    parser.optionxform = str
    if path is not None:
        if not os.path.isfile(path):
            raise ConfigError('config file not found', path)
        try:
            parser.read(path)
        except configparser.Error as e:
            raise ConfigError(str(e).splitlines()[0], path)

    defaults = Config()
    grids = dict(defaults.grids)
    if parser.has_section('grids'):
        for name, raw in parser.items('grids'):
            grids[name] = parse_number_list(raw, name)

    case_tol = _get(parser, 'identities', 'tolerance', float, None)
    try:
        config = Config(
            series_eps=_get(parser, 'series', 'series_eps', float, defaults.series_eps),
            max_terms=_get(parser, 'series', 'max_terms', int, defaults.max_terms),
            integer_eps=_get(parser, 'series', 'integer_eps', float, defaults.integer_eps),
            quad_tol_finite=_get(parser, 'quadrature', 'quad_tol_finite', float, defaults.quad_tol_finite),
            quad_tol_osc=_get(parser, 'quadrature', 'quad_tol_osc', float, defaults.quad_tol_osc),
            max_segments=_get(parser, 'quadrature', 'max_segments', int, defaults.max_segments),
            grids=grids,
            output_dir=_get(parser, 'output', 'output_dir', str, defaults.output_dir),
            workers=_get(parser, 'output', 'workers', int, defaults.workers),
            case_tol=case_tol,
        )
    except ConfigError as e:
        raise ConfigError(e.message, path)

    if environ.get(settings.OUTPUT_DIR_ENV):
        log.debug("Output directory overridden by {}".format(settings.OUTPUT_DIR_ENV))
        config = replace(config, output_dir=environ[settings.OUTPUT_DIR_ENV])
    return config


def dump_config(config):
    """
    Serialises a Config back to INI text that load_config reads back to an
    equal Config.
    """
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    parser['series'] = {
        'series_eps': repr(config.series_eps),
        'max_terms': str(config.max_terms),
        'integer_eps': repr(config.integer_eps),
    }
    parser['quadrature'] = {
        'quad_tol_finite': repr(config.quad_tol_finite),
        'quad_tol_osc': repr(config.quad_tol_osc),
        'max_segments': str(config.max_segments),
    }
    parser['grids'] = {name: ', '.join(repr(v) for v in values) for name, values in sorted(config.grids.items())}
    parser['output'] = {
        'output_dir': config.output_dir,
        'workers': str(config.workers),
    }
    if config.case_tol is not None:
        parser['identities'] = {'tolerance': repr(config.case_tol)}

    lines = []
    for section in parser.sections():
        lines.append('[{}]'.format(section))
        for key, value in parser.items(section):
            lines.append('{} = {}'.format(key, value))
        lines.append('')
    return '\n'.join(lines)
