import os
import time

from .exceptions import ConfigError, GuardExceeded


ENV_PREFIX = 'MENGER_'

GUARD_DEFAULTS = {
    'node_budget': 2000000,
    'state_budget': 500000,
    'local_budget': 10 ** 7,
    'max_vertices': 100,
    'sat_max_vars': 30,
    'max_expanded_width': 9,
    'time_limit': None,
}

METHODS = ('auto', 'brute', 'dp_general', 'dp_tw')
VARIANTS = ('deg4', 'deg3')


def _env_value(name):
    raw = os.environ.get(ENV_PREFIX + name.upper())

    if raw is None or raw == '':
        return None

    try:
        return float(raw) if name == 'time_limit' else int(raw)

    except ValueError:
        raise ConfigError('%s%s must be a number, got %r' % (ENV_PREFIX, name.upper(), raw))


class Guards(object):
    """ Resource limits shared by all solvers.

        Every value is resolved in the order: explicit keyword, ``MENGER_<NAME>`` environment
        variable, built-in default. A tripped guard always raises
        :class:`menger.exceptions.GuardExceeded`, it is never reported as a "no" answer.
    """

    def __init__(self, **overrides):
        unknown = set(overrides) - set(GUARD_DEFAULTS)
        if unknown:
            raise ConfigError('Unknown guards: %s' % ', '.join(sorted(unknown)))

        for name, default in GUARD_DEFAULTS.items():
            value = overrides.get(name)

            if value is None:
                value = _env_value(name)

            if value is None:
                value = default

            if value is not None and value <= 0:
                raise ConfigError('Guard %s must be positive, got %r' % (name, value))

            setattr(self, name, value)

    def as_dict(self):
        return dict((name, getattr(self, name)) for name in sorted(GUARD_DEFAULTS))

    def __repr__(self):
        return 'Guards(%s)' % ', '.join('%s=%r' % item for item in sorted(self.as_dict().items()))

    def deadline(self):
        if self.time_limit is None:
            return None

        return time.monotonic() + self.time_limit


def check_deadline(deadline, method=None):
    if deadline is not None and time.monotonic() > deadline:
        raise GuardExceeded('time_limit', 'deadline', method=method)


class RunConfig(object):
    """ Settings of one command line invocation.
    """

    def __init__(self, subcommand, r=None, k=None, variant='deg4', method='auto', seed=0, trials=0,
                 guards=None, **paths):
        self.subcommand = subcommand
        self.r = r
        self.k = k
        self.variant = variant
        self.method = method
        self.seed = seed
        self.trials = trials
        self.guards = guards if guards is not None else Guards()
        self.paths = paths

        self.validate()

    def validate(self):
        if self.variant not in VARIANTS:
            raise ConfigError('Unknown variant %r (expected one of %s)' % (self.variant, ', '.join(VARIANTS)))

        if self.method not in METHODS:
            raise ConfigError('Unknown method %r (expected one of %s)' % (self.method, ', '.join(METHODS)))

        if self.trials < 0:
            raise ConfigError('trials must not be negative')

        if self.subcommand == 'reduce':
            if self.k is None or self.k < 2:
                raise ConfigError('reduce requires k >= 2')

            minimum = 4 if self.variant == 'deg3' else 3
            if self.r is None or self.r < minimum:
                raise ConfigError('variant %s requires r >= %d' % (self.variant, minimum))

    def path(self, name):
        return self.paths.get(name)
