"""
Exceptions raised by the Lommel harness.

All of them derive from LommelError so callers that only care about
"did the numerics work" can catch one thing. Each keeps the values that
caused it around, so the identities layer can put them in a report.
"""


class LommelError(Exception):
    pass


class DegenerateParameter(LommelError):
    def __init__(self, name, value):
        self.name = name
        self.value = value

    def __str__(self):
        return '{} = {!r} is a nonpositive integer, series undefined'.format(self.name, self.value)


class PoleAtOrder(LommelError):
    def __init__(self, mu, nu):
        self.mu = mu
        self.nu = nu

    def __str__(self):
        return 'pole of s_{{mu,nu}}: (mu+1)^2 = nu^2 at mu = {!r}, nu = {!r}'.format(self.mu, self.nu)


class NoConvergence(LommelError):
    def __init__(self, what, steps, last_change=None):
        self.what = what
        self.steps = steps
        self.last_change = last_change

    def __str__(self):
        msg = '{} did not converge after {} steps'.format(self.what, self.steps)
        if self.last_change is not None:
            msg += ' (last change {:.3e})'.format(self.last_change)
        return msg


class InvalidOrder(LommelError):
    def __init__(self, order):
        self.order = order

    def __str__(self):
        return 'order must be a nonnegative integer, got {!r}'.format(self.order)


class ZeroOrder(LommelError):
    def __str__(self):
        return 'recurrence divides by 2x, order x = 0 not allowed'


class ArgumentOutOfRange(LommelError):
    def __init__(self, name, value, limit):
        self.name = name
        self.value = value
        self.limit = limit

    def __str__(self):
        return '{} = {!r} outside the supported range (limit {!r})'.format(self.name, self.value, self.limit)


class UnsupportedOrder(LommelError):
    def __init__(self, order, low, high):
        self.order = order
        self.low = low
        self.high = high

    def __str__(self):
        return 'Gauss-Legendre order {!r} not in [{}, {}]'.format(self.order, self.low, self.high)


class MaxDepth(LommelError):
    def __init__(self, a, b, depth):
        self.a = a
        self.b = b
        self.depth = depth

    def __str__(self):
        return 'refinement depth {} exceeded near [{!r}, {!r}], transform the singularity away'.format(
            self.depth, self.a, self.b)


class SpecMismatch(LommelError):
    def __init__(self, declared, measured):
        self.declared = declared
        self.measured = measured

    def __str__(self):
        return 'declared decay order {!r} but integrand decays like x^-{:.2f}'.format(self.declared, self.measured)


class BadFit(LommelError):
    def __init__(self, residual, tail):
        self.residual = residual
        self.tail = tail

    def __str__(self):
        return 'tail fit residual {:.3e} too large for tail {:.3e}'.format(self.residual, self.tail)


class ConfigError(LommelError):
    def __init__(self, message, path=None):
        self.message = message
        self.path = path

    def __str__(self):
        if self.path:
            return '{}: {}'.format(self.path, self.message)
        return self.message


class UnstableSegmentation(LommelError):
    def __init__(self, spacings, gap, limit):
        self.spacings = spacings
        self.gap = gap
        self.limit = limit

    def __str__(self):
        return 'segment lengths {} give integrals {:.3e} apart, more than {:.1e}'.format(
            ', '.join('{:.4g}'.format(s) for s in self.spacings), self.gap, self.limit)
