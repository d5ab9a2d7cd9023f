from dataclasses import dataclass
import math

from ..errors import InvalidOrder


@dataclass(frozen=True)
class LommelParams:
    """
    Orders and argument of s_{mu,nu}(z).

    Also used for the index-integral variables, where nu runs over the
    integration variable at fixed mu in {-1, 0}.
    """
    mu: float
    nu: float
    z: float

    @property
    def denominator(self):
        return (self.mu + 1) ** 2 - self.nu ** 2

    @property
    def series_parameters(self):
        """The two lower parameters of the 1F2 factor"""
        return (self.mu - self.nu + 3) / 2, (self.mu + self.nu + 3) / 2


@dataclass(frozen=True)
class EvalResult:
    value: float
    abs_error_estimate: float
    terms_used: int = 0

    def scaled(self, factor):
        return EvalResult(self.value * factor, abs(factor) * self.abs_error_estimate, self.terms_used)


@dataclass(frozen=True)
class ChebDegree:
    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not math.isfinite(self.n) or int(self.n) != self.n or self.n < 0:
            raise InvalidOrder(self.n)
        object.__setattr__(self, 'n', int(self.n))


def combine(*terms):
    """
    Linear combination of (coefficient, EvalResult) pairs, errors added in
    absolute value.
    """
    value = math.fsum(c * r.value for c, r in terms)
    error = math.fsum(abs(c) * r.abs_error_estimate for c, r in terms)
    used = max((r.terms_used for _, r in terms), default=0)
    return EvalResult(value, error, used)
