from dataclasses import dataclass
import math
from typing import Callable, Optional

from ..errors import ArgumentOutOfRange

MODES = ('auto', 'absolute', 'accelerated')


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    converged: bool
    segments_used: int
    # tail added by the absolute-convergence model, 0 otherwise
    tail_contribution: float = 0.0
    mode: str = ''


@dataclass(frozen=True)
class OscillatorySpec:
    """
    A semi-infinite integrand split at multiples of zero_spacing.

    The integrand takes a numpy array of abscissae and returns an array.
    algebraic_decay_order is the exponent p of the envelope x^-p.
    max_frequency, when given, is the fastest angular frequency in the
    integrand; each segment then gets one Gauss panel per period of it.
    """
    integrand: Callable
    zero_spacing: float
    algebraic_decay_order: float
    mode: str = 'auto'
    start: float = 0.0
    max_frequency: Optional[float] = None

    def __post_init__(self):
        if not self.zero_spacing > 0:
            raise ArgumentOutOfRange('zero_spacing', self.zero_spacing, 0.0)
        if self.mode not in MODES:
            raise ValueError("mode must be one of {}, got {!r}".format(MODES, self.mode))
        if self.mode == 'absolute' and not self.algebraic_decay_order > 1:
            raise ArgumentOutOfRange('algebraic_decay_order', self.algebraic_decay_order, 1.0)
        if not self.algebraic_decay_order > 0:
            raise ArgumentOutOfRange('algebraic_decay_order', self.algebraic_decay_order, 0.0)
        if self.max_frequency is not None and not self.max_frequency > 0:
            raise ArgumentOutOfRange('max_frequency', self.max_frequency, 0.0)

    @property
    def panels_per_segment(self):
        if self.max_frequency is None:
            return 1
        return max(1, int(math.ceil(self.max_frequency * self.zero_spacing / (2 * math.pi))))
