import numpy as np

from ..errors import InvalidOrder


def _check_order(n):
    if isinstance(n, bool) or not np.isfinite(n) or int(n) != n or n < 0:
        raise InvalidOrder(n)
    return int(n)


def _recurrence(n, x, first):
    x = np.asarray(x, dtype=float)
    previous = np.ones_like(x)
    if n == 0:
        current = previous
    else:
        current = first * x
        for _ in range(n - 1):
            previous, current = current, 2 * x * current - previous
    if current.ndim == 0:
        return float(current)
    return current


def chebyshev_t(n, x):
    """T_n(x) by the three term recurrence; x may be an array"""
    return _recurrence(_check_order(n), x, 1.0)


def chebyshev_u(n, x):
    """U_n(x), same recurrence started from U_1 = 2x"""
    return _recurrence(_check_order(n), x, 2.0)
