import math

# only the most recent partial sums go into the table
WYNN_WINDOW = 50


def wynn_epsilon(sequence):
    """
    Wynn's epsilon algorithm on a sequence of partial sums.

    Builds the epsilon table column by column; even columns hold the
    Shanks-transformed estimates. The column whose last two entries agree
    best wins.

    Returns:
        (estimate, error_estimate)
    """
    s = [float(v) for v in sequence][-WYNN_WINDOW:]
    if not s:
        raise ValueError('wynn_epsilon needs at least one term')
    if len(s) == 1:
        return s[0], math.inf

    best, best_error = s[-1], abs(s[-1] - s[-2])
    previous = [0.0] * (len(s) + 1)
    current = s
    column = 0
    while len(current) > 1:
        diffs = [current[j + 1] - current[j] for j in range(len(current) - 1)]
        if diffs[-1] == 0 and column % 2 == 0:
            # estimates in this column have stopped moving
            return current[-1], 10 * len(s) * 2.2e-16 * abs(current[-1])
        if any(d == 0 for d in diffs):
            break
        following = [previous[j + 1] + 1 / d for j, d in enumerate(diffs)]
        column += 1
        previous, current = current, following
        if column % 2 == 0 and len(current) >= 2:
            if not all(math.isfinite(v) for v in current[-2:]):
                break
            error = abs(current[-1] - current[-2])
            if error < best_error:
                best, best_error = current[-1], error
    # rounding in the table grows with its depth
    return best, best_error + 10 * len(s) * 2.2e-16 * abs(best)
