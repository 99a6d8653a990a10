import numpy as np

from djapps.core.exceptions import ArityError, DomainError


def regress_linear(xs, ys):
    """
    Ordinary least squares line through (x, y) pairs.

    Returns (slope, intercept) with slope = Sxy / Sxx and
    intercept = mean(y) - slope * mean(x).
    """
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.shape != y.shape:
        raise ArityError('Got %d x values and %d y values.' % (x.size, y.size))
    if x.size < 2:
        raise DomainError('Linear regression needs at least two points.')
    dx = x - x.mean()
    sxx = float(dx @ dx)
    if sxx == 0.0:
        raise DomainError(
            'Degenerate design: all x values equal %s.' % x[0])
    slope = float(dx @ (y - y.mean())) / sxx
    intercept = float(y.mean()) - slope * float(x.mean())
    return slope, intercept
