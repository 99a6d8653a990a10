import numpy as np
from numpy.polynomial import Polynomial

from djapps.core.exceptions import ArityError, DomainError


INTERPOLATION_DEGREE = 4


def divided_differences(nodes, values):
    """Top row of the Newton divided differences table."""
    x = np.asarray(nodes, dtype=float)
    coef = np.array(values, dtype=float)
    n = len(x)
    for j in range(1, n):
        coef[j:n] = (coef[j:n] - coef[j - 1:n - 1]) / (x[j:n] - x[0:n - j])
    return coef


def newton_to_monomial(coef, nodes):
    """
    Expand the Newton form sum_k d_k prod_{j<k} (t - x_j) into monomial
    coefficients, nesting from the highest term down (Horner order).
    """
    result = Polynomial([coef[-1]])
    for d, x in zip(coef[-2::-1], nodes[len(coef) - 2::-1]):
        result = result * Polynomial([-x, 1.0]) + d
    return result


def interpolate(nodes, values, degree=INTERPOLATION_DEGREE):
    """
    Interpolating polynomial of the given degree through (node, value)
    pairs. Coefficients are ascending in powers of t.
    """
    nodes = np.asarray(nodes, dtype=float)
    values = np.asarray(values, dtype=float)
    if len(nodes) != degree + 1:
        raise ArityError(
            'Degree %d interpolation needs %d nodes, got %d.'
            % (degree, degree + 1, len(nodes)))
    if len(values) != len(nodes):
        raise ArityError(
            'Got %d values for %d nodes.' % (len(values), len(nodes)))
    if len(np.unique(nodes)) != len(nodes):
        raise DomainError('Interpolation nodes must be distinct: %s' % nodes.tolist())
    coef = divided_differences(nodes, values)
    p = newton_to_monomial(coef, nodes)
    padded = np.zeros(degree + 1)
    padded[:len(p.coef)] = p.coef
    return Polynomial(padded)
