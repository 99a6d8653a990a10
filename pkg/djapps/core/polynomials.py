"""
Real root isolation for univariate polynomials.

Roots are counted with Sturm sequences, the interval is split until every
piece holds exactly one distinct root, and each root is then refined with a
bracketing solver.
"""
import logging

import numpy as np
from numpy.polynomial import Polynomial
from scipy import optimize

from .exceptions import DomainError


logger = logging.getLogger(__name__)

ROOT_TOLERANCE = 1e-10


def trim(p, rtol=1e-12):
    """Drop leading coefficients that are negligible against the largest one."""
    coef = np.asarray(p.coef, dtype=float)
    scale = np.max(np.abs(coef)) if coef.size else 0.0
    if scale == 0.0:
        return Polynomial([0.0])
    return Polynomial(coef).trim(tol=scale * rtol)


def is_zero(p):
    return not np.any(np.asarray(p.coef, dtype=float))


def sturm_sequence(p):
    """
    Sturm chain p0 = p, p1 = p', p(i+1) = -rem(p(i-1), p(i)).
    """
    p0 = trim(p)
    if is_zero(p0):
        raise DomainError('The zero polynomial has no Sturm sequence.')
    sequence = [p0]
    if p0.degree() == 0:
        return sequence
    sequence.append(trim(p0.deriv()))
    while sequence[-1].degree() > 0:
        _, remainder = divmod(sequence[-2], sequence[-1])
        remainder = trim(remainder, rtol=1e-10)
        if is_zero(remainder):
            break
        sequence.append(-remainder)
    return sequence


def sign_variations(sequence, x):
    values = [float(q(x)) for q in sequence]
    signs = [np.sign(v) for v in values if v != 0.0]
    return int(sum(1 for a, b in zip(signs, signs[1:]) if a != b))


def count_roots(p, a, b, sequence=None):
    """Number of distinct real roots of ``p`` in the half-open interval (a, b]."""
    if sequence is None:
        sequence = sturm_sequence(p)
    return sign_variations(sequence, a) - sign_variations(sequence, b)


def _refine(p, lo, hi, tol):
    f_lo, f_hi = float(p(lo)), float(p(hi))
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if f_lo * f_hi < 0.0:
        return optimize.brentq(p, lo, hi, xtol=tol)
    # even multiplicity: the root is a touching minimum of |p|
    result = optimize.minimize_scalar(
        lambda x: abs(float(p(x))), bounds=(lo, hi), method='bounded',
        options={'xatol': tol})
    return float(result.x)


def isolate_roots(p, a, b, tol=ROOT_TOLERANCE):
    """
    Sorted distinct real roots of ``p`` in the closed interval [a, b].

    Raises DomainError for the zero polynomial, whose root set is the whole
    interval.
    """
    if a > b:
        raise DomainError('Empty interval [%s, %s].' % (a, b))
    sequence = sturm_sequence(p)
    p0 = sequence[0]
    roots = []
    if float(p0(a)) == 0.0:
        roots.append(float(a))

    stack = [(float(a), float(b), count_roots(p0, a, b, sequence))]
    brackets = []
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1 or hi - lo < tol:
            brackets.append((lo, hi))
            continue
        mid = 0.5 * (lo + hi)
        stack.append((lo, mid, count_roots(p0, lo, mid, sequence)))
        stack.append((mid, hi, count_roots(p0, mid, hi, sequence)))

    for lo, hi in brackets:
        roots.append(float(_refine(p0, lo, hi, tol)))
    roots = sorted(roots)
    logger.debug('Isolated %d root(s) of %s on [%s, %s]', len(roots), p0, a, b)
    return roots
