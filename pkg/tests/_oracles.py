"""Independent numerical oracles used by the test suite.

Everything here works from raw (M, Q, Lambda) coefficients with generic
numpy routines, deliberately avoiding the library's own formulas, so that
agreement between the two is evidence rather than tautology.
"""

from __future__ import annotations

import numpy as np


def quartic_coeffs(M, Q, L):
    """Coefficients of P(r) = -L r^4 + r^2 - 2 M r + Q^2, highest first."""
    return np.array([-L, 0.0, 1.0, -2.0 * M, Q * Q])


def companion_roots(M, Q, L):
    """All roots of P via the numpy companion-matrix solver."""
    return np.roots(quartic_coeffs(M, Q, L))


def companion_positive_real_roots(M, Q, L, imag_tol=1e-7):
    r = companion_roots(M, Q, L)
    real = r[np.abs(r.imag) <= imag_tol * np.maximum(1.0, np.abs(r.real))].real
    return np.sort(real[real > 0.0])


def _scalar_bisect(coeffs, lo, hi, iters=200):
    flo = np.polyval(coeffs, lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm = np.polyval(coeffs, mid)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def grid_positive_roots(M, Q, L, n_grid=4001):
    """Positive real roots of P by sign-change scan plus bisection.

    The scan walks the monotone pieces of P: sign changes of P' are located
    on a dense log grid first, then P is evaluated at the resulting knots
    and every strict sign flip is refined by bisection.  No closed-form
    threshold enters.
    """
    coeffs = quartic_coeffs(M, Q, L)
    dcoeffs = np.polyder(coeffs)
    rb = 1.0 + max(1.0, 2.0 * M, Q * Q) / L
    while np.polyval(coeffs, rb) >= 0.0:
        rb *= 2.0

    grid = np.geomspace(rb * 1e-16, rb, n_grid)
    dsign = np.sign(np.polyval(dcoeffs, grid))
    flips = np.nonzero(dsign[:-1] * dsign[1:] < 0)[0]
    knots = [0.0]
    knots.extend(_scalar_bisect(dcoeffs, grid[i], grid[i + 1]) for i in flips)
    knots.append(rb)

    vals = [np.polyval(coeffs, k) for k in knots]
    roots = []
    for (a, b), (fa, fb) in zip(zip(knots[:-1], knots[1:]), zip(vals[:-1], vals[1:])):
        if fa == 0.0:
            continue
        if fb == 0.0 or (fa > 0.0) != (fb > 0.0):
            roots.append(_scalar_bisect(coeffs, a, b))
    return np.array(roots)


def quad_tortoise_increment(params_f, r_from, r_to, **kw):
    """Integral of 1/f from r_from to r_to by adaptive quadrature."""
    from scipy.integrate import quad

    val, err = quad(lambda s: 1.0 / params_f(s), r_from, r_to, limit=400, **kw)
    return val, err


def finite_difference_jacobian(fn, x, h_rel=1e-6, h_min=1e-8):
    """Central-difference Jacobian of fn: R^n -> R^m at x."""
    x = np.asarray(x, dtype=float)
    f0 = np.asarray(fn(x), dtype=float)
    jac = np.zeros((f0.size, x.size))
    for j in range(x.size):
        h = max(abs(x[j]) * h_rel, h_min)
        xp = x.copy()
        xm = x.copy()
        xp[j] += h
        xm[j] -= h
        jac[:, j] = (np.asarray(fn(xp)) - np.asarray(fn(xm))) / (2.0 * h)
    return jac


def finite_difference_christoffels(metric_fn, x, h_rel=1e-5, h_min=1e-7):
    """Christoffel symbols of a metric field by central differences.

    metric_fn maps a coordinate 4-vector to the 4x4 covariant metric.
    Returns Gamma[k, i, j] with the symmetric lower pair.
    """
    x = np.asarray(x, dtype=float)
    g0 = np.asarray(metric_fn(x), dtype=float)
    ginv = np.linalg.inv(g0)
    dg = np.zeros((4, 4, 4))
    for mu in range(4):
        h = max(abs(x[mu]) * h_rel, h_min)
        xp = x.copy()
        xm = x.copy()
        xp[mu] += h
        xm[mu] -= h
        dg[mu] = (np.asarray(metric_fn(xp)) - np.asarray(metric_fn(xm))) / (2.0 * h)
    gamma = np.zeros((4, 4, 4))
    for k in range(4):
        for i in range(4):
            for j in range(4):
                s = 0.0
                for l in range(4):
                    s += ginv[k, l] * (dg[i][j, l] + dg[j][i, l] - dg[l][i, j])
                gamma[k, i, j] = 0.5 * s
    return gamma
