"""Tortoise coordinate r_* for three-horizon RNdS spacetimes.

With roots r0 < 0 < r1 < r2 < r3 of P(r) = r^2 f(r), the metric function
factors as f(r) = -(Lambda/r^2) prod_i (r - r_i), so 1/f has the partial
fraction expansion sum_i a_i / (r - r_i) with

    a_i = -(r_i^2 / Lambda) * prod_{j != i} 1/(r_i - r_j) = 1/f'(r_i).

The antiderivative anchored to vanish at the photon sphere radius P2 is

    r_*(r) = sum_i a_i ln|r - r_i| + a,    a = -sum_i a_i ln|P2 - r_i|.

Because sum_i a_i = 0 the sum of logs converges for r -> infinity, giving
r_* -> a; the value at r -> 0+ is the finite constant b.  The four regions
cut out by the horizons are

    I1 = (0, r1)   static   r_* increasing, range (b, +inf)
    I2 = (r1, r2)  dynamic  r_* decreasing, range all reals
    I3 = (r2, r3)  static   r_* increasing, range all reals
    I4 = (r3, inf) dynamic  r_* decreasing, range (a, +inf)

a1 and a3 are negative, a0 and a2 positive, so r_* diverges to +inf at r1
and r3 and to -inf at r2 (same sign from both sides).

Values requested within relative distance 1e-14 of a horizon return a
signed infinity instead of overflowing; inversion refuses targets outside
the region's range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, HorizonIncidenceError
from .horizons import HorizonStructure, horizon_function

__all__ = [
    "TortoiseMap",
    "build_tortoise",
    "tortoise_value",
    "tortoise_invert",
    "REGION_INTERVALS",
    "region_is_static",
]

#: relative snap distance: radii this close to a horizon count as on it
HORIZON_RTOL = 1e-14

#: sign of the divergence of r_* at each horizon (same from both sides)
_DIVERGENCE_SIGN = {1: +1.0, 2: -1.0, 3: +1.0}

REGION_INTERVALS = {1: (0, 1), 2: (1, 2), 3: (2, 3), 4: (3, None)}


def region_is_static(region: int) -> bool:
    """f > 0 on regions 1 and 3 (static), f < 0 on 2 and 4 (dynamic)."""
    if region not in (1, 2, 3, 4):
        raise DomainError(f"region index must be 1..4, got {region}")
    return region in (1, 3)


@dataclass(frozen=True)
class TortoiseMap:
    """Closed-form tortoise coordinate of one three-horizon spacetime.

    Attributes
    ----------
    roots : tuple
        (r0, r1, r2, r3) with r0 < 0 < r1 < r2 < r3.
    a : tuple
        Partial fraction weights (a0, a1, a2, a3); a_i = 1/f'(r_i).
    limit_at_infinity : float
        The additive constant a; doubles as lim_{r->inf} r_* because the
        weights sum to zero.
    value_at_zero : float
        b = lim_{r->0+} r_*(r), finite.
    """

    structure: HorizonStructure
    roots: tuple
    a: tuple
    limit_at_infinity: float
    value_at_zero: float

    @property
    def params(self):
        return self.structure.params

    # -- region bookkeeping -------------------------------------------------

    def region_interval(self, region: int):
        lo_i, hi_i = REGION_INTERVALS[region]
        lo = 0.0 if region == 1 else self.roots[lo_i]
        hi = math.inf if hi_i is None else self.roots[hi_i]
        if region == 1:
            lo = 0.0
        return (lo if region != 1 else 0.0, hi) if region != 1 else (0.0, hi)

    def region_of(self, r: float, tol: float = HORIZON_RTOL) -> int:
        """Region index of a radius, raising if it sits on a horizon."""
        if not (r > 0.0) or not math.isfinite(r):
            raise DomainError(f"radius must be positive and finite, got {r}")
        for i in (1, 2, 3):
            if abs(r - self.roots[i]) <= tol * self.roots[i]:
                raise HorizonIncidenceError(
                    f"radius {r} lies on horizon r{i} = {self.roots[i]}; "
                    "static-chart quantities are singular there",
                    suggested_chart="kruskal",
                )
        if r < self.roots[1]:
            return 1
        if r < self.roots[2]:
            return 2
        if r < self.roots[3]:
            return 3
        return 4

    def region_range(self, region: int):
        """Range of r_* on a region (open interval, infinities allowed)."""
        if region == 1:
            return (self.value_at_zero, math.inf)
        if region in (2, 3):
            return (-math.inf, math.inf)
        if region == 4:
            return (self.limit_at_infinity, math.inf)
        raise DomainError(f"region index must be 1..4, got {region}")

    # -- evaluation ----------------------------------------------------------

    def value(self, r):
        """r_*(r) for r > 0; signed infinity within snap distance of a horizon."""
        arr = np.asarray(r, dtype=float)
        scalar = arr.ndim == 0
        arr = np.atleast_1d(arr)
        if np.any(~np.isfinite(arr)) or np.any(arr <= 0.0):
            raise DomainError("radius must be positive and finite")
        out = np.full(arr.shape, 0.0)
        on_horizon = np.zeros(arr.shape, dtype=bool)
        for i in (1, 2, 3):
            mask = np.abs(arr - self.roots[i]) <= HORIZON_RTOL * self.roots[i]
            out[mask] = _DIVERGENCE_SIGN[i] * math.inf
            on_horizon |= mask
        safe = ~on_horizon
        if np.any(safe):
            rs = np.full(np.count_nonzero(safe), self.limit_at_infinity)
            rr = arr[safe]
            for ai, ri in zip(self.a, self.roots):
                rs = rs + ai * np.log(np.abs(rr - ri))
            out[safe] = rs
        return float(out[0]) if scalar else out

    def derivative(self, r):
        """d r_* / dr = 1/f(r)."""
        return 1.0 / horizon_function(self.params, r)

    # -- inversion -----------------------------------------------------------

    def invert(self, region: int, r_star):
        """Radius in the given region whose tortoise value is ``r_star``.

        Vectorised: accepts scalars or arrays.  Monotonicity of r_* on each
        region makes the solution unique; bisection from horizon-offset
        brackets is followed by a clamped Newton polish (the derivative of
        the inverse is f).
        """
        lo_val, hi_val = self.region_range(region)
        target = np.asarray(r_star, dtype=float)
        scalar = target.ndim == 0
        target = np.atleast_1d(target).astype(float)
        if np.any(~np.isfinite(target)):
            raise DomainError("tortoise target must be finite")
        if np.any(target <= lo_val) or np.any(target >= hi_val):
            raise DomainError(
                f"tortoise value outside the range {lo_val, hi_val} of region {region}"
            )

        lo, hi = self._brackets(region, target)
        flo = self.value(lo)
        # ~60 bisection steps localize to ~1e-18 relative, then Newton
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            fm = self.value(mid)
            go_lo = (fm > target) == (flo > target)
            lo = np.where(go_lo, mid, lo)
            flo = np.where(go_lo, fm, flo)
            hi = np.where(go_lo, hi, mid)
        r = 0.5 * (lo + hi)
        for _ in range(4):
            f = horizon_function(self.params, r)
            r = np.clip(r + (target - self.value(r)) * f, lo, hi)
        return float(r[0]) if scalar else r

    def _near_horizon_distance(self, i: int, target):
        """Distance |r - r_i| at which the dominant log reaches ``target``."""
        g = self.limit_at_infinity
        for j, (aj, rj) in enumerate(zip(self.a, self.roots)):
            if j != i:
                g += aj * math.log(abs(self.roots[i] - rj))
        return np.exp(np.clip((target - g) / self.a[i], -700.0, 700.0))

    def _brackets(self, region: int, target):
        r1, r2, r3 = self.roots[1], self.roots[2], self.roots[3]
        n = target.shape[0]
        if region == 1:
            lo = np.full(n, 1e-300)
            hi = r1 - 0.5 * np.minimum(self._near_horizon_distance(1, target), 0.8 * r1)
            hi = self._tighten(hi, r1, target, want_above=True)
        elif region == 2:
            width = r2 - r1
            lo = r1 + 0.5 * np.minimum(self._near_horizon_distance(1, target), 0.8 * width)
            hi = r2 - 0.5 * np.minimum(self._near_horizon_distance(2, target), 0.8 * width)
            lo = self._tighten(lo, r1, target, want_above=True)
            hi = self._tighten(hi, r2, target, want_above=False)
        elif region == 3:
            width = r3 - r2
            lo = r2 + 0.5 * np.minimum(self._near_horizon_distance(2, target), 0.8 * width)
            hi = r3 - 0.5 * np.minimum(self._near_horizon_distance(3, target), 0.8 * width)
            lo = self._tighten(lo, r2, target, want_above=False)
            hi = self._tighten(hi, r3, target, want_above=True)
        else:
            lo = r3 + 0.5 * np.minimum(self._near_horizon_distance(3, target), r3)
            lo = self._tighten(lo, r3, target, want_above=True)
            with np.errstate(divide="ignore", over="ignore"):
                far = 2.0 / (self.params.Lambda * (target - self.limit_at_infinity))
            hi = np.maximum(4.0 * r3, np.minimum(far, 1e300))
            for _ in range(1000):
                bad = self.value(hi) > target
                if not np.any(bad):
                    break
                hi = np.where(bad, hi * 2.0, hi)
        return lo, hi

    def _tighten(self, edge, horizon, target, want_above: bool):
        """Halve the horizon offset until r_* at the edge passes the target."""
        for _ in range(300):
            v = self.value(edge)
            bad = v < target if want_above else v > target
            if not np.any(bad):
                break
            edge = np.where(bad, horizon + 0.5 * (edge - horizon), edge)
        return edge


def build_tortoise(structure: HorizonStructure) -> TortoiseMap:
    """Construct the tortoise map of a three-horizon structure.

    Raises DomainError for any other classification: the four-log closed
    form needs four simple roots.
    """
    if not structure.is_three_horizon:
        raise DomainError(
            "tortoise coordinate needs the three-horizon case, got "
            f"{structure.classification.value}"
        )
    roots = structure.roots
    lam = structure.params.Lambda
    a = []
    for i, ri in enumerate(roots):
        prod = 1.0
        for j, rj in enumerate(roots):
            if j != i:
                prod *= ri - rj
        a.append(-(ri * ri) / (lam * prod))
    p2 = structure.photon.P2
    const = -sum(ai * math.log(abs(p2 - ri)) for ai, ri in zip(a, roots))
    b = const + sum(ai * math.log(abs(ri)) for ai, ri in zip(a, roots))
    return TortoiseMap(
        structure=structure,
        roots=tuple(roots),
        a=tuple(a),
        limit_at_infinity=const,
        value_at_zero=b,
    )


def tortoise_value(tm: TortoiseMap, r):
    return tm.value(r)


def tortoise_invert(tm: TortoiseMap, region: int, r_star):
    return tm.invert(region, r_star)
