"""Horizon structure of Reissner-Nordstrom-de Sitter (RNdS) spacetimes.

The static RNdS metric in Schwarzschild-like coordinates is

    g = f(r) dt^2 - f(r)^{-1} dr^2 - r^2 (dtheta^2 + sin^2(theta) dphi^2),

    f(r) = 1 - 2M/r + Q^2/r^2 - Lambda r^2,

with mass M > 0, charge Q != 0 and cosmological constant Lambda > 0.
Horizons are the positive zeros of the quartic

    P(r) = r^2 f(r) = -Lambda r^4 + r^2 - 2 M r + Q^2.

This module decides how many horizons a parameter triple produces, locates
them, and computes the photon sphere radii.  The generic rich case has three
simple positive zeros 0 < r1 < r2 < r3 (inner, outer and cosmological
horizon) plus one negative zero r0 = -(r1+r2+r3).

The three-horizon regime is characterised exactly by the conditions

    Q != 0,   0 < Lambda < 1/(12 Q^2),   M1 < M < M2,

where, with R = 1/sqrt(6 Lambda) and Delta = 1 - 12 Q^2 Lambda,

    m_i = R sqrt(1 -+ sqrt(Delta)),   M_i = m_i - 2 Lambda m_i^3.

Root finding follows the shape of P: P'' vanishes only at R, so P' is
increasing then decreasing and has at most two positive zeros s1 < s2
(R in between).  P is then monotone on (0,s1), (s1,s2), (s2,inf) and each
piece is bisected independently before a Newton polish.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ConsistencyError, DomainError, InvalidParametersError

__all__ = [
    "BlackHoleParams",
    "DerivedThresholds",
    "GcReport",
    "Classification",
    "HorizonStructure",
    "PhotonSphere",
    "horizon_function",
    "horizon_function_derivative",
    "horizon_polynomial",
    "horizon_polynomial_derivative",
    "check_gc_conditions",
    "classify_horizons",
    "photon_sphere",
    "positive_root_bound",
]

#: default relative tolerance deciding when a parameter triple sits on the
#: boundary between root-count regimes (double-root configurations)
DEGENERACY_RTOL = 1e-9


@dataclass(frozen=True)
class BlackHoleParams:
    """Parameter triple (M, Q, Lambda) of an RNdS spacetime.

    The standing assumptions are M > 0, Q != 0, Lambda > 0.  Violating
    triples can still be constructed so that classification can report them
    as invalid instead of raising; call :meth:`validate` to raise instead.
    """

    M: float
    Q: float
    Lambda: float

    @property
    def standing_ok(self) -> bool:
        return self.M > 0.0 and self.Q != 0.0 and self.Lambda > 0.0

    def validate(self) -> "BlackHoleParams":
        if not (self.M > 0.0):
            raise InvalidParametersError(f"mass must be positive, got M={self.M}")
        if self.Q == 0.0:
            raise InvalidParametersError("charge must be nonzero")
        if not (self.Lambda > 0.0):
            raise InvalidParametersError(
                f"cosmological constant must be positive, got Lambda={self.Lambda}"
            )
        return self


def horizon_function(params: BlackHoleParams, r):
    """Metric coefficient f(r) = 1 - 2M/r + Q^2/r^2 - Lambda r^2 for r > 0."""
    r = _require_positive_radius(r)
    return 1.0 - 2.0 * params.M / r + params.Q**2 / r**2 - params.Lambda * r**2


def horizon_function_derivative(params: BlackHoleParams, r):
    """f'(r) = 2M/r^2 - 2Q^2/r^3 - 2 Lambda r for r > 0."""
    r = _require_positive_radius(r)
    return 2.0 * params.M / r**2 - 2.0 * params.Q**2 / r**3 - 2.0 * params.Lambda * r


def horizon_polynomial(params: BlackHoleParams, r):
    """P(r) = r^2 f(r) = -Lambda r^4 + r^2 - 2 M r + Q^2 on all of R."""
    return -params.Lambda * r**4 + r**2 - 2.0 * params.M * r + params.Q**2


def horizon_polynomial_derivative(params: BlackHoleParams, r):
    """P'(r) = -4 Lambda r^3 + 2 r - 2 M."""
    return -4.0 * params.Lambda * r**3 + 2.0 * r - 2.0 * params.M


def _require_positive_radius(r):
    arr = np.asarray(r)
    if np.any(arr <= 0.0):
        raise DomainError("radius must be positive")
    return arr if arr.ndim else float(arr)


@dataclass(frozen=True)
class DerivedThresholds:
    """Quantities controlling the horizon count.

    R is the inflection radius of P, Delta = 1 - 12 Q^2 Lambda.  When
    Delta > 0 the local extrema of the mass window are at m1 < m2 with mass
    bounds M1 < M2; otherwise those four fields are NaN.
    """

    R: float
    Delta: float
    m1: float
    m2: float
    M1: float
    M2: float

    @classmethod
    def from_params(cls, params: BlackHoleParams) -> "DerivedThresholds":
        lam = params.Lambda
        if lam <= 0.0:
            raise InvalidParametersError("thresholds need Lambda > 0")
        big_r = 1.0 / math.sqrt(6.0 * lam)
        delta = 1.0 - 12.0 * params.Q**2 * lam
        if delta > 0.0:
            sd = math.sqrt(delta)
            m1 = big_r * math.sqrt(1.0 - sd)
            m2 = big_r * math.sqrt(1.0 + sd)
            mm1 = m1 - 2.0 * lam * m1**3
            mm2 = m2 - 2.0 * lam * m2**3
        else:
            m1 = m2 = mm1 = mm2 = math.nan
        return cls(R=big_r, Delta=delta, m1=m1, m2=m2, M1=mm1, M2=mm2)


@dataclass(frozen=True)
class GcReport:
    """Outcome of the three-horizon criterion, clause by clause.

    ``holds`` is the strict conjunction.  ``margins`` maps clause names to
    signed relative margins (positive = satisfied); ``borderline`` is set
    when some margin sits within ``tol`` of zero while no other clause is
    grossly violated, i.e. the triple is numerically on a double-root
    boundary.
    """

    holds: bool
    charge_nonzero: bool
    lambda_in_range: bool
    mass_above_lower: bool
    mass_below_upper: bool
    borderline: bool
    margins: dict
    thresholds: DerivedThresholds


def check_gc_conditions(params: BlackHoleParams, tol: float = DEGENERACY_RTOL) -> GcReport:
    """Test Q != 0, 0 < Lambda < 1/(12 Q^2), M1 < M < M2.

    Standing-assumption violations are reported (holds=False), not raised.
    Margins are relative: the Lambda clause is scaled by 1/(12 Q^2), the
    mass clauses by max(M, M2).
    """
    charge_ok = params.Q != 0.0
    margins: dict = {}
    if not charge_ok or params.Lambda <= 0.0 or params.M <= 0.0:
        return GcReport(
            holds=False,
            charge_nonzero=charge_ok,
            lambda_in_range=False,
            mass_above_lower=False,
            mass_below_upper=False,
            borderline=False,
            margins=margins,
            thresholds=DerivedThresholds(math.nan, math.nan, math.nan, math.nan, math.nan, math.nan)
            if params.Lambda <= 0.0
            else DerivedThresholds.from_params(params),
        )

    thr = DerivedThresholds.from_params(params)
    lam_hi = 1.0 / (12.0 * params.Q**2)
    lam_margin = (lam_hi - params.Lambda) / lam_hi
    margins["lambda"] = lam_margin
    lambda_ok = lam_margin > tol

    if thr.Delta > 0.0:
        mass_scale = max(params.M, thr.M2)
        low_margin = (params.M - thr.M1) / mass_scale
        up_margin = (thr.M2 - params.M) / mass_scale
        margins["mass_lower"] = low_margin
        margins["mass_upper"] = up_margin
        low_ok = low_margin > tol
        up_ok = up_margin > tol
        borderline = (
            min(abs(lam_margin), abs(low_margin), abs(up_margin)) <= tol
            and lam_margin >= -tol
            and low_margin >= -tol
            and up_margin >= -tol
        )
    else:
        # Past the Delta=0 boundary the mass window is empty; only triples
        # also pinching M -> 2R/3 count as borderline (triple-root corner).
        low_ok = up_ok = False
        m_star = 2.0 * thr.R / 3.0
        borderline = abs(lam_margin) <= tol and abs(params.M - m_star) <= tol * max(
            params.M, m_star
        )

    return GcReport(
        holds=lambda_ok and low_ok and up_ok,
        charge_nonzero=True,
        lambda_in_range=lambda_ok,
        mass_above_lower=low_ok,
        mass_below_upper=up_ok,
        borderline=borderline,
        margins=margins,
        thresholds=thr,
    )


class Classification(str, Enum):
    THREE_HORIZONS = "ThreeHorizons"
    TWO_HORIZONS_DEGENERATE = "TwoHorizonsDegenerate"
    ONE_HORIZON = "OneHorizon"
    INVALID = "Invalid"


@dataclass(frozen=True)
class PhotonSphere:
    """Zeros P1 < P2 of S(r) = -r^2 + 3 M r - 2 Q^2.

    Circular null orbits of the static regions sit at r = P2 (between r2
    and r3, where f > 0).  P1 lies between r1 and r2 where f < 0, so no
    photon sphere exists there; it is exposed for the ordering structure
    r1 < P1 < r2 < P2 < r3 only.
    """

    P1: float
    P2: float

    @property
    def radius(self) -> float:
        return self.P2


@dataclass(frozen=True)
class HorizonStructure:
    """Classification outcome plus located roots of P.

    ``roots`` lists all real roots in increasing order (the negative root
    first when present) with matching ``multiplicities``.  For the
    three-horizon case the positive roots are the horizon radii
    r1 < r2 < r3 and properties ``r0`` .. ``r3`` are available.
    """

    params: BlackHoleParams
    classification: Classification
    thresholds: DerivedThresholds | None
    gc: GcReport | None
    roots: tuple
    multiplicities: tuple
    photon: PhotonSphere | None

    @property
    def is_three_horizon(self) -> bool:
        return self.classification is Classification.THREE_HORIZONS

    def _horizon_roots(self):
        if not self.is_three_horizon:
            raise DomainError(
                f"horizon radii r1..r3 only exist for ThreeHorizons, "
                f"classification is {self.classification.value}"
            )
        return self.roots

    @property
    def r0(self) -> float:
        return self._horizon_roots()[0]

    @property
    def r1(self) -> float:
        return self._horizon_roots()[1]

    @property
    def r2(self) -> float:
        return self._horizon_roots()[2]

    @property
    def r3(self) -> float:
        return self._horizon_roots()[3]

    @property
    def positive_roots(self) -> tuple:
        return tuple(r for r in self.roots if r > 0.0)

    def max_polynomial_residual(self) -> float:
        return max(
            (abs(horizon_polynomial(self.params, r)) for r in self.roots),
            default=0.0,
        )


def positive_root_bound(params: BlackHoleParams) -> float:
    """Radius beyond which P is strictly negative (Cauchy-style bound)."""
    lam = params.Lambda
    cauchy = 1.0 + max(1.0, 2.0 * params.M, params.Q**2) / lam
    quick = 2.0 * max(1.0, math.sqrt(2.0 / lam))
    rb = quick if horizon_polynomial(params, quick) < 0.0 else cauchy
    while horizon_polynomial(params, rb) >= 0.0:  # paranoia, cauchy suffices
        rb *= 2.0
    return rb


def _bisect(fn, lo: float, hi: float, iters: int = 200) -> float:
    flo = fn(lo)
    fhi = fn(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise ConsistencyError(f"no sign change on bracket [{lo}, {hi}]")
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm = fn(mid)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _polish_root(params: BlackHoleParams, x: float, lo: float, hi: float) -> float:
    # Newton on P, clamped to the isolating bracket.
    for _ in range(50):
        p = horizon_polynomial(params, x)
        dp = horizon_polynomial_derivative(params, x)
        if dp == 0.0:
            break
        step = p / dp
        x_new = x - step
        if not (lo < x_new < hi):
            break
        if x_new == x:
            break
        x = x_new
        if abs(step) <= 1e-16 * max(1.0, abs(x)):
            break
    return x


def _critical_points(params: BlackHoleParams, rb: float):
    """Positive zeros s1 < s2 of P', or None if P'(R) <= 0."""
    big_r = 1.0 / math.sqrt(6.0 * params.Lambda)
    dP = lambda r: horizon_polynomial_derivative(params, r)
    if dP(big_r) <= 0.0:
        return None
    hi = max(rb, 2.0 * big_r)
    s1 = _bisect(dP, 0.0, big_r)
    s2 = _bisect(dP, big_r, hi)
    return s1, s2


def classify_horizons(
    params: BlackHoleParams, tol: float = DEGENERACY_RTOL
) -> HorizonStructure:
    """Classify the horizon count and locate all real roots of P.

    Returns one of four classifications:

    * ``ThreeHorizons``: the three-horizon criterion holds with every
      margin above ``tol``; roots are the simple zeros r0 < 0 < r1 < r2 < r3.
    * ``TwoHorizonsDegenerate``: some criterion margin is within ``tol`` of
      zero, so two horizons merge into a double root (reported at the
      matching critical point of P).
    * ``OneHorizon``: criterion strictly violated; a single simple positive
      root remains.
    * ``Invalid``: standing assumptions violated; no roots are computed.
    """
    if not params.standing_ok:
        return HorizonStructure(
            params=params,
            classification=Classification.INVALID,
            thresholds=None,
            gc=None,
            roots=(),
            multiplicities=(),
            photon=None,
        )

    gc = check_gc_conditions(params, tol)
    thr = gc.thresholds
    rb = positive_root_bound(params)
    crit = _critical_points(params, rb)

    if gc.holds and not gc.borderline:
        classification = Classification.THREE_HORIZONS
    elif gc.borderline:
        classification = Classification.TWO_HORIZONS_DEGENERATE
    else:
        classification = Classification.ONE_HORIZON

    P = lambda r: horizon_polynomial(params, r)
    roots: list = []
    mults: list = []

    # one negative root always: P(0) = Q^2 > 0 and P -> -inf
    neg_lo = -rb
    while P(neg_lo) >= 0.0:
        neg_lo *= 2.0
    r0 = _polish_root(params, _bisect(P, neg_lo, 0.0), neg_lo, 0.0)
    roots.append(r0)
    mults.append(1)

    if classification is Classification.THREE_HORIZONS:
        if crit is None:
            raise ConsistencyError("three-horizon criterion held but P' has no positive zeros")
        s1, s2 = crit
        for lo, hi in ((0.0, s1), (s1, s2), (s2, rb)):
            roots.append(_polish_root(params, _bisect(P, lo, hi), lo, hi))
            mults.append(1)
    elif classification is Classification.TWO_HORIZONS_DEGENERATE:
        roots_pos, mults_pos = _degenerate_roots(params, gc, crit, rb)
        roots.extend(roots_pos)
        mults.extend(mults_pos)
    else:
        if crit is None:
            lo, hi = 0.0, rb
        else:
            s1, s2 = crit
            # P(s1) > 0 pushes the single root beyond s2, P(s2) < 0 below s1
            lo, hi = (s2, rb) if P(s1) > 0.0 else (0.0, s1)
        roots.append(_polish_root(params, _bisect(P, lo, hi), lo, hi))
        mults.append(1)

    order = sorted(range(len(roots)), key=roots.__getitem__)
    roots = [roots[i] for i in order]
    mults = [mults[i] for i in order]

    photon = None
    if classification is Classification.THREE_HORIZONS:
        photon = _photon_radii(params)

    return HorizonStructure(
        params=params,
        classification=classification,
        thresholds=thr,
        gc=gc,
        roots=tuple(roots),
        multiplicities=tuple(mults),
        photon=photon,
    )


def _degenerate_roots(params, gc, crit, rb):
    """Positive roots on a double-root boundary: double root at s1 or s2."""
    P = lambda r: horizon_polynomial(params, r)
    if crit is None:
        # triple-root corner collapsed past representability; report the
        # inflection radius as the merged root
        big_r = 1.0 / math.sqrt(6.0 * params.Lambda)
        return [big_r], [3]
    s1, s2 = crit
    margins = gc.margins
    at_lower = "mass_lower" in margins and abs(margins["mass_lower"]) <= abs(
        margins.get("mass_upper", math.inf)
    )
    if "mass_lower" not in margins and "mass_upper" not in margins:
        # Lambda boundary: s1 ~ s2 ~ R merge
        return [0.5 * (s1 + s2)], [3]
    if at_lower:
        # M ~ M1: double root at s1, simple root past s2
        simple = _polish_root(params, _bisect(P, s2, rb), s2, rb)
        return [s1, simple], [2, 1]
    # M ~ M2: simple root below s1, double root at s2
    simple = _polish_root(params, _bisect(P, 0.0, s1), 0.0, s1)
    return [simple, s2], [1, 2]


def _photon_radii(params: BlackHoleParams) -> PhotonSphere:
    disc = 9.0 * params.M**2 - 8.0 * params.Q**2
    if disc <= 0.0:
        raise ConsistencyError(
            "photon sphere discriminant 9M^2-8Q^2 not positive in a "
            "three-horizon spacetime"
        )
    sq = math.sqrt(disc)
    return PhotonSphere(P1=0.5 * (3.0 * params.M - sq), P2=0.5 * (3.0 * params.M + sq))


def photon_sphere(structure: HorizonStructure) -> PhotonSphere:
    """Photon sphere radii of a three-horizon spacetime.

    Raises for other classifications: the interleaving r1 < P1 < r2 < P2 < r3
    only makes sense with all three horizons present.
    """
    if not structure.is_three_horizon:
        raise DomainError(
            "photon sphere requires a three-horizon spacetime, got "
            f"{structure.classification.value}"
        )
    if structure.photon is None:
        raise ConsistencyError("three-horizon structure lacks photon radii")
    return structure.photon
