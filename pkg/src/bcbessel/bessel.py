"""Bicomplex Bessel function of the first kind and its identity suite.

Everything reduces componentwise: J_V(Z) = J_{nu1}(z1) e1 + J_{nu2}(z2) e2,
with each component summed by the classical power series

    J_nu(z) = sum_s (-1)^s / (s! Gamma(nu+s+1)) (z/2)^(nu+2s),

using compensated summation and a reciprocal-gamma convention that makes
terms with a gamma pole in the denominator vanish (which is what defines
the function at negative-integer component orders).

The series is accuracy-limited in double precision: beyond |z| = 60 the
alternating terms cancel catastrophically, so that radius is enforced as
the evaluation domain and larger arguments raise DomainError.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
import scipy.special as _sps

from .algebra import (
    BicomplexNumber,
    HyperbolicNumber,
    bc,
    exp_bc,
    _component_pow,
)
from .errors import (
    DomainError,
    NonIntegerError,
    PreconditionError,
    ZeroDivisorError,
)
from .gammafn import (
    complex_gamma,
    pochhammer,
    reciprocal_gamma,
)
from .quadrature import gauss_nodes_graded, gauss_nodes_uniform

__all__ = [
    "SeriesResult",
    "BesselOrder",
    "SERIES_DOMAIN_RADIUS",
    "bessel_j",
    "bessel_j_array",
    "bessel_j_negative_integer",
    "bessel_j_derivative",
    "recurrence_residuals",
    "differential_residuals",
    "ode_residual",
    "generating_function",
    "laurent_coefficient",
    "integral_representation_check",
    "asymptotic_j",
    "asymptotic_bracket",
    "asymptotic_remainder_bound",
    "holomorphy_residual",
    "z_holomorphy_residual",
    "bessel_k_real",
]

SERIES_DOMAIN_RADIUS = 60.0

_MAX_TERMS = 500
_CONSECUTIVE_SMALL = 3


@dataclass(frozen=True)
class SeriesResult:
    """Value of a truncated series with its truncation bookkeeping.

    ``tail_estimate`` bounds the dropped tail per idempotent component and
    always lies in D+.  ``convergence_certified`` is True for the power
    series (infinite hyperbolic radius); the asymptotic expansion returns
    False since it is not a convergent series.
    """

    value: BicomplexNumber
    terms_used: int
    tail_estimate: HyperbolicNumber
    convergence_certified: bool = True


@dataclass(frozen=True)
class BesselOrder:
    """Validated order V = nu1 e1 + nu2 e2.

    Negative-integer components are rejected unless explicitly allowed;
    that pathway is well defined (see bessel_j_negative_integer) but easy
    to request by accident.
    """

    value: BicomplexNumber
    allow_negative_integers: bool = False

    def __post_init__(self):
        if not self.allow_negative_integers:
            for name, comp in (("nu1", self.value.e1), ("nu2", self.value.e2)):
                if (
                    comp.imag == 0.0
                    and comp.real < 0.0
                    and comp.real == round(comp.real)
                ):
                    raise DomainError(
                        f"order component {name} = {comp} is a negative integer; "
                        "use bessel_j_negative_integer or allow_negative_integers=True"
                    )


def _as_bc(x) -> BicomplexNumber:
    if isinstance(x, BesselOrder):
        return x.value
    if isinstance(x, BicomplexNumber):
        return x
    if isinstance(x, HyperbolicNumber):
        return x.to_bicomplex()
    if isinstance(x, (int, float, complex)):
        return bc(x)
    raise TypeError(f"cannot interpret {x!r} as a bicomplex value")


def _negative_integer_part(nu: complex) -> int:
    """l such that nu == -l for nonnegative integer l, else 0 (l=0 for nu=0 too)."""
    if nu.imag == 0.0 and nu.real <= 0.0 and nu.real == round(nu.real):
        return int(-nu.real)
    return 0


def _series_component(nu: complex, z: complex, tol: float):
    """One complex component of the series: (value, terms_used, tail_bound)."""
    if z == 0:
        if nu == 0:
            return 1.0 + 0.0j, 1, 0.0
        if nu.real > 0 or _negative_integer_part(nu) > 0:
            return 0.0 + 0.0j, 1, 0.0
        raise ZeroDivisorError(f"(0/2)**{nu} undefined for Re(nu) <= 0")

    half = z / 2.0
    pref = _component_pow(half, nu)
    q = half * half

    # terms with a gamma pole vanish; restart the sum past the pole block
    start = _negative_integer_part(nu)
    coeff = reciprocal_gamma(nu + start + 1) / math.factorial(start)
    term = pref * (-q) ** start * coeff

    floor = max(15, math.ceil(abs(z)))
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j  # Kahan carry
    small_streak = 0
    s = start
    while True:
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t

        if abs(term) <= tol * (1.0 + abs(total)):
            small_streak += 1
        else:
            small_streak = 0

        ratio = -q / ((s + 1) * (nu + s + 1))
        term = term * ratio
        s += 1
        if small_streak >= _CONSECUTIVE_SMALL and s - start >= floor:
            break
        if s - start >= _MAX_TERMS:
            raise DomainError(
                f"series for J_{nu}({z}) did not meet tol={tol} "
                f"within {_MAX_TERMS} terms"
            )
    return total, s - start, abs(term)


def _series_component_array(nu: complex, z: np.ndarray, tol: float = 1e-14):
    """Vectorized series J_nu over a complex array (principal powers).

    Intended for quadrature kernels: entries must avoid 0 and the negative
    real axis unless nu is a nonnegative integer.
    """
    z = np.asarray(z, dtype=complex)
    half = z / 2.0
    if _negative_integer_part(nu) or (nu.imag == 0.0 and nu.real == round(nu.real)):
        pref = half ** int(nu.real)
    else:
        pref = np.exp(nu * np.log(half))
    q = half * half

    start = _negative_integer_part(nu)
    coeff = reciprocal_gamma(nu + start + 1) / math.factorial(start)
    term = pref * (-q) ** start * coeff

    zmax = float(np.max(np.abs(z))) if z.size else 0.0
    if zmax > SERIES_DOMAIN_RADIUS:
        raise DomainError(
            f"argument modulus {zmax:.3g} exceeds the series-accuracy "
            f"domain |z| <= {SERIES_DOMAIN_RADIUS}"
        )
    floor = max(15, math.ceil(zmax))
    total = np.zeros_like(term)
    comp = np.zeros_like(term)
    small_streak = 0
    s = start
    while True:
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t

        if float(np.max(np.abs(term))) <= tol * (1.0 + float(np.max(np.abs(total)))):
            small_streak += 1
        else:
            small_streak = 0
        term = term * (-q / ((s + 1) * (nu + s + 1)))
        s += 1
        if small_streak >= _CONSECUTIVE_SMALL and s - start >= floor:
            break
        if s - start >= _MAX_TERMS:
            raise DomainError("vectorized Bessel series did not converge")
    return total


def bessel_j(order, z, tol: float = 1e-14) -> SeriesResult:
    """J_V(Z) summed componentwise; DomainError beyond |z_l| = 60.

    The truncation rule stops once the current term stays below
    tol*(1 + |partial sum|) per component for three consecutive terms,
    with a floor of max(15, ceil|z_l|) terms.
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    v = _as_bc(order)
    zz = _as_bc(z)
    for comp in (zz.e1, zz.e2):
        if abs(comp) > SERIES_DOMAIN_RADIUS:
            raise DomainError(
                f"|component| = {abs(comp):.3g} exceeds the series-accuracy "
                f"domain {SERIES_DOMAIN_RADIUS}; use asymptotic_j for the "
                "large-argument formula"
            )
    v1, n1, t1 = _series_component(v.e1, zz.e1, tol)
    v2, n2, t2 = _series_component(v.e2, zz.e2, tol)
    return SeriesResult(
        value=BicomplexNumber(v1, v2),
        terms_used=max(n1, n2),
        tail_estimate=HyperbolicNumber(t1, t2),
    )


def bessel_j_array(order, z1: np.ndarray, z2: np.ndarray, tol: float = 1e-14):
    """Componentwise series over two complex argument arrays (kernel helper)."""
    v = _as_bc(order)
    return (
        _series_component_array(v.e1, z1, tol),
        _series_component_array(v.e2, z2, tol),
    )


def _jv(order, z, tol: float = 1e-14) -> BicomplexNumber:
    return bessel_j(order, z, tol).value


def bessel_j_negative_integer(scale, z, tol: float = 1e-14) -> SeriesResult:
    """J_{-L}(Z) for L with nonnegative-integer components l1, l2.

    Uses the negative-order symmetry: the component form is
    (-1)^{l1} J_{l1}(z1) e1 + (-1)^{l2} J_{l2}(z2) e2.
    """
    L = _as_bc(scale)
    ells = []
    for comp in (L.e1, L.e2):
        if comp.imag != 0.0 or comp.real < 0 or comp.real != round(comp.real):
            raise NonIntegerError(
                f"component {comp} is not a nonnegative integer"
            )
        ells.append(int(comp.real))
    base = bessel_j(L, z, tol)
    signs = bc((-1.0) ** ells[0], (-1.0) ** ells[1])
    return SeriesResult(
        value=signs * base.value,
        terms_used=base.terms_used,
        tail_estimate=base.tail_estimate,
    )


# ---------------------------------------------------------------------------
# recurrence and differential identities
# ---------------------------------------------------------------------------


def recurrence_residuals(order, z, tol: float = 1e-14, m_pair=(1, 2)):
    """Hyperbolic norms of left-minus-right for the three order recurrences.

    (i)   Z J_V = 2(V+1) J_{V+1} - Z J_{V+2}
    (ii)  Z^2 J_V = 4(V+1)(V+2) J_{V+2} - 4Z(V+2) J_{V+3} + Z^2 J_{V+4}
    (iii) J_{V+M} + J_{V+Mbar} = J_{V+m} + J_{V+n},  M = m e1 + n e2

    The first coefficient in (ii) carries the (V+1)(V+2) factor that the
    identity's own series expansion produces.
    """
    v = _as_bc(order)
    zz = _as_bc(z)
    j = [_jv(v + k, zz, tol) for k in range(5)]

    r1 = (zz * j[0] - 2 * (v + 1) * j[1] + zz * j[2]).hyperbolic_norm()
    r2 = (
        zz * zz * j[0]
        - 4 * (v + 1) * (v + 2) * j[2]
        + 4 * zz * (v + 2) * j[3]
        - zz * zz * j[4]
    ).hyperbolic_norm()

    m, n = m_pair
    if m != int(m) or n != int(n) or m < 0 or n < 0:
        raise NonIntegerError("m_pair must be nonnegative integers")
    M = bc(m, n)
    Mbar = bc(n, m)
    r3 = (
        _jv(v + M, zz, tol)
        + _jv(v + Mbar, zz, tol)
        - _jv(v + m, zz, tol)
        - _jv(v + n, zz, tol)
    ).hyperbolic_norm()
    return r1, r2, r3


def _series_derivative_component(nu: complex, z: complex, tol: float) -> complex:
    """d/dz of the series, term by term (independent of the ladder forms)."""
    if z == 0:
        raise ZeroDivisorError("derivative series evaluated at a zero component")
    half = z / 2.0
    pref = _component_pow(half, nu)
    q = half * half

    # run the ordinary term recurrence, scale each term by its degree / z
    start = _negative_integer_part(nu)
    coeff = reciprocal_gamma(nu + start + 1) / math.factorial(start)
    base = pref * (-q) ** start * coeff

    floor = max(15, math.ceil(abs(z)))
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    small = 0
    s = start
    while True:
        term = base * (nu + 2 * s) / z
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        if abs(term) <= tol * (1.0 + abs(total)):
            small += 1
        else:
            small = 0
        base = base * (-q / ((s + 1) * (nu + s + 1)))
        s += 1
        if small >= _CONSECUTIVE_SMALL and s - start >= floor:
            break
        if s - start >= _MAX_TERMS:
            raise DomainError("derivative series did not converge")
    return total


def bessel_j_derivative(order, z, tol: float = 1e-14, method: str = "recurrence"):
    """J'_V(Z).

    method="recurrence" evaluates J_{V-1} - (V/Z) J_V; method="series"
    differentiates the power series term by term, which is the independent
    route used by the residual checks.  Z must avoid O_2 and 0.
    """
    v = _as_bc(order)
    zz = _as_bc(z)
    if not zz.is_invertible:
        raise ZeroDivisorError("derivative forms require Z outside O_2 and nonzero")
    if method == "recurrence":
        return _jv(v - 1, zz, tol) - (v / zz) * _jv(v, zz, tol)
    if method == "series":
        return BicomplexNumber(
            _series_derivative_component(v.e1, zz.e1, tol),
            _series_derivative_component(v.e2, zz.e2, tol),
        )
    raise ValueError(f"unknown method {method!r}")


def differential_residuals(order, z, tol: float = 1e-14):
    """Residuals of the two first-order relations, with J' from the series.

    (i)  Z J'_V + V J_V - Z J_{V-1}
    (ii) Z J'_V + Z J_{V+1} - V J_V
    """
    v = _as_bc(order)
    zz = _as_bc(z)
    jp = bessel_j_derivative(v, zz, tol, method="series")
    jv0 = _jv(v, zz, tol)
    r1 = (zz * jp + v * jv0 - zz * _jv(v - 1, zz, tol)).hyperbolic_norm()
    r2 = (zz * jp + zz * _jv(v + 1, zz, tol) - v * jv0).hyperbolic_norm()
    return r1, r2


def ode_residual(order, z, tol: float = 1e-14) -> HyperbolicNumber:
    """|Z^2 J'' + Z J' + (Z^2 - V^2) J|_h with J'' from the ladder relations.

    Differentiating J' = J_{V-1} - (V/Z) J_V once more gives
    J'' = J_{V-2} - ((2V-1)/Z) J_{V-1} + V(V+1)/Z^2 * J_V.
    """
    v = _as_bc(order)
    zz = _as_bc(z)
    if not zz.is_invertible:
        raise ZeroDivisorError("ODE residual requires Z outside O_2 and nonzero")
    j0 = _jv(v, zz, tol)
    jm1 = _jv(v - 1, zz, tol)
    jm2 = _jv(v - 2, zz, tol)
    jp = jm1 - (v / zz) * j0
    jpp = jm2 - ((2 * v - 1) / zz) * jm1 + (v * (v + 1) / (zz * zz)) * j0
    return (
        zz * zz * jpp + zz * jp + (zz * zz - v * v) * j0
    ).hyperbolic_norm()


# ---------------------------------------------------------------------------
# generating function and Laurent coefficients
# ---------------------------------------------------------------------------


def generating_function(z, w) -> BicomplexNumber:
    """G(Z, W) = exp[Z/2 (W - 1/W)]; W must be invertible."""
    zz = _as_bc(z)
    ww = _as_bc(w)
    if not ww.is_invertible:
        raise ZeroDivisorError("generating function needs W outside O_2 and nonzero")
    inv = BicomplexNumber(1.0 / ww.e1, 1.0 / ww.e2)
    return exp_bc((zz * 0.5) * (ww - inv))


def laurent_coefficient(n: int, z, contour_samples: int = 256) -> BicomplexNumber:
    """Contour coefficient (1/2 pi i) oint W^{-n-1} G(Z, W) dW per component.

    Trapezoid rule on the unit circle; spectrally accurate since the
    integrand is periodic and entire there.
    """
    if contour_samples < 64:
        raise DomainError("contour_samples must be at least 64")
    zz = _as_bc(z)
    theta = 2.0 * math.pi * np.arange(contour_samples) / contour_samples
    phase = np.exp(-1j * n * theta)
    sin_t = np.sin(theta)
    c1 = np.mean(phase * np.exp(1j * zz.e1 * sin_t))
    c2 = np.mean(phase * np.exp(1j * zz.e2 * sin_t))
    return BicomplexNumber(c1, c2)


# ---------------------------------------------------------------------------
# integral representations (quadrature cross-checks)
# ---------------------------------------------------------------------------


def _min_real(v: BicomplexNumber) -> float:
    return min(v.e1.real, v.e2.real)


def _rep_series_sum(term_fn, tol: float, floor: int = 15):
    """Sum term_fn(s) for s = 0,1,... with the shared truncation rule."""
    total1 = 0.0 + 0.0j
    total2 = 0.0 + 0.0j
    small = 0
    s = 0
    while True:
        t1, t2 = term_fn(s)
        total1 += t1
        total2 += t2
        mag = max(abs(t1), abs(t2))
        scale = 1.0 + max(abs(total1), abs(total2))
        small = small + 1 if mag <= tol * scale else 0
        s += 1
        if small >= _CONSECUTIVE_SMALL and s >= floor:
            return total1, total2
        if s >= 200:
            raise DomainError("integral-representation series did not converge")


def _rep_beta(v: BicomplexNumber, z: BicomplexNumber, tol: float):
    # singular weight (1-t)^(nu-1) at t=1 for Re(nu) < 1: grade toward 1
    x, w = gauss_nodes_graded(0.0, 1.0, toward_end=True, panels=24, points=24)
    g1 = complex_gamma(v.e1)
    g2 = complex_gamma(v.e2)
    w1 = w * (1.0 - x) ** (v.e1 - 1.0)
    w2 = w * (1.0 - x) ** (v.e2 - 1.0)

    def term(s):
        i1 = np.sum(w1 * x**s)
        i2 = np.sum(w2 * x**s)
        c = (-1.0) ** s / math.factorial(s) ** 2
        t1 = c * _component_pow(z.e1 / 2.0, v.e1 + 2 * s) * i1 / g1
        t2 = c * _component_pow(z.e2 / 2.0, v.e2 + 2 * s) * i2 / g2
        return t1, t2

    return _rep_series_sum(term, tol)


def _rep_cosine(v: BicomplexNumber, z: BicomplexNumber, tol: float):
    # (cos t)^(2 nu) vanishes or blows up at pi/2: grade toward that end
    x, w = gauss_nodes_graded(0.0, math.pi / 2.0, toward_end=True, panels=24, points=24)
    cw1 = w * np.cos(x) ** (2.0 * v.e1)
    cw2 = w * np.cos(x) ** (2.0 * v.e2)
    sin_x = np.sin(x)
    sqrt_pi = math.sqrt(math.pi)
    p1 = _component_pow(z.e1, v.e1) / (
        _component_pow(2.0, v.e1 - 1.0) * sqrt_pi * complex_gamma(v.e1 + 0.5)
    )
    p2 = _component_pow(z.e2, v.e2) / (
        _component_pow(2.0, v.e2 - 1.0) * sqrt_pi * complex_gamma(v.e2 + 0.5)
    )

    def term(s):
        c = (-1.0) ** s / math.factorial(2 * s)
        i1 = np.sum(cw1 * sin_x ** (2 * s))
        i2 = np.sum(cw2 * sin_x ** (2 * s))
        return p1 * c * z.e1 ** (2 * s) * i1, p2 * c * z.e2 ** (2 * s) * i2

    return _rep_series_sum(term, tol)


def _rep_double(v: BicomplexNumber, d: BicomplexNumber, z: BicomplexNumber, tol: float):
    # 2-D tensor rule over [0,1]^2; u and v weights are singular at 0
    xu, wu = gauss_nodes_graded(0.0, 1.0, toward_end=False, panels=24, points=24)
    xv, wv = gauss_nodes_graded(0.0, 1.0, toward_end=False, panels=24, points=24)
    uw1 = wu * xu ** (v.e1 - 1.0)
    uw2 = wu * xu ** (v.e2 - 1.0)
    vw1 = wv * xv ** (d.e1 - 1.0)
    vw2 = wv * xv ** (d.e2 - 1.0)
    p1 = _component_pow(z.e1 / 2.0, v.e1 + d.e1) / (
        complex_gamma(v.e1) * complex_gamma(d.e1)
    )
    p2 = _component_pow(z.e2 / 2.0, v.e2 + d.e2) / (
        complex_gamma(v.e2) * complex_gamma(d.e2)
    )

    def term(s):
        c = 1.0 / (4.0**s * math.factorial(s) ** 2)
        iu1 = np.sum(uw1 * (1.0 - xu) ** (d.e1 + s))
        iu2 = np.sum(uw2 * (1.0 - xu) ** (d.e2 + s))
        iv1 = np.sum(vw1 * (xv - 1.0) ** s)
        iv2 = np.sum(vw2 * (xv - 1.0) ** s)
        return (
            p1 * c * z.e1 ** (2 * s) * iu1 * iv1,
            p2 * c * z.e2 ** (2 * s) * iu2 * iv2,
        )

    return _rep_series_sum(term, tol)


def _rep_gamma_contour(v: BicomplexNumber, z: BicomplexNumber, tol: float):
    # Gamma-type integral over (0, inf): graded head for the t^(nu-1/2)
    # kink, then uniform panels out to where exp(-t) has died
    xh, wh = gauss_nodes_graded(0.0, 1.0, toward_end=False, panels=24, points=24)
    xt, wt = gauss_nodes_uniform(1.0, 220.0, panels=72, points=24)
    x = np.concatenate([xh, xt])
    w = np.concatenate([wh, wt])
    ew = w * np.exp(-x)
    sqrt_pi = math.sqrt(math.pi)
    p1 = _component_pow(2.0, v.e1) / sqrt_pi
    p2 = _component_pow(2.0, v.e2) / sqrt_pi
    base1 = ew * x ** (v.e1 - 0.5)
    base2 = ew * x ** (v.e2 - 0.5)

    def term(s):
        c = (-1.0) ** s / math.factorial(s)
        i1 = np.sum(base1 * x**s)
        i2 = np.sum(base2 * x**s)
        t1 = (
            p1 * c * _component_pow(z.e1, v.e1 + 2 * s)
            * reciprocal_gamma(2 * v.e1 + 2 * s + 1) * i1
        )
        t2 = (
            p2 * c * _component_pow(z.e2, v.e2 + 2 * s)
            * reciprocal_gamma(2 * v.e2 + 2 * s + 1) * i2
        )
        return t1, t2

    return _rep_series_sum(term, tol)


def integral_representation_check(
    form: str, order, z, tol: float = 1e-12, delta=None
) -> HyperbolicNumber:
    """Evaluate one integral representation and return |integral - series|_h.

    Forms and their order conditions (componentwise real parts):
      "beta"          Re(nu_l) > 0         finite integral over [0, 1]
      "cosine"        Re(nu_l) > -1/2      over [0, pi/2]
      "double"        Re(nu_l) > 0 and Re(delta_l) > -1   over [0, 1]^2
      "gamma-contour" Re(nu_l) > -1/2      over (0, inf)

    The condition failures raise PreconditionError; each representation
    truncates its outer series with the same rule as the power series.
    """
    v = _as_bc(order)
    zz = _as_bc(z)

    if form == "beta":
        if _min_real(v) <= 0:
            raise PreconditionError("beta form needs Re(nu_l) > 0")
        r1, r2 = _rep_beta(v, zz, tol)
        ref = _jv(v, zz)
    elif form == "cosine":
        if _min_real(v) <= -0.5:
            raise PreconditionError("cosine form needs Re(nu_l) > -1/2")
        r1, r2 = _rep_cosine(v, zz, tol)
        ref = _jv(v, zz)
    elif form == "double":
        if delta is None:
            raise PreconditionError("double form needs the shift order delta")
        d = _as_bc(delta)
        if _min_real(v) <= 0:
            raise PreconditionError("double form needs Re(nu_l) > 0")
        if _min_real(d) <= -1:
            raise PreconditionError("double form needs Re(delta_l) > -1")
        r1, r2 = _rep_double(v, d, zz, tol)
        ref = _jv(v + d, zz)
    elif form == "gamma-contour":
        if _min_real(v) <= -0.5:
            raise PreconditionError("gamma-contour form needs Re(nu_l) > -1/2")
        r1, r2 = _rep_gamma_contour(v, zz, tol)
        ref = _jv(v, zz)
    else:
        raise ValueError(f"unknown representation {form!r}")

    return (BicomplexNumber(r1, r2) - ref).hyperbolic_norm()


# ---------------------------------------------------------------------------
# asymptotic expansion (formula-faithful; see module notes)
# ---------------------------------------------------------------------------


def asymptotic_bracket(order, x: HyperbolicNumber, n_terms: int) -> BicomplexNumber:
    """Partial sum sum_{k<n} (-V+1/2)_k Gamma_b(V+k+1/2) / (k! x^k)."""
    v = _as_bc(order)
    out = []
    for nu, xl in ((v.e1, x.e1), (v.e2, x.e2)):
        acc = 0.0 + 0.0j
        for k in range(n_terms):
            acc += (
                pochhammer(-nu + 0.5, k)
                * complex_gamma(nu + k + 0.5)
                / (math.factorial(k) * xl**k)
            )
        out.append(acc)
    return BicomplexNumber(out[0], out[1])


def asymptotic_remainder_bound(order, x: HyperbolicNumber, n: int) -> HyperbolicNumber:
    """|(-V+1/2)_n Gamma_b(V+n+1/2) / (n! x^n)|_h, the printed tail bound."""
    v = _as_bc(order)
    vals = []
    for nu, xl in ((v.e1, x.e1), (v.e2, x.e2)):
        vals.append(
            abs(pochhammer(-nu + 0.5, n) * complex_gamma(nu + n + 0.5))
            / (math.factorial(n) * xl**n)
        )
    return HyperbolicNumber(vals[0], vals[1])


def asymptotic_j(order, x: HyperbolicNumber, n_terms: int = 4) -> SeriesResult:
    """Large-argument expansion at Z = |Z|_h, reproduced exactly as stated.

    This is formula-faithful: the prefactor exp((1-i)x)/... and the bracket
    are evaluated verbatim and the stated remainder bound is reported as
    the tail estimate.  No agreement with bessel_j is implied; the stated
    hypothesis does not reduce to the classical large-argument form, so the
    expansion is exposed for its own internal checks only.
    """
    if not (x.e1 > 0 and x.e2 > 0):
        raise DomainError("asymptotic_j needs a strictly positive hyperbolic point")
    if n_terms < 1 or n_terms > 8:
        raise DomainError("n_terms must lie in 1..8")
    v = _as_bc(order)
    bracket = asymptotic_bracket(v, x, n_terms)
    prefs = []
    for nu, xl in ((v.e1, x.e1), (v.e2, x.e2)):
        prefs.append(
            cmath.exp((1.0 - 1.0j) * xl)
            / (
                _component_pow(complex(2.0), nu)
                * math.sqrt(xl)
                * complex_gamma(nu + 1.0)
            )
            * complex_gamma(2.0 * nu + 1.0)
            / complex_gamma(nu + 0.5) ** 2
        )
    pref = BicomplexNumber(prefs[0], prefs[1])
    bound = asymptotic_remainder_bound(v, x, n_terms)
    tail = HyperbolicNumber(abs(pref.e1) * bound.e1, abs(pref.e2) * bound.e2)
    return SeriesResult(
        value=pref * bracket,
        terms_used=n_terms,
        tail_estimate=tail,
        convergence_certified=False,
    )


# ---------------------------------------------------------------------------
# holomorphy residuals (bicomplex Cauchy-Riemann, finite differences)
# ---------------------------------------------------------------------------


def _g_pair(nu1: complex, nu2: complex, z1: complex, z2: complex, tol: float):
    j1, _, _ = _series_component(nu1, z1, tol)
    j2, _, _ = _series_component(nu2, z2, tol)
    return (j1 + j2) / 2.0, 1j * (j1 - j2) / 2.0


def holomorphy_residual(order, z, h: float = 1e-5, tol: float = 1e-14):
    """Cauchy-Riemann residuals of V -> J_V(Z) in canonical order coordinates.

    Writes J_V(Z) = g1 + j g2 as a function of V = alpha1 + j alpha2 and
    returns finite-difference estimates of |dg1/da1 - dg2/da2| and
    |dg1/da2 + dg2/da1|.
    """
    v = _as_bc(order)
    zz = _as_bc(z)
    if not zz.is_invertible:
        raise DomainError("holomorphy theorem requires Z outside O_2 and nonzero")
    a1 = v.lambda1
    a2 = v.lambda2

    def g(b1, b2):
        return _g_pair(b1 - 1j * b2, b1 + 1j * b2, zz.e1, zz.e2, tol)

    g1_p1, g2_p1 = g(a1 + h, a2)
    g1_m1, g2_m1 = g(a1 - h, a2)
    g1_p2, g2_p2 = g(a1, a2 + h)
    g1_m2, g2_m2 = g(a1, a2 - h)

    d_g1_a1 = (g1_p1 - g1_m1) / (2 * h)
    d_g2_a1 = (g2_p1 - g2_m1) / (2 * h)
    d_g1_a2 = (g1_p2 - g1_m2) / (2 * h)
    d_g2_a2 = (g2_p2 - g2_m2) / (2 * h)
    return abs(d_g1_a1 - d_g2_a2), abs(d_g1_a2 + d_g2_a1)


def z_holomorphy_residual(order, z, h: float = 1e-5, tol: float = 1e-14):
    """Same residuals for Z -> J_V(Z) at nonnegative-integer component order."""
    v = _as_bc(order)
    for comp in (v.e1, v.e2):
        if comp.imag != 0.0 or comp.real < 0 or comp.real != round(comp.real):
            raise NonIntegerError(
                "Z-holomorphy theorem hypothesis needs nonnegative-integer "
                f"order components, got {comp}"
            )
    zz = _as_bc(z)
    l1 = zz.lambda1
    l2 = zz.lambda2

    def g(b1, b2):
        return _g_pair(v.e1, v.e2, b1 - 1j * b2, b1 + 1j * b2, tol)

    g1_p1, g2_p1 = g(l1 + h, l2)
    g1_m1, g2_m1 = g(l1 - h, l2)
    g1_p2, g2_p2 = g(l1, l2 + h)
    g1_m2, g2_m2 = g(l1, l2 - h)

    d_g1_l1 = (g1_p1 - g1_m1) / (2 * h)
    d_g2_l1 = (g2_p1 - g2_m1) / (2 * h)
    d_g1_l2 = (g1_p2 - g1_m2) / (2 * h)
    d_g2_l2 = (g2_p2 - g2_m2) / (2 * h)
    return abs(d_g1_l1 - d_g2_l2), abs(d_g1_l2 + d_g2_l1)


# ---------------------------------------------------------------------------
# modified Bessel K (real order/argument; weight-function plumbing)
# ---------------------------------------------------------------------------


def bessel_k_real(nu: float, x):
    """K_nu(x) for x > 0 (scipy-backed; even in nu)."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr <= 0):
        raise DomainError("bessel_k_real requires x > 0")
    out = _sps.kv(nu, arr)
    if np.ndim(x) == 0:
        return float(out)
    return out
