"""Registry of named test functions for the transform and PDE surfaces.

Each builder returns a vectorized SampledFunction on (0, infinity) with
analytic first and second derivatives where they exist.  The names are the
ones the CLI accepts for ``--function`` / ``--f`` / ``--g``.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError
from .quadrature import SampledFunction

__all__ = ["builtin_function", "BUILTIN_NAMES"]


def _indicator(a: float = 0.0, b: float = 1.0) -> SampledFunction:
    def f(w):
        return ((w > a) & (w < b)).astype(float)

    return SampledFunction(evaluator=f, support_hint=b, vectorized=True)


def _gaussian_monomial(power: float = 0.5) -> SampledFunction:
    # w^p exp(-w^2/2); self-reciprocal under the order p-1/2 transform
    def f(w):
        return w**power * np.exp(-(w**2) / 2.0)

    def fp(w):
        return f(w) * (power / w - w)

    def fpp(w):
        return f(w) * ((power / w - w) ** 2 - power / w**2 - 1.0)

    return SampledFunction(
        evaluator=f, derivative=fp, derivative2=fpp, vectorized=True
    )


def _cutoff_polynomial(
    power: float = 4.0, decay: float = 1.0, cutoff: float = 0.05
) -> SampledFunction:
    # w^p exp(-decay w^2) exp(-cutoff/w^2): smooth, vanishes (with all
    # derivatives) at 0 and decays at infinity, so transform boundary
    # terms drop out
    def _safe(w):
        w = np.asarray(w, dtype=float)
        out = np.zeros_like(w)
        ok = w > np.sqrt(cutoff / 700.0)  # exp argument underflows below
        ww = w[ok]
        out[ok] = ww**power * np.exp(-decay * ww**2 - cutoff / ww**2)
        return out

    def _logderiv(w):
        return power / w - 2.0 * decay * w + 2.0 * cutoff / w**3

    def fp(w):
        w = np.asarray(w, dtype=float)
        return _safe(w) * _logderiv(w)

    def fpp(w):
        w = np.asarray(w, dtype=float)
        ld = _logderiv(w)
        ld_prime = -power / w**2 - 2.0 * decay - 6.0 * cutoff / w**4
        return _safe(w) * (ld * ld + ld_prime)

    return SampledFunction(
        evaluator=_safe, derivative=fp, derivative2=fpp, vectorized=True
    )


_REGISTRY = {
    "indicator": _indicator,
    "gaussian-monomial": _gaussian_monomial,
    "cutoff-polynomial": _cutoff_polynomial,
}

BUILTIN_NAMES = tuple(sorted(_REGISTRY))


def builtin_function(name: str, **params) -> SampledFunction:
    """Instantiate a registered function; DomainError for unknown names."""
    try:
        builder = _REGISTRY[name]
    except KeyError:
        raise DomainError(
            f"unknown builtin function {name!r}; choose from {BUILTIN_NAMES}"
        ) from None
    return builder(**params)
