"""Panel Gauss-Legendre quadrature for semi-infinite (and finite) integrals.

The semi-infinite engine walks fixed-length panels [0,L], [L,2L], ... with
a Gauss rule per panel, accumulating with compensated summation, and stops
once two consecutive panel contributions fall below tolerance.  Panel
contributions of slowly decaying oscillatory integrands form an (almost)
alternating sequence, so when the plain rule stalls the engine applies the
Wynn epsilon algorithm to the trailing partial sums and stops when the
extrapolated values stabilize instead.  Both paths are deterministic:
fixed panel decomposition, ordered reduction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .algebra import BicomplexNumber, HyperbolicNumber
from .errors import DomainError, NonConvergenceError

__all__ = [
    "QuadratureConfig",
    "SampledFunction",
    "TransformResult",
    "integrate_semi_infinite",
    "gauss_nodes_uniform",
    "gauss_nodes_graded",
]


@dataclass(frozen=True)
class QuadratureConfig:
    """Panel scheme for the semi-infinite integrals.

    ``panel_length`` should be matched to the kernel's oscillation (about
    one half-period per panel) by the caller; the transform code does this
    automatically from the evaluation point.
    """

    panel_length: float = math.pi
    max_panels: int = 3000
    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    points_per_panel: int = 16

    def __post_init__(self):
        if self.panel_length <= 0:
            raise DomainError("panel_length must be positive")
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise DomainError("tolerances must be positive")
        if self.points_per_panel < 8:
            raise DomainError("points_per_panel must be at least 8")
        if self.max_panels < 4:
            raise DomainError("max_panels must be at least 4")

    def with_panel_length(self, length: float) -> "QuadratureConfig":
        return QuadratureConfig(
            panel_length=length,
            max_panels=self.max_panels,
            abs_tol=self.abs_tol,
            rel_tol=self.rel_tol,
            points_per_panel=self.points_per_panel,
        )

    def to_json(self) -> dict:
        return {
            "panel_length": self.panel_length,
            "max_panels": self.max_panels,
            "abs_tol": self.abs_tol,
            "rel_tol": self.rel_tol,
            "points_per_panel": self.points_per_panel,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "QuadratureConfig":
        return cls(**obj)


@dataclass
class SampledFunction:
    """A bicomplex-valued function of n positive real coordinates.

    ``evaluator`` maps coordinates to a BicomplexNumber (scalar protocol) or,
    with ``vectorized=True``, maps coordinate arrays to either a single array
    (used for both components) or an (e1, e2) pair of arrays.

    ``support_hint`` declares that the function is identically zero beyond
    that cutoff in every coordinate, letting integrators stop exactly there.
    ``derivative``/``derivative2`` are optional first and second partials
    (1-d case) used by the differential operators.
    """

    evaluator: Callable
    support_hint: Optional[float] = None
    derivative: Optional[Callable] = None
    derivative2: Optional[Callable] = None
    vectorized: bool = False
    numeric_derivative: bool = False

    def eval_components(self, *coords):
        """Evaluate on broadcast coordinate arrays -> (e1, e2) complex arrays."""
        arrays = [np.asarray(c, dtype=float) for c in coords]
        if self.vectorized:
            out = self.evaluator(*arrays)
            if isinstance(out, tuple):
                c1 = np.asarray(out[0], dtype=complex)
                c2 = np.asarray(out[1], dtype=complex)
            else:
                c1 = np.asarray(out, dtype=complex)
                c2 = c1
            return c1, c2
        flat = np.broadcast_arrays(*arrays)
        shape = flat[0].shape
        c1 = np.empty(shape, dtype=complex)
        c2 = np.empty(shape, dtype=complex)
        it = np.nditer(flat[0], flags=["multi_index"])
        for _ in it:
            idx = it.multi_index
            val = self.evaluator(*(a[idx] for a in flat))
            if isinstance(val, BicomplexNumber):
                c1[idx] = val.e1
                c2[idx] = val.e2
            else:
                c1[idx] = complex(val)
                c2[idx] = complex(val)
        return c1, c2


@dataclass(frozen=True)
class TransformResult:
    value: BicomplexNumber
    panels_used: int
    error_estimate: HyperbolicNumber


@lru_cache(maxsize=64)
def _leggauss(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def gauss_nodes_uniform(a: float, b: float, panels: int, points: int):
    """Composite Gauss-Legendre nodes/weights on [a, b], equal panels."""
    x0, w0 = _leggauss(points)
    edges = np.linspace(a, b, panels + 1)
    lo = edges[:-1, None]
    hi = edges[1:, None]
    x = (lo + hi) / 2 + (hi - lo) / 2 * x0[None, :]
    w = (hi - lo) / 2 * w0[None, :]
    return x.ravel(), w.ravel()


def gauss_nodes_graded(
    a: float,
    b: float,
    toward_end: bool,
    panels: int = 20,
    points: int = 24,
    ratio: float = 0.5,
):
    """Geometrically graded panels toward one endpoint.

    Concentrating panels against an algebraic endpoint singularity restores
    fast convergence of the Gauss rule; nodes stay interior so the endpoint
    itself is never evaluated.
    """
    breaks = [b - a]
    for _ in range(panels - 1):
        breaks.append(breaks[-1] * ratio)
    breaks.append(0.0)
    breaks = np.array(breaks[::-1])  # 0, ..., b-a ascending
    x0, w0 = _leggauss(points)
    lo = breaks[:-1, None]
    hi = breaks[1:, None]
    x = (lo + hi) / 2 + (hi - lo) / 2 * x0[None, :]
    w = (hi - lo) / 2 * w0[None, :]
    x = x.ravel()
    w = w.ravel()
    if toward_end:
        return b - x[::-1], w[::-1]
    return a + x, w


def _wynn_epsilon(sums):
    """Limit estimate of a partial-sum sequence via the epsilon algorithm."""
    n = len(sums)
    prev = [0.0 + 0.0j] * (n + 1)
    cur = list(sums)
    best = cur[-1]
    for k in range(1, n):
        nxt = []
        for i in range(n - k):
            d = cur[i + 1] - cur[i]
            if abs(d) < 1e-300:
                nxt.append(cur[i + 1])
            else:
                nxt.append(prev[i + 1] + 1.0 / d)
        prev, cur = cur, nxt
        if k % 2 == 0 and cur:
            best = cur[-1]
    return best


_ACCEL_WINDOW = 32
_ACCEL_START = 24


def integrate_semi_infinite(
    f: SampledFunction,
    config: QuadratureConfig | None = None,
    start: float = 0.0,
) -> TransformResult:
    """Integrate a 1-d SampledFunction over (start, infinity).

    With a support hint the integral is evaluated exactly on
    [start, support_hint] and no convergence detection is needed.
    Raises NonConvergenceError when the panel budget is exhausted without
    either the panel rule or the extrapolated tail stabilizing.
    """
    if config is None:
        config = QuadratureConfig()
    x0, w0 = _leggauss(config.points_per_panel)
    L = config.panel_length

    if f.support_hint is not None:
        upper = float(f.support_hint)
        if upper <= start:
            return TransformResult(
                BicomplexNumber(0, 0), 0, HyperbolicNumber(0.0, 0.0)
            )
        n_panels = max(1, math.ceil((upper - start) / L))
        x, w = gauss_nodes_uniform(start, upper, n_panels, config.points_per_panel)
        c1, c2 = f.eval_components(x)
        # embedded coarse rule for the error estimate
        xc, wc = gauss_nodes_uniform(
            start, upper, n_panels, max(8, config.points_per_panel // 2)
        )
        d1, d2 = f.eval_components(xc)
        v1 = complex(np.sum(w * c1))
        v2 = complex(np.sum(w * c2))
        e1 = abs(v1 - complex(np.sum(wc * d1)))
        e2 = abs(v2 - complex(np.sum(wc * d2)))
        return TransformResult(
            BicomplexNumber(v1, v2), n_panels, HyperbolicNumber(e1, e2)
        )

    total1 = 0.0 + 0.0j
    total2 = 0.0 + 0.0j
    carry1 = 0.0 + 0.0j
    carry2 = 0.0 + 0.0j
    prev_small = False
    prev_mag = (math.inf, math.inf)
    sums1: list[complex] = []
    sums2: list[complex] = []
    extrap_prev = None
    extrap_hits = 0

    for k in range(config.max_panels):
        a = start + k * L
        nodes = a + (L / 2) * (x0 + 1.0)
        weights = (L / 2) * w0
        c1, c2 = f.eval_components(nodes)
        p1 = complex(np.sum(weights * c1))
        p2 = complex(np.sum(weights * c2))

        y = p1 - carry1
        t = total1 + y
        carry1 = (t - total1) - y
        total1 = t
        y = p2 - carry2
        t = total2 + y
        carry2 = (t - total2) - y
        total2 = t

        sums1.append(total1)
        sums2.append(total2)
        if len(sums1) > _ACCEL_WINDOW:
            sums1.pop(0)
            sums2.pop(0)

        tol1 = config.abs_tol + config.rel_tol * abs(total1)
        tol2 = config.abs_tol + config.rel_tol * abs(total2)
        small = abs(p1) <= tol1 and abs(p2) <= tol2
        if small and prev_small:
            return TransformResult(
                BicomplexNumber(total1, total2),
                k + 1,
                HyperbolicNumber(abs(p1) + prev_mag[0], abs(p2) + prev_mag[1]),
            )
        prev_small = small
        prev_mag = (abs(p1), abs(p2))

        if k + 1 >= _ACCEL_START:
            ex1 = _wynn_epsilon(sums1)
            ex2 = _wynn_epsilon(sums2)
            if extrap_prev is not None:
                d1 = abs(ex1 - extrap_prev[0])
                d2 = abs(ex2 - extrap_prev[1])
                if d1 <= tol1 and d2 <= tol2:
                    extrap_hits += 1
                    if extrap_hits >= 2:
                        return TransformResult(
                            BicomplexNumber(ex1, ex2),
                            k + 1,
                            HyperbolicNumber(d1, d2),
                        )
                else:
                    extrap_hits = 0
            extrap_prev = (ex1, ex2)

    raise NonConvergenceError(
        f"semi-infinite integral did not settle within {config.max_panels} "
        f"panels of length {L:.4g} (insufficient decay?)"
    )
