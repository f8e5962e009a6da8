"""Adaptive integration of w'' = (y^3 + zeta*y + mu) w along complex polylines.

Complex scalars are plain Python ``complex``; paths are polylines (curved
contours are approximated by the caller).  The integrator is an embedded
high-order Runge-Kutta pair with per-step error control and exact
power-of-two rescaling of the state, so dominant solutions growing like
exp(+Re E) never overflow: every sampled value is ``w * 2**exp2``.
"""

from __future__ import annotations

import cmath
import csv
import math
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .errors import (InvalidPath, MismatchedEvaluationPoint, NonFiniteState,
                     PreconditionViolation, StepUnderflow)


def _as_complex(z) -> complex:
    z = complex(z)
    if not cmath.isfinite(z):
        raise PreconditionViolation(f"non-finite complex value {z!r}")
    return z


@dataclass(frozen=True)
class ComplexPath:
    """Piecewise-linear integration contour (>= 2 vertices, no repeats)."""

    vertices: tuple

    def __init__(self, vertices):
        verts = tuple(_as_complex(v) for v in vertices)
        if len(verts) < 2:
            raise InvalidPath("path needs at least two vertices")
        for u, v in zip(verts, verts[1:]):
            if u == v:
                raise InvalidPath(f"repeated consecutive vertex {u!r}")
        object.__setattr__(self, "vertices", verts)

    @property
    def arclength(self) -> float:
        return sum(abs(v - u) for u, v in zip(self.vertices, self.vertices[1:]))

    def reversed(self) -> "ComplexPath":
        return ComplexPath(self.vertices[::-1])


@dataclass(frozen=True)
class IntegratorConfig:
    rel_tol: float = 1e-12
    abs_tol: float = 1e-14
    max_step: float = 1.0
    min_step: float = 1e-12

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise PreconditionViolation("tolerances must be positive")
        if not (0 < self.min_step <= self.max_step):
            raise PreconditionViolation("need 0 < min_step <= max_step")

    def halved(self) -> "IntegratorConfig":
        return IntegratorConfig(self.rel_tol / 2, self.abs_tol / 2,
                                self.max_step, self.min_step)


@dataclass(frozen=True)
class ODEState:
    """Solution state (w, w') at a point y; true values are w * 2**exp2."""

    y: complex
    w: complex
    wprime: complex
    exp2: int = 0

    def __post_init__(self):
        for z in (self.y, self.w, self.wprime):
            if not cmath.isfinite(complex(z)):
                raise NonFiniteState(f"non-finite state component {z!r}")

    def scaled(self, extra_exp2: int) -> "ODEState":
        return ODEState(self.y, self.w, self.wprime, self.exp2 + extra_exp2)

    @property
    def w_value(self) -> complex:
        """Unscaled w; may overflow/underflow for extreme exponents."""
        f = math.ldexp(1.0, self.exp2)
        return self.w * f

    @property
    def wprime_value(self) -> complex:
        f = math.ldexp(1.0, self.exp2)
        return self.wprime * f

    def log_abs_w(self) -> float:
        """log|w| including the power-of-two exponent (-inf for w == 0)."""
        if self.w == 0:
            return -math.inf
        return math.log(abs(self.w)) + self.exp2 * math.log(2.0)


_CSV_COLUMNS = ("s_arclength", "y_re", "y_im", "w_re", "w_im",
                "wp_re", "wp_im", "local_error", "scale_exp2")


@dataclass
class SolutionTrace:
    """Sampled (y, w, w') along a path, with local error estimates.

    Arrays are aligned; ``w * 2.0**exp2`` recovers the true magnitudes.
    """

    zeta: complex
    mu: complex
    s: np.ndarray
    y: np.ndarray
    w: np.ndarray
    wp: np.ndarray
    local_error: np.ndarray
    exp2: np.ndarray
    config: IntegratorConfig
    nsteps: int = 0
    nrejected: int = 0
    nfev: int = 0
    backend: str = field(default=_backend.BACKEND_NAME)

    def __len__(self) -> int:
        return len(self.s)

    def state(self, i: int) -> ODEState:
        return ODEState(complex(self.y[i]), complex(self.w[i]),
                        complex(self.wp[i]), int(self.exp2[i]))

    @property
    def final_state(self) -> ODEState:
        return self.state(len(self.s) - 1)

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(_CSV_COLUMNS)
            for i in range(len(self.s)):
                writer.writerow([
                    repr(float(self.s[i])),
                    repr(float(self.y[i].real)), repr(float(self.y[i].imag)),
                    repr(float(self.w[i].real)), repr(float(self.w[i].imag)),
                    repr(float(self.wp[i].real)), repr(float(self.wp[i].imag)),
                    repr(float(self.local_error[i])),
                    int(self.exp2[i]),
                ])


def integrate(q_params, start: ODEState, path: ComplexPath,
              cfg: IntegratorConfig = IntegratorConfig(),
              collect_steps: bool = True) -> SolutionTrace:
    """Propagate ``start`` along ``path`` for q(y) = y^3 + zeta*y + mu.

    ``start.y`` must equal the first path vertex.  Raises
    :class:`StepUnderflow` / :class:`NonFiniteState` on integrator failure.
    """
    zeta, mu = (_as_complex(q_params[0]), _as_complex(q_params[1]))
    if start.y != path.vertices[0]:
        raise PreconditionViolation(
            f"start.y = {start.y!r} is not the first path vertex "
            f"{path.vertices[0]!r}")

    samples, final, stats = _backend.integrate_polyline(
        zeta, mu, path.vertices, start.w, start.wprime, start.exp2,
        cfg.rel_tol, cfg.abs_tol, cfg.max_step, cfg.min_step,
        collect_steps)

    if stats["status"] == _backend.STEP_UNDERFLOW:
        raise StepUnderflow(
            f"required step below min_step={cfg.min_step} near y = "
            f"{stats['y_fail']!r}")
    if stats["status"] == _backend.NON_FINITE:
        raise NonFiniteState(f"state became non-finite near y = "
                             f"{stats['y_fail']!r}")

    n = len(samples)
    s = np.empty(n)
    y = np.empty(n, dtype=complex)
    w = np.empty(n, dtype=complex)
    wp = np.empty(n, dtype=complex)
    err = np.empty(n)
    exp2 = np.empty(n, dtype=np.int64)
    for i, row in enumerate(samples):
        s[i], y[i], w[i], wp[i], err[i], exp2[i] = row
    return SolutionTrace(zeta=zeta, mu=mu, s=s, y=y, w=w, wp=wp,
                         local_error=err, exp2=exp2, config=cfg,
                         nsteps=stats["nsteps"], nrejected=stats["nrejected"],
                         nfev=stats["nfev"])


def wronskian(a: ODEState, b: ODEState) -> complex:
    """a.w * b.w' - a.w' * b.w, requiring a common evaluation point.

    The combined power-of-two exponents are folded back in, so the result
    is the true Wronskian (overflows to inf for absurd exponent sums).
    """
    if a.y != b.y:
        raise MismatchedEvaluationPoint(
            f"states at different points {a.y!r} vs {b.y!r}")
    raw = a.w * b.wprime - a.wprime * b.w
    shift = a.exp2 + b.exp2
    if shift == 0:
        return raw
    f = math.ldexp(1.0, shift)
    return raw * f
