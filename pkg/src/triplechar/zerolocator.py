"""Locating and certifying a zero of C_0 in the sector pi < arg zeta <= 19*pi/15.

The function C_0 is entire, so the number of zeros inside an annular-sector
contour equals the winding number of its boundary image, computed here by
adaptively refined phase unwrapping.  A certified zero is produced by
radial/angular bisection down to a small cell followed by damped Newton
iteration with a central-difference derivative.

Angles are handled in the positive convention arg in (0, 2*pi) so the
sector of interest sits at (pi, 19*pi/15] without wrap-around.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, replace

from .errors import (NewtonStalled, NoZeroEnclosed, PhaseJumpUnresolved,
                     PreconditionViolation, SectorViolation, ZeroOnContour)
from .pathint import IntegratorConfig
from .stokes import c0_derivative, stokes_c0

SECTOR_ARG_MIN = math.pi
SECTOR_ARG_MAX = 19.0 * math.pi / 15.0

#: default angular inset of the search contour above arg = pi.  The zero
#: sits extremely close to the negative real axis (arg - pi ~ 7e-3), so the
#: inset must stay well below that; 2e-3 keeps the contour > 1e-2 away from
#: the zero while excluding the axis itself.
DEFAULT_ARG_MIN = math.pi + 0.002


@dataclass(frozen=True)
class SectorContour:
    """Boundary of the annular sector r_min <= |z| <= r_max,
    arg_min <= arg z <= arg_max (positive angle convention)."""

    r_min: float = 0.5
    r_max: float = 8.0
    arg_min: float = DEFAULT_ARG_MIN
    arg_max: float = SECTOR_ARG_MAX
    n_samples: int = 128

    def __post_init__(self):
        if not (0 < self.r_min < self.r_max):
            raise PreconditionViolation("need 0 < r_min < r_max")
        if not (self.arg_min < self.arg_max):
            raise PreconditionViolation("need arg_min < arg_max")
        if self.n_samples < 64:
            raise PreconditionViolation("n_samples must be >= 64")

    def as_dict(self) -> dict:
        return {"r_min": self.r_min, "r_max": self.r_max,
                "arg_min": self.arg_min, "arg_max": self.arg_max,
                "n_samples": self.n_samples}


@dataclass(frozen=True)
class ZeroCertificate:
    """A located zero with winding-number evidence."""

    zeta0: complex
    residual: float
    winding: int
    contour: SectorContour
    newton_iters: int

    @property
    def arg_zeta0(self) -> float:
        """arg of the zero in the positive convention (0, 2*pi)."""
        a = cmath.phase(self.zeta0)
        return a + 2.0 * math.pi if a < 0 else a

    def as_dict(self) -> dict:
        return {
            "schema": 1,
            "zeta0": [self.zeta0.real, self.zeta0.imag],
            "abs_zeta0": abs(self.zeta0),
            "arg_zeta0": self.arg_zeta0,
            "residual": self.residual,
            "winding": self.winding,
            "newton_iters": self.newton_iters,
            "contour": self.contour.as_dict(),
        }


def save_certificate(cert: ZeroCertificate, path) -> None:
    with open(path, "w") as fh:
        json.dump(cert.as_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_zeta0(path) -> complex:
    with open(path) as fh:
        data = json.load(fh)
    re, im = data["zeta0"]
    return complex(re, im)


def _boundary(contour: SectorContour):
    """Closed boundary as a parametric map t in [0, 1] -> zeta.

    Counterclockwise around the region: outgoing radial edge at arg_min,
    outer arc (arg_min -> arg_max), incoming radial edge at arg_max, inner
    arc (arg_max -> arg_min); parameter shares are proportional to
    arc/segment lengths.
    """
    c = contour
    lens = [c.r_max - c.r_min,
            c.r_max * (c.arg_max - c.arg_min),
            c.r_max - c.r_min,
            c.r_min * (c.arg_max - c.arg_min)]
    total = sum(lens)
    cuts = []
    acc = 0.0
    for piece_len in lens:
        acc += piece_len
        cuts.append(acc / total)

    def point(t: float) -> complex:
        t = t % 1.0
        if t < cuts[0]:
            u = t / cuts[0]
            r = c.r_min + u * (c.r_max - c.r_min)
            return r * cmath.exp(1j * c.arg_min)
        if t < cuts[1]:
            u = (t - cuts[0]) / (cuts[1] - cuts[0])
            a = c.arg_min + u * (c.arg_max - c.arg_min)
            return c.r_max * cmath.exp(1j * a)
        if t < cuts[2]:
            u = (t - cuts[1]) / (cuts[2] - cuts[1])
            r = c.r_max - u * (c.r_max - c.r_min)
            return r * cmath.exp(1j * c.arg_max)
        u = (t - cuts[2]) / (1.0 - cuts[2])
        a = c.arg_max - u * (c.arg_max - c.arg_min)
        return c.r_min * cmath.exp(1j * a)

    return point


_MAX_REFINE_DEPTH = 28


def winding_number(contour: SectorContour,
                   cfg: IntegratorConfig = IntegratorConfig(),
                   cache: dict | None = None) -> int:
    """Zeros of C_0 enclosed by the contour, by total argument change.

    Samples are refined wherever the phase jumps by more than pi/2 until
    resolved (:class:`PhaseJumpUnresolved` if a jump survives the depth
    budget).  A sampled value suggesting a zero within ~1e-3 of the contour
    raises :class:`ZeroOnContour`.
    """
    if cache is None:
        cache = {}
    point = _boundary(contour)
    n = contour.n_samples

    ts = [i / n for i in range(n + 1)]
    vals = [stokes_c0(point(t), cfg, cache=cache) for t in ts]

    min_abs = min(abs(v) for v in vals)
    if min_abs == 0.0:
        raise ZeroOnContour("C_0 vanished exactly on a contour sample")

    total = 0.0
    for i in range(len(ts) - 1):
        total += _unwrapped_change(point, ts[i], vals[i], ts[i + 1],
                                   vals[i + 1], cfg, cache, 0)

    # near-contour zero detection: smallest |C_0| against a local
    # derivative scale estimated from the nearest sampled neighbours
    imin = min(range(len(vals)), key=lambda i: abs(vals[i]))
    j = imin + 1 if imin + 1 < len(vals) else imin - 1
    dz = point(ts[j]) - point(ts[imin])
    if abs(dz) > 0:
        deriv = abs(vals[j] - vals[imin]) / abs(dz)
        if deriv > 0 and abs(vals[imin]) / deriv < 1e-3:
            raise ZeroOnContour(
                f"estimated zero distance {abs(vals[imin]) / deriv:.2e} "
                f"from contour near zeta = {point(ts[imin]):.6f}")

    w = total / (2.0 * math.pi)
    w_int = round(w)
    if abs(w - w_int) > 0.05:
        raise PhaseJumpUnresolved(
            f"total phase change {w:.4f} turns is not close to an integer")
    return int(w_int)


def _unwrapped_change(point, t1, v1, t2, v2, cfg, cache, depth) -> float:
    d = cmath.phase(v2 / v1)
    if abs(d) <= 0.5 * math.pi:
        return d
    if depth >= _MAX_REFINE_DEPTH:
        raise PhaseJumpUnresolved(
            f"phase jump {d:.3f} rad between t={t1} and t={t2} unresolved "
            f"at depth {depth}")
    tm = 0.5 * (t1 + t2)
    vm = stokes_c0(point(tm), cfg, cache=cache)
    if abs(vm) == 0.0:
        raise ZeroOnContour("C_0 vanished on a refined contour sample")
    return (_unwrapped_change(point, t1, v1, tm, vm, cfg, cache, depth + 1)
            + _unwrapped_change(point, tm, vm, t2, v2, cfg, cache, depth + 1))


def _subdivide(lo_r, hi_r, lo_a, hi_a, cfg, cache, n_samples):
    """One bisection of the enclosing cell, splitting its longer side.

    Returns the sub-cell (preferring smaller radius, then smaller angle,
    which realizes the smallest-|zeta| tie-break) that still has nonzero
    winding.
    """
    radial_extent = hi_r - lo_r
    angular_extent = hi_r * (hi_a - lo_a)
    for frac in (0.5, 0.47, 0.53, 0.44, 0.56):
        try:
            if radial_extent >= angular_extent:
                mid = lo_r + frac * (hi_r - lo_r)
                cells = [(lo_r, mid, lo_a, hi_a), (mid, hi_r, lo_a, hi_a)]
            else:
                mid = lo_a + frac * (hi_a - lo_a)
                cells = [(lo_r, hi_r, lo_a, mid), (lo_r, hi_r, mid, hi_a)]
            for cell in cells:
                c = SectorContour(cell[0], cell[1], cell[2], cell[3],
                                  n_samples)
                if winding_number(c, cfg, cache) >= 1:
                    return cell
            return None
        except ZeroOnContour:
            continue
    raise ZeroOnContour("could not place a zero-free splitting line")


def find_zero(contour: SectorContour | None = None, tol: float = 1e-10,
              cfg: IntegratorConfig = IntegratorConfig(),
              check_sector: bool = True) -> ZeroCertificate:
    """Certified zero of C_0 inside the contour (default: the sector S).

    Bisects the enclosing cell until it is small, then runs damped Newton
    with a differenced derivative.  If the initial winding is zero the
    outer radius is doubled (up to 32) before giving up.
    """
    if contour is None:
        contour = SectorContour()
    cache: dict = {}

    work = contour
    w = winding_number(work, cfg, cache)
    while w == 0 and work.r_max < 32.0:
        work = replace(work, r_max=min(32.0, 2.0 * work.r_max))
        w = winding_number(work, cfg, cache)
    if w == 0:
        raise NoZeroEnclosed(
            f"winding 0 over {work.as_dict()} (after radial expansion)")

    lo_r, hi_r = work.r_min, work.r_max
    lo_a, hi_a = work.arg_min, work.arg_max
    n_sub = 64
    for _ in range(64):
        if (hi_r - lo_r) < 0.05 and hi_r * (hi_a - lo_a) < 0.05:
            break
        cell = _subdivide(lo_r, hi_r, lo_a, hi_a, cfg, cache, n_sub)
        if cell is None:
            raise NoZeroEnclosed(
                "winding vanished during bisection (zero escaped through "
                "a contour edge?)")
        lo_r, hi_r, lo_a, hi_a = cell

    z = 0.5 * (lo_r + hi_r) * cmath.exp(0.5j * (lo_a + hi_a))
    res = abs(stokes_c0(z, cfg, cache=cache))
    iters = 0
    for _ in range(40):
        if res < tol:
            break
        d = c0_derivative(z, cfg, cache=cache)
        if d == 0:
            raise NewtonStalled("vanishing differenced derivative")
        step = stokes_c0(z, cfg, cache=cache) / d
        accepted = False
        for _ in range(8):
            z_try = z - step
            r_try = abs(stokes_c0(z_try, cfg, cache=cache))
            if r_try < res:
                z, res = z_try, r_try
                accepted = True
                break
            step *= 0.5
        iters += 1
        if not accepted:
            break
    if res >= tol:
        raise NewtonStalled(
            f"residual {res:.3e} above tol {tol:.1e} after {iters} damped "
            f"Newton iterations")

    cert = ZeroCertificate(zeta0=z, residual=res, winding=w, contour=work,
                           newton_iters=iters)
    if check_sector and not (SECTOR_ARG_MIN < cert.arg_zeta0
                             <= SECTOR_ARG_MAX + 1e-12):
        raise SectorViolation(
            f"located zero has arg {cert.arg_zeta0:.6f} outside "
            f"(pi, 19*pi/15]")
    return cert


def axis_min_abs(r_min: float, r_max: float, n: int = 41,
                 cfg: IntegratorConfig = IntegratorConfig(),
                 cache: dict | None = None) -> float:
    """min |C_0| on the segment arg zeta = pi, r in [r_min, r_max].

    Supports the no-zero-on-the-axis check: the located zero must not be an
    axis zero in disguise, so this minimum has to stay well above the
    certification residual.
    """
    vals = []
    for i in range(n):
        r = r_min + (r_max - r_min) * i / (n - 1)
        vals.append(abs(stokes_c0(-r, cfg, cache=cache)))
    return min(vals)
