"""Canonical recessive solution of w'' = (y^3 + zeta*y) w and its rotations.

The distinguished solution decays in the sector |arg y| < pi/5 and carries
the normalization

    w  ~ y^(-3/4) [1 + sum_N B_N y^(-N/2)] exp(-E(y)),
    w' ~ y^(+3/4) [-1 + sum_N C_N y^(-N/2)] exp(-E(y)),
    E(y) = (2/5) y^(5/2) + zeta y^(1/2),

valid as |y| -> infinity in any closed subsector of |arg y| < 3*pi/5.  The
rotated family is w_k(y) = w(omega^-k y; omega^-2k zeta) with
omega = exp(2*pi*i/5); member k is the one decaying in the sector
|arg y - 2*pi*k/5| < pi/5.

The coefficients B_N, C_N are generated by the recurrence obtained from
substituting the ansatz into the equation (see ``asymptotic_coeffs``);
evaluation anywhere in the plane seeds the series at a large radius and
integrates inward along a polyline chosen so the wanted solution grows in
the direction of integration (contamination by the complementary solution
then stays controlled).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (BranchCutViolation, EvaluationOutsideSubdominantMargin,
                     PreconditionViolation, SeedInsufficient)
from .pathint import (ComplexPath, IntegratorConfig, ODEState, SolutionTrace,
                      integrate)

TWO_PI = 2.0 * math.pi

#: exp(2*pi*i/5), the rotation relating neighbouring subdominant sectors
OMEGA = complex(math.cos(TWO_PI / 5.0), math.sin(TWO_PI / 5.0))

#: half-opening of a subdominant sector
SECTOR_HALF = math.pi / 5.0

#: seeding rays must stay inside |phi| < 3*pi/5 with margin
SEED_PHI_LIMIT = 3.0 * math.pi / 5.0 - 0.1

#: inward radial integration is stable only while the solution grows
#: inward, i.e. |phi| < pi/5; keep a small margin
STABLE_PHI = SECTOR_HALF - 0.05

DEFAULT_RHO_FAR = 12.0
DEFAULT_N_TERMS = 48

_LN2 = math.log(2.0)


def omega_pow(k: int) -> complex:
    """omega**k for any integer k, computed from the angle (full precision)."""
    a = TWO_PI * (k % 5) / 5.0
    return complex(math.cos(a), math.sin(a))


def exponent_E(y: complex, zeta: complex, *,
               forbid_negative_axis: bool = False) -> complex:
    """E(y; zeta) = (2/5) y^(5/2) + zeta y^(1/2), principal branch."""
    y = complex(y)
    if y == 0:
        raise PreconditionViolation("exponent_E undefined at y = 0")
    if forbid_negative_axis and y.real < 0 and y.imag == 0:
        raise BranchCutViolation(f"y = {y!r} lies on the negative real axis")
    r = cmath.sqrt(y)
    return 0.4 * r ** 5 + zeta * r


def asymptotic_coeffs(zeta: complex, n_terms: int):
    """Series coefficients (B_N, C_N), N = 0..n_terms, as complex tuples.

    Substituting w = f(y) exp(-E) with f = sum B_N y^(-3/4 - N/2) into the
    equation and cancelling the exponential leaves

        f'' - 2 E' f' - E'' f + (zeta^2/4) f / y = 0,

    whose coefficient at the grading y^(-1/4 - M/2) gives, for M >= 1,

        M B_M = -[ zeta (M-2)/2 B_{M-4} + (zeta^2/4) B_{M-3}
                   + (2M-7)(2M-3)/16 B_{M-5} ].

    The derivative series follows from w' = (f' - E' f) exp(-E):

        C_M = -B_M - (zeta/2) B_{M-4} - (2M-7)/4 B_{M-5},

    with B_N = 0 for N < 0 and B_0 = 1 (so C_0 = -1).
    """
    if n_terms < 0:
        raise PreconditionViolation("n_terms must be >= 0")
    zeta = complex(zeta)
    B = [0j] * (n_terms + 1)
    B[0] = 1.0 + 0j
    for m in range(1, n_terms + 1):
        acc = 0j
        if m - 4 >= 0:
            acc += zeta * (m - 2) / 2.0 * B[m - 4]
        if m - 3 >= 0:
            acc += zeta * zeta / 4.0 * B[m - 3]
        if m - 5 >= 0:
            acc += (2 * m - 7) * (2 * m - 3) / 16.0 * B[m - 5]
        B[m] = -acc / m
    C = [0j] * (n_terms + 1)
    C[0] = -1.0 + 0j
    for m in range(1, n_terms + 1):
        acc = -B[m]
        if m - 4 >= 0:
            acc -= zeta / 2.0 * B[m - 4]
        if m - 5 >= 0:
            acc -= (2 * m - 7) / 4.0 * B[m - 5]
        C[m] = acc
    return tuple(B), tuple(C)


@dataclass(frozen=True)
class AsymptoticSeed:
    """Truncated large-|y| representation used to start integrations."""

    rho_far: float = DEFAULT_RHO_FAR
    phi: float = 0.0
    n_terms: int = DEFAULT_N_TERMS
    coeffs_B: tuple = ()
    coeffs_C: tuple = ()

    def __post_init__(self):
        if not self.rho_far > 0:
            raise PreconditionViolation("rho_far must be positive")
        if abs(self.phi) >= 3.0 * math.pi / 5.0:
            raise PreconditionViolation(
                f"seed ray angle {self.phi} outside |phi| < 3*pi/5")
        if self.n_terms < 0:
            raise PreconditionViolation("n_terms must be >= 0")


def make_seed(zeta: complex, rho_far: float = DEFAULT_RHO_FAR,
              phi: float = 0.0, n_terms: int = DEFAULT_N_TERMS) -> AsymptoticSeed:
    B, C = asymptotic_coeffs(zeta, n_terms)
    return AsymptoticSeed(rho_far=rho_far, phi=phi, n_terms=n_terms,
                          coeffs_B=B, coeffs_C=C)


def seed_state(seed: AsymptoticSeed, zeta: complex, *,
               rho: float | None = None, phi: float | None = None,
               y: complex | None = None,
               series_tol: float = 1e-11) -> ODEState:
    """Evaluate the truncated series at rho * exp(i*phi) (or exactly at
    ``y`` when given); scaled state.

    Raises :class:`SeedInsufficient` when the last retained terms are not
    below ``series_tol`` relative to the partial sums (the classical
    truncation-error proxy for an asymptotic series).
    """
    if y is not None:
        y = complex(y)
        rho, phi = abs(y), cmath.phase(y)
    else:
        rho = seed.rho_far if rho is None else float(rho)
        phi = seed.phi if phi is None else float(phi)
        y = rho * complex(math.cos(phi), math.sin(phi))
    if abs(phi) >= 3.0 * math.pi / 5.0:
        raise PreconditionViolation(f"seed angle {phi} outside |phi| < 3*pi/5")
    p = 1.0 / cmath.sqrt(y)

    B, C = seed.coeffs_B, seed.coeffs_C
    n = seed.n_terms
    sb = B[n] + 0j
    sc = C[n] + 0j
    for m in range(n - 1, -1, -1):
        sb = sb * p + B[m]
        sc = sc * p + C[m]
    pn = abs(p) ** n
    tail = max(abs(B[n]) * pn, abs(C[n]) * pn)
    if n >= 1:
        pn1 = abs(p) ** (n - 1)
        tail = max(tail, abs(B[n - 1]) * pn1, abs(C[n - 1]) * pn1)
    scale = max(abs(sb), abs(sc), 1e-300)
    if tail > series_tol * scale:
        raise SeedInsufficient(
            f"series tail {tail:.3e} above {series_tol:.1e} * {scale:.3e} at "
            f"rho={rho}, n_terms={n}; increase rho_far or n_terms")

    y34 = cmath.exp(0.75 * cmath.log(y))
    E = exponent_E(y, zeta)
    exp2 = int(math.floor(-E.real / _LN2))
    mant = cmath.exp(complex(-E.real - exp2 * _LN2, -E.imag))
    w = (sb / y34) * mant
    wp = (sc * y34) * mant
    return ODEState(y=y, w=w, wprime=wp, exp2=exp2)


def turning_points(zeta: complex, mu: complex = 0.0) -> list:
    """Roots of q(y) = y^3 + zeta*y + mu."""
    return [complex(r) for r in np.roots([1.0, 0.0, complex(zeta), complex(mu)])]


def _insert_detours(verts: list, zeta: complex, mu: complex = 0.0,
                    keepout: float = 0.2, push: float = 0.3) -> list:
    """Bend segments that pass within ``keepout`` of a turning point.

    Endpoints are exempt: only interior near-approaches get a detour vertex
    (an endpoint may legitimately be a turning point, e.g. y = 0).
    """
    roots = turning_points(zeta, mu)
    for _ in range(3):
        changed = False
        out = [verts[0]]
        for a, b in zip(verts, verts[1:]):
            d = b - a
            L2 = abs(d) ** 2
            if L2 > 0:
                best = None
                for r in roots:
                    ts = ((r - a) * d.conjugate()).real / L2
                    if 0.03 < ts < 0.97:
                        dist = abs(a + ts * d - r)
                        if dist < keepout and (best is None or dist < best[0]):
                            best = (dist, ts, r)
                if best is not None:
                    dist, ts, r = best
                    foot = a + ts * d
                    away = foot - r
                    if abs(away) < 1e-12:
                        away = 1j * d / abs(d)
                    else:
                        away = away / abs(away)
                    out.append(foot + push * away)
                    changed = True
            out.append(b)
        verts = out
        if not changed:
            break
    return verts


def plan_path(z_target: complex, zeta: complex,
              rho_far: float = DEFAULT_RHO_FAR, variant: int = 0) -> list:
    """Polyline from a seedable far point to ``z_target`` (rotated frame).

    Route: seed on a ray inside the stable inward wedge |phi| < pi/5, come
    in radially, then (if the target sits at a wider angle) walk an arc at a
    hand-off radius clear of the turning points and go radially to the
    target.  ``variant`` = 1 picks a geometrically different admissible
    route, used by the path-independence checks.
    """
    z_target = complex(z_target)
    r_t = abs(z_target)
    phi_t = cmath.phase(z_target) if r_t > 0 else 0.0

    if variant == 0:
        phi_cap = STABLE_PHI
        arc_step = 0.30
        r_hand = max(1.2, math.sqrt(abs(zeta)) + 0.45)
        rho_pad = 1.0
        dogleg = 0.0
    else:
        phi_cap = SECTOR_HALF - 0.12
        arc_step = 0.23
        r_hand = max(2.0, math.sqrt(abs(zeta)) + 1.25)
        rho_pad = 2.5
        dogleg = 0.14

    def on_ray(r, phi):
        return r * complex(math.cos(phi), math.sin(phi))

    if abs(phi_t) <= phi_cap:
        rho_s = max(rho_far, r_t + rho_pad)
        verts = [on_ray(rho_s, phi_t)]
        if dogleg and r_t < r_hand:
            verts.append(on_ray(r_hand, phi_t + dogleg))
        verts.append(z_target)
    else:
        phi_s = max(-phi_cap, min(phi_cap, phi_t))
        rho_s = max(rho_far, r_hand + rho_pad)
        verts = [on_ray(rho_s, phi_s), on_ray(r_hand, phi_s)]
        n_arc = max(1, int(math.ceil(abs(phi_t - phi_s) / arc_step)))
        for i in range(1, n_arc + 1):
            verts.append(on_ray(r_hand, phi_s + (phi_t - phi_s) * i / n_arc))
        if abs(verts[-1] - z_target) > 1e-14:
            verts.append(z_target)

    # drop accidental duplicates, then bend around turning points
    clean = [verts[0]]
    for v in verts[1:]:
        if v != clean[-1]:
            clean.append(v)
    return _insert_detours(clean, zeta)


@dataclass(frozen=True)
class CanonicalSolution:
    """Member k of the rotated family at parameter zeta.

    Evaluation happens in the rotated variable z = omega^-k y with
    parameter omega^-2k zeta, so the seed always sits in the k = 0
    decay sector and the principal branch is used throughout.
    """

    zeta: complex
    k: int = 0
    seed: AsymptoticSeed = field(default=None)  # type: ignore[assignment]
    normalization: complex = 1.0 + 0j

    def __post_init__(self):
        if self.k not in (0, 1, 2, 3, 4):
            raise PreconditionViolation("k must be in {0,...,4}")
        object.__setattr__(self, "zeta", complex(self.zeta))
        if self.seed is None:
            object.__setattr__(
                self, "seed", make_seed(self.rotated_zeta))

    @property
    def rotated_zeta(self) -> complex:
        return omega_pow(-2 * self.k) * complex(self.zeta)


def seeded_trace(zeta: complex, vertices, cfg: IntegratorConfig,
                 seed: AsymptoticSeed | None = None,
                 collect_steps: bool = False) -> SolutionTrace:
    """Seed the canonical solution at ``vertices[0]`` and integrate on.

    ``vertices[0]`` must lie on a seedable ray (|arg| < 3*pi/5 with margin);
    the remaining vertices are followed verbatim (plus turning-point
    detours).  Used directly by the solution-family construction, which
    walks long straight lines in the rotated variable.
    """
    v0 = complex(vertices[0])
    rho, phi = abs(v0), cmath.phase(v0)
    if abs(phi) > SEED_PHI_LIMIT:
        raise PreconditionViolation(
            f"first vertex angle {phi:.3f} not seedable (|phi| <= "
            f"{SEED_PHI_LIMIT:.3f} required)")
    if seed is None:
        seed = make_seed(zeta)
    start = seed_state(seed, zeta, y=v0)
    return integrate((zeta, 0.0), start,
                     ComplexPath([complex(v) for v in vertices]), cfg,
                     collect_steps=collect_steps)


def evaluate(sol: CanonicalSolution, y: complex,
             cfg: IntegratorConfig = IntegratorConfig(),
             path_variant: int = 0) -> ODEState:
    """(w, w') of family member ``sol.k`` at the point ``y``.

    The result is an original-frame state: for k != 0 the chain rule factor
    omega^-k is applied to the derivative of the rotated-frame solution.
    """
    return evaluate_with_trace(sol, y, cfg, path_variant)[0]


def evaluate_with_trace(sol: CanonicalSolution, y: complex,
                        cfg: IntegratorConfig = IntegratorConfig(),
                        path_variant: int = 0,
                        collect_steps: bool = False):
    """Like :func:`evaluate` but also returns the rotated-frame trace."""
    y = complex(y)
    rot = omega_pow(-sol.k)
    z_t = rot * y
    zr = sol.rotated_zeta
    verts = plan_path(z_t, zr, rho_far=sol.seed.rho_far, variant=path_variant)
    trace = seeded_trace(zr, verts, cfg, seed=sol.seed,
                         collect_steps=collect_steps)
    fin = trace.final_state
    norm = sol.normalization
    state = ODEState(y=y, w=fin.w * norm, wprime=fin.wprime * rot * norm,
                     exp2=fin.exp2)
    return state, trace


def ray_log_abs(sol: CanonicalSolution, theta: float, radii,
                cfg: IntegratorConfig = IntegratorConfig()):
    """log|w| of the family member along the ray arg y = theta.

    Radii are visited in decreasing order with a single inward trace when
    the rotated ray lies in the stable wedge; otherwise each point is an
    independent evaluation.
    """
    radii = sorted(float(r) for r in radii)
    zr = sol.rotated_zeta
    phi_rot = _wrap_angle(theta - TWO_PI * sol.k / 5.0)
    out = {}
    if abs(phi_rot) <= STABLE_PHI:
        rho_s = max(sol.seed.rho_far, radii[-1] + 1.0)
        ray = complex(math.cos(phi_rot), math.sin(phi_rot))
        verts = [rho_s * ray] + [r * ray for r in reversed(radii)]
        tr = seeded_trace(zr, verts, cfg, seed=sol.seed)
        want = {round(r, 12): r for r in radii}
        for i in range(len(tr)):
            key = round(abs(tr.y[i]), 12)
            if key in want:
                out[want[key]] = tr.state(i).log_abs_w()
    else:
        for r in radii:
            st = evaluate(sol, r * complex(math.cos(theta), math.sin(theta)),
                          cfg)
            out[r] = st.log_abs_w()
    return [out[r] for r in radii]


def _wrap_angle(a: float) -> float:
    while a > math.pi:
        a -= TWO_PI
    while a <= -math.pi:
        a += TWO_PI
    return a


def subdominant_margin(y: complex, k: int = 0) -> float:
    """Angular distance of arg y from the boundary of decay sector k."""
    off = _wrap_angle(cmath.phase(complex(y)) - TWO_PI * k / 5.0)
    return SECTOR_HALF - abs(off)


def require_inside_sector(y: complex, k: int = 0, margin: float = 0.02) -> None:
    m = subdominant_margin(y, k)
    if m < margin:
        raise EvaluationOutsideSubdominantMargin(
            f"arg y = {cmath.phase(complex(y)):.4f} within {m:.4f} rad of the "
            f"sector-{k} boundary (margin {margin})")
