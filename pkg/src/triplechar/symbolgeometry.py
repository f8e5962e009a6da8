"""Root and cone geometry of the principal symbol at a triple point.

Two coordinate pictures are used.  For the root formulas the symbol is the
reduced cubic in one space dimension,

    p = tau^3 - 3 (x^2 + xi^2) tau - 2 b x^3,   0 < |b| < 1,

whose roots follow from the trigonometric method: with
phi = arccos(b x^3 / (x^2 + xi^2)^(3/2)), the roots are
2 sqrt(x^2 + xi^2) cos((phi + 2 pi m)/3), m = 0, 1, 2; the m = 2 branch is
the one vanishing identically on x = 0.  Its directional limits
tau(eps v)/eps -> -(2/3) b cos^3(phi_v) are not linear in the direction, so
no C^1 (hence no smooth) factorization with a regular root exists.

For the cone computations the full localization at a triple point
z in Sigma_3 = {x1 = xi0 = xi1 = 0} (near xi_n = 1) is the cubic

    q(dx1, dxi0, dxi1) = dxi0^3 - (dxi1^2 + dx1^2) dxi0 - b0 dx1^3,

hyperbolic in the dxi0 direction for |b0| < 2/(3 sqrt 3).  The
hyperbolicity cone G_z is the connected component of N = (0; 1, 0, ..., 0)
in {q != 0} (a product of the 3-d cone with every unconstrained tangent
direction), and the propagation cone is its symplectic dual
C_z = {X : sigma(X, Y) <= 0 for all Y in G_z}, with

    sigma((dx, dxi), (dy, deta)) = <dx, deta> - <dxi, dy>,

the sign convention under which the time-reversal direction
dv = (-1, 0, ..., 0; 0) pairs to sigma(dv, Y) = -deta_0 <= 0 on G_z.
Certificates here are sampled, not symbolic: they record margins and
sample counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (DomainViolation, OriginSingular, PreconditionViolation,
                     SampleExhausted)

B0_LIMIT = 2.0 / (3.0 * math.sqrt(3.0))

#: spatial dimension n used for the cone sampling (coordinates
#: x0, x1, x'', xn with one x'' direction); tangent vectors have
#: 2*(N_DIM + 1) components ordered (dx0, dx1, dx2, dx3; dxi0..dxi3)
N_DIM = 3


def discriminant(x: float, xi: float, b: float) -> float:
    """108 ((x^2 + xi^2)^3 - b^2 x^6); nonnegative iff all roots real."""
    return 108.0 * ((x * x + xi * xi) ** 3 - b * b * x ** 6)


def cubic_roots(x: float, xi: float, b: float):
    """Real roots of the reduced cubic, sorted descending, plus the label
    of the branch vanishing on x = 0.

    Returns (roots, vanishing_root) where roots is a descending triple and
    vanishing_root is the m = 2 trigonometric branch.
    """
    if not 0.0 < abs(b) < 1.0:
        raise PreconditionViolation("need 0 < |b| < 1")
    r2 = x * x + xi * xi
    if r2 == 0.0:
        raise OriginSingular("root formula undefined at (x, xi) = (0, 0)")
    c = b * x ** 3 / r2 ** 1.5
    c = min(1.0, max(-1.0, c))
    phi = math.acos(c)
    s = 2.0 * math.sqrt(r2)
    branch = [s * math.cos((phi + 2.0 * math.pi * m) / 3.0)
              for m in range(3)]
    vanishing = branch[2]
    return tuple(sorted(branch, reverse=True)), vanishing


def vanishing_root(x: float, xi: float, b: float) -> float:
    return cubic_roots(x, xi, b)[1]


def nonsmoothness_witness(b: float, eps_list=None, phi_list=None) -> dict:
    """Directional limits of the vanishing branch along punctured rays.

    Rows give tau(eps cos phi, eps sin phi)/eps; the eps -> 0 limit is
    -(2/3) b cos^3(phi), a 1-homogeneous profile that is not linear in the
    direction.  The returned certificate quantifies that: it is the gap
    between the measured limit at phi = pi/3 and the value a linear
    function matching phi = 0 and phi = pi/2 would take,

        | L(pi/3) - L(0) cos(pi/3) - L(pi/2) sin(pi/3) | = |b|/4 + O(b^3).

    (Axis-only probes such as L(0) + L(pi) - 2 L(pi/2) vanish identically
    for this odd profile and certify nothing.)
    """
    if eps_list is None:
        eps_list = (1e-2, 1e-3, 1e-4, 1e-5)
    if phi_list is None:
        phi_list = tuple(np.linspace(0.0, math.pi, 7))
    phis = [float(p) for p in phi_list]
    for probe in (0.0, math.pi / 3.0, math.pi / 2.0):
        if not any(abs(p - probe) < 1e-12 for p in phis):
            phis.append(probe)
    phis.sort()

    table = {}
    for phi in phis:
        row = []
        for eps in eps_list:
            row.append(vanishing_root(eps * math.cos(phi),
                                      eps * math.sin(phi), b) / eps)
        table[phi] = {"scaled": row,
                      "limit_formula": -(2.0 / 3.0) * b * math.cos(phi) ** 3}

    def measured(phi):
        return table[min(table, key=lambda q: abs(q - phi))]["scaled"][-1]

    l0 = measured(0.0)
    l60 = measured(math.pi / 3.0)
    l90 = measured(math.pi / 2.0)
    cert = abs(l60 - (l0 * math.cos(math.pi / 3.0)
                      + l90 * math.sin(math.pi / 3.0)))
    return {"b": b, "eps_list": list(eps_list), "table": table,
            "nonlinearity_certificate": cert,
            "certificate_threshold": 0.1 * abs(b)}


def g_series(u: float, n_terms: int) -> float:
    """Partial sum of sum_k (2k)! u^(2k+1) / (4^k (k!)^2 (2k+1)), |u| < 1.

    The full series is arcsin(u); arccos(v) = pi/2 - arcsin(v) links it to
    the root formula's angle.
    """
    if not abs(u) < 1.0:
        raise DomainViolation(f"|u| = {abs(u)} outside the open unit disk")
    if n_terms < 0:
        raise PreconditionViolation("n_terms must be >= 0")
    term = u
    total = u
    for k in range(1, n_terms + 1):
        # t_k / t_{k-1} = u^2 (2k-1)^2 / ((2k)(2k+1))
        term *= u * u * (2 * k - 1) ** 2 / ((2 * k) * (2 * k + 1))
        total += term
    return total


def g_series_terms_needed(u: float, tol: float, max_terms: int = 10_000) -> int:
    """Smallest k with |term_k| < tol (term-ratio bound for convergence)."""
    if not abs(u) < 1.0:
        raise DomainViolation(f"|u| = {abs(u)} outside the open unit disk")
    term = abs(u)
    k = 0
    while term >= tol:
        k += 1
        if k > max_terms:
            raise PreconditionViolation(
                f"series needs more than {max_terms} terms at u = {u}")
        term *= u * u * (2 * k - 1) ** 2 / ((2 * k) * (2 * k + 1))
    return k


def localization(v: np.ndarray, b0: float) -> np.ndarray:
    """q on rows v = (dx1, dxi0, dxi1)."""
    v = np.atleast_2d(v)
    x1, t, xi1 = v[:, 0], v[:, 1], v[:, 2]
    return t ** 3 - (xi1 ** 2 + x1 ** 2) * t - b0 * x1 ** 3


def symplectic_form(X: np.ndarray, Y: np.ndarray) -> float:
    """sigma(X, Y) = <dx_X, deta_Y> - <dxi_X, dy_Y> on 2(n+1)-vectors."""
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    if X.shape != Y.shape or X.ndim != 1 or X.size % 2 != 0:
        raise PreconditionViolation("X, Y must be equal even-length vectors")
    m = X.size // 2
    return float(X[:m] @ Y[m:] - X[m:] @ Y[:m])


N_CODIRECTION = np.zeros(2 * (N_DIM + 1))
N_CODIRECTION[N_DIM + 1] = 1.0  # dxi0 = 1

DV_TIME_REVERSAL = np.zeros(2 * (N_DIM + 1))
DV_TIME_REVERSAL[0] = -1.0  # dx0 = -1


def in_tangent_sigma3(X: np.ndarray, tol: float = 0.0) -> bool:
    """Tangency to Sigma_3 = {x1 = xi0 = xi1 = 0}: those three components
    of the displacement vanish."""
    return (abs(X[1]) <= tol and abs(X[N_DIM + 1]) <= tol
            and abs(X[N_DIM + 2]) <= tol)


def _reduced(X: np.ndarray) -> np.ndarray:
    """(dx1, dxi0, dxi1) block of a full tangent vector."""
    return np.array([X[1], X[N_DIM + 1], X[N_DIM + 2]])


def gamma_membership(v3: np.ndarray, b0: float,
                     n_interp: int = 64) -> tuple:
    """(is_member, margin) for the reduced direction v3 = (dx1, dxi0, dxi1).

    Membership in the component of N means q never vanishes on the segment
    to N3 = (0, 1, 0).  q(N3) = 1 > 0 and q is a real polynomial, so the
    decisive sampled criterion is that q stays positive: a transversal
    crossing flips the sign between interpolation points even when no
    sample lands near the zero.  The margin is the signed minimum of q
    along the segment normalized by the segment scale.
    """
    n3 = np.array([0.0, 1.0, 0.0])
    ts = np.linspace(0.0, 1.0, n_interp)
    pts = (1.0 - ts)[:, None] * np.asarray(v3, dtype=float)[None, :] \
        + ts[:, None] * n3[None, :]
    q = localization(pts, b0)
    scale = np.max(np.linalg.norm(pts, axis=1)) ** 3 + 1e-300
    margin = float(np.min(q) / scale)
    return bool(margin > 1e-9), margin


@dataclass
class ConeReport:
    """Sampled certificates for the propagation-cone geometry."""

    b0: float
    seed: int
    n_samples: int
    n_gamma: int
    gamma_margin: float
    dv_pairing_max: float
    dv_in_cone: bool
    dv_in_tangent: bool
    off_tangent_vector: list
    off_tangent_pairing_max: float
    off_tangent_component: float
    n_candidates_tried: int
    extras: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "b0": self.b0, "seed": self.seed,
            "n_samples": self.n_samples, "n_gamma": self.n_gamma,
            "gamma_margin": self.gamma_margin,
            "dv_pairing_max": self.dv_pairing_max,
            "dv_in_cone": self.dv_in_cone,
            "dv_in_tangent": self.dv_in_tangent,
            "off_tangent_vector": self.off_tangent_vector,
            "off_tangent_pairing_max": self.off_tangent_pairing_max,
            "off_tangent_component": self.off_tangent_component,
            "n_candidates_tried": self.n_candidates_tried,
            "extras": self.extras,
        }


def cone_analysis(b0: float, n_samples: int = 10_000,
                  seed: int = 20250810, n_candidates: int = 4000) -> ConeReport:
    """Sampled certificate that C_z meets T_z Sigma_3 without lying in it.

    (a) draws hyperbolicity-cone samples by segment connectivity to N;
    (b) certifies sigma(dv, Y) = -deta_0 <= 0 on all of them for the
        tangent direction dv = (-1, 0, ..., 0; 0);
    (c) searches for a dual vector with nonzero (dx1, dxi1) part, i.e. a
        propagation-cone candidate transversal to Sigma_3.
    """
    if not 0.0 < abs(b0) < B0_LIMIT:
        raise PreconditionViolation("need 0 < |b0| < 2/(3 sqrt 3)")
    rng = np.random.default_rng(seed)

    full = rng.standard_normal((n_samples, 2 * (N_DIM + 1)))
    accepted = []
    margins = []
    for row in full:
        ok, margin = gamma_membership(_reduced(row), b0)
        if ok:
            accepted.append(row)
            margins.append(margin)
    if not accepted:
        raise SampleExhausted("no hyperbolicity-cone samples accepted")
    gamma = np.array(accepted)

    # pairing of Y-samples against reduced X = (dx0, dx1, -dxi1):
    # sigma(X, Y) = dx0*deta0 + dx1*deta1 - dxi1*dy1  (all other X parts 0)
    w3 = np.column_stack([gamma[:, N_DIM + 1],   # deta0
                          gamma[:, N_DIM + 2],   # deta1
                          gamma[:, 1]])          # dy1

    sig_dv = np.array([symplectic_form(DV_TIME_REVERSAL, y) for y in
                       gamma[:min(len(gamma), 512)]])
    dv_max_exact = float(np.max(sig_dv))
    dv_max = float(np.max(-gamma[:, N_DIM + 1]))  # -deta0 over all samples
    dv_ok = dv_max <= 0.0

    best = None
    tried = 0
    for _ in range(n_candidates):
        tried += 1
        u3 = np.array([-1.0, 0.0, 0.0]) + 0.35 * rng.standard_normal(3)
        pair = w3 @ u3
        m = float(np.max(pair))
        if m <= 0.0:
            off = math.hypot(u3[1], u3[2])
            if best is None or off > best[0]:
                best = (off, u3, m)
    if best is None or best[0] < 1e-3:
        raise SampleExhausted(
            f"no off-tangent dual candidate found in {tried} draws; "
            f"increase n_candidates")
    off, u3, pair_max = best
    X = np.zeros(2 * (N_DIM + 1))
    X[0] = u3[0]          # dx0
    X[1] = u3[1]          # dx1
    X[N_DIM + 2] = -u3[2]  # dxi1 (reduced coordinate was -dxi1)

    return ConeReport(
        b0=b0, seed=seed, n_samples=n_samples, n_gamma=len(gamma),
        gamma_margin=float(np.min(margins)),
        dv_pairing_max=dv_max,
        dv_in_cone=dv_ok,
        dv_in_tangent=in_tangent_sigma3(DV_TIME_REVERSAL),
        off_tangent_vector=X.tolist(),
        off_tangent_pairing_max=pair_max,
        off_tangent_component=off,
        n_candidates_tried=tried,
        extras={"dv_pairing_max_fullform": dv_max_exact,
                "p_z_at_N": float(localization(_reduced(N_CODIRECTION),
                                               b0)[0])})
