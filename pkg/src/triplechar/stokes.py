"""Connection (Stokes) coefficients of the rotated solution family.

Member k of the family is a combination of the next two,

    w_k = C_k(zeta) w_{k+1} + Ct_k(zeta) w_{k+2}   (indices mod 5),

and the coefficients fall out of Wronskian ratios, the Wronskian of two
solutions of w'' = q w being y-independent:

    C_k  = W[w_k, w_{k+2}] / W[w_{k+1}, w_{k+2}],
    Ct_k = W[w_k, w_{k+1}] / W[w_{k+2}, w_{k+1}].

Verified identities (all residuals should vanish to combined numerical
error):

  * Ct_k = -omega for every k and zeta;
  * C_k(zeta) = C_0(omega^-2k zeta);
  * C_0(zeta) + omega^2 C_0(omega zeta) C_0(omega^4 zeta) - omega^3 = 0;
  * the five transfer matrices S_k = [[C_k, 1], [-omega, 0]] multiply to
    the identity;
  * omega^(3/4) C_4(conj(zeta)) + conj(omega^(3/4) C_4(zeta)) = 0, which
    carries the zero-set symmetry C_0(zeta) = 0 iff C_0(conj(omega zeta)) = 0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateWronskian
from .pathint import IntegratorConfig, ODEState, wronskian
from .sibuya import OMEGA, CanonicalSolution, evaluate, omega_pow

#: omega^(3/4) on the principal branch, exp(i * 3*pi/10)
OMEGA_3_4 = cmath.exp(0.3j * math.pi)

_W_DEGENERATE = 1e-6


@dataclass(frozen=True)
class StokesTable:
    """C_k and Ct_k at one zeta, with a propagated error estimate."""

    zeta: complex
    C: tuple
    C_tilde: tuple
    err: float

    def as_dict(self) -> dict:
        return {
            "zeta": [self.zeta.real, self.zeta.imag],
            "C": [[c.real, c.imag] for c in self.C],
            "C_tilde": [[c.real, c.imag] for c in self.C_tilde],
            "err": self.err,
        }


def family_states(zeta: complex, y_eval: complex,
                  cfg: IntegratorConfig) -> list:
    """All five family members (w, w') at ``y_eval``."""
    return [evaluate(CanonicalSolution(zeta=zeta, k=k), y_eval, cfg)
            for k in range(5)]


def _coeffs(states: list) -> tuple:
    C = []
    Ct = []
    for k in range(5):
        a = states[k]
        b = states[(k + 1) % 5]
        c = states[(k + 2) % 5]
        w_bc = wronskian(b, c)
        if abs(w_bc) < _W_DEGENERATE:
            raise DegenerateWronskian(
                f"|W[k+1,k+2]| = {abs(w_bc):.3e} at k={k}")
        C.append(wronskian(a, c) / w_bc)
        Ct.append(wronskian(a, b) / -w_bc)
    return tuple(C), tuple(Ct)


def stokes_coefficients(zeta: complex, y_eval: complex = 0.0,
                        cfg: IntegratorConfig = IntegratorConfig(),
                        err_eval: bool = True) -> StokesTable:
    """Full Stokes table at ``zeta``.

    The default evaluation point y = 0 keeps paths short; the error bar is
    the maximal coefficient shift when everything is recomputed at a second
    point (Wronskians of exact solutions are constants in y, so the shift
    is purely numerical).
    """
    zeta = complex(zeta)
    states = family_states(zeta, y_eval, cfg)
    C, Ct = _coeffs(states)
    err = 0.0
    if err_eval:
        y2 = 1.0 if y_eval != 1.0 else 0.0
        C2, Ct2 = _coeffs(family_states(zeta, y2, cfg))
        err = max(max(abs(a - b) for a, b in zip(C, C2)),
                  max(abs(a - b) for a, b in zip(Ct, Ct2)))
    return StokesTable(zeta=zeta, C=C, C_tilde=Ct, err=err)


def stokes_c0(zeta: complex, cfg: IntegratorConfig = IntegratorConfig(),
              y_eval: complex = 0.0, cache: dict | None = None) -> complex:
    """C_0(zeta) alone (three solution evaluations instead of ten).

    ``cache`` maps a rounded zeta key to the computed value; sweeps whose
    rotated arguments revisit grid points get large savings from sharing
    one dict.
    """
    zeta = complex(zeta)
    if cache is not None:
        key = (round(zeta.real, 13), round(zeta.imag, 13))
        hit = cache.get(key)
        if hit is not None:
            return hit
    states = [evaluate(CanonicalSolution(zeta=zeta, k=k), y_eval, cfg)
              for k in range(3)]
    w12 = wronskian(states[1], states[2])
    if abs(w12) < _W_DEGENERATE:
        raise DegenerateWronskian(f"|W[1,2]| = {abs(w12):.3e}")
    val = wronskian(states[0], states[2]) / w12
    if cache is not None:
        cache[key] = val
    return val


def verify_cyclic_identity(zeta: complex,
                           cfg: IntegratorConfig = IntegratorConfig(),
                           cache: dict | None = None) -> float:
    """|C_0(zeta) + omega^2 C_0(omega zeta) C_0(omega^4 zeta) - omega^3|."""
    zeta = complex(zeta)
    a = stokes_c0(zeta, cfg, cache=cache)
    b = stokes_c0(OMEGA * zeta, cfg, cache=cache)
    c = stokes_c0(omega_pow(4) * zeta, cfg, cache=cache)
    return abs(a + omega_pow(2) * b * c - omega_pow(3))


def verify_matrix_product(zeta: complex,
                          cfg: IntegratorConfig = IntegratorConfig(),
                          table: StokesTable | None = None) -> float:
    """Max-norm deviation of S_4 S_3 S_2 S_1 S_0 from the 2x2 identity."""
    if table is None:
        table = stokes_coefficients(zeta, cfg=cfg, err_eval=False)
    prod = np.eye(2, dtype=complex)
    for k in range(4, -1, -1):
        s_k = np.array([[table.C[k], 1.0], [-OMEGA, 0.0]], dtype=complex)
        prod = prod @ s_k
    return float(np.max(np.abs(prod - np.eye(2))))


def verify_conjugation_symmetry(zeta: complex,
                                cfg: IntegratorConfig = IntegratorConfig(),
                                cache: dict | None = None) -> float:
    """Residual of the functional relation behind the zero-set symmetry.

    C_4(zeta) = C_0(omega^2 zeta); the relation states that
    omega^(3/4) C_4(conj(zeta)) is minus the conjugate of
    omega^(3/4) C_4(zeta).
    """
    zeta = complex(zeta)
    c4 = stokes_c0(omega_pow(2) * zeta, cfg, cache=cache)
    c4_conj_arg = stokes_c0(omega_pow(2) * zeta.conjugate(), cfg, cache=cache)
    return abs(OMEGA_3_4 * c4_conj_arg + (OMEGA_3_4 * c4).conjugate())


def c0_derivative(zeta: complex,
                  cfg: IntegratorConfig = IntegratorConfig(),
                  step: float | None = None,
                  cache: dict | None = None) -> complex:
    """Central-difference dC_0/dzeta (C_0 is entire, differencing is benign)."""
    zeta = complex(zeta)
    h = step if step is not None else 1e-5 * (1.0 + abs(zeta))
    return (stokes_c0(zeta + h, cfg, cache=cache)
            - stokes_c0(zeta - h, cfg, cache=cache)) / (2.0 * h)
