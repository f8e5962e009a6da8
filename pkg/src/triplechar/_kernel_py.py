"""Pure-Python integrator kernel (fallback backend).

Same algorithm as the compiled kernel in ``_kernel_cy``: an adaptive
13-stage Runge-Kutta 8(5,3) pair marching the first-order system
(w, w') of

    w''(y) = (y^3 + zeta*y + mu) * w(y)

along a polyline in the complex y-plane.  The state is kept as a mantissa
pair plus a power-of-two exponent so solutions spanning thousands of
decades stay representable; rescaling by powers of two is exact.

The backend selector ``_backend`` picks this module only when the compiled
extension is unavailable (or explicitly forced); both backends must produce
the same samples up to floating-point associativity.
"""

from __future__ import annotations

import cmath
import math

from . import _tableau as tab

_SAFETY = 0.9
_MIN_FACTOR = 0.2
_MAX_FACTOR = 10.0

# mantissa window: renormalize once max(|w|, |w'|) leaves [2^-60, 2^60]
_RESCALE_HI = 2.0 ** 60
_RESCALE_LO = 2.0 ** -60

# status codes shared with the compiled kernel
OK = 0
STEP_UNDERFLOW = 1
NON_FINITE = 2

BACKEND_NAME = "python"


def integrate_polyline(zeta, mu, verts, w0, wp0, exp2_0,
                       rtol, atol, max_step, min_step, collect_steps):
    """Integrate along ``verts``; returns ``(samples, final, stats)``.

    samples : list of (s_arclength, y, w, wp, err_rel, exp2) tuples at the
              seed point and every accepted step end (vertices only when
              ``collect_steps`` is false).  True values are w * 2**exp2.
    final   : (w, wp, exp2) at the last vertex.
    stats   : dict with nsteps/nrejected/nfev/status and, on failure, the
              y position where the kernel gave up.
    """
    A, B, C, E3, E5 = tab.A, tab.B, tab.C, tab.E3, tab.E5
    nst = tab.N_STAGES
    exponent = tab.ERROR_EXPONENT

    zeta = complex(zeta)
    mu = complex(mu)
    w = complex(w0)
    wp = complex(wp0)
    exp2 = int(exp2_0)
    s_arc = 0.0
    nsteps = nrej = nfev = 0
    status = OK
    y_fail = None

    samples = [(0.0, complex(verts[0]), w, wp, 0.0, exp2)]
    kw = [0j] * (nst + 1)
    kwp = [0j] * (nst + 1)
    h_y = 0.0  # last accepted step in y units, carried across segments

    for iv in range(len(verts) - 1):
        if status != OK:
            break
        a = complex(verts[iv])
        d = complex(verts[iv + 1]) - a
        seg_len = abs(d)
        if seg_len == 0.0:
            continue
        max_h = max_step / seg_len
        min_h = min_step / seg_len

        # derivative at segment start (direction d folds the chain rule in)
        kw[0] = d * wp
        kwp[0] = d * (a * (a * a + zeta) + mu) * w
        nfev += 1

        if h_y > 0.0:
            h = h_y / seg_len
        else:
            qa = abs(a * (a * a + zeta) + mu)
            h = 0.25 / (seg_len * (1.0 + math.sqrt(qa)))
        h = min(h, max_h, 1.0)

        t = 0.0
        rejected = False
        while t < 1.0:
            clamped = False
            if h > 1.0 - t:
                h = 1.0 - t
                clamped = True
            if h < min_h and not clamped:
                status = STEP_UNDERFLOW
                y_fail = a + t * d
                break

            for i in range(1, nst):
                row = A[i]
                sw = row[0] * kw[0]
                swp = row[0] * kwp[0]
                for j in range(1, i):
                    sw += row[j] * kw[j]
                    swp += row[j] * kwp[j]
                yw = w + h * sw
                ywp = wp + h * swp
                y = a + (t + C[i] * h) * d
                kw[i] = d * ywp
                kwp[i] = d * (y * (y * y + zeta) + mu) * yw
            nfev += nst - 1

            sw = B[0] * kw[0]
            swp = B[0] * kwp[0]
            for j in range(1, nst):
                sw += B[j] * kw[j]
                swp += B[j] * kwp[j]
            w_new = w + h * sw
            wp_new = wp + h * swp

            t_new = 1.0 if clamped else t + h
            y_new = a + t_new * d
            kw[nst] = d * wp_new
            kwp[nst] = d * (y_new * (y_new * y_new + zeta) + mu) * w_new
            nfev += 1

            e5w = E5[0] * kw[0]
            e5wp = E5[0] * kwp[0]
            e3w = E3[0] * kw[0]
            e3wp = E3[0] * kwp[0]
            for j in range(1, nst + 1):
                e5w += E5[j] * kw[j]
                e5wp += E5[j] * kwp[j]
                e3w += E3[j] * kw[j]
                e3wp += E3[j] * kwp[j]

            sc_w = atol + rtol * max(abs(w), abs(w_new))
            sc_wp = atol + rtol * max(abs(wp), abs(wp_new))
            n5 = abs(e5w / sc_w) ** 2 + abs(e5wp / sc_wp) ** 2
            n3 = abs(e3w / sc_w) ** 2 + abs(e3wp / sc_wp) ** 2
            if n5 == 0.0 and n3 == 0.0:
                err_norm = 0.0
            else:
                err_norm = h * n5 / math.sqrt((n5 + 0.01 * n3) * 2.0)

            if err_norm < 1.0:
                nsteps += 1
                if err_norm == 0.0:
                    factor = _MAX_FACTOR
                else:
                    factor = min(_MAX_FACTOR,
                                 max(1.0, _SAFETY * err_norm ** exponent))
                if rejected:
                    factor = min(1.0, factor)
                rejected = False

                t = t_new
                w = w_new
                wp = wp_new
                if not (cmath.isfinite(w) and cmath.isfinite(wp)):
                    status = NON_FINITE
                    y_fail = y_new
                    break

                m = max(abs(w), abs(wp))
                if m > _RESCALE_HI or (0.0 < m < _RESCALE_LO):
                    shift = int(math.floor(math.log2(m)))
                    fac = math.ldexp(1.0, -shift)
                    w *= fac
                    wp *= fac
                    kw[nst] *= fac
                    kwp[nst] *= fac
                    exp2 += shift

                if not clamped:
                    h_y = h * seg_len
                if collect_steps or t >= 1.0:
                    samples.append((s_arc + t * seg_len, a + t * d, w, wp,
                                    err_norm * rtol, exp2))
                kw[0] = kw[nst]
                kwp[0] = kwp[nst]
                h = min(h * factor, max_h)
            else:
                nrej += 1
                rejected = True
                h *= max(_MIN_FACTOR, _SAFETY * err_norm ** exponent)

        s_arc += seg_len

    stats = {"nsteps": nsteps, "nrejected": nrej, "nfev": nfev,
             "status": status, "y_fail": y_fail}
    return samples, (w, wp, exp2), stats
