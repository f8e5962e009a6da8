# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integrator kernel.

Cython translation of ``_kernel_py.integrate_polyline`` (see that module for
the algorithm description).  The Butcher tableau is copied from ``_tableau``
into static C arrays at import so there is a single source of constants.
"""

import cmath
import math

from . import _tableau as tab

from libc.math cimport sqrt, log2, floor, ldexp, fmax, fmin

cdef extern from "complex.h" nogil:
    double cabs(double complex)

DEF NST = 12

cdef double A_[12][12]
cdef double B_[12]
cdef double C_[12]
cdef double E3_[13]
cdef double E5_[13]

cdef double ERROR_EXPONENT = tab.ERROR_EXPONENT

cdef double _SAFETY = 0.9
cdef double _MIN_FACTOR = 0.2
cdef double _MAX_FACTOR = 10.0
cdef double _RESCALE_HI = 2.0 ** 60
cdef double _RESCALE_LO = 2.0 ** -60

OK = 0
STEP_UNDERFLOW = 1
NON_FINITE = 2

BACKEND_NAME = "compiled"


def _load_tableau():
    if tab.N_STAGES != NST:
        raise ImportError("tableau stage count mismatch")
    for i in range(NST):
        C_[i] = tab.C[i]
        B_[i] = tab.B[i]
        for j in range(i):
            A_[i][j] = tab.A[i][j]
    for i in range(NST + 1):
        E3_[i] = tab.E3[i]
        E5_[i] = tab.E5[i]


_load_tableau()


def integrate_polyline(zeta, mu, verts, w0, wp0, exp2_0,
                       rtol, atol, max_step, min_step, collect_steps):
    """Same contract as ``_kernel_py.integrate_polyline``."""
    cdef double complex zeta_c = zeta
    cdef double complex mu_c = mu
    cdef double complex w = w0
    cdef double complex wp = wp0
    cdef long exp2 = exp2_0
    cdef double rtol_c = rtol
    cdef double atol_c = atol
    cdef double max_step_c = max_step
    cdef double min_step_c = min_step
    cdef bint collect = bool(collect_steps)

    cdef double complex kw[13]
    cdef double complex kwp[13]
    cdef double complex a, d, y, y_new, sw, swp, yw, ywp
    cdef double complex w_new, wp_new, e5w, e5wp, e3w, e3wp
    cdef double seg_len, max_h, min_h, h, t, t_new, h_y
    cdef double sc_w, sc_wp, n5, n3, err_norm, factor, m, fac, qa, s_arc
    cdef double e
    cdef long nsteps = 0, nrej = 0, nfev = 0, shift
    cdef int status = 0
    cdef bint rejected, clamped
    cdef Py_ssize_t iv, i, j, nv

    vlist = [complex(v) for v in verts]
    nv = len(vlist)
    y_fail = None

    samples = [(0.0, vlist[0], complex(w), complex(wp), 0.0, exp2)]
    s_arc = 0.0
    h_y = 0.0

    for iv in range(nv - 1):
        if status != 0:
            break
        a = vlist[iv]
        d = <double complex> vlist[iv + 1] - a
        seg_len = cabs(d)
        if seg_len == 0.0:
            continue
        max_h = max_step_c / seg_len
        min_h = min_step_c / seg_len

        kw[0] = d * wp
        kwp[0] = d * (a * (a * a + zeta_c) + mu_c) * w
        nfev += 1

        if h_y > 0.0:
            h = h_y / seg_len
        else:
            qa = cabs(a * (a * a + zeta_c) + mu_c)
            h = 0.25 / (seg_len * (1.0 + sqrt(qa)))
        h = fmin(fmin(h, max_h), 1.0)

        t = 0.0
        rejected = False
        while t < 1.0:
            clamped = False
            if h > 1.0 - t:
                h = 1.0 - t
                clamped = True
            if h < min_h and not clamped:
                status = 1
                y_fail = complex(a + t * d)
                break

            for i in range(1, NST):
                sw = A_[i][0] * kw[0]
                swp = A_[i][0] * kwp[0]
                for j in range(1, i):
                    sw += A_[i][j] * kw[j]
                    swp += A_[i][j] * kwp[j]
                yw = w + h * sw
                ywp = wp + h * swp
                y = a + (t + C_[i] * h) * d
                kw[i] = d * ywp
                kwp[i] = d * (y * (y * y + zeta_c) + mu_c) * yw
            nfev += NST - 1

            sw = B_[0] * kw[0]
            swp = B_[0] * kwp[0]
            for j in range(1, NST):
                sw += B_[j] * kw[j]
                swp += B_[j] * kwp[j]
            w_new = w + h * sw
            wp_new = wp + h * swp

            t_new = 1.0 if clamped else t + h
            y_new = a + t_new * d
            kw[NST] = d * wp_new
            kwp[NST] = d * (y_new * (y_new * y_new + zeta_c) + mu_c) * w_new
            nfev += 1

            e5w = E5_[0] * kw[0]
            e5wp = E5_[0] * kwp[0]
            e3w = E3_[0] * kw[0]
            e3wp = E3_[0] * kwp[0]
            for j in range(1, NST + 1):
                e5w += E5_[j] * kw[j]
                e5wp += E5_[j] * kwp[j]
                e3w += E3_[j] * kw[j]
                e3wp += E3_[j] * kwp[j]

            sc_w = atol_c + rtol_c * fmax(cabs(w), cabs(w_new))
            sc_wp = atol_c + rtol_c * fmax(cabs(wp), cabs(wp_new))
            e = cabs(e5w) / sc_w
            n5 = e * e
            e = cabs(e5wp) / sc_wp
            n5 += e * e
            e = cabs(e3w) / sc_w
            n3 = e * e
            e = cabs(e3wp) / sc_wp
            n3 += e * e
            if n5 == 0.0 and n3 == 0.0:
                err_norm = 0.0
            else:
                err_norm = h * n5 / sqrt((n5 + 0.01 * n3) * 2.0)

            if err_norm < 1.0:
                nsteps += 1
                if err_norm == 0.0:
                    factor = _MAX_FACTOR
                else:
                    factor = fmin(_MAX_FACTOR,
                                  fmax(1.0, _SAFETY * err_norm ** ERROR_EXPONENT))
                if rejected:
                    factor = fmin(1.0, factor)
                rejected = False

                t = t_new
                w = w_new
                wp = wp_new
                if not (cmath.isfinite(complex(w)) and cmath.isfinite(complex(wp))):
                    status = 2
                    y_fail = complex(y_new)
                    break

                m = fmax(cabs(w), cabs(wp))
                if m > _RESCALE_HI or (0.0 < m < _RESCALE_LO):
                    shift = <long> floor(log2(m))
                    fac = ldexp(1.0, -<int> shift)
                    w *= fac
                    wp *= fac
                    kw[NST] *= fac
                    kwp[NST] *= fac
                    exp2 += shift

                if not clamped:
                    h_y = h * seg_len
                if collect or t >= 1.0:
                    samples.append((s_arc + t * seg_len, complex(a + t * d),
                                    complex(w), complex(wp),
                                    err_norm * rtol_c, exp2))
                kw[0] = kw[NST]
                kwp[0] = kwp[NST]
                h = fmin(h * factor, max_h)
            else:
                nrej += 1
                rejected = True
                h *= fmax(_MIN_FACTOR, _SAFETY * err_norm ** ERROR_EXPONENT)

        s_arc += seg_len

    stats = {"nsteps": nsteps, "nrejected": nrej, "nfev": nfev,
             "status": status, "y_fail": y_fail}
    return samples, (complex(w), complex(wp), exp2), stats
