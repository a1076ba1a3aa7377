# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled batched kernels; same contracts as ``_pykernels``."""
import numpy as np

from libc.math cimport fabs, sqrt

NAME = "compiled"


cdef inline void _qmul(double p1, double p2, double p3, double p4,
                       double q1, double q2, double q3, double q4,
                       double* out) noexcept nogil:
    out[0] = p1 * q1 - p2 * q2 + p3 * q3 + p4 * q4
    out[1] = p1 * q2 + q1 * p2 + (p4 * q3 - p3 * q4)
    out[2] = p1 * q3 + q1 * p3 + (p4 * q2 - p2 * q4)
    out[3] = p1 * q4 + q1 * p4 + (p2 * q3 - p3 * q2)


cdef inline double _metric(double t0, double a0, double b0,
                           double t1, double a1, double b1) noexcept nogil:
    return -t0 * t1 + a0 * a1 + b0 * b1


def qmul(const double[:, ::1] p, const double[:, ::1] q):
    cdef Py_ssize_t n = p.shape[0], i
    out = np.empty((n, 4))
    cdef double[:, ::1] o = out
    with nogil:
        for i in range(n):
            _qmul(p[i, 0], p[i, 1], p[i, 2], p[i, 3],
                  q[i, 0], q[i, 1], q[i, 2], q[i, 3], &o[i, 0])
    return out


def quadratic_forms(const double[:, ::1] q):
    cdef Py_ssize_t n = q.shape[0], i
    out = np.empty(n)
    cdef double[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = q[i, 0] * q[i, 0] + q[i, 1] * q[i, 1] - q[i, 2] * q[i, 2] - q[i, 3] * q[i, 3]
    return out


def sandwich_matrices(const double[:, ::1] q):
    cdef Py_ssize_t n = q.shape[0], i, j
    out = np.empty((n, 3, 3))
    cdef double[:, :, ::1] o = out
    cdef double e[4]
    cdef double left[4]
    cdef double r[4]
    cdef double ip, w, x, y, z
    with nogil:
        for i in range(n):
            w = q[i, 0]; x = q[i, 1]; y = q[i, 2]; z = q[i, 3]
            ip = w * w + x * x - y * y - z * z
            for j in range(3):
                e[0] = 0.0; e[1] = 0.0; e[2] = 0.0; e[3] = 0.0
                e[j + 1] = 1.0
                _qmul(w, x, y, z, e[0], e[1], e[2], e[3], left)
                _qmul(left[0], left[1], left[2], left[3],
                      w / ip, -x / ip, -y / ip, -z / ip, r)
                o[i, 0, j] = r[1]
                o[i, 1, j] = r[2]
                o[i, 2, j] = r[3]
    return out


def matvec(const double[:, :, ::1] m, const double[:, ::1] x):
    cdef Py_ssize_t n = m.shape[0], i, k
    out = np.empty((n, 3))
    cdef double[:, ::1] o = out
    with nogil:
        for i in range(n):
            for k in range(3):
                o[i, k] = m[i, k, 0] * x[i, 0] + m[i, k, 1] * x[i, 1] + m[i, k, 2] * x[i, 2]
    return out


cdef inline void _cross(double ut, double ua, double ub,
                        double vt, double va, double vb, double* out) noexcept nogil:
    out[0] = ub * va - ua * vb
    out[1] = ub * vt - ut * vb
    out[2] = ut * va - ua * vt


def cross(const double[:, ::1] u, const double[:, ::1] v):
    cdef Py_ssize_t n = u.shape[0], i
    out = np.empty((n, 3))
    cdef double[:, ::1] o = out
    with nogil:
        for i in range(n):
            _cross(u[i, 0], u[i, 1], u[i, 2], v[i, 0], v[i, 1], v[i, 2], &o[i, 0])
    return out


def lorentz_defects(const double[:, :, ::1] m):
    cdef Py_ssize_t n = m.shape[0], i, a, b
    cdef double eta[3]
    eta[0] = -1.0; eta[1] = 1.0; eta[2] = 1.0
    out = np.empty(n)
    cdef double[::1] o = out
    cdef double g, dev, det
    with nogil:
        for i in range(n):
            dev = 0.0
            for a in range(3):
                for b in range(3):
                    g = (eta[0] * m[i, 0, a] * m[i, 0, b]
                         + eta[1] * m[i, 1, a] * m[i, 1, b]
                         + eta[2] * m[i, 2, a] * m[i, 2, b])
                    if a == b:
                        g -= eta[a]
                    if fabs(g) > dev:
                        dev = fabs(g)
            det = (m[i, 0, 0] * (m[i, 1, 1] * m[i, 2, 2] - m[i, 1, 2] * m[i, 2, 1])
                   - m[i, 0, 1] * (m[i, 1, 0] * m[i, 2, 2] - m[i, 1, 2] * m[i, 2, 0])
                   + m[i, 0, 2] * (m[i, 1, 0] * m[i, 2, 1] - m[i, 1, 1] * m[i, 2, 0]))
            if fabs(det - 1.0) > dev:
                dev = fabs(det - 1.0)
            o[i] = dev
    return out


def slope_terms(const double[:, ::1] x, const double[:, ::1] xu, const double[:, ::1] xv):
    cdef Py_ssize_t n = x.shape[0], i
    cos_arr = np.empty(n)
    ratio_arr = np.empty(n)
    ortho_arr = np.empty(n)
    cdef double[::1] co = cos_arr
    cdef double[::1] ra = ratio_arr
    cdef double[::1] orth = ortho_arr
    cdef double nv[3]
    cdef double nn, xn, eu, ev, ne, o1, o2
    cdef double nan = float("nan")
    with nogil:
        for i in range(n):
            _cross(xu[i, 0], xu[i, 1], xu[i, 2], xv[i, 0], xv[i, 1], xv[i, 2], nv)
            nn = sqrt(fabs(_metric(nv[0], nv[1], nv[2], nv[0], nv[1], nv[2])))
            xn = sqrt(fabs(_metric(x[i, 0], x[i, 1], x[i, 2], x[i, 0], x[i, 1], x[i, 2])))
            eu = sqrt(xu[i, 0] * xu[i, 0] + xu[i, 1] * xu[i, 1] + xu[i, 2] * xu[i, 2])
            ev = sqrt(xv[i, 0] * xv[i, 0] + xv[i, 1] * xv[i, 1] + xv[i, 2] * xv[i, 2])
            ne = sqrt(nv[0] * nv[0] + nv[1] * nv[1] + nv[2] * nv[2])
            if xn * nn > 0.0:
                co[i] = _metric(x[i, 0], x[i, 1], x[i, 2], nv[0], nv[1], nv[2]) / (xn * nn)
            else:
                co[i] = nan
            ra[i] = nn / (eu * ev) if eu * ev > 0.0 else nan
            if ne * eu * ev > 0.0:
                o1 = fabs(_metric(nv[0], nv[1], nv[2], xu[i, 0], xu[i, 1], xu[i, 2])) / (ne * eu)
                o2 = fabs(_metric(nv[0], nv[1], nv[2], xv[i, 0], xv[i, 1], xv[i, 2])) / (ne * ev)
                orth[i] = o1 if o1 > o2 else o2
            else:
                orth[i] = nan
    return cos_arr, ratio_arr, ortho_arr
