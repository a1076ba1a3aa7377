"""Pure numpy implementation of the batched kernels.

Reference backend; ``_ckernels.pyx`` mirrors every function here.
All inputs are float64 arrays with points along axis 0.
"""
import numpy as np

NAME = "python"


def qmul(p, q):
    p1, p2, p3, p4 = p[:, 0], p[:, 1], p[:, 2], p[:, 3]
    q1, q2, q3, q4 = q[:, 0], q[:, 1], q[:, 2], q[:, 3]
    out = np.empty_like(p)
    out[:, 0] = p1 * q1 - p2 * q2 + p3 * q3 + p4 * q4
    out[:, 1] = p1 * q2 + q1 * p2 + (p4 * q3 - p3 * q4)
    out[:, 2] = p1 * q3 + q1 * p3 + (p4 * q2 - p2 * q4)
    out[:, 3] = p1 * q4 + q1 * p4 + (p2 * q3 - p3 * q2)
    return out


def quadratic_forms(q):
    return q[:, 0] ** 2 + q[:, 1] ** 2 - q[:, 2] ** 2 - q[:, 3] ** 2


def sandwich_matrices(q):
    """Columns are ``q e_j q^-1`` for the three basis vectors."""
    n = q.shape[0]
    ip = quadratic_forms(q)
    qinv = q * np.array([1.0, -1.0, -1.0, -1.0])
    qinv /= ip[:, None]
    out = np.empty((n, 3, 3))
    for j in range(3):
        e = np.zeros((n, 4))
        e[:, j + 1] = 1.0
        r = qmul(qmul(q, e), qinv)
        out[:, :, j] = r[:, 1:]
    return out


def matvec(m, x):
    return np.einsum("nij,nj->ni", m, x)


def cross(u, v):
    out = np.empty_like(u)
    out[:, 0] = u[:, 2] * v[:, 1] - u[:, 1] * v[:, 2]
    out[:, 1] = u[:, 2] * v[:, 0] - u[:, 0] * v[:, 2]
    out[:, 2] = u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0]
    return out


def _metric(x, y):
    return -x[:, 0] * y[:, 0] + x[:, 1] * y[:, 1] + x[:, 2] * y[:, 2]


def lorentz_defects(m):
    eta = np.array([-1.0, 1.0, 1.0])
    g = np.einsum("nki,k,nkj->nij", m, eta, m)
    g -= np.diag(eta)
    metric_dev = np.abs(g).reshape(len(m), 9).max(axis=1)
    det = np.linalg.det(m)
    return np.maximum(metric_dev, np.abs(det - 1.0))


def slope_terms(x, xu, xv):
    """Per point: slope cosine, normal nondegeneracy ratio, orthogonality defect.

    The normal is ``xu ^ xv``.  The ratio is ``|N|_L / (|xu|_E |xv|_E)`` and
    the orthogonality defect is ``max |<N, xu>|/(|N| |xu|), |<N, xv>|/(|N| |xv|)``
    with Euclidean norms ``|.|``; it is 0 up to rounding by construction.
    """
    nvec = cross(xu, xv)
    nnorm = np.sqrt(np.abs(_metric(nvec, nvec)))
    xnorm = np.sqrt(np.abs(_metric(x, x)))
    eu = np.linalg.norm(xu, axis=1)
    ev = np.linalg.norm(xv, axis=1)
    ne = np.linalg.norm(nvec, axis=1)
    nan = np.nan
    with np.errstate(divide="ignore", invalid="ignore"):
        cosine = np.where(xnorm * nnorm > 0, _metric(x, nvec) / (xnorm * nnorm), nan)
        ratio = np.where(eu * ev > 0, nnorm / (eu * ev), nan)
        ortho = np.where(
            ne * eu * ev > 0,
            np.maximum(
                np.abs(_metric(nvec, xu)) / (ne * eu),
                np.abs(_metric(nvec, xv)) / (ne * ev),
            ),
            nan,
        )
    return cosine, ratio, ortho
