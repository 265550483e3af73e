"""Dense real-symmetric eigensolver.

Householder reduction to tridiagonal form followed by the implicit QL
algorithm with Wilkinson-style shifts (the EISPACK ``tql2`` scheme).
"""
from __future__ import annotations

import math

import numpy as np

_EPS = 2.0 ** -52


def tridiagonalize(a, want_q=True):
    """Reduce symmetric ``a`` to tridiagonal ``T = Q^T a Q``.

    Returns ``(d, e, q)`` with ``d`` the diagonal, ``e[i] = T[i, i+1]``
    (``e[-1] = 0``) and ``q`` orthogonal (``None`` if not requested).
    """
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    q = np.eye(n) if want_q else None
    for k in range(n - 2):
        x = a[k + 1:, k]
        alpha = math.sqrt(float(x @ x))
        if alpha == 0.0:
            continue
        v = x.copy()
        v[0] += math.copysign(alpha, x[0])
        vnorm = math.sqrt(float(v @ v))
        if vnorm == 0.0:
            continue
        v /= vnorm
        # two-sided reflection P a P with P = I - 2 v v^T on the trailing block
        sub = a[k + 1:, k:]
        sub -= 2.0 * np.outer(v, v @ sub)
        sub = a[k:, k + 1:]
        sub -= 2.0 * np.outer(sub @ v, v)
        if want_q:
            blk = q[:, k + 1:]
            blk -= 2.0 * np.outer(blk @ v, v)
    d = np.diag(a).copy()
    e = np.zeros(n)
    if n > 1:
        e[:-1] = 0.5 * (np.diag(a, 1) + np.diag(a, -1))
    return d, e, q


def tridiagonal_ql(d, e, z=None, max_iter=60):
    """Eigenvalues (and rotated ``z``) of a symmetric tridiagonal matrix.

    ``d`` and ``e`` follow :func:`tridiagonalize`. ``z`` is accumulated in
    place when given, so passing the Householder ``q`` yields eigenvectors
    of the original matrix.
    """
    d = np.array(d, dtype=float, copy=True)
    e = np.array(e, dtype=float, copy=True)
    n = d.size
    f = 0.0
    tst1 = 0.0
    for l in range(n):
        tst1 = max(tst1, abs(d[l]) + abs(e[l]))
        m = l
        while m < n - 1 and abs(e[m]) > _EPS * tst1:
            m += 1
        if m > l:
            it = 0
            while True:
                it += 1
                if it > max_iter:
                    raise np.linalg.LinAlgError("QL iteration did not converge")
                g = d[l]
                p = (d[l + 1] - g) / (2.0 * e[l])
                r = math.copysign(math.hypot(p, 1.0), p)
                d[l] = e[l] / (p + r)
                d[l + 1] = e[l] * (p + r)
                dl1 = d[l + 1]
                h = g - d[l]
                d[l + 2:] -= h
                f += h
                p = d[m]
                c = c2 = c3 = 1.0
                el1 = e[l + 1]
                s = s2 = 0.0
                for i in range(m - 1, l - 1, -1):
                    c3 = c2
                    c2 = c
                    s2 = s
                    g = c * e[i]
                    h = c * p
                    r = math.hypot(p, e[i])
                    e[i + 1] = s * r
                    s = e[i] / r
                    c = p / r
                    p = c * d[i] - s * g
                    d[i + 1] = h + s * (c * g + s * d[i])
                    if z is not None:
                        zi = z[:, i].copy()
                        zi1 = z[:, i + 1]
                        z[:, i] = c * zi - s * zi1
                        z[:, i + 1] = s * zi + c * zi1
                p = -s * s2 * c3 * el1 * e[l] / dl1
                e[l] = s * p
                d[l] = c * p
                if abs(e[l]) <= _EPS * tst1:
                    break
        d[l] += f
        e[l] = 0.0
    return d, z


def eigh(a, vectors=True):
    """Eigen-decomposition of a real symmetric matrix, ascending order.

    Returns ``(w, v)``; ``v`` is ``None`` when ``vectors`` is false.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0), (np.zeros((0, 0)) if vectors else None)
    if n == 1:
        return a[0:1, 0].copy(), (np.ones((1, 1)) if vectors else None)
    d, e, q = tridiagonalize(a, want_q=vectors)
    w, z = tridiagonal_ql(d, e, q)
    order = np.argsort(w, kind="stable")
    w = w[order]
    if vectors:
        z = z[:, order]
    return w, z


def hermitian_eigh(h, vectors=True, imag_tol=0.0):
    """Eigenvalues of a complex Hermitian matrix via the real doubled form.

    ``[[Re, -Im], [Im, Re]]`` has every eigenvalue of ``h`` twice; one copy
    of each pair is kept. Purely real input skips the doubling.
    """
    h = np.asarray(h)
    if not np.iscomplexobj(h) or np.max(np.abs(h.imag), initial=0.0) <= imag_tol:
        w, v = eigh(np.real(h), vectors=vectors)
        return w, (v.astype(complex) if vectors else None)
    n = h.shape[0]
    re, im = h.real, h.imag
    big = np.block([[re, -im], [im, re]])
    w, v = eigh(big, vectors=vectors)
    w = w[0::2]
    if not vectors:
        return w, None
    # each doubled pair spans {(x, y), (-y, x)}; map back to x + i y and
    # re-orthonormalise within (near-)degenerate clusters
    cvec = v[:n, 0::2] + 1j * v[n:, 0::2]
    cvec = _orthonormalise_clusters(w, cvec)
    return w, cvec


def _orthonormalise_clusters(w, vecs, tol=1e-9):
    vecs = vecs.copy()
    scale = max(1.0, float(np.max(np.abs(w), initial=0.0)))
    start = 0
    n = w.size
    while start < n:
        stop = start + 1
        while stop < n and w[stop] - w[stop - 1] <= tol * scale:
            stop += 1
        qmat, _ = np.linalg.qr(vecs[:, start:stop])
        vecs[:, start:stop] = qmat
        start = stop
    return vecs
