"""Brute-force reference computations, written without the package kernels.

Exponents are plain floats here (np.inf for sup norms) so that nothing is
shared with the code under test beyond numpy.
"""
import itertools
import math

import numpy as np
from scipy.optimize import minimize


def lpn(v, p):
    v = np.abs(np.asarray(v, dtype=float))
    if v.size == 0:
        return 0.0
    if math.isinf(p):
        return float(v.max())
    return float((v**p).sum() ** (1.0 / p))


def conj(p):
    if p == 1:
        return math.inf
    if math.isinf(p):
        return 1.0
    return p / (p - 1)


def sign_cube(n):
    return np.array(list(itertools.product((1.0, -1.0), repeat=n))).reshape(-1, n)


def opnorm(A, r, p):
    """|A|_{l_r -> l_p} for r or p in {1, inf}, or r = p = 2, by extreme points."""
    A = np.asarray(A, dtype=float)
    m, n = A.shape
    if r == 1:
        return max(lpn(A[:, j], p) for j in range(n))
    if math.isinf(r):
        return max(lpn(A @ g, p) for g in sign_cube(n))
    if p == 1 or math.isinf(p):
        return opnorm(A.T, conj(p), conj(r))
    if r == 2 and p == 2:
        return float(math.sqrt(max(np.linalg.eigvalsh(A.T @ A).max(), 0.0)))
    raise ValueError("no oracle for this pair")


def opnorm_grid(A, r, p, n_grid=20000):
    """Lower bound by sweeping the unit sphere of l_r (two columns only)."""
    A = np.asarray(A, dtype=float)
    assert A.shape[1] == 2
    t = np.linspace(0, 2 * np.pi, n_grid, endpoint=False)
    G = np.stack([np.cos(t), np.sin(t)], axis=1)
    norms = np.array([lpn(g, r) for g in G])
    G = G / norms[:, None]
    Y = G @ A.T
    return max(lpn(y, p) for y in Y)


def bess_sup_grid(lam, n_grid=400, polish=True):
    """sup over unit f, g in l2^2 of sum |lam_ij| |f_i| |g_j| (2x2 only)."""
    L = np.abs(np.asarray(lam, dtype=float))
    t = np.linspace(0, np.pi / 2, n_grid)
    F = np.stack([np.cos(t), np.sin(t)], axis=1)
    vals = F @ L @ F.T
    i, j = np.unravel_index(np.argmax(vals), vals.shape)
    best = vals[i, j]
    if polish:

        def obj(z):
            f = np.array([np.cos(z[0]), np.sin(z[0])])
            g = np.array([np.cos(z[1]), np.sin(z[1])])
            return -(np.abs(f) @ L @ np.abs(g))

        res = minimize(obj, [t[i], t[j]], method="Nelder-Mead", options={"xatol": 1e-12, "fatol": 1e-14})
        best = max(best, -res.fun)
    return float(best)


def besselian_constant_grid(A, B, n_grid=600):
    """sup over unit x, f in l2^2 of sum_m |b_m . x| |f . a_m| (ambient dim 2)."""
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    t = np.linspace(0, 2 * np.pi, n_grid, endpoint=False)
    U = np.stack([np.cos(t), np.sin(t)], axis=1)
    CX = np.abs(U @ B)  # |b_m(x)| for each grid x
    CF = np.abs(U @ A)  # |f(a_m)| for each grid f
    vals = CX @ CF.T
    i, j = np.unravel_index(np.argmax(vals), vals.shape)

    def obj(z):
        x = np.array([np.cos(z[0]), np.sin(z[0])])
        f = np.array([np.cos(z[1]), np.sin(z[1])])
        return -(np.abs(x @ B) @ np.abs(f @ A))

    res = minimize(obj, [t[i], t[j]], method="Nelder-Mead", options={"xatol": 1e-12, "fatol": 1e-14})
    return float(max(vals[i, j], -res.fun))


def tail_max(A, coeffs, M0, p):
    """max over S subset of the tail and signs of |sum_{m in S} s_m c_m a_m|_p."""
    A = np.asarray(A, dtype=float)
    n = A.shape[1] - M0
    best = 0.0
    for size in range(n + 1):
        for S in itertools.combinations(range(M0, A.shape[1]), size):
            for s in itertools.product((1.0, -1.0), repeat=size):
                v = sum((sg * coeffs[m] * A[:, m] for sg, m in zip(s, S)), np.zeros(A.shape[0]))
                best = max(best, lpn(v, p))
    return best


def bess_vector_bruteforce(A, B, x, p):
    """max over sign vectors s of |A (s * |B^T x|)|_p."""
    c = np.abs(np.asarray(B).T @ x)
    return max(lpn(np.asarray(A) @ (s * c), p) for s in sign_cube(len(c)))


def max_over_signs_l2(A, B, transpose):
    best = 0.0
    for s in sign_cube(A.shape[1]):
        T = (B * s) @ A.T if transpose else (A * s) @ B.T
        best = max(best, np.linalg.svd(T, compute_uv=False)[0])
    return float(best)


def projective_nuclear_sdp(lam):
    """Nuclear norm by the SDP characterisation (cvxpy)."""
    import cvxpy as cp

    lam = np.asarray(lam, dtype=float)
    m, n = lam.shape
    W1 = cp.Variable((m, m), symmetric=True)
    W2 = cp.Variable((n, n), symmetric=True)
    M = cp.bmat([[W1, lam], [lam.T, W2]])
    prob = cp.Problem(cp.Minimize(0.5 * (cp.trace(W1) + cp.trace(W2))), [M >> 0])
    prob.solve()
    return float(prob.value)
