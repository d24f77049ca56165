"""p -> q operator norms of real matrices with exact paths and certified brackets.

``operator_norm(A, r, p)`` computes sup_{|g|_r <= 1} |A g|_p.  Whenever no
closed form or finite vertex enumeration applies, the result is a bracket
whose lower end comes from a multi-start nonlinear power method (always a
feasible point, hence a sound lower bound) and whose upper end is the best
of several norm-inequality bounds.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .spaces import DEFAULT_CAP, Exponent, INF, dual_exponent, exponent, pnorm, pnorm_rows, sign_vertices

DEFAULT_SEED = 0xBE55
N_STARTS = 32
MAX_ITER = 10_000
REL_TOL = 1e-12


@dataclass(frozen=True)
class NormResult:
    """A norm value with its certificate.

    ``value`` is always the certified lower bound; for exact results
    ``lower == value == upper``.  ``witness_f``/``witness_g`` are dual-unit
    functionals reproducing ``value`` through the relevant pairing.
    """

    value: float
    lower: float
    upper: float
    exact: bool
    witness_f: np.ndarray | None = field(default=None, compare=False)
    witness_g: np.ndarray | None = field(default=None, compare=False)
    method: str = ""
    iterations: int = 0
    signs: tuple | None = None

    @classmethod
    def make_exact(cls, value, f=None, g=None, method="", iterations=0, signs=None):
        value = float(value)
        return cls(value, value, value, True, f, g, method, iterations, signs)

    @classmethod
    def bracket(cls, lower, upper, f=None, g=None, method="", iterations=0, signs=None):
        lower, upper = float(lower), float(upper)
        upper = max(upper, lower)
        return cls(lower, lower, upper, False, f, g, method, iterations, signs)

    @property
    def certificate(self):
        return "exact" if self.exact else {"bracket": [self.lower, self.upper]}

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def to_json(self) -> dict:
        out = {
            "value": self.value,
            "certificate": self.certificate,
            "witness_f": None if self.witness_f is None else [float(t) for t in self.witness_f],
            "witness_g": None if self.witness_g is None else [float(t) for t in self.witness_g],
            "method": self.method,
            "iterations": int(self.iterations),
        }
        if self.signs is not None:
            out["signs"] = [list(map(int, s)) for s in self.signs]
        return out


def holder_witness(c, exp) -> np.ndarray:
    """Nonnegative f in the dual l_{p*} unit ball with sum(c * f) = |c|_p.

    ``exp`` is the exponent p of the primal norm of ``c``.
    """
    c = np.asarray(c, dtype=float)
    if np.any(c < 0):
        raise ValueError("holder_witness expects a nonnegative vector")
    e = exponent(exp)
    f = np.zeros_like(c)
    if c.size == 0 or not np.any(c > 0):
        return f
    if e.is_inf:
        f[int(np.argmax(c))] = 1.0
        return f
    p = float(e)
    if p == 1.0:
        return np.ones_like(c)
    s = c / c.max()
    w = s ** (p - 1.0)
    return w / pnorm(w, dual_exponent(e))


def signed_witness(w, exp) -> np.ndarray:
    """Dual-unit f with <f, w> = |w|_p (Holder witness with the signs of w)."""
    w = np.asarray(w, dtype=float)
    return np.sign(w) * holder_witness(np.abs(w), exp)


def _id_norm(n: int, a: float, b: float) -> float:
    """Norm of the identity from l_a^n to l_b^n."""
    ia = 0.0 if a == np.inf else 1.0 / a
    ib = 0.0 if b == np.inf else 1.0 / b
    return float(n) ** max(0.0, ib - ia)


def _monomial_support(A: np.ndarray):
    """(rows, cols) of the nonzeros if A has at most one per row and column."""
    nz = A != 0
    if np.any(nz.sum(axis=0) > 1) or np.any(nz.sum(axis=1) > 1):
        return None
    return np.nonzero(nz)


def upper_bounds(A: np.ndarray, r: Exponent, p: Exponent) -> dict:
    """Valid upper bounds on |A|_{r -> p}, keyed by name."""
    m, n = A.shape
    rf, pf = float(r), float(p)
    rs = dual_exponent(r)
    rows = pnorm_rows(A, rs)
    cols = pnorm_rows(A.T, p)
    sigma = float(np.linalg.norm(A, 2))
    out = {
        "row-mixed": pnorm(rows, p),
        "col-mixed": pnorm(cols, rs),
        "via-l2": _id_norm(m, 2.0, pf) * sigma * _id_norm(n, rf, 2.0),
        "via-l1": float(cols.max()) * _id_norm(n, rf, 1.0),
        "via-linf": _id_norm(m, np.inf, pf) * float(rows.max()),
    }
    if r == p:
        n11 = float(np.abs(A).sum(axis=0).max())
        ninf = float(np.abs(A).sum(axis=1).max())
        theta = 0.0 if p.is_inf else 1.0 / pf
        out["riesz-thorin"] = n11**theta * ninf ** (1.0 - theta)
        if pf <= 2.0:
            th = 2.0 * (1.0 - 1.0 / pf)
            out["riesz-thorin-2"] = n11 ** (1.0 - th) * sigma**th
        else:
            th = 2.0 / pf
            out["riesz-thorin-2"] = sigma**th * ninf ** (1.0 - th)
    return out


def _power_method(A, r: Exponent, p: Exponent, g0, max_iter, tol):
    rs = dual_exponent(r)
    g = g0 / max(pnorm(g0, r), 1e-300)
    best = pnorm(A @ g, p)
    it = 0
    for it in range(1, max_iter + 1):
        y = A @ g
        if not np.any(y):
            break
        f = signed_witness(y, p)
        z = A.T @ f
        if not np.any(z):
            break
        g_new = signed_witness(z, rs)
        val = pnorm(A @ g_new, p)
        if val <= best * (1.0 + tol):
            if val > best:
                best, g = val, g_new
            break
        best, g = val, g_new
    return best, g, it


def operator_norm(
    A,
    from_exp=2,
    to_exp=2,
    *,
    cap: int = DEFAULT_CAP,
    seed: int = DEFAULT_SEED,
    n_starts: int = N_STARTS,
    max_iter: int = MAX_ITER,
) -> NormResult:
    """|A|_{l_r -> l_p} with ``r = from_exp`` and ``p = to_exp``.

    Witnesses: ``witness_g`` lies in the unit l_r ball, ``witness_f`` in the
    unit l_{p*} ball, and f @ A @ g equals the returned value.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2:
        raise ValueError("operator_norm expects a 2-d matrix")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix entries must be finite")
    r, p = exponent(from_exp), exponent(to_exp)
    rs = dual_exponent(r)
    m, n = A.shape

    def finish(g, method, iterations=0, exact=True, upper=None):
        y = A @ g
        val = pnorm(y, p)
        f = signed_witness(y, p)
        if exact:
            return NormResult.make_exact(val, f, g, method, iterations)
        return NormResult.bracket(val, upper, f, g, method, iterations)

    if m == 0 or n == 0 or not np.any(A):
        return NormResult.make_exact(0.0, np.zeros(m), np.zeros(n), "zero")

    if r.p == 1:
        j = int(np.argmax(pnorm_rows(A.T, p)))
        return finish(np.eye(n)[j], "columns")

    if p.is_inf:
        i = int(np.argmax(pnorm_rows(A, rs)))
        g = signed_witness(A[i], rs)
        val = pnorm(A[i], rs)
        f = np.zeros(m)
        f[i] = 1.0 if A[i] @ g >= 0 else -1.0
        return NormResult.make_exact(val, f, g, "rows")

    if r == 2 and p == 2:
        U, s, Vt = np.linalg.svd(A)
        return NormResult.make_exact(s[0], U[:, 0], Vt[0], "svd")

    nonneg = bool(np.all(A >= 0))
    if nonneg and r.is_inf:
        return finish(np.ones(n), "nonnegative-ones")
    if nonneg and p.p == 1:
        g = holder_witness(A.T @ np.ones(m), rs)
        return finish(g, "nonnegative-ones")

    support = _monomial_support(A)
    if support is not None:
        ri, ci = support
        d = A[ri, ci]
        g = np.zeros(n)
        if float(p) >= float(r):
            k = int(np.argmax(np.abs(d)))
            g[ci[k]] = np.sign(d[k])
        else:
            # maximise sum |d_k|^p h_k over the l_{r/p} ball, h = |g|^p
            inner = INF if r.is_inf else exponent(r.p / p.p)
            h = holder_witness(np.abs(d) ** float(p), dual_exponent(inner))
            g[ci] = np.sign(d) * h ** (1.0 / float(p))
        return finish(g, "monomial")

    if r.is_inf and 2**n <= cap:
        best, g_best = -1.0, None
        for block in sign_vertices(n, fix_first=True):
            vals = pnorm_rows(block @ A.T, p)
            k = int(np.argmax(vals))
            if vals[k] > best * (1.0 + 1e-15) + 1e-300:
                best, g_best = vals[k], block[k]
        return finish(g_best, "vertex-enumeration")

    if p.p == 1 and 2**m <= cap:
        best, f_best = -1.0, None
        for block in sign_vertices(m, fix_first=True):
            vals = pnorm_rows(block @ A, rs)
            k = int(np.argmax(vals))
            if vals[k] > best * (1.0 + 1e-15) + 1e-300:
                best, f_best = vals[k], block[k]
        g = signed_witness(A.T @ f_best, rs)
        return finish(g, "dual-vertex-enumeration")

    bounds = upper_bounds(A, r, p)
    upper = min(bounds.values())
    rng = np.random.default_rng(seed)
    starts = [np.eye(n)[int(np.argmax(pnorm_rows(A.T, p)))], np.ones(n)]
    starts.append(signed_witness(A[int(np.argmax(pnorm_rows(A, rs)))], rs))
    while len(starts) < n_starts:
        starts.append(rng.standard_normal(n))
    best, g_best, iters = -1.0, None, 0
    for g0 in starts:
        val, g, it = _power_method(A, r, p, g0, max_iter, REL_TOL)
        iters += it
        if val > best * (1.0 + 1e-15):
            best, g_best = val, g
    method = "power-method"
    if (r.is_inf and 2**n > cap) or (p.p == 1 and 2**m > cap):
        method += "+cap-exceeded"
    res = finish(g_best, method, iters, exact=False, upper=upper)
    if res.upper - res.lower <= 1e-12 * max(1.0, res.upper):
        return NormResult.make_exact(res.value, res.witness_f, res.witness_g, method + "+collapsed", iters)
    return res
