"""Finite biorthogonal systems, Besselian norms and constants, sign operators."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .opnorm import DEFAULT_SEED, NormResult, operator_norm, signed_witness
from .spaces import (
    DEFAULT_CAP,
    SpaceDescriptor,
    as_signs,
    check_cap,
    dual_exponent,
    pnorm,
    pnorm_rows,
    sign_vertices,
    vector_norm,
)

BIORTH_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class BiorthogonalSystem:
    """Frame vectors a_m (columns of ``A``) and coordinate functionals b_m*
    (columns of ``B``, acting by the Euclidean pairing) in a d-dim ambient space.
    """

    ambient: SpaceDescriptor
    A: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        A = np.array(self.A, dtype=float, ndmin=2)
        B = np.array(self.B, dtype=float, ndmin=2)
        d = self.ambient.dim
        if A.shape != B.shape:
            raise ValueError(f"A has shape {A.shape} but B has shape {B.shape}")
        if A.shape[0] != d:
            raise ValueError(f"frame vectors have length {A.shape[0]}, ambient dim is {d}")
        if A.shape[1] > d:
            raise ValueError("redundant systems (M > d) are not supported")
        if not (np.all(np.isfinite(A)) and np.all(np.isfinite(B))):
            raise ValueError("frame entries must be finite")
        err = np.abs(B.T @ A - np.eye(A.shape[1])).max() if A.size else 0.0
        if err > BIORTH_TOL:
            raise ValueError(f"not biorthogonal: max |B^T A - I| = {err:.3e}")
        A.setflags(write=False)
        B.setflags(write=False)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    @property
    def size(self) -> int:
        return self.A.shape[1]

    @property
    def is_basis(self) -> bool:
        return self.size == self.ambient.dim

    @property
    def is_canonical(self) -> bool:
        d = self.ambient.dim
        return self.is_basis and np.array_equal(self.A, np.eye(d)) and np.array_equal(self.B, np.eye(d))

    def to_json(self) -> dict:
        return {"ambient": self.ambient.to_json(), "A": self.A.tolist(), "B": self.B.tolist()}


@dataclass(frozen=True)
class FrameConstants:
    besselian: NormResult
    unconditional: NormResult


@dataclass(frozen=True)
class TailCheck:
    ok: bool
    max_norm: float
    subset: tuple = ()
    signs: tuple = ()


def canonical_system(space: SpaceDescriptor) -> BiorthogonalSystem:
    eye = np.eye(space.dim)
    return BiorthogonalSystem(space, eye, eye)


def system_from_vectors(space: SpaceDescriptor, A) -> BiorthogonalSystem:
    """Complete frame vectors ``A`` with the dual functionals B = A (A^T A)^{-1}."""
    A = np.asarray(A, dtype=float)
    B = A @ np.linalg.inv(A.T @ A)
    return BiorthogonalSystem(space, A, B)


def _check_vec(sys: BiorthogonalSystem, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (sys.ambient.dim,):
        raise ValueError(f"expected a vector of length {sys.ambient.dim}, got shape {x.shape}")
    return x


def frame_expand(sys: BiorthogonalSystem, x) -> np.ndarray:
    """Coefficients b_m*(x)."""
    return sys.B.T @ _check_vec(sys, x)


def columns_disjoint(A) -> bool:
    """True if no two columns of ``A`` share a nonzero row."""
    return bool(np.all((np.asarray(A) != 0).sum(axis=1) <= 1))


def _max_signed_combination(V, space, cap):
    """max over s in {+-1}^k of |V s| in ``space`` (columns of V are the vectors)."""
    k = V.shape[1]
    if k == 0:
        return 0.0, np.ones(0)
    if columns_disjoint(V) or space.p.is_inf:
        # signs do not matter, or can be aligned row by row
        if space.p.is_inf:
            rows = np.abs(V).sum(axis=1)
            i = int(np.argmax(rows))
            s = np.where(V[i] >= 0, 1.0, -1.0)
            return float(rows[i]), s
        return pnorm(V.sum(axis=1), space), np.ones(k)
    check_cap("sign patterns", 2**k, cap)
    best, s_best = -1.0, None
    for block in sign_vertices(k, fix_first=True):
        vals = pnorm_rows(block @ V.T, space)
        j = int(np.argmax(vals))
        if vals[j] > best:
            best, s_best = float(vals[j]), block[j]
    return best, s_best


def besselian_vector_norm(sys: BiorthogonalSystem, x, *, cap: int = DEFAULT_CAP) -> float:
    """sup over unit functionals f of sum_m |b_m*(x)| |f(a_m)|.

    Equals max over sign patterns s of |sum_m s_m |b_m*(x)| a_m|.
    """
    c = np.abs(frame_expand(sys, x))
    active = c > 0
    value, _ = _max_signed_combination(sys.A[:, active] * c[active], sys.ambient, cap)
    return value


def sign_operator_norm(sys: BiorthogonalSystem, s, **kw) -> NormResult:
    """Norm on the ambient space of x -> sum_m s_m b_m*(x) a_m."""
    s = as_signs(s)
    if s.shape != (sys.size,):
        raise ValueError(f"need {sys.size} signs, got {s.shape}")
    p = sys.ambient.p
    return operator_norm((sys.A * s) @ sys.B.T, p, p, **kw)


def _max_over_signs(sys, op, cap, seed, transpose):
    """max over s (first sign fixed) of op-norm of A diag(s) B^T (or its transpose)."""
    M = sys.size
    check_cap("sign patterns", 2**M, cap)
    p = sys.ambient.p
    e = dual_exponent(p) if transpose else p
    if M == 0:
        return NormResult.make_exact(0.0, method="empty")
    best = None
    lower, upper, exact, iters = -1.0, 0.0, True, 0
    for block in sign_vertices(M, fix_first=True):
        if p == 2:
            if transpose:
                stack = np.einsum("dm,km,em->kde", sys.B, block, sys.A)
            else:
                stack = np.einsum("dm,km,em->kde", sys.A, block, sys.B)
            vals = np.linalg.norm(stack, 2, axis=(1, 2))
            j = int(np.argmax(vals))
            if vals[j] > lower:
                lower = upper = float(vals[j])
                best = (block[j], stack[j])
            continue
        for s in block:
            T = (sys.B * s) @ sys.A.T if transpose else (sys.A * s) @ sys.B.T
            res = op(T, e, e, cap=cap, seed=seed)
            iters += res.iterations
            exact = exact and res.exact
            upper = max(upper, res.upper)
            if res.lower > lower:
                lower, best = res.lower, (s, T, res)
    s, T = best[0], best[1]
    if len(best) == 3:
        res = best[2]
        f, g = res.witness_f, res.witness_g
    else:
        U, sv, Vt = np.linalg.svd(T)
        f, g = U[:, 0], Vt[0]
    signs = (tuple(int(t) for t in s),)
    method = "sign-enumeration"
    if exact:
        return NormResult.make_exact(lower, f, g, method, iters, signs)
    return NormResult.bracket(lower, upper, f, g, method, iters, signs)


def besselian_constant(sys: BiorthogonalSystem, *, cap: int = DEFAULT_CAP, seed: int = DEFAULT_SEED) -> NormResult:
    """Besselian constant sup_{|x|,|f| <= 1} sum_m |b_m*(x)| |f(a_m)|.

    Fixing a sign pattern linearises the absolute values, so the constant is
    the max over s of |B diag(s) A^T| acting on the dual space.  The result
    is exact whenever every inner operator norm is (always for l_1, l_2, c0).
    Witness: ``witness_g`` is the functional f*, ``witness_f`` pairs against
    it (the extremal x up to the dual map).
    """
    return _max_over_signs(sys, operator_norm, cap, seed, transpose=True)


def unconditional_constant(sys: BiorthogonalSystem, *, cap: int = DEFAULT_CAP, seed: int = DEFAULT_SEED) -> NormResult:
    """max over sign patterns s of the norm of the sign operator T_s."""
    return _max_over_signs(sys, operator_norm, cap, seed, transpose=False)


def frame_constants(sys: BiorthogonalSystem, **kw) -> FrameConstants:
    return FrameConstants(besselian_constant(sys, **kw), unconditional_constant(sys, **kw))


def _ternary_blocks(n: int, block_digits: int = 8):
    """Patterns in {0, +1, -1}^n, ordered lexicographically by (0, +1, -1)."""
    if n == 0:
        yield np.zeros((1, 0))
        return
    digits = np.array([0.0, 1.0, -1.0])
    low = min(n, block_digits)
    suffix = np.array(list(itertools.product(digits, repeat=low))).reshape(-1, low)
    for prefix in itertools.product(digits, repeat=n - low):
        yield np.hstack([np.tile(prefix, (len(suffix), 1)), suffix])


def tail_unconditionality_check(sys: BiorthogonalSystem, x, M0: int, eps: float, *, cap: int = DEFAULT_CAP) -> TailCheck:
    """Finite-scale tail criterion for unconditional convergence of sum b_m*(x) a_m.

    Checks |sum_{m in S} l_m b_m*(x) a_m| < eps for every subset S of the
    tail {M0+1, ..., M} and all l_m in [-1, 1]; by convexity the vertices
    {-1, 0, +1} suffice.  Returns the first violating (subset, signs) in
    enumeration order, with 1-based indices.
    """
    if not 0 <= M0 <= sys.size:
        raise ValueError(f"M0 must lie in [0, {sys.size}]")
    if eps <= 0:
        raise ValueError("eps must be positive")
    n = sys.size - M0
    check_cap("tail patterns", 3**n, cap)
    c = frame_expand(sys, x)[M0:]
    Z = (sys.A[:, M0:] * c).T
    best = 0.0
    for block in _ternary_blocks(n):
        vals = pnorm_rows(block @ Z, sys.ambient)
        best = max(best, float(vals.max()))
        bad = np.nonzero(vals >= eps)[0]
        if bad.size:
            lam = block[bad[0]]
            idx = np.nonzero(lam)[0]
            return TailCheck(False, best, tuple(int(M0 + i + 1) for i in idx), tuple(int(lam[i]) for i in idx))
    return TailCheck(True, best)


def dual_norm_bounds_check(sys: BiorthogonalSystem, f, L: float, *, n_samples: int = 64, seed: int = DEFAULT_SEED):
    """Check L^{-1}|f| <= |f|^Bess_dual <= |f| for one functional f.

    The dual Besselian norm is estimated from below by the best ratio
    |f(x)| / |x|^Bess over the Holder witness of f and ``n_samples`` random x.
    Returns (ok, estimate, |f|_{E*}).
    """
    f = np.asarray(f, dtype=float)
    space = sys.ambient
    fnorm = pnorm(f, space.dual)
    candidates = [signed_witness(f, space.dual)]
    rng = np.random.default_rng(seed)
    candidates.extend(rng.standard_normal((n_samples, space.dim)))
    est = 0.0
    for x in candidates:
        nb = besselian_vector_norm(sys, x)
        if nb > 0:
            est = max(est, abs(f @ x) / nb)
    tol = 1e-10 * max(1.0, fnorm)
    ok = fnorm / L - tol <= est <= fnorm + tol
    return ok, est, fnorm


__all__ = [
    "BiorthogonalSystem",
    "FrameConstants",
    "TailCheck",
    "besselian_constant",
    "besselian_vector_norm",
    "canonical_system",
    "columns_disjoint",
    "dual_norm_bounds_check",
    "frame_constants",
    "frame_expand",
    "sign_operator_norm",
    "system_from_vectors",
    "tail_unconditionality_check",
    "unconditional_constant",
    "vector_norm",
]
