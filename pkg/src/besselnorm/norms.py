"""Tensor norms on truncated sequence spaces: injective, projective,
Hilbert-Schmidt and the Besselian crossnorm.

All coefficient matrices are read in the canonical bases unless frames are
passed explicitly.  The Besselian crossnorm of a basis-span tensor reduces to
an operator norm of the entrywise absolute coefficient matrix,

    alpha(lam) = sup_{f, g dual-unit} sum_ij |lam_ij| |f_i| |g_j|
               = | |lam| |_{l_{q*} -> l_p}

because for c >= 0 the supremum of sum_i c_i |f_i| over the dual ball is
attained at a nonnegative Holder witness.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .frames import BiorthogonalSystem, columns_disjoint
from .opnorm import DEFAULT_SEED, NormResult, holder_witness, operator_norm
from .spaces import DEFAULT_CAP, SpaceDescriptor, check_cap, lp, pnorm_rows, sign_vertices
from .tensor import CoeffTensor, RankRep, apply_operator_pair, coeffs_to_rank_rep, rank_rep_to_coeffs

PI_BUDGET = 200

__all__ = [
    "NormResult",
    "UniformityCheck",
    "bess_functional_of_rank_rep",
    "besselian_crossnorm",
    "besselian_crossnorm_upper",
    "hs_norm",
    "holder_witness",
    "injective_norm",
    "operator_norm",
    "projection_residual",
    "projective_norm",
    "uniformity_check",
    "uniformity_violation_demo",
]


def injective_norm(u: CoeffTensor, **kw) -> NormResult:
    """eps(u) = sup |f^T lam g| = |lam|_{l_{q*} -> l_p}."""
    return operator_norm(u.lam, u.right.dual, u.left.p, **kw)


def _frame_block(sys: BiorthogonalSystem | None, space: SpaceDescriptor, k: int) -> np.ndarray | None:
    if sys is None:
        return None
    if sys.ambient != space:
        raise ValueError(f"system lives in {sys.ambient.name}^{sys.ambient.dim}, tensor factor in {space.name}^{space.dim}")
    if k > sys.size:
        raise ValueError(f"{k} coefficients but the system has only {sys.size} vectors")
    if sys.is_canonical:
        return None
    return sys.A[:, :k]


def _bess_sup(M, left, right, sysL=None, sysR=None, *, cap=DEFAULT_CAP, seed=DEFAULT_SEED) -> NormResult:
    """sup over dual-unit f, g of sum_mn M_mn |f(a_m)| |g(x_n)| for M >= 0.

    With frame vectors A_L, A_R this is the max over sign patterns s, t of
    |A_L diag(s) M diag(t) A_R^T|_{F* -> E}; patterns are only enumerated on
    a side whose frame vectors overlap in support.
    """
    k, kk = M.shape
    AL = _frame_block(sysL, left, k)
    AR = _frame_block(sysR, right, kk)
    r, p = right.dual, left.p
    if AL is None and AR is None:
        return operator_norm(M, r, p, cap=cap, seed=seed)
    AL = np.eye(left.dim)[:, :k] if AL is None else AL
    AR = np.eye(right.dim)[:, :kk] if AR is None else AR
    s_free = not columns_disjoint(AL)
    t_free = not columns_disjoint(AR)
    ns = k if s_free else 0
    nt = kk if t_free else 0
    check_cap("frame sign patterns", 2 ** (ns + nt), cap)
    s_list = list(np.vstack(list(sign_vertices(k, fix_first=True)))) if s_free else [np.ones(k)]
    t_list = list(np.vstack(list(sign_vertices(kk)))) if t_free else [np.ones(kk)]
    best, lower, upper, exact, iters = None, -1.0, 0.0, True, 0
    for s in s_list:
        left_part = (AL * s) @ M
        for t in t_list:
            res = operator_norm(left_part @ (AR * t).T, r, p, cap=cap, seed=seed)
            iters += res.iterations
            exact = exact and res.exact
            upper = max(upper, res.upper)
            if res.lower > lower:
                lower, best = res.lower, (s, t, res)
    s, t, res = best
    signs = (tuple(int(v) for v in s), tuple(int(v) for v in t))
    method = "frame-sign-enumeration/" + res.method
    if exact:
        return NormResult.make_exact(lower, res.witness_f, res.witness_g, method, iters, signs)
    return NormResult.bracket(lower, upper, res.witness_f, res.witness_g, method, iters, signs)


def besselian_crossnorm(u: CoeffTensor, sysL=None, sysR=None, **kw) -> NormResult:
    """Besselian crossnorm of a tensor in the span of the product basis.

    ``u.lam`` holds the coefficients with respect to the frame vectors of
    ``sysL``/``sysR`` (canonical bases when omitted).
    """
    return _bess_sup(np.abs(u.lam), u.left, u.right, sysL, sysR, **kw)


def bess_functional_of_rank_rep(rep: RankRep, sysL=None, sysR=None, **kw) -> NormResult:
    """Bess(sum_r x^r (x) y^r) for one particular representation.

    Reduces to the Besselian sup with M = sum_r |c^r| |d^r|^T where c^r, d^r
    are the frame coefficients of x^r and y^r.
    """
    C = rep.X if sysL is None else rep.X @ sysL.B
    D = rep.Y if sysR is None else rep.Y @ sysR.B
    M = np.abs(C).T @ np.abs(D)
    if M.size == 0:
        M = np.zeros((1, 1))
    return _bess_sup(M, rep.left, rep.right, sysL, sysR, **kw)


def _remixed_reps(rep: RankRep, budget: int, rng):
    """Other representations of the same tensor."""
    X, Y = rep.X, rep.Y
    R = X.shape[0]
    for b in range(budget):
        kind = b % 3
        if kind == 0 and R > 0:
            z = rng.standard_normal(X.shape[1])
            t = rng.uniform(-1.0, 1.0)
            yield RankRep(np.vstack([X + t * z, -t * z]), np.vstack([Y, Y.sum(axis=0)]), rep.left, rep.right)
        elif kind == 1 and R > 0:
            w = rng.standard_normal(Y.shape[1])
            t = rng.uniform(-1.0, 1.0)
            yield RankRep(np.vstack([X, X.sum(axis=0)]), np.vstack([Y + t * w, -t * w]), rep.left, rep.right)
        elif R > 0:
            G = np.eye(R) + 0.5 * rng.standard_normal((R, R))
            if abs(np.linalg.det(G)) < 1e-3:
                continue
            yield RankRep(G @ X, np.linalg.inv(G).T @ Y, rep.left, rep.right)


def besselian_crossnorm_upper(
    rep: RankRep, sysL=None, sysR=None, budget: int = PI_BUDGET, *, cap=DEFAULT_CAP, seed=DEFAULT_SEED
) -> NormResult:
    """Bracket for the infimum of Bess(.) over representations of ``rep``'s tensor.

    Upper end: the best Bess value found over the given representation, its
    coefficient expansion and ``budget`` re-mixed representations.  Lower
    end: the coefficient-matrix formula when both systems are bases, and the
    injective norm otherwise (any reasonable crossnorm dominates it).
    """
    kw = dict(cap=cap, seed=seed)
    u = rank_rep_to_coeffs(rep, sysL, sysR)
    bases = (sysL is None or sysL.is_basis) and (sysR is None or sysR.is_basis)
    if not np.any(u.lam):
        return NormResult.bracket(0.0, 0.0, method="representation-search")
    lower_res = injective_norm(rank_rep_to_coeffs(rep), **kw)
    if bases:
        coeff = besselian_crossnorm(u, sysL, sysR, **kw)
        if coeff.lower >= lower_res.lower:
            lower_res = coeff
    candidates = [rep]
    if bases:
        candidates.append(coeffs_to_rank_rep(u, sysL, sysR))
    rng = np.random.default_rng(seed)
    candidates.extend(_remixed_reps(rep, budget, rng))
    upper = min(bess_functional_of_rank_rep(c, sysL, sysR, **kw).upper for c in candidates)
    return NormResult.bracket(
        lower_res.lower, upper, lower_res.witness_f, lower_res.witness_g, "representation-search", len(candidates)
    )


def hs_norm(u: CoeffTensor) -> float:
    return float(np.sqrt(np.sum(u.lam**2)))


def _rep_cost(X, Y, left, right) -> float:
    return float(pnorm_rows(X, left) @ pnorm_rows(Y, right))


def projective_norm(u: CoeffTensor, budget: int = PI_BUDGET, *, cap=DEFAULT_CAP, seed=DEFAULT_SEED) -> NormResult:
    """pi(u), the infimum of sum_r |x^r| |y^r| over representations.

    Exact for l_1 on either side (row/column sums) and for l_2 (x) l_2
    (nuclear norm); a certified bracket otherwise.
    """
    lam = u.lam
    if not np.any(lam):
        return NormResult.make_exact(0.0, method="zero")
    if u.left.p == 1:
        return NormResult.make_exact(float(pnorm_rows(lam, u.right).sum()), method="l1-rows")
    if u.right.p == 1:
        return NormResult.make_exact(float(pnorm_rows(lam.T, u.left).sum()), method="l1-columns")
    U, sv, Vt = np.linalg.svd(lam, full_matrices=False)
    if u.left.p == 2 and u.right.p == 2:
        return NormResult.make_exact(float(sv.sum()), method="nuclear")

    k, kk = lam.shape
    I_k, I_kk = np.eye(k), np.eye(kk)
    upper = min(
        _rep_cost(I_k, lam, u.left, u.right),
        _rep_cost(lam.T, I_kk, u.left, u.right),
        _rep_cost((U * sv).T, Vt, u.left, u.right),
    )
    rng = np.random.default_rng(seed)
    r = len(sv)
    for _ in range(budget):
        Q, _ = np.linalg.qr(rng.standard_normal((r, r)))
        d = np.exp(rng.uniform(-1.0, 1.0, r))
        X = (d[:, None] * Q.T) @ (U * sv).T
        Y = (Q.T / d[:, None]) @ Vt
        upper = min(upper, _rep_cost(X, Y, u.left, u.right))

    lower = injective_norm(u, cap=cap, seed=seed).lower
    for Phi in (np.sign(lam), U @ Vt, lam):
        if not np.any(Phi):
            continue
        bil = operator_norm(Phi, u.right.p, u.left.dual, cap=cap, seed=seed).upper
        if bil > 0:
            lower = max(lower, float(np.sum(lam * Phi)) / bil)
    if upper - lower <= 1e-12 * max(1.0, upper):
        return NormResult.make_exact(lower, method="pi-bracket+collapsed")
    return NormResult.bracket(lower, upper, method="pi-bracket", iterations=budget)


@dataclass(frozen=True)
class UniformityCheck:
    alpha_u: float
    alpha_v: float
    norm_S: float
    norm_T: float
    bound: float
    violated: bool

    def to_json(self) -> dict:
        return {
            "alpha_u": self.alpha_u,
            "alpha_v": self.alpha_v,
            "norm_S": self.norm_S,
            "norm_T": self.norm_T,
            "bound": self.bound,
            "violated": self.violated,
        }


def uniformity_check(u: CoeffTensor, S, T, tol: float = 1e-9, **kw) -> UniformityCheck:
    """Compare alpha((S (x) T) u) with |S| |T| alpha(u)."""
    v = apply_operator_pair(u, S, T)
    a_u = besselian_crossnorm(u, **kw).value
    a_v = besselian_crossnorm(v, **kw).value
    nS = operator_norm(S, u.left.p, u.left.p, **kw).upper
    nT = operator_norm(T, u.right.p, u.right.p, **kw).upper
    bound = nS * nT * a_u
    return UniformityCheck(a_u, a_v, nS, nT, bound, a_v > bound + tol)


COLLAPSING_OPERATOR = np.array([[1.0, 1.0], [0.0, 0.0]])
SCALED_ROTATION = np.array([[1.0, 1.0], [-1.0, 1.0]])


def uniformity_violation_demo() -> dict:
    """Non-uniformity test cases on l_2 (x) l_2 with u = e1(x)e1 + e2(x)e2.

    ``collapsing_operator`` is S with S e1 = S e2 = e1 (and T = I), so
    (S (x) T) u = e1(x)e1 + e1(x)e2, whose Besselian norm is sqrt(2): this
    operator does not violate the uniform bound.  ``scaled_rotation`` uses
    S = [[1, 1], [-1, 1]] (|S| = sqrt(2)), which maps u to
    e1(x)e1 + e1(x)e2 - e2(x)e1 + e2(x)e2 with norm 2 > sqrt(2).  The
    top-level numbers are those of ``collapsing_operator``.
    """
    sp = lp(2, 2)
    u = CoeffTensor(np.eye(2), sp, sp)
    cases = {}
    for name, S in (("collapsing_operator", COLLAPSING_OPERATOR), ("scaled_rotation", SCALED_ROTATION)):
        rec = uniformity_check(u, S, np.eye(2)).to_json()
        rec["S"] = S.tolist()
        cases[name] = rec
    head = cases["collapsing_operator"]
    return {
        "alpha_u": head["alpha_u"],
        "alpha_v": head["alpha_v"],
        "bound": head["bound"],
        "cases": cases,
        "violated": any(c["violated"] for c in cases.values()),
    }


def projection_residual(x, y, M: int, N: int, left: SpaceDescriptor, right: SpaceDescriptor) -> float:
    """alpha(x (x) y - P_M x (x) Q_N y) for the canonical coordinate projections."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    xm = np.where(np.arange(x.size) < M, x, 0.0)
    yn = np.where(np.arange(y.size) < N, y, 0.0)
    lam = np.outer(x, y) - np.outer(xm, yn)
    return besselian_crossnorm(CoeffTensor(lam, left, right)).value
