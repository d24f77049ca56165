"""Seeded property suites: crossnorm axioms, golden values, lattice, frames.

Every property returns a :class:`PropertyResult`; failing properties carry
the first counterexample found.  ``alpha`` is injectable so a harness can
check that a broken crossnorm is actually caught.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .config import RunConfig
from .frames import (
    besselian_constant,
    besselian_vector_norm,
    canonical_system,
    dual_norm_bounds_check,
    frame_expand,
    system_from_vectors,
    tail_unconditionality_check,
    unconditional_constant,
)
from .lattice import (
    iso_c0_F,
    iso_c0_c0,
    iso_l1_l1,
    iso_lp_l1,
    lattice_abs,
    lattice_join,
    lattice_leq,
    lattice_meet,
)
from .norms import (
    COLLAPSING_OPERATOR,
    bess_functional_of_rank_rep,
    besselian_crossnorm,
    besselian_crossnorm_upper,
    injective_norm,
    projective_norm,
)
from .opnorm import operator_norm
from .spaces import c0, lp, pnorm, vector_norm
from .tensor import CoeffTensor, RankRep, apply_operator_pair, pad, sign_flip

SUITES = ("axioms", "golden", "lattice", "frames")
# accepted spellings of suite names
ALIASES = {"paper": "golden"}

Alpha = Callable[[CoeffTensor], float]


def default_alpha(u: CoeffTensor) -> float:
    return besselian_crossnorm(u).value


@dataclass
class PropertyResult:
    suite: str
    name: str
    passed: bool
    checked: int = 0
    counterexample: dict | None = None
    detail: str = ""

    def to_json(self) -> dict:
        out = {"suite": self.suite, "name": self.name, "passed": self.passed, "checked": self.checked}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.detail:
            out["detail"] = self.detail
        return out

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        s = f"{tag} {self.suite}.{self.name} ({self.checked} cases)"
        if self.detail:
            s += f": {self.detail}"
        return s


@dataclass
class _Ctx:
    cfg: RunConfig
    alpha: Alpha
    rng: np.random.Generator = field(init=False)

    def __post_init__(self):
        self.rng = np.random.default_rng(self.cfg.seed)


def _rand_lam(rng, k=None, kk=None, kmax=5):
    k = k or int(rng.integers(1, kmax + 1))
    kk = kk or int(rng.integers(1, kmax + 1))
    lam = rng.standard_normal((k, kk))
    lam[rng.random((k, kk)) < 0.2] = 0.0
    return lam


def _tensor(rng, left_p, right_p, kmax=5):
    lam = _rand_lam(rng, kmax=kmax)
    k, kk = lam.shape
    left = c0(k) if left_p == "c0" else lp(left_p, k)
    right = c0(kk) if right_p == "c0" else lp(right_p, kk)
    return CoeffTensor(lam, left, right)


def _ce(u: CoeffTensor, **extra) -> dict:
    d = u.to_json()
    d.update({k: (v.tolist() if isinstance(v, np.ndarray) else v) for k, v in extra.items()})
    return d


def _forall(suite, name, n, gen, check) -> PropertyResult:
    """Run ``check(case)`` on ``n`` generated cases; check returns None or a counterexample dict."""
    for i in range(n):
        case = gen(i)
        bad = check(case)
        if bad is not None:
            return PropertyResult(suite, name, False, i + 1, bad, "counterexample found")
    return PropertyResult(suite, name, True, n)


def _single(suite, name, got, want, tol) -> PropertyResult:
    ok = abs(got - want) <= tol
    ce = None if ok else {"got": got, "expected": want}
    return PropertyResult(suite, name, ok, 1, ce, f"got {got:.12g}, expected {want:.12g}")


# ---------------------------------------------------------------- axioms

EXACT_PAIRS = ((2, 2), (1, 1), ("c0", "c0"), (3, 1))


def _axioms(ctx: _Ctx):
    rng, alpha, n = ctx.rng, ctx.alpha, ctx.cfg.samples
    tol = ctx.cfg.exact_tol
    out = []

    def sandwich(case):
        u = case
        e = injective_norm(u).value
        a = alpha(u)
        p = projective_norm(u)
        if a < e - tol or (p.exact and a > p.value + tol):
            return _ce(u, eps=e, alpha=a, pi=p.value)
        return None

    pairs = [EXACT_PAIRS[i % len(EXACT_PAIRS)] for i in range(n)]
    out.append(_forall("axioms", "sandwich", n, lambda i: _tensor(rng, *pairs[i]), sandwich))

    def gen_elem(i):
        lp_, rp_ = pairs[i]
        k, kk = int(rng.integers(1, 5)), int(rng.integers(1, 5))
        L = c0(k) if lp_ == "c0" else lp(lp_, k)
        R = c0(kk) if rp_ == "c0" else lp(rp_, kk)
        return rng.standard_normal(k), rng.standard_normal(kk), L, R

    def cross(case):
        x, y, L, R = case
        u = CoeffTensor(np.outer(x, y), L, R)
        want = besselian_vector_norm(canonical_system(L), x) * besselian_vector_norm(canonical_system(R), y)
        a = alpha(u)
        if abs(a - want) > tol * (1 + want):
            return _ce(u, alpha=a, product=want)
        return None

    out.append(_forall("axioms", "cross_property", n, gen_elem, cross))

    def dual(case):
        u = case
        f = rng.standard_normal(u.left.dim)
        g = rng.standard_normal(u.right.dim)
        lhs = abs(f @ u.lam @ g)
        rhs = pnorm(f, u.left.dual) * pnorm(g, u.right.dual) * alpha(u)
        if lhs > rhs + tol * (1 + rhs):
            return _ce(u, f=f, g=g, pairing=lhs, bound=rhs)
        return None

    out.append(_forall("axioms", "dual_condition", n, lambda i: _tensor(rng, *pairs[i]), dual))

    def homog(case):
        u = case
        t = float(rng.standard_normal() * 3)
        a, at = alpha(u), alpha(t * u)
        if abs(at - abs(t) * a) > tol * (1 + abs(t) * a):
            return _ce(u, t=t, alpha=a, alpha_scaled=at)
        return None

    out.append(_forall("axioms", "homogeneity", n, lambda i: _tensor(rng, *pairs[i]), homog))

    def gen_pair(i):
        u = _tensor(rng, *pairs[i])
        return u, u.with_lam(rng.standard_normal(u.lam.shape))

    def triangle(case):
        u, v = case
        s, a, b = alpha(u + v), alpha(u), alpha(v)
        if s > a + b + tol * (1 + a + b):
            return _ce(u, v=v.lam, alpha_sum=s, alpha_u=a, alpha_v=b)
        return None

    out.append(_forall("axioms", "triangle", n, gen_pair, triangle))

    def definite(case):
        u = case
        a = alpha(u)
        nonzero = bool(np.any(u.lam != 0))
        if nonzero != (a > 0):
            return _ce(u, alpha=a)
        return None

    def gen_def(i):
        u = _tensor(rng, *pairs[i])
        return u.with_lam(np.zeros_like(u.lam)) if i % 5 == 0 else u

    out.append(_forall("axioms", "definiteness", n, gen_def, definite))

    def signs(case):
        u = case
        a = alpha(u)
        a_abs = alpha(lattice_abs(u))
        eps = rng.choice([-1.0, 1.0], size=u.lam.shape)
        a_flip = alpha(sign_flip(u, eps))
        if abs(a - a_abs) > 1e-9 * (1 + a) or abs(a - a_flip) > 1e-9 * (1 + a):
            return _ce(u, eps_signs=eps, alpha=a, alpha_abs=a_abs, alpha_flip=a_flip)
        return None

    out.append(_forall("axioms", "sign_invariance", n, lambda i: _tensor(rng, *pairs[i]), signs))

    def gen_mono(i):
        v = _tensor(rng, *pairs[i])
        return v.with_lam(v.lam * rng.uniform(-1, 1, v.lam.shape)), v

    def mono(case):
        u, v = case
        a, b = alpha(u), alpha(v)
        if a > b + 1e-9 * (1 + b):
            return _ce(u, v=v.lam, alpha_u=a, alpha_v=b)
        return None

    out.append(_forall("axioms", "monotonicity", n, gen_mono, mono))

    def padding(case):
        u = case
        big = CoeffTensor(u.lam, u.left.with_dim(u.left.dim + 2), u.right.with_dim(u.right.dim + 1))
        big = pad(big, u.lam.shape[0] + 2, u.lam.shape[1] + 1)
        a, b = alpha(u), alpha(big)
        if abs(a - b) > 1e-10 * (1 + a):
            return _ce(u, alpha=a, alpha_padded=b)
        return None

    out.append(_forall("axioms", "zero_padding", n, lambda i: _tensor(rng, *pairs[i]), padding))

    # concrete non-proportionality pair on l2 (x) l2
    u = CoeffTensor(np.eye(2), lp(2, 2), lp(2, 2))
    v = u.with_lam([[1.0, 1.0], [-1.0, 1.0]])
    r_pi = alpha(u) / projective_norm(u).value
    r_eps = alpha(v) / injective_norm(v).value
    ok = abs(r_pi - 0.5) <= 1e-9 and abs(r_eps - math.sqrt(2)) <= 1e-9
    out.append(
        PropertyResult(
            "axioms",
            "non_proportionality",
            ok,
            1,
            None if ok else {"alpha_over_pi_u": r_pi, "alpha_over_eps_v": r_eps},
            f"alpha/pi(u) = {r_pi:.10g}, alpha/eps(v) = {r_eps:.10g}",
        )
    )
    return out


# ---------------------------------------------------------------- golden


def _golden(ctx: _Ctx):
    alpha = ctx.alpha
    tol = 1e-9
    l2 = lp(2, 2)
    I2 = CoeffTensor(np.eye(2), l2, l2)
    V = CoeffTensor([[1.0, 1.0], [-1.0, 1.0]], l2, l2)
    M3 = [[3.0, -1.0], [0.0, 2.0]]
    L1 = CoeffTensor(M3, lp(1, 2), lp(1, 2))
    C0 = CoeffTensor(M3, c0(2), c0(2))
    e1, e2 = np.eye(2)
    r2 = math.sqrt(2)
    out = [
        _single("golden", "alpha_u_l2", alpha(I2), 1.0, tol),
        _single("golden", "pi_u_l2", projective_norm(I2).value, 2.0, tol),
        _single("golden", "eps_v_l2", injective_norm(V).value, r2, tol),
        _single("golden", "alpha_v_l2", alpha(V), 2.0, tol),
        _single("golden", "eps_c0_c0", injective_norm(C0).value, 3.0, tol),
        _single("golden", "alpha_c0_c0", alpha(C0), 3.0, tol),
        _single("golden", "alpha_l1_l1", alpha(L1), 6.0, tol),
        _single("golden", "pi_l1_l1", projective_norm(L1).value, 6.0, tol),
        _single("golden", "opnorm_scaled_rotation", operator_norm(V.lam).value, r2, tol),
        _single("golden", "opnorm_all_ones", operator_norm(np.ones((2, 2))).value, 2.0, tol),
        _single(
            "golden",
            "bess_rep_diagonal",
            bess_functional_of_rank_rep(RankRep.from_pairs([(e1, e1), (e2, e2)], l2, l2)).value,
            1.0,
            tol,
        ),
        _single(
            "golden",
            "bess_rep_doubled",
            bess_functional_of_rank_rep(RankRep.from_pairs([(e1, e1), (e1, e1)], l2, l2)).value,
            2.0,
            tol,
        ),
        _single(
            "golden",
            "bess_upper_identity",
            besselian_crossnorm_upper(RankRep.from_pairs([(e1, e1), (e2, e2)], l2, l2)).upper,
            1.0,
            1e-6,
        ),
        _single("golden", "bess_vector_l2", besselian_vector_norm(canonical_system(l2), [3.0, 4.0]), 5.0, tol),
        _single("golden", "bess_vector_l1", besselian_vector_norm(canonical_system(lp(1, 3)), [1.0, -1.0, 2.0]), 4.0, tol),
    ]
    for sp in (lp(2, 4), lp(1, 4)):
        out.append(_single("golden", f"besselian_constant_{sp.name}", besselian_constant(canonical_system(sp)).value, 1.0, 1e-10))

    # Non-uniformity with the operator e1, e2 -> e1: the expected value 2 is
    # checked against the computed norm, not assumed.
    v = apply_operator_pair(I2, COLLAPSING_OPERATOR, np.eye(2))
    av = alpha(v)
    bound = operator_norm(COLLAPSING_OPERATOR).value * alpha(I2)
    ok = abs(av - 2.0) <= tol and av > bound + tol
    out.append(
        PropertyResult(
            "golden",
            "nonuniformity_collapsing_operator",
            ok,
            1,
            None if ok else {"S": COLLAPSING_OPERATOR.tolist(), "lam_v": v.lam.tolist(), "alpha_v": av, "bound": bound, "expected_alpha_v": 2.0},
            f"alpha(v) = {av:.12g}, bound = {bound:.12g}",
        )
    )
    return out


# ---------------------------------------------------------------- lattice


def _lattice(ctx: _Ctx):
    rng, alpha, n = ctx.rng, ctx.alpha, ctx.cfg.samples
    out = []

    def gen_triple(i):
        u = _tensor(rng, (1, 2, "c0", 3)[i % 4], (1, 2, "c0")[i % 3])
        # integer-valued copies make equality cases likely
        v = u.with_lam(np.round(rng.standard_normal(u.lam.shape)))
        w = u.with_lam(np.round(rng.standard_normal(u.lam.shape)))
        return u.with_lam(np.round(u.lam)), v, w

    def order(case):
        u, v, w = case
        j, m = lattice_join(u, v), lattice_meet(u, v)
        t = float(rng.uniform(0, 3))
        checks = {
            "reflexive": lattice_leq(u, u),
            "join_ub": lattice_leq(u, j) and lattice_leq(v, j),
            "meet_lb": lattice_leq(m, u) and lattice_leq(m, v),
            "join_least": (not (lattice_leq(u, w) and lattice_leq(v, w))) or lattice_leq(j, w),
            "meet_greatest": (not (lattice_leq(w, u) and lattice_leq(w, v))) or lattice_leq(w, m),
            "antisymmetric": (not (lattice_leq(u, v) and lattice_leq(v, u))) or np.array_equal(u.lam, v.lam),
            "translation": (not lattice_leq(u, v)) or lattice_leq(u + w, v + w),
            "translation_join": lattice_leq(m, j),
            "positive_homogeneity": (not lattice_leq(u, v)) or lattice_leq(t * u, t * v),
            "abs": np.array_equal(lattice_abs(u).lam, np.abs(u.lam)),
        }
        bad = [k for k, ok in checks.items() if not ok]
        return _ce(u, v=v.lam, w=w.lam, failed=bad) if bad else None

    out.append(_forall("lattice", "order_axioms", n, gen_triple, order))

    def gen_mono(i):
        v = _tensor(rng, (1, 2, "c0", 3)[i % 4], (1, 2, "c0", 4)[i % 3])
        u = v.with_lam(v.lam * rng.uniform(-1, 1, v.lam.shape))
        return u, v

    def mono(case):
        u, v = case
        assert lattice_leq(lattice_abs(u), lattice_abs(v))
        a, b = alpha(u), alpha(v)
        return _ce(u, v=v.lam, alpha_u=a, alpha_v=b) if a > b + 1e-9 * (1 + b) else None

    out.append(_forall("lattice", "norm_monotonicity", n, gen_mono, mono))

    def abs_id(case):
        a, b = alpha(case), alpha(lattice_abs(case))
        return _ce(case, alpha=a, alpha_abs=b) if abs(a - b) > 1e-9 * (1 + a) else None

    out.append(_forall("lattice", "abs_identity", n, lambda i: _tensor(rng, 2, (1, 2, 3)[i % 3]), abs_id))

    isos = [
        ("iso_c0_c0", "c0", "c0", iso_c0_c0, 1e-10),
        ("iso_l1_l1", 1, 1, iso_l1_l1, 1e-10),
        ("iso_lp_l1", 3, 1, iso_lp_l1, 1e-8),
        ("iso_l2_l1", 2, 1, iso_lp_l1, 1e-8),
        ("iso_c0_l2", "c0", 2, iso_c0_F, 1e-8),
        ("iso_c0_l1", "c0", 1, iso_c0_F, 1e-8),
    ]
    for name, L, R, fn, tol in isos:

        def check(u, fn=fn, tol=tol):
            a, b = alpha(u), fn(u)
            return _ce(u, alpha=a, iso=b) if abs(a - b) > tol * (1 + b) else None

        out.append(_forall("lattice", name, n, lambda i, L=L, R=R: _tensor(rng, L, R, kmax=6), check))
    return out


# ---------------------------------------------------------------- frames


def _space(rng, d, kinds=(1, 2, 4, "c0")):
    k = kinds[int(rng.integers(len(kinds)))]
    return c0(d) if k == "c0" else lp(k, d)


def _random_system(rng, space, M=None, cond_max=20.0):
    d = space.dim
    M = d if M is None else M
    while True:
        A = rng.standard_normal((d, M))
        if np.linalg.cond(A) < cond_max:
            return system_from_vectors(space, A)


def _frames(ctx: _Ctx):
    rng, n = ctx.rng, ctx.cfg.samples
    out = []

    def canon(case):
        sp = case
        L = besselian_constant(canonical_system(sp))
        x = rng.standard_normal(sp.dim)
        bn = besselian_vector_norm(canonical_system(sp), x)
        vn = vector_norm(x, sp)
        if abs(L.value - 1) > 1e-10 or abs(bn - vn) > 1e-10 * (1 + vn):
            return {"space": sp.to_json(), "L": L.value, "x": x.tolist(), "bess": bn, "norm": vn}
        return None

    out.append(_forall("frames", "canonical_constant_one", n, lambda i: _space(rng, 2 + i % 7), canon))

    def usf_bsf(case):
        sys = case
        L = besselian_constant(sys).value
        D = unconditional_constant(sys).value
        return {"system": sys.to_json(), "L": L, "D": D} if L > D + 1e-8 else None

    m = max(1, n // 4)
    out.append(_forall("frames", "unconditional_implies_besselian", m, lambda i: _random_system(rng, lp(2, 2 + i % 5)), usf_bsf))

    def gen_sys_x(i):
        sp = _space(rng, 2 + i % 4)
        return _random_system(rng, sp), rng.standard_normal(sp.dim)

    def bess_ineq(case):
        sys, x = case
        L = besselian_constant(sys).upper
        vn = vector_norm(x, sys.ambient)
        bn = besselian_vector_norm(sys, x)
        if not (vn <= bn + 1e-9 * (1 + vn) and bn <= L * vn + 1e-9 * (1 + vn)):
            return {"system": sys.to_json(), "x": x.tolist(), "norm": vn, "bess": bn, "L": L}
        return None

    out.append(_forall("frames", "besselian_inequality", m, gen_sys_x, bess_ineq))

    def dual_sw(case):
        sys, f = case
        L = besselian_constant(sys).value
        ok, est, fn = dual_norm_bounds_check(sys, f, L, seed=ctx.cfg.seed)
        return None if ok else {"system": sys.to_json(), "f": f.tolist(), "estimate": est, "fnorm": fn, "L": L}

    out.append(_forall("frames", "dual_sandwich", m, gen_sys_x, dual_sw))

    def gen_tail(i):
        sp = _space(rng, 2 + i % 4)
        sys = _random_system(rng, sp)
        x = rng.standard_normal(sp.dim)
        M0 = int(rng.integers(0, sys.size + 1))
        return sys, x, M0, float(rng.uniform(0.05, 3.0))

    def tail(case):
        sys, x, M0, eps = case
        res = tail_unconditionality_check(sys, x, M0, eps)
        c = frame_expand(sys, x)
        worst = 0.0
        for lam in _all_ternary(sys.size - M0):
            worst = max(worst, vector_norm(sys.A[:, M0:] @ (lam * c[M0:]), sys.ambient))
        if res.ok != (worst < eps):
            return {"system": sys.to_json(), "x": x.tolist(), "M0": M0, "eps": eps, "checker": res.ok, "oracle_max": worst}
        return None

    out.append(_forall("frames", "tail_check", m, gen_tail, tail))
    return out


def _all_ternary(n):
    import itertools

    for t in itertools.product((0.0, 1.0, -1.0), repeat=n):
        yield np.array(t)


_RUNNERS = {"axioms": _axioms, "golden": _golden, "lattice": _lattice, "frames": _frames}


def run_suite(name: str, cfg: RunConfig | None = None, alpha: Alpha | None = None) -> list[PropertyResult]:
    cfg = cfg or RunConfig()
    name = ALIASES.get(name, name)
    names = SUITES if name == "all" else (name,)
    unknown = [s for s in names if s not in _RUNNERS]
    if unknown:
        raise ValueError(f"unknown suite {unknown[0]!r}; choose from {', '.join(SUITES + ('all',))}")
    results = []
    for s in names:
        results.extend(_RUNNERS[s](_Ctx(cfg, alpha or default_alpha)))
    return results
