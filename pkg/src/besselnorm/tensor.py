"""Coefficient-matrix and rank-R representations of tensors in E (x) F."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spaces import SpaceDescriptor


@dataclass(frozen=True, eq=False)
class CoeffTensor:
    """u = sum_ij lam[i, j] a_i (x) x_j, stored in the leading k x k' block."""

    lam: np.ndarray
    left: SpaceDescriptor
    right: SpaceDescriptor

    def __post_init__(self):
        lam = np.array(self.lam, dtype=float)
        if lam.ndim != 2 or lam.shape[0] < 1 or lam.shape[1] < 1:
            raise ValueError(f"coefficient matrix must be a non-empty 2-d array, got shape {lam.shape}")
        if not np.all(np.isfinite(lam)):
            raise ValueError("coefficients must be finite")
        if lam.shape[0] > self.left.dim or lam.shape[1] > self.right.dim:
            raise ValueError(
                f"{lam.shape} block does not fit in {self.left.name}^{self.left.dim} (x) {self.right.name}^{self.right.dim}"
            )
        lam.setflags(write=False)
        object.__setattr__(self, "lam", lam)

    @property
    def shape(self):
        return self.lam.shape

    def full(self) -> np.ndarray:
        """Coefficient matrix zero-padded to the ambient dimensions."""
        out = np.zeros((self.left.dim, self.right.dim))
        k, kk = self.lam.shape
        out[:k, :kk] = self.lam
        return out

    def with_lam(self, lam) -> "CoeffTensor":
        return CoeffTensor(lam, self.left, self.right)

    def __add__(self, other: "CoeffTensor") -> "CoeffTensor":
        _same_spaces(self, other)
        return self.with_lam(_pad_to(self.lam, other.lam.shape) + _pad_to(other.lam, self.lam.shape))

    def __sub__(self, other):
        return self + (-1.0) * other

    def __rmul__(self, t: float) -> "CoeffTensor":
        return self.with_lam(float(t) * self.lam)

    def __neg__(self):
        return (-1.0) * self

    def to_json(self) -> dict:
        return {"left": self.left.to_json(), "right": self.right.to_json(), "lam": self.lam.tolist()}


def _pad_to(lam, shape):
    k = max(lam.shape[0], shape[0])
    kk = max(lam.shape[1], shape[1])
    out = np.zeros((k, kk))
    out[: lam.shape[0], : lam.shape[1]] = lam
    return out


def _same_spaces(u, v):
    if u.left != v.left or u.right != v.right:
        raise ValueError("tensors live in different spaces")


def pad(u: CoeffTensor, k: int, kk: int) -> CoeffTensor:
    """Embed ``u`` into a larger zero block of shape (k, kk)."""
    if k < u.lam.shape[0] or kk < u.lam.shape[1]:
        raise ValueError("pad can only enlarge the block")
    return u.with_lam(_pad_to(u.lam, (k, kk)))


@dataclass(frozen=True, eq=False)
class RankRep:
    """u = sum_r x^r (x) y^r; rows of ``X`` are the x^r, rows of ``Y`` the y^r."""

    X: np.ndarray
    Y: np.ndarray
    left: SpaceDescriptor
    right: SpaceDescriptor

    def __post_init__(self):
        X = np.array(self.X, dtype=float).reshape(-1, self.left.dim)
        Y = np.array(self.Y, dtype=float).reshape(-1, self.right.dim)
        if X.shape[0] != Y.shape[0]:
            raise ValueError(f"{X.shape[0]} left vectors but {Y.shape[0]} right vectors")
        if not (np.all(np.isfinite(X)) and np.all(np.isfinite(Y))):
            raise ValueError("representation entries must be finite")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)

    @classmethod
    def from_pairs(cls, pairs, left: SpaceDescriptor, right: SpaceDescriptor) -> "RankRep":
        pairs = list(pairs)
        X = np.array([p[0] for p in pairs], dtype=float).reshape(len(pairs), left.dim)
        Y = np.array([p[1] for p in pairs], dtype=float).reshape(len(pairs), right.dim)
        return cls(X, Y, left, right)

    @property
    def rank(self) -> int:
        return self.X.shape[0]

    @property
    def pairs(self):
        return list(zip(self.X, self.Y))

    def to_json(self) -> dict:
        return {
            "left": self.left.to_json(),
            "right": self.right.to_json(),
            "pairs": [{"x": x.tolist(), "y": y.tolist()} for x, y in self.pairs],
        }


def elementary(x, y, left: SpaceDescriptor, right: SpaceDescriptor) -> RankRep:
    return RankRep.from_pairs([(x, y)], left, right)


def rank_rep_to_coeffs(rep: RankRep, sysL=None, sysR=None) -> CoeffTensor:
    """lam[i, j] = sum_r b_i*(x^r) y_j*(y^r); canonical systems when omitted."""
    C = rep.X if sysL is None else rep.X @ _functionals(sysL, rep.left)
    D = rep.Y if sysR is None else rep.Y @ _functionals(sysR, rep.right)
    return CoeffTensor(C.T @ D, rep.left if sysL is None else sysL.ambient, rep.right if sysR is None else sysR.ambient)


def coeffs_to_rank_rep(u: CoeffTensor, sysL=None, sysR=None) -> RankRep:
    """The row expansion sum_i a_i (x) (sum_j lam[i, j] x_j)."""
    k, kk = u.lam.shape
    AL = np.eye(u.left.dim) if sysL is None else sysL.A
    AR = np.eye(u.right.dim) if sysR is None else sysR.A
    X = AL[:, :k].T
    Y = u.lam @ AR[:, :kk].T
    return RankRep(X, Y, u.left, u.right)


def _functionals(sys, space):
    if sys.ambient != space:
        raise ValueError(f"system lives in {sys.ambient.name}^{sys.ambient.dim}, tensor factor in {space.name}^{space.dim}")
    return sys.B


def pair_with_functionals(u: CoeffTensor, f, g) -> float:
    """(f* (x) g*)(u) = f^T lam g through the canonical bases."""
    f = np.asarray(f, dtype=float).ravel()
    g = np.asarray(g, dtype=float).ravel()
    k, kk = u.lam.shape
    if f.size not in (k, u.left.dim) or g.size not in (kk, u.right.dim):
        raise ValueError(f"functionals of length {f.size}, {g.size} do not match {u.lam.shape}")
    return float(f[:k] @ u.lam @ g[:kk])


def sign_flip(u: CoeffTensor, eps) -> CoeffTensor:
    eps = np.asarray(eps, dtype=float)
    if eps.shape != u.lam.shape:
        raise ValueError(f"sign matrix shape {eps.shape} != {u.lam.shape}")
    if not np.all(np.abs(eps) == 1.0):
        raise ValueError("sign matrix entries must be +-1")
    return u.with_lam(eps * u.lam)


def apply_operator_pair(u: CoeffTensor, S, T) -> CoeffTensor:
    """(S (x) T)(u) in canonical coordinates: lam -> S lam T^T.

    ``S``/``T`` may be square of the block size or of the ambient size; in
    the latter case the result is the full ambient-size coefficient matrix.
    """
    S = np.asarray(S, dtype=float)
    T = np.asarray(T, dtype=float)
    lam = u.lam
    k, kk = lam.shape
    if S.shape not in ((k, k), (u.left.dim, u.left.dim)):
        raise ValueError(f"S has shape {S.shape}, expected {(k, k)} or {(u.left.dim, u.left.dim)}")
    if T.shape not in ((kk, kk), (u.right.dim, u.right.dim)):
        raise ValueError(f"T has shape {T.shape}, expected {(kk, kk)} or {(u.right.dim, u.right.dim)}")
    if S.shape[0] != k or T.shape[0] != kk:
        lam = u.full()
        if S.shape[0] == k:
            S = _pad_to(S, (u.left.dim, u.left.dim))
        if T.shape[0] == kk:
            T = _pad_to(T, (u.right.dim, u.right.dim))
    return u.with_lam(S @ lam @ T.T)
