"""Truncated sequence spaces: exponents, descriptors, vector norms, dual balls."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

import numpy as np

DEFAULT_CAP = 2**20

Real = Union[int, float, Fraction]


class CapExceeded(RuntimeError):
    """An exact enumeration would visit more points than the configured cap."""

    def __init__(self, what: str, count: int, cap: int):
        super().__init__(f"{what}: {count} points exceeds cap {cap}")
        self.count = count
        self.cap = cap


@dataclass(frozen=True)
class Exponent:
    """A Lebesgue exponent in [1, inf].

    Finite values are stored as exact fractions so that conjugation is an
    exact involution; ``p is None`` encodes infinity.
    """

    p: Fraction | None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, Fraction):
                object.__setattr__(self, "p", _as_fraction(self.p))
            if self.p < 1:
                raise ValueError(f"exponent must be >= 1, got {self.p}")

    @classmethod
    def finite(cls, p: Real) -> "Exponent":
        return cls(_as_fraction(p))

    @property
    def is_inf(self) -> bool:
        return self.p is None

    def __float__(self) -> float:
        return np.inf if self.p is None else float(self.p)

    def dual(self) -> "Exponent":
        return dual_exponent(self)

    def __eq__(self, other):
        if isinstance(other, Exponent):
            return self.p == other.p
        if isinstance(other, (int, float, Fraction)):
            return float(self) == float(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.p)

    def __repr__(self):
        return "Exponent(inf)" if self.p is None else f"Exponent({self.p})"

    def __str__(self):
        if self.p is None:
            return "inf"
        return str(self.p.numerator) if self.p.denominator == 1 else str(float(self.p))


INF = Exponent(None)


def _as_fraction(p: Real) -> Fraction:
    if isinstance(p, Fraction):
        return p
    if isinstance(p, float):
        if not np.isfinite(p):
            raise ValueError("use INF for an infinite exponent")
        exact = Fraction(p)
        short = exact.limit_denominator(10**6)
        return short if abs(float(short) - p) < 1e-12 else exact
    return Fraction(p)


def exponent(p) -> Exponent:
    """Coerce ``p`` (number, ``"inf"``, ``float('inf')`` or Exponent) to an Exponent."""
    if isinstance(p, Exponent):
        return p
    if isinstance(p, str):
        if p.lower() in ("inf", "infinity", "c0"):
            return INF
        return Exponent.finite(Fraction(p))
    if isinstance(p, float) and np.isinf(p):
        return INF
    return Exponent.finite(p)


def dual_exponent(e: Exponent) -> Exponent:
    """Conjugate exponent: 1/p + 1/p* = 1."""
    e = exponent(e)
    if e.is_inf:
        return Exponent(Fraction(1))
    if e.p == 1:
        return INF
    return Exponent(e.p / (e.p - 1))


@dataclass(frozen=True)
class SpaceDescriptor:
    """A coordinate truncation of l_p (``kind="lp"``) or c_0 (``kind="c0"``)."""

    kind: str
    dim: int
    p: Exponent = INF

    def __post_init__(self):
        if self.kind not in ("lp", "c0"):
            raise ValueError(f"unknown space kind {self.kind!r}")
        if int(self.dim) != self.dim or self.dim < 1:
            raise ValueError(f"dim must be a positive integer, got {self.dim}")
        object.__setattr__(self, "dim", int(self.dim))
        object.__setattr__(self, "p", INF if self.kind == "c0" else exponent(self.p))

    @property
    def exponent(self) -> Exponent:
        return self.p

    @property
    def dual(self) -> Exponent:
        return dual_exponent(self.p)

    def with_dim(self, dim: int) -> "SpaceDescriptor":
        return SpaceDescriptor(self.kind, dim, self.p)

    @property
    def name(self) -> str:
        return "c0" if self.kind == "c0" else f"l{self.p}"

    def to_json(self) -> dict:
        if self.kind == "c0":
            return {"kind": "c0", "dim": self.dim}
        p = "inf" if self.p.is_inf else (int(self.p.p) if self.p.p.denominator == 1 else float(self.p.p))
        return {"kind": "lp", "p": p, "dim": self.dim}


def lp(p, dim: int) -> SpaceDescriptor:
    return SpaceDescriptor("lp", dim, exponent(p))


def c0(dim: int) -> SpaceDescriptor:
    return SpaceDescriptor("c0", dim)


def _exp_of(space_or_exp) -> Exponent:
    if isinstance(space_or_exp, SpaceDescriptor):
        return space_or_exp.p
    return exponent(space_or_exp)


def pnorm(v, p) -> float:
    """l_p norm of a coordinate array; ``p`` may be a float, Exponent or space."""
    v = np.abs(np.asarray(v, dtype=float)).ravel()
    if v.size == 0:
        return 0.0
    pf = float(_exp_of(p))
    if pf == np.inf:
        return float(v.max())
    if pf == 1.0:
        return float(v.sum())
    if pf == 2.0:
        return float(np.sqrt(v @ v))
    m = v.max()
    if m == 0.0:
        return 0.0
    return float(m * np.sum((v / m) ** pf) ** (1.0 / pf))


def vector_norm(v, space) -> float:
    """Norm of ``v`` in ``space`` (c0 behaves as l_inf)."""
    if isinstance(space, SpaceDescriptor) and np.size(v) != space.dim:
        raise ValueError(f"vector of length {np.size(v)} does not live in {space.name}^{space.dim}")
    return pnorm(v, space)


def as_signs(s) -> np.ndarray:
    """Validate a sign vector (entries +-1) and return it as a float array."""
    s = np.asarray(s, dtype=float)
    if not np.all(np.abs(s) == 1.0):
        raise ValueError("sign vectors must have entries in {+1, -1}")
    return s


def sign_vertices(n: int, chunk: int = 4096, fix_first: bool = False) -> Iterator[np.ndarray]:
    """Yield the vertices of [-1, 1]^n in lexicographic order, in row blocks.

    With ``fix_first`` only vertices whose first coordinate is +1 are produced
    (enough whenever the objective is invariant under s -> -s).
    """
    if n == 0:
        yield np.ones((1, 0))
        return
    free = n - 1 if fix_first else n
    total = 1 << free
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total))
        bits = (idx[:, None] >> np.arange(free - 1, -1, -1)[None, :]) & 1
        block = np.where(bits == 1, 1.0, -1.0)
        if fix_first:
            block = np.hstack([np.ones((len(idx), 1)), block])
        yield block


def check_cap(what: str, count: int, cap: int) -> None:
    if count > cap:
        raise CapExceeded(what, count, cap)


def dual_ball_extreme_points(space: SpaceDescriptor, cap: int = DEFAULT_CAP) -> np.ndarray | None:
    """Extreme points of the dual unit ball of ``space``, one per row.

    c0/l_inf: the dual ball is the l_1 ball, vertices +-e_i.
    l_1: the dual ball is the l_inf cube, vertices {-1, +1}^dim.
    Other exponents have a smooth dual ball; returns None.
    """
    n = space.dim
    if space.p.is_inf:
        eye = np.eye(n)
        return np.stack(list(itertools.chain.from_iterable((eye[i], -eye[i]) for i in range(n))))
    if space.p.p == 1:
        check_cap("sign vertices", 2**n, cap)
        return np.vstack(list(sign_vertices(n)))
    return None


def pnorm_rows(Y, p) -> np.ndarray:
    """Row-wise l_p norms of a 2-d array."""
    Y = np.abs(np.asarray(Y, dtype=float))
    if Y.shape[1] == 0:
        return np.zeros(Y.shape[0])
    pf = float(_exp_of(p))
    if pf == np.inf:
        return Y.max(axis=1)
    if pf == 1.0:
        return Y.sum(axis=1)
    if pf == 2.0:
        return np.sqrt(np.einsum("ij,ij->i", Y, Y))
    m = Y.max(axis=1)
    safe = np.where(m > 0, m, 1.0)
    return m * np.sum((Y / safe[:, None]) ** pf, axis=1) ** (1.0 / pf)
