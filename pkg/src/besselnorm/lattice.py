"""Coefficient-wise lattice order on tensors and the classical isometric
identifications of Besselian tensor products."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spaces import SpaceDescriptor, exponent, pnorm, pnorm_rows
from .tensor import CoeffTensor


def _check_same(u: CoeffTensor, v: CoeffTensor):
    if u.lam.shape != v.lam.shape:
        raise ValueError(f"shape mismatch {u.lam.shape} vs {v.lam.shape}; pad explicitly first")
    if u.left != v.left or u.right != v.right:
        raise ValueError("tensors live in different spaces")


def lattice_leq(u: CoeffTensor, v: CoeffTensor) -> bool:
    _check_same(u, v)
    return bool(np.all(u.lam <= v.lam))


def lattice_join(u: CoeffTensor, v: CoeffTensor) -> CoeffTensor:
    _check_same(u, v)
    return u.with_lam(np.maximum(u.lam, v.lam))


def lattice_meet(u: CoeffTensor, v: CoeffTensor) -> CoeffTensor:
    _check_same(u, v)
    return u.with_lam(np.minimum(u.lam, v.lam))


def lattice_abs(u: CoeffTensor) -> CoeffTensor:
    """|u| = u v (-u)."""
    return lattice_join(u, -u)


@dataclass(frozen=True)
class MixedNormVector:
    """A finite sequence of blocks in an inner space, normed in an outer sequence space."""

    blocks: np.ndarray
    inner: SpaceDescriptor
    outer: SpaceDescriptor

    def __post_init__(self):
        blocks = np.atleast_2d(np.asarray(self.blocks, dtype=float))
        if blocks.shape[0] > self.outer.dim:
            raise ValueError("more blocks than the outer dimension")
        if blocks.shape[1] > self.inner.dim:
            raise ValueError("block longer than the inner dimension")
        object.__setattr__(self, "blocks", blocks)

    def norm(self) -> float:
        return mixed_norm(self.blocks, self.outer, self.inner)


def mixed_norm(blocks, outer, inner) -> float:
    """|(|block_i|_inner)_i|_outer."""
    return pnorm(pnorm_rows(np.atleast_2d(blocks), inner), outer)


def _need(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def iso_c0_c0(u: CoeffTensor) -> float:
    """Norm of the image in c0 of c0 (x) c0: max |lam_ij|."""
    _need(u.left.kind == "c0" and u.right.kind == "c0", "iso_c0_c0 needs c0 (x) c0")
    return float(np.abs(u.lam).max())


def iso_l1_l1(u: CoeffTensor) -> float:
    """Norm of the image in l_1 of l_1 (x) l_1: sum |lam_ij|."""
    _need(u.left.p == 1 and u.right.p == 1, "iso_l1_l1 needs l1 (x) l1")
    return float(np.abs(u.lam).sum())


def iso_lp_l1(u: CoeffTensor, p=None) -> float:
    """Norm in l_p(l_1) of the rows of lam: (sum_i |row_i|_1^p)^(1/p)."""
    e = u.left.p if p is None else exponent(p)
    _need(u.left.kind == "lp" and not e.is_inf and u.left.p == e, "iso_lp_l1 needs a finite l_p on the left")
    _need(u.right.p == 1, "iso_lp_l1 needs l1 on the right")
    return mixed_norm(u.lam, e, 1)


def iso_c0_F(u: CoeffTensor) -> float:
    """Norm in c0(F) of the rows of lam: max_i |row_i|_F."""
    _need(u.left.kind == "c0", "iso_c0_F needs c0 on the left")
    return mixed_norm(u.lam, u.left, u.right)
