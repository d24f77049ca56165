"""JSON schemas for spaces, biorthogonal systems, tensors and results."""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .frames import BiorthogonalSystem
from .spaces import SpaceDescriptor, exponent
from .tensor import CoeffTensor, RankRep


class ParseError(ValueError):
    def __init__(self, msg: str, field: str = "", line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(f"field {field!r}")
        super().__init__(f"{msg} ({', '.join(where)})" if where else msg)
        self.field = field
        self.line = line


def load_json(path) -> dict:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", line=exc.lineno) from None


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _get(obj, key, path):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError("missing field", f"{path}{key}")
    return obj[key]


def _matrix(val, field, allow_empty=False) -> np.ndarray:
    try:
        arr = np.array(val, dtype=float)
    except (TypeError, ValueError):
        raise ParseError("expected a rectangular numeric matrix", field) from None
    if arr.ndim == 1 and arr.size == 0 and not allow_empty:
        raise ParseError("empty matrix", field)
    if arr.ndim != 2:
        raise ParseError(f"expected a 2-d matrix, got {arr.ndim}-d", field)
    if arr.size == 0 and not allow_empty:
        raise ParseError("empty matrix", field)
    if not np.all(np.isfinite(arr)):
        raise ParseError("non-finite entries", field)
    return arr


def parse_space(obj, path="") -> SpaceDescriptor:
    kind = _get(obj, "kind", path)
    dim = _get(obj, "dim", path)
    if not isinstance(dim, int) or dim < 1:
        raise ParseError("dim must be a positive integer", f"{path}dim")
    if kind == "c0":
        return SpaceDescriptor("c0", dim)
    if kind != "lp":
        raise ParseError(f"unknown space kind {kind!r}", f"{path}kind")
    p = _get(obj, "p", path)
    try:
        return SpaceDescriptor("lp", dim, exponent(p))
    except (ValueError, TypeError):
        raise ParseError(f"invalid exponent {p!r}", f"{path}p") from None


def parse_system(obj, path="") -> BiorthogonalSystem:
    ambient = parse_space(_get(obj, "ambient", path), f"{path}ambient.")
    A = _matrix(_get(obj, "A", path), f"{path}A")
    B = _matrix(_get(obj, "B", path), f"{path}B")
    try:
        return BiorthogonalSystem(ambient, A, B)
    except ValueError as exc:
        raise ParseError(str(exc), f"{path}A/B") from None


def parse_tensor(obj):
    """Return (tensor, left_system, right_system); systems default to None."""
    if not isinstance(obj, dict):
        raise ParseError("top-level JSON must be an object")
    left = parse_space(_get(obj, "left", ""), "left.")
    right = parse_space(_get(obj, "right", ""), "right.")
    sysL = parse_system(obj["left_system"], "left_system.") if "left_system" in obj else None
    sysR = parse_system(obj["right_system"], "right_system.") if "right_system" in obj else None
    if "lam" in obj:
        lam = _matrix(obj["lam"], "lam")
        try:
            return CoeffTensor(lam, left, right), sysL, sysR
        except ValueError as exc:
            raise ParseError(str(exc), "lam") from None
    if "pairs" in obj:
        pairs = obj["pairs"]
        if not isinstance(pairs, list):
            raise ParseError("pairs must be a list", "pairs")
        X, Y = [], []
        for i, pr in enumerate(pairs):
            x = np.asarray(_get(pr, "x", f"pairs[{i}]."), dtype=float)
            y = np.asarray(_get(pr, "y", f"pairs[{i}]."), dtype=float)
            if x.shape != (left.dim,):
                raise ParseError(f"x must have length {left.dim}", f"pairs[{i}].x")
            if y.shape != (right.dim,):
                raise ParseError(f"y must have length {right.dim}", f"pairs[{i}].y")
            X.append(x)
            Y.append(y)
        return RankRep(np.reshape(X, (-1, left.dim)), np.reshape(Y, (-1, right.dim)), left, right), sysL, sysR
    raise ParseError("expected either 'lam' or 'pairs'")
