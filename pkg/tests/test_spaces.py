from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from besselnorm.spaces import (
    INF,
    CapExceeded,
    Exponent,
    SpaceDescriptor,
    c0,
    check_cap,
    dual_ball_extreme_points,
    dual_exponent,
    exponent,
    lp,
    pnorm,
    pnorm_rows,
    sign_vertices,
    vector_norm,
)
from oracles import lpn

finite_p = st.fractions(min_value=1, max_value=20, max_denominator=50)


def test_dual_exponent_examples():
    assert dual_exponent(exponent(2)) == 2
    assert dual_exponent(exponent(1)) == INF
    assert dual_exponent(INF) == 1
    assert dual_exponent(exponent(3)) == Fraction(3, 2)
    assert dual_exponent(exponent(4)).p == Fraction(4, 3)


@given(finite_p)
def test_dual_is_involution(p):
    e = Exponent(p)
    assert dual_exponent(dual_exponent(e)) == e


def test_exponent_parsing():
    assert exponent("inf") is INF
    assert exponent(float("inf")) is INF
    assert exponent(1.5).p == Fraction(3, 2)
    with pytest.raises(ValueError):
        exponent(0.5)


def test_space_descriptor_validation():
    with pytest.raises(ValueError):
        SpaceDescriptor("lp", 0, exponent(2))
    with pytest.raises(ValueError):
        SpaceDescriptor("hardy", 2, exponent(2))
    assert c0(3).p == INF
    assert lp(2, 3).to_json() == {"kind": "lp", "p": 2, "dim": 3}
    assert c0(2).to_json() == {"kind": "c0", "dim": 2}
    assert lp("inf", 2).to_json()["p"] == "inf"


def test_vector_norm_examples():
    assert vector_norm([3, 4], lp(2, 2)) == pytest.approx(5)
    assert vector_norm([1, -1, 2], lp(1, 3)) == 4
    assert vector_norm([1, -7, 2], c0(3)) == 7
    with pytest.raises(ValueError):
        vector_norm([1, 2], lp(2, 3))


@given(st.lists(st.floats(-1e3, 1e3), min_size=1, max_size=8), st.sampled_from([1, 1.5, 2, 3, 4, np.inf]))
def test_pnorm_matches_reference(v, p):
    assert pnorm(v, p) == pytest.approx(lpn(v, p), rel=1e-12, abs=1e-12)


def test_pnorm_rows_matches_pnorm(rng):
    Y = rng.standard_normal((7, 5))
    Y[2] = 0
    for p in (1, 2, 3, INF):
        np.testing.assert_allclose(pnorm_rows(Y, p), [pnorm(y, p) for y in Y], rtol=1e-13)


def test_pnorm_no_overflow():
    assert pnorm([1e200, 1e200], 3) == pytest.approx(1e200 * 2 ** (1 / 3))


def test_sign_vertices_order_and_count():
    V = np.vstack(list(sign_vertices(3, chunk=3)))
    assert V.shape == (8, 3)
    assert V[0].tolist() == [-1, -1, -1]
    assert V[-1].tolist() == [1, 1, 1]
    assert len({tuple(v) for v in V}) == 8
    W = np.vstack(list(sign_vertices(3, fix_first=True)))
    assert W.shape == (4, 3) and np.all(W[:, 0] == 1)


def test_cap():
    check_cap("x", 4, 4)
    with pytest.raises(CapExceeded):
        check_cap("x", 5, 4)


def test_dual_ball_extreme_points():
    P = dual_ball_extreme_points(c0(3))
    assert P.shape == (6, 3)
    assert dual_ball_extreme_points(lp(1, 3)).shape == (8, 3)
    assert dual_ball_extreme_points(lp(2, 3)) is None
    with pytest.raises(CapExceeded):
        dual_ball_extreme_points(lp(1, 30))


@given(st.lists(st.floats(-10, 10), min_size=2, max_size=5))
def test_dual_ball_vertices_realise_norm(v):
    v = np.array(v)
    for sp in (c0(len(v)), lp(1, len(v))):
        P = dual_ball_extreme_points(sp)
        assert np.max(P @ v) == pytest.approx(vector_norm(v, sp), abs=1e-12)
