import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from besselnorm.opnorm import NormResult, holder_witness, operator_norm, upper_bounds
from besselnorm.spaces import INF, exponent, pnorm
from oracles import opnorm, opnorm_grid

EXPS = [1, 2, math.inf]
small = st.integers(1, 5)


def matrices(max_side=5):
    return st.tuples(small, small).flatmap(
        lambda s: arrays(np.float64, s, elements=st.floats(-5, 5, allow_subnormal=False))
    )


def _exp(e):
    return INF if math.isinf(e) else e


def test_examples():
    assert operator_norm([[1, 1], [-1, 1]]).value == pytest.approx(math.sqrt(2), abs=1e-12)
    assert operator_norm(np.ones((2, 2))).value == pytest.approx(2, abs=1e-12)
    z = operator_norm(np.zeros((3, 2)), 4, 3)
    assert z.value == 0 and z.exact


@given(matrices(), st.sampled_from(EXPS), st.sampled_from(EXPS))
def test_exact_paths_match_oracle(A, r, p):
    res = operator_norm(A, _exp(r), _exp(p))
    assert res.exact
    assert res.value == pytest.approx(opnorm(A, r, p), rel=1e-9, abs=1e-9)


@given(matrices(), st.sampled_from([1, 1.5, 2, 3, math.inf]), st.sampled_from([1, 1.5, 2, 3, math.inf]))
def test_witnesses_certify_lower_bound(A, r, p):
    res = operator_norm(A, _exp(r), _exp(p))
    f, g = res.witness_f, res.witness_g
    assert pnorm(g, _exp(r)) <= 1 + 1e-9
    assert pnorm(f, exponent(_exp(p)).dual()) <= 1 + 1e-9
    assert f @ A @ g == pytest.approx(res.value, rel=1e-8, abs=1e-10)
    assert res.lower <= res.upper + 1e-12


@given(matrices(), st.sampled_from([1.5, 3, 4]), st.sampled_from([1.5, 3, 4]))
def test_upper_bounds_are_valid(A, r, p):
    """Every listed upper bound dominates a dense lower bound."""
    res = operator_norm(A, r, p)
    ub = upper_bounds(np.asarray(A), exponent(r), exponent(p))
    for name, v in ub.items():
        assert v >= res.lower * (1 - 1e-9) - 1e-12, name


def test_grid_oracle_two_columns(rng):
    for _ in range(20):
        A = rng.standard_normal((3, 2))
        for r, p in [(3, 4), (1.5, 1.5), (4, 3), (2, 3)]:
            res = operator_norm(A, r, p)
            grid = opnorm_grid(A, r, p)
            assert res.value >= grid - 1e-9
            assert res.upper >= grid - 1e-9
            # the multistart lower end is close to the sup on 2-d inputs
            assert res.value == pytest.approx(grid, rel=1e-6)


def test_monomial_closed_form():
    A = np.diag([3.0, -4.0])
    assert operator_norm(A, 3, 2).value == pytest.approx((3**6 + 4**6) ** (1 / 6))
    assert operator_norm(A, 2, 3).value == pytest.approx(4)
    assert operator_norm(A, 3, 2).exact


def test_nonnegative_shortcut():
    A = np.array([[1.0, 2.0], [0.5, 0.0]])
    res = operator_norm(A, INF, 3)
    assert res.exact and res.method == "nonnegative-ones"
    assert res.value == pytest.approx(opnorm(A, math.inf, 3))


def test_non_exact_is_bracket(rng):
    A = rng.standard_normal((4, 4))
    res = operator_norm(A, 3, 1.5)
    assert not res.exact
    assert res.certificate == {"bracket": [res.lower, res.upper]}
    assert res.value == res.lower


def test_cap_falls_back_to_bracket(rng):
    A = rng.standard_normal((3, 6))
    res = operator_norm(A, INF, 3, cap=4)
    assert "cap-exceeded" in res.method
    assert res.lower <= opnorm(A, math.inf, 3) + 1e-12 <= res.upper + 1e-9


def test_deterministic_given_seed(rng):
    A = rng.standard_normal((4, 5))
    a = operator_norm(A, 3, 1.5, seed=7)
    b = operator_norm(A, 3, 1.5, seed=7)
    assert a.to_json() == b.to_json()


def test_holder_witness_examples():
    np.testing.assert_allclose(holder_witness([3, 4], 2), [0.6, 0.8])
    np.testing.assert_allclose(holder_witness([1, 2], INF), [0, 1])
    np.testing.assert_allclose(holder_witness([0, 0], 3), [0, 0])
    with pytest.raises(ValueError):
        holder_witness([-1, 2], 2)


@given(
    arrays(np.float64, st.integers(1, 6), elements=st.floats(0, 100, allow_subnormal=False)),
    st.sampled_from([1, 1.25, 2, 3, 7, INF]),
)
def test_holder_witness_attains(c, p):
    f = holder_witness(c, p)
    assert np.all(f >= 0)
    assert pnorm(f, exponent(p).dual()) <= 1 + 1e-10
    assert c @ f == pytest.approx(pnorm(c, p), rel=1e-10, abs=1e-10)


def test_normresult_json():
    r = NormResult.make_exact(2.0, [1.0], [1.0], "svd")
    assert r.to_json()["certificate"] == "exact"
    b = NormResult.bracket(1.0, 1.5)
    assert b.to_json()["certificate"] == {"bracket": [1.0, 1.5]}
    assert b.value == 1.0
