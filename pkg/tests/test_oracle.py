import numpy as np
import pytest

from hwproj.core import project_simplex
from hwproj.oracle import (
    OracleDidNotConverge,
    ParityInequality,
    bisection_simplex_oracle,
    dykstra_pp,
    dykstra_pp_oracle,
    enumerate_parity_inequalities,
    parity_violation,
)


def test_inequality_count():
    for d in range(2, 11):
        assert len(enumerate_parity_inequalities(d)) == 2 ** (d - 1)


def test_inequality_fields():
    q = ParityInequality((1, 1, 1))
    assert q.bound == 2
    assert q.normal.tolist() == [1, 1, 1]
    assert q.slack([1, 1, 0]) == 0
    assert q.slack([1, 1, 1]) == -1
    with pytest.raises(ValueError):
        ParityInequality((1, 1, 0))
    with pytest.raises(ValueError):
        ParityInequality((2, 1, 0))


def test_even_vertices_feasible_odd_infeasible():
    import itertools

    for bits in itertools.product((0, 1), repeat=5):
        viol = parity_violation(np.array(bits, float))
        assert (viol <= 0) == (sum(bits) % 2 == 0)


def test_dimension_limits():
    with pytest.raises(ValueError):
        enumerate_parity_inequalities(1)
    with pytest.raises(ValueError):
        dykstra_pp(np.zeros(11))
    with pytest.raises(ValueError):
        dykstra_pp(np.zeros(3), tol=0)


def test_dykstra_hand_examples():
    assert np.allclose(dykstra_pp_oracle([1.0, 1.0, 1.0]), [2 / 3] * 3, atol=1e-7)
    assert np.allclose(dykstra_pp_oracle([0.9, 0.1, 0.05]), [0.65, 0.35, 0.30], atol=1e-7)
    assert np.allclose(dykstra_pp_oracle([0.5, 0.5, 0.5]), [0.5] * 3, atol=1e-12)


def test_dykstra_batched_reports_per_row():
    res = dykstra_pp(np.array([[0.5, 0.5, 0.5], [1.0, 1.0, 1.0]]))
    assert res.x.shape == (2, 3)
    assert res.iterations[0] == 1
    assert res.iterations[1] > 1
    assert np.all(res.last_step < 1e-9)


def test_dykstra_raises_when_capped():
    with pytest.raises(OracleDidNotConverge) as e:
        dykstra_pp([-2.1, 4.01, 1.75, -5.26, 3.12, -3.22], max_iter=5)
    assert e.value.iterations == 5


def test_dykstra_result_feasible():
    rng = np.random.default_rng(1)
    x = 3 * rng.standard_normal((300, 6))
    w = dykstra_pp_oracle(x)
    assert parity_violation(w).max() <= 1e-8
    assert w.min() >= -1e-8 and w.max() <= 1 + 1e-8


def test_bisection_matches_sort_projection():
    rng = np.random.default_rng(2)
    for d in (1, 2, 5, 33):
        x = 5 * rng.standard_normal((500, d))
        assert np.abs(bisection_simplex_oracle(x) - project_simplex(x)).max() <= 1e-10


def test_bisection_huge_values_terminate():
    w = bisection_simplex_oracle([1e15, 0.0, -1e15])
    assert np.allclose(w, [1.0, 0.0, 0.0])


def test_bisection_rejects_bad_tol():
    with pytest.raises(ValueError):
        bisection_simplex_oracle([0.0], tol=-1)
