"""Slow reference projections used only to check the fast paths.

Nothing here shares code with :mod:`hwproj.core`: the parity polytope is
described by its explicit half-spaces and projected onto with Dykstra's
algorithm, and the simplex projection is found by bisection on the threshold.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

DEFAULT_TOL = 1e-9
DEFAULT_MAX_ITER = 10**6


class OracleDidNotConverge(RuntimeError):
    def __init__(self, iterations: int, step: float):
        super().__init__(f"Dykstra did not converge after {iterations} cycles (last step {step:.3e})")
        self.iterations = iterations
        self.step = step


@dataclass(frozen=True)
class ParityInequality:
    """``sum_{i in S} x_i - sum_{i not in S} x_i <= |S| - 1`` for odd ``|S|``."""

    subset: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.subset):
            raise ValueError("subset must be a 0/1 indicator")
        if sum(self.subset) % 2 != 1:
            raise ValueError("subset must have odd cardinality")

    @property
    def bound(self) -> int:
        return sum(self.subset) - 1

    @property
    def normal(self) -> np.ndarray:
        return 2.0 * np.asarray(self.subset, dtype=float) - 1.0

    def slack(self, x) -> np.ndarray:
        return self.bound - np.asarray(x, dtype=float) @ self.normal


def enumerate_parity_inequalities(d: int) -> list[ParityInequality]:
    if not 2 <= d <= 16:
        raise ValueError(f"dimension must be in [2, 16], got {d}")
    return [
        ParityInequality(bits)
        for bits in itertools.product((0, 1), repeat=d)
        if sum(bits) % 2 == 1
    ]


def parity_violation(x, d: int | None = None) -> np.ndarray:
    """Largest parity-inequality violation (positive means infeasible), per row."""
    x = np.asarray(x, dtype=float)
    ineqs = enumerate_parity_inequalities(d or x.shape[-1])
    normals = np.stack([q.normal for q in ineqs])
    bounds = np.array([q.bound for q in ineqs], dtype=float)
    return np.max(x @ normals.T - bounds, axis=-1)


@dataclass
class DykstraResult:
    x: np.ndarray
    iterations: np.ndarray
    last_step: np.ndarray


def dykstra_pp(v, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> DykstraResult:
    """Dykstra's alternating projections onto the cube and every parity half-space.

    Rows are iterated together and retired once a full cycle moves the
    iterate by less than ``tol`` (summed over every sub-step of the cycle).
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    v = np.asarray(v, dtype=float)
    single = v.ndim == 1
    v = np.atleast_2d(v)
    n, d = v.shape
    if not 2 <= d <= 10:
        raise ValueError(f"oracle supports 2 <= d <= 10, got {d}")
    ineqs = enumerate_parity_inequalities(d)
    normals = np.stack([q.normal for q in ineqs])
    bounds = np.array([q.bound for q in ineqs], dtype=float)

    x = v.copy()
    cube_corr = np.zeros_like(x)
    # half-space corrections are multiples of the (fixed) normal; keep the scalar
    lam = np.zeros((len(ineqs), n))
    iters = np.zeros(n, dtype=int)
    steps = np.full(n, np.inf)
    active = np.arange(n)

    for it in range(1, max_iter + 1):
        xa = x[active]
        ca = cube_corr[active]
        la = lam[:, active]
        moved = np.zeros(len(active))

        y = xa + ca
        new = np.clip(y, 0.0, 1.0)
        ca = y - new
        moved += np.linalg.norm(new - xa, axis=1)
        xa = new
        for k in range(len(ineqs)):
            a = normals[k]
            y = xa + la[k][:, None] * a
            excess = np.maximum(y @ a - bounds[k], 0.0) / d
            new = y - excess[:, None] * a
            moved += np.linalg.norm(new - xa, axis=1)
            la[k] = excess
            xa = new

        x[active] = xa
        cube_corr[active] = ca
        lam[:, active] = la
        iters[active] = it
        steps[active] = moved
        active = active[moved >= tol]
        if active.size == 0:
            break
    else:
        raise OracleDidNotConverge(max_iter, float(steps.max()))

    if single:
        return DykstraResult(x[0], iters[:1], steps[:1])
    return DykstraResult(x, iters, steps)


def dykstra_pp_oracle(v, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> np.ndarray:
    return dykstra_pp(v, tol, max_iter).x


def bisection_simplex_oracle(v, tol: float = 1e-12) -> np.ndarray:
    """Simplex projection by bisecting ``tau`` in ``sum(max(v - tau, 0)) = 1``."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    v = np.asarray(v, dtype=float)
    lo = v.min(axis=-1, keepdims=True) - 1.0
    hi = v.max(axis=-1, keepdims=True)
    # mass(tau) is decreasing: mass(lo) >= 1, mass(hi) = 0
    while np.any(hi - lo > tol):
        mid = 0.5 * (lo + hi)
        if np.all((mid <= lo) | (mid >= hi)):
            break
        mass = np.maximum(v - mid, 0.0).sum(axis=-1, keepdims=True)
        big = mass > 1.0
        lo = np.where(big, mid, lo)
        hi = np.where(big, hi, mid)
    return np.maximum(v - 0.5 * (lo + hi), 0.0)
