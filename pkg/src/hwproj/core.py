"""Exact (double precision) projections onto the unit cube, probability
simplex, l1 ball and parity polytope.

All functions accept a 1-D vector or a batch of vectors stacked along the
leading axes; the projection acts on the last axis.
"""
from __future__ import annotations

import numpy as np


def _as_vectors(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.ndim == 0 or v.shape[-1] < 1:
        raise ValueError("expected a vector with at least one component")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector components must be finite")
    return v


def project_unit_cube(v) -> np.ndarray:
    return np.clip(_as_vectors(v), 0.0, 1.0)


def transform_tf(v, f) -> np.ndarray:
    """Reflect ``v_i -> 1 - v_i`` on the coordinates where ``f_i = 1``."""
    v = np.asarray(v, dtype=float)
    f = np.asarray(f)
    if v.shape[-1] != f.shape[-1]:
        raise ValueError(f"dimension mismatch: {v.shape[-1]} vs {f.shape[-1]}")
    return np.where(f.astype(bool), 1.0 - v, v)


def cut_search(v_hat) -> np.ndarray:
    """Facet indicator for a point of the unit cube.

    Bits are set where ``v_hat_i > 1/2``. If that leaves an even number of
    ones, the coordinate closest to 1/2 is flipped (lowest index on ties) so
    the returned indicator always has odd weight.
    """
    v_hat = np.asarray(v_hat, dtype=float)
    f = (v_hat > 0.5).astype(np.int8)
    even = f.sum(axis=-1) % 2 == 0
    flip = np.argmin(np.abs(0.5 - v_hat), axis=-1)
    hit = np.zeros_like(f)
    np.put_along_axis(hit, flip[..., None], 1, axis=-1)
    return np.where(even[..., None], f ^ hit, f)


def pp_membership_test(v, f) -> np.ndarray | bool:
    """True where the cube projection of ``v`` already lies in the parity polytope.

    ``f`` must come from ``cut_search(project_unit_cube(v))``.
    """
    v = _as_vectors(v)
    inside = np.clip(transform_tf(v, f), 0.0, 1.0).sum(axis=-1) >= 1.0
    return bool(inside) if np.ndim(inside) == 0 else inside


def project_simplex(v) -> np.ndarray:
    """Sort-based projection onto ``{w : w >= 0, sum(w) = 1}``."""
    v = _as_vectors(v)
    d = v.shape[-1]
    mu = -np.sort(-v, axis=-1)
    s = (np.cumsum(mu, axis=-1) - 1.0) / np.arange(1, d + 1)
    # mu_1 > s_1 always holds, so rho >= 1
    rho = d - 1 - np.argmax((mu > s)[..., ::-1], axis=-1)
    threshold = np.take_along_axis(s, rho[..., None], axis=-1)
    return np.maximum(v - threshold, 0.0)


def project_l1_ball(v, radius: float = 1.0) -> np.ndarray:
    if not radius > 0:
        raise ValueError(f"radius must be positive, got {radius}")
    v = _as_vectors(v)
    a = np.abs(v)
    inside = a.sum(axis=-1, keepdims=True) <= radius
    p = radius * project_simplex(a / radius)
    return np.where(inside, v, np.sign(v) * p)


def project_parity_polytope(v) -> np.ndarray:
    """Euclidean projection onto the convex hull of even-weight binary vectors.

    Clamp to the cube, pick a facet with ``cut_search``; if the clamped point
    satisfies the facet inequality it is the answer, otherwise reflect the
    facet onto the simplex, project there and reflect back.
    """
    v = _as_vectors(v)
    if v.shape[-1] < 2:
        raise ValueError("parity polytope projection needs dimension >= 2")
    v_hat = np.clip(v, 0.0, 1.0)
    f = cut_search(v_hat)
    v_tilde = transform_tf(v, f)
    inside = np.clip(v_tilde, 0.0, 1.0).sum(axis=-1, keepdims=True) >= 1.0
    on_facet = transform_tf(project_simplex(v_tilde), f)
    # 1 - w can round one ulp past the cube
    return np.where(inside, v_hat, np.clip(on_facet, 0.0, 1.0))
