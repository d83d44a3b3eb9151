"""Batched points whose coordinates are affine-plus-sinusoid functions of q.

Every joint point of the modular chain (and of the SCARA reference arm) has
Cartesian coordinates of the form

    p(q) = const + linear @ q + sum_t u_t * sin(a_t . q) + w_t * cos(a_t . q)

with constant 3-vectors u_t, w_t and constant angle rows a_t. Positions,
Jacobians, and the (exact) second derivatives all follow in closed form,
which is what makes the analytic velocity/acceleration and mass-matrix
derivative paths cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def _frozen(a, shape=None) -> np.ndarray:
    out = np.array(a, dtype=float)
    if shape is not None and out.shape != shape:
        raise ValueError(f"expected shape {shape}, got {out.shape}")
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class SinusoidPoints:
    """A batch of P points over an n-dimensional joint vector.

    Arrays:
        angles:   (T, n) rows a_t mapping q to sinusoid phases
        const:    (P, 3)
        linear:   (P, 3, n)
        sin_coef: (P, 3, T) 3-vectors u_t per point
        cos_coef: (P, 3, T) 3-vectors w_t per point
    """

    angles: np.ndarray
    const: np.ndarray
    linear: np.ndarray
    sin_coef: np.ndarray
    cos_coef: np.ndarray

    def __post_init__(self):
        angles = _frozen(self.angles)
        t, n = angles.shape
        const = _frozen(self.const)
        p = const.shape[0]
        object.__setattr__(self, "angles", angles)
        object.__setattr__(self, "const", _frozen(self.const, (p, 3)))
        object.__setattr__(self, "linear", _frozen(self.linear, (p, 3, n)))
        object.__setattr__(self, "sin_coef", _frozen(self.sin_coef, (p, 3, t)))
        object.__setattr__(self, "cos_coef", _frozen(self.cos_coef, (p, 3, t)))

    @property
    def count(self) -> int:
        return self.const.shape[0]

    @property
    def dof(self) -> int:
        return self.angles.shape[1]

    def _phases(self, q: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        phi = self.angles @ q
        return np.sin(phi), np.cos(phi)

    def positions(self, q) -> np.ndarray:
        """(P, 3) positions at joint vector q."""
        q = np.asarray(q, dtype=float)
        s, c = self._phases(q)
        return self.const + self.linear @ q + self.sin_coef @ s + self.cos_coef @ c

    def jacobians(self, q) -> np.ndarray:
        """(P, 3, n) position Jacobians d p / d q."""
        q = np.asarray(q, dtype=float)
        s, c = self._phases(q)
        # d/dq_j of u_t sin(a_t.q) + w_t cos(a_t.q) = (u_t c_t - w_t s_t) a_tj
        d = self.sin_coef * c - self.cos_coef * s
        return self.linear + np.einsum("pxt,tj->pxj", d, self.angles)

    def second_derivatives(self, q) -> np.ndarray:
        """(P, 3, n, n) exact second derivatives d^2 p / dq_j dq_k."""
        q = np.asarray(q, dtype=float)
        s, c = self._phases(q)
        g = -self.sin_coef * s - self.cos_coef * c
        return np.einsum("pxt,tj,tk->pxjk", g, self.angles, self.angles)

    def velocities(self, q, qd) -> np.ndarray:
        """(P, 3) velocities: J(q) @ qd."""
        return self.jacobians(q) @ np.asarray(qd, dtype=float)

    def accelerations(self, q, qd, qdd) -> np.ndarray:
        """(P, 3) accelerations: J @ qdd + qd^T H qd."""
        qd = np.asarray(qd, dtype=float)
        qdd = np.asarray(qdd, dtype=float)
        h = self.second_derivatives(q)
        return self.jacobians(q) @ qdd + np.einsum("pxjk,j,k->px", h, qd, qd)

    def select(self, indices) -> "SinusoidPoints":
        """Subset of points, in the given order."""
        idx = list(indices)
        return SinusoidPoints(
            angles=self.angles,
            const=self.const[idx],
            linear=self.linear[idx],
            sin_coef=self.sin_coef[idx],
            cos_coef=self.cos_coef[idx],
        )


def combine(points: SinusoidPoints, weights: np.ndarray) -> SinusoidPoints:
    """Affine combinations of points: row i of weights (W, P) gives one new point.

    Coordinates are linear in the coefficient arrays, so weighted sums of
    points (midpoints, offsets between points) stay in closed form.
    """
    w = np.asarray(weights, dtype=float)
    return SinusoidPoints(
        angles=points.angles,
        const=w @ points.const,
        linear=np.einsum("wp,pxn->wxn", w, points.linear),
        sin_coef=np.einsum("wp,pxt->wxt", w, points.sin_coef),
        cos_coef=np.einsum("wp,pxt->wxt", w, points.cos_coef),
    )
