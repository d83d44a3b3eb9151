"""Closed-form Cartesian kinematics of the 16 labeled joint points.

The chain is modeled the way its coordinate equations are written: each
moving rod rotates in a fixed coordinate plane driven by exactly one joint
angle, and every coordinate of every point is a constant plus a sum of
single-angle sinusoids. Velocities, accelerations, and point Jacobians are
exact derivatives of the position table, never independently transcribed
rate formulas: where transcribed rate expressions disagreed with the
derivative of the position table they were discarded (see CORRECTIONS and
docs/model_notes.md for the variants that were rejected and why).

DOF map: theta_1..theta_3 drive the shoulder module (pins A, C, E),
theta_4 the elbow module (pin G), theta_5..theta_7 the wrist module
(pins M, P, R). Points M and T are the elbow- and wrist-cuff attachment
points used by the interaction-force terms of the dynamics.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chain import NUM_DOF, POINT_ORDER, JointPoint, JointState, LinkLengths
from .sinusoid import SinusoidPoints

#: Row index of each point inside the arrays produced by point_table().
POINT_INDEX: dict[JointPoint, int] = {p: i for i, p in enumerate(POINT_ORDER)}

#: DOFs (1-based) that appear in each point's position formula. Columns of
#: the point Jacobian outside this set are identically zero.
ACTIVE_DOFS: dict[JointPoint, frozenset[int]] = {
    JointPoint.O: frozenset(),
    JointPoint.A: frozenset(),
    JointPoint.B: frozenset({1}),
    JointPoint.C: frozenset({1}),
    JointPoint.D: frozenset({1, 2}),
    JointPoint.E: frozenset({1, 2}),
    JointPoint.F: frozenset({1, 2, 3}),
    JointPoint.G: frozenset({1, 2, 3}),
    JointPoint.H: frozenset({1, 2, 3, 4}),
    JointPoint.M: frozenset({1, 2, 3, 4}),
    JointPoint.N: frozenset({1, 2, 3, 4, 5}),
    JointPoint.P: frozenset({1, 2, 3, 4, 5}),
    JointPoint.Q: frozenset({1, 2, 3, 4, 5, 6}),
    JointPoint.R: frozenset({1, 2, 3, 4, 5, 6}),
    JointPoint.S: frozenset({1, 2, 3, 4, 5, 6, 7}),
    JointPoint.T: frozenset({1, 2, 3, 4, 5, 6, 7}),
}

_X, _Y, _Z = 0, 1, 2


class _Walk:
    """Accumulates coefficient arrays while walking the chain."""

    def __init__(self, n_points: int):
        self.const = np.zeros((n_points, 3))
        self.sin = np.zeros((n_points, 3, NUM_DOF))
        self.cos = np.zeros((n_points, 3, NUM_DOF))
        self._c = np.zeros(3)
        self._s = np.zeros((3, NUM_DOF))
        self._w = np.zeros((3, NUM_DOF))

    def offset(self, axis: int, value: float):
        self._c[axis] += value

    def sin_term(self, axis: int, amplitude: float, dof: int):
        self._s[axis, dof - 1] += amplitude

    def cos_term(self, axis: int, amplitude: float, dof: int):
        self._w[axis, dof - 1] += amplitude

    def snapshot(self, index: int):
        self.const[index] = self._c
        self.sin[index] = self._s
        self.cos[index] = self._w

    def restore(self, index: int):
        self._c = self.const[index].copy()
        self._s = self.sin[index].copy()
        self._w = self.cos[index].copy()


def point_table(lengths: LinkLengths) -> SinusoidPoints:
    """Coefficient table of all 16 points, rows ordered as POINT_ORDER."""
    (l1, l2, l3, l4, l5, l6, l7, l8, l9, l10, l11, l12, l13, l14, l15) = lengths.values
    ix = POINT_INDEX
    w = _Walk(len(POINT_ORDER))

    w.snapshot(ix[JointPoint.O])  # ground reference, identically zero

    w.offset(_X, l1)
    w.snapshot(ix[JointPoint.A])  # shoulder base, fixed

    w.cos_term(_X, -l2, dof=1)  # shoulder yaw rod sweeps the x-y plane
    w.sin_term(_Y, l2, dof=1)
    w.snapshot(ix[JointPoint.B])

    w.offset(_Z, l3)  # riser up to the shoulder-pitch pin
    w.snapshot(ix[JointPoint.C])

    w.cos_term(_Y, l4, dof=2)  # shoulder pitch rod sweeps the y-z plane
    w.sin_term(_Z, l4, dof=2)
    w.snapshot(ix[JointPoint.D])

    w.offset(_X, l5)  # lateral offset to the upper-arm pin
    w.snapshot(ix[JointPoint.E])

    w.sin_term(_X, l6, dof=3)  # upper-arm rod sweeps the x-z plane
    w.cos_term(_Z, l6, dof=3)
    w.snapshot(ix[JointPoint.F])

    w.restore(ix[JointPoint.E])  # G continues the same rod: amplitude l6+l7
    w.sin_term(_X, l6 + l7, dof=3)
    w.cos_term(_Z, l6 + l7, dof=3)
    w.snapshot(ix[JointPoint.G])

    w.cos_term(_X, l8, dof=4)  # elbow rod sweeps the x-z plane
    w.sin_term(_Z, l8, dof=4)
    w.snapshot(ix[JointPoint.H])

    w.restore(ix[JointPoint.G])  # M continues the elbow rod: amplitude l8+l9
    w.cos_term(_X, l8 + l9, dof=4)
    w.sin_term(_Z, l8 + l9, dof=4)
    w.snapshot(ix[JointPoint.M])

    w.sin_term(_X, l10, dof=5)  # forearm rod sweeps the x-z plane
    w.cos_term(_Z, l10, dof=5)
    w.snapshot(ix[JointPoint.N])

    w.offset(_Y, l11)  # lateral offset to the wrist-yaw pin
    w.snapshot(ix[JointPoint.P])

    w.cos_term(_X, l12, dof=6)  # wrist yaw rod sweeps the x-y plane
    w.sin_term(_Y, l12, dof=6)
    w.snapshot(ix[JointPoint.Q])

    w.snapshot(ix[JointPoint.R])  # R is the pin stacked on Q: same coordinates

    w.offset(_Z, l13)  # riser inside the wrist module
    w.cos_term(_Y, l14, dof=7)  # wrist pitch rod sweeps the y-z plane
    w.sin_term(_Z, l14, dof=7)
    w.snapshot(ix[JointPoint.S])

    w.offset(_X, -l15)  # hand plate back-offset
    w.snapshot(ix[JointPoint.T])

    return SinusoidPoints(
        angles=np.eye(NUM_DOF),
        const=w.const,
        linear=np.zeros((len(POINT_ORDER), 3, NUM_DOF)),
        sin_coef=w.sin,
        cos_coef=w.cos,
    )


def riser_top(lengths: LinkLengths) -> SinusoidPoints:
    """The internal anchor R + (0, 0, l13): top of the wrist riser.

    Not a labeled joint point, but the proximal end of the wrist-pitch rod;
    the dynamics needs it to place the l13/l14 rod masses.
    """
    table = point_table(lengths)
    r = table.select([POINT_INDEX[JointPoint.R]])
    const = r.const.copy()
    const[0, _Z] += lengths.l(13)
    return SinusoidPoints(
        angles=r.angles,
        const=const,
        linear=r.linear,
        sin_coef=r.sin_coef,
        cos_coef=r.cos_coef,
    )


def canonical_position(point: JointPoint, theta, lengths: LinkLengths) -> np.ndarray:
    """Cartesian position (m) of one joint point at angles theta."""
    table = point_table(lengths)
    return table.positions(np.asarray(theta, dtype=float))[POINT_INDEX[point]]


def canonical_velocity(point: JointPoint, state: JointState, lengths: LinkLengths) -> np.ndarray:
    """Cartesian velocity (m/s) of one joint point."""
    table = point_table(lengths)
    return table.velocities(state.theta, state.omega)[POINT_INDEX[point]]


def canonical_acceleration(point: JointPoint, state: JointState, lengths: LinkLengths) -> np.ndarray:
    """Cartesian acceleration (m/s^2) of one joint point."""
    table = point_table(lengths)
    return table.accelerations(state.theta, state.omega, state.alpha)[POINT_INDEX[point]]


def point_jacobian(point: JointPoint, theta, lengths: LinkLengths) -> np.ndarray:
    """3x7 position Jacobian of one joint point; column k is dp/dtheta_k.

    Columns for DOFs outside ACTIVE_DOFS[point] are exactly zero.
    """
    table = point_table(lengths)
    return table.jacobians(np.asarray(theta, dtype=float))[POINT_INDEX[point]]


@dataclass(frozen=True)
class PointKinematics:
    """Position/velocity/acceleration triple of one labeled joint point."""

    point: JointPoint
    position: np.ndarray
    velocity: np.ndarray
    acceleration: np.ndarray


def full_pose(state: JointState, lengths: LinkLengths) -> dict[JointPoint, PointKinematics]:
    """Kinematics of all 16 points in one batched pass."""
    table = point_table(lengths)
    pos = table.positions(state.theta)
    vel = table.velocities(state.theta, state.omega)
    acc = table.accelerations(state.theta, state.omega, state.alpha)
    return {
        p: PointKinematics(p, pos[i], vel[i], acc[i])
        for p, i in POINT_INDEX.items()
    }


@dataclass(frozen=True)
class CoordinateCorrection:
    """A rejected variant of one coordinate term, with the geometric reason.

    The position table above is the normative model; these records document
    (machine-readably) the inconsistent variants that were considered and
    why each one cannot be right. Tests re-introduce them to verify that the
    self-check suite catches the resulting derivative mismatches.
    """

    point: JointPoint
    axis: str
    adopted: str
    rejected: str
    reason: str


CORRECTIONS: tuple[CoordinateCorrection, ...] = (
    CoordinateCorrection(
        JointPoint.B,
        "x",
        "-l2*cos(theta1)",
        "-l2*cos(theta2)",
        "B is the far end of the rod pinned at A and driven by theta_1 alone; "
        "a theta_2 phase would break the constant distance |B - A| = l2 and "
        "give B an x-rate proportional to omega_2 while its y-rate depends "
        "only on omega_1. Applies to the x coordinate of every point distal "
        "of B as well.",
    ),
    CoordinateCorrection(
        JointPoint.G,
        "y",
        "l4*cos(theta2)",
        "l1*cos(theta2)",
        "G rides on the upper-arm rod, which only moves x and z; its y "
        "offset is inherited unchanged from D/E, whose shoulder-pitch term "
        "has amplitude l4 (chain continuity).",
    ),
    CoordinateCorrection(
        JointPoint.G,
        "z",
        "l4*sin(theta2)",
        "l2*sin(theta2)",
        "Same continuity argument as G's y coordinate: the shoulder-pitch "
        "rod has length l4, so its z contribution is l4*sin(theta2).",
    ),
    CoordinateCorrection(
        JointPoint.H,
        "x",
        "l8*cos(theta4)",
        "l4*cos(theta4)",
        "H sits on the elbow rod at distance l8 from G; |H - G| = l8 must "
        "hold for all theta_4 and H's rates scale with l8, not l4.",
    ),
    CoordinateCorrection(
        JointPoint.N,
        "z",
        "(l6+l7)*cos(theta3)",
        "(l7+l8)*cos(theta3)",
        "Every point distal of G inherits the upper-arm stack's z term with "
        "amplitude l6+l7 (|G - E| = l6+l7); an l7+l8 amplitude would make N "
        "jump relative to its own parent M.",
    ),
    CoordinateCorrection(
        JointPoint.Q,
        "y",
        "l12*sin(theta6)",
        "l12*sin(theta3)",
        "The wrist-yaw rod P->Q is driven by theta_6 alone; a theta_3 phase "
        "would violate |Q - P| = l12 and disagree with the y-rate "
        "l12*omega_6*cos(theta6) obtained by differentiation.",
    ),
)
