"""Topology and parameters of the 7-DOF modular rehabilitation arm.

The arm is a serial chain of 16 labeled joint points (letters O and A..T,
skipping I/J/K/L, which the labeling convention leaves unused). O is the
fixed ground reference; the seven pin-motor joints A, C, E, G, M, P, R
drive the angles theta_1..theta_7 and the seven fixed joints B, D, F, H,
N, Q, S are rigid couplings. Fifteen geometric offsets l1..l15 define the
chain; l1 belongs to the fixed ground link and l2..l15 to the 14 moving
links.

Everything here is an immutable value object: validate once, then share
freely across threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import (
    BadIndexError,
    InvalidProfileError,
    UnknownProfileError,
    Violation,
)

NUM_DOF = 7
NUM_LENGTHS = 15
NUM_MOVING_LINKS = 14


class JointPoint(enum.Enum):
    """The 16 labeled joint points of the chain."""

    O = "O"
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"
    H = "H"
    M = "M"
    N = "N"
    P = "P"
    Q = "Q"
    R = "R"
    S = "S"
    T = "T"

    def __str__(self) -> str:
        return self.value


#: Chain order used everywhere a full set of points is produced.
POINT_ORDER: tuple[JointPoint, ...] = tuple(JointPoint)

#: Actuated joints, in DOF order: PIN_MOTOR_JOINTS[k-1] drives theta_k.
PIN_MOTOR_JOINTS: tuple[JointPoint, ...] = (
    JointPoint.A,
    JointPoint.C,
    JointPoint.E,
    JointPoint.G,
    JointPoint.M,
    JointPoint.P,
    JointPoint.R,
)

#: Rigid couplings (no actuation, no state).
FIXED_JOINTS: tuple[JointPoint, ...] = (
    JointPoint.B,
    JointPoint.D,
    JointPoint.F,
    JointPoint.H,
    JointPoint.N,
    JointPoint.Q,
    JointPoint.S,
)


class JointKind(enum.Enum):
    PIN_MOTOR = "pin-motor"
    FIXED = "fixed"


def joint_kind(point: JointPoint) -> JointKind | None:
    """Kind of a joint point; None for the ground reference O."""
    if point is JointPoint.O:
        return None
    if point in PIN_MOTOR_JOINTS:
        return JointKind.PIN_MOTOR
    return JointKind.FIXED


# Rotation axes of the seven DOFs, inferred from the planes of motion of the
# canonical position equations: each joint moves its link in a fixed
# coordinate plane, so the axis is the plane normal.
_AXES = np.array(
    [
        [0.0, 0.0, 1.0],  # k=1: A->B sweeps the x-y plane
        [1.0, 0.0, 0.0],  # k=2: C->D sweeps the y-z plane
        [0.0, 1.0, 0.0],  # k=3: E->G sweeps the x-z plane
        [0.0, 1.0, 0.0],  # k=4: G->M sweeps the x-z plane
        [0.0, 1.0, 0.0],  # k=5: M->N sweeps the x-z plane
        [0.0, 0.0, 1.0],  # k=6: P->Q sweeps the x-y plane
        [1.0, 0.0, 0.0],  # k=7: R->S sweeps the y-z plane
    ]
)
_AXES.flags.writeable = False


def joint_axis(k: int) -> np.ndarray:
    """Unit rotation axis of DOF k (1-based, 1..7)."""
    if not 1 <= int(k) <= NUM_DOF or int(k) != k:
        raise BadIndexError(f"DOF index must be an integer in 1..7, got {k!r}")
    return _AXES[int(k) - 1].copy()


def _readonly(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=float)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class JointState:
    """Angles, rates, and accelerations of the seven actuated joints (rad, rad/s, rad/s^2)."""

    theta: np.ndarray
    omega: np.ndarray
    alpha: np.ndarray

    def __post_init__(self):
        for name in ("theta", "omega", "alpha"):
            v = _readonly(getattr(self, name))
            if v.shape != (NUM_DOF,):
                raise ValueError(f"{name} must have shape ({NUM_DOF},), got {v.shape}")
            if not np.all(np.isfinite(v)):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, v)

    @classmethod
    def zeros(cls) -> "JointState":
        z = np.zeros(NUM_DOF)
        return cls(z, z.copy(), z.copy())

    @classmethod
    def of(cls, theta=0.0, omega=0.0, alpha=0.0) -> "JointState":
        """Build a state from scalars or 7-vectors (scalars broadcast)."""
        full = lambda v: np.full(NUM_DOF, float(v)) if np.ndim(v) == 0 else np.asarray(v, dtype=float)
        return cls(full(theta), full(omega), full(alpha))


@dataclass(frozen=True)
class LinkLengths:
    """The fifteen geometric offsets l1..l15, in meters."""

    values: np.ndarray

    def __post_init__(self):
        v = _readonly(self.values)
        if v.shape != (NUM_LENGTHS,):
            raise ValueError(f"expected {NUM_LENGTHS} lengths, got shape {v.shape}")
        object.__setattr__(self, "values", v)

    def l(self, i: int) -> float:
        """Length l_i, 1-based as in the chain's labeling."""
        if not 1 <= i <= NUM_LENGTHS:
            raise BadIndexError(f"length index must be in 1..{NUM_LENGTHS}, got {i}")
        return float(self.values[i - 1])


class InertiaModel(enum.Enum):
    """Mass distribution of one moving link."""

    UNIFORM_SLENDER_ROD = "uniform_slender_rod"
    POINT_MASS_AT_DISTAL_END = "point_mass_at_distal_end"


#: Moving-link segment ids: segment i is the straight rod carrying length l_i.
MOVING_SEGMENTS: tuple[int, ...] = tuple(range(2, NUM_LENGTHS + 1))

#: DOF that rotates each moving segment (None: the rod translates only).
SEGMENT_DOF: dict[int, int | None] = {
    2: 1,
    3: None,
    4: 2,
    5: None,
    6: 3,
    7: 3,
    8: 4,
    9: 4,
    10: 5,
    11: None,
    12: 6,
    13: None,
    14: 7,
    15: None,
}


@dataclass(frozen=True)
class LinkInertia:
    """Mass model of one moving link (the rod carrying length l_segment)."""

    segment: int
    mass: float
    model: InertiaModel = InertiaModel.UNIFORM_SLENDER_ROD

    def __post_init__(self):
        if self.segment not in MOVING_SEGMENTS:
            raise BadIndexError(
                f"segment must be one of {MOVING_SEGMENTS}, got {self.segment}"
            )


@dataclass(frozen=True)
class AnthropometricProfile:
    """Named size class binding link lengths, link masses, and gravity."""

    name: str
    lengths: LinkLengths
    inertias: tuple[LinkInertia, ...]
    gravity: np.ndarray = field(default_factory=lambda: np.array([0.0, 0.0, -9.81]))

    def __post_init__(self):
        g = _readonly(self.gravity)
        if g.shape != (3,):
            raise ValueError(f"gravity must be a 3-vector, got shape {g.shape}")
        object.__setattr__(self, "gravity", g)
        object.__setattr__(self, "inertias", tuple(self.inertias))

    def mass_of(self, segment: int) -> float:
        for li in self.inertias:
            if li.segment == segment:
                return li.mass
        return 0.0

    def total_mass(self) -> float:
        return float(sum(li.mass for li in self.inertias))

    def with_gravity(self, gravity) -> "AnthropometricProfile":
        return replace(self, gravity=np.asarray(gravity, dtype=float))


@dataclass(frozen=True)
class FrictionParameters:
    """Per-DOF joint friction (viscous + smoothed Coulomb) and link-skin drag.

    The Coulomb term is smoothed as c_k * tanh(omega_k / smoothing_eps) to
    keep the dynamics Lipschitz for fixed-step integration.
    """

    viscous_joint: np.ndarray
    coulomb_joint: np.ndarray
    viscous_skin: np.ndarray
    smoothing_eps: float = 1e-3

    def __post_init__(self):
        for name in ("viscous_joint", "coulomb_joint", "viscous_skin"):
            v = _readonly(getattr(self, name))
            if v.shape != (NUM_DOF,):
                raise ValueError(f"{name} must have shape ({NUM_DOF},), got {v.shape}")
            object.__setattr__(self, name, v)

    @classmethod
    def zero(cls, smoothing_eps: float = 1e-3) -> "FrictionParameters":
        z = np.zeros(NUM_DOF)
        return cls(z, z.copy(), z.copy(), smoothing_eps)


@dataclass(frozen=True)
class InteractionWrenches:
    """Cuff forces and disturbance torque acting on the chain.

    gamma1/gamma2 are pure 3-vector forces applied at labeled joint points
    (defaults: the elbow cuff at M and the wrist cuff at T); lambda_u is a
    per-DOF disturbance torque. All default to zero.
    """

    gamma1: np.ndarray = field(default_factory=lambda: np.zeros(3))
    gamma1_point: JointPoint = JointPoint.M
    gamma2: np.ndarray = field(default_factory=lambda: np.zeros(3))
    gamma2_point: JointPoint = JointPoint.T
    lambda_u: np.ndarray = field(default_factory=lambda: np.zeros(NUM_DOF))

    def __post_init__(self):
        for name, shape in (("gamma1", (3,)), ("gamma2", (3,)), ("lambda_u", (NUM_DOF,))):
            v = _readonly(getattr(self, name))
            if v.shape != shape:
                raise ValueError(f"{name} must have shape {shape}, got {v.shape}")
            object.__setattr__(self, name, v)
        for name in ("gamma1_point", "gamma2_point"):
            if not isinstance(getattr(self, name), JointPoint):
                raise ValueError(f"{name} must be a JointPoint label")

    @classmethod
    def none(cls) -> "InteractionWrenches":
        return cls()

    def is_zero(self) -> bool:
        return (
            not self.gamma1.any() and not self.gamma2.any() and not self.lambda_u.any()
        )


# Default profiles: a plausible human upper-limb scale, fully overridable via
# configuration. Lengths are a scaled base vector; the total moving mass is
# spread over the moving rods proportionally to their length.
BASE_LENGTHS = np.array(
    [0.05, 0.10, 0.04, 0.12, 0.03, 0.06, 0.06, 0.08, 0.08, 0.10, 0.03, 0.12, 0.03, 0.08, 0.04]
)
BASE_LENGTHS.flags.writeable = False

_PROFILE_SCALE = {"small": 0.8, "medium": 1.0, "large": 1.2}
_PROFILE_MASS = {"small": 1.2, "medium": 2.0, "large": 3.0}

BUILTIN_PROFILE_NAMES: tuple[str, ...] = ("small", "medium", "large")


def proportional_inertias(
    lengths: LinkLengths,
    total_mass: float,
    model: InertiaModel = InertiaModel.UNIFORM_SLENDER_ROD,
) -> tuple[LinkInertia, ...]:
    """Spread total_mass over the moving rods proportionally to rod length."""
    moving = np.array([lengths.l(i) for i in MOVING_SEGMENTS])
    weights = moving / moving.sum()
    return tuple(
        LinkInertia(seg, float(total_mass * w), model)
        for seg, w in zip(MOVING_SEGMENTS, weights)
    )


def builtin_profile(name: str) -> AnthropometricProfile:
    """One of the three default size classes: small, medium, or large."""
    if name not in _PROFILE_SCALE:
        raise UnknownProfileError(
            f"unknown profile {name!r}; expected one of {BUILTIN_PROFILE_NAMES}"
        )
    lengths = LinkLengths(_PROFILE_SCALE[name] * BASE_LENGTHS)
    inertias = proportional_inertias(lengths, _PROFILE_MASS[name])
    return AnthropometricProfile(name=name, lengths=lengths, inertias=inertias)


def profile_violations(
    profile: AnthropometricProfile,
    friction: FrictionParameters | None = None,
) -> list[Violation]:
    """Collect every invariant violation (empty list means valid)."""
    violations: list[Violation] = []
    if not profile.name:
        violations.append(Violation("EmptyName", "name", "profile name must be nonempty"))
    for i in range(1, NUM_LENGTHS + 1):
        li = profile.lengths.values[i - 1]
        if not np.isfinite(li):
            violations.append(Violation("NonFinite", f"l{i}", f"l{i} is not finite"))
        elif li <= 0.0:
            violations.append(
                Violation("NonPositiveLength", str(i), f"l{i} = {li} must be > 0")
            )
    seen = set()
    for li in profile.inertias:
        if li.segment in seen:
            violations.append(
                Violation("DuplicateSegment", str(li.segment), "segment listed twice")
            )
        seen.add(li.segment)
        if not np.isfinite(li.mass):
            violations.append(Violation("NonFinite", f"mass[{li.segment}]", "mass is not finite"))
        elif li.mass < 0.0:
            violations.append(
                Violation(
                    "NegativeMass", str(li.segment), f"mass {li.mass} of rod l{li.segment} must be >= 0"
                )
            )
    if profile.total_mass() <= 0.0:
        violations.append(
            Violation("ZeroTotalMass", "inertias", "at least one link must have mass > 0")
        )
    if not np.all(np.isfinite(profile.gravity)):
        violations.append(Violation("NonFinite", "gravity", "gravity must be finite"))
    if friction is not None:
        for name in ("viscous_joint", "coulomb_joint", "viscous_skin"):
            v = getattr(friction, name)
            if np.any(~np.isfinite(v)) or np.any(v < 0.0):
                violations.append(
                    Violation("NegativeFriction", name, f"{name} must be finite and >= 0")
                )
        if not (np.isfinite(friction.smoothing_eps) and friction.smoothing_eps > 0.0):
            violations.append(
                Violation(
                    "BadSmoothingEps",
                    "smoothing_eps",
                    f"smoothing_eps = {friction.smoothing_eps} must be > 0",
                )
            )
    return violations


def validate_profile(
    profile: AnthropometricProfile,
    friction: FrictionParameters | None = None,
) -> AnthropometricProfile:
    """Return the profile unchanged if valid, else raise with all violations."""
    violations = profile_violations(profile, friction)
    if violations:
        raise InvalidProfileError(violations)
    return profile
