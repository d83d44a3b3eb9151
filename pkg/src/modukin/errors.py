"""Exception types shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


class ModukinError(Exception):
    """Base class for all errors raised by this package."""


class BadIndexError(ModukinError):
    """A joint/DOF index is outside 1..7."""


class UnknownProfileError(ModukinError):
    """Requested built-in profile name does not exist."""


@dataclass(frozen=True)
class Violation:
    """One invariant violation found while validating parameters.

    code is one of: NonPositiveLength, NegativeMass, ZeroTotalMass,
    BadSmoothingEps, NonFinite. subject identifies the offending entry
    (a length index, a link segment id, or a field name).
    """

    code: str
    subject: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}({self.subject}): {self.message}"


class InvalidProfileError(ModukinError):
    """Profile/friction parameters violate their invariants.

    Carries the complete list of violations, not just the first one.
    """

    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class IllPosedError(ModukinError):
    """Dynamics requested for a chain with zero total moving mass."""


class SingularMassError(ModukinError):
    """Mass matrix condition number exceeds 1e12; inertia setup is degenerate."""


class OutOfRangeError(ModukinError):
    """Trajectory sampled outside its valid time range."""


class ConfigError(ModukinError):
    """Configuration file is malformed or contains unknown keys."""


class ConstraintViolatedError(ModukinError):
    """Grasp target acceleration has a nonzero vertical component."""


class NegativeNormalError(ModukinError):
    """A jaw normal force is negative (jaws can push, not pull)."""


class GraspInfeasibleError(ModukinError):
    """No jaw force set satisfies the friction cone within the actuator cap."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)
