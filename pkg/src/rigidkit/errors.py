"""Exception types shared across the package."""


class RigidkitError(Exception):
    """Base class for all errors raised by rigidkit."""


class SizeMismatch(RigidkitError):
    pass


class NotNilpotent(RigidkitError):
    pass


class NotInGroup(RigidkitError):
    pass


class UnknownRoot(RigidkitError):
    pass


class ParseError(RigidkitError):
    pass


class NotRegular(RigidkitError):
    pass


class DegeneratePlane(RigidkitError):
    pass


class ShapeMismatch(RigidkitError):
    pass


class ZeroParameter(RigidkitError):
    pass


class OutOfRange(RigidkitError):
    pass


class NotOnSphere(RigidkitError):
    pass


class VariantUnsupported(RigidkitError):
    pass


class OppositeRoots(RigidkitError):
    pass


class DecompositionResidual(RigidkitError):
    pass


class UnknownSuite(RigidkitError):
    pass


class SideConditionViolated(RigidkitError):
    pass


class PairingMismatch(RigidkitError):
    pass


class NoSolution(RigidkitError):
    pass


class CertificationError(RigidkitError):
    """An internal consistency check that should always pass did not."""
