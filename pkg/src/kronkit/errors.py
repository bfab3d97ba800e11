"""Exception types shared across the package."""


class KronkitError(Exception):
    """Base class for every error raised by kronkit."""


class PartitionError(KronkitError, ValueError):
    """Invalid partition or composition data, or unparseable partition text."""


class SizeMismatchError(KronkitError, ValueError):
    """Operands are partitions of different integers."""


class ShapeError(KronkitError, ValueError):
    """A shape or length precondition fails, so the operation does not apply."""


class ExactnessError(KronkitError, ArithmeticError):
    """An exact integer division left a remainder.

    Inner products and coefficient sums here are always exact when the inputs
    are genuine characters, so this signals an internal bug, not bad input.
    """
