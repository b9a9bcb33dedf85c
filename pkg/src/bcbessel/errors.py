"""Exception hierarchy shared by all bcbessel modules."""


class BCBesselError(Exception):
    """Base class for all library errors (CLI maps these to exit code 1)."""


class ZeroDivisorError(BCBesselError):
    """Division (or inversion) by a zero divisor or zero."""


class BranchError(BCBesselError):
    """Power of a nonpositive-real component with a non-integer exponent."""


class PoleError(BCBesselError):
    """Gamma evaluated at a nonpositive integer.

    ``components`` records which idempotent components hit a pole
    (subset of {1, 2}); empty for plain complex-gamma calls.
    """

    def __init__(self, msg, components=()):
        super().__init__(msg)
        self.components = tuple(components)


class DomainError(BCBesselError):
    """Argument outside the domain an operation supports."""


class NonIntegerError(BCBesselError):
    """An order that must have nonnegative-integer components does not."""


class PreconditionError(BCBesselError):
    """A stated parameter inequality of an integral representation fails."""


class StripError(BCBesselError):
    """A transform evaluation point violates the admissible strip."""


class NonConvergenceError(BCBesselError):
    """Panel quadrature failed to converge within the panel budget."""


class TruncationError(BCBesselError):
    """Fock-space truncation too small for the requested state."""
