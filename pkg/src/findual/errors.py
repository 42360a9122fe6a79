"""Exception hierarchy.

Precondition violations (maths-level) all derive from PreconditionError so the
CLI can map them to a single exit code; malformed input is a separate branch.
"""


class FindualError(Exception):
    pass


class PreconditionError(FindualError):
    """A documented operation precondition does not hold."""


class OrderUnavailableError(PreconditionError):
    """No primitive n-th root of unity exists in the requested field."""


class ZeroPolynomialError(PreconditionError):
    pass


class NotSplitError(PreconditionError):
    """Over Q a needed minimal polynomial has no complete linear factorization."""


class CharacteristicTooSmallError(PreconditionError):
    """Radical computation needs char 0 or p > dim."""


class NotAnIdealError(PreconditionError):
    pass


class ImproperIdealError(PreconditionError):
    """The ideal contains the unit."""


class CyclicQuiverError(PreconditionError):
    pass


class BadParamsError(PreconditionError):
    pass


class NotInjectiveError(PreconditionError):
    pass


class NotACoalgebraMapError(PreconditionError):
    pass


class NotAnAutomorphismError(PreconditionError):
    pass


class NotAModuleAlgebraError(PreconditionError):
    def __init__(self, axiom, witness=None):
        super().__init__(f"module-algebra axiom failed: {axiom} (witness {witness})")
        self.axiom = axiom
        self.witness = witness


class InvalidInputError(PreconditionError):
    """A value failed its own structural validation."""


class InvalidTwistError(PreconditionError):
    pass


class InvalidCotwistError(PreconditionError):
    pass


class InvalidBialgebraError(PreconditionError):
    pass


class NotAzumayaError(PreconditionError):
    """Requested fiber lies on a coordinate axis (cd = 0)."""


class GradingError(PreconditionError):
    """Truncation level incompatible with the Z/n grading."""


class SchemaMismatchError(FindualError):
    """A JSON document does not match the expected schema."""


class UsageError(FindualError):
    """Bad command-line flags (distinct from mathematical preconditions)."""
