"""Exception hierarchy.  Names follow the contract's error vocabulary."""


class TameBrauerError(ValueError):
    """Base class for every library error."""


class DimensionMismatch(TameBrauerError):
    pass


class RankDeficient(TameBrauerError):
    pass


class NotASublattice(TameBrauerError):
    pass


class NotAMember(TameBrauerError):
    pass


class InvalidDegree(TameBrauerError):
    pass


class TamenessViolation(TameBrauerError):
    pass


class DegreeCollapse(TameBrauerError):
    """A radical step adjoined less value-group growth than its degree."""


class NotTotallyRamified(TameBrauerError):
    pass


class NotDivision(TameBrauerError):
    pass


class FieldMismatch(TameBrauerError):
    pass


class NotAnExtension(TameBrauerError):
    pass


class NonDivisibleDegrees(TameBrauerError):
    pass


class DuplicatePrime(TameBrauerError):
    pass


class NotPrimary(TameBrauerError):
    """A part handed to a primary product does not have prime-power index."""


class TowerInvariantViolation(AssertionError):
    """A tower level failed one of its structural invariants (a bug, not bad input)."""


class BudgetExceeded(TameBrauerError):
    pass


class NonSquareQuotient(AssertionError):
    """Oracle found a non-square nondegenerate quotient (a bug signal)."""


class InputError(TameBrauerError):
    """Malformed JSON input; ``field`` names the offending path."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
