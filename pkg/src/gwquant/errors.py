"""Exception taxonomy shared by all gwquant modules.

Every error raised by the library derives from GWQuantError so the CLI can
map failures to its exit-code contract (input errors vs verification
failures vs budget overruns).
"""


class GWQuantError(Exception):
    """Base class for all gwquant errors."""


class InputError(GWQuantError):
    """Bad user input (CLI exit code 2)."""


class BudgetError(GWQuantError):
    """A configured order/size budget was exceeded (CLI exit code 3)."""


# -- series ---------------------------------------------------------------

class RingMismatch(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class NonPositiveValuation(InputError):
    pass


class BadConstantTerm(InputError):
    pass


class ValuationLoss(GWQuantError):
    """Substitution degraded the guaranteed order.

    Carries the order that *can* be guaranteed in ``guaranteed_order``.
    """

    def __init__(self, msg, guaranteed_order=None):
        super().__init__(msg)
        self.guaranteed_order = guaranteed_order


class SqrtNotInField(GWQuantError):
    pass


# -- frobenius ------------------------------------------------------------

class ParseError(InputError):
    pass


class InvariantViolation(GWQuantError):
    """A validated structural invariant failed; names the check."""

    def __init__(self, check, msg=""):
        super().__init__(f"{check}: {msg}" if msg else check)
        self.check = check


class InsufficientOrder(BudgetError):
    pass


class Inconclusive(GWQuantError):
    pass


class NotSemisimple(GWQuantError):
    pass


class ConvergenceStall(BudgetError):
    pass


class UnsupportedTarget(InputError):
    pass


# -- rmatrix --------------------------------------------------------------

class OrderBudgetExceeded(BudgetError):
    pass


class DerivativeUnavailable(GWQuantError):
    pass


# -- fock -----------------------------------------------------------------

class WindowTooSmall(GWQuantError):
    pass


class NotUnitary(GWQuantError):
    pass


class BoundsExceeded(BudgetError):
    pass


# -- potentials -----------------------------------------------------------

class ShiftMismatch(GWQuantError):
    pass


class NonIntegrable(GWQuantError):
    pass


class TruncationTooCoarse(BudgetError):
    pass


# -- convergence ----------------------------------------------------------

class InsufficientData(GWQuantError):
    pass


class CounterexampleFound(GWQuantError):
    pass
