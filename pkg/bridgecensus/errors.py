"""Exceptions raised by the bridgecensus library."""


class BridgeCensusError(Exception):
    """Base class for every error the library raises on purpose."""


class UndefinedValue(BridgeCensusError, ZeroDivisionError):
    """A continued fraction whose matrix has a zero (1,1) entry."""


class OutOfRange(BridgeCensusError, ValueError):
    """An argument lies outside the domain of the operation."""


class MalformedInput(BridgeCensusError, ValueError):
    """Unparsable text, or a continued fraction the rewriting cannot start on."""


class IsLink(BridgeCensusError, ValueError):
    """The fraction has an even denominator and describes a 2-bridge link."""


class Trivial(BridgeCensusError, ValueError):
    """The fraction has denominator 1 and describes the trivial knot."""


class BudgetExceeded(BridgeCensusError, RuntimeError):
    """An enumeration would produce more expansions than the configured budget."""


class InconsistentResult(BridgeCensusError, AssertionError):
    """An internal self-check failed. Always a bug, never a user error."""
