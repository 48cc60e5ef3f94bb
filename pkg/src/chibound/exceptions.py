"""Exception types shared across the package."""


class ChiboundError(Exception):
    """Base class for all errors raised by chibound."""


class DomainError(ChiboundError, ValueError):
    """A parameter lies outside the domain of a bound or family index."""


class CapacityError(ChiboundError, ValueError):
    """An exhaustive routine was asked to run above its desk-scale limit."""


class ContractError(ChiboundError, ValueError):
    """A precondition on an argument (e.g. "is a clique") does not hold."""


class GraphFormatError(ChiboundError, ValueError):
    """Input text could not be parsed as a graph."""
