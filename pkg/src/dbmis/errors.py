"""Exception types shared by every module of the package."""


class DbmisError(Exception):
    """Base class for all errors raised by :mod:`dbmis`."""


class InvalidArgument(DbmisError, ValueError):
    """Malformed input: unknown element ids, loops, overlapping parts, ..."""


class ContractViolation(DbmisError):
    """A caller broke an operation's precondition (e.g. lifting an infeasible solution)."""


class ResourceLimit(DbmisError):
    """An exact enumerator was asked to work beyond its configured cap."""
