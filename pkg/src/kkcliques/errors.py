"""Exception types shared across the package."""


class KKError(Exception):
    """Base class for package-specific errors."""


class UnsupportedError(KKError):
    """Raised for inputs that are mathematically out of scope.

    The main case is recognition of packing shadows at arity s = i + 1,
    where no characterisation of the extremal families is known.
    """


class InternalCheckError(KKError):
    """Raised when two independent computations of the same quantity disagree.

    This always indicates a bug (or a falsified theorem), never bad user
    input, so it is kept distinct from ValueError.  The CLI maps it to
    exit code 3.
    """
