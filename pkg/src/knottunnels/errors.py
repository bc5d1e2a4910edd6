"""Exception types raised on invalid input."""


class InvalidInput(ValueError):
    """Base class for every input-validation failure."""


class SStringError(InvalidInput):
    """Parameter string contains a character other than 0 or 1."""


class NotCoprimeError(InvalidInput):
    """Torus parameters share a factor, so they describe a link."""


class NotRegularError(InvalidInput):
    """Operation needs a regular tunnel (a 1 somewhere in the s-string)."""


class TrivialKnotError(InvalidInput):
    """Operation needs a nontrivial torus knot."""
