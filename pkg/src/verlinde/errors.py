"""Typed errors shared across the package.

Each class maps to a distinct CLI exit code (see cli.EXIT_CODES).
"""


class VerlindeError(Exception):
    """Base class for all package errors."""


class ParseError(VerlindeError):
    """Malformed input file; carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class ValidationError(VerlindeError):
    """A constructor invariant failed (associativity, Hopf axioms, ...)."""


class UnsupportedRegimeError(VerlindeError):
    """The requested computation is outside the supported regime
    (e.g. radical of a noncommutative algebra over a prime field)."""


class NonSplitError(UnsupportedRegimeError):
    """The semisimple quotient does not split over the ground field."""


class CatalogGapError(VerlindeError):
    """A needed centralizer irrep is not in the catalog; names the centralizer."""


class DegreeOverflowError(VerlindeError):
    """A cochain operation would exceed the configured degree bound."""
