##
# File:    ApmcExceptions.py
# Author:  Dennis Piehl
# Date:    12-Oct-2026
#
# Updates:
#
# To Do:
##

"""
Exception classes raised by the all-pairs min-cut utilities.

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"


class ApmcError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGraphError(ApmcError):
    """Arc endpoints out of range, self-loops or duplicate arc identifiers."""


class GraphFormatError(ApmcError):
    """Malformed graph or instance file."""


class CyclicGraphError(ApmcError):
    """A DAG-only operation was applied to a graph with a directed cycle."""


class InvalidOrderError(ApmcError):
    """The supplied vertex order is not a topological order."""


class TooLargeError(ApmcError):
    """A brute-force oracle guard tripped."""


class NotACutError(ApmcError):
    """The arc set does not disconnect the target from the source."""


class OrderUndefinedError(ApmcError):
    """A candidate cut contains no member of some branch family."""


class ParameterOverflowError(ApmcError):
    """No code parameters exist within the supported range."""


class NotACodewordError(ApmcError):
    """The bit pattern is not a codeword of a 1-superimposed code."""


class NotDecodableError(ApmcError):
    """The bit pattern is not the union of at most d codewords."""


class EmptyFamilyError(ApmcError):
    """An empty set family was supplied where a non-empty one is required."""


class DimensionMismatchError(ApmcError):
    """Incompatible tensor or matrix dimensions."""


class LimitExceededError(ApmcError):
    """A configured size limit (family size, tensor dimension) was exceeded."""


class SingularMatrixError(ApmcError):
    """The matrix has no inverse over the selected prime field."""
