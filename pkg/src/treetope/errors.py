"""Exception types shared across the package.

The class names double as machine-readable error labels in CLI payloads,
so they are kept short and stable.
"""

from __future__ import annotations


class TreetopeError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(TreetopeError):
    """Malformed input text: matrix file, Newick string, splits JSON or
    rational literal.  Counts as an input error (CLI exit code 2)."""


class NotAPseudometric(TreetopeError):
    """Matrix fails symmetry, zero diagonal or the triangle inequality."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class NotAMetric(TreetopeError):
    """Distinct points at distance zero where a genuine metric is required."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class FourPointViolation(TreetopeError):
    """Input is not tree-like; ``witness`` is an offending index quadruple."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class IncompatibleSystem(TreetopeError):
    """Split system is not pairwise compatible; ``witness`` is an offending
    pair of splits."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class UnboundedPolytope(TreetopeError):
    """H-polytope has a recession direction; ``ray`` is a witness vector."""

    def __init__(self, message: str, ray=None):
        super().__init__(message)
        self.ray = ray
