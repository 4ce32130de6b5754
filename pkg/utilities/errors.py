#!/usr/bin/env python3
"""
Exception hierarchy shared by every package of the project.

Library code raises these; only the command line (secoh/__main__.py) catches
them and turns them into exit codes.
"""


class SecohError(Exception):
    """Base class for all errors raised by the project."""


class DimensionError(SecohError, ValueError):
    """Operands with incompatible shapes or out-of-range indices."""


class AxiomError(SecohError):
    """
    A group, action or cocycle axiom does not hold.

    Args:
        axiom (str): Short name of the violated axiom
        witness: The elements at which the axiom fails
        message (str): Human readable description
    """

    def __init__(self, axiom, witness=None, message=None):
        self.axiom = axiom
        self.witness = witness
        if message is None:
            message = f"{axiom} fails at {witness}"
        super().__init__(message)


class ScaleGuardError(SecohError):
    """The ambient rank of a cochain group exceeds the configured ceiling."""

    def __init__(self, required_rank, ceiling, what="cochain group"):
        self.required_rank = required_rank
        self.ceiling = ceiling
        super().__init__(
            f"{what} needs ambient rank {required_rank}, ceiling is {ceiling}"
        )


class ComplexError(SecohError):
    """Lifted differentials do not induce a complex on the presented groups."""


class OracleGuardError(SecohError):
    """An instance is too large (or infinite) for exhaustive enumeration."""


class ProblemSpecError(SecohError):
    """
    A problem document is malformed or fails semantic validation.

    Args:
        message (str): Description of the problem
        field (str): Dotted path of the offending field, if known
        line (int): 1-based line of a syntax error, if any
        column (int): 1-based column of a syntax error, if any
        witness: Elements at which a semantic check fails, if any
    """

    def __init__(self, message, field=None, line=None, column=None, witness=None):
        self.field = field
        self.witness = witness
        self.line = line
        self.column = column
        where = []
        if field:
            where.append(f"field {field}")
        if line is not None:
            where.append(f"line {line}, column {column}")
        if where:
            message = f"{message} ({'; '.join(where)})"
        super().__init__(message)
