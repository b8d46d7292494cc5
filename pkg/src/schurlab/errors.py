"""Exception types shared across the library."""

from __future__ import annotations


class SchurlabError(Exception):
    """Base class for all errors raised by this package."""


class MalformedPerm(SchurlabError):
    """A permutation's image list is not a bijection, or degrees clash."""


class ClosureExceedsCap(SchurlabError):
    """Generating a group blew through the configured order cap."""


class CapExceeded(SchurlabError):
    """A construction would produce a group larger than the order cap."""


class TableAxiomViolation(SchurlabError):
    """A multiplication table fails one of the group axioms.

    ``axiom`` names the failed check and ``witness`` holds the offending
    indices, so a corrupt catalog entry can be reported precisely.
    """

    def __init__(self, axiom: str, witness: tuple = (), message: str | None = None):
        self.axiom = axiom
        self.witness = tuple(witness)
        text = message or f"table axiom {axiom!r} violated at {self.witness}"
        super().__init__(text)


class NotNormal(SchurlabError):
    """Quotient requested by a subgroup that is not normal."""


class NotAbelian(SchurlabError):
    """An operation defined only for abelian groups got a non-abelian one."""


class NotPrimePower(SchurlabError):
    """Parameter was required to be a prime power."""


class BadVariant(SchurlabError):
    """Unrecognized extraspecial factor variant."""


class NotCentral(SchurlabError):
    """Designated amalgamation subgroup is not central in its factor."""


class NotCyclic(SchurlabError):
    """Designated amalgamation subgroup is not cyclic."""


class OrderMismatch(SchurlabError):
    """Amalgamated subgroups have different orders, or the identification
    exponent is not a unit, so no order-preserving isomorphism exists."""


class NotGenerating(SchurlabError):
    """Supplied coset representatives do not generate the quotient."""


class BudgetExceeded(SchurlabError):
    """An exact search ran out of its configured work budget."""


class ParseError(SchurlabError):
    """Catalog text could not be parsed; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class DuplicateName(SchurlabError):
    """Two catalog entries share a name."""
