"""Exception types shared across the package.

Exit-code mapping for the command line tool:
  ValidationError -> 1, CapExceeded -> 2, OracleMismatch / NotACharacter -> 3.
"""


class MacstabError(Exception):
    pass


class ValidationError(MacstabError):
    """Malformed input: documents, flags, or operation preconditions."""


class CapExceeded(MacstabError):
    """A configured enumeration or memory guard was hit."""


class NotACharacter(MacstabError):
    """A class function failed integrality/nonnegativity during decomposition.

    This signals an upstream sign or convention bug, never a rounding issue;
    multiplicities are computed exactly and must be nonnegative integers.
    """


class OracleMismatch(MacstabError):
    """The two independent pipelines disagreed."""
