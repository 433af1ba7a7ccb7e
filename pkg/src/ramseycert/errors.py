"""Exception types shared across the package."""


class RamseyCertError(Exception):
    """Base class for all errors raised by ramseycert."""


class ParseError(RamseyCertError):
    """Certificate text is not in the line format (bad keyword, token, or color index)."""


class StructureError(RamseyCertError):
    """Certificate parsed but its color classes do not partition the distances."""


class UnknownName(RamseyCertError, KeyError):
    """No built-in certificate has the requested name."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class GuardError(RamseyCertError):
    """Brute-force oracle refused an instance that is too large."""
