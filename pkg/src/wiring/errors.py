"""Exception hierarchy shared by all wiring modules."""


class WiringError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(WiringError):
    """A value violates a structural invariant (duplicate wires, dangling
    cable references, unsoldered wires, malformed permutations, ...)."""


class InterfaceError(WiringError):
    """Stars or typings do not line up at a composition or evaluation
    boundary."""


class TypeMismatchError(WiringError):
    """A wire's value domain disagrees with the cable it is soldered to."""


class EnumerationLimitError(WiringError):
    """A brute-force enumeration would exceed its configured size bound."""


class BudgetExceededError(WiringError):
    """An iteration exhausted its step budget without converging."""


class ScriptError(WiringError):
    """A script failed to lex, parse, or resolve.

    Carries a 1-based source position when one is known.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{line}:{column or 0}: {message}"
        super().__init__(message)


class CsvFormatError(WiringError):
    """A CSV file does not match the declared star or its domains."""
