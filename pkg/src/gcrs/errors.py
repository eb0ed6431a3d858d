"""Exception types raised deliberately by this package.

Everything derives from AlgebraError so callers (and the CLI) can separate
expected mathematical/usage failures from genuine bugs.  Division by zero in
a field reuses the builtin ZeroDivisionError.
"""


class AlgebraError(Exception):
    """Base class for all errors raised by gcrs."""


# --- field construction and arithmetic ---

class NotPrimeError(AlgebraError):
    """Characteristic is not a prime in the supported range 2..97."""


class ReducibleModulusError(AlgebraError):
    """Proposed extension modulus factors over the prime field."""


class DegreeMismatchError(AlgebraError):
    """Modulus degree or coefficient shape does not match the extension degree."""


class FieldMismatchError(AlgebraError):
    """Operands belong to different fields."""


class CharacteristicMismatchError(AlgebraError):
    """Embedding source is not the prime subfield of the target field."""


# --- ring / polynomial contexts ---

class ContextMismatchError(AlgebraError):
    """Operands belong to different rings (generators, field, or order differ)."""


class LengthMismatchError(AlgebraError):
    """Exponent vector length differs from the generator count."""


# --- parsing and presentation validation ---

class ParseError(AlgebraError):
    """Malformed input text; carries a 1-based line and column."""

    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnknownGeneratorError(ParseError):
    """Identifier in an expression names no generator of the ring."""

    def __init__(self, name, line, column):
        super().__init__(f"unknown generator {name!r}", line, column)
        self.name = name


class BadCoefficientError(ParseError):
    """Coefficient literal invalid for the ambient field."""


class DuplicateGeneratorError(ParseError):
    """Generator name declared twice in a presentation."""


class PresentationError(AlgebraError):
    """Structurally invalid presentation (missing field line, bad relation degree, ...)."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class NonHomogeneousRelationError(AlgebraError):
    """Relation mixes weighted degrees; names the offending degrees."""

    def __init__(self, text, degree_a, degree_b, line=None):
        where = "" if line is None else f"line {line}: "
        super().__init__(
            f"{where}relation {text!r} is not homogeneous: "
            f"term degrees {degree_a} and {degree_b} differ"
        )
        self.text = text
        self.degree_a = degree_a
        self.degree_b = degree_b
        self.line = line


# --- Groebner engine ---

class ZeroInputError(AlgebraError):
    """Operation requires nonzero polynomial input."""


class DegreeCapExceededError(AlgebraError):
    """Computation needs monomials beyond the configured (or representable) degree cap."""

    def __init__(self, degree, cap, message=None):
        super().__init__(
            message or f"degree {degree} exceeds cap {cap}; aborting instead of running away"
        )
        self.degree = degree
        self.cap = cap


class ExactDivisionError(AlgebraError):
    """Exact polynomial division left a remainder (signals an engine bug, not user error)."""


# --- ideal / regularity operations ---

class ZeroElementError(AlgebraError):
    """Residue class is zero in the quotient where a nonzero class is required."""


class NonHomogeneousElementError(AlgebraError):
    """Element must be homogeneous for this operation."""


class ZeroWitnessError(AlgebraError):
    """A scan witness is zero in the quotient."""

    def __init__(self, index):
        super().__init__(f"witness #{index} is zero in the quotient ring")
        self.index = index


class EnumerationTooLargeError(AlgebraError):
    """Component enumeration would exceed the configured cap."""

    def __init__(self, required, cap, level=None):
        at = "" if level is None else f" (search level {level})"
        super().__init__(
            f"enumeration needs {required} vectors but the cap is {cap}{at}; "
            f"rerun with an enumeration cap of at least {required}"
        )
        self.required = required
        self.cap = cap
        self.level = level


class AlreadyExtendedError(AlgebraError):
    """Base change requires a presentation over a prime field."""
