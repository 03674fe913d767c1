# Standard library imports
import logging
import re

# Related third-party imports
from sympy import isprime

# Set up logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

IDENTIFIER_PATTERN = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class UsageError(ValueError):
    """Invalid input: mixed rings or fields, bad indices, non-germ input."""


class ParseError(UsageError):
    """
    Expression text outside the input grammar.

    Args:
        message (str): What went wrong.
        text (str): The full input text.
        position (int): 0-based character offset of the offending token.
    """

    def __init__(self, message, text="", position=0):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")

    def caret_line(self):
        """Return the input with a caret under the offending position."""
        return f"{self.text}\n{' ' * self.position}^"


class PreconditionError(UsageError):
    """An operation was called outside its documented precondition."""


class BoundExceededError(RuntimeError):
    """A search loop ran past its configured bound."""

    def __init__(self, quantity, bound):
        self.quantity = quantity
        self.bound = bound
        super().__init__(f"{quantity} > {bound}")


class TheoremCheckError(AssertionError):
    """A theorem-backed consistency check failed on a computed instance."""

    def __init__(self, failures):
        self.failures = list(failures)
        names = ", ".join(failure.name for failure in self.failures)
        super().__init__(f"theorem checks failed: {names}")


class IdentityCheckError(RuntimeError):
    """A computed algebraic identity failed to re-expand."""


def require(condition, message):
    """Raise IdentityCheckError with message unless condition holds."""
    if not condition:
        raise IdentityCheckError(message)


def is_valid_identifier(name):
    """
    Check if the given name can be used as a ring variable.

    Args:
        name (str): Candidate variable name.

    Returns:
        bool: Whether the name is a plain identifier.
    """
    return bool(IDENTIFIER_PATTERN.match(name))


def validate_variable_names(names):
    """
    Validate an ordered list of ring variable names.

    Args:
        names (Iterable[str]): Variable names.

    Returns:
        tuple: The names as a tuple.

    Raises:
        UsageError: If the list is empty, has duplicates or bad identifiers.
    """
    names = tuple(names)
    if not names:
        raise UsageError("a ring needs at least one variable")
    for name in names:
        if not is_valid_identifier(name):
            raise UsageError(f"invalid variable name: {name!r}")
    if len(set(names)) != len(names):
        raise UsageError(f"variable names must be distinct: {names}")
    return names


def validate_characteristic(p):
    """
    Validate the characteristic of a prime field.

    Args:
        p (int): Candidate prime.

    Raises:
        UsageError: If p is not an odd prime.
    """
    if not isinstance(p, int) or p <= 2 or not isprime(p):
        raise UsageError(f"characteristic must be an odd prime, got {p}")


def validate_bound(name, value, minimum):
    """
    Check that an integer bound is at least the given minimum.

    Raises:
        UsageError: If value is not an integer >= minimum.
    """
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise UsageError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return value


def check_same_ring(*polys):
    """
    Check that all polynomials live in the same sympy ring.

    Raises:
        UsageError: If two polynomials come from different rings.
    """
    rings = {p.ring for p in polys}
    if len(rings) > 1:
        raise UsageError("polynomials must be in the same ring")
