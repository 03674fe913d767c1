"""Exact coefficient fields: the rationals and prime fields GF(p)."""

# Standard library imports
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import logging
import re

# Related third-party imports
from sympy import FF, QQ

# Local application/library specific imports
from config.constants import (
    CHAR_P_LABEL,
    EXACT_LABEL,
    FIELD_KINDS,
    PRIME_FIELD,
    RATIONALS,
)
from utils.validation_utils import UsageError, validate_characteristic

# Set up logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _domain_for(kind, characteristic):
    if kind == RATIONALS:
        return QQ
    return FF(characteristic, symmetric=False)


@dataclass(frozen=True)
class FieldSpec:
    """
    Coefficient field of a polynomial ring.

    Attributes:
        kind (str): "rationals" or "prime_field".
        characteristic (int): p for prime fields, 0 for the rationals.
    """

    kind: str
    characteristic: int = 0

    def __post_init__(self):
        if self.kind not in FIELD_KINDS:
            raise UsageError(f"unknown field kind: {self.kind!r}")
        if self.kind == RATIONALS and self.characteristic != 0:
            raise UsageError("the rationals have characteristic 0")
        if self.kind == PRIME_FIELD:
            validate_characteristic(self.characteristic)

    @classmethod
    def rationals(cls):
        return cls(RATIONALS, 0)

    @classmethod
    def prime_field(cls, p):
        return cls(PRIME_FIELD, p)

    @classmethod
    def from_text(cls, text):
        """
        Parse the command-line field notation.

        Args:
            text (str): "q" for the rationals or "gf:p" for GF(p).

        Returns:
            FieldSpec: The parsed field.
        """
        cleaned = text.strip().lower()
        if cleaned in ("q", "qq"):
            return cls.rationals()
        match = re.fullmatch(r"gf\s*:\s*(\d+)", cleaned)
        if not match:
            raise UsageError(f"field must be 'q' or 'gf:p', got {text!r}")
        return cls.prime_field(int(match.group(1)))

    @classmethod
    def from_domain(cls, domain):
        """Recover the FieldSpec of a sympy ground domain."""
        if domain == QQ:
            return cls.rationals()
        if domain.is_FiniteField:
            return cls.prime_field(int(domain.characteristic()))
        raise UsageError(f"unsupported coefficient domain: {domain}")

    @property
    def domain(self):
        """The sympy ground domain (QQ or a non-symmetric GF(p))."""
        return _domain_for(self.kind, self.characteristic)

    @property
    def is_prime_field(self):
        return self.kind == PRIME_FIELD

    @property
    def text(self):
        return "q" if self.kind == RATIONALS else f"gf:{self.characteristic}"

    @property
    def label(self):
        return CHAR_P_LABEL if self.is_prime_field else EXACT_LABEL

    def convert(self, value):
        """
        Convert an int, Fraction, "a/b" string or FieldElement to a raw
        domain element.

        Raises:
            UsageError: For a FieldElement of another field, or text that is
                not an integer or a fraction.
            ZeroDivisionError: For a zero denominator, or one divisible by p.
        """
        if isinstance(value, FieldElement):
            if value.field != self:
                raise UsageError(f"cannot mix {value.field.text} and {self.text}")
            return value.value
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except ValueError:
                raise UsageError(f"not a field value: {value!r}") from None
        if isinstance(value, Fraction):
            numerator, denominator = value.numerator, value.denominator
        else:
            numerator, denominator = int(value), 1
        domain = self.domain
        if self.kind == RATIONALS:
            return QQ(numerator, denominator)
        return domain.quo(domain(numerator), _nonzero(domain(denominator), domain))

    def element(self, value):
        """Return value as a canonical FieldElement of this field."""
        return FieldElement(self, self.convert(value))

    def from_raw(self, raw):
        """Wrap a raw sympy domain element (e.g. a coefficient) as a FieldElement."""
        return FieldElement(self, self.domain.convert(raw))

    def zero(self):
        return FieldElement(self, self.domain.zero)

    def one(self):
        return FieldElement(self, self.domain.one)


def _nonzero(raw, domain):
    if not raw:
        raise ZeroDivisionError(f"division by zero in {domain}")
    return raw


@dataclass(frozen=True)
class FieldElement:
    """
    An element of a FieldSpec in canonical form.

    Rationals are reduced fractions with positive denominator; prime-field
    residues lie in [0, p). The canonical form comes from the sympy domain,
    so equal values have identical representations.
    """

    field: FieldSpec
    value: object

    @property
    def numerator(self):
        if self.field.is_prime_field:
            return int(self.value)
        return int(QQ.numer(self.value))

    @property
    def denominator(self):
        if self.field.is_prime_field:
            return 1
        return int(QQ.denom(self.value))

    @property
    def residue(self):
        if not self.field.is_prime_field:
            raise UsageError("residue is only defined for prime-field elements")
        return int(self.value)

    def is_zero(self):
        return not self.value

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        return field_add(self, _coerce(self.field, other))

    __radd__ = __add__

    def __mul__(self, other):
        return field_mul(self, _coerce(self.field, other))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, -self.value)

    def __sub__(self, other):
        return field_add(self, -_coerce(self.field, other))

    def __truediv__(self, other):
        return field_mul(self, field_inv(_coerce(self.field, other)))

    def __str__(self):
        return render_element(self)


def _coerce(field, other):
    if isinstance(other, FieldElement):
        return other
    return field.element(other)


def _check_same_field(a, b):
    if a.field != b.field:
        raise UsageError(f"cannot mix elements of {a.field.text} and {b.field.text}")


def field_add(a, b):
    """
    Add two elements of the same field.

    Raises:
        UsageError: If the operands come from different fields.
    """
    _check_same_field(a, b)
    return FieldElement(a.field, a.value + b.value)


def field_mul(a, b):
    """Multiply two elements of the same field."""
    _check_same_field(a, b)
    return FieldElement(a.field, a.value * b.value)


def field_inv(a):
    """
    Multiplicative inverse.

    Raises:
        ZeroDivisionError: If a is zero.
    """
    if a.is_zero():
        raise ZeroDivisionError(f"zero has no inverse in {a.field.text}")
    domain = a.field.domain
    return FieldElement(a.field, domain.quo(domain.one, a.value))


def render_element(a):
    """
    Render as "num/den" (rationals, "num" when den = 1) or "k mod p".

    Args:
        a (FieldElement): Element to render.

    Returns:
        str: Decimal text form.
    """
    if a.field.is_prime_field:
        return f"{a.residue} mod {a.field.characteristic}"
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"
