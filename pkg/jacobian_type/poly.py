"""
Sparse multivariate polynomials over a FieldSpec.

Polynomials are sympy ``PolyElement`` objects: a sparse map from exponent
tuples to nonzero domain coefficients, listed in decreasing order of the ring's
monomial order by ``terms()``. This module adds the ring wrapper, the monomial
orders the elimination code needs, and the expression parser/renderer.
"""

# Standard library imports
from collections import deque, namedtuple
import dataclasses
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
import logging
import re

# Related third-party imports
from sympy.polys.orderings import MonomialOrder, grevlex, lex
from sympy.polys.rings import PolyElement
from sympy.polys.rings import PolyRing as SympyPolyRing

# Local application/library specific imports
from coeffs import FieldSpec
from config.constants import KEY_CACHE_LIMIT
from utils.utils import fresh_name
from utils.validation_utils import (
    ParseError,
    UsageError,
    check_same_ring,
    validate_variable_names,
)

# Set up logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

Polynomial = PolyElement


def _grevlex_key(monomial):
    """Flat grevlex key: total degree, then negated exponents from the last variable."""
    return (sum(monomial),) + tuple(-e for e in reversed(monomial))


def flat_key(order):
    """
    Key function of order returning flat integer tuples.

    Flat keys compare like the order and can be negated componentwise, which
    the reduction heap in groebner relies on.

    Raises:
        UsageError: For an order without a flat key.
    """
    if isinstance(order, (EliminationOrder, WeightedOrder)):
        return order
    if order == grevlex:
        return _grevlex_key
    if order == lex:
        return tuple
    raise UsageError(f"unsupported monomial order: {order!r}")


class _CachedKeyOrder(MonomialOrder):
    """Monomial order whose flat keys are memoized per monomial."""

    is_global = True

    def __call__(self, monomial):
        keys = self._keys
        key = keys.get(monomial)
        if key is None:
            if len(keys) >= KEY_CACHE_LIMIT:
                keys.clear()
            key = keys[monomial] = self._key(monomial)
        return key


class EliminationOrder(_CachedKeyOrder):
    """
    Block order: grevlex on the first ``front`` variables, ties broken by
    ``tail`` on the remaining ones.

    Any polynomial whose leading monomial is free of the front block is free
    of it entirely, so filtering a Groebner basis by front-freeness
    eliminates the front variables. Nesting (``tail`` itself an
    EliminationOrder) gives the three-block orders used for Rees presentations.
    """

    def __init__(self, front, tail=grevlex):
        self.front = front
        self.tail = tail
        self.alias = f"elim({front},{tail})"
        self._tail_key = flat_key(tail)
        self._keys = {}

    def _key(self, monomial):
        return _grevlex_key(monomial[: self.front]) + self._tail_key(monomial[self.front :])

    def __eq__(self, other):
        return (
            isinstance(other, EliminationOrder)
            and self.front == other.front
            and self.tail == other.tail
        )

    def __hash__(self):
        return hash((self.__class__.__name__, self.front, self.tail))

    def __repr__(self):
        return f"EliminationOrder({self.front}, {self.tail!r})"


class WeightedOrder(_CachedKeyOrder):
    """Weighted degree first, then grevlex."""

    def __init__(self, weights):
        self.weights = tuple(weights)
        if any(w <= 0 for w in self.weights):
            raise UsageError(f"weights must be positive: {self.weights}")
        self.alias = f"weighted{self.weights}"
        self._keys = {}

    def _key(self, monomial):
        weighted = sum(w * e for w, e in zip(self.weights, monomial))
        return (weighted,) + _grevlex_key(monomial)

    def __eq__(self, other):
        return isinstance(other, WeightedOrder) and self.weights == other.weights

    def __hash__(self):
        return hash((self.__class__.__name__, self.weights))

    def __repr__(self):
        return f"WeightedOrder({self.weights})"


def monomial_order(kind, front=None, weights=None):
    """
    Build a monomial order by name.

    Args:
        kind (str): "lex", "grevlex", "block_elimination" or
            "graded_then_grevlex".
        front (int, optional): Front block size for block_elimination.
        weights (Sequence[int], optional): Weight vector for
            graded_then_grevlex.

    Returns:
        MonomialOrder: A hashable sympy-compatible order.
    """
    if kind == "lex":
        return lex
    if kind == "grevlex":
        return grevlex
    if kind == "block_elimination":
        if front is None or front < 0:
            raise UsageError("block_elimination needs a front variable count")
        return EliminationOrder(front)
    if kind == "graded_then_grevlex":
        if not weights:
            raise UsageError("graded_then_grevlex needs a weight vector")
        return WeightedOrder(weights)
    raise UsageError(f"unknown monomial order: {kind!r}")


@lru_cache(maxsize=None)
def _sympy_ring(names, domain, order):
    return SympyPolyRing(names, domain, order)


@dataclass(frozen=True)
class PolyRing:
    """
    A polynomial ring k[x_1..x_n] with a default monomial order.

    The maximal ideal of the origin is never stored; units of the local
    ring are detected through constant terms.
    """

    variable_names: tuple
    field: FieldSpec = dataclasses.field(default_factory=FieldSpec.rationals)
    default_order: MonomialOrder = grevlex

    def __post_init__(self):
        object.__setattr__(self, "variable_names", validate_variable_names(self.variable_names))

    @classmethod
    def from_text(cls, variables, field_text="q"):
        """Build a ring from "x,y,z" and "q" / "gf:p"."""
        names = [name.strip() for name in variables.split(",") if name.strip()]
        return cls(tuple(names), FieldSpec.from_text(field_text))

    @property
    def ring(self):
        """The sympy ring in the default order."""
        return _sympy_ring(self.variable_names, self.field.domain, self.default_order)

    def sympy_ring(self, order=None):
        return _sympy_ring(self.variable_names, self.field.domain, order or self.default_order)

    @property
    def arity(self):
        return len(self.variable_names)

    @property
    def gens(self):
        return self.ring.gens

    @property
    def zero(self):
        return self.ring.zero

    @property
    def one(self):
        return self.ring.one

    def var(self, name):
        return self.ring.gens[self.index(name)]

    def index(self, name):
        try:
            return self.variable_names.index(name)
        except ValueError:
            raise UsageError(f"unknown variable {name!r} in {self.variable_names}")

    def constant(self, value):
        return self.ring.ground_new(self.field.convert(value))

    def with_order(self, order):
        return replace(self, default_order=order)

    def extended(self, front=(), back=(), order=None):
        """
        Return a ring with extra variables before and after the current ones.

        Raises:
            UsageError: If a new name collides with an existing one.
        """
        names = tuple(front) + self.variable_names + tuple(back)
        return PolyRing(names, self.field, order or grevlex)

    def fresh_variable(self, base):
        return fresh_name(base, self.variable_names)

    def owns(self, p):
        return (
            isinstance(p, PolyElement)
            and tuple(str(s) for s in p.ring.symbols) == self.variable_names
            and p.ring.domain == self.field.domain
        )

    def coerce(self, p):
        """
        Bring p into this ring's default order.

        Raises:
            UsageError: If p has other variables or another coefficient field.
        """
        if not self.owns(p):
            raise UsageError(f"polynomial {p} is not in the ring {self.variable_names}")
        return p if p.ring == self.ring else p.set_ring(self.ring)

    def __str__(self):
        return f"{self.field.text}[{', '.join(self.variable_names)}]"


def with_monomial_order(p, order):
    """Return p as an element of the same ring under another monomial order."""
    names = tuple(str(s) for s in p.ring.symbols)
    target = _sympy_ring(names, p.ring.domain, order)
    return p if p.ring == target else p.set_ring(target)


def change_ring(p, target):
    """
    Map p into a sympy ring with other variables, matching by name.

    Variables missing from the target must not occur in p.

    Args:
        p (Polynomial): Source polynomial.
        target (sympy PolyRing): Destination ring over the same domain.

    Returns:
        Polynomial: The image of p.
    """
    if p.ring == target:
        return p
    source_names = [str(s) for s in p.ring.symbols]
    target_names = [str(s) for s in target.symbols]
    positions = [
        target_names.index(name) if name in target_names else None for name in source_names
    ]
    terms = []
    for monom, coeff in p.items():
        exponents = [0] * target.ngens
        for name, e, pos in zip(source_names, monom, positions):
            if not e:
                continue
            if pos is None:
                raise UsageError(f"variable {name} does not exist in the target ring")
            exponents[pos] = e
        terms.append((tuple(exponents), target.domain.convert(coeff, p.ring.domain)))
    return target.from_terms(terms)


def poly_add(p, q):
    """
    Sum of two polynomials of the same ring.

    Raises:
        UsageError: If the rings differ.
    """
    check_same_ring(p, q)
    return p + q


def poly_mul(p, q):
    check_same_ring(p, q)
    return p * q


def poly_pow(p, k):
    """p**k for k >= 0, with p**0 = 1."""
    if not isinstance(k, int) or k < 0:
        raise UsageError(f"exponent must be a non-negative integer, got {k!r}")
    return p**k


def partial_derivative(p, i):
    """
    Formal partial derivative with respect to the i-th variable (0-based).

    Raises:
        UsageError: If i is not a valid variable index.
    """
    if not isinstance(i, int) or not 0 <= i < p.ring.ngens:
        raise UsageError(f"variable index {i} out of range for {p.ring.ngens} variables")
    return p.diff(p.ring.gens[i])


def evaluate_at_origin(p):
    """
    Constant term of p as a FieldElement.

    p is a unit of the local ring at the origin iff this is nonzero.
    """
    field_spec = FieldSpec.from_domain(p.ring.domain)
    return field_spec.from_raw(p.get(p.ring.zero_monom, p.ring.domain.zero))


def total_degree(p):
    if not p:
        return -1
    return max(sum(monom) for monom in p.itermonoms())


def is_unit_at_origin(p):
    return bool(p.get(p.ring.zero_monom, p.ring.domain.zero))


Token = namedtuple("Token", ["kind", "text", "position"])

TOKEN_PATTERN = re.compile(
    r"\s*(?:(?P<rational>\d+/\d+)|(?P<integer>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^()]))"
)

BINARY_PRECEDENCE = {"+": 1, "-": 1, "*": 2}


def tokenize(text):
    """
    Split expression text into tokens.

    Raises:
        ParseError: On a character outside the grammar.
    """
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = TOKEN_PATTERN.match(text, position)
        if not match:
            offset = position + len(text[position:]) - len(text[position:].lstrip())
            raise ParseError(f"unexpected character {text[offset]!r}", text, offset)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append(Token(kind, match.group(kind), start))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    """Precedence climbing over the token stream, evaluating as it goes."""

    def __init__(self, text, ring, constants):
        self.text = text
        self.ring = ring
        self.names = [str(s) for s in ring.symbols]
        self.constants = constants or {}
        self.tokens = deque(tokenize(text))

    def error(self, message, token):
        raise ParseError(message, self.text, token.position)

    def peek(self):
        return self.tokens[0]

    def advance(self):
        return self.tokens.popleft()

    def parse(self):
        result = self.expression(0)
        token = self.peek()
        if token.kind != "end":
            self.error(f"unexpected {token.text!r}", token)
        return result

    def expression(self, min_precedence):
        left = self.unary()
        while True:
            token = self.peek()
            precedence = BINARY_PRECEDENCE.get(token.text) if token.kind == "op" else None
            if precedence is None or precedence < min_precedence:
                return left
            self.advance()
            right = self.expression(precedence + 1)
            if token.text == "+":
                left = left + right
            elif token.text == "-":
                left = left - right
            else:
                left = left * right

    def unary(self):
        token = self.peek()
        if token.kind == "op" and token.text == "-":
            self.advance()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.primary()
        token = self.peek()
        if token.kind == "op" and token.text == "^":
            self.advance()
            exponent = self.advance()
            if exponent.kind != "integer":
                self.error("exponent must be a non-negative integer", exponent)
            following = self.peek()
            if following.kind == "op" and following.text == "^":
                self.error("chained exponents need parentheses", following)
            return base ** int(exponent.text)
        return base

    def primary(self):
        token = self.advance()
        if token.kind == "integer":
            return self.ring.ground_new(self.ring.domain.convert(int(token.text)))
        if token.kind == "rational":
            numerator, denominator = token.text.split("/")
            if int(denominator) == 0:
                self.error("zero denominator", token)
            return self._constant(Fraction(int(numerator), int(denominator)), token)
        if token.kind == "ident":
            if token.text in self.names:
                return self.ring.gens[self.names.index(token.text)]
            if token.text in self.constants:
                return self._constant(self.constants[token.text], token)
            self.error(f"unknown identifier {token.text!r}", token)
        if token.kind == "op" and token.text == "(":
            inner = self.expression(0)
            closing = self.advance()
            if closing.kind != "op" or closing.text != ")":
                self.error("expected ')'", closing)
            return inner
        if token.kind == "end":
            self.error("unexpected end of input", token)
        self.error(f"unexpected {token.text!r}", token)

    def _constant(self, value, token):
        field_spec = FieldSpec.from_domain(self.ring.domain)
        try:
            return self.ring.ground_new(field_spec.convert(value))
        except ZeroDivisionError:
            self.error(f"{value} is not defined in {field_spec.text}", token)
        except UsageError as e:
            self.error(f"bad value for {token.text!r}: {e}", token)


def parse_polynomial(text, ring, constants=None):
    """
    Parse expression text into a polynomial of the given ring.

    Grammar: integers, a/b rationals, variable identifiers, ``+ - * ^ ( )``
    and unary minus; ``^`` binds tightest (integer exponents only), then
    ``*``, then ``+``/``-``. Multiplication must be explicit.

    Args:
        text (str): Expression text, e.g. "(y^2 - x^3)^2 - x^5*y".
        ring (PolyRing): Target ring.
        constants (dict, optional): Parameter names mapped to field values.

    Returns:
        Polynomial: The expanded polynomial in ring.ring.

    Raises:
        ParseError: With the character position of the offending token.
    """
    sympy_ring = ring.ring if isinstance(ring, PolyRing) else ring
    return _Parser(text, sympy_ring, constants).parse()


def _render_coefficient(coeff, domain):
    field_spec = FieldSpec.from_domain(domain)
    element = field_spec.from_raw(coeff)
    if field_spec.is_prime_field:
        return str(element.residue), False
    negative = element.numerator < 0
    magnitude = abs(element.numerator)
    if element.denominator == 1:
        return str(magnitude), negative
    return f"{magnitude}/{element.denominator}", negative


def render_monomial(monom, names):
    factors = []
    for name, e in zip(names, monom):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def render_polynomial(p, names=None):
    """
    Render p in the input grammar, terms in decreasing ring order.

    Args:
        p (Polynomial): Polynomial to render.
        names (Sequence[str], optional): Display names for the variables.

    Returns:
        str: Text that parse_polynomial maps back to p.
    """
    if not p:
        return "0"
    names = list(names) if names else [str(s) for s in p.ring.symbols]
    pieces = []
    for monom, coeff in p.terms():
        text, negative = _render_coefficient(coeff, p.ring.domain)
        monomial = render_monomial(monom, names)
        if monomial and text == "1":
            body = monomial
        elif monomial:
            body = f"{text}*{monomial}"
        else:
            body = text
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)
