# Related third-party imports
import numpy as np
import pytest
from sympy.polys.orderings import grevlex, lex

# Local application/library specific imports
from coeffs import FieldSpec
from poly import (
    EliminationOrder,
    PolyRing,
    WeightedOrder,
    change_ring,
    evaluate_at_origin,
    is_unit_at_origin,
    monomial_order,
    parse_polynomial,
    partial_derivative,
    poly_add,
    poly_mul,
    poly_pow,
    render_polynomial,
    total_degree,
    with_monomial_order,
)
from utils.validation_utils import ParseError, UsageError

R = PolyRing.from_text("x,y", "q")
x, y = R.gens


def test_parse_expands_products_and_powers():
    f = parse_polynomial("(y^2 - x^3)^2 - x^5*y", R)
    assert f == y**4 - 2 * x**3 * y**2 + x**6 - x**5 * y


def test_precedence_and_unary_minus():
    assert parse_polynomial("-x^2", R) == -(x**2)
    assert parse_polynomial("2*x^2 + 3*y", R) == 2 * x**2 + 3 * y
    assert parse_polynomial("x - y - 1", R) == x - y - 1
    assert parse_polynomial("-(x + y)*2", R) == -2 * x - 2 * y
    assert parse_polynomial("1/2*x", R) == R.constant("1/2") * x


@pytest.mark.parametrize(
    "text, position",
    [
        ("x + * y", 4),
        ("2x", 1),
        ("x^y", 2),
        ("x^2^3", 3),
        ("x + z", 4),
        ("x + 1/0", 4),
        ("(x + y", 6),
        ("x $ y", 2),
        ("", 0),
    ],
)
def test_parse_errors_report_positions(text, position):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, R)
    assert info.value.position == position
    assert info.value.caret_line().endswith(" " * position + "^")


def test_parse_with_parameters():
    f = parse_polynomial("x^7 - t33*x^3*y^3", R, constants={"t33": "-175/6"})
    assert f == x**7 + parse_polynomial("175/6", R) * x**3 * y**3


def test_parse_over_prime_field():
    F = PolyRing.from_text("x,y", "gf:7")
    f = parse_polynomial("1/2*x + 8*y", F)
    assert f == 4 * F.var("x") + F.var("y")


def test_render_reparses():
    for text in ["x^4 + y^5 + x*y^4", "-x^2 + 3/2*x*y - 7", "(x - y)^3"]:
        f = parse_polynomial(text, R)
        assert parse_polynomial(render_polynomial(f), R) == f
    assert render_polynomial(R.zero) == "0"
    assert render_polynomial(x**2 - R.constant("3/2") * y) == "x^2 - 3/2*y"


def test_render_prime_field_residues():
    F = PolyRing.from_text("x,y", "gf:7")
    assert render_polynomial(-F.var("x")) == "6*x"


def test_partial_derivative():
    f = parse_polynomial("x^4 + y^5 + x*y^4", R)
    assert partial_derivative(f, 0) == 4 * x**3 + y**4
    assert partial_derivative(f, 1) == 5 * y**4 + 4 * x * y**3
    with pytest.raises(UsageError):
        partial_derivative(f, 2)


def test_origin_helpers():
    assert evaluate_at_origin(1 + x) == FieldSpec.rationals().one()
    assert not evaluate_at_origin(x * y)
    assert is_unit_at_origin(2 - y)
    assert not is_unit_at_origin(R.zero)
    assert total_degree(x**3 * y + y) == 4
    assert total_degree(R.zero) == -1


def test_ring_checks():
    other = PolyRing.from_text("x,z", "q")
    with pytest.raises(UsageError):
        poly_add(x, other.var("z"))
    with pytest.raises(UsageError):
        R.coerce(PolyRing.from_text("x,y", "gf:7").var("x"))
    with pytest.raises(UsageError):
        poly_pow(x, -1)
    with pytest.raises(UsageError):
        PolyRing(("x", "x"))
    with pytest.raises(UsageError):
        R.var("z")


def test_change_ring_maps_by_name():
    big = R.extended(front=("t",))
    image = change_ring(x * y + 1, big.ring)
    assert image == big.var("x") * big.var("y") + 1
    assert change_ring(image, R.ring) == x * y + 1
    with pytest.raises(UsageError):
        change_ring(big.var("t"), R.ring)


def test_orders():
    assert EliminationOrder(1) == EliminationOrder(1, grevlex)
    assert hash(EliminationOrder(2)) == hash(EliminationOrder(2))
    assert EliminationOrder(1) != EliminationOrder(2)
    order = EliminationOrder(1)
    # any monomial with t beats every t-free one
    assert order((1, 0, 0)) > order((0, 5, 5))
    weighted = WeightedOrder((2, 3))
    assert weighted((0, 2)) > weighted((2, 0))
    assert monomial_order("lex") == lex
    assert monomial_order("block_elimination", front=1) == EliminationOrder(1)
    with pytest.raises(UsageError):
        monomial_order("revlex")
    with pytest.raises(UsageError):
        WeightedOrder((1, 0))


def test_with_monomial_order_keeps_the_polynomial():
    f = x**2 + x * y**3
    g = with_monomial_order(f, lex)
    assert g.ring.order == lex
    assert g.LM == (2, 0)
    assert f.LM == (1, 3)
    assert with_monomial_order(g, grevlex) == f


def _random_polynomial(rng, ring, terms=4):
    x, y = ring.gens
    result = ring.zero
    for a, b, n, d in zip(
        rng.integers(0, 4, size=terms),
        rng.integers(0, 4, size=terms),
        rng.integers(-9, 10, size=terms),
        rng.integers(1, 10, size=terms),
    ):
        result += ring.constant(f"{int(n)}/{int(d)}") * x ** int(a) * y ** int(b)
    return result


def test_bad_parameter_value_is_a_parse_error():
    with pytest.raises(ParseError) as info:
        parse_polynomial("x^2 + a*y", R, constants={"a": "abc"})
    assert info.value.position == 6


@pytest.mark.parametrize("field", ["q", "gf:32003"])
def test_random_polynomial_identities(field):
    rng = np.random.default_rng(5)
    ring = PolyRing.from_text("x,y", field)
    for _ in range(25):
        f, g = _random_polynomial(rng, ring), _random_polynomial(rng, ring)
        assert parse_polynomial(render_polynomial(f), ring) == f
        for index in (0, 1):
            assert partial_derivative(poly_mul(f, g), index) == poly_add(
                poly_mul(partial_derivative(f, index), g),
                poly_mul(f, partial_derivative(g, index)),
            )
        k = int(rng.integers(0, 5))
        repeated = ring.one
        for _ in range(k):
            repeated = poly_mul(repeated, f)
        assert poly_pow(f, k) == repeated
