# Related third-party imports
import numpy as np
import pytest
from sympy.polys.groebnertools import groebner as sympy_groebner
from sympy.polys.orderings import grevlex, lex

# Local application/library specific imports
from groebner import (
    buchberger,
    buchberger_with_cofactors,
    divide,
    is_reduced,
    normal_form,
    normal_form_with_certificate,
    satisfies_buchberger_criterion,
    spoly,
)
from poly import EliminationOrder, PolyRing, parse_polynomial, with_monomial_order
from utils.validation_utils import UsageError

R = PolyRing.from_text("x,y,z", "q")
F = PolyRing.from_text("x,y,z", "gf:32003")


def _parse_all(texts, ring):
    return [parse_polynomial(text, ring) for text in texts]


IDEALS = [
    ["x^2 + 2*x*y^2", "x*y + 2*y^3 - 1"],
    ["x - z^2", "y - z^3"],
    ["x^3 - 2*x*y", "x^2*y + x - 2*y^2"],
    ["4*x^3 + y^4", "5*y^4 + 4*x*y^3"],
    ["x*y*z - 1", "x^2 - y", "y^2 - z*x"],
]


@pytest.mark.parametrize("texts", IDEALS)
@pytest.mark.parametrize("order", [grevlex, lex, EliminationOrder(1)])
def test_matches_sympy_reduced_basis(texts, order):
    gens = _parse_all(texts, R)
    gb = buchberger(gens, order)
    ring = gb.ring
    expected = sympy_groebner([with_monomial_order(g, order) for g in gens], ring)
    assert set(gb.elements) == set(expected)
    assert satisfies_buchberger_criterion(gb)
    assert is_reduced(gb)


def test_elements_sorted_by_leading_monomial():
    gb = buchberger(_parse_all(IDEALS[2], R), grevlex)
    keys = [grevlex(g.LM) for g in gb.elements]
    assert keys == sorted(keys)


def test_unit_and_single_generator():
    gb = buchberger(_parse_all(["x*y - 1", "x"], R), grevlex)
    assert gb.is_unit()
    assert gb.elements == (gb.ring.one,)
    gb = buchberger(_parse_all(["2*x^2 + 4*y"], R), grevlex)
    assert gb.elements == (parse_polynomial("x^2 + 2*y", R),)


def test_empty_generators_are_rejected():
    with pytest.raises(UsageError):
        buchberger([], grevlex)


def test_spoly_cancels_leading_terms():
    f, g = _parse_all(["x^2 + y", "x*y + 1"], R)
    s = spoly(f, g)
    assert s == parse_polynomial("y^2 - x", R)


def test_normal_form_and_membership():
    gb = buchberger(_parse_all(["x - z^2", "y - z^3"], R), grevlex)
    assert gb.contains(parse_polynomial("x^3 - y^2", R))
    assert normal_form(parse_polynomial("x + y", R), gb)


def test_normal_form_order_mismatch():
    gb = buchberger(_parse_all(IDEALS[0], R), lex)
    with pytest.raises(UsageError, match="order mismatch"):
        normal_form(parse_polynomial("x", R), gb)
    with pytest.raises(UsageError):
        normal_form(parse_polynomial("x", F), gb)


@pytest.mark.parametrize("ring", [R, F])
def test_cofactors_express_basis_elements(ring):
    gens = _parse_all(IDEALS[4], ring)
    gb, cofactors = buchberger_with_cofactors(gens, grevlex)
    assert gb.elements == buchberger(gens, grevlex).elements
    for element, vector in zip(gb.elements, cofactors):
        assert sum((c * g for c, g in zip(vector, gens)), gb.ring.zero) == element


def test_certificate_for_members_and_non_members():
    gens = _parse_all(["x - z^2", "y - z^3"], R)
    target = parse_polynomial("x^3 - y^2 + 1", R)
    remainder, certificate = normal_form_with_certificate(target, gens, grevlex)
    assert remainder == 1
    assert certificate.verify()
    remainder, certificate = normal_form_with_certificate(target - 1, gens, grevlex)
    assert not remainder
    assert certificate.combination() == target - 1


def _random_polys(rng, ring, count=3, terms=3):
    polys = []
    for _ in range(count):
        parts = []
        for _ in range(terms):
            a, b, c = (int(e) for e in rng.integers(0, 3, size=3))
            coefficient = int(rng.integers(1, 32003))
            parts.append(f"{coefficient}*x^{a}*y^{b}*z^{c}")
        polys.append(parse_polynomial(" + ".join(parts), ring))
    return polys


def test_random_bases_over_prime_field():
    rng = np.random.default_rng(2024)
    for _ in range(10):
        polys = _random_polys(rng, F)
        if not any(polys):
            continue
        gb = buchberger(polys, grevlex)
        assert satisfies_buchberger_criterion(gb)
        assert is_reduced(gb)
        for g in polys:
            assert gb.contains(with_monomial_order(g, grevlex))


@pytest.mark.parametrize("ring", [R, F])
def test_normal_form_agrees_with_sympy_division(ring):
    rng = np.random.default_rng(31)
    for _ in range(8):
        gb = buchberger(_random_polys(rng, ring), grevlex)
        if gb.is_zero():
            continue
        for p in _random_polys(rng, ring, count=4, terms=5):
            p = with_monomial_order(p, grevlex)
            assert normal_form(p, gb) == p.rem(list(gb.elements))


def test_divide_matches_sympy_division():
    rng = np.random.default_rng(37)
    for _ in range(10):
        divisors = [g for g in _random_polys(rng, F, count=2) if g]
        if not divisors:
            continue
        for p in _random_polys(rng, F, count=3, terms=6):
            quotients, remainder = divide(p, divisors)
            expected_quotients, expected_remainder = p.div(divisors)
            assert quotients == expected_quotients
            assert remainder == expected_remainder
    with pytest.raises(UsageError):
        divide(parse_polynomial("x", R), [R.zero])


@pytest.mark.parametrize("order", [grevlex, lex])
def test_basis_properties_on_random_ideals(order):
    rng = np.random.default_rng(41)
    for _ in range(6):
        polys = [p for p in _random_polys(rng, F) if p]
        if not polys:
            continue
        gb = buchberger(polys, order)
        assert buchberger(list(gb.elements), order).elements == gb.elements
        permuted = [polys[int(i)] for i in rng.permutation(len(polys))]
        assert buchberger(permuted, order).elements == gb.elements

        f, g = (with_monomial_order(p, order) for p in _random_polys(rng, F, count=2, terms=5))
        a, b = (gb.ring.ground_new(int(c)) for c in rng.integers(1, 32003, size=2))
        assert normal_form(a * f + b * g, gb) == a * normal_form(f, gb) + b * normal_form(g, gb)


@pytest.mark.parametrize("texts", IDEALS)
def test_pair_strategies_agree(texts):
    gens = _parse_all(texts, R)
    order = EliminationOrder(1)
    assert buchberger(gens, order, strategy="normal") == buchberger(gens, order)
    with pytest.raises(UsageError):
        buchberger(gens, order, strategy="random")
