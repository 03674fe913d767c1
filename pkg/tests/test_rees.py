# Standard library imports
import time

# Related third-party imports
import pytest

# Local application/library specific imports
from poly import PolyRing, is_unit_at_origin, parse_polynomial, partial_derivative
from rees import (
    default_presentation_names,
    rees_ideal,
    relation_type_local,
    top_equation,
)
from utils.validation_utils import PreconditionError, UsageError

R = PolyRing.from_text("x,y", "q")
x, y = R.gens


def test_default_names_avoid_base_variables():
    assert default_presentation_names(3, ("x", "y"), f_slot=True) == ("u1", "u2", "s")
    assert default_presentation_names(2, ("x", "y")) == ("u1", "u2")
    names = default_presentation_names(2, ("u1", "s"), f_slot=True)
    assert len(set(names)) == 2
    assert not set(names) & {"u1", "s"}


def test_maximal_ideal_is_of_linear_type():
    presentation = rees_ideal([x, y], R)
    assert presentation.names == ("u1", "u2")
    assert presentation.degree_histogram() == {1: 1}
    u1, u2 = presentation.ring.var("u1"), presentation.ring.var("u2")
    X, Y = presentation.ring.var("x"), presentation.ring.var("y")
    assert presentation.defining_ideal.contains(Y * u1 - X * u2)
    evidence = relation_type_local(presentation)
    assert evidence.relation_type == 1
    assert evidence.effective_vanishes(2)


def test_square_of_maximal_ideal_has_relation_type_two():
    presentation = rees_ideal([x**2, x * y, y**2], R)
    u1, u2, u3 = (presentation.ring.var(name) for name in ("u1", "u2", "u3"))
    assert presentation.defining_ideal.contains(u1 * u3 - u2**2)
    for g in presentation.basis:
        assert presentation.is_homogeneous(g)
        assert presentation.substitution_vanishes(g)
    evidence = relation_type_local(presentation)
    assert evidence.relation_type == 2
    assert evidence.survivors[2]
    assert not evidence.effective_vanishes(2)
    assert relation_type_local(presentation, local=False).relation_type == 2


def test_substitution():
    presentation = rees_ideal([x**2, x * y, y**2], R)
    u2 = presentation.ring.var("u2")
    X = presentation.ring.var("x")
    assert presentation.substitute(X * u2**2) == {2: x**3 * y**2}
    assert not presentation.substitution_vanishes(u2)


def test_zero_generator_contributes_a_linear_equation():
    presentation = rees_ideal([x, R.zero], R)
    assert presentation.ring.var("u2") in presentation.basis


def test_rees_ideal_input_checks():
    with pytest.raises(UsageError):
        rees_ideal([R.zero, R.zero], R)
    with pytest.raises(UsageError):
        rees_ideal([x, y], R, names=("x", "u"))
    with pytest.raises(UsageError):
        rees_ideal([x, y], R, names=("u1",))


def test_top_equation_of_monomial_example():
    presentation = rees_ideal([x**2, y**2, x * y], R, names=("u1", "u2", "s"))
    top = top_equation(presentation, [x**2, y**2], x * y, 2)
    s, u1, u2 = (presentation.ring.var(name) for name in ("s", "u1", "u2"))
    assert top.equation == s**2 - u1 * u2
    assert top.monic and top.verified
    assert top.degree == 2
    assert top.unit == R.one


def test_top_equation_preconditions():
    presentation = rees_ideal([x**2, x * y, y**2], R, names=("u1", "u2", "s"))
    # y^4 is not in (x^2, x*y) * (x^2, x*y, y^2), even locally
    with pytest.raises(PreconditionError):
        top_equation(presentation, [x**2, x * y], y**2, 2)
    with pytest.raises(PreconditionError):
        top_equation(presentation, [x**2, x * y], y**2, 0)
    with pytest.raises(UsageError):
        top_equation(presentation, [x * y, x**2], y**2, 2)


def test_top_equation_of_cusp():
    f = parse_polynomial("x^2 + y^3", R)
    fx, fy = parse_polynomial("2*x", R), parse_polynomial("3*y^2", R)
    presentation = rees_ideal([fx, fy, f], R, names=("u1", "u2", "s"))
    top = top_equation(presentation, [fx, fy], f, 1)
    assert top.verified and top.monic
    # f = x/2 * f_x + y/3 * f_y lifts to s - x/2*u1 - y/3*u2
    s, u1, u2 = (presentation.ring.var(name) for name in ("s", "u1", "u2"))
    X, Y = presentation.ring.var("x"), presentation.ring.var("y")
    half, third = presentation.ring.constant("1/2"), presentation.ring.constant("1/3")
    assert top.equation == s - half * X * u1 - third * Y * u2


def test_reiffen_presentation_and_top_equation_over_rationals():
    f = parse_polynomial("x^4 + y^5 + x*y^4", R)
    fx, fy = partial_derivative(f, 0), partial_derivative(f, 1)
    start = time.perf_counter()
    presentation = rees_ideal([fx, fy, f], R, names=("u1", "u2", "s"))
    assert time.perf_counter() - start < 60
    assert set(presentation.degree_histogram()) >= {1, 2}
    assert relation_type_local(presentation).relation_type == 2

    with pytest.raises(PreconditionError):
        top_equation(presentation, [fx, fy], f, 1)
    top = top_equation(presentation, [fx, fy], f, 2)
    assert top.degree == 2
    assert top.verified
    assert top.monic or is_unit_at_origin(top.unit)
    s = presentation.ring.var("s")
    assert top.equation.degree(s) == 2
