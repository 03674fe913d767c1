# Standard library imports
from fractions import Fraction

# Related third-party imports
import numpy as np
import pytest

# Local application/library specific imports
from coeffs import FieldSpec, field_add, field_inv, field_mul, render_element
from utils.validation_utils import UsageError

GF7 = FieldSpec.prime_field(7)
QQ_FIELD = FieldSpec.rationals()


def test_from_text():
    assert FieldSpec.from_text("q") == QQ_FIELD
    assert FieldSpec.from_text(" GF:32003 ") == FieldSpec.prime_field(32003)
    assert FieldSpec.from_text("gf:7").text == "gf:7"
    assert QQ_FIELD.text == "q"


@pytest.mark.parametrize("text", ["r", "gf:", "gf:x", "gf:8", "gf:2", "gf:1"])
def test_from_text_rejects_bad_fields(text):
    with pytest.raises(UsageError):
        FieldSpec.from_text(text)


def test_labels():
    assert QQ_FIELD.label == "exact"
    assert GF7.label == "characteristic-p evidence"


def test_rational_conversion_is_canonical():
    half = QQ_FIELD.element("3/6")
    assert half == QQ_FIELD.element(Fraction(1, 2))
    assert (half.numerator, half.denominator) == (1, 2)
    assert QQ_FIELD.element("-4/8").numerator == -1


def test_prime_field_conversion():
    assert GF7.element("1/2").residue == 4
    assert GF7.element(-1).residue == 6
    assert GF7.element(Fraction(-175, 6)) == GF7.element(-175) / GF7.element(6)


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        QQ_FIELD.element("1/0")
    with pytest.raises(ZeroDivisionError):
        GF7.element("1/7")


def test_arithmetic():
    a, b = QQ_FIELD.element("1/3"), QQ_FIELD.element("1/6")
    assert field_add(a, b) == QQ_FIELD.element("1/2")
    assert field_mul(a, b) == QQ_FIELD.element("1/18")
    assert a - b == b
    assert a / b == QQ_FIELD.element(2)
    assert 2 * a == QQ_FIELD.element("2/3")
    assert -GF7.element(3) == GF7.element(4)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        field_inv(GF7.zero())
    with pytest.raises(ZeroDivisionError):
        QQ_FIELD.one() / 0


def test_mixing_fields_is_rejected():
    with pytest.raises(UsageError):
        field_add(QQ_FIELD.one(), GF7.one())
    with pytest.raises(UsageError):
        GF7.convert(QQ_FIELD.one())


def test_render_element():
    assert render_element(QQ_FIELD.element("-6/4")) == "-3/2"
    assert render_element(QQ_FIELD.element(5)) == "5"
    assert render_element(GF7.element(-1)) == "6 mod 7"


def test_inverse_property():
    rng = np.random.default_rng(7)
    p = 32003
    field_spec = FieldSpec.prime_field(p)
    for value in rng.integers(1, p, size=50):
        a = field_spec.element(int(value))
        assert field_mul(a, field_inv(a)) == field_spec.one()
    for numerator, denominator in rng.integers(1, 1000, size=(50, 2)):
        a = QQ_FIELD.element(Fraction(int(numerator), int(denominator)))
        assert a * field_inv(a) == QQ_FIELD.one()


def test_text_that_is_not_a_number():
    with pytest.raises(UsageError, match="not a field value"):
        QQ_FIELD.element("abc")
    with pytest.raises(UsageError):
        GF7.element("1/x")


@pytest.mark.parametrize("field_spec", [QQ_FIELD, FieldSpec.prime_field(32003)])
def test_ring_axioms_on_random_elements(field_spec):
    rng = np.random.default_rng(13)
    for _ in range(40):
        numerators = rng.integers(-500, 500, size=3)
        denominators = rng.integers(1, 500, size=3)
        a, b, c = (
            field_spec.element(Fraction(int(n), int(d))) for n, d in zip(numerators, denominators)
        )
        assert field_add(field_add(a, b), c) == field_add(a, field_add(b, c))
        assert field_mul(field_mul(a, b), c) == field_mul(a, field_mul(b, c))
        assert field_mul(a, field_add(b, c)) == field_add(field_mul(a, b), field_mul(a, c))
        assert field_add(a, b) == field_add(b, a)
