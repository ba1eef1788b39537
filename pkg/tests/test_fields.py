"""
Tests for the base fields.
"""

from fractions import Fraction

import pytest

from quiverlab import RATIONALS, Field, parse_field


@pytest.mark.parametrize(
    argnames=("text", "expected_characteristic"),
    argvalues=[
        ("Q", 0),
        ("F2", 2),
        ("F5", 5),
        (" F7 ", 7),
    ],
)
def test_parse_field(text: str, expected_characteristic: int) -> None:
    """
    ``Q`` and ``F<p>`` name the rationals and the prime fields.
    """
    base_field = parse_field(text=text)
    assert base_field.characteristic == expected_characteristic
    assert base_field.name == text.strip()


@pytest.mark.parametrize(argnames="text", argvalues=["F4", "F1", "R", "F"])
def test_parse_field_invalid(text: str) -> None:
    """
    Names of other fields are rejected.
    """
    with pytest.raises(expected_exception=ValueError):
        parse_field(text=text)


def test_finite() -> None:
    """
    Only prime fields are finite.
    """
    assert not RATIONALS.is_finite
    assert Field(characteristic=3).is_finite


def test_scalar_inverse() -> None:
    """
    Fractions map to their images in a prime field.
    """
    base_field = Field(characteristic=5)
    half = base_field.scalar(value=Fraction(1, 2))
    assert base_field.to_fraction(element=half) == 3


def test_scalar_negative() -> None:
    """
    Prime field elements are represented by ``0, ..., p - 1``.
    """
    base_field = Field(characteristic=3)
    assert base_field.to_fraction(element=base_field.scalar(value=-1)) == 2


def test_scalar_zero_denominator() -> None:
    """
    A fraction whose denominator is a multiple of ``p`` has no image.
    """
    base_field = Field(characteristic=5)
    with pytest.raises(expected_exception=ZeroDivisionError):
        base_field.scalar(value=Fraction(1, 5))


def test_rationals_keep_fractions() -> None:
    """
    Over the rationals a fraction is its own representative.
    """
    value = RATIONALS.scalar(value=Fraction(-3, 4))
    assert RATIONALS.to_fraction(element=value) == Fraction(-3, 4)


def test_elements() -> None:
    """
    The elements of a prime field are listed in increasing order.
    """
    base_field = Field(characteristic=3)
    elements = [
        base_field.to_fraction(element=element)
        for element in base_field.elements()
    ]
    assert elements == [0, 1, 2]


def test_rationals_cannot_be_listed() -> None:
    """
    The rationals cannot be enumerated.
    """
    with pytest.raises(expected_exception=ValueError):
        list(RATIONALS.elements())
