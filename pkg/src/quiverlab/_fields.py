"""
Base fields: the rationals and prime fields.
"""

import re
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Any

from beartype import beartype
from sympy import GF, QQ, isprime
from sympy.polys.domains.domain import Domain

_FIELD_PATTERN = re.compile(pattern=r"^(?:Q|F(?P<order>[0-9]+))$")


@cache
def _domain(characteristic: int) -> Domain:
    """
    The sympy domain for a characteristic.
    """
    if characteristic == 0:
        return QQ
    return GF(characteristic, symmetric=False)


@beartype
@dataclass(frozen=True, order=True)
class Field:
    """
    The rationals (characteristic 0) or the prime field of the given
    characteristic.
    """

    characteristic: int

    def __post_init__(self) -> None:
        """
        Check that the characteristic is zero or a prime.
        """
        if self.characteristic != 0 and not isprime(self.characteristic):
            message = f"{self.characteristic} is not a prime."
            raise ValueError(message)

    @property
    def name(self) -> str:
        """
        ``Q`` or ``F<p>``, as written in ``.bq`` documents.
        """
        if self.characteristic == 0:
            return "Q"
        return f"F{self.characteristic}"

    @property
    def is_finite(self) -> bool:
        """
        Whether this is a prime field.
        """
        return self.characteristic != 0

    @property
    def domain(self) -> Domain:
        """
        The sympy domain used for exact arithmetic.
        """
        return _domain(characteristic=self.characteristic)

    @property
    def zero(self) -> Any:
        """
        The zero element of the domain.
        """
        return self.domain.zero

    @property
    def one(self) -> Any:
        """
        The unit element of the domain.
        """
        return self.domain.one

    def scalar(self, value: int | Fraction) -> Any:
        """
        Convert an exact rational to an element of the field.

        Raises:
            ZeroDivisionError: The denominator vanishes in the field.
        """
        value = Fraction(value)
        numerator = self.domain.convert(value.numerator)
        denominator = self.domain.convert(value.denominator)
        if not denominator:
            message = f"{value} has no image in {self.name}."
            raise ZeroDivisionError(message)
        return numerator / denominator

    def to_fraction(self, element: Any) -> Fraction:
        """
        A rational representative of an element.

        Prime field elements are represented in ``0, ..., p - 1``.
        """
        if self.is_finite:
            return Fraction(int(self.domain.to_int(element)))
        return Fraction(
            int(element.numerator),
            int(element.denominator),
        )

    def elements(self) -> Iterator[Any]:
        """
        Iterate over the elements of a prime field in the order
        ``0, 1, ..., p - 1``.

        Raises:
            ValueError: The field is infinite.
        """
        if not self.is_finite:
            message = "The rationals cannot be enumerated."
            raise ValueError(message)
        for value in range(self.characteristic):
            yield self.domain.convert(value)


RATIONALS = Field(characteristic=0)


@beartype
def parse_field(text: str) -> Field:
    """
    Parse ``Q`` or ``F<p>``.

    Raises:
        ValueError: The text does not name a supported field.
    """
    match = _FIELD_PATTERN.match(string=text.strip())
    if match is None:
        message = f"'{text}' is not 'Q' or 'F<p>'."
        raise ValueError(message)
    order = match.group("order")
    if order is None:
        return RATIONALS
    return Field(characteristic=int(order))
