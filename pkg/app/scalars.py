"""
Exact field arithmetic for morphism entries.

Two kinds of field are supported: the rationals, whose raw values are
``fractions.Fraction``, and prime fields F_p, whose raw values are ints in
``[0, p)``. Hot loops work on raw values through the ``FieldSpec`` methods;
``Scalar`` is the checked public wrapper.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union
from app.exceptions import (
    DivisionByZeroError,
    FieldMismatchError,
    ScalarError,
    SpecParseError,
)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")
_INTEGER_RE = re.compile(r"^\s*([+-]?\d+)\s*$")

Raw = Union[Fraction, int]


def is_prime(n: int) -> bool:
    """Trial-division primality test for small moduli."""
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The base field: ``kind`` is ``'Q'`` or ``'Fp'``."""

    kind: str = "Q"
    modulus: int = 0

    def __post_init__(self):
        if self.kind not in ("Q", "Fp"):
            raise ScalarError(f"Unknown field kind: {self.kind}")
        if self.kind == "Fp" and not is_prime(self.modulus):
            raise ScalarError(f"Modulus must be prime, got {self.modulus}")

    @classmethod
    def rationals(cls) -> 'FieldSpec':
        return cls("Q", 0)

    @classmethod
    def prime(cls, p: int) -> 'FieldSpec':
        return cls("Fp", p)

    @classmethod
    def parse_spec(cls, text: str) -> 'FieldSpec':
        """Parse ``"Q"`` or ``"Fp:<p>"``."""
        text = text.strip()
        if text == "Q":
            return cls.rationals()
        if text.startswith("Fp:"):
            try:
                return cls.prime(int(text[3:]))
            except ValueError:
                raise SpecParseError(f"Malformed field spec: {text}")
        raise SpecParseError(f"Malformed field spec: {text}")

    @property
    def label(self) -> str:
        return "Q" if self.kind == "Q" else f"Fp:{self.modulus}"

    # raw arithmetic

    def reduce(self, x) -> Raw:
        if self.kind == "Q":
            return Fraction(x)
        if isinstance(x, Fraction):
            num = x.numerator % self.modulus
            den = x.denominator % self.modulus
            if den == 0:
                raise DivisionByZeroError(f"Denominator vanishes mod {self.modulus}")
            return (num * pow(den, -1, self.modulus)) % self.modulus
        return int(x) % self.modulus

    @property
    def zero(self) -> Raw:
        return Fraction(0) if self.kind == "Q" else 0

    @property
    def one(self) -> Raw:
        return Fraction(1) if self.kind == "Q" else 1

    def add(self, a: Raw, b: Raw) -> Raw:
        if self.kind == "Q":
            return a + b
        return (a + b) % self.modulus

    def sub(self, a: Raw, b: Raw) -> Raw:
        if self.kind == "Q":
            return a - b
        return (a - b) % self.modulus

    def mul(self, a: Raw, b: Raw) -> Raw:
        if self.kind == "Q":
            return a * b
        return (a * b) % self.modulus

    def neg(self, a: Raw) -> Raw:
        if self.kind == "Q":
            return -a
        return (-a) % self.modulus

    def inv(self, a: Raw) -> Raw:
        if a == 0:
            raise DivisionByZeroError("Cannot invert zero")
        if self.kind == "Q":
            return 1 / a
        return pow(a, -1, self.modulus)

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def parse(self, text: str) -> Raw:
        """Parse the textual scalar grammar into a raw value."""
        text = str(text)
        if self.kind == "Q":
            match = _RATIONAL_RE.match(text)
            if not match:
                raise SpecParseError(f"Malformed rational: {text!r}")
            num = int(match.group(1))
            den = int(match.group(2)) if match.group(2) is not None else 1
            if den == 0:
                raise SpecParseError(f"Zero denominator in {text!r}")
            return Fraction(num, den)
        match = _INTEGER_RE.match(text)
        if not match:
            raise SpecParseError(f"Malformed residue: {text!r}")
        return int(match.group(1)) % self.modulus

    def render(self, a: Raw) -> str:
        if self.kind == "Q":
            a = Fraction(a)
            if a.denominator == 1:
                return str(a.numerator)
            return f"{a.numerator}/{a.denominator}"
        return str(int(a) % self.modulus)


@dataclass(frozen=True)
class Scalar:
    """An exact field element in canonical form."""

    field: FieldSpec
    value: Raw

    @classmethod
    def of(cls, field: FieldSpec, x) -> 'Scalar':
        return cls(field, field.reduce(x))

    def _check(self, other: 'Scalar'):
        if not isinstance(other, Scalar) or other.field != self.field:
            raise FieldMismatchError(
                f"Cannot combine scalars over {self.field.label} and "
                f"{getattr(getattr(other, 'field', None), 'label', other)}"
            )

    def __add__(self, other: 'Scalar') -> 'Scalar':
        self._check(other)
        return Scalar(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: 'Scalar') -> 'Scalar':
        self._check(other)
        return Scalar(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other: 'Scalar') -> 'Scalar':
        self._check(other)
        return Scalar(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other: 'Scalar') -> 'Scalar':
        self._check(other)
        if other.value == 0:
            raise DivisionByZeroError("Cannot divide by zero")
        return Scalar(self.field, self.field.div(self.value, other.value))

    def __neg__(self) -> 'Scalar':
        return Scalar(self.field, self.field.neg(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return self.field.render(self.value)


_ARITH = {
    'add': Scalar.__add__,
    'sub': Scalar.__sub__,
    'mul': Scalar.__mul__,
    'div': Scalar.__truediv__,
}


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """
    Combine two scalars exactly.

    Args:
        a: Left operand
        b: Right operand
        op: One of ``add``, ``sub``, ``mul``, ``div``

    Returns:
        The canonical result

    Raises:
        FieldMismatchError: If the operands live in different fields
        DivisionByZeroError: If ``op`` is ``div`` and ``b`` is zero
    """
    func = _ARITH.get(op)
    if func is None:
        raise ScalarError(f"Unknown scalar operation: {op}")
    return func(a, b)


def scalar_parse(text: str, field: FieldSpec) -> Scalar:
    """Parse ``text`` into a canonical scalar of ``field``."""
    return Scalar(field, field.parse(text))


def scalar_render(a: Scalar) -> str:
    """Render a scalar in the textual grammar."""
    return a.field.render(a.value)
