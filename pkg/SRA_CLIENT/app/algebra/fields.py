"""Exact base fields: the rationals and prime fields GF(p) with p odd."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from sympy import isprime
from sympy.polys.domains import FF, QQ

from errors import CommandError

_FP_PATTERN = re.compile(r"^(?:fp:|gf\(|f_?)(\d+)\)?$")


@dataclass(frozen=True)
class Field:
    """Base field descriptor; characteristic 0 means the rationals."""

    characteristic: int = 0

    @classmethod
    def parse(cls, text: str) -> "Field":
        name = text.strip().lower()
        if name in ("q", "qq", "rationals"):
            return cls(0)
        match = _FP_PATTERN.match(name)
        if not match:
            raise CommandError(f"unknown field '{text}' (use q or fp:<p>)")
        p = int(match.group(1))
        if p == 2 or not isprime(p):
            raise CommandError(f"field fp:{p} needs an odd prime (2 must be invertible)")
        return cls(p)

    @cached_property
    def domain(self):
        if self.characteristic == 0:
            return QQ
        return FF(self.characteristic, symmetric=False)

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def name(self) -> str:
        return "Q" if self.is_rational else f"fp:{self.characteristic}"

    def scalar(self, value):
        """Convert an int, Fraction or domain element to a field element."""
        K = self.domain
        if isinstance(value, Fraction):
            num, den = K.convert(value.numerator), K.convert(value.denominator)
            if not den:
                raise ZeroDivisionError(f"{value.denominator} is zero in {self.name}")
            return K.quo(num, den)
        return K.convert(value)

    def to_fraction(self, c) -> Fraction:
        K = self.domain
        if self.is_rational:
            return Fraction(int(K.numer(c)), int(K.denom(c)))
        return Fraction(int(K.to_int(c)) % self.characteristic)

    def format(self, c) -> str:
        value = self.to_fraction(c)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def __str__(self):
        return self.name
