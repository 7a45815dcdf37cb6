"""Exact arithmetic in the field of rationals with i adjoined.

Unit scalars (squared modulus exactly 1) stand in for phases e^{i.theta};
they are generated from Pythagorean triples, so "random phase" sampling stays
inside the field and every identity can be checked with exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random

RationalLike = Fraction | int | str


def _to_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class GaussianScalar:
    """An exact element re + im*i of the Gaussian rationals."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", _to_fraction(self.re))
        object.__setattr__(self, "im", _to_fraction(self.im))

    # -- constructors -----------------------------------------------------------

    @classmethod
    def of(cls, re: RationalLike = 0, im: RationalLike = 0) -> "GaussianScalar":
        return cls(_to_fraction(re), _to_fraction(im))

    @classmethod
    def i(cls) -> "GaussianScalar":
        return cls(Fraction(0), Fraction(1))

    @classmethod
    def one(cls) -> "GaussianScalar":
        return cls(Fraction(1), Fraction(0))

    @classmethod
    def zero(cls) -> "GaussianScalar":
        return cls()

    @classmethod
    def unit_from_triple(cls, m: int, n: int) -> "GaussianScalar":
        """The unit ((m^2 - n^2) + 2mn*i) / (m^2 + n^2) from a Pythagorean triple."""
        if m == 0 and n == 0:
            raise ValueError("m and n cannot both be zero")
        denom = m * m + n * n
        return cls(Fraction(m * m - n * n, denom), Fraction(2 * m * n, denom))

    @classmethod
    def random_unit(cls, rng: Random, max_parameter: int = 30) -> "GaussianScalar":
        """A random exact unit: a Pythagorean phase times a fourth root of unity."""
        m = rng.randint(1, max_parameter)
        n = rng.randint(0, max_parameter)
        unit = cls.unit_from_triple(m, n) if (m, n) != (0, 0) else cls.one()
        rotation = rng.choice([cls.one(), cls.i(), -cls.one(), -cls.i()])
        return unit * rotation

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other: "GaussianScalar") -> "GaussianScalar":
        return GaussianScalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianScalar") -> "GaussianScalar":
        return GaussianScalar(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianScalar":
        return GaussianScalar(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, GaussianScalar):
            return GaussianScalar(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction)):
            return GaussianScalar(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: "GaussianScalar") -> "GaussianScalar":
        norm = other.norm_sq()
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian scalar")
        conj = other.conjugate()
        product = self * conj
        return GaussianScalar(product.re / norm, product.im / norm)

    def conjugate(self) -> "GaussianScalar":
        return GaussianScalar(self.re, -self.im)

    def inverse(self) -> "GaussianScalar":
        return GaussianScalar.one() / self

    def norm_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        return self.norm_sq() == 1

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re} {sign} {abs(self.im)}i"

    # -- serialization ----------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "re_num": self.re.numerator,
            "re_den": self.re.denominator,
            "im_num": self.im.numerator,
            "im_den": self.im.denominator,
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "GaussianScalar":
        return cls(
            Fraction(int(doc["re_num"]), int(doc["re_den"])),
            Fraction(int(doc["im_num"]), int(doc["im_den"])),
        )

    def to_string_pairs(self) -> list[list[str]]:
        """[[re_num, re_den], [im_num, im_den]] as strings, for exact interchange."""
        return [
            [str(self.re.numerator), str(self.re.denominator)],
            [str(self.im.numerator), str(self.im.denominator)],
        ]

    @classmethod
    def from_string_pairs(cls, doc) -> "GaussianScalar":
        (rn, rd), (im_n, im_d) = doc
        return cls(Fraction(int(rn), int(rd)), Fraction(int(im_n), int(im_d)))
