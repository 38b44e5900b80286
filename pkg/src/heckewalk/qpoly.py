"""Exact arithmetic for polynomials in q over the integers.

A polynomial is stored densely as a tuple of arbitrary-precision integer
coefficients in ascending degree, with no trailing zeros; the zero
polynomial is the empty tuple.  Products of many q-integers at large
exponents overflow 64-bit integers quickly, so exactness relies on Python
ints throughout.

Rational values (used when specializing q) are plain ``fractions.Fraction``,
which already keeps numerator/denominator reduced with a positive
denominator.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union


class QPoly:
    """Immutable polynomial in q with exact integer coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    # -- ring structure -------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Union[int, "QPoly"]) -> "QPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other: Union[int, "QPoly"]) -> "QPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Union[int, "QPoly"]) -> "QPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other: Union[int, "QPoly"]) -> "QPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QPoly":
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"nonnegative integer exponent expected, got {e!r}")
        result = QPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- evaluation ------------------------------------------------------

    def eval(self, x: Union[int, Fraction]) -> Fraction:
        """Evaluate exactly at a rational point by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- presentation / serialization -------------------------------------

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                term = str(mag)
            else:
                var = "q" if d == 1 else f"q^{d}"
                term = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def to_json(self) -> list[str]:
        """JSON form: decimal coefficient strings, ascending degree."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> "QPoly":
        return cls(int(s) for s in data)


def _coerce(value: Union[int, QPoly]) -> QPoly:
    if isinstance(value, QPoly):
        return value
    if isinstance(value, int):
        return QPoly((value,))
    raise TypeError(f"cannot treat {type(value).__name__} as a polynomial")


def q_int(i: int) -> QPoly:
    """The q-integer 1 + q + ... + q^(i-1); requires i >= 1."""
    if not isinstance(i, int) or i < 1:
        raise ValueError(f"q_int requires a positive integer, got {i!r}")
    return QPoly((1,) * i)


def rational_to_json(x: Fraction) -> dict[str, str]:
    """JSON form of a rational: decimal numerator/denominator strings."""
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rational_from_json(data: dict[str, str]) -> Fraction:
    return Fraction(int(data["num"]), int(data["den"]))


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q', an integer, or a decimal string into an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse {text!r} as a rational number") from exc
