"""Dual-mode scalars: exact arbitrary-precision rationals or 64-bit floats.

Exact values are plain ``int``/``fractions.Fraction`` objects, float values are
``float``; Python's numeric tower already gives the contamination rule we
want (exact op exact stays exact, anything touching a float becomes float).
"""

import math
import re
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction, float]

EXACT = "exact"
FLOAT = "float"

_SCALAR_RE = re.compile(r"^[+-]?(\d+(\.\d+)?|\d+/\d+)$")


def mode_of(x: Scalar) -> str:
    """Arithmetic mode of one value: ints and Fractions are exact."""
    return FLOAT if isinstance(x, float) else EXACT


def join_modes(*modes: str) -> str:
    return FLOAT if FLOAT in modes else EXACT


def is_exact(x: Scalar) -> bool:
    return not isinstance(x, float)


def to_fraction(x: Scalar) -> Fraction:
    """Lossless conversion; every binary float is a rational."""
    return Fraction(x)


def to_float(x: Scalar) -> float:
    """Round-to-nearest conversion."""
    return float(x)


def parse_scalar(token: str, exact: bool = True) -> Scalar:
    """Parse a scalar token: sign, then digits, digits.digits, or digits/digits.

    In exact mode every form becomes a reduced rational (decimal strings are
    exact, e.g. "0.2" -> 1/5); in float mode the value is rounded to nearest.
    """
    token = token.strip()
    if not _SCALAR_RE.match(token):
        raise ValueError(f"not a scalar token: {token!r}")
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {token!r}")
        value = Fraction(int(num), int(den))
        return value if exact else float(value)
    if exact:
        value = Fraction(token)
        return value.numerator if value.denominator == 1 else value
    return float(token)


def format_scalar(x: Scalar) -> str:
    """Round-trip text form: exact values as n or n/d, floats via repr."""
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite float {x!r} has no text form")
        s = repr(float(x))   # plain float repr even for numpy subclasses
        if "e" in s or "E" in s:
            # the grammar is positional only; keep the shortest digits
            s = format(Decimal(s), "f")
        return s
    raise TypeError(f"not a scalar: {x!r}")


@dataclass(frozen=True)
class Tolerance:
    """Float comparison policy; ignored entirely in exact mode."""

    rel_eps: float = 1e-9
    abs_eps: float = 1e-12

    def __post_init__(self):
        if self.rel_eps < 0 or self.abs_eps < 0:
            raise ValueError("tolerances must be nonnegative")

    def slack_ok(self, slack: Scalar, mode: str) -> bool:
        """Accept an inequality's slack: >= 0 exactly, or >= -abs_eps in float mode."""
        if mode == EXACT:
            return slack >= 0
        return slack >= -self.abs_eps

    def unit_norm_ok(self, norm_sq: Scalar, mode: str) -> bool:
        if mode == EXACT:
            return norm_sq == 1
        return abs(norm_sq - 1) <= self.rel_eps + self.abs_eps


DEFAULT_TOLERANCE = Tolerance()
