"""Exact rational arithmetic helpers for reporting boundaries.

Difficulty indices are computed as ``fractions.Fraction`` so the documented
identities hold exactly; rounding happens once, at the edge, half away from
zero. All printed values use one decimal place.
"""

from __future__ import annotations

from fractions import Fraction

Numeric = Fraction | int | float | str


def to_fraction(value: Numeric) -> Fraction:
    """Coerce a number to an exact Fraction.

    Floats go through their shortest decimal repr, so ``0.3`` becomes 3/10
    rather than the nearest binary fraction; this keeps tolerance comparisons
    on the decimal grid users actually typed.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(str(value))


def round_half_away(value: Fraction, ndigits: int = 1) -> Fraction:
    """Round to ``ndigits`` decimals with ties going away from zero."""
    sign = -1 if value < 0 else 1
    scale = 10**ndigits
    scaled = abs(value) * scale
    q, r = divmod(scaled.numerator, scaled.denominator)
    if 2 * r >= scaled.denominator:
        q += 1
    return Fraction(sign * q, scale)


def format_fixed(value: Fraction, ndigits: int = 1) -> str:
    """Render with exactly ``ndigits`` decimals after half-away rounding."""
    scale = 10**ndigits
    scaled = round_half_away(value, ndigits) * scale
    units = scaled.numerator // scaled.denominator
    sign = "-" if units < 0 else ""
    units = abs(units)
    return f"{sign}{units // scale}.{units % scale:0{ndigits}d}"


def decimal_text(value: Fraction) -> str:
    """Exact decimal rendering for values that originated as decimal text.

    Falls back to the float repr for denominators with prime factors other
    than 2 and 5 (unreachable for values parsed from the supported file
    formats, which only carry decimal literals).
    """
    num, den = value.numerator, value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return repr(float(value))
    digits = max(twos, fives)
    scaled = abs(num) * 10**digits // value.denominator
    sign = "-" if num < 0 else ""
    if digits == 0:
        return f"{sign}{scaled}"
    text = f"{sign}{scaled // 10**digits}.{scaled % 10**digits:0{digits}d}"
    return text.rstrip("0").rstrip(".") if "." in text else text
