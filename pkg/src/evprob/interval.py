"""Exact closed subintervals of [0, 1].

Endpoints are :class:`fractions.Fraction` values, so conflict and nesting
checks never suffer from rounding: ``[0.3, 0.4]`` and ``[0.4, 0.7]`` share
the endpoint 0.4 exactly and are reported as conflicting.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "Interval",
    "IntervalSyntaxError",
    "agrees",
    "conflicts",
    "cover",
    "cover_all",
    "format_number",
    "narrowest",
    "nests_in",
    "parse_interval",
    "parse_number",
    "sort_key",
    "width",
]

MAX_FRACTION_DIGITS = 9

Number = Union[int, Fraction, str]

_NUMBER_RE = re.compile(r"(\d+)/(\d+)|(\d+)(?:\.(\d+))?|\.(\d+)")
_INTERVAL_RE = re.compile(r"\[\s*([^,\]\s]*)\s*,\s*([^,\]\s]*)\s*\]")


class IntervalSyntaxError(ValueError):
    """Malformed interval or number literal.

    ``offset`` is the 0-based character position of the problem within the
    text that was being parsed.
    """

    def __init__(self, message: str, offset: int = 0, text: str = ""):
        super().__init__(message)
        self.message = message
        self.offset = offset
        self.text = text


def parse_number(text: str) -> Fraction:
    """Parse a decimal (at most 9 fractional digits) or ``a/b`` literal exactly."""
    m = _NUMBER_RE.fullmatch(text.strip())
    if m is None:
        raise IntervalSyntaxError(f"invalid number {text!r}", 0, text)
    num, den, whole, frac, bare_frac = m.groups()
    if num is not None:
        if int(den) == 0:
            raise IntervalSyntaxError("zero denominator", 0, text)
        return Fraction(int(num), int(den))
    if bare_frac is not None:
        whole, frac = "0", bare_frac
    if frac and len(frac) > MAX_FRACTION_DIGITS:
        raise IntervalSyntaxError(
            f"more than {MAX_FRACTION_DIGITS} fractional digits", 0, text
        )
    return Fraction(int(whole + (frac or "")), 10 ** len(frac or ""))


def format_number(x: Fraction) -> str:
    """Shortest decimal form of ``x``; ``a/b`` when no short decimal exists."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    for digits in range(1, MAX_FRACTION_DIGITS + 1):
        scaled = x * 10**digits
        if scaled.denominator == 1:
            sign = "-" if scaled < 0 else ""
            whole, frac = divmod(abs(scaled.numerator), 10**digits)
            return f"{sign}{whole}.{frac:0{digits}d}"
    return f"{x.numerator}/{x.denominator}"


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        # floats carry binary rounding error; callers pass strings instead
        raise TypeError(f"interval endpoints must be exact, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_number(value)
    raise TypeError(f"cannot use {value!r} as an interval endpoint")


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[lower, upper]`` with ``0 <= lower <= upper <= 1``.

    Endpoints may be given as ints, Fractions or numeric strings::

        >>> Interval("0.70", "0.75")
        Interval('0.7', '0.75')
    """

    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        lo = _coerce(self.lower)
        hi = _coerce(self.upper)
        if lo < 0 or hi > 1 or lo > 1 or hi < 0:
            raise ValueError("interval out of [0,1]")
        if lo > hi:
            raise ValueError("lower exceeds upper")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @classmethod
    def parse(cls, text: str) -> "Interval":
        return parse_interval(text)

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def __str__(self):
        return f"[{format_number(self.lower)}, {format_number(self.upper)}]"

    def __repr__(self):
        return (
            f"Interval({format_number(self.lower)!r}, "
            f"{format_number(self.upper)!r})"
        )


def parse_interval(text: str) -> Interval:
    """Parse ``"[L, U]"`` where L and U are decimal or fraction literals."""
    m = _INTERVAL_RE.fullmatch(text.strip())
    if m is None:
        raise IntervalSyntaxError(f"malformed interval {text!r}", 0, text)
    lead = len(text) - len(text.lstrip())
    endpoints = []
    for group in (1, 2):
        try:
            endpoints.append(parse_number(m.group(group)))
        except IntervalSyntaxError as exc:
            raise IntervalSyntaxError(
                exc.message, lead + m.start(group), m.group(group)
            ) from None
    try:
        return Interval(*endpoints)
    except ValueError as exc:
        raise IntervalSyntaxError(str(exc), 0, text) from None


def nests_in(a: Interval, b: Interval) -> bool:
    """True when ``a`` is contained in ``b``."""
    return b.lower <= a.lower and a.upper <= b.upper


def conflicts(a: Interval, b: Interval) -> bool:
    """True when neither interval nests in the other."""
    return not (nests_in(a, b) or nests_in(b, a))


def agrees(a: Interval, b: Interval) -> bool:
    return not conflicts(a, b)


def cover(a: Interval, b: Interval) -> Interval:
    """Smallest interval containing both ``a`` and ``b``."""
    return Interval(min(a.lower, b.lower), max(a.upper, b.upper))


def cover_all(xs: Iterable[Interval]) -> Interval:
    xs = list(xs)
    if not xs:
        raise ValueError("empty interval set")
    return Interval(min(x.lower for x in xs), max(x.upper for x in xs))


def width(a: Interval) -> Fraction:
    return a.upper - a.lower


def sort_key(a: Interval) -> tuple:
    """Ordering used wherever intervals are ranked: width, then lower, then upper."""
    return (a.upper - a.lower, a.lower, a.upper)


def narrowest(xs: Iterable[Interval]) -> Interval:
    """Narrowest interval, ties broken by lower then upper endpoint."""
    xs = list(xs)
    if not xs:
        raise ValueError("empty interval set")
    return min(xs, key=sort_key)
