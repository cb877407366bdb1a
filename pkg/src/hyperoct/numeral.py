"""Hyperoctahedral numeral system.

A mixed-radix positional system whose place values are ``B_i = 2**i * i!``
(the orders of the hyperoctahedral groups: 1, 2, 8, 48, 384, ...).  The digit
at position ``i`` (counted from the right, zero-based) lies in ``0..2i+1``, so
the radix between positions ``i`` and ``i+1`` is ``2(i+1)``.

Digits are stored most significant first, the way numerals are written::

    >>> from_integer(2711)
    HyperNumeral(digits=(7, 0, 2, 3, 1), fixed_width=False)
    >>> to_integer(parse("7:0:2:3:1"))
    2711
"""

from dataclasses import dataclass
from math import factorial
from typing import Iterable, Optional, Sequence

from .errors import HyperoctError, InvalidDigitError, MalformedTextError, WidthOverflowError

COLON = "colon"
COMPACT = "compact"


def place_value(i: int) -> int:
    """Return ``B_i = 2**i * i!`` exactly."""
    if i < 0:
        raise ValueError(f"place index must be non-negative, got {i}")
    return factorial(i) << i


def digit_bound(position: int) -> int:
    """Largest digit allowed at ``position`` (from the right)."""
    return 2 * position + 1


@dataclass(frozen=True)
class HyperNumeral:
    """Digit vector in the hyperoctahedral system, most significant digit first.

    Canonical numerals carry no leading zero (zero itself is ``(0,)``).  A
    fixed-width numeral keeps its leading zeros; its width is ``len(digits)``.
    Build instances through :func:`validate`, :func:`from_integer` or
    :func:`parse` so the digit bounds are checked.
    """

    digits: tuple
    fixed_width: bool = False

    @property
    def width(self) -> int:
        return len(self.digits)

    def digit(self, position: int) -> int:
        """Digit ``d_position``, counting positions from the right."""
        return self.digits[len(self.digits) - 1 - position]

    def little_endian(self) -> tuple:
        """Digits as ``(d_0, d_1, ..., d_{k-1})``."""
        return self.digits[::-1]

    def __int__(self) -> int:
        return to_integer(self)

    def __str__(self) -> str:
        return format_numeral(self)


def validate(digits: Iterable[int], fixed_width: bool = False) -> HyperNumeral:
    """Check every digit against its bound and return a numeral.

    The leftmost offending digit is reported.  Leading zeros are stripped
    unless ``fixed_width`` is set.
    """
    digits = tuple(digits)
    k = len(digits)
    for idx, d in enumerate(digits):
        position = k - 1 - idx
        if isinstance(d, bool) or not isinstance(d, int):
            raise TypeError(f"digit at position {position} is not an integer: {d!r}")
        bound = digit_bound(position)
        if d < 0 or d > bound:
            raise InvalidDigitError(position, d, bound)
    if not fixed_width:
        digits = _strip(digits)
    return HyperNumeral(digits, fixed_width)


def _strip(digits: Sequence[int]) -> tuple:
    start = 0
    while start < len(digits) - 1 and digits[start] == 0:
        start += 1
    return tuple(digits[start:]) if digits else (0,)


def from_integer(n: int, width: Optional[int] = None) -> HyperNumeral:
    """Convert a non-negative integer by repeated division.

    ``q_{i-1} = d_i + 2(i+1) q_i`` until the quotient vanishes.  With ``width``
    the result is a fixed-width numeral padded with leading zeros;
    :class:`WidthOverflowError` is raised if ``n`` needs more digits.
    """
    if n < 0:
        raise ValueError(f"cannot represent negative integer {n}")
    little = []
    q = n
    radix = 2
    while q:
        q, r = divmod(q, radix)
        little.append(r)
        radix += 2
    if width is None:
        return HyperNumeral(tuple(reversed(little)) or (0,))
    if len(little) > width:
        raise WidthOverflowError(n, width)
    little.extend([0] * (width - len(little)))
    return HyperNumeral(tuple(reversed(little)), fixed_width=True)


def to_integer(h) -> int:
    """Horner evaluation: ``d <- d*2*i + d_{i-1}`` for ``i = k-1 .. 1``.

    Accepts a :class:`HyperNumeral` or a raw digit sequence; raw sequences are
    validated first.
    """
    digits = h.digits if isinstance(h, HyperNumeral) else validate(h, fixed_width=True).digits
    if not digits:
        return 0
    k = len(digits)
    d = digits[0]
    for idx in range(1, k):
        i = k - idx
        d = d * 2 * i + digits[idx]
    return d


def successor(h: HyperNumeral) -> HyperNumeral:
    """Increment by one with carries, growing the width on overflow."""
    little = list(h.little_endian())
    i = 0
    while True:
        if i == len(little):
            little.append(1)
            break
        if little[i] < digit_bound(i):
            little[i] += 1
            break
        little[i] = 0
        i += 1
    return HyperNumeral(tuple(reversed(little)), h.fixed_width)


def parse(text: str, fixed_width: bool = False) -> HyperNumeral:
    """Read ``"7:0:2:3:1"`` (colon groups) or ``"1501"`` (one character per digit)."""
    s = text.strip()
    if not s:
        raise MalformedTextError(text, "empty numeral")
    if ":" in s:
        groups = [g.strip() for g in s.split(":")]
        if any(not g.isascii() or not g.isdigit() for g in groups):
            raise MalformedTextError(text, "colon groups must be decimal digits")
        digits = [int(g) for g in groups]
    else:
        if not s.isascii() or not s.isdigit():
            raise MalformedTextError(text, "compact numerals use the characters 0-9 only")
        digits = [int(c) for c in s]
    return validate(digits, fixed_width=fixed_width)


def format_numeral(h: HyperNumeral, style: str = COLON) -> str:
    if style == COLON:
        return ":".join(str(d) for d in h.digits)
    if style == COMPACT:
        if any(d > 9 for d in h.digits):
            raise HyperoctError(f"compact form needs every digit <= 9: {format_numeral(h)}")
        return "".join(str(d) for d in h.digits)
    raise ValueError(f"unknown numeral style {style!r}")
