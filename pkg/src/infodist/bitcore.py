"""Binary strings, the length-lex string/integer bijection, pairing and XOR.

Bit strings are plain ``str`` objects over the alphabet ``{"0", "1"}``.
The empty string plays the role of epsilon. Everywhere a "least" string is
needed the length-lexicographic order is used, via :func:`lenlex_key`.
"""

from __future__ import annotations

from itertools import product
from math import isqrt
from typing import Iterator

from .errors import LengthMismatch

BitString = str

EPSILON: BitString = ""


def is_bitstring(s: object) -> bool:
    return isinstance(s, str) and all(ch in "01" for ch in s)


def check_bitstring(s: str) -> str:
    if not is_bitstring(s):
        raise ValueError(f"not a binary string: {s!r}")
    return s


def string_of(i: int) -> BitString:
    """Return the ``i``-th string in the order eps, 0, 1, 00, 01, 10, 11, ...

    >>> [string_of(i) for i in range(7)]
    ['', '0', '1', '00', '01', '10', '11']
    """
    if i < 0:
        raise ValueError("index must be nonnegative")
    # i + 1 written in binary, leading 1 dropped
    return bin(i + 1)[3:]


def index(x: BitString) -> int:
    """Inverse of :func:`string_of`."""
    check_bitstring(x)
    return int("1" + x, 2) - 1


def lenlex_key(x: BitString) -> tuple[int, str]:
    return (len(x), x)


def strings_of_length(n: int) -> Iterator[BitString]:
    """All strings of length ``n`` in increasing (lexicographic) order."""
    for bits in product("01", repeat=n):
        yield "".join(bits)


def strings_up_to(n: int) -> Iterator[BitString]:
    """All strings of length at most ``n`` in length-lex order."""
    for k in range(n + 1):
        yield from strings_of_length(k)


def pair(x: int, y: int) -> int:
    """Cantor-style pairing ``y + (x + y + 1)(x + y) / 2``."""
    if x < 0 or y < 0:
        raise ValueError("pair is defined on nonnegative integers")
    s = x + y
    return y + (s + 1) * s // 2


def unpair(z: int) -> tuple[int, int]:
    if z < 0:
        raise ValueError("unpair is defined on nonnegative integers")
    # largest s with s(s+1)/2 <= z
    s = (isqrt(8 * z + 1) - 1) // 2
    y = z - s * (s + 1) // 2
    return s - y, y


def xor(v: BitString, u: BitString) -> BitString:
    if len(v) != len(u):
        raise LengthMismatch(f"xor of strings of lengths {len(v)} and {len(u)}")
    check_bitstring(v)
    check_bitstring(u)
    return "".join("1" if a != b else "0" for a, b in zip(v, u))


def ceil_log2(n: int) -> int:
    """``ceil(log2 n)`` for ``n >= 1``; 0 for ``n <= 1``."""
    if n <= 1:
        return 0
    return (n - 1).bit_length()


def render(x: BitString, human: bool = False) -> str:
    """Text form of a bit string; epsilon is ``""`` or ``"eps"``."""
    if x == "" and human:
        return "eps"
    return x


def parse(text: str) -> BitString:
    """Inverse of :func:`render` for either rendering."""
    text = text.strip()
    if text in ("eps", "ε"):
        return EPSILON
    return check_bitstring(text)
