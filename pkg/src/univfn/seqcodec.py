"""Self-delimiting numbering of finite sequences of naturals.

Layout of ``seq_encode(s)`` for non-empty ``s``, read MSB first::

    1  <m0 doubled> 01  <m1 doubled> 01 ...

where "doubled" writes every bit of the element's binary form twice
(``0 -> 00``, ``1 -> 11``; the form of 0 is the single bit ``0``) and ``01``
terminates the element.  ``[]`` encodes to 0.  The layout is a file-format
contract for serialized witnesses.

``rho(alpha, i)`` reads the sequence numbered ``alpha`` as a total function
on the naturals, padding with zeros past its end.  Every finite sequence is
an initial segment of ``rho(seq_encode(s), .)``.
"""
from functools import lru_cache
from typing import Sequence

_DOUBLE = str.maketrans({"0": "00", "1": "11"})


def seq_encode(s: Sequence[int]) -> int:
    if len(s) == 0:
        return 0
    parts = ["1"]
    for m in s:
        if m < 0:
            raise ValueError(f"sequence element must be non-negative, got {m}")
        parts.append(bin(m)[2:].translate(_DOUBLE))
        parts.append("01")
    return int("".join(parts), 2)


@lru_cache(maxsize=512)
def _decode(code: int) -> tuple[int, ...]:
    if code == 0:
        return ()
    body = bin(code)[3:]  # drop "0b" and the sentinel
    if not body or len(body) % 2:
        return ()
    hi, lo = body[0::2], body[1::2]
    width = len(hi)
    hi_bits, lo_bits = int(hi, 2), int(lo, 2)
    if hi_bits & ~lo_bits:
        return ()  # a "10" token is never emitted
    stops = format(lo_bits & ~hi_bits, f"0{width}b")
    if stops[-1] != "1":
        return ()
    out = []
    start = 0
    pos = stops.find("1")
    while pos != -1:
        digits = hi[start:pos]
        if not digits or (len(digits) > 1 and digits[0] == "0"):
            return ()  # empty or non-canonical element
        out.append(int(digits, 2))
        start = pos + 1
        pos = stops.find("1", start)
    return tuple(out)


def seq_decode(code: int) -> list[int]:
    """Inverse of :func:`seq_encode`.  Codes outside its image decode to ``[]``."""
    if code < 0:
        raise ValueError(f"code must be non-negative, got {code}")
    return list(_decode(code))


def rho(alpha: int, i: int) -> int:
    if alpha < 0 or i < 0:
        raise ValueError("rho takes non-negative arguments")
    s = _decode(alpha)
    return s[i] if i < len(s) else 0
