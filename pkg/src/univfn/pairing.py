"""Bit-interleaving pairing of naturals and the tuple codec built on it.

``pair(a, b)`` puts bit ``i`` of ``a`` at bit ``2i`` and bit ``i`` of ``b`` at
bit ``2i + 1``.  The even and odd halves of that map are exposed separately
as :func:`spread_even` / :func:`spread_odd`, so ``pair(a, b)`` is also the
carry-free sum ``spread_even(a) + spread_odd(b)``.

All routines work on Python ints of any size.  Spreading and compressing go
byte by byte through 256-entry lookup tables applied with ``bytes.translate``,
so the cost is linear in the bit length and stays out of the interpreter loop.

``pair``, ``unpair`` and the spread/compress maps also accept numpy integer
arrays of values below 2**32 and then work elementwise (mask-and-shift on
uint64), for bulk checks over whole grids.
"""
from functools import lru_cache, reduce
from typing import Sequence

import numpy as np


def _nat(x: int) -> int:
    if x < 0:
        raise ValueError(f"expected a non-negative integer, got {x}")
    return x


def _spread_byte(x: int) -> int:
    return sum(((x >> i) & 1) << (2 * i) for i in range(8))


def _gather_byte(x: int, parity: int) -> int:
    return sum(((x >> (2 * i + parity)) & 1) << i for i in range(4))


# a source byte spreads into two output bytes: low nibble, then high nibble
_SPREAD_LO = bytes(_spread_byte(x & 0xF) for x in range(256))
_SPREAD_HI = bytes(_spread_byte(x >> 4) for x in range(256))
# an output byte gathers four bits of one parity into a nibble
_GATHER = {
    (parity, shift): bytes(_gather_byte(x, parity) << shift for x in range(256))
    for parity in (0, 1)
    for shift in (0, 4)
}


_U = np.uint64
# Morton masks: spreading runs the list top-down, gathering bottom-up
_MASKS = [
    _U(0x00000000FFFFFFFF),
    _U(0x0000FFFF0000FFFF),
    _U(0x00FF00FF00FF00FF),
    _U(0x0F0F0F0F0F0F0F0F),
    _U(0x3333333333333333),
    _U(0x5555555555555555),
]
_SHIFTS = [_U(16), _U(8), _U(4), _U(2), _U(1)]


def _words(a: np.ndarray, limit: int) -> np.ndarray:
    if a.size and (a.min() < 0 or a.max() >= limit):
        raise ValueError(f"array inputs must lie in [0, {limit})")
    return a.astype(np.uint64)


def _spread_words(a: np.ndarray) -> np.ndarray:
    x = _words(a, 1 << 32)
    for shift, mask in zip(_SHIFTS, _MASKS[1:]):
        x = (x | (x << shift)) & mask
    return x


def _gather_words(w: np.ndarray) -> np.ndarray:
    x = w & _MASKS[-1]
    for shift, mask in zip(reversed(_SHIFTS), reversed(_MASKS[:-1])):
        x = (x | (x >> shift)) & mask
    return x


def spread_even(a: int) -> int:
    """Move bit i of ``a`` to bit 2i; odd bits of the result are zero."""
    if isinstance(a, np.ndarray):
        return _spread_words(a)
    src = _nat(a).to_bytes((a.bit_length() + 7) // 8, "little")
    out = bytearray(2 * len(src))
    out[0::2] = src.translate(_SPREAD_LO)
    out[1::2] = src.translate(_SPREAD_HI)
    return int.from_bytes(out, "little")


def spread_odd(b: int) -> int:
    """Move bit i of ``b`` to bit 2i + 1; even bits of the result are zero."""
    if isinstance(b, np.ndarray):
        return _spread_words(b) << _U(1)
    return spread_even(b) << 1


def _gather(w: int, parity: int) -> int:
    if isinstance(w, np.ndarray):
        return _gather_words(_words(w, 1 << 64) >> _U(parity))
    src = _nat(w).to_bytes((w.bit_length() + 15) // 16 * 2, "little")
    lo = src[0::2].translate(_GATHER[parity, 0])
    hi = src[1::2].translate(_GATHER[parity, 4])
    return int.from_bytes(lo, "little") | int.from_bytes(hi, "little")


def compress_even(w: int) -> int:
    """Collect the even-position bits of ``w`` (inverse of :func:`spread_even`)."""
    return _gather(w, 0)


def compress_odd(w: int) -> int:
    """Collect the odd-position bits of ``w`` (inverse of :func:`spread_odd`)."""
    return _gather(w, 1)


def pair(a: int, b: int) -> int:
    return spread_even(a) | spread_odd(b)


def unpair(c: int) -> tuple[int, int]:
    return compress_even(c), compress_odd(c)


def pair_tuple(xs: Sequence[int]) -> int:
    """Right fold of :func:`pair`: ``[x0, x1, x2] -> pair(x0, pair(x1, x2))``.

    The fold direction is part of the witness file format; do not change it.
    """
    if len(xs) == 0:
        raise ValueError("pair_tuple needs at least one element")
    return reduce(lambda acc, x: pair(x, acc), reversed(xs[:-1]), _nat(xs[-1]))


def unpair_tuple(c: int, k: int) -> list[int]:
    """Inverse of :func:`pair_tuple` for a ``k``-element tuple."""
    if k < 1:
        raise ValueError(f"unpair_tuple needs k >= 1, got {k}")
    out = []
    for _ in range(k - 1):
        head, c = unpair(c)
        out.append(head)
    out.append(_nat(c))
    return out


@lru_cache(maxsize=2048)
def project(c: int, k: int, i: int) -> int:
    """Component ``i`` of the ``k``-tuple coded by ``c``, without decoding the rest."""
    if not 0 <= i < k:
        raise ValueError(f"component {i} out of range for a {k}-tuple")
    for _ in range(i):
        c = compress_odd(c)
    return c if i == k - 1 else compress_even(c)
