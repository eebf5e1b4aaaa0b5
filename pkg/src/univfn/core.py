"""An explicit universal function on the naturals and its witness synthesis.

``f_univ`` reads both arguments as pairs ``u = <a0, a1>``, ``v = <b0, b1>``
and looks up a position in one of two coded sequences::

    f_univ(u, v) = rho(b1, a0)   if a0 <= b0
                   rho(a1, b0)   otherwise

For a square table ``G`` the column witness of ``b`` carries the upper
triangle ``G(0, b) .. G(b, b)`` and the row witness of ``a`` the strict lower
triangle ``G(a, 0) .. G(a, a - 1)``; the first components are the
coordinates themselves, which steer the comparison.
"""
from functools import lru_cache

from .pairing import pair, unpair
from .seqcodec import rho, seq_encode
from .tables import FinTable, ShapeError, WitnessMap, require_cube


@lru_cache(maxsize=4096)
def f_univ(u: int, v: int) -> int:
    a0, a1 = unpair(u)
    b0, b1 = unpair(v)
    if a0 <= b0:
        return rho(b1, a0)
    return rho(a1, b0)


def synth_two(G: FinTable) -> tuple[WitnessMap, WitnessMap]:
    """Row and column witnesses with ``f_univ(w_row(a), w_col(b)) == G[a, b]``."""
    n = require_cube(G, 2, "synth_two")
    w_col = [pair(b, seq_encode([G[a, b] for a in range(b + 1)])) for b in range(n)]
    w_row = [pair(a, seq_encode([G[a, b] for b in range(a)])) for a in range(n)]
    return WitnessMap((n,), w_row), WitnessMap((n,), w_col)


def f_single(x: int, y: int) -> int:
    """Single-witness wrapper: ``f_univ(first(x), second(y))``."""
    return f_univ(unpair(x)[0], unpair(y)[1])


def to_single(w_row: WitnessMap, w_col: WitnessMap):
    """Merge a row/column witness pair into one map for :func:`f_single`.

    Returns ``(w, evaluator)`` where ``w(u) = pair(w_row(u), w_col(u))`` and
    ``evaluator(w(a), w(b)) == f_univ(w_row(a), w_col(b))``.
    """
    from .evaluators import SingleWrapped

    if w_row.dims != w_col.dims or len(w_row.dims) != 1:
        raise ShapeError(
            f"witness domains differ: {list(w_row.dims)} vs {list(w_col.dims)}"
        )
    w = WitnessMap(w_row.dims, [pair(r, c) for r, c in zip(w_row.values, w_col.values)])
    return w, SingleWrapped()
