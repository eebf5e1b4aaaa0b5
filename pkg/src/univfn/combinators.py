"""Higher-arity and special-form universal functions built from ``f_univ``.

Every ``synth_*`` routine takes finite target tables and returns witnesses
that reproduce the target exactly under the matching evaluator.  Witness
integers grow quickly with nesting: roughly, each synthesis stage doubles
the bit length of the values it packs and multiplies it by the grid side.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable

from .core import f_univ, synth_two, to_single
from .evaluators import (
    Additive,
    CoreF,
    DimN,
    Evaluator,
    Nest42,
    Pairwise,
    Product,
    Restrict32,
    SigmaComposite,
)
from .pairing import pair, pair_tuple, spread_even, spread_odd, unpair_tuple
from .sigma import SigmaSpec, choose_members
from .tables import FinTable, ShapeError, WitnessMap, require_cube


@dataclass(frozen=True)
class WitnessBundle:
    """Named witness maps plus the wiring from maps to evaluator arguments.

    ``slots[i] = (name, coords)`` says that evaluator argument ``i`` is
    ``maps[name]`` read at the grid coordinates ``coords``.
    """

    maps: dict
    slots: tuple

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple((n, tuple(c)) for n, c in self.slots))

    def __hash__(self):
        return hash(self.slots)

    def args_at(self, cell) -> list[int]:
        return [self.maps[name][tuple(cell[c] for c in coords)] for name, coords in self.slots]


@dataclass(frozen=True)
class Construction:
    """An evaluator together with the witnesses that feed it."""

    evaluator: Evaluator
    witnesses: WitnessBundle

    def __init__(self, evaluator: Evaluator, maps: dict, slots):
        object.__setattr__(self, "evaluator", evaluator)
        object.__setattr__(self, "witnesses", WitnessBundle(maps, slots))

    @property
    def maps(self) -> dict:
        return self.witnesses.maps

    @property
    def slots(self) -> tuple:
        return self.witnesses.slots

    def __call__(self, *cell: int) -> int:
        return self.evaluator(*self.witnesses.args_at(cell))


def two_construction(G: FinTable) -> Construction:
    w_row, w_col = synth_two(G)
    return Construction(CoreF(), {"row": w_row, "col": w_col}, [("row", (0,)), ("col", (1,))])


def single_construction(G: FinTable) -> Construction:
    w, ev = to_single(*synth_two(G))
    return Construction(ev, {"w": w}, [("w", (0,)), ("w", (1,))])


# -- unary witnesses for the left-nested k-ary form ----------------------------


def f_dim3(x: int, y: int, z: int) -> int:
    return f_univ(f_univ(x, y), z)


@dataclass(frozen=True)
class Dim3Stages:
    """Intermediate tables and witnesses of the two-stage cubic synthesis."""

    outer: FinTable  # H0(u, z) = G(unpair(u), z), zero off the grid
    outer_row: WitnessMap
    outer_col: WitnessMap
    inner: FinTable  # H1(x, y) = outer_row(pair(x, y))
    g0: WitnessMap
    g1: WitnessMap
    h: WitnessMap


def _peel_last(G: FinTable):
    """Split off the last coordinate of a cube with one square synthesis.

    Returns ``(outer, w_row, w_col, inner)``: ``outer`` is the square table on
    tuple codes of the leading coordinates, and ``inner`` the
    ``(k-1)``-dimensional table ``w_row(code(x1..x_{k-1}))`` still to be
    synthesized.
    """
    k, n = G.ndim, G.dims[0]
    lead = k - 1
    side = 1 + pair_tuple([n - 1] * lead)  # codes are monotone in each coordinate

    def outer_value(u, z):
        if z >= n:
            return 0
        xs = unpair_tuple(u, lead)
        if any(x >= n for x in xs):
            return 0
        return G[(*xs, z)]

    outer = FinTable.from_function((side, side), outer_value)
    w_row, w_col = synth_two(outer)
    inner = FinTable.from_function((n,) * lead, lambda *xs: w_row[pair_tuple(xs)])
    return outer, w_row, w_col, inner


@lru_cache(maxsize=8)
def _nested_witnesses(G: FinTable) -> tuple[WitnessMap, ...]:
    if G.ndim == 2:
        return synth_two(G)
    n = G.dims[0]
    _, _, w_col, inner = _peel_last(G)
    last = WitnessMap((n,), w_col.values[:n])
    return (*_nested_witnesses(inner), last)


def synth_dim3_stages(G: FinTable) -> Dim3Stages:
    n = require_cube(G, 3, "synth_dim3")
    outer, w_row, w_col, inner = _peel_last(G)
    g0, g1 = synth_two(inner)
    return Dim3Stages(outer, w_row, w_col, inner, g0, g1, WitnessMap((n,), w_col.values[:n]))


def synth_dim3(G: FinTable) -> tuple[WitnessMap, WitnessMap, WitnessMap]:
    """``(g0, g1, h)`` with ``f_univ(f_univ(g0(x), g1(y)), h(z)) == G[x, y, z]``."""
    st = synth_dim3_stages(G)
    return st.g0, st.g1, st.h


def synth_dim_n(G: FinTable, k: int | None = None, single: bool = False) -> Construction:
    """Witnesses for the left-nested ``k``-ary form ``DimN(k)``.

    ``single=True`` merges the ``k`` unary witnesses into one,
    ``g(x) = pair_tuple([g1(x), ..., gk(x)])``.
    """
    if k is None:
        k = G.ndim
    if k < 2:
        raise ShapeError(f"synth_dim_n needs arity >= 2, got {k}")
    n = require_cube(G, k, "synth_dim_n")
    ws = _nested_witnesses(G)
    if not single:
        maps = {f"g{i}": w for i, w in enumerate(ws)}
        return Construction(DimN(k), maps, [(f"g{i}", (i,)) for i in range(k)])
    g = WitnessMap((n,), [pair_tuple([w.values[x] for w in ws]) for x in range(n)])
    return Construction(DimN(k, single=True), {"g": g}, [("g", (i,)) for i in range(k)])


def _single_unary(G: FinTable) -> tuple[WitnessMap, Evaluator]:
    if G.ndim == 1:
        return WitnessMap(G.dims, G.values), DimN(1, single=True)
    c = synth_dim_n(G, single=True)
    return c.maps["g"], c.evaluator


# -- patterns of inner witnesses ------------------------------------------------


def member_name(q) -> str:
    return "h_" + "_".join(map(str, q))


def synth_sigma(spec: SigmaSpec, G: FinTable) -> Construction:
    """Witnesses ``h_Q`` for every member ``Q`` of the family.

    ``h_Q(x_j : j in Q) = pair_tuple([g(x_j) : j in Q])`` where ``g`` is the
    merged unary witness of the ``n``-ary nested form.  Raises
    :class:`~univfn.sigma.NonCoveringError` when some coordinate is in no member.
    """
    assignment = choose_members(spec)
    n = require_cube(G, spec.n, "synth_sigma")
    g, inner = _single_unary(G)
    maps = {}
    for q in spec.family:
        if q:
            dims = (n,) * len(q)
            maps[member_name(q)] = WitnessMap.from_function(
                dims, lambda *xs: pair_tuple([g.values[x] for x in xs])
            )
        else:
            maps[member_name(q)] = WitnessMap((), (0,))
    ev = SigmaComposite(spec.n, spec.family, assignment, inner)
    return Construction(ev, maps, [(member_name(q), q) for q in spec.family])


def widen_sigma(c: Construction, wider: SigmaSpec) -> Construction:
    """Reuse a pattern construction for a larger family.

    Members new to ``wider`` get constant-zero witnesses and are ignored by
    the evaluator.
    """
    ev = c.evaluator
    if not isinstance(ev, SigmaComposite):
        raise TypeError("widen_sigma needs a SigmaComposite construction")
    if wider.n != ev.n or not set(ev.family) <= set(wider.family):
        raise ValueError("the wider family must contain the original one")
    side = next((m.dims[0] for m in c.maps.values() if m.dims), 1)
    index = {q: k for k, q in enumerate(wider.family)}
    assignment = tuple(index[ev.family[q]] for q in ev.assignment)
    maps = {}
    for q in wider.family:
        name = member_name(q)
        maps[name] = c.maps[name] if q in ev.family else WitnessMap(
            (side,) * len(q), (0,) * side ** len(q)
        )
    new_ev = SigmaComposite(ev.n, wider.family, assignment, ev.inner)
    return Construction(new_ev, maps, [(member_name(q), q) for q in wider.family])


CYCLE3 = ((0, 1), (1, 2), (2, 0))


def all_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


def synth_pairwise(G: FinTable, slots=None) -> Construction:
    """One binary witness ``h`` read at the ordered pairs ``slots``.

    Defaults: ``h(x,y), h(y,z), h(z,x)`` for three variables, otherwise
    ``h(x_i, x_j)`` for all ``i < j``.
    """
    k = G.ndim
    if slots is None:
        slots = CYCLE3 if k == 3 else all_pairs(k)
    slots = tuple(tuple(s) for s in slots)
    if any(i == j for i, j in slots):
        raise ValueError("slots must join two distinct coordinates")
    sig = synth_sigma(SigmaSpec(k, slots), G)
    n = G.dims[0]

    def h(s, t):
        comps = []
        for i, j in slots:
            member = sig.maps[member_name(sorted((i, j)))]
            comps.append(member[s, t] if i < j else member[t, s])
        return pair_tuple(comps)

    H = WitnessMap.from_function((n, n), h)
    ev = Pairwise(slots, sig.evaluator)
    return Construction(ev, {"h": H}, [("h", s) for s in slots])


def synth_32(G: FinTable) -> Construction:
    """(3,2) form ``G(x,y,z) = F(h(x,y), h(y,z), h(z,x))`` by the direct route."""
    require_cube(G, 3, "synth_32")
    return synth_pairwise(G, CYCLE3)


def synth_42(G: FinTable) -> Construction:
    """(4,2) form ``G = F(h(x_i, x_j) : i < j)`` by the direct route."""
    require_cube(G, 4, "synth_42")
    return synth_pairwise(G, all_pairs(4))


Synthesizer = Callable[[FinTable], Construction]


def synth_42_from_32(synth32: Synthesizer, G: FinTable) -> Construction:
    """(4,2) witnesses obtained from a (3,2) synthesizer by slicing on ``w``.

    For each ``w`` the slice ``G(., ., ., w)`` gets a binary witness ``h_w``;
    the 3-ary table ``h(u, v, w) = h_w(u, v)`` then gets ``k``, and
    ``k1(s, t) = <k(s, t), k(t, s)>`` is the final witness.
    """
    n = require_cube(G, 4, "synth_42_from_32")
    slices = []
    for w in range(n):
        Gw = FinTable.from_function((n, n, n), lambda x, y, z: G[x, y, z, w])
        slices.append(synth32(Gw))
    F = slices[0].evaluator
    if any(c.evaluator != F for c in slices):
        raise ValueError("the (3,2) synthesizer must use one evaluator for all tables")
    hs = [c.maps["h"] for c in slices]
    H = FinTable.from_function((n, n, n), lambda u, v, w: hs[w][u, v])
    kc = synth32(H)
    if kc.evaluator != F:
        raise ValueError("the (3,2) synthesizer must use one evaluator for all tables")
    k = kc.maps["h"]
    k1 = WitnessMap.from_function((n, n), lambda s, t: pair(k[s, t], k[t, s]))
    return Construction(Nest42(F), {"h": k1}, [("h", s) for s in all_pairs(4)])


def synth_32_from_42(synth42: Synthesizer, G: FinTable) -> Construction:
    """(3,2) witnesses from a (4,2) synthesizer by pinning the fourth variable to 0.

    ``h1(s, t) = <h(s, t), h(t, s), h(s, 0)>`` carries every value the
    six-slot evaluator needs from the three slots ``(x,y), (y,z), (z,x)``.
    """
    n = require_cube(G, 3, "synth_32_from_42")
    G4 = FinTable.from_function((n,) * 4, lambda x, y, z, w: G[x, y, z])
    c = synth42(G4)
    h = c.maps["h"]
    h1 = WitnessMap.from_function((n, n), lambda s, t: pair_tuple([h[s, t], h[t, s], h[s, 0]]))
    return Construction(Restrict32(c.evaluator), {"h": h1}, [("h", s) for s in CYCLE3])


# -- special forms ----------------------------------------------------------------


def paired_table(G1: FinTable, G2: FinTable) -> FinTable:
    if G1.dims != G2.dims:
        raise ShapeError(f"tables differ in shape: {list(G1.dims)} vs {list(G2.dims)}")
    return FinTable(G1.dims, [pair(a, b) for a, b in zip(G1.values, G2.values)])


def product_universal(G1: FinTable, G2: FinTable) -> Construction:
    """Witnesses with ``F*(g(a), h(b)) == pair(G1[a, b], G2[a, b])``."""
    require_cube(G1, 2, "product_universal")
    if G1.dims != G2.dims:
        raise ShapeError(f"tables differ in shape: {list(G1.dims)} vs {list(G2.dims)}")
    g1, h1 = synth_two(G1)
    g2, h2 = synth_two(G2)
    g = WitnessMap(g1.dims, [pair(a, b) for a, b in zip(g1.values, g2.values)])
    h = WitnessMap(h1.dims, [pair(a, b) for a, b in zip(h1.values, h2.values)])
    return Construction(Product(2), {"g": g, "h": h}, [("g", (0,)), ("h", (1,))])


def synth_additive(G: FinTable) -> Construction:
    """Witnesses ``u, v`` with ``Additive.k(u(a) + v(b)) == G[a, b]``.

    ``u`` lives on even bits and ``v`` on odd bits, so the sum never carries.
    """
    w_row, w_col = synth_two(G)
    u = WitnessMap(w_row.dims, [spread_even(x) for x in w_row.values])
    v = WitnessMap(w_col.dims, [spread_odd(x) for x in w_col.values])
    return Construction(Additive(), {"u": u, "v": v}, [("u", (0,)), ("v", (1,))])
