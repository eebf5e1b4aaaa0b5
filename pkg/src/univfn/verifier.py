"""Exact brute-force checks of synthesized constructions.

Also hosts a desk-sized negative result: on a domain of 2 or 3 points no
binary operation represents every binary operation through unary witnesses.
"""
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .evaluators import Evaluator
from .serialize import to_decimal
from .tables import FinTable, ShapeError


@dataclass(frozen=True)
class Mismatch:
    coords: tuple[int, ...]
    expected: int
    got: int

    def to_json(self) -> dict:
        return {
            "coords": list(self.coords),
            "expected": to_decimal(self.expected),
            "got": to_decimal(self.got),
        }


@dataclass
class VerifyReport:
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    mismatch_count: int = 0

    @property
    def ok(self) -> bool:
        return self.mismatch_count == 0

    def to_json(self) -> dict:
        return {"checked": self.checked, "mismatches": [m.to_json() for m in self.mismatches]}


def _validate(evaluator: Evaluator, witnesses, G: FinTable) -> None:
    if len(witnesses.slots) != evaluator.arity:
        raise ShapeError(
            f"{evaluator.kind} takes {evaluator.arity} arguments "
            f"but the bundle wires {len(witnesses.slots)}"
        )
    for name, coords in witnesses.slots:
        if name not in witnesses.maps:
            raise ShapeError(f"slot refers to unknown witness {name!r}")
        if any(not 0 <= c < G.ndim for c in coords):
            raise ShapeError(f"witness {name!r} reads coordinates {list(coords)} of a {G.ndim}-d table")
        want = tuple(G.dims[c] for c in coords)
        if witnesses.maps[name].dims != want:
            raise ShapeError(
                f"witness {name!r} has dims {list(witnesses.maps[name].dims)}, "
                f"table needs {list(want)}"
            )


def check(evaluator: Evaluator, witnesses, G: FinTable, cap: int = 100) -> VerifyReport:
    """Evaluate every grid cell in row-major order and compare exactly.

    ``witnesses`` is anything with ``maps`` and ``slots`` (a
    :class:`~univfn.combinators.WitnessBundle` or a construction).  At most
    ``cap`` mismatches are listed; ``mismatch_count`` has the total.
    """
    _validate(evaluator, witnesses, G)
    report = VerifyReport()
    for cell in G.cells():
        args = [witnesses.maps[name][tuple(cell[c] for c in coords)] for name, coords in witnesses.slots]
        got = evaluator(*args)
        want = G[cell]
        report.checked += 1
        if got != want:
            report.mismatch_count += 1
            if len(report.mismatches) < cap:
                report.mismatches.append(Mismatch(tuple(cell), want, got))
    return report


def verify(construction, G: FinTable, cap: int = 100) -> VerifyReport:
    return check(construction.evaluator, construction.witnesses, G, cap)


def carry_free(u, v) -> bool:
    """True when ``u(a)`` and ``v(b)`` share no set bit for every grid pair."""
    return all(a & b == 0 for a in u.values for b in v.values)


# -- finite negative sweep ------------------------------------------------------------


@dataclass
class FiniteSweep:
    """Outcome of :func:`finite_no_universal`.

    ``certificate`` maps each candidate ``F`` (row-major value tuple) to one
    target ``G`` it cannot represent; ``realizable`` counts the distinct
    tables ``F(g(x), h(y))`` over all witness pairs.
    """

    size: int
    verdict: bool
    certificate: dict
    realizable: dict
    note: str = (
        "witnesses were searched in the two-witness form F(g(x), h(y)); "
        "failing there implies failing with a single witness g"
    )

    def __iter__(self):
        return iter((self.verdict, self.certificate))


def finite_no_universal(s: int, chunk: int = 2048) -> FiniteSweep:
    """Check that no ``F: [0,s)^2 -> [0,s)`` represents every ``G`` of the same shape."""
    if s not in (2, 3):
        raise ValueError(f"supported domain sizes are 2 and 3, got {s}")
    cells = s * s
    n_tables = s**cells
    tables = np.array(list(product(range(s), repeat=cells)), dtype=np.int64)
    unary = np.array(list(product(range(s), repeat=s)), dtype=np.int64)
    xs, ys = np.divmod(np.arange(cells), s)
    # idx[p, c]: position in F's table read by witness pair p at cell c
    idx = (unary[:, None, xs] * s + unary[None, :, ys]).reshape(-1, cells)
    weights = s ** np.arange(cells - 1, -1, -1, dtype=np.int64)

    certificate, realizable = {}, {}
    verdict = True
    for start in range(0, n_tables, chunk):
        Fs = tables[start:start + chunk]
        codes = Fs[:, idx] @ weights  # (chunk, pairs): row-major index of each image
        seen = np.zeros((len(Fs), n_tables), dtype=bool)
        seen[np.arange(len(Fs))[:, None], codes] = True
        counts = seen.sum(axis=1)
        first_missing = np.argmin(seen, axis=1)
        for F, cnt, miss in zip(Fs, counts, first_missing):
            key = tuple(int(v) for v in F)
            realizable[key] = int(cnt)
            if cnt == n_tables:
                verdict = False
                certificate[key] = None
            else:
                certificate[key] = tuple(int(v) for v in tables[miss])
    return FiniteSweep(s, verdict, certificate, realizable)
