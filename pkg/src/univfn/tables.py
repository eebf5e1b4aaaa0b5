"""Dense finite tables of naturals: target functions and witness maps."""
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Callable, Iterator, Sequence


class ShapeError(ValueError):
    """A table, witness or evaluator has the wrong shape for the operation."""


@dataclass(frozen=True)
class FinTable:
    """A function on the grid ``[0, d1) x ... x [0, dk)``, stored row-major.

    Zero-dimensional tables (``dims == ()``) hold a single constant.
    """

    dims: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(self, "values", tuple(self.values))
        if any(d < 1 for d in self.dims):
            raise ShapeError(f"dims must be positive counts, got {list(self.dims)}")
        if len(self.values) != prod(self.dims):
            raise ShapeError(
                f"{len(self.values)} values for dims {list(self.dims)} "
                f"(need {prod(self.dims)})"
            )
        for v in self.values:
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise ValueError(f"table values must be non-negative ints, got {v!r}")

    @classmethod
    def from_function(cls, dims: Sequence[int], fn: Callable[..., int]):
        dims = tuple(dims)
        return cls(dims, tuple(fn(*c) for c in product(*map(range, dims))))

    @classmethod
    def from_nested(cls, rows):
        """Build a table from nested lists, e.g. ``[[1, 2], [3, 4]]``."""
        dims = []
        probe = rows
        while isinstance(probe, (list, tuple)):
            dims.append(len(probe))
            probe = probe[0]
        flat = []

        def walk(node, depth):
            if depth == len(dims):
                flat.append(node)
                return
            if len(node) != dims[depth]:
                raise ShapeError("ragged nested table")
            for child in node:
                walk(child, depth + 1)

        walk(rows, 0)
        return cls(tuple(dims), tuple(flat))

    @property
    def ndim(self) -> int:
        return len(self.dims)

    def _offset(self, coords: Sequence[int]) -> int:
        if len(coords) != len(self.dims):
            raise ShapeError(f"expected {len(self.dims)} coordinates, got {len(coords)}")
        off = 0
        for c, d in zip(coords, self.dims):
            if not 0 <= c < d:
                raise IndexError(f"coordinate {tuple(coords)} outside dims {self.dims}")
            off = off * d + c
        return off

    def __getitem__(self, coords) -> int:
        if isinstance(coords, int):
            coords = (coords,)
        return self.values[self._offset(coords)]

    def cells(self) -> Iterator[tuple[int, ...]]:
        """Grid coordinates in row-major order."""
        return product(*map(range, self.dims))

    def is_cube(self, k: int | None = None) -> bool:
        if k is not None and self.ndim != k:
            return False
        return len(set(self.dims)) == 1

    def replace(self, coords: Sequence[int], value: int) -> "FinTable":
        vals = list(self.values)
        vals[self._offset(coords)] = value
        return type(self)(self.dims, tuple(vals))


class WitnessMap(FinTable):
    """A synthesized witness: a finite map from grid points to naturals."""

    def __call__(self, *coords: int) -> int:
        return self[coords]


def require_cube(G: FinTable, k: int, what: str) -> int:
    """Return the side of ``G`` after checking it is a ``k``-dimensional cube."""
    if not G.is_cube(k):
        raise ShapeError(f"{what} needs a {k}-dimensional cube table, got dims {list(G.dims)}")
    return G.dims[0]
