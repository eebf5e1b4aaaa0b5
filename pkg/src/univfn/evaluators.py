"""Serializable descriptors for every constructed universal function.

A descriptor is a small immutable expression tree.  Calling it evaluates the
function it denotes; ``to_json``/``from_json`` move it across process and
language boundaries.  The verifier only ever evaluates descriptors, so a
bundle loaded from disk and one built in-process share a code path.
"""
from dataclasses import dataclass
from typing import ClassVar

from .core import f_single, f_univ
from .pairing import compress_even, compress_odd, pair_tuple, project, unpair_tuple


class Evaluator:
    kind: ClassVar[str]

    @property
    def arity(self) -> int:
        raise NotImplementedError

    def __call__(self, *args: int) -> int:
        raise NotImplementedError

    def to_json(self) -> dict:
        return {"kind": self.kind}

    def _check_args(self, args):
        if len(args) != self.arity:
            raise TypeError(f"{self.kind} takes {self.arity} arguments, got {len(args)}")


_REGISTRY: dict[str, type] = {}


def _register(cls):
    _REGISTRY[cls.kind] = cls
    return cls


@_register
@dataclass(frozen=True)
class CoreF(Evaluator):
    kind: ClassVar[str] = "CoreF"

    @property
    def arity(self):
        return 2

    def __call__(self, *args):
        self._check_args(args)
        return f_univ(*args)


@_register
@dataclass(frozen=True)
class SingleWrapped(Evaluator):
    """``F(<x0, x1>, <y0, y1>) = f_univ(x0, y1)``."""

    kind: ClassVar[str] = "SingleWrapped"

    @property
    def arity(self):
        return 2

    def __call__(self, *args):
        self._check_args(args)
        return f_single(*args)


@_register
@dataclass(frozen=True)
class DimN(Evaluator):
    """Left-nested ``f_univ(...f_univ(f_univ(a1, a2), a3)..., ak)``.

    With ``single`` set, argument ``i`` is a ``k``-tuple code and only its
    ``i``-th component is used, so one witness serves every coordinate.
    ``k == 1`` is the identity.
    """

    kind: ClassVar[str] = "DimN"
    k: int
    single: bool = False

    @property
    def arity(self):
        return self.k

    def __call__(self, *args):
        self._check_args(args)
        if self.single:
            args = [project(a, self.k, i) for i, a in enumerate(args)]
        acc = args[0]
        for a in args[1:]:
            acc = f_univ(acc, a)
        return acc

    def to_json(self):
        return {"kind": self.kind, "k": self.k, "single": self.single}

    @classmethod
    def from_json(cls, d):
        return cls(int(d["k"]), bool(d.get("single", False)))


@_register
@dataclass(frozen=True)
class SigmaComposite(Evaluator):
    """Takes one argument per member of ``family`` (in family order).

    Coordinate ``i`` is recovered from the argument of ``family[assignment[i]]``
    at the position of ``i`` inside that member; the ``n`` recovered unary
    codes go to ``inner``.  Members not named by ``assignment`` are ignored.
    """

    kind: ClassVar[str] = "SigmaComposite"
    n: int
    family: tuple[tuple[int, ...], ...]
    assignment: tuple[int, ...]
    inner: Evaluator

    def __post_init__(self):
        object.__setattr__(self, "family", tuple(tuple(q) for q in self.family))
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if len(self.assignment) != self.n:
            raise ValueError("assignment must name one member per coordinate")
        for i, q in enumerate(self.assignment):
            if i not in self.family[q]:
                raise ValueError(f"coordinate {i} is not in member {list(self.family[q])}")
        if self.inner.arity != self.n:
            raise ValueError("inner evaluator arity must equal n")

    @property
    def arity(self):
        return len(self.family)

    def __call__(self, *args):
        self._check_args(args)
        units = []
        for i, q in enumerate(self.assignment):
            member = self.family[q]
            units.append(project(args[q], len(member), member.index(i)))
        return self.inner(*units)

    def to_json(self):
        return {
            "kind": self.kind,
            "n": self.n,
            "family": [list(q) for q in self.family],
            "assignment": list(self.assignment),
            "inner": self.inner.to_json(),
        }

    @classmethod
    def from_json(cls, d):
        return cls(
            int(d["n"]),
            tuple(tuple(int(j) for j in q) for q in d["family"]),
            tuple(int(q) for q in d["assignment"]),
            from_json(d["inner"]),
        )


@_register
@dataclass(frozen=True)
class Product(Evaluator):
    """``F*(<u1..uc>, <v1..vc>) = <f_univ(u1, v1), ..., f_univ(uc, vc)>``."""

    kind: ClassVar[str] = "Product"
    count: int = 2

    @property
    def arity(self):
        return 2

    def __call__(self, *args):
        self._check_args(args)
        us = unpair_tuple(args[0], self.count)
        vs = unpair_tuple(args[1], self.count)
        return pair_tuple([f_univ(u, v) for u, v in zip(us, vs)])

    def to_json(self):
        return {"kind": self.kind, "count": self.count}

    @classmethod
    def from_json(cls, d):
        return cls(int(d["count"]))


@_register
@dataclass(frozen=True)
class Additive(Evaluator):
    """``F(x, y) = k(x + y)`` with ``k(w) = f_univ(even bits of w, odd bits of w)``."""

    kind: ClassVar[str] = "Additive"

    @property
    def arity(self):
        return 2

    @staticmethod
    def k(w: int) -> int:
        return f_univ(compress_even(w), compress_odd(w))

    def __call__(self, *args):
        self._check_args(args)
        return self.k(args[0] + args[1])


@_register
@dataclass(frozen=True)
class Pairwise(Evaluator):
    """One binary witness ``h`` read at ordered coordinate pairs ``slots``.

    The argument for slot ``m`` is ``h(x_i, x_j)``, a ``len(slots)``-tuple
    code whose ``m``-th component is handed to ``inner`` (a
    :class:`SigmaComposite` over the unordered pairs) at the position of
    ``{i, j}`` in its family.
    """

    kind: ClassVar[str] = "Pairwise"
    slots: tuple[tuple[int, int], ...]
    inner: SigmaComposite

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple(tuple(s) for s in self.slots))
        by_member = {tuple(sorted(s)): m for m, s in enumerate(self.slots)}
        if len(by_member) != len(self.slots) or set(by_member) != set(self.inner.family):
            raise ValueError("slots must match the inner family one-to-one")
        object.__setattr__(self, "_order", tuple(by_member[q] for q in self.inner.family))

    @property
    def arity(self):
        return len(self.slots)

    def __call__(self, *args):
        self._check_args(args)
        width = len(self.slots)
        vals = [project(a, width, m) for m, a in enumerate(args)]
        return self.inner(*(vals[m] for m in self._order))

    def to_json(self):
        return {
            "kind": self.kind,
            "slots": [list(s) for s in self.slots],
            "inner": self.inner.to_json(),
        }

    @classmethod
    def from_json(cls, d):
        return cls(tuple(tuple(int(j) for j in s) for s in d["slots"]), from_json(d["inner"]))


@_register
@dataclass(frozen=True)
class Nest42(Evaluator):
    """Four-variable form built from a three-slot evaluator ``F``.

    Arguments are ``k1(x_i, x_j)`` for ``i < j`` where ``k1(s, t) = <k(s, t), k(t, s)>``;
    with ``(x, y, z, w)`` the result is::

        F(F(k(x,y), k(y,w), k(w,x)), F(k(y,z), k(z,w), k(w,y)), F(k(z,x), k(x,w), k(w,z)))
    """

    kind: ClassVar[str] = "Nest42"
    inner: Evaluator

    @property
    def arity(self):
        return 6

    def __call__(self, *args):
        self._check_args(args)
        xy, xz, xw, yz, yw, zw = args
        F = self.inner

        def fwd(c):
            return project(c, 2, 0)

        def rev(c):
            return project(c, 2, 1)

        return F(
            F(fwd(xy), fwd(yw), rev(xw)),
            F(fwd(yz), fwd(zw), rev(yw)),
            F(rev(xz), fwd(xw), rev(zw)),
        )

    def to_json(self):
        return {"kind": self.kind, "inner": self.inner.to_json()}

    @classmethod
    def from_json(cls, d):
        return cls(from_json(d["inner"]))


@_register
@dataclass(frozen=True)
class Restrict32(Evaluator):
    """Three-slot form from a six-slot ``F`` by pinning the fourth variable to 0.

    Arguments are ``h1(x, y), h1(y, z), h1(z, x)`` with
    ``h1(s, t) = <h(s, t), h(t, s), h(s, 0)>``.
    """

    kind: ClassVar[str] = "Restrict32"
    inner: Evaluator

    @property
    def arity(self):
        return 3

    def __call__(self, *args):
        self._check_args(args)
        a, b, c = args
        return self.inner(
            project(a, 3, 0),  # h(x, y)
            project(c, 3, 1),  # h(x, z)
            project(a, 3, 2),  # h(x, 0)
            project(b, 3, 0),  # h(y, z)
            project(b, 3, 2),  # h(y, 0)
            project(c, 3, 2),  # h(z, 0)
        )

    def to_json(self):
        return {"kind": self.kind, "inner": self.inner.to_json()}

    @classmethod
    def from_json(cls, d):
        return cls(from_json(d["inner"]))


def from_json(d: dict) -> Evaluator:
    try:
        cls = _REGISTRY[d["kind"]]
    except (KeyError, TypeError):
        raise ValueError(f"unknown evaluator descriptor: {d!r}") from None
    if hasattr(cls, "from_json"):
        return cls.from_json(d)
    return cls()
