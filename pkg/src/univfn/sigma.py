"""Classification of generalized universality patterns.

A pattern is a family of subsets of the coordinates ``{0..n-1}``; each member
names the variables one inner witness may read.  Up to equivalence only three
things can happen:

* some coordinate is read by no witness: the pattern is unrealizable
  (``TriviallyFalse``);
* one witness reads every coordinate: it can just output ``G`` itself
  (``TriviallyTrue``);
* otherwise the pattern is equivalent to the canonical one whose witnesses
  read ``m`` variables each, where ``m + 1`` is the size of the smallest set
  of coordinates that no single witness sees (``EquivalentTo(m)``).
"""
import json
from dataclasses import dataclass
from enum import Enum
from itertools import chain, combinations
from typing import Iterable


class Verdict(str, Enum):
    TRIVIALLY_TRUE = "TriviallyTrue"
    TRIVIALLY_FALSE = "TriviallyFalse"
    EQUIVALENT_TO = "EquivalentTo"


@dataclass(frozen=True)
class SigmaSpec:
    """``n`` coordinates and a duplicate-free family of subsets, kept sorted."""

    n: int
    family: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, family: Iterable[Iterable[int]]):
        if n < 1:
            raise ValueError(f"n must be at least 1, got {n}")
        members = set()
        for q in family:
            q = tuple(sorted(set(q)))
            if any(not 0 <= j < n for j in q):
                raise ValueError(f"member {list(q)} is not a subset of 0..{n - 1}")
            members.add(q)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "family", tuple(sorted(members)))

    def to_json(self) -> dict:
        return {"n": self.n, "family": [list(q) for q in self.family]}

    @classmethod
    def from_json(cls, d) -> "SigmaSpec":
        if not isinstance(d, dict) or "n" not in d or "family" not in d:
            raise ValueError("sigma file must be an object with 'n' and 'family'")
        n = d["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError("'n' must be an integer")
        fam = d["family"]
        if not isinstance(fam, list) or not all(
            isinstance(q, list) and all(isinstance(j, int) and not isinstance(j, bool) for j in q)
            for q in fam
        ):
            raise ValueError("'family' must be a list of integer lists")
        return cls(n, fam)

    @classmethod
    def loads(cls, text: str) -> "SigmaSpec":
        return cls.from_json(json.loads(text))


@dataclass(frozen=True)
class Classification:
    """Verdict plus an auditable certificate.

    ``TriviallyFalse`` carries an uncovered coordinate, ``TriviallyTrue`` the
    full coordinate set, ``EquivalentTo`` a smallest excluded set (size m+1).
    """

    verdict: Verdict
    m: int | None = None
    certificate: object = None

    def to_json(self) -> dict:
        out = {"verdict": self.verdict.value, "certificate": self.certificate}
        if self.m is not None:
            out["m"] = self.m
        return out


class NonCoveringError(ValueError):
    """Raised when synthesis is asked for a pattern that leaves a coordinate unread."""

    def __init__(self, classification: Classification):
        self.classification = classification
        super().__init__(
            f"pattern is TriviallyFalse: coordinate {classification.certificate} "
            "is not in any member"
        )


def _subsets(q):
    return chain.from_iterable(combinations(q, r) for r in range(len(q) + 1))


def downward_closure(spec: SigmaSpec) -> SigmaSpec:
    return SigmaSpec(spec.n, {s for q in spec.family for s in _subsets(q)})


def remove_subsumed(spec: SigmaSpec) -> SigmaSpec:
    """Keep only the inclusion-maximal members."""
    sets = [frozenset(q) for q in spec.family]
    return SigmaSpec(spec.n, [q for q in sets if not any(q < other for other in sets)])


def classify(spec: SigmaSpec) -> Classification:
    n = spec.n
    covered = set().union(*spec.family) if spec.family else set()
    for i in range(n):
        if i not in covered:
            return Classification(Verdict.TRIVIALLY_FALSE, certificate=i)
    full = tuple(range(n))
    if full in spec.family:
        return Classification(Verdict.TRIVIALLY_TRUE, certificate=list(full))
    members = [frozenset(q) for q in spec.family]
    # singletons are all covered, so the search starts at pairs
    for size in range(2, n + 1):
        for cand in combinations(range(n), size):
            if not any(members_q.issuperset(cand) for members_q in members):
                return Classification(Verdict.EQUIVALENT_TO, m=size - 1, certificate=list(cand))
    raise AssertionError("unreachable: the full set is always excluded here")


def choose_members(spec: SigmaSpec) -> tuple[int, ...]:
    """For each coordinate, the index of the lexicographically least member containing it."""
    out = []
    for i in range(spec.n):
        # family is sorted, so the first hit is the least
        idx = next((k for k, q in enumerate(spec.family) if i in q), None)
        if idx is None:
            raise NonCoveringError(classify(spec))
        out.append(idx)
    return tuple(out)
