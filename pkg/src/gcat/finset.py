"""Maps between finite sets ``{1, ..., n}`` and the categories they form.

A map ``f: m -> n`` is stored as the tuple of its values ``(f(1), ..., f(m))``
together with ``n``.  Composition ``compose(g, f)`` applies ``f`` first.

The four categories handled here share the objects ``0, 1, 2, ...`` and differ
only in which maps count as morphisms:

* ``ALL``  -- every map (the category of finite sets),
* ``SUR``  -- surjections,
* ``OS``   -- ordered surjections: surjections whose preimage minima increase,
* ``INJ``  -- injections.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence


class CompositionError(ValueError):
    """Raised when the codomain of one map is not the domain of the next."""


@dataclass(frozen=True, slots=True)
class FinMap:
    values: tuple[int, ...]
    n: int

    def __post_init__(self):
        if not isinstance(self.values, tuple):
            object.__setattr__(self, "values", tuple(self.values))
        if self.n < 0:
            raise ValueError(f"codomain size must be nonnegative, got {self.n}")
        for v in self.values:
            if not 1 <= v <= self.n:
                raise ValueError(f"value {v} outside 1..{self.n}")

    @property
    def m(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def __repr__(self):
        return f"FinMap({list(self.values)}, {self.m}->{self.n})"

    def image(self) -> frozenset[int]:
        return frozenset(self.values)

    def preimage(self, j: int) -> list[int]:
        return [i for i, v in enumerate(self.values, 1) if v == j]

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "values": list(self.values)}

    @classmethod
    def from_json(cls, obj: dict) -> "FinMap":
        fm = cls(tuple(obj["values"]), obj["n"])
        if "m" in obj and obj["m"] != fm.m:
            raise ValueError(f"declared m={obj['m']} but {fm.m} values given")
        return fm


def finmap(values: Sequence[int], n: int | None = None) -> FinMap:
    """Build a map from its values; ``n`` defaults to ``max(values)``."""
    values = tuple(values)
    if n is None:
        n = max(values, default=0)
    return FinMap(values, n)


def identity(n: int) -> FinMap:
    return FinMap(tuple(range(1, n + 1)), n)


def compose(g: FinMap, f: FinMap) -> FinMap:
    """Return ``g o f`` (``f`` applied first)."""
    if f.n != g.m:
        raise CompositionError(f"cannot compose {g!r} after {f!r}")
    gv = g.values
    return FinMap(tuple(gv[i - 1] for i in f.values), g.n)


class Flags(NamedTuple):
    injective: bool
    surjective: bool
    ordered_surjective: bool
    bijective: bool


def is_injective(f: FinMap) -> bool:
    return len(set(f.values)) == f.m


def is_surjective(f: FinMap) -> bool:
    return len(set(f.values)) == f.n


def is_ordered_surjective(f: FinMap) -> bool:
    # first occurrences must read 1, 2, ..., n
    top = 0
    for v in f.values:
        if v > top + 1:
            return False
        top = max(top, v)
    return top == f.n


def is_increasing(f: FinMap) -> bool:
    return all(a < b for a, b in zip(f.values, f.values[1:]))


def classify(f: FinMap) -> Flags:
    inj = is_injective(f)
    sur = is_surjective(f)
    return Flags(inj, sur, is_ordered_surjective(f), inj and sur)


class CatKind(enum.Enum):
    ALL = "all"
    SUR = "surjections"
    OS = "ordered_surjections"
    INJ = "injections"

    @classmethod
    def parse(cls, text: str) -> "CatKind":
        aliases = {"all": cls.ALL, "gamma": cls.ALL, "sur": cls.SUR, "os": cls.OS, "inj": cls.INJ}
        if text in aliases:
            return aliases[text]
        return cls(text)

    def contains(self, f: FinMap) -> bool:
        if self is CatKind.ALL:
            return True
        if self is CatKind.SUR:
            return is_surjective(f)
        if self is CatKind.OS:
            return is_ordered_surjective(f)
        return is_injective(f)


def _ordered_surjections(m: int, n: int) -> Iterator[tuple[int, ...]]:
    # restricted growth strings, generated in lexicographic order
    if m == 0:
        if n == 0:
            yield ()
        return
    if n == 0 or n > m:
        return
    vals = [0] * m

    def rec(i: int, top: int):
        if m - i < n - top:
            return
        if i == m:
            yield tuple(vals)
            return
        for v in range(1, min(top + 1, n) + 1):
            vals[i] = v
            yield from rec(i + 1, max(top, v))

    yield from rec(0, 0)


def iter_homs(kind: CatKind, m: int, n: int) -> Iterator[FinMap]:
    """Lazily yield the morphisms ``m -> n`` of ``kind`` in lexicographic order."""
    if m < 0 or n < 0:
        raise ValueError("sizes must be nonnegative")
    if kind is CatKind.OS:
        for vals in _ordered_surjections(m, n):
            yield FinMap(vals, n)
    elif kind is CatKind.INJ:
        for vals in itertools.permutations(range(1, n + 1), m):
            yield FinMap(vals, n)
    else:
        for vals in itertools.product(range(1, n + 1), repeat=m):
            if kind is CatKind.SUR and len(set(vals)) != n:
                continue
            yield FinMap(vals, n)


def enumerate_homs(kind: CatKind, m: int, n: int) -> list[FinMap]:
    return list(iter_homs(kind, m, n))


def splitting(f: FinMap) -> FinMap:
    """The section ``f^!`` of a surjection: ``f^!(i) = min f^{-1}(i)``."""
    first = [0] * f.n
    for i, v in enumerate(f.values, 1):
        if first[v - 1] == 0:
            first[v - 1] = i
    if 0 in first:
        raise ValueError(f"{f!r} is not surjective")
    return FinMap(tuple(first), f.m)


def image_factorization(f: FinMap) -> tuple[FinMap, FinMap]:
    """Split ``f`` as ``u o s`` with ``s`` surjective and ``u`` increasing injective."""
    img = sorted(set(f.values))
    rank = {v: r for r, v in enumerate(img, 1)}
    u = FinMap(tuple(img), f.n)
    s = FinMap(tuple(rank[v] for v in f.values), len(img))
    return u, s


def is_permutation(f: FinMap) -> bool:
    return f.m == f.n and is_injective(f)


def inverse(sigma: FinMap) -> FinMap:
    if not is_permutation(sigma):
        raise ValueError(f"{sigma!r} is not a permutation")
    inv = [0] * sigma.n
    for i, v in enumerate(sigma.values, 1):
        inv[v - 1] = i
    return FinMap(tuple(inv), sigma.n)
