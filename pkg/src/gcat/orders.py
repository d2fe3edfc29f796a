"""Quasi-orders, sieves and the divisibility order on maps into a fixed set.

For maps ``f, g`` with the same codomain ``n`` we write ``f <= g`` when
``f = g o h`` for some ordered surjection ``h``.  This is the order whose
well-quasi-ordering is Higman's lemma in the form used here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator, Literal, NamedTuple

from .finset import CatKind, FinMap, iter_homs

INJECTIVE = "injective"


def factorizations(g: FinMap, f: FinMap) -> Iterator[FinMap]:
    """Yield every ordered surjection ``h`` with ``g o h == f``, lexicographically.

    Each ``h(i)`` is forced into ``g^{-1}(f(i))``; the search only keeps
    prefixes whose first occurrences read ``1, 2, ...``.
    """
    if f.n != g.n:
        raise ValueError(f"codomain mismatch: {f!r} vs {g!r}")
    m, s = f.m, g.m
    if m < s:
        return
    fibres: dict[int, list[int]] = {}
    for j, v in enumerate(g.values, 1):
        fibres.setdefault(v, []).append(j)
    cands = []
    for v in f.values:
        c = fibres.get(v)
        if c is None:
            return
        cands.append(c)
    h = [0] * m

    def rec(i: int, top: int):
        if m - i < s - top:
            return
        if i == m:
            yield FinMap(tuple(h), s)
            return
        for c in cands[i]:
            if c > top + 1:
                break
            h[i] = c
            yield from rec(i + 1, top if c <= top else c)

    yield from rec(0, 0)


def divides_os(f: FinMap, g: FinMap) -> FinMap | None:
    """Least ordered surjection ``h`` with ``f == g o h``, or ``None``."""
    if f.n != g.n:
        raise ValueError(f"codomain mismatch: {f!r} vs {g!r}")
    # cheap necessary conditions: h surjective keeps the image, and h(1) = 1
    if f.m < g.m or (g.m == 0 and f.m > 0):
        return None
    if f.m and f.values[0] != g.values[0]:
        return None
    if set(f.values) != set(g.values):
        return None
    return next(factorizations(g, f), None)


def leq_os(f: FinMap, g: FinMap) -> bool:
    return divides_os(f, g) is not None


class HigmanData(NamedTuple):
    lam: int
    mu: int | str
    pi: int | str
    reduced: FinMap | str

    @property
    def injective(self) -> bool:
        return self.mu == INJECTIVE


def higman_data(f: FinMap) -> HigmanData:
    """Length, tail length after the last repeat, repeated value, and ``f`` with that repeat dropped."""
    m = f.m
    seen: set[int] = set()
    last = 0
    for i, v in enumerate(f.values, 1):
        if v in seen:
            last = i
        seen.add(v)
    if last == 0:
        return HigmanData(m, INJECTIVE, INJECTIVE, INJECTIVE)
    vals = f.values
    reduced = FinMap(vals[: last - 1] + vals[last:], f.n)
    return HigmanData(m, m - last, vals[last - 1], reduced)


@dataclass(frozen=True)
class QOrderOracle:
    """A decidable quasi-order whose carrier is enumerated up to a size bound."""

    name: str
    carrier: Callable[[int], Iterable[Hashable]]
    leq: Callable[[Hashable, Hashable], bool]

    def universe(self, bound: int) -> list:
        return list(self.carrier(bound))


def naturals() -> QOrderOracle:
    return QOrderOracle("naturals", lambda bound: range(bound + 1), lambda a, b: a <= b)


def gamma_divisibility(n: int) -> QOrderOracle:
    """Maps into ``n`` with domain size at most the bound, ordered by divisibility."""

    def carrier(bound):
        for m in range(bound + 1):
            yield from iter_homs(CatKind.ALL, m, n)

    return QOrderOracle(f"gamma({n})", carrier, leq_os)


@dataclass(frozen=True)
class Sieve:
    members: frozenset
    oracle: QOrderOracle

    def __contains__(self, x) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def violations(self, universe: Iterable) -> list[tuple]:
        """Pairs ``(x, y)`` with ``x <= y``, ``y`` a member and ``x`` not."""
        leq = self.oracle.leq
        outside = [x for x in universe if x not in self.members]
        return [(x, y) for y in self.members for x in outside if leq(x, y)]


def generated_sieve(oracle: QOrderOracle, generators: Iterable, universe_bound: int) -> Sieve:
    universe = oracle.universe(universe_bound)
    gens = list(generators)
    known = set(universe)
    for g in gens:
        if g not in known:
            raise ValueError(f"generator {g!r} outside the universe of size bound {universe_bound}")
    members = frozenset(x for x in universe if any(oracle.leq(x, g) for g in gens))
    return Sieve(members, oracle)


def find_domination(
    seq: Iterable,
    budget: int,
    mode: Literal["first_pair", "chain"] = "first_pair",
    leq: Callable = leq_os,
):
    """Search a sequence prefix for the domination predicted by a well-quasi-order.

    ``first_pair`` returns the first ``(i, j)`` with ``i < j`` and
    ``x_j <= x_i``, scanning ``j`` upward and then ``i`` upward, or ``None``.

    ``chain`` returns an increasing list of indices ``a`` with
    ``x_{a[q]} <= x_{a[p]}`` for ``p < q``.  Each index is the least one
    extending the chain that is still dominated by a later term of the
    window; the last index only needs to extend the chain.  ``None`` when no
    pair exists at all.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    xs = list(itertools.islice(seq, budget))
    if mode == "first_pair":
        for j in range(1, len(xs)):
            for i in range(j):
                if leq(xs[j], xs[i]):
                    return (i, j)
        return None
    if mode != "chain":
        raise ValueError(f"unknown mode {mode!r}")

    def extendable(i):
        return any(leq(xs[j], xs[i]) for j in range(i + 1, len(xs)))

    start = next((i for i in range(len(xs)) if extendable(i)), None)
    if start is None:
        return None
    chain = [start]
    while True:
        cur = chain[-1]
        below = [i for i in range(cur + 1, len(xs)) if leq(xs[i], xs[cur])]
        if not below:
            break
        nxt = next((i for i in below if extendable(i)), below[0])
        chain.append(nxt)
        if not extendable(nxt):
            break
    return chain
