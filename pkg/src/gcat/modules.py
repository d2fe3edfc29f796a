"""Elements of free functor modules ``M[C(-, x)]`` with ``M = F_p^k``.

A monomial is a pair ``(f, i)`` of a morphism ``f`` in ``C(t, x)`` and a
coordinate ``1 <= i <= k``.  Monomials are compared by the admissible order on
``f`` and then by coordinate, and the leading monomial of an element is the
*smallest* monomial of its support: the coefficient singled out by the
initial-data construction sits at the minimum of the support.
"""

from __future__ import annotations

import heapq
from typing import Hashable, Iterable, NamedTuple

from .categories import GAMMA_OS, CategoryOracle
from .finset import CompositionError
from .linalg import inv_mod


class Monomial(NamedTuple):
    morphism: Hashable
    coord: int


class ModElement:
    """A level-homogeneous element; treat instances as immutable."""

    __slots__ = ("cat", "level", "target", "k", "p", "terms", "_lead")

    def __init__(self, cat: CategoryOracle, level, target, k: int, p: int, terms=None):
        self.cat = cat
        self.level = level
        self.target = target
        self.k = k
        self.p = p
        clean = {}
        for mono, c in (terms or {}).items():
            if not isinstance(mono, Monomial):
                mono = Monomial(*mono)
            c %= p
            if c:
                clean[mono] = c
        self.terms = clean
        self._lead = None

    @classmethod
    def _raw(cls, cat, level, target, k, p, terms):
        # trusted constructor: terms already reduced and nonzero
        obj = cls.__new__(cls)
        obj.cat, obj.level, obj.target, obj.k, obj.p = cat, level, target, k, p
        obj.terms = terms
        obj._lead = None
        return obj

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ModElement):
            return NotImplemented
        return (
            self.cat is other.cat
            and self.level == other.level
            and self.target == other.target
            and self.k == other.k
            and self.p == other.p
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.cat.name, self.level, self.target, self.k, self.p, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"ModElement(0 @ level {self.level})"
        parts = [f"{c}*e{_fmt(m.morphism)}[{m.coord}]" for m, c in self.sorted_terms()]
        return "ModElement(" + " + ".join(parts) + f" over F_{self.p})"

    def mono_key(self, mono: Monomial):
        return (self.cat.sort_key(mono.morphism), mono.coord)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda kv: self.mono_key(kv[0]))

    def validate(self) -> "ModElement":
        cat = self.cat
        for mono in self.terms:
            f = mono.morphism
            if cat.source(f) != self.level or cat.target(f) != self.target:
                raise ValueError(f"monomial {mono} is not in C({self.level}, {self.target})")
            if not 1 <= mono.coord <= self.k:
                raise ValueError(f"coordinate {mono.coord} outside 1..{self.k}")
        return self

    def scale(self, c: int) -> "ModElement":
        c %= self.p
        if c == 0:
            return self.zero_like()
        p = self.p
        return ModElement._raw(self.cat, self.level, self.target, self.k, p,
                               {m: v * c % p for m, v in self.terms.items()})

    def __add__(self, other: "ModElement") -> "ModElement":
        return self.axpy(1, other)

    def __sub__(self, other: "ModElement") -> "ModElement":
        return self.axpy(-1, other)

    def axpy(self, c: int, other: "ModElement") -> "ModElement":
        """``self + c * other``."""
        _check_compatible(self, other)
        p = self.p
        out = dict(self.terms)
        for m, v in other.terms.items():
            s = (out.get(m, 0) + c * v) % p
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return ModElement._raw(self.cat, self.level, self.target, self.k, p, out)

    def zero_like(self) -> "ModElement":
        return ModElement._raw(self.cat, self.level, self.target, self.k, self.p, {})

    def grade(self) -> int:
        """Largest grade in the support (the level's grade for the zero element)."""
        if not self.terms:
            return _level_grade(self.cat, self.level)
        return max(self.cat.grade(m.morphism) for m in self.terms)

    def monic(self) -> "ModElement":
        _, c = leading_monomial(self)
        return self.scale(inv_mod(c, self.p))


def _level_grade(cat, level) -> int:
    return cat.grade(cat.identity(level))


def _fmt(f) -> str:
    values = getattr(f, "values", None)
    return str(list(values)) if values is not None else f"x^{f}"


def _check_compatible(a: ModElement, b: ModElement):
    if a.cat is not b.cat or a.target != b.target or a.k != b.k or a.p != b.p:
        raise ValueError("elements live in different modules")
    if a.level != b.level:
        raise ValueError(f"levels differ: {a.level} vs {b.level}")


def basis_element(f, coord: int = 1, *, k: int = 1, p: int = 2, coeff: int = 1,
                  cat: CategoryOracle = GAMMA_OS) -> ModElement:
    return ModElement(cat, cat.source(f), cat.target(f), k, p, {Monomial(f, coord): coeff})


def element(terms: Iterable[tuple], *, p: int, k: int = 1, cat: CategoryOracle = GAMMA_OS,
            level=None, target=None) -> ModElement:
    """Build an element from ``(coeff, morphism)`` or ``(coeff, morphism, coord)`` triples."""
    d: dict = {}
    for item in terms:
        c, f = item[0], item[1]
        coord = item[2] if len(item) > 2 else 1
        mono = Monomial(f, coord)
        d[mono] = d.get(mono, 0) + c
    if level is None or target is None:
        if not d:
            raise ValueError("level and target are required for an empty element")
        f0 = next(iter(d)).morphism
        level = cat.source(f0) if level is None else level
        target = cat.target(f0) if target is None else target
    return ModElement(cat, level, target, k, p, d).validate()


def act(v: ModElement, e) -> ModElement:
    """Precompose every monomial of ``v`` with ``e``."""
    cat = v.cat
    if cat.target(e) != v.level:
        raise CompositionError(f"{e!r} does not end at level {v.level}")
    out: dict = {}
    p = v.p
    for mono, c in v.terms.items():
        key = Monomial(cat.compose(mono.morphism, e), mono.coord)
        s = (out.get(key, 0) + c) % p
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return ModElement._raw(cat, cat.source(e), v.target, v.k, p, out)


def leading_monomial(v: ModElement) -> tuple[Monomial, int]:
    if not v.terms:
        raise ValueError("the zero element has no leading monomial")
    if v._lead is None:
        mono = min(v.terms, key=v.mono_key)
        v._lead = (mono, v.terms[mono])
    return v._lead


def divisible(cat: CategoryOracle, lead: Monomial, mono: Monomial) -> list:
    """Morphisms ``e`` with ``lead.morphism o e == mono.morphism`` (empty if coordinates differ)."""
    if lead.coord != mono.coord:
        return []
    if cat.target(lead.morphism) != cat.target(mono.morphism):
        return []
    return cat.divisors(lead.morphism, mono.morphism)


def divide(v: ModElement, basis: list[ModElement]):
    """Fully reduce ``v`` by ``basis``.

    Scans the support upward in monomial order; the first basis element whose
    leading monomial divides the current monomial is used, with the least
    dividing ``e``.  Returns ``(remainder, quotients)`` where ``quotients`` is a
    list of ``(index, e, scalar)`` such that
    ``v == sum(scalar * act(basis[index], e)) + remainder``.
    """
    cat = v.cat
    p = v.p
    leads = []
    for b in basis:
        _check_module(v, b)
        if not b:
            raise ValueError("cannot divide by the zero element")
        mono, c = leading_monomial(b)
        leads.append((mono, inv_mod(c, p)))
    terms = dict(v.terms)
    quotients = []
    key = v.mono_key
    heap = [(key(m), i, m) for i, m in enumerate(terms)]
    heapq.heapify(heap)
    tick = len(heap)
    done: set = set()
    while heap:
        _, _, mono = heapq.heappop(heap)
        if mono in done or mono not in terms:
            continue
        done.add(mono)
        for idx, (lead, lead_inv) in enumerate(leads):
            es = divisible(cat, lead, mono)
            if not es:
                continue
            e = es[0]
            scalar = terms[mono] * lead_inv % p
            quotients.append((idx, e, scalar))
            for m2, c2 in basis[idx].terms.items():
                m3 = Monomial(cat.compose(m2.morphism, e), m2.coord)
                s = (terms.get(m3, 0) - scalar * c2) % p
                if s:
                    if m3 not in terms:
                        tick += 1
                        heapq.heappush(heap, (key(m3), tick, m3))
                    terms[m3] = s
                else:
                    terms.pop(m3, None)
            break
    remainder = ModElement._raw(cat, v.level, v.target, v.k, p, terms)
    return remainder, quotients


def _check_module(v: ModElement, b: ModElement):
    if v.cat is not b.cat or v.target != b.target or v.k != b.k or v.p != b.p:
        raise ValueError("elements live in different modules")


def reconstruct(quotients, basis: list[ModElement], remainder: ModElement) -> ModElement:
    """Evaluate ``sum(scalar * act(basis[i], e)) + remainder`` from a division certificate."""
    total = remainder
    for idx, e, scalar in quotients:
        total = total.axpy(scalar, act(basis[idx], e))
    return total
