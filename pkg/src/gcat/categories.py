"""Graded presentations of the small categories the Groebner engine runs over.

An instance supplies hom-set enumeration, composition, an admissible
comparator and a divisor search.  Two instances ship with the package:

``GAMMA_OS``
    finite sets with ordered surjections; objects are sizes, a morphism's
    grade is its domain size and hom-sets are finite.
``NAT``
    the additive monoid of natural numbers as a one-object category;
    morphism ``d`` stands for ``x^d``, its grade is ``d``, and hom-sets are
    truncated at a degree bound.  Modules over it are polynomials in ``x``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Hashable

from . import finset
from .admissible import Cmp, lex_compare
from .finset import CatKind, FinMap
from .orders import factorizations


class CategoryOracle:
    """Interface of a graded category with an admissible order on each ``C(-, x)``.

    ``filtered`` is ``False`` when the piece of a free module at level ``t``
    is spanned by the morphisms of grade exactly ``t`` and ``True`` when it is
    spanned by those of grade at most ``t``.
    """

    name: str
    filtered: bool

    def objects(self, bound: int) -> list:
        raise NotImplementedError

    def homs(self, s, t, bound: int | None = None) -> list:
        """Morphisms ``s -> t`` in ascending admissible order."""
        raise NotImplementedError

    def compose(self, g, f):
        raise NotImplementedError

    def compare(self, f, g) -> Cmp:
        raise NotImplementedError

    def sort_key(self, f):
        """A key whose ordering agrees with ``compare`` on each hom-set."""
        raise NotImplementedError

    def divisors(self, f, g) -> list:
        """Every ``e`` with ``compose(f, e) == g``, lexicographically."""
        raise NotImplementedError

    def source(self, f):
        raise NotImplementedError

    def target(self, f):
        raise NotImplementedError

    def identity(self, x):
        raise NotImplementedError

    def grade(self, f) -> int:
        raise NotImplementedError

    def graded(self, x, g: int) -> list:
        """Morphisms into ``x`` of grade exactly ``g``, ascending."""
        raise NotImplementedError

    def level_of_grade(self, g: int):
        """The object a morphism of grade ``g`` starts from."""
        raise NotImplementedError

    def slice(self, x, t: int) -> list:
        if not self.filtered:
            return self.graded(x, t)
        out = []
        for g in range(t + 1):
            out.extend(self.graded(x, g))
        return sorted(out, key=self.sort_key)

    def row_bound(self, generator_grades: list[int], t: int) -> int:
        """Grade up to which generator translates must be taken so that
        eliminating everything above ``t`` leaves exactly the level ``t`` piece."""
        return t

    def encode(self, f) -> object:
        raise NotImplementedError

    def decode(self, obj) -> Hashable:
        raise NotImplementedError


class OrderedSurjections(CategoryOracle):
    name = "gamma_os"
    filtered = False

    def objects(self, bound):
        return list(range(bound + 1))

    def homs(self, s, t, bound=None):
        return _os_homs(s, t)

    def compose(self, g, f):
        return finset.compose(g, f)

    def compare(self, f, g):
        return lex_compare(f, g)

    def sort_key(self, f):
        return f.values

    def divisors(self, f, g):
        return _os_divisors(f, g)

    def source(self, f):
        return f.m

    def target(self, f):
        return f.n

    def identity(self, x):
        return finset.identity(x)

    def grade(self, f):
        return f.m

    def graded(self, x, g):
        return _os_homs(g, x)

    def level_of_grade(self, g):
        return g

    def encode(self, f):
        return f.to_json()

    def decode(self, obj):
        f = FinMap.from_json(obj)
        if not finset.is_ordered_surjective(f):
            raise ValueError(f"{f!r} is not an ordered surjection")
        return f


@lru_cache(maxsize=None)
def _os_homs(s: int, t: int) -> list[FinMap]:
    return finset.enumerate_homs(CatKind.OS, s, t)


@lru_cache(maxsize=1 << 18)
def _os_divisors(f: FinMap, g: FinMap) -> list[FinMap]:
    return list(factorizations(f, g))


class NaturalMonoid(CategoryOracle):
    """The monoid ``(N, +)``; the admissible order is reversed numeric order."""

    name = "nat"
    filtered = True

    def objects(self, bound):
        return [0]

    def homs(self, s, t, bound=None):
        if bound is None:
            raise ValueError("the monoid's hom-set is infinite; give a degree bound")
        return list(range(bound, -1, -1))

    def compose(self, g, f):
        return g + f

    def compare(self, f, g):
        if f == g:
            return Cmp.EQ
        return Cmp.LT if f > g else Cmp.GT

    def sort_key(self, f):
        return -f

    def divisors(self, f, g):
        return [g - f] if g >= f else []

    def source(self, f):
        return 0

    def target(self, f):
        return 0

    def identity(self, x):
        return 0

    def grade(self, f):
        return f

    def graded(self, x, g):
        return [g]

    def level_of_grade(self, g):
        return 0

    def row_bound(self, generator_grades, t):
        # a gcd of polynomials of degrees d_i is a combination whose terms stay
        # below sum(d_i), so its degree-<=t multiples need no higher translates
        return t + sum(generator_grades)

    def encode(self, f):
        return f

    def decode(self, obj):
        return int(obj)


GAMMA_OS = OrderedSurjections()
NAT = NaturalMonoid()

CATEGORIES = {c.name: c for c in (GAMMA_OS, NAT)}
