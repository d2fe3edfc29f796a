"""The lexicographic order on ordered surjections and a bounded admissibility check.

An order on the morphisms into ``x`` is admissible when it is total on every
hom-set ``C(t, x)`` and ``f < f'`` implies ``f o e < f' o e`` for every
composable ``e``.  Ascending chains stabilise trivially on finite hom-sets,
so only totality, antisymmetry, transitivity and right compatibility are
checked; right cancellation is reported alongside since the Groebner engine
relies on it.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Callable, Optional

from .finset import FinMap

if TYPE_CHECKING:
    from .categories import CategoryOracle


class Cmp(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


Comparator = Callable[[object, object], Optional[Cmp]]


def lex_compare(f: FinMap, g: FinMap) -> Cmp:
    if f.m != g.m or f.n != g.n:
        raise ValueError(f"shape mismatch: {f!r} vs {g!r}")
    for a, b in zip(f.values, g.values):
        if a != b:
            return Cmp.LT if a < b else Cmp.GT
    return Cmp.EQ


def divisibility_compare(f: FinMap, g: FinMap) -> Optional[Cmp]:
    """The divisibility quasi-order as a comparator; ``None`` when incomparable."""
    from .orders import leq_os

    le, ge = leq_os(f, g), leq_os(g, f)
    if le and ge:
        return Cmp.EQ
    if le:
        return Cmp.LT
    if ge:
        return Cmp.GT
    return None


@dataclass
class AdmissibilityReport:
    category: str
    bound: int
    hom_sets: int = 0
    pairs: int = 0
    actions: int = 0
    axiom1: list = field(default_factory=list)
    axiom2: list = field(default_factory=list)
    cancellation: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.axiom1 or self.axiom2 or self.cancellation)

    def to_json(self, encode=repr) -> dict:
        def enc(row):
            return [encode(x) if not isinstance(x, str) else x for x in row]

        return {
            "category": self.category,
            "bound": self.bound,
            "passed": self.passed,
            "counts": {"hom_sets": self.hom_sets, "pairs": self.pairs, "actions": self.actions},
            "axiom1": [enc(r) for r in self.axiom1],
            "axiom2": [enc(r) for r in self.axiom2],
            "cancellation": [enc(r) for r in self.cancellation],
        }

    def dumps(self, encode=repr) -> str:
        return json.dumps(self.to_json(encode), indent=2)


def check_admissible(oracle: "CategoryOracle", cmp: Comparator, bound: int) -> AdmissibilityReport:
    """Exhaustively check the admissibility axioms for ``cmp`` on hom-sets within ``bound``.

    Axiom 1 violations are ``("incomparable", f, g)``, ``("asymmetric", f, g)``
    and ``("cycle", f, g, h)``; axiom 2 violations are ``(f, g, e)`` with
    ``f < g`` but not ``f e < g e``; cancellation failures are ``(f, g, e)``
    with ``f != g`` and ``f e == g e``.
    """
    report = AdmissibilityReport(oracle.name, bound)
    objs = oracle.objects(bound)
    for x in objs:
        for t in objs:
            hom = oracle.homs(t, x, bound)
            if not hom:
                continue
            report.hom_sets += 1
            less: dict = {f: set() for f in hom}
            for f, g in itertools.combinations(hom, 2):
                report.pairs += 1
                c, d = cmp(f, g), cmp(g, f)
                if c is None or d is None:
                    report.axiom1.append(("incomparable", f, g))
                    continue
                if c != -d or c == Cmp.EQ:
                    report.axiom1.append(("asymmetric", f, g))
                    continue
                lo, hi = (f, g) if c == Cmp.LT else (g, f)
                less[lo].add(hi)
            for f in hom:
                if cmp(f, f) != Cmp.EQ:
                    report.axiom1.append(("asymmetric", f, f))
                for g in less[f]:
                    for h in less[g]:
                        if f in less[h]:
                            report.axiom1.append(("cycle", f, g, h))
            for s in objs:
                acting = oracle.homs(s, t, bound)
                for e in acting:
                    images = {}
                    for f in hom:
                        fe = oracle.compose(f, e)
                        if oracle.grade(fe) > bound:
                            continue
                        report.actions += 1
                        if fe in images and images[fe] != f:
                            report.cancellation.append((images[fe], f, e))
                        images[fe] = f
                    for f in hom:
                        for g in less[f]:
                            fe, ge = oracle.compose(f, e), oracle.compose(g, e)
                            if oracle.grade(fe) > bound or oracle.grade(ge) > bound:
                                continue
                            if cmp(fe, ge) != Cmp.LT:
                                report.axiom2.append((f, g, e))
    return report
