"""Truncated Buchberger completion for subfunctors of ``M[C(-, x)]``.

Everything is computed up to a width ``T``: the completion handles all
overlaps of grade at most ``T``, membership is decided for elements of grade
at most ``T``, and Hilbert functions and initial data are tabulated for the
levels ``0..T``.  ``oracle_rref`` recomputes each level piece ``F(t)`` by
plain row reduction of generator translates and is kept independent of the
admissible order so it can cross-check the engine.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Hashable

import numpy as np

from .categories import CategoryOracle
from .linalg import check_prime, in_row_space, rref
from .modules import ModElement, Monomial, act, divide, divisible, leading_monomial

log = logging.getLogger(__name__)


class TruncationError(ValueError):
    """Raised when an element lies above the width the computation was truncated at."""


@dataclass
class SubfunctorPresentation:
    generators: list[ModElement]
    target: Hashable
    width: int
    cat: CategoryOracle
    k: int = 1
    p: int = 2

    def __post_init__(self):
        check_prime(self.p)
        if self.width < 0:
            raise ValueError("width must be nonnegative")
        for g in self.generators:
            if g.cat is not self.cat or g.target != self.target or g.k != self.k or g.p != self.p:
                raise ValueError(f"generator {g!r} does not live in this module")
            if g.grade() > self.width:
                raise ValueError(f"generator of grade {g.grade()} above width {self.width}")

    @classmethod
    def of(cls, generators: list[ModElement], width: int, **kw) -> "SubfunctorPresentation":
        """Infer target, category, ``k`` and ``p`` from the first generator."""
        if generators:
            g = generators[0]
            kw.setdefault("target", g.target)
            kw.setdefault("cat", g.cat)
            kw.setdefault("k", g.k)
            kw.setdefault("p", g.p)
        return cls(list(generators), width=width, **kw)

    def cleaned(self) -> list[ModElement]:
        """Nonzero generators, duplicates dropped, in input order."""
        seen: set = set()
        out = []
        for g in self.generators:
            if g and g not in seen:
                seen.add(g)
                out.append(g)
        return out


@dataclass
class GroebnerBasis:
    elements: list[ModElement]
    width: int
    cat: CategoryOracle
    target: Hashable
    k: int
    p: int
    stats: dict = field(default_factory=dict)

    def leads(self) -> list[Monomial]:
        return [leading_monomial(b)[0] for b in self.elements]


def _basis_key(b: ModElement):
    mono, _ = leading_monomial(b)
    return (b.cat.grade(mono.morphism), b.cat.sort_key(mono.morphism), mono.coord)


def buchberger(P: SubfunctorPresentation) -> GroebnerBasis:
    """Complete the generators of ``P`` to a basis that is Groebner up to ``P.width``.

    Grades are processed upward.  At each grade every monomial is tested
    against every basis leading monomial; all ways of reaching the monomial
    are paired with the first one (in basis order, then lexicographically in
    ``e``) and the resulting S-elements are reduced.  A nonzero remainder
    joins the basis monic, evicting elements whose leading monomial it
    divides, and processing resumes from the remainder's grade.
    """
    cat, T = P.cat, P.width
    basis: dict[int, ModElement] = {}
    next_id = 0
    pending: dict[int, list[ModElement]] = {}
    for g in P.cleaned():
        pending.setdefault(g.grade(), []).append(g)
    done_pairs: set = set()
    stats = {"s_pairs": 0, "reductions_to_zero": 0, "evicted": 0}

    def ordered():
        return sorted(basis.items(), key=lambda kv: _basis_key(kv[1]))

    def insert(r: ModElement) -> int:
        nonlocal next_id
        r = r.monic()
        lead, _ = leading_monomial(r)
        for bid, b in list(basis.items()):
            if divisible(cat, lead, leading_monomial(b)[0]):
                del basis[bid]
                stats["evicted"] += 1
                pending.setdefault(b.grade(), []).append(b)
        basis[next_id] = r
        next_id += 1
        return cat.grade(lead.morphism)

    t = 0
    while t <= T:
        restart = None
        for v in pending.pop(t, []):
            r, _ = divide(v, [b for _, b in ordered()])
            if r:
                g = insert(r)
                restart = g if restart is None else min(restart, g)
        if restart is not None and restart < t:
            t = restart
            continue
        items = ordered()
        for f in cat.graded(P.target, t):
            for coord in range(1, P.k + 1):
                mono = Monomial(f, coord)
                hits = []
                for bid, b in items:
                    for e in divisible(cat, leading_monomial(b)[0], mono):
                        hits.append((bid, e))
                for other in hits[1:]:
                    key = (hits[0], other)
                    if key in done_pairs:
                        continue
                    done_pairs.add(key)
                    stats["s_pairs"] += 1
                    (b1, e1), (b2, e2) = hits[0], other
                    s = act(basis[b1], e1) - act(basis[b2], e2)
                    r, _ = divide(s, [b for _, b in ordered()])
                    if not r:
                        stats["reductions_to_zero"] += 1
                        continue
                    g = insert(r)
                    restart = g if restart is None else min(restart, g)
                    items = ordered()
        nxt = t + 1
        if restart is not None:
            nxt = min(nxt, restart)
        if pending:
            nxt = min(nxt, min(pending))
        t = nxt
    elements = [b for _, b in ordered()]
    log.debug("buchberger: %d elements, %s", len(elements), stats)
    return GroebnerBasis(elements, T, cat, P.target, P.k, P.p, stats)


def is_member(v: ModElement, gb: GroebnerBasis) -> bool:
    if v.grade() > gb.width:
        raise TruncationError(f"grade {v.grade()} above width {gb.width}")
    if not v:
        return True
    r, _ = divide(v, gb.elements)
    return not r


def _columns(cat: CategoryOracle, target, k: int, monos) -> list[Monomial]:
    return sorted({Monomial(f, c) for f in monos for c in range(1, k + 1)},
                  key=lambda m: (cat.sort_key(m.morphism), m.coord))


def oracle_rref(P: SubfunctorPresentation, t: int) -> tuple[list[Monomial], np.ndarray, list[int]]:
    """Row-reduced basis of ``F(t)`` built directly from generator translates.

    Columns are the monomials of the level ``t`` piece in ascending monomial
    order; translates reaching beyond the piece (the polynomial case) are
    eliminated first and discarded.
    """
    if t > P.width:
        raise TruncationError(f"level {t} above width {P.width}")
    cat, k = P.cat, P.k
    gens = P.cleaned()
    inside = _columns(cat, P.target, k, cat.slice(P.target, t))
    if not gens or not inside:
        return inside, np.zeros((0, len(inside)), dtype=np.int64), []
    bound = cat.row_bound([g.grade() for g in gens], t)
    rows = []
    for g in gens:
        if cat.filtered:
            acting = [e for e in cat.homs(cat.level_of_grade(bound), g.level, bound - g.grade())]
        else:
            acting = cat.homs(cat.level_of_grade(t), g.level)
        rows.extend(act(g, e) for e in acting)
    extra = set()
    for r in rows:
        extra.update(m for m in r.terms)
    extra -= set(inside)
    outside = sorted(extra, key=lambda m: (-cat.grade(m.morphism), cat.sort_key(m.morphism), m.coord))
    cols = outside + inside
    index = {m: i for i, m in enumerate(cols)}
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for i, r in enumerate(rows):
        for m, c in r.terms.items():
            mat[i, index[m]] = c
    red, piv = rref(mat, P.p)
    n_out = len(outside)
    keep = [i for i, c in enumerate(piv) if c >= n_out]
    return inside, red[keep][:, n_out:], [piv[i] - n_out for i in keep]


def _vector(v: ModElement, cols: list[Monomial]) -> np.ndarray:
    index = {m: i for i, m in enumerate(cols)}
    vec = np.zeros(len(cols), dtype=np.int64)
    for m, c in v.terms.items():
        if m not in index:
            return None
        vec[index[m]] = c
    return vec


def oracle_member(v: ModElement, P: SubfunctorPresentation) -> bool:
    t = v.grade()
    if t > P.width:
        raise TruncationError(f"grade {t} above width {P.width}")
    if not v:
        return True
    cols, red, piv = oracle_rref(P, t)
    vec = _vector(v, cols)
    if vec is None:
        return False
    return in_row_space(red, piv, vec, P.p)


def standard_count(gb: GroebnerBasis, t: int) -> tuple[int, int]:
    """``(monomials in the leading sieve, all monomials)`` of the level ``t`` piece."""
    cat = gb.cat
    leads = gb.leads()
    total = inside = 0
    for f in cat.slice(gb.target, t):
        for coord in range(1, gb.k + 1):
            total += 1
            mono = Monomial(f, coord)
            if any(divisible(cat, lead, mono) for lead in leads):
                inside += 1
    return inside, total


def hilbert_function(gb: GroebnerBasis) -> list[int]:
    """Dimension of ``F(t)`` for ``t = 0..width`` read off the leading monomials."""
    return [standard_count(gb, t)[0] for t in range(gb.width + 1)]


def hilbert_table(P: SubfunctorPresentation, gb: GroebnerBasis | None = None) -> list[tuple[int, int, int, bool]]:
    """Rows ``(level, from leading monomials, from row reduction, agree)``."""
    gb = gb if gb is not None else buchberger(P)
    out = []
    for t in range(P.width + 1):
        std = standard_count(gb, t)[0]
        rk = len(oracle_rref(P, t)[2])
        out.append((t, std, rk, std == rk))
    return out


@dataclass
class InitialData:
    """Per-morphism leading-coefficient subspaces of ``F(t)``, each in reduced echelon form."""

    level: int
    k: int
    p: int
    spaces: dict

    def __eq__(self, other):
        if not isinstance(other, InitialData):
            return NotImplemented
        return (self.level, self.k, self.p) == (other.level, other.k, other.p) and self.spaces == other.spaces

    def dim(self, f) -> int:
        return len(self.spaces[f])

    def contains(self, f, other: "InitialData", g) -> bool:
        """Whether the space at ``f`` here lies inside the space at ``g`` of ``other``."""
        big = other.spaces[g]
        if not big:
            return not self.spaces[f]
        red, piv = rref(np.array(big, dtype=np.int64), self.p)
        return all(in_row_space(red, piv, np.array(v, dtype=np.int64), self.p) for v in self.spaces[f])


def tilde_at(P: SubfunctorPresentation, t: int) -> InitialData:
    """Project ``F(t) cap M[{g >= f}]`` onto the ``f`` coordinates, for each ``f``.

    In the reduced echelon basis of ``F(t)`` (columns ascending) the rows whose
    pivot lies at ``f`` or above span the intersection, and only the rows
    pivoting at ``f`` itself survive the projection.
    """
    cols, red, piv = oracle_rref(P, t)
    k = P.k
    spaces: dict = {}
    for f in P.cat.slice(P.target, t):
        spaces[f] = []
    for row, c in zip(red, piv):
        f = cols[c].morphism
        start = c - (cols[c].coord - 1)
        spaces[f].append(tuple(int(x) for x in row[start:start + k]))
    for f, vecs in spaces.items():
        spaces[f] = tuple(vecs)
    return InitialData(t, k, P.p, spaces)
