"""Concrete base-change data between the finite-set categories and free modules.

* ``gamma_decompose`` -- every map factors uniquely through its image as a
  surjection followed by an increasing injection.
* ``sur_to_os_perm`` / ``os_perm_to_sur`` -- surjections are exactly pairs of
  an ordered surjection and a permutation of the codomain.
* ``os_to_inj`` / ``inj_cover`` -- the functor sending an ordered surjection
  to its splitting, and the map ``(f, sigma) -> f^! o sigma`` onto injections.
* ``adjunction_to_matrix`` / ``matrix_to_adjunction`` -- maps from a finite set
  ``X`` into ``A^r`` against ``A``-linear maps ``A[X] -> A^r`` for ``A = Z/q``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable

from .finset import (
    CatKind,
    FinMap,
    compose,
    identity,
    image_factorization,
    inverse,
    is_increasing,
    is_injective,
    is_ordered_surjective,
    is_permutation,
    is_surjective,
    iter_homs,
    splitting,
)


def gamma_decompose(f: FinMap) -> tuple[FinMap, FinMap]:
    """Coproduct component (increasing injection) and element (surjection) of ``f``."""
    return image_factorization(f)


def gamma_compose(u: FinMap, s: FinMap) -> FinMap:
    if not is_increasing(u) or not is_surjective(s):
        raise ValueError("expected an increasing injection and a surjection")
    return compose(u, s)


def sur_to_os_perm(g: FinMap) -> tuple[FinMap, FinMap]:
    """Split a surjection as ``tau o f`` with ``f`` ordered.

    ``tau`` lists the codomain values of ``g`` in order of first appearance,
    which is the permutation making ``g^! o tau`` increasing.
    """
    if not is_surjective(g):
        raise ValueError(f"{g!r} is not surjective")
    split = splitting(g)
    tau = FinMap(tuple(sorted(range(1, g.n + 1), key=lambda i: split(i))), g.n)
    f = compose(inverse(tau), g)
    return f, tau


def os_perm_to_sur(f: FinMap, sigma: FinMap) -> FinMap:
    if not is_ordered_surjective(f):
        raise ValueError(f"{f!r} is not an ordered surjection")
    if not is_permutation(sigma) or sigma.n != f.n:
        raise ValueError(f"{sigma!r} is not a permutation of {f.n}")
    return compose(sigma, f)


def os_to_inj(f: FinMap) -> FinMap:
    if not is_ordered_surjective(f):
        raise ValueError(f"{f!r} is not an ordered surjection")
    return splitting(f)


class NotCovered(ValueError):
    """Raised when an injection is not of the form ``f^! o sigma``."""


def inj_cover(u: FinMap, n: int | None = None, m: int | None = None) -> tuple[FinMap, FinMap]:
    """Least pair ``(f, sigma)`` with ``f: m -> n`` ordered and ``f^! o sigma == u``.

    ``f^!`` is an increasing injection sending 1 to 1, so ``u`` is reachable
    exactly when 1 lies in its image; otherwise ``NotCovered`` is raised.
    """
    n = u.m if n is None else n
    m = u.n if m is None else m
    if u.m != n or u.n != m:
        raise ValueError(f"{u!r} is not a map {n} -> {m}")
    if not is_injective(u):
        raise ValueError(f"{u!r} is not injective")
    if n == 0:
        if m == 0:
            return identity(0), identity(0)
        raise NotCovered(f"no ordered surjection {m} -> 0")
    if 1 not in u.values:
        raise NotCovered(f"{u!r}: every f^! o sigma has 1 in its image")
    image = sorted(u.values)
    rank = {v: r for r, v in enumerate(image, 1)}
    sigma = FinMap(tuple(rank[v] for v in u.values), n)
    # f^! must be the increasing enumeration of the image; fill gaps with
    # the least admissible value to get the lexicographically least f
    vals = []
    cur = 0
    for i in range(1, m + 1):
        if cur < n and image[cur] == i:
            cur += 1
            vals.append(cur)
        else:
            vals.append(1)
    f = FinMap(tuple(vals), n)
    return f, sigma


def inj_cover_search(u: FinMap) -> tuple[FinMap, FinMap] | None:
    """Brute-force counterpart of ``inj_cover``: scan all pairs lexicographically."""
    n, m = u.m, u.n
    for f in iter_homs(CatKind.OS, m, n):
        split = splitting(f)
        for sigma in iter_homs(CatKind.INJ, n, n):
            if compose(split, sigma) == u:
                return f, sigma
    return None


@dataclass(frozen=True)
class Matrix:
    q: int
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("modulus must be at least 2")
        ent = tuple(tuple(int(x) % self.q for x in row) for row in self.entries)
        if len(ent) != self.rows or any(len(r) != self.cols for r in ent):
            raise ValueError("entries do not match the declared shape")
        object.__setattr__(self, "entries", ent)

    def apply(self, vec: Iterable[int]) -> tuple[int, ...]:
        vec = tuple(vec)
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) % self.q for row in self.entries)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def to_json(self) -> dict:
        return {"q": self.q, "rows": self.rows, "cols": self.cols, "entries": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, obj: dict) -> "Matrix":
        return cls(obj["q"], obj["rows"], obj["cols"], tuple(tuple(r) for r in obj["entries"]))


def adjunction_to_matrix(q: int, X: int, r: int, phi) -> Matrix:
    """The ``r x X`` matrix over ``Z/q`` whose column ``i`` is ``phi(i)``."""
    phi = [tuple(v) for v in phi]
    if len(phi) != X or any(len(v) != r for v in phi):
        raise ValueError(f"phi must list {X} vectors of length {r}")
    for v in phi:
        if any(not 0 <= c < q for c in v):
            raise ValueError(f"entries of {v} are not residues mod {q}")
    return Matrix(q, r, X, tuple(tuple(phi[j][i] for j in range(X)) for i in range(r)))


def matrix_to_adjunction(mx: Matrix) -> list[tuple[int, ...]]:
    return [mx.column(j) for j in range(mx.cols)]


def all_set_maps(q: int, X: int, r: int):
    """Every map from an ``X``-element set into ``(Z/q)^r``."""
    points = list(itertools.product(range(q), repeat=r))
    return itertools.product(points, repeat=X)


def all_matrices(q: int, X: int, r: int):
    for flat in itertools.product(range(q), repeat=r * X):
        yield Matrix(q, r, X, tuple(tuple(flat[i * X:(i + 1) * X]) for i in range(r)))


@dataclass
class ChainStep:
    """One epi or mono step between functors evaluated object by object.

    ``source(t)`` and ``target(t)`` list the values at object ``t`` and
    ``arrow(t, a)`` maps a source value to a target value.
    """

    name: str
    direction: str
    source: Callable[[int], list]
    target: Callable[[int], list]
    arrow: Callable[[int, object], object]

    def check(self, bound: int) -> list[tuple[int, str]]:
        """Objects ``t <= bound`` where the step fails to be epi/mono/valued in the target."""
        bad = []
        for t in range(bound + 1):
            tgt = self.target(t)
            tgt_set = set(tgt)
            images = [self.arrow(t, a) for a in self.source(t)]
            if any(b not in tgt_set for b in images):
                bad.append((t, "outside target"))
            if self.direction in ("epi", "iso") and set(images) != tgt_set:
                bad.append((t, "not surjective"))
            if self.direction in ("mono", "iso") and len(set(images)) != len(images):
                bad.append((t, "not injective"))
        return bad


def os_perm_step(n: int) -> ChainStep:
    """``Gamma_os(-, n) x S_n -> Gamma_sur(-, n)``, an isomorphism."""
    perms = list(iter_homs(CatKind.INJ, n, n))
    return ChainStep(
        f"os x S_{n} -> sur",
        "iso",
        lambda t: [(f, s) for f in iter_homs(CatKind.OS, t, n) for s in perms],
        lambda t: list(iter_homs(CatKind.SUR, t, n)),
        lambda t, a: os_perm_to_sur(*a),
    )


def image_step(n: int) -> ChainStep:
    """``coprod_u Gamma_sur(-, m) -> Gamma(-, n)`` over increasing injections ``u``."""

    def source(t):
        out = []
        for m in range(n + 1):
            for u in iter_homs(CatKind.INJ, m, n):
                if is_increasing(u):
                    out.extend((u, s) for s in iter_homs(CatKind.SUR, t, m))
        return out

    return ChainStep(
        f"coprod sur -> gamma({n})",
        "iso",
        source,
        lambda t: list(iter_homs(CatKind.ALL, t, n)),
        lambda t, a: compose(a[0], a[1]),
    )


def fi_cover_step(n: int) -> ChainStep:
    """``Gamma_os(-, n) x S_n -> Gamma_inj(n, -)`` via ``(f, sigma) -> f^! o sigma``."""
    perms = list(iter_homs(CatKind.INJ, n, n))
    return ChainStep(
        f"os x S_{n} -> inj({n}, -)",
        "epi",
        lambda t: [(f, s) for f in iter_homs(CatKind.OS, t, n) for s in perms],
        lambda t: list(iter_homs(CatKind.INJ, n, t)),
        lambda t, a: compose(splitting(a[0]), a[1]),
    )
