"""Seeded random instances for property checks and experiments."""

from __future__ import annotations

import random

from .categories import GAMMA_OS, NAT
from .finset import CatKind, FinMap, compose, iter_homs
from .groebner import SubfunctorPresentation
from .modules import ModElement, Monomial, act
from .orders import higman_data


def random_map(rng: random.Random, m: int, n: int) -> FinMap:
    return FinMap(tuple(rng.randint(1, n) for _ in range(m)), n)


def random_os(rng: random.Random, m: int, n: int) -> FinMap:
    """Uniform ordered surjection ``m -> n`` (requires ``m >= n >= 1`` or ``m == n == 0``)."""
    homs = _os_list(m, n)
    if not homs:
        raise ValueError(f"no ordered surjection {m} -> {n}")
    return rng.choice(homs)


_OS_CACHE: dict = {}


def _os_list(m, n):
    key = (m, n)
    if key not in _OS_CACHE:
        _OS_CACHE[key] = list(iter_homs(CatKind.OS, m, n))
    return _OS_CACHE[key]


def random_sequence(rng: random.Random, length: int, n: int, max_domain: int) -> list[FinMap]:
    return [random_map(rng, rng.randint(0, max_domain), n) for _ in range(length)]


def random_noninjective(rng: random.Random, n: int, max_domain: int) -> FinMap:
    while True:
        f = random_map(rng, rng.randint(2, max_domain), n)
        if len(set(f.values)) < f.m:
            return f


def higman_pair(rng: random.Random, n: int, max_domain: int) -> tuple[FinMap, FinMap]:
    """Non-injective ``f, g`` sharing tail length and repeated value with reduced ``f <= `` reduced ``g``.

    ``g`` is drawn at random; ``f`` is rebuilt from a multiple of ``g``'s
    reduced map by reinserting the repeated value, and resampled until its
    own data match.
    """
    while True:
        g = random_noninjective(rng, n, max_domain)
        dg = higman_data(g)
        gr = dg.reduced
        lo = gr.m
        if lo + 1 > max_domain:
            continue
        size = rng.randint(lo, max_domain - 1)
        if size == 0:
            fr = gr
        else:
            h = random_os(rng, size, gr.m) if gr.m else None
            if h is None:
                continue
            fr = compose(gr, h)
        pos = fr.m + 1 - dg.mu
        if pos < 2:
            continue
        vals = fr.values[: pos - 1] + (dg.pi,) + fr.values[pos - 1:]
        f = FinMap(vals, n)
        df = higman_data(f)
        if df.mu == dg.mu and df.pi == dg.pi and df.reduced == fr:
            return f, g


def random_element(rng: random.Random, level: int, x: int, k: int, p: int,
                   density: float = 0.35, nonzero: bool = True) -> ModElement:
    homs = GAMMA_OS.homs(level, x)
    monos = [Monomial(f, c) for f in homs for c in range(1, k + 1)]
    while True:
        terms = {m: rng.randrange(1, p) for m in monos if rng.random() < density}
        if terms or not nonzero or not monos:
            return ModElement(GAMMA_OS, level, x, k, p, terms)


def random_presentation(rng: random.Random, *, max_target: int = 3, max_width: int = 6,
                        primes=(2, 5), max_gens: int = 3, max_k: int = 2) -> SubfunctorPresentation:
    x = rng.randint(1, max_target)
    T = rng.randint(x, max_width)
    p = rng.choice(primes)
    k = rng.randint(1, max_k)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        # generators at level x tend to span everything; favour higher levels
        lo = x if rng.random() < 0.2 else min(x + 1, T)
        level = rng.randint(lo, min(T, x + 2))
        gens.append(random_element(rng, level, x, k, p))
    return SubfunctorPresentation(gens, x, T, GAMMA_OS, k, p)


def random_probe(rng: random.Random, P: SubfunctorPresentation) -> ModElement:
    """Half the time a random combination of generator translates, otherwise a random element."""
    t = rng.randint(P.target, P.width)
    gens = [g for g in P.generators if g.level <= t]
    if gens and rng.random() < 0.5:
        v = ModElement(P.cat, t, P.target, P.k, P.p, {})
        for g in gens:
            for e in P.cat.homs(t, g.level):
                c = rng.randrange(P.p)
                if c and rng.random() < 0.5:
                    v = v.axpy(c, act(g, e))
        return v
    return random_element(rng, t, P.target, P.k, P.p, nonzero=False)


def random_poly(rng: random.Random, max_degree: int, p: int) -> list[int]:
    a = [rng.randrange(p) for _ in range(rng.randint(0, max_degree + 1))]
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_presentation(gens: list[list[int]], p: int, width: int) -> SubfunctorPresentation:
    from .polys import to_element

    return SubfunctorPresentation([to_element(g, p) for g in gens], 0, width, NAT, 1, p)
