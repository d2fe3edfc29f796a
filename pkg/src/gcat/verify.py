"""Property suites run by ``gcat verify``.

Every suite returns a ``SuiteReport``: per named check, the number of cases
examined, the number of failures and up to ``keep`` counterexamples.
"""

from __future__ import annotations

import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import base_change as bc
from .admissible import check_admissible
from .categories import GAMMA_OS, NAT
from .finset import CatKind, compose, is_increasing, iter_homs, splitting
from .groebner import buchberger, hilbert_table, is_member, oracle_member, tilde_at
from .orders import find_domination, higman_data, leq_os
from .sampling import (
    higman_pair,
    random_element,
    random_presentation,
    random_probe,
    random_sequence,
)
from .groebner import SubfunctorPresentation


@dataclass
class Check:
    cases: int = 0
    failures: int = 0
    counterexamples: list = field(default_factory=list)

    def record(self, ok: bool, example=None, keep: int = 5):
        self.cases += 1
        if not ok:
            self.failures += 1
            if len(self.counterexamples) < keep:
                self.counterexamples.append(repr(example))


@dataclass
class SuiteReport:
    suite: str
    params: dict
    checks: dict = field(default_factory=dict)

    def check(self, name: str) -> Check:
        return self.checks.setdefault(name, Check())

    @property
    def passed(self) -> bool:
        return all(c.failures == 0 for c in self.checks.values())

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "passed": self.passed,
            "checks": {
                k: {"cases": c.cases, "failures": c.failures, "counterexamples": c.counterexamples}
                for k, c in self.checks.items()
            },
        }


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("GCAT_THREADS", "1")))
    except ValueError:
        return 1


def stirling2(m: int, n: int) -> int:
    """Stirling numbers of the second kind by the closed inclusion-exclusion sum."""
    if m == 0 and n == 0:
        return 1
    if n == 0:
        return 0
    return sum((-1) ** j * math.comb(n, j) * (n - j) ** m for j in range(n + 1)) // math.factorial(n)


def suite_stronglynoeth(trials: int = 500, length: int = 200, max_n: int = 3, max_domain: int = 12,
                        seed: int = 0, **_) -> SuiteReport:
    rep = SuiteReport("stronglynoeth", dict(trials=trials, length=length, max_n=max_n, max_domain=max_domain, seed=seed))
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(1, max_n)
        seq = random_sequence(rng, length, n, max_domain)
        pair = find_domination(seq, length, "first_pair")
        rep.check("first_pair").record(pair is not None, seq[:5])
        if pair is not None:
            i, j = pair
            rep.check("pair_valid").record(i < j and leq_os(seq[j], seq[i]), pair)
    return rep


def suite_higman(trials: int = 10_000, max_n: int = 4, max_domain: int = 8, seed: int = 0, **_) -> SuiteReport:
    rep = SuiteReport("higman", dict(trials=trials, max_n=max_n, max_domain=max_domain, seed=seed))
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(1, max_n)
        f, g = higman_pair(rng, n, max_domain)
        rep.check("f_le_reduced").record(leq_os(f, higman_data(f).reduced), f)
        rep.check("implication").record(leq_os(f, g), (f, g))
    return rep


def suite_contra1(max_m: int | None = None, max_n: int | None = None, max_t: int | None = None,
                  max: int | None = None, **_) -> SuiteReport:
    if max is not None:
        max_m = max_n = max_t = max
    max_m = 6 if max_m is None else max_m
    max_n = 4 if max_n is None else max_n
    max_t = 5 if max_t is None else max_t
    rep = SuiteReport("contra1", dict(max_m=max_m, max_n=max_n, max_t=max_t))
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            n_os = n_sur = 0
            for g in iter_homs(CatKind.SUR, m, n):
                n_sur += 1
                f, tau = bc.sur_to_os_perm(g)
                rep.check("sur_round_trip").record(bc.os_perm_to_sur(f, tau) == g, g)
            perms = list(iter_homs(CatKind.INJ, n, n))
            for f in iter_homs(CatKind.OS, m, n):
                n_os += 1
                for s in perms:
                    back = bc.sur_to_os_perm(bc.os_perm_to_sur(f, s))
                    rep.check("os_perm_round_trip").record(back == (f, s), (f, s))
            rep.check("os_times_perms").record(n_os * math.factorial(n) == n_sur, (m, n, n_os, n_sur))
    for t in range(1, max_t + 1):
        for n in range(1, max_t + 1):
            total = 0
            for m in range(n + 1):
                for u in iter_homs(CatKind.INJ, m, n):
                    if is_increasing(u):
                        total += sum(1 for _ in iter_homs(CatKind.SUR, t, m))
            rep.check("coproduct_count").record(total == n ** t, (t, n, total))
            for f in iter_homs(CatKind.ALL, t, n):
                u, s = bc.gamma_decompose(f)
                rep.check("image_round_trip").record(bc.gamma_compose(u, s) == f, f)
    return rep


def suite_admissible(max: int = 4, axiom2_bound: int = 6, **_) -> SuiteReport:
    rep = SuiteReport("admissible", dict(max=max, axiom2_bound=axiom2_bound))
    r = check_admissible(GAMMA_OS, GAMMA_OS.compare, max)
    for name, rows in (("axiom1", r.axiom1), ("axiom2", r.axiom2), ("cancellation", r.cancellation)):
        c = rep.check(f"gamma_os_{name}")
        c.cases = r.pairs if name == "axiom1" else r.actions
        for row in rows:
            c.failures += 1
            c.counterexamples.append(repr(row))
    # right compatibility of lex for targets <= 3 and actions from domains <= axiom2_bound
    c = rep.check("lex_right_compatible")
    for x in range(1, 4):
        for t in range(x, axiom2_bound + 1):
            hom = GAMMA_OS.homs(t, x)
            for s in range(t, axiom2_bound + 1):
                for e in GAMMA_OS.homs(s, t):
                    images = [compose(f, e) for f in hom]
                    # hom is sorted ascending, so images must be strictly ascending
                    ok = all(a.values < b.values for a, b in zip(images, images[1:]))
                    c.record(ok, (x, t, e))
    r = check_admissible(NAT, NAT.compare, 6)
    c = rep.check("nat_monoid")
    c.cases = r.pairs + r.actions
    for row in r.axiom1 + r.axiom2 + r.cancellation:
        c.failures += 1
        c.counterexamples.append(repr(row))
    return rep


def nested_pair(rng: random.Random, max_target: int = 3, max_width: int = 5, primes=(2, 5)):
    """Presentations ``F`` and ``G`` (``G`` has one more generator) and a level where ``F(t)`` is proper in ``G(t)``."""
    while True:
        G = random_presentation(rng, max_target=max_target, max_width=max_width, primes=primes,
                                max_gens=3, max_k=2)
        if len(G.generators) < 2:
            extra = random_element(rng, rng.randint(G.target, G.width), G.target, G.k, G.p)
            G = SubfunctorPresentation(G.generators + [extra], G.target, G.width, G.cat, G.k, G.p)
        F = SubfunctorPresentation(G.generators[:-1], G.target, G.width, G.cat, G.k, G.p)
        levels = list(range(G.target, G.width + 1))
        rng.shuffle(levels)
        from .groebner import oracle_rref

        for t in levels:
            if len(oracle_rref(F, t)[2]) < len(oracle_rref(G, t)[2]):
                return F, G, t


def suite_tilde(trials: int = 200, monotone_max: int = 4, seed: int = 0, **_) -> SuiteReport:
    rep = SuiteReport("tilde", dict(trials=trials, monotone_max=monotone_max, seed=seed))
    rng = random.Random(seed)
    for _ in range(trials):
        F, G, t = nested_pair(rng)
        tf, tg = tilde_at(F, t), tilde_at(G, t)
        rep.check("strict").record(tf != tg, (F.generators, G.generators[-1], t))
        rep.check("contained").record(all(tf.contains(f, tg, f) for f in tf.spaces), t)
    for _ in range(max(1, trials // 10)):
        P = random_presentation(rng, max_width=monotone_max)
        data = {t: tilde_at(P, t) for t in range(P.target, P.width + 1)}
        for t, dt in data.items():
            for s in range(t, P.width + 1):
                for e in GAMMA_OS.homs(s, t):
                    for f in dt.spaces:
                        fe = compose(f, e)
                        rep.check("monotone").record(dt.contains(f, data[s], fe), (f, e))
    return rep


def suite_adjunction(max_q: int = 4, max_x: int = 3, max_r: int = 3, **_) -> SuiteReport:
    rep = SuiteReport("adjunction", dict(max_q=max_q, max_x=max_x, max_r=max_r))
    for q in range(2, max_q + 1):
        for X in range(0, max_x + 1):
            for r in range(0, max_r + 1):
                maps = 0
                images = set()
                for phi in bc.all_set_maps(q, X, r):
                    maps += 1
                    mx = bc.adjunction_to_matrix(q, X, r, phi)
                    images.add(mx.entries)
                    rep.check("round_trip").record(bc.matrix_to_adjunction(mx) == list(phi), (q, phi))
                n_mats = sum(1 for _ in bc.all_matrices(q, X, r)) if q ** (r * X) <= 5000 else q ** (r * X)
                ok = maps == q ** (r * X) == n_mats == len(images)
                rep.check("cardinality").record(ok, (q, X, r, maps, n_mats, len(images)))
                if q ** (r * X) <= 5000:
                    for mx in bc.all_matrices(q, X, r):
                        phi = bc.matrix_to_adjunction(mx)
                        back = bc.adjunction_to_matrix(q, X, r, phi)
                        basis_ok = all(mx.apply(tuple(int(i == j) for i in range(X))) == phi[j] for j in range(X))
                        rep.check("matrix_round_trip").record(back == mx and basis_ok, (q, mx.entries))
    return rep


def suite_fi_epi(max_n: int = 3, max_m: int = 6, **_) -> SuiteReport:
    rep = SuiteReport("fi-epi", dict(max_n=max_n, max_m=max_m))
    for n in range(1, max_n + 1):
        for m in range(n, max_m + 1):
            for u in iter_homs(CatKind.INJ, n, m):
                try:
                    f, sigma = bc.inj_cover(u, n, m)
                except bc.NotCovered:
                    rep.check("covered").record(False, u)
                    continue
                ok = compose(splitting(f), sigma) == u
                rep.check("covered").record(ok, u)
    for n in range(1, 4):
        for f in iter_homs(CatKind.OS, 5, n):
            for g in iter_homs(CatKind.OS, n, min(n, 2)):
                lhs = bc.os_to_inj(compose(g, f))
                rhs = compose(bc.os_to_inj(f), bc.os_to_inj(g))
                rep.check("functorial").record(lhs == rhs, (f, g))
    return rep


def _equiv_one(args):
    seed, index, probes = args
    rng = random.Random(f"{seed}:{index}")
    P = random_presentation(rng)
    gb = buchberger(P)
    out = []
    for _ in range(probes):
        v = random_probe(rng, P)
        a, b = is_member(v, gb), oracle_member(v, P)
        out.append(("membership", a == b, (v, a, b)))
    for row in hilbert_table(P, gb):
        out.append(("hilbert", row[3], row))
    return out


def suite_oracle_equiv(trials: int = 100, probes: int = 10, seed: int = 0, **_) -> SuiteReport:
    rep = SuiteReport("oracle-equiv", dict(trials=trials, probes=probes, seed=seed))
    jobs = [(seed, i, probes) for i in range(trials)]
    workers = worker_count()
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_equiv_one, jobs))
    else:
        results = [_equiv_one(j) for j in jobs]
    for res in results:
        for name, ok, ex in res:
            rep.check(name).record(ok, ex)
    return rep


SUITES = {
    "stronglynoeth": suite_stronglynoeth,
    "higman": suite_higman,
    "contra1": suite_contra1,
    "admissible": suite_admissible,
    "tilde": suite_tilde,
    "adjunction": suite_adjunction,
    "fi-epi": suite_fi_epi,
    "oracle-equiv": suite_oracle_equiv,
}


def run_suite(name: str, **params) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    params = {k: v for k, v in params.items() if v is not None}
    return SUITES[name](**params)
