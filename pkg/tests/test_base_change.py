import math
import random

import pytest

from gcat import base_change as bc
from gcat.finset import CatKind, FinMap, compose, enumerate_homs, identity, iter_homs, splitting
from gcat.sampling import random_os


def fm(*values, n=None):
    return FinMap(tuple(values), n if n is not None else max(values))


SWAP = fm(2, 1)


class TestSurToOsPerm:
    def test_examples(self):
        assert bc.sur_to_os_perm(fm(2, 1, 2)) == (fm(1, 2, 1), SWAP)
        assert bc.sur_to_os_perm(fm(1, 2, 1)) == (fm(1, 2, 1), identity(2))
        f, tau = bc.sur_to_os_perm(fm(3, 1, 2))
        assert f == fm(1, 2, 3) and tau == fm(3, 1, 2)
        assert compose(tau, f) == fm(3, 1, 2)

    def test_tau_sorts_minima(self):
        for g in iter_homs(CatKind.SUR, 5, 3):
            f, tau = bc.sur_to_os_perm(g)
            split = splitting(g)
            assert [split(tau(i)) for i in (1, 2, 3)] == sorted(split.values)

    def test_rejects_non_surjective(self):
        with pytest.raises(ValueError):
            bc.sur_to_os_perm(fm(1, 1, n=2))

    def test_inverse(self):
        assert bc.os_perm_to_sur(fm(1, 2, 1), SWAP) == fm(2, 1, 2)
        assert bc.os_perm_to_sur(fm(1, 2, 2), identity(2)) == fm(1, 2, 2)
        sur = enumerate_homs(CatKind.SUR, 4, 2)
        assert len(sur) == 14
        assert all(bc.os_perm_to_sur(*bc.sur_to_os_perm(g)) == g for g in sur)

    def test_inverse_rejects(self):
        with pytest.raises(ValueError):
            bc.os_perm_to_sur(fm(2, 1, 2), identity(2))
        with pytest.raises(ValueError):
            bc.os_perm_to_sur(fm(1, 2, 1), fm(1, 1, n=2))

    def test_bijection_exhaustive(self):
        for m in range(1, 7):
            for n in range(1, 5):
                os_maps = enumerate_homs(CatKind.OS, m, n)
                perms = enumerate_homs(CatKind.INJ, n, n)
                images = {bc.os_perm_to_sur(f, s) for f in os_maps for s in perms}
                assert images == set(iter_homs(CatKind.SUR, m, n))
                assert len(os_maps) * math.factorial(n) == len(images)


class TestOsToInj:
    def test_examples(self):
        f, g = fm(1, 2, 3, 3), fm(1, 1, 2)
        assert bc.os_to_inj(compose(g, f)) == fm(1, 3, n=4)
        assert bc.os_to_inj(compose(g, f)) == compose(bc.os_to_inj(f), bc.os_to_inj(g))
        assert bc.os_to_inj(identity(3)) == identity(3)
        assert bc.os_to_inj(fm(1, 1, 2)) == fm(1, 3, n=3)

    def test_rejects(self):
        with pytest.raises(ValueError):
            bc.os_to_inj(fm(2, 1, 2))

    def test_functorial_random(self):
        rng = random.Random(1)
        for _ in range(10_000):
            n = rng.randint(1, 4)
            mid = rng.randint(n, 6)
            m = rng.randint(mid, 8)
            f, g = random_os(rng, m, mid), random_os(rng, mid, n)
            assert bc.os_to_inj(compose(g, f)) == compose(bc.os_to_inj(f), bc.os_to_inj(g))


class TestInjCover:
    def test_examples(self):
        assert bc.inj_cover(fm(2, 1), 2, 2) == (identity(2), SWAP)
        assert bc.inj_cover(fm(3, 1), 2, 3) == (fm(1, 1, 2), SWAP)
        assert bc.inj_cover(fm(1, 3), 2, 3) == (fm(1, 1, 2), identity(2))

    def test_not_covered(self):
        with pytest.raises(bc.NotCovered):
            bc.inj_cover(fm(2, n=2))
        assert bc.inj_cover_search(fm(2, n=2)) is None

    def test_rejects_non_injective(self):
        with pytest.raises(ValueError):
            bc.inj_cover(fm(1, 1, n=2))

    def test_matches_search(self):
        for n in range(1, 4):
            for m in range(n, 6):
                for u in iter_homs(CatKind.INJ, n, m):
                    ref = bc.inj_cover_search(u)
                    if ref is None:
                        with pytest.raises(bc.NotCovered):
                            bc.inj_cover(u)
                    else:
                        assert bc.inj_cover(u) == ref
                        f, sigma = ref
                        assert compose(splitting(f), sigma) == u

    def test_coverage_is_exactly_maps_hitting_one(self):
        for n in range(1, 4):
            for m in range(n, 7):
                for u in iter_homs(CatKind.INJ, n, m):
                    covered = True
                    try:
                        bc.inj_cover(u)
                    except bc.NotCovered:
                        covered = False
                    assert covered == (1 in u.values)


class TestImageDecomposition:
    def test_examples(self):
        assert bc.gamma_decompose(fm(3, 1, 3)) == (fm(1, 3, n=3), fm(2, 1, 2))
        assert bc.gamma_decompose(fm(2, 2)) == (fm(2, n=2), fm(1, 1))
        u, s = bc.gamma_decompose(fm(3, 1, 2))
        assert u == identity(3) and s == fm(3, 1, 2)

    def test_compose_rejects(self):
        with pytest.raises(ValueError):
            bc.gamma_compose(fm(2, 1), identity(2))

    def test_coproduct_counts(self):
        for t in range(1, 6):
            for n in range(1, 6):
                total = sum(
                    len(enumerate_homs(CatKind.SUR, t, m))
                    for m in range(n + 1)
                    for u in iter_homs(CatKind.INJ, m, n) if u.values == tuple(sorted(u.values))
                )
                assert total == n ** t

    def test_all_injections_overcount(self):
        # indexing by every injection would count each map once per ordering of its image
        t, n = 3, 3
        total = sum(len(enumerate_homs(CatKind.SUR, t, m)) * math.perm(n, m) for m in range(n + 1))
        assert total > n ** t


class TestAdjunction:
    def test_examples(self):
        mx = bc.adjunction_to_matrix(2, 2, 1, [(1,), (0,)])
        assert mx.entries == ((1, 0),)
        mx = bc.adjunction_to_matrix(3, 1, 2, [(1, 2)])
        assert mx.column(0) == (1, 2)
        assert bc.matrix_to_adjunction(mx) == [(1, 2)]

    def test_malformed(self):
        with pytest.raises(ValueError):
            bc.adjunction_to_matrix(2, 2, 1, [(1,)])
        with pytest.raises(ValueError):
            bc.adjunction_to_matrix(2, 1, 1, [(2,)])
        with pytest.raises(ValueError):
            bc.Matrix(1, 1, 1, ((0,),))

    def test_small_round_trip(self):
        maps = list(bc.all_set_maps(2, 2, 1))
        assert len(maps) == 4
        for phi in maps:
            assert bc.matrix_to_adjunction(bc.adjunction_to_matrix(2, 2, 1, phi)) == list(phi)

    def test_module_map_extends_phi(self):
        rng = random.Random(2)
        for _ in range(200):
            q, X, r = rng.randint(2, 4), rng.randint(1, 3), rng.randint(1, 3)
            phi = [tuple(rng.randrange(q) for _ in range(r)) for _ in range(X)]
            mx = bc.adjunction_to_matrix(q, X, r, phi)
            a = [rng.randrange(q) for _ in range(X)]
            want = tuple(sum(a[j] * phi[j][i] for j in range(X)) % q for i in range(r))
            assert mx.apply(a) == want

    def test_json(self):
        mx = bc.adjunction_to_matrix(4, 2, 2, [(1, 3), (2, 0)])
        assert bc.Matrix.from_json(mx.to_json()) == mx

    @pytest.mark.parametrize("q", [2, 3, 4])
    def test_cardinality(self, q):
        for X in range(4):
            for r in range(4):
                n_maps = sum(1 for _ in bc.all_set_maps(q, X, r))
                assert n_maps == (q ** r) ** X
                if q ** (r * X) <= 5000:
                    mats = list(bc.all_matrices(q, X, r))
                    assert len(mats) == n_maps == len(set(mats))


class TestChainSteps:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_os_perm_iso(self, n):
        assert bc.os_perm_step(n).check(5) == []

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_image_iso(self, n):
        assert bc.image_step(n).check(4) == []

    def test_fi_cover_not_epi(self):
        # permutations of 2 all hit 1, so the first gap appears at t = 3
        bad = bc.fi_cover_step(2).check(4)
        assert bad == [(3, "not surjective"), (4, "not surjective")]
        assert all(reason == "not surjective" for _, reason in bad)

    def test_check_detects_non_injective(self):
        step = bc.ChainStep("collapse", "mono", lambda t: [0, 1], lambda t: [0], lambda t, a: 0)
        assert step.check(0) == [(0, "not injective")]
