from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rootgate.coarse import coarse_classes
from rootgate.errors import RankTooSmall, RootNotInSystem
from rootgate.parabolic import (
    Parabolic,
    all_parabolics,
    contains_root_space,
    corank2_parabolics,
    maximal_parabolics,
    parabolic,
    resonant_codimension,
    verify_closure,
)
from rootgate.rootsys import Root, build, supported_types

SMALL = supported_types(6)
MEDIUM = supported_types(8)


def _q(label, kept):
    return Parabolic(build(label), frozenset(kept))


def _nonadjacent(rs, pair):
    i, j = pair
    return rs.cartan_matrix[i - 1][j - 1] == 0


def diagram_automorphisms(rs):
    """All index permutations preserving the Cartan matrix (brute force)."""
    n = rs.rank
    c = rs.cartan_matrix
    return [
        p for p in permutations(range(n))
        if all(c[p[i]][p[j]] == c[i][j] for i in range(n) for j in range(n))
    ]


class TestContains:
    def test_kept_negative_simple(self):
        rs = build("A2")
        assert contains_root_space(_q("A2", {1}), rs.root((-1, 0)))

    def test_unsupported_negative(self):
        rs = build("A2")
        assert not contains_root_space(_q("A2", {1}), rs.root((-1, -1)))

    @pytest.mark.parametrize("label", ["A3", "BC2", "G2"])
    def test_whole_algebra(self, label):
        rs = build(label)
        q = _q(label, range(1, rs.rank + 1))
        assert all(contains_root_space(q, r) for r in rs.all_roots)

    def test_foreign_root(self):
        with pytest.raises(RootNotInSystem):
            contains_root_space(_q("A2", ()), Root((3, 0), (3, -3, 0)))

    def test_bad_index(self):
        with pytest.raises(ValueError):
            _q("A2", {3})


class TestClosure:
    def test_b3(self):
        assert verify_closure(_q("B3", {2, 3}))

    def test_minimal(self):
        assert verify_closure(_q("A2", ()))

    def test_negative_control(self):
        rs = build("A2")
        q = _q("A2", ())
        crippled = q.roots() - {rs.root((1, 1))}
        assert not verify_closure(q, crippled)

    @pytest.mark.parametrize("t", SMALL, ids=str)
    def test_every_parabolic_closed(self, t):
        rs = build(t)
        assert all(verify_closure(q) for q in all_parabolics(rs))


class TestResonantCodimension:
    def test_b2_maximal(self):
        assert resonant_codimension(parabolic(build("B2"), (1,))) == 3

    def test_g2_minimal(self):
        assert resonant_codimension(_q("G2", ())) == 6

    @pytest.mark.parametrize("label", ["A1", "BC3", "E6", "F4"])
    def test_whole_algebra_zero(self, label):
        rs = build(label)
        assert resonant_codimension(_q(label, range(1, rs.rank + 1))) == 0

    def test_counts_classes_not_roots(self):
        # BC1 minimal parabolic excludes -e1 and -2e1, one coarse class
        assert resonant_codimension(_q("BC1", ())) == 1

    @pytest.mark.parametrize("t", SMALL, ids=str)
    def test_saturation(self, t):
        rs = build(t)
        for q in all_parabolics(rs):
            inside = q.roots()
            for c in coarse_classes(rs):
                assert len({m in inside for m in c.members}) == 1

    @pytest.mark.parametrize("t", SMALL, ids=str)
    def test_matches_direct_count(self, t):
        rs = build(t)
        classes = coarse_classes(rs)
        for q in all_parabolics(rs):
            inside = q.roots()
            direct = sum(1 for c in classes if not (c.members & inside))
            assert resonant_codimension(q) == direct

    @given(st.sampled_from(MEDIUM).flatmap(
        lambda t: st.tuples(st.just(t), st.sets(st.integers(1, t.rank)), st.sets(st.integers(1, t.rank)))
    ))
    def test_antitone(self, args):
        t, a, b = args
        rs = build(t)
        small, big = frozenset(a), frozenset(a | b)
        assert resonant_codimension(Parabolic(rs, small)) >= resonant_codimension(Parabolic(rs, big))

    @pytest.mark.parametrize("t", MEDIUM, ids=str)
    def test_corank_one_suffices(self, t):
        rs = build(t)
        proper = min(resonant_codimension(q) for q in all_parabolics(rs, proper_only=True))
        assert proper == min(resonant_codimension(q) for q in maximal_parabolics(rs))

    @pytest.mark.parametrize("t", SMALL, ids=str)
    def test_automorphism_invariance(self, t):
        rs = build(t)
        n = rs.rank
        for p in diagram_automorphisms(rs):
            for k in range(n + 1):
                for exc in combinations(range(1, n + 1), k):
                    moved = [p[i - 1] + 1 for i in exc]
                    assert resonant_codimension(parabolic(rs, exc)) == resonant_codimension(parabolic(rs, moved))

    def test_d4_has_triality(self):
        assert len(diagram_automorphisms(build("D4"))) == 6

    @pytest.mark.parametrize("n", range(1, 9))
    def test_a_flip(self, n):
        rs = build(f"A{n}")
        codims = [resonant_codimension(q) for q in maximal_parabolics(rs)]
        assert codims == codims[::-1]


class TestEnumeration:
    def test_a3_maximal(self):
        qs = maximal_parabolics(build("A3"))
        assert [sorted(q.excluded) for q in qs] == [[1], [2], [3]]

    def test_g2_maximal(self):
        assert [resonant_codimension(q) for q in maximal_parabolics(build("G2"))] == [5, 5]

    def test_e6_maximal(self):
        codims = [resonant_codimension(q) for q in maximal_parabolics(build("E6"))]
        assert len(codims) == 6 and min(codims) == 16

    def test_d4_corank2(self):
        rs = build("D4")
        rows = {tuple(sorted(q.excluded)): resonant_codimension(q) for q in corank2_parabolics(rs)}
        assert sorted(rows.values()) == [9, 9, 9, 10, 10, 10]
        for pair, codim in rows.items():
            assert (codim == 9) == _nonadjacent(rs, pair)
            assert (codim == 10) == (2 in pair)

    def test_a2_corank2(self):
        (q,) = corank2_parabolics(build("A2"))
        assert q.kept == frozenset() and resonant_codimension(q) == 3

    def test_b2_corank2(self):
        (q,) = corank2_parabolics(build("B2"))
        assert resonant_codimension(q) == 4

    def test_corank2_rank_one(self):
        with pytest.raises(RankTooSmall):
            corank2_parabolics(build("A1"))

    @pytest.mark.parametrize("n", range(2, 9))
    def test_corank2_count(self, n):
        assert len(corank2_parabolics(build(f"B{n}"))) == n * (n - 1) // 2

    def test_all_parabolics_count(self):
        assert len(all_parabolics(build("F4"))) == 16
        assert len(all_parabolics(build("F4"), proper_only=True)) == 15
