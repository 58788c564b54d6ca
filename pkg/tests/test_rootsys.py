from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rootgate.errors import InvalidRank, NonConvergence, RootNotInSystem
from rootgate.rootsys import (
    POSITIVE_ROOT_COUNT,
    RootSystemType,
    build,
    cartan_matrix,
    closure_oracle,
    direct_sum,
    dot,
    enumerate_positive_roots,
    oracle_root_coords,
    support,
    supported_types,
)

ALL_TYPES = supported_types(12)
SMALL_TYPES = supported_types(6)


def _simply_laced(n, edges):
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        m[i - 1][j - 1] = m[j - 1][i - 1] = -1
    return tuple(tuple(r) for r in m)


def _textbook_cartan(t):
    """Cartan matrices written out from the Dynkin diagrams (Bourbaki labels)."""
    n = t.rank
    chain = [(i, i + 1) for i in range(1, n)]
    if t.family == "A":
        return _simply_laced(n, chain)
    if t.family == "D":
        return _simply_laced(n, chain[:-1] + [(n - 2, n)])
    if t.family in ("E6", "E7", "E8"):
        return _simply_laced(n, [(1, 3), (2, 4)] + [(i, i + 1) for i in range(3, n)])
    m = [list(r) for r in _simply_laced(n, chain)]
    if t.family in ("B", "BC") and n > 1:
        m[n - 2][n - 1] = -2
    elif t.family == "C":
        m[n - 1][n - 2] = -2
    elif t.family == "F4":
        m[1][2] = -2
    elif t.family == "G2":
        m[1][0] = -3
    return tuple(tuple(r) for r in m)


class TestType:
    @pytest.mark.parametrize("fam,n", [("A", 0), ("B", 1), ("C", 1), ("D", 3), ("D", 2), ("BC", 0)])
    def test_rank_constraints(self, fam, n):
        with pytest.raises(InvalidRank):
            RootSystemType(fam, n)

    def test_exceptional_fixed_rank(self):
        assert RootSystemType("E7").rank == 7
        with pytest.raises(InvalidRank):
            RootSystemType("F4", 5)

    @pytest.mark.parametrize("text,label", [("A3", "A3"), ("bc2", "BC2"), ("D_4", "D4"), ("E8", "E8"), ("g2", "G2")])
    def test_parse(self, text, label):
        assert RootSystemType.parse(text).label == label

    @pytest.mark.parametrize("text", ["D3", "E5", "X2", "A", ""])
    def test_parse_rejects(self, text):
        with pytest.raises(InvalidRank):
            RootSystemType.parse(text)


class TestBuild:
    def test_a2(self):
        rs = build("A2")
        assert {r.ambient for r in rs.positive_roots} == {(1, -1, 0), (0, 1, -1), (1, 0, -1)}
        assert len(rs.all_roots) == 6

    def test_g2_count(self):
        assert len(build("G2").positive_roots) == 6

    def test_bc1(self):
        amb = [r.ambient for r in build("BC1").positive_roots]
        assert amb == [(Fraction(1),), (Fraction(2),)]

    def test_d3_rejected(self):
        with pytest.raises(InvalidRank):
            build("D3")

    def test_cached(self):
        assert build("E6") is build(RootSystemType("E6"))

    def test_e8_half_integers_exact(self):
        rs = build("E8")
        denominators = {c.denominator for r in rs.all_roots for c in r.ambient}
        assert denominators == {1, 2}
        assert all(isinstance(c, Fraction) for r in rs.all_roots for c in r.ambient)

    @pytest.mark.parametrize("t", ALL_TYPES, ids=str)
    def test_count_law(self, t):
        assert len(build(t).positive_roots) == POSITIVE_ROOT_COUNT[t.family](t.rank)

    @pytest.mark.parametrize("t", ALL_TYPES, ids=str)
    def test_matches_reflection_closure(self, t):
        assert {r.simple_coords for r in build(t).all_roots} == oracle_root_coords(t)

    @pytest.mark.parametrize("t", ALL_TYPES, ids=str)
    def test_negation_and_sign_coherence(self, t):
        rs = build(t)
        for r in rs.all_roots:
            assert -r in rs.all_roots
            assert all(c >= 0 for c in r.simple_coords) or all(c <= 0 for c in r.simple_coords)

    @pytest.mark.parametrize("t", ALL_TYPES, ids=str)
    def test_ambient_is_combination_of_simple(self, t):
        rs = build(t)
        for r in rs.all_roots:
            combo = tuple(
                sum((c * s.ambient[d] for c, s in zip(r.simple_coords, rs.simple_roots)), Fraction(0))
                for d in range(len(r.ambient))
            )
            assert combo == r.ambient

    @pytest.mark.parametrize("t", ALL_TYPES, ids=str)
    def test_string_property(self, t):
        rs = build(t)
        pos = set(rs.positive_roots)
        for beta in rs.positive_roots:
            if beta.height == 1:
                continue
            assert any(
                rs._index.get(tuple(c - (k == i) for k, c in enumerate(beta.simple_coords))) in pos
                for i in range(rs.rank)
            ), beta


class TestEnumerate:
    def test_a2_order(self):
        assert [r.simple_coords for r in enumerate_positive_roots(build("A2"))] == [(1, 0), (0, 1), (1, 1)]

    def test_b2_heights(self):
        assert [r.height for r in enumerate_positive_roots(build("B2"))] == [1, 1, 2, 3]

    def test_e8_size(self):
        assert len(enumerate_positive_roots(build("E8"))) == 120

    @given(st.sampled_from(SMALL_TYPES))
    def test_deterministic_and_sorted(self, t):
        rs = build(t)
        a = enumerate_positive_roots(rs)
        assert a == enumerate_positive_roots(rs)
        heights = [r.height for r in a]
        assert heights == sorted(heights)


class TestCartan:
    def test_a2(self):
        assert cartan_matrix(build("A2")) == ((2, -1), (-1, 2))

    def test_g2_off_diagonal(self):
        m = cartan_matrix(build("G2"))
        assert {m[0][1], m[1][0]} == {-1, -3}

    def test_a1(self):
        assert cartan_matrix(build("A1")) == ((2,),)

    @pytest.mark.parametrize("t", supported_types(8), ids=str)
    def test_textbook(self, t):
        assert cartan_matrix(build(t)) == _textbook_cartan(t)

    @pytest.mark.parametrize("t", supported_types(8), ids=str)
    def test_inner_product_formula(self, t):
        s = build(t).simple_roots
        for i, a in enumerate(s):
            for j, b in enumerate(s):
                assert cartan_matrix(build(t))[i][j] == 2 * dot(a.ambient, b.ambient) / dot(b.ambient, b.ambient)


class TestSupport:
    def test_a2_sum(self):
        assert support(build("A2").root((1, 1))) == {1, 2}

    def test_a3_simple(self):
        assert support(build("A3").simple_roots[0]) == {1}

    def test_bc2_long(self):
        rs = build("BC2")
        (r,) = [r for r in rs.all_roots if r.ambient == (0, 2)]
        assert r.simple_coords == (0, 2)
        assert support(r) == {2}

    def test_lookup_missing(self):
        with pytest.raises(RootNotInSystem):
            build("A2").root((2, 0))


class TestClosureOracle:
    def test_a2(self):
        assert len(closure_oracle(((2, -1), (-1, 2)))) == 6

    def test_f4(self):
        assert len(closure_oracle(_textbook_cartan(RootSystemType("F4")))) == 48

    def test_a1(self):
        assert closure_oracle(((2,),)) == {(1,), (-1,)}

    def test_affine_matrix_does_not_converge(self):
        with pytest.raises(NonConvergence):
            closure_oracle(((2, -2), (-2, 2)), max_roots=500)

    def test_bc_is_union_of_b_and_c(self):
        assert len(oracle_root_coords("BC3")) == 2 * (9 + 3)


class TestDirectSum:
    def test_blocks_orthogonal(self):
        ds = direct_sum("A2", "G2", "BC1")
        roots = ds.all_roots
        assert len(roots) == 6 + 12 + 4
        by_factor = {}
        for r in roots:
            by_factor.setdefault(ds.factor_of(r), []).append(r)
        for i, a in by_factor.items():
            for j, b in by_factor.items():
                if i != j:
                    assert all(dot(x.ambient, y.ambient) == 0 for x in a for y in b)

    def test_negation_closed(self):
        ds = direct_sum("B2", "A1")
        assert all(-r in ds.all_roots for r in ds.all_roots)
        assert ds.rank == 3
