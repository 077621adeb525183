"""Graph cohomology: solved dimensions, numerators, characters, classes."""

from fractions import Fraction

import pytest

from gkmhess import cohomology as CH
from gkmhess import graphs as G
from gkmhess import hessenberg as H
from gkmhess import linalg as L
from gkmhess import polys
from gkmhess.coloring import csf_q, llt
from gkmhess.maps import omega_graded


def c_triple(hstr):
    h = H.from_string(hstr)
    return next(t for t in H.find_modular_triples(h) if t.kind == "C")


class TestEquivariantPiece:
    def test_h22_degree0(self):
        # oracle: 2 unknown constants, one forced equality -> dim 1
        g = G.build_GX(H.from_string("2,2"))
        assert CH.equivariant_piece(g, 0).dim == 1

    def test_h22_degree1(self):
        # oracle: 4 unknowns, 1 substitution constraint -> dim 3
        g = G.build_GX(H.from_string("2,2"))
        assert CH.equivariant_piece(g, 1).dim == 3

    @pytest.mark.parametrize("hstr", ["2,2", "2,3,3", "3,3,3"])
    def test_degree0_connected(self, hstr):
        g = G.build_GX(H.from_string(hstr))
        assert CH.equivariant_piece(g, 0).dim == 1

    def test_basis_columns_are_classes(self):
        g = G.build_GX(H.from_string("2,3,3"))
        basis = CH.equivariant_piece(g, 2)
        for col in basis.columns:
            cls = CH.EquivariantClass.from_vector(g, 2, col)
            assert CH.membership_check(cls, g)


class TestMonomialIndex:
    def test_count(self):
        from math import comb
        for n in (1, 2, 3, 4):
            for k in (0, 1, 2, 3, 4):
                idx = CH.MonomialIndex(n, k)
                assert len(idx) == comb(n + k - 1, k)

    def test_graded_lex_t1_largest(self):
        idx = CH.MonomialIndex(2, 2)
        assert idx.exponents == ((2, 0), (1, 1), (0, 2))
        assert idx.position((1, 1)) == 1


class TestDegreeZeroContainsConstants:
    @pytest.mark.parametrize("hstr", ["2,2", "2,3,3", "1,2,3"])
    def test_constant_in_space(self, hstr):
        g = G.build_GX(H.from_string(hstr))
        basis = CH.equivariant_piece(g, 0)
        ones = {i: Fraction(1) for i in range(len(g.vertices))}
        from gkmhess.linalg import ColumnReducer
        red = ColumnReducer()
        for col in basis.columns:
            red.insert(col)
        rem, _ = red.reduce(ones)
        assert not rem


class TestBlowupSelfConsistency:
    def test_basis_columns_pass_membership(self):
        t = c_triple("2,3,3")
        for side in ("x", "y"):
            bl = G.build_blowup(t, side)
            sp = CH.solve_graph(bl, max_degree=2)
            for k in (0, 1, 2):
                for col in sp.bases[k].columns:
                    cls = CH.EquivariantClass.from_vector(bl, k, col)
                    assert CH.membership_check(cls, bl)


class TestHilbertNumerator:
    def test_h22(self):
        sp = CH.solve_graph(G.build_GX(H.from_string("2,2")))
        assert CH.hilbert_numerator(sp) == [1, 1]

    def test_h233(self):
        sp = CH.solve_graph(G.build_GX(H.from_string("2,3,3")))
        assert CH.hilbert_numerator(sp) == [1, 4, 1]

    def test_h333_q_factorial(self):
        sp = CH.solve_graph(G.build_GX(H.from_string("3,3,3")))
        assert CH.hilbert_numerator(sp) == [1, 2, 2, 1]

    @pytest.mark.parametrize("n", [2, 3])
    def test_total_and_palindromy(self, n):
        import math
        for h in H.enumerate_hessenberg(n):
            sp = CH.solve_graph(G.build_GX(h))
            b = CH.hilbert_numerator(sp)
            assert sum(b) == math.factorial(n)
            assert b == b[::-1]

    def test_insufficient_margin_raises(self):
        g = G.build_GX(H.from_string("2,2"))
        sp = CH.solve_graph(g, max_degree=g.top_degree)
        with pytest.raises(CH.Truncated):
            CH.hilbert_numerator(sp)

    def test_blowup_total(self):
        import math
        t = c_triple("2,3,3")
        for side in ("x", "y"):
            sp = CH.solve_graph(G.build_blowup(t, side))
            assert sum(CH.hilbert_numerator(sp)) == 2 * math.factorial(3)


class TestOrdinaryDirect:
    def test_h233_dims(self):
        sp = CH.solve_graph(G.build_GX(H.from_string("2,3,3")))
        numer = CH.hilbert_numerator(sp)
        basis = CH.ordinary_piece_direct(sp, 1, expected=numer[1])
        assert basis.dim == 4
        basis = CH.ordinary_piece_direct(sp, 3)
        assert basis.dim == 0

    def test_degree0(self):
        sp = CH.solve_graph(G.build_GX(H.from_string("2,3,3")))
        basis = CH.ordinary_piece_direct(sp, 0)
        assert basis.dim == 1

    def test_mismatch_raises(self):
        sp = CH.solve_graph(G.build_GX(H.from_string("2,2")))
        with pytest.raises(CH.DimensionMismatch):
            CH.ordinary_piece_direct(sp, 1, expected=2)


class TestCharacters:
    def test_identity_trace_is_dimension(self):
        sp = CH.solve_graph(G.build_GX(H.from_string("2,3,3")))
        for k in range(sp.max_degree + 1):
            tr = CH.equivariant_trace(sp, k, (1, 2, 3), "dot")
            assert tr == sp.dim(k)

    def test_h22_trivial_character(self):
        sp = CH.solve_graph(G.build_GX(H.from_string("2,2")))
        char = CH.graded_character(sp, "dot")
        for lam in ((2,), (1, 1)):
            for k in (0, 1):
                assert char.value(lam, k) == 1

    def test_h22_dagger_same_dims(self):
        spy = CH.solve_graph(G.build_GY(H.from_string("2,2")))
        char = CH.graded_character(spy, "dagger")
        assert char.dims() == [1, 1]

    def test_well_defined_on_other_representatives(self):
        # trace must agree for two permutations of the same cycle type
        sp = CH.solve_graph(G.build_GX(H.from_string("2,3,3,4")),
                            max_degree=2)
        for k in (0, 1, 2):
            CH.check_action_invariance(sp, k, "dot")
            a = CH.equivariant_trace(sp, k, (2, 1, 4, 3), "dot")
            b = CH.equivariant_trace(sp, k, (1, 3, 2, 4)[:4], "dot")
            ref22 = CH.equivariant_trace(
                sp, k, G.class_representative((2, 2)), "dot")
            ref21 = CH.equivariant_trace(
                sp, k, G.class_representative((2, 1, 1)), "dot")
            assert a == ref22
            assert b == ref21

    def test_trace_matches_restrict_endomorphism(self):
        # the optimized trace equals the trace of the restricted matrix
        g = G.build_GX(H.from_string("2,3,3"))
        sp = CH.solve_graph(g)
        k = 1
        sigma = (2, 1, 3)
        pi = CH.coordinate_perm(g, k, sigma, "dot")
        m = len(CH.monomials(3, k))
        p = L.RationalMatrix(
            len(g.vertices) * m, len(g.vertices) * m,
            {(pi[c], c): Fraction(1) for c in range(len(pi))})
        restricted = L.restrict_endomorphism(sp.bases[k], p)
        tr = sum(v for (i, j), v in restricted.entries.items() if i == j)
        assert tr == CH.equivariant_trace(sp, k, sigma, "dot")

    def test_degree0_traces_are_one_connected(self):
        for hstr, side, kind in (("2,3,3", "x", "dot"), ("2,3,3", "y", "dagger")):
            sp = CH.solve_graph(G.build_graph(H.from_string(hstr), side))
            char = CH.graded_character(sp, kind)
            from gkmhess.symfunc import partitions_of
            for lam in partitions_of(3):
                assert char.value(lam, 0) == 1


class TestFrobeniusSeries:
    def test_h22_dot(self):
        from gkmhess.symfunc import SymmetricFunction, GradedSymmetricFunction
        sp = CH.solve_graph(G.build_GX(H.from_string("2,2")))
        fs = CH.frobenius_series(sp, "dot")
        h2 = SymmetricFunction.generator("h", (2,)).convert("m")
        assert fs == GradedSymmetricFunction(2, {0: h2, 1: h2})

    def test_isolated_vertices_regular_rep(self):
        from gkmhess.symfunc import SymmetricFunction, GradedSymmetricFunction
        for n in (2, 3):
            h = H.validate(tuple(range(1, n + 1)))
            sp = CH.solve_graph(G.build_GX(h))
            fs = CH.frobenius_series(sp, "dot")
            expected = SymmetricFunction.generator("p", (1,) * n).convert("m")
            assert fs == GradedSymmetricFunction(n, {0: expected})

    def test_gy_233_equals_llt(self):
        sp = CH.solve_graph(G.build_GY(H.from_string("2,3,3")))
        assert CH.frobenius_series(sp, "dagger") == llt(H.from_string("2,3,3"))

    def test_gx_233_equals_omega_csf(self):
        sp = CH.solve_graph(G.build_GX(H.from_string("2,3,3")))
        assert CH.frobenius_series(sp, "dot") == \
            omega_graded(csf_q(H.from_string("2,3,3")))


class TestClasses:
    def test_xi_on_plain_graph(self):
        g = G.build_GX(H.from_string("2,3,3"))
        x2 = CH.make_class_xi(g, 2)
        for v in g.vertices:
            assert x2.value(v) == polys.tvar(3, v.perm[1])

    def test_xi_sum_is_constant(self):
        g = G.build_GX(H.from_string("2,3,3"))
        total = {}
        for i in (1, 2, 3):
            xi = CH.make_class_xi(g, i)
            for v in g.vertices:
                total[v] = polys.add(total.get(v, {}), xi.value(v))
        expected = polys.add(polys.add(polys.tvar(3, 1), polys.tvar(3, 2)),
                             polys.tvar(3, 3))
        assert all(p == expected for p in total.values())

    def test_xi_on_blowup_example(self):
        # x_3(°123) = t_{w(3)} with w = (123) tau = 132 -> t_2
        bl = G.build_blowup(c_triple("2,3,3"), "x")
        x3 = CH.make_class_xi(bl, 3)
        assert x3.value(G.circ((1, 2, 3))) == polys.tvar(3, 2)

    def test_xi_y_side_rejected(self):
        bl = G.build_blowup(c_triple("2,3,3"), "y")
        with pytest.raises(CH.MembershipFailed):
            CH.make_class_xi(bl, 1)

    def test_constant_class_member(self):
        g = G.build_GX(H.from_string("2,3,3"))
        cls = CH.EquivariantClass(
            g, 1, {v: polys.tvar(3, 1) for v in g.vertices})
        assert CH.membership_check(cls, g)

    def test_corrupted_class_fails(self):
        g = G.build_GX(H.from_string("2,3,3"))
        values = {v: polys.tvar(3, 1) for v in g.vertices}
        values[g.vertices[0]] = polys.tvar(3, 2)
        with pytest.raises(CH.MembershipFailed):
            CH.EquivariantClass(g, 1, values)


class TestInversionStatisticOracle:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_numerator_counts_h_inversions(self, n):
        # fully independent oracle: the graded Betti numbers count
        # permutations by the number of reversed Hessenberg pairs
        for h in H.enumerate_hessenberg(n):
            pairs = G.hessenberg_pairs(h)
            dist: dict[int, int] = {}
            for w in G.all_perms(n):
                inv = sum(1 for (i, j) in pairs if w[j - 1] > w[i - 1])
                dist[inv] = dist.get(inv, 0) + 1
            oracle = [dist.get(k, 0) for k in range(h.dimension() + 1)]
            sp = CH.solve_graph(G.build_GX(h))
            assert CH.hilbert_numerator(sp) == oracle


class TestQuadConditionsMatter:
    def test_signed_space_is_strictly_smaller(self):
        # dropping the 4-gon conditions gives a different (non-palindromic)
        # numerator, so the signed conditions are load bearing
        t = c_triple("2,3,3")
        bl = G.build_blowup(t, "x")
        signed = CH.solve_graph(bl)
        unsigned = CH.solve_graph(bl.base)
        assert signed.dim(2) < unsigned.dim(2)
        numer = CH.hilbert_numerator(unsigned)
        assert numer != CH.hilbert_numerator(signed)
        assert numer != numer[::-1]


class TestActionInvarianceGuard:
    def test_symmetry_broken_graph_raises(self):
        # deleting one edge of the hexagon breaks vertex transitivity, so
        # the dot action no longer preserves the solution space
        g = G.build_GX(H.from_string("2,3,3"))
        broken = G.LabeledGraph(g.n, g.vertices, g.edges[1:], g.top_degree)
        sp = CH.solve_graph(broken, max_degree=1)
        with pytest.raises(CH.NotInvariant):
            CH.check_action_invariance(sp, 1, "dot")


class TestCharacterIntegrality:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_ordinary_values_are_integers(self, n):
        from gkmhess.symfunc import partitions_of
        for h in H.enumerate_hessenberg(n):
            for side, kind in (("x", "dot"), ("y", "dagger")):
                sp = CH.solve_graph(G.build_graph(h, side))
                char = CH.graded_character(sp, kind)
                for lam in partitions_of(n):
                    for k in range(char.max_q() + 1):
                        assert char.value(lam, k).denominator == 1


class TestAugmentInvariance:
    def test_equivariant_dims_unchanged(self):
        t = c_triple("2,3,3")
        bl = G.build_blowup(t, "x")
        aug = G.augment_blowup(bl)
        sp = CH.solve_graph(bl)
        spa = CH.solve_graph(aug)
        for k in range(sp.max_degree + 1):
            assert sp.dim(k) == spa.dim(k)


class TestCache:
    def test_warm_equals_cold(self, tmp_path):
        g = G.build_GX(H.from_string("2,3,3"))
        cold = CH.solve_graph(g, cache_dir=str(tmp_path))
        files = list(tmp_path.iterdir())
        assert files
        warm = CH.solve_graph(g, cache_dir=str(tmp_path))
        for k in range(cold.max_degree + 1):
            assert cold.bases[k].columns == warm.bases[k].columns
            assert cold.bases[k].unit_rows == warm.bases[k].unit_rows

    def test_cache_distinguishes_sides(self, tmp_path):
        # (2,3,3): X and Y labels genuinely differ, so keys must differ
        h = H.from_string("2,3,3")
        CH.solve_graph(G.build_GX(h), max_degree=1, cache_dir=str(tmp_path))
        nx = len(list(tmp_path.iterdir()))
        CH.solve_graph(G.build_GY(h), max_degree=1, cache_dir=str(tmp_path))
        assert len(list(tmp_path.iterdir())) > nx
