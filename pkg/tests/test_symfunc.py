"""Symmetric-function layer: frozen transition values, involution and
Frobenius identities, and property-based round trips."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gkmhess import symfunc as S


def gen(basis, lam, c=1):
    return S.SymmetricFunction.generator(basis, lam, c)


class TestConversions:
    def test_e2_to_m(self):
        assert gen("e", (2,)).convert("m").coeffs == {(1, 1): Fraction(1)}

    def test_p11_to_m(self):
        assert gen("p", (1, 1)).convert("m").coeffs == {
            (2,): Fraction(1), (1, 1): Fraction(2)}

    def test_s21_to_m_kostka_oracle(self):
        # oracle: SSYT of shape (2,1): content (2,1): 1 tableau;
        # content (1,1,1): 2 tableaux -> frozen
        assert gen("s", (2, 1)).convert("m").coeffs == {
            (2, 1): Fraction(1), (1, 1, 1): Fraction(2)}

    def test_h3_is_sum_of_all_m(self):
        assert gen("h", (3,)).convert("m").coeffs == {
            (3,): 1, (2, 1): 1, (1, 1, 1): 1}

    def test_degree_cap(self):
        with pytest.raises(S.DegreeTooLarge):
            gen("e", (9,)).convert("m")

    @pytest.mark.parametrize("n", range(1, 7))
    def test_all_round_trips(self, n):
        parts = S.partitions_of(n)
        f = S.SymmetricFunction(n, "m",
                                {lam: Fraction(i - 2, 3)
                                 for i, lam in enumerate(parts)})
        for b1 in S.BASES:
            g = f.convert(b1)
            for b2 in S.BASES:
                assert g.convert(b2).convert("m") == f


class TestOmega:
    def test_e3_to_h3(self):
        assert gen("e", (3,)).omega() == gen("h", (3,))

    def test_p2_sign(self):
        assert gen("p", (2,)).omega() == gen("p", (2,), -1)

    def test_s21_self_conjugate(self):
        # oracle: conjugate-partition rule, (2,1)' = (2,1)
        assert gen("s", (2, 1)).omega() == gen("s", (2, 1))

    def test_conjugate_rule_matches_power_sum_route(self):
        for n in range(1, 7):
            for lam in S.partitions_of(n):
                via_s = gen("s", lam).omega()
                via_p = gen("s", lam).convert("p").omega()
                assert via_s == via_p

    def test_involution_and_ring_hom(self):
        f = S.SymmetricFunction(3, "m", {(2, 1): 2, (1, 1, 1): -1})
        g = S.SymmetricFunction(2, "m", {(2,): 1, (1, 1): 3})
        assert f.omega().omega() == f
        assert (f * g).omega() == f.omega() * g.omega()


class TestMultiply:
    def test_e_multiplicativity(self):
        assert gen("e", (2,)) * gen("e", (1,)) == gen("e", (2, 1))

    def test_m1_squared(self):
        got = gen("m", (1,)) * gen("m", (1,))
        assert got.convert("m").coeffs == {(2,): 1, (1, 1): 2}

    def test_pieri_s1_s11(self):
        got = (gen("s", (1,)) * gen("s", (1, 1))).convert("s")
        assert got.coeffs == {(2, 1): 1, (1, 1, 1): 1}

    def test_cap(self):
        with pytest.raises(S.DegreeTooLarge):
            gen("e", (5,)) * gen("e", (4,))


class TestFrobenius:
    def test_trivial_character(self):
        triv = S.ClassFunction(3, {lam: 1 for lam in S.partitions_of(3)})
        assert S.frobenius(triv) == gen("s", (3,)) == gen("h", (3,))

    def test_sign_character(self):
        sgn = S.ClassFunction(
            3, {lam: (-1) ** (3 - len(lam)) for lam in S.partitions_of(3)})
        assert S.frobenius(sgn) == gen("s", (1, 1, 1)) == gen("e", (3,))

    def test_regular_character(self):
        reg = S.ClassFunction(
            3, {lam: 6 if lam == (1, 1, 1) else 0
                for lam in S.partitions_of(3)})
        assert S.frobenius(reg) == gen("p", (1, 1, 1))

    def test_additive(self):
        a = S.ClassFunction(3, {lam: 1 for lam in S.partitions_of(3)})
        b = S.ClassFunction(
            3, {lam: (-1) ** (3 - len(lam)) for lam in S.partitions_of(3)})
        assert S.frobenius(a + b) == S.frobenius(a) + S.frobenius(b)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_permutation_module_h_expansion(self, n):
        # character of S_n permuting [n]: fix(sigma) = parts equal to 1;
        # Frobenius characteristic must be h_{(n-1,1)} + h_... = h_1 h_{n-1}
        if n < 2:
            return
        chi = S.ClassFunction(
            n, {lam: sum(1 for p in lam if p == 1)
                for lam in S.partitions_of(n)})
        expected = (gen("h", (n - 1,)) * gen("h", (1,))).convert("m")
        assert S.frobenius(chi) == expected

    def test_missing_cycle_type_rejected(self):
        with pytest.raises(ValueError):
            S.ClassFunction(3, {(3,): 1})


class TestCharacterTable:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_column_orthogonality(self, n):
        parts = S.partitions_of(n)
        for mu in parts:
            for nu in parts:
                total = sum(S.mn_character(lam, mu) * S.mn_character(lam, nu)
                            for lam in parts)
                assert total == (S.z_lambda(mu) if mu == nu else 0)

    def test_dimension_row(self):
        # chi^lam(1^n) is the number of standard tableaux; spot check n=4
        dims = {lam: S.mn_character(lam, (1, 1, 1, 1))
                for lam in S.partitions_of(4)}
        assert dims == {(4,): 1, (3, 1): 3, (2, 2): 2,
                        (2, 1, 1): 3, (1, 1, 1, 1): 1}


class TestGraded:
    def test_scale_by_q(self):
        e2 = gen("e", (2,))
        gf = S.GradedSymmetricFunction(2, {0: e2}).scale_qpoly({0: 1, 1: 1})
        assert gf.term(1) == e2

    def test_round_trip_equality(self):
        e2 = gen("e", (2,))
        gf = S.GradedSymmetricFunction(2, {0: e2, 1: e2})
        through_p = S.GradedSymmetricFunction(
            2, {k: f.convert("p") for k, f in gf.terms.items()})
        assert gf == through_p

    def test_distributivity_random(self):
        f = S.SymmetricFunction(3, "m", {(2, 1): 2, (3,): -1})
        a = S.GradedSymmetricFunction(3, {0: f, 2: f.scale(3)})
        lhs = a.scale_qpoly({1: 1}) + a
        rhs = a.scale_qpoly({0: 1, 1: 1})
        assert lhs == rhs
        assert (lhs - rhs) == S.GradedSymmetricFunction.zero(3)

    def test_graded_multiply(self):
        e1 = gen("e", (1,))
        a = S.GradedSymmetricFunction(1, {0: e1, 1: e1})
        b = S.GradedSymmetricFunction(1, {0: e1})
        prod = a.multiply(b)
        e11 = gen("e", (1, 1))
        assert prod == S.GradedSymmetricFunction(2, {0: e11, 1: e11})

    def test_json_round_trip(self):
        f = S.SymmetricFunction(3, "m", {(2, 1): Fraction(1, 2), (3,): -2})
        gf = S.GradedSymmetricFunction(3, {0: f, 1: f.scale(-3)})
        data = gf.to_json()
        assert data["degree"] == 3 and data["basis"] == "m"
        assert S.GradedSymmetricFunction.from_json(data) == gf

    def test_json_schema_shape(self):
        gf = S.GradedSymmetricFunction(
            3, {1: S.SymmetricFunction(3, "m", {(1, 1, 1): 4, (2, 1): 1})})
        data = gf.to_json()
        assert data["terms"] == {"1": {"[2,1]": "1", "[1,1,1]": "4"}}


@st.composite
def symfuncs(draw, n=4):
    parts = S.partitions_of(n)
    coeffs = {}
    for lam in draw(st.sets(st.sampled_from(parts), max_size=3)):
        coeffs[lam] = Fraction(draw(st.integers(-9, 9)),
                               draw(st.integers(1, 4)))
    return S.SymmetricFunction(n, "m", coeffs)


@given(symfuncs(), symfuncs())
@settings(max_examples=25, deadline=None)
def test_omega_ring_hom_random(f, g):
    assert (f * g).omega() == f.omega() * g.omega()


@given(symfuncs(), st.sampled_from(S.BASES))
@settings(max_examples=40, deadline=None)
def test_conversion_round_trip_random(f, basis):
    assert f.convert(basis).convert("m") == f
