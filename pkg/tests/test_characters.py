import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dirackernel.characters import (FormalCharacter, branch_equal_rank,
                                    branch_interleave_BD, decompose,
                                    irreducible_character, weyl_dim)
from dirackernel.errors import (DecompositionError, NonDominantError,
                                SymmetryError)
from dirackernel.lattice import Weight, inner_product
from dirackernel.roots import build_classical, weyl_group
from dirackernel.sympair import builtin_pair


def W(text):
    return Weight.parse(text)


def mono(text, coeff=1):
    return FormalCharacter.monomial(W(text), coeff)


class TestRingOps:
    def test_difference_of_squares(self):
        a = mono("1/2") + mono("-1/2")
        b = mono("1/2") - mono("-1/2")
        assert a * b == mono("1") - mono("-1")

    def test_weyl_action_permutes_support(self):
        rs = build_classical("B", 1)
        refl = rs.simple_reflections()[0]
        assert mono("1/2").apply(refl) == mono("-1/2")

    def test_cancellation_removes_zero_terms(self):
        ch = (mono("1,0") + mono("0,1")) + mono("0,1", -1)
        assert ch == mono("1,0")
        assert ch.terms == {W("1,0"): 1}

    def test_scalar_multiplication(self):
        assert (mono("1") * 3).terms == {W("1"): 3}


class TestIrreducibleCharacter:
    def test_b1_vector_representation(self):
        ch = irreducible_character(build_classical("B", 1), W("1"))
        assert ch.terms == {W("1"): 1, W("0"): 1, W("-1"): 1}

    def test_trivial_representation(self):
        for family, rank in [("B", 2), ("A", 2), ("D", 3)]:
            rs = build_classical(family, rank)
            zero = Weight.zero(rs.rank)
            assert irreducible_character(rs, zero).terms == {zero: 1}

    def test_d2_half_spin(self):
        ch = irreducible_character(build_classical("D", 2), W("1/2,1/2"))
        assert ch.terms == {W("1/2,1/2"): 1, W("-1/2,-1/2"): 1}

    def test_highest_weight_multiplicity_one(self):
        rs = build_classical("B", 2)
        for nu in [W("1,0"), W("2,1"), W("1/2,1/2"), W("3/2,1/2")]:
            assert irreducible_character(rs, nu).terms[nu] == 1

    def test_support_lies_below_highest_weight(self):
        rs = build_classical("B", 2)
        nu = W("2,1")
        for w in irreducible_character(rs, nu).support():
            coeffs = rs.simple_coefficients(nu - w)
            assert all(c.denominator == 1 and c >= 0 for c in coeffs)

    def test_weyl_invariance(self):
        rs = build_classical("B", 2)
        ch = irreducible_character(rs, W("2,1"))
        for w in weyl_group(rs):
            assert ch.apply(w) == ch

    def test_non_dominant_rejected(self):
        rs = build_classical("B", 2)
        with pytest.raises(NonDominantError):
            irreducible_character(rs, W("0,1"))

    def test_weyl_character_formula_identity(self):
        # Independent of Freudenthal: ch * (sum_w sgn(w) e^{w delta})
        # must equal sum_w sgn(w) e^{w(nu+delta)}.
        for family, rank, nus in [
            ("B", 2, ["1,0", "2,1", "1/2,1/2"]),
            ("A", 2, ["1,0,-1", "2,1,0"]),
            ("D", 3, ["1,1,0", "1/2,1/2,-1/2"]),
        ]:
            rs = build_classical(family, rank)
            group = weyl_group(rs)
            delta = rs.delta
            denom = FormalCharacter.zero(rs.rank)
            for w in group:
                denom += FormalCharacter.monomial(w.apply(delta), w.sign)
            for nu_text in nus:
                nu = W(nu_text)
                numer = FormalCharacter.zero(rs.rank)
                for w in group:
                    numer += FormalCharacter.monomial(
                        w.apply(nu + delta), w.sign)
                ch = irreducible_character(rs, nu)
                assert ch * denom == numer, (family, rank, nu_text)


class TestWeylDim:
    @pytest.mark.parametrize("nu,expected", [
        ("1,0", 5), ("1/2,1/2", 4), ("0,0", 1), ("2,1", 35), ("1,1", 10),
    ])
    def test_b2_dimensions(self, nu, expected):
        assert weyl_dim(build_classical("B", 2), W(nu)) == expected

    def test_matches_multiplicity_mass(self):
        cases = [
            ("B", 1, 3), ("B", 2, 3), ("A", 2, 2), ("D", 2, 3),
            ("C", 2, 2), ("B", 3, 2), ("D", 3, 2),
        ]
        for family, rank, bound in cases:
            rs = build_classical(family, rank)
            ambient = rs.rank
            for coords in itertools.product(range(bound + 1), repeat=ambient):
                nu = Weight(coords)
                if not rs.is_dominant(nu):
                    continue
                ch = irreducible_character(rs, nu)
                assert ch.mass() == weyl_dim(rs, nu), (family, rank, coords)

    def test_half_integral_mass(self):
        rs = build_classical("B", 3)
        for nu in [W("1/2,1/2,1/2"), W("3/2,1/2,1/2"), W("3/2,3/2,3/2")]:
            assert irreducible_character(rs, nu).mass() == weyl_dim(rs, nu)


class TestDecompose:
    def test_roundtrip_single(self):
        rs = build_classical("B", 2)
        ch = irreducible_character(rs, W("1,0"))
        assert decompose(ch, rs) == {W("1,0"): 1}

    def test_three_times_three(self):
        rs = build_classical("B", 1)
        prod = (irreducible_character(rs, W("1"))
                * irreducible_character(rs, W("1")))
        assert decompose(prod, rs) == {W("2"): 1, W("1"): 1, W("0"): 1}

    def test_non_invariant_raises_symmetry_error(self):
        rs = build_classical("B", 2)
        with pytest.raises(SymmetryError):
            decompose(mono("1,0") + mono("0,1"), rs)

    def test_invariant_but_negative_raises(self):
        rs = build_classical("B", 1)
        adjoint = irreducible_character(rs, W("1"))
        trivial = irreducible_character(rs, W("0"))
        with pytest.raises(DecompositionError):
            decompose(trivial - adjoint, rs)

    def test_tensor_dimension_balance(self):
        rs = build_classical("B", 2)
        for nu1, nu2 in [(W("1,0"), W("1,0")), (W("1,0"), W("1/2,1/2")),
                         (W("1,1"), W("1,0"))]:
            product = (irreducible_character(rs, nu1)
                       * irreducible_character(rs, nu2))
            parts = decompose(product, rs)
            total = sum(m * weyl_dim(rs, w) for w, m in parts.items())
            assert total == weyl_dim(rs, nu1) * weyl_dim(rs, nu2)

    @given(st.sampled_from([("B", 2), ("A", 2), ("D", 2), ("B", 3)]),
           st.lists(st.tuples(st.integers(0, 2), st.integers(1, 2)),
                    min_size=1, max_size=4))
    @settings(max_examples=12, deadline=None)
    def test_roundtrip_random_combinations(self, system, picks):
        family, rank = system
        rs = build_classical(family, rank)
        dominant = []
        for coords in itertools.product(range(3), repeat=rs.rank):
            nu = Weight(coords)
            if rs.is_dominant(nu):
                dominant.append(nu)
        combo = {}
        total = FormalCharacter.zero(rs.rank)
        for index, mult in picks:
            nu = dominant[index % len(dominant)]
            combo[nu] = combo.get(nu, 0) + mult
            total += irreducible_character(rs, nu) * mult
        assert decompose(total, rs) == combo


class TestKostantWeightLemma:
    """Brute-force subset sums reproduce the weights of pi_delta."""

    @pytest.mark.parametrize("family,rank", [
        ("B", 1), ("A", 1), ("A", 2), ("B", 2), ("D", 2), ("C", 2),
    ])
    def test_subset_sums_match_character(self, family, rank):
        rs = build_classical(family, rank)
        delta = rs.delta
        counts = {}
        n = len(rs.positive_roots)
        for mask in range(2 ** n):
            total = Weight.zero(rs.rank)
            for i in range(n):
                if mask >> i & 1:
                    total = total + rs.positive_roots[i]
            w = delta - total
            counts[w] = counts.get(w, 0) + 1
        assert irreducible_character(rs, delta).terms == counts


class TestKostantNormInequality:
    def test_exhaustive_rank_two(self):
        rs = build_classical("B", 2)
        group = weyl_group(rs)
        reps = [W("0,0"), W("1,0"), W("1,1"), W("2,0"), W("2,1"),
                W("1/2,1/2"), W("3/2,1/2")]
        chars = {nu: irreducible_character(rs, nu) for nu in reps}
        for nu1, nu2 in itertools.product(reps, repeat=2):
            lhs = inner_product(nu1 + nu2, nu1 + nu2)
            for xi1 in chars[nu1].support():
                for xi2 in chars[nu2].support():
                    rhs = inner_product(xi1 + xi2, xi1 + xi2)
                    assert lhs >= rhs, (nu1, nu2, xi1, xi2)
                    aligned = any(
                        w.apply(xi1) == nu1 and w.apply(xi2) == nu2
                        for w in group)
                    assert (lhs == rhs) == aligned, (nu1, nu2, xi1, xi2)


class TestBranching:
    def test_so5_vector(self):
        pair = builtin_pair("so5_so4")
        assert branch_equal_rank(pair, W("1,0")) == {
            W("1,0"): 1, W("0,0"): 1}

    def test_so5_spin(self):
        pair = builtin_pair("so5_so4")
        assert branch_equal_rank(pair, W("1/2,1/2")) == {
            W("1/2,1/2"): 1, W("1/2,-1/2"): 1}

    def test_trivial(self):
        for name in ("so3_so2", "so5_so4", "so5_so2xso3"):
            pair = builtin_pair(name)
            zero = Weight.zero(pair.rank)
            assert branch_equal_rank(pair, zero) == {zero: 1}

    def test_interleave_m2_vector(self):
        assert branch_interleave_BD(2, W("1,0")) == {
            W("1,0"): 1, W("0,0"): 1}

    def test_interleave_m1_range(self):
        assert branch_interleave_BD(1, W("2")) == {
            W(str(k)): 1 for k in range(-2, 3)}

    def test_interleave_trivial(self):
        assert branch_interleave_BD(2, W("0,0")) == {W("0,0"): 1}

    def test_interleave_rejects_mixed_class(self):
        with pytest.raises(ValueError):
            branch_interleave_BD(2, W("3/2,1"))

    def test_interleave_rejects_non_dominant(self):
        with pytest.raises(NonDominantError):
            branch_interleave_BD(2, W("0,1"))

    @pytest.mark.parametrize("name,m", [("so3_so2", 1), ("so5_so4", 2)])
    def test_cross_check_small(self, name, m):
        pair = builtin_pair(name)
        for base in itertools.product(range(3), repeat=m):
            for half in (False, True):
                nu = Weight(base)
                if half:
                    nu = nu + Weight([Fraction(1, 2)] * m)
                if not pair.root_system.is_dominant(nu):
                    continue
                assert branch_equal_rank(pair, nu) == \
                    branch_interleave_BD(m, nu), nu
