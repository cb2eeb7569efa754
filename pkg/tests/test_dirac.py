import itertools
from fractions import Fraction

import pytest

from dirackernel.dirac import (KernelStatus, casimir_eigenvalue,
                               casimir_shell, chi_casimir_check, dirac_kernel,
                               euler_verify, frobenius_multiplicity)
from dirackernel.errors import AdmissibilityError
from dirackernel.lattice import Weight, inner_product
from dirackernel.roots import WeylElement
from dirackernel.sympair import (admissible_mu, builtin_pair,
                                 builtin_pair_names)


def W(text):
    return Weight.parse(text)


class TestCasimirEigenvalue:
    def test_so3_quadratic(self):
        assert casimir_eigenvalue(builtin_pair("so3_so2"), W("2")) == 6

    def test_zero(self):
        for name in builtin_pair_names():
            pair = builtin_pair(name)
            assert casimir_eigenvalue(pair, Weight.zero(pair.rank)) == 0

    def test_so5_vector(self):
        assert casimir_eigenvalue(builtin_pair("so5_so4"), W("1,0")) == 4


class TestChiCasimir:
    @pytest.mark.parametrize("name,expected", [
        ("so3_so2", Fraction(1, 4)),
        ("so5_so4", Fraction(3, 2)),
        ("so5_so2xso3", Fraction(9, 4)),
    ])
    def test_scalar_values(self, name, expected):
        assert chi_casimir_check(builtin_pair(name)) == expected

    def test_all_builtins_consistent(self):
        for name in builtin_pair_names():
            pair = builtin_pair(name)
            scalar = chi_casimir_check(pair)
            assert scalar == (inner_product(pair.delta, pair.delta)
                              - inner_product(pair.delta_h, pair.delta_h))


class TestDiracKernel:
    def test_so3_positive_lambda(self):
        result = dirac_kernel(builtin_pair("so3_so2"), W("5/2"))
        assert result.status is KernelStatus.MINUS
        assert result.nu == W("2")
        assert result.dimension == 5
        assert result.casimir == 6

    def test_so3_negative_lambda(self):
        result = dirac_kernel(builtin_pair("so3_so2"), W("-3/2"))
        assert result.status is KernelStatus.PLUS
        assert result.nu == W("1")
        assert result.dimension == 3

    def test_so5_positive(self):
        result = dirac_kernel(builtin_pair("so5_so4"), W("5/2,3/2"))
        assert result.status is KernelStatus.PLUS
        assert result.nu == W("2,1")
        assert result.dimension == 35

    def test_so5_negative_last_coordinate(self):
        result = dirac_kernel(builtin_pair("so5_so4"), W("3/2,-1/2"))
        assert result.status is KernelStatus.MINUS
        assert result.nu == W("1,0")
        assert result.sigma_sign == -1

    def test_both_zero_on_singular_wall(self):
        result = dirac_kernel(builtin_pair("so5_so2xso3"), W("3/2,1"))
        assert result.status is KernelStatus.BOTH_ZERO
        assert result.nu is None and result.sigma is None

    def test_inadmissible_mu_rejected(self):
        with pytest.raises(AdmissibilityError):
            dirac_kernel(builtin_pair("so3_so2"), W("2"))

    def test_status_matches_sign_rule(self):
        for name in builtin_pair_names():
            pair = builtin_pair(name)
            for coords in itertools.product(range(-2, 3), repeat=pair.rank):
                mu = Weight(coords) + pair.delta_p
                if not admissible_mu(pair, mu):
                    continue
                result = dirac_kernel(pair, mu)
                if result.status is KernelStatus.BOTH_ZERO:
                    continue
                plus = result.sigma_sign * (-1) ** pair.m == 1
                assert (result.status is KernelStatus.PLUS) == plus
                assert casimir_eigenvalue(pair, result.nu) == result.casimir
                assert result.sigma.apply(result.nu + pair.delta) == \
                    (mu - pair.delta_p) + pair.delta

    def test_completeness_recovers_every_irreducible(self):
        # nu + delta_p is admissible and comes back unchanged with sigma = 1.
        for name in builtin_pair_names():
            pair = builtin_pair(name)
            identity = WeylElement.identity(pair.rank)
            for coords in itertools.product(range(3), repeat=pair.rank):
                nu = Weight(coords)
                if not pair.root_system.is_dominant(nu):
                    continue
                assert nu in pair.lattice_F
                result = dirac_kernel(pair, nu + pair.delta_p)
                assert result.status is not KernelStatus.BOTH_ZERO
                assert result.nu == nu
                assert result.sigma == identity


def brute_force_shell(pair, lam, scale=Fraction(1)):
    """Independent shell enumeration: scan the covering coordinate box and
    keep dominant lattice points satisfying the scaled shell equation."""
    delta = pair.delta
    target = scale * inner_product(lam + delta * 2, lam)
    radius_sq = inner_product(lam + delta, lam + delta)
    bound = 1
    while bound * bound < radius_sq:
        bound += 1
    found = []
    values = []
    step = Fraction(1, 2)
    v = -bound - 1
    while v <= bound + 1:
        values.append(v)
        v += step
    for coords in itertools.product(values, repeat=pair.rank):
        nu = Weight(coords)
        if nu not in pair.lattice_F:
            continue
        if not pair.root_system.is_dominant(nu):
            continue
        if scale * inner_product(nu + delta * 2, nu) == target:
            found.append(nu)
    return sorted(found)


class TestCasimirShell:
    def test_so3_lambda_two(self):
        assert casimir_shell(builtin_pair("so3_so2"), W("2")) == [W("2")]

    def test_so3_lambda_minus_three(self):
        assert casimir_shell(builtin_pair("so3_so2"), W("-3")) == [W("2")]

    def test_so5_origin(self):
        assert casimir_shell(builtin_pair("so5_so4"), W("0,0")) == [W("0,0")]

    def test_matches_brute_force(self):
        for name, lams in [
            ("so3_so2", ["0", "2", "-3", "4"]),
            ("so5_so4", ["0,0", "2,1", "1,-1", "2,-2"]),
            ("so5_so2xso3", ["0,1", "1,2", "2,0"]),
        ]:
            pair = builtin_pair(name)
            for lam_text in lams:
                lam = W(lam_text)
                assert casimir_shell(pair, lam) == brute_force_shell(pair, lam)

    def test_scale_invariance(self):
        # rescaling the inner product by 2 or 1/3 does not change the shell
        pair = builtin_pair("so5_so4")
        for lam_text in ["2,1", "1,-1"]:
            lam = W(lam_text)
            reference = casimir_shell(pair, lam)
            for factor in (Fraction(2), Fraction(1, 3)):
                assert brute_force_shell(pair, lam, scale=factor) == reference

    def test_requires_lattice_membership(self):
        with pytest.raises(ValueError):
            casimir_shell(builtin_pair("so3_so2"), W("1/2"))


class TestFrobenius:
    def test_so5_shell_member_sides(self):
        pair = builtin_pair("so5_so4")
        assert frobenius_multiplicity(pair, W("2,1"), W("5/2,3/2"), +1) == 1
        assert frobenius_multiplicity(pair, W("2,1"), W("5/2,3/2"), -1) == 0

    def test_so5_trivial_nu(self):
        pair = builtin_pair("so5_so4")
        assert frobenius_multiplicity(pair, W("0,0"), W("1/2,1/2"), +1) == 1

    def test_mu_not_a_summand_of_chi(self):
        # chi tensor trivial contains only the tau_sigma components
        for name in ("so5_so4", "so5_so2xso3"):
            pair = builtin_pair(name)
            zero = Weight.zero(pair.rank)
            mu = pair.delta_p + Weight([2] + [0] * (pair.rank - 1))
            if not admissible_mu(pair, mu):
                continue
            sigma_weights = {x.delta_p_sigma for x in pair.w1}
            assert mu not in sigma_weights
            assert frobenius_multiplicity(pair, zero, mu, +1) == 0
            assert frobenius_multiplicity(pair, zero, mu, -1) == 0


class TestEulerVerify:
    def test_so3_example(self):
        report = euler_verify(builtin_pair("so3_so2"), W("5/2"))
        assert report.passed
        assert [r.nu for r in report.rows] == [W("2")]
        assert report.rows[0].mult_plus == 0
        assert report.rows[0].mult_minus == 1
        assert report.signed_sum == ((W("2"), -1),)

    def test_so5_example(self):
        report = euler_verify(builtin_pair("so5_so4"), W("5/2,3/2"))
        assert report.passed
        assert report.signed_sum == ((W("2,1"), 1),)

    def test_both_zero_empty_shell(self):
        report = euler_verify(builtin_pair("so5_so2xso3"), W("3/2,1"))
        assert report.passed
        assert report.kernel.status is KernelStatus.BOTH_ZERO
        assert report.signed_sum == ()

    def test_both_zero_nonempty_shell(self):
        # lambda = (1,2): lambda + delta is singular but the shell contains
        # (2,0); both multiplicities must vanish there.
        report = euler_verify(builtin_pair("so5_so2xso3"), W("5/2,2"))
        assert report.passed
        assert report.kernel.status is KernelStatus.BOTH_ZERO
        assert [r.nu for r in report.rows] == [W("2,0")]
        assert report.rows[0].mult_plus == 0
        assert report.rows[0].mult_minus == 0

    def test_parity_disjointness_on_shell(self):
        # full |lambda| <= 3 box on the rank <= 2 pairs; the so7_so6 box is
        # exercised by the acceptance suite and so9_so8 is sampled below
        for name in ("so3_so2", "so5_so4", "so5_so2xso3"):
            pair = builtin_pair(name)
            for coords in itertools.product(range(-3, 4), repeat=pair.rank):
                mu = Weight(coords) + pair.delta_p
                if not admissible_mu(pair, mu):
                    continue
                report = euler_verify(pair, mu)
                assert report.passed, (name, mu, report.failures)
                for row in report.rows:
                    assert row.mult_plus + row.mult_minus <= 1

    def test_medium_rank_sample(self):
        pair = builtin_pair("so7_so6")
        for lam_text in ["0,0,0", "1,1,1", "2,1,-1", "1,1,-2"]:
            mu = W(lam_text) + pair.delta_p
            if not admissible_mu(pair, mu):
                continue
            report = euler_verify(pair, mu)
            assert report.passed, (lam_text, report.failures)

    def test_so9_sample(self):
        pair = builtin_pair("so9_so8")
        for lam_text in ["0,0,0,0", "1,0,0,0", "1,1,1,-1"]:
            mu = W(lam_text) + pair.delta_p
            report = euler_verify(pair, mu)
            assert report.passed, (lam_text, report.failures)
