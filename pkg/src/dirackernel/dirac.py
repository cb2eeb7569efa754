"""Kernel classification of the Dirac operator and its brute-force verifier.

The theorem path: for admissible mu, set lambda = mu - delta_p; if
lambda + delta is singular the kernel vanishes on both sides, otherwise
the unique Weyl element w moving lambda + delta into the open chamber
yields sigma = w^{-1}, nu = w(lambda + delta) - delta, and the side is
decided by sgn(sigma) * (-1)^m.

The oracle path shares only the lattice/roots primitives with the theorem
path.  It enumerates the Casimir shell of lambda, computes Frobenius
multiplicities on both sides by spinor-weight character products and
highest-weight peeling, and checks that the alternating sum collapses to
the predicted signed irreducible (or to zero).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional

from .characters import decompose, irreducible_character, weyl_dim
from .errors import AdmissibilityError, ConsistencyError, DimensionError
from .lattice import Weight, inner_product
from .roots import WeylElement, dominant_representative
from .spin import spinor_weights
from .sympair import SymmetricPair, admissibility_failures


class KernelStatus(enum.Enum):
    PLUS = "PLUS"
    MINUS = "MINUS"
    BOTH_ZERO = "BOTH_ZERO"


@dataclass(frozen=True)
class KernelResult:
    """Which side of the kernel carries which irreducible, if any."""

    status: KernelStatus
    casimir: Fraction
    nu: Optional[Weight] = None
    sigma: Optional[WeylElement] = None
    sigma_sign: Optional[int] = None
    dimension: Optional[int] = None


def casimir_eigenvalue(pair: SymmetricPair, nu: Weight) -> Fraction:
    """<nu + 2*delta, nu>, the Casimir scalar of pi_nu (exact)."""
    if len(nu) != pair.rank:
        raise DimensionError(f"nu length {len(nu)} vs rank {pair.rank}")
    return inner_product(nu + pair.delta * 2, nu)


def chi_casimir_check(pair: SymmetricPair) -> Fraction:
    """The scalar by which the subgroup Casimir acts on the spinor space.

    Returns c = <delta, delta> - <delta_h, delta_h> after asserting the
    per-component identity <delta_p^sigma, delta_p^sigma + 2*delta_h> = c
    for every sigma in W_1.
    """
    pair.ensure_valid()
    c = (inner_product(pair.delta, pair.delta)
         - inner_product(pair.delta_h, pair.delta_h))
    for w1 in pair.w1:
        dps = w1.delta_p_sigma
        value = inner_product(dps, dps + pair.delta_h * 2)
        if value != c:
            raise ConsistencyError(
                f"Casimir scalar mismatch at sigma with delta_p^sigma={dps}: "
                f"{value} != {c}")
    return c


def _require_admissible(pair: SymmetricPair, mu: Weight) -> None:
    failures = admissibility_failures(pair, mu)
    if failures:
        raise AdmissibilityError(
            f"mu={mu} is not admissible for {pair.name}: "
            + "; ".join(failures))


def dirac_kernel(pair: SymmetricPair, mu: Weight) -> KernelResult:
    """Classify the kernel of the Dirac operator twisted by mu."""
    mu = Weight(mu)
    _require_admissible(pair, mu)
    rs = pair.root_system
    lam = mu - pair.delta_p
    casimir = inner_product(lam + pair.delta * 2, lam)
    element, dominant, regular = dominant_representative(lam + pair.delta, rs)
    if not regular:
        return KernelResult(status=KernelStatus.BOTH_ZERO, casimir=casimir)
    sigma = element.inverse()
    nu = dominant - pair.delta
    # Automatic consequences of admissibility; treated as runtime
    # assertions, not assumptions.
    pos = set(rs.positive_roots)
    if not all(element.apply(a) in pos for a in pair.h_positive):
        raise ConsistencyError(
            f"computed sigma is not in W_1 for mu={mu} (lambda={lam})")
    if nu not in pair.lattice_F or not rs.is_dominant(nu):
        raise ConsistencyError(
            f"computed nu={nu} is not a dominant lattice point for mu={mu}")
    if inner_product(nu + pair.delta * 2, nu) != casimir:
        raise ConsistencyError("Casimir mismatch between nu and lambda")
    sign = sigma.sign
    status = (KernelStatus.PLUS
              if sign * (-1) ** pair.m == 1 else KernelStatus.MINUS)
    return KernelResult(status=status, casimir=casimir, nu=nu, sigma=sigma,
                        sigma_sign=sign, dimension=weyl_dim(rs, nu))


def casimir_shell(pair: SymmetricPair, lam: Weight) -> List[Weight]:
    """All dominant lattice points nu with the same Casimir scalar as lambda.

    Since <nu + 2 delta, nu> = |nu + delta|^2 - |delta|^2, members satisfy
    |nu + delta| = |lambda + delta|, so each coordinate of nu + delta is
    bounded by that radius; the box is enumerated exactly, in lex order.
    """
    pair.ensure_valid()
    lam = Weight(lam)
    if lam not in pair.lattice_F:
        raise ValueError(f"lambda={lam} is not in F for pair {pair.name}")
    delta = pair.delta
    radius_sq = inner_product(lam + delta, lam + delta)
    rank = pair.rank
    rs = pair.root_system

    found: List[Weight] = []
    for shift in sorted(pair.lattice_F.coset_shifts):
        coords: List[List[Fraction]] = []
        for k in range(rank):
            options = []
            base = shift[k]
            # Integers t with (base + t + delta_k)^2 <= radius_sq form an
            # interval; start from the integer nearest its center.
            center = -base - delta[k]
            t0 = math.floor(center + Fraction(1, 2))
            t = t0
            while (base + t + delta[k]) ** 2 <= radius_sq:
                options.append(base + t)
                t += 1
            t = t0 - 1
            while (base + t + delta[k]) ** 2 <= radius_sq:
                options.append(base + t)
                t -= 1
            coords.append(sorted(options))

        def _extend(k: int, prefix: tuple, partial: Fraction) -> None:
            if k == rank:
                if partial == radius_sq:
                    nu = Weight(prefix)
                    if rs.is_dominant(nu):
                        found.append(nu)
                return
            for value in coords[k]:
                term = (value + delta[k]) ** 2
                if partial + term <= radius_sq:
                    _extend(k + 1, prefix + (value,), partial + term)

        _extend(0, (), Fraction(0))
    return sorted(set(found))


@lru_cache(maxsize=4096)
def _restriction_multiplicities(pair: SymmetricPair, nu: Weight,
                                s: int) -> tuple:
    """Decomposition of chi^s tensor pi_nu over Delta_h, as sorted items."""
    chi = spinor_weights(pair).side_character(s)
    product = chi * irreducible_character(pair.root_system, nu)
    return tuple(sorted(decompose(product, pair.h_system).items()))


def frobenius_multiplicity(pair: SymmetricPair, nu: Weight, mu: Weight,
                           side: int) -> int:
    """Multiplicity of the mu-irreducible of the subgroup cover inside
    chi^s tensor pi_nu restricted, where s = side for m even and -side
    for m odd (the duality twist of the half-spinor modules).

    Computed purely by character arithmetic: multiply the half-spinor
    character by the restricted irreducible character and peel against
    Delta_h.
    """
    if side not in (1, -1):
        raise ValueError(f"side must be +1 or -1, got {side}")
    pair.ensure_valid()
    nu, mu = Weight(nu), Weight(mu)
    rs = pair.root_system
    if nu not in pair.lattice_F or not rs.is_dominant(nu):
        raise ValueError(f"nu={nu} is not a dominant lattice point")
    _require_admissible(pair, mu)
    s = side if pair.m % 2 == 0 else -side
    return dict(_restriction_multiplicities(pair, nu, s)).get(mu, 0)


@dataclass(frozen=True)
class ShellRow:
    nu: Weight
    dimension: int
    mult_plus: int
    mult_minus: int


@dataclass(frozen=True)
class EulerReport:
    pair_name: str
    mu: Weight
    lam: Weight
    rows: tuple  # ShellRow, in shell order
    signed_sum: tuple  # ((nu, coefficient), ...) nonzero entries
    expected: tuple  # same shape, from the kernel classification
    kernel: KernelResult
    failures: tuple

    @property
    def passed(self) -> bool:
        return not self.failures


def euler_verify(pair: SymmetricPair, mu: Weight) -> EulerReport:
    """Check the alternating-trace collapse against the classification.

    Over every shell member nu: (a) the two Frobenius multiplicities never
    exceed one in total, and (b) the signed sum of multiplicities equals
    +[nu0], -[nu0] or 0 according to the kernel result.  Failures are
    reported, not raised.
    """
    mu = Weight(mu)
    _require_admissible(pair, mu)
    lam = mu - pair.delta_p
    shell = casimir_shell(pair, lam)
    rows = []
    failures = []
    signed: Dict[Weight, int] = {}
    for nu in shell:
        m_plus = frobenius_multiplicity(pair, nu, mu, +1)
        m_minus = frobenius_multiplicity(pair, nu, mu, -1)
        rows.append(ShellRow(nu, weyl_dim(pair.root_system, nu),
                             m_plus, m_minus))
        if m_plus + m_minus > 1:
            failures.append(
                f"multiplicity bound violated at nu={nu}: "
                f"m+={m_plus}, m-={m_minus}")
        if m_plus != m_minus:
            signed[nu] = m_plus - m_minus
    kernel = dirac_kernel(pair, mu)
    if kernel.status is KernelStatus.PLUS:
        expected = {kernel.nu: 1}
    elif kernel.status is KernelStatus.MINUS:
        expected = {kernel.nu: -1}
    else:
        expected = {}
    if signed != expected:
        failures.append(
            f"signed sum {sorted(signed.items())} does not match "
            f"classification {sorted(expected.items())}")
    return EulerReport(
        pair_name=pair.name, mu=mu, lam=lam, rows=tuple(rows),
        signed_sum=tuple(sorted(signed.items())),
        expected=tuple(sorted(expected.items())),
        kernel=kernel, failures=tuple(failures))
