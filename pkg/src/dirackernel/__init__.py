"""Exact-arithmetic computations around the Dirac operator on equal-rank
compact symmetric spaces: root systems and Weyl groups over rationals,
formal character arithmetic, spinor weights, the kernel classification,
and an independent character-theoretic verifier."""

from .characters import (FormalCharacter, branch_equal_rank,
                         branch_interleave_BD, decompose,
                         irreducible_character, weyl_dim)
from .dirac import (EulerReport, KernelResult, KernelStatus,
                    casimir_eigenvalue, casimir_shell, chi_casimir_check,
                    dirac_kernel, euler_verify, frobenius_multiplicity)
from .lattice import (LatticeSpec, Weight, inner_product, is_dominant,
                      is_member)
from .roots import (RootSystem, WeylElement, build_classical,
                    dominant_representative, half_sum, weyl_group)
from .spin import (CliffordModel, SpinorWeights, build_clifford,
                   chi_decompose, chi_trace_difference,
                   simultaneous_spin_weights, spinor_weights)
from .sympair import (PairReport, SymmetricPair, W1Element, admissible_mu,
                      admissibility_failures, builtin_pair,
                      builtin_pair_names, deltas, validate_pair,
                      w1_enumerate)

__version__ = "0.1.0"

__all__ = [
    "FormalCharacter", "branch_equal_rank", "branch_interleave_BD",
    "decompose", "irreducible_character", "weyl_dim",
    "EulerReport", "KernelResult", "KernelStatus", "casimir_eigenvalue",
    "casimir_shell", "chi_casimir_check", "dirac_kernel", "euler_verify",
    "frobenius_multiplicity",
    "LatticeSpec", "Weight", "inner_product", "is_dominant", "is_member",
    "RootSystem", "WeylElement", "build_classical",
    "dominant_representative", "half_sum", "weyl_group",
    "CliffordModel", "SpinorWeights", "build_clifford", "chi_decompose",
    "chi_trace_difference", "simultaneous_spin_weights", "spinor_weights",
    "PairReport", "SymmetricPair", "W1Element", "admissible_mu",
    "admissibility_failures", "builtin_pair", "builtin_pair_names",
    "deltas", "validate_pair", "w1_enumerate",
    "__version__",
]
