"""twistedmoments: exact and numerical verification of twisted-moment identities.

The package checks, both in exact symbolic Hecke algebra and in
high-precision complex arithmetic, the non-archimedean identities behind a
twisted spectral reciprocity formula for GL(3) x GL(2): the diagonal main
term, the off-diagonal residue identity, the Hurwitz-zeta decomposition of
a twisted double Dirichlet series, and its prime-conductor resolution into
Dirichlet-character-twisted L-functions.
"""

from .arith import (
    divisors,
    euler_phi,
    factorize,
    mobius,
    mod_inverse,
    ramanujan_sum,
    sigma_complex,
)
from .expsum import CompletenessError, ExpSum, RingMismatchError, assert_equal_up_to, truncated_L
from .hecke import (
    EisensteinProvider,
    HeckePoly,
    SymbolicProvider,
    cfkrs_local_factor,
    dual,
    fourier_coefficient,
    lambda_of,
    lambda_power,
)
from .identities import (
    check_conjecture_factor,
    check_diagonal,
    check_dirichlet_functional_eq,
    check_gauss_twist,
    check_offdiag_residue,
    check_prime_dual,
    check_ramanujan_generating,
    check_residue_numeric,
    check_twisted_decomposition,
    decomposed_twisted_series,
)
from .numeric import (
    DirichletCharacter,
    EvalPoint,
    OutOfRegionError,
    PoleError,
    TailInstabilityError,
    characters_mod,
    dirichlet_L,
    gamma_R,
    gauss_sum,
    hurwitz_zeta,
    raw_twisted_double_series,
    riemann_zeta,
    twisted_L_direct,
    twisted_L_exact,
)
from .report import CheckItem, CheckReport

__version__ = "0.1.0"

__all__ = [
    "CheckItem",
    "CheckReport",
    "CompletenessError",
    "DirichletCharacter",
    "EisensteinProvider",
    "EvalPoint",
    "ExpSum",
    "HeckePoly",
    "OutOfRegionError",
    "PoleError",
    "RingMismatchError",
    "SymbolicProvider",
    "TailInstabilityError",
    "assert_equal_up_to",
    "cfkrs_local_factor",
    "characters_mod",
    "check_conjecture_factor",
    "check_diagonal",
    "check_dirichlet_functional_eq",
    "check_gauss_twist",
    "check_offdiag_residue",
    "check_prime_dual",
    "check_ramanujan_generating",
    "check_residue_numeric",
    "check_twisted_decomposition",
    "decomposed_twisted_series",
    "dirichlet_L",
    "divisors",
    "dual",
    "euler_phi",
    "factorize",
    "fourier_coefficient",
    "gamma_R",
    "gauss_sum",
    "hurwitz_zeta",
    "lambda_of",
    "lambda_power",
    "mobius",
    "mod_inverse",
    "ramanujan_sum",
    "raw_twisted_double_series",
    "riemann_zeta",
    "sigma_complex",
    "truncated_L",
    "twisted_L_direct",
    "twisted_L_exact",
]
