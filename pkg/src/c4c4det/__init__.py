"""Integer group determinants of C4 x| C4: evaluation, value-set membership and witnesses."""
from .membership import Classification, a_membership, classify, v2
from .errors import FactorizationOverflow, InternalMismatch, NoRepresentation, NotAMember
from .forms import (
    CongruenceStats,
    DerivedVectors,
    FactorBreakdown,
    big_f,
    congruence_stats,
    d4,
    d4x2,
    derive_vectors,
    dG_factored,
    f_k,
)
from .group import (
    GroupElement,
    dedekind_matrix,
    det_exact,
    dG_direct,
    group_inverse,
    group_mul,
)
from .numtheory import (
    Factorization,
    FourSquarePattern,
    FourSquareRep,
    TwoSquarePattern,
    TwoSquareRep,
    factorize,
    four_squares,
    is_prime,
    prime_class,
    two_squares,
)
from .verify import ScanConfig, ScanReport, completeness_scan, run_property_suite, soundness_scan
from .witness import (
    LinearCase,
    Witness,
    synthesize,
    witness_A,
    witness_even_p,
    witness_even_q,
    witness_linear,
)

__version__ = "0.1.0"
