"""Linear and k-error linear complexity of binary sequences of period p^2
built from Fermat and polynomial quotients."""

from .errors import (
    BudgetExceeded,
    ParameterError,
    PQSeqError,
    PreconditionError,
    UnsupportedStructure,
)
from .kernels import BACKEND
from .kerror import (
    Spectrum,
    SpectrumPoint,
    TheoremSpec,
    klc_exhaustive,
    klc_theorem,
    spectrum,
    verify_theorem,
)
from .lincomp import (
    lc_berlekamp_massey,
    lc_bivariate,
    lc_f2_structured,
    lc_fp_multiplicity,
    lc_gcd,
    seq_to_bivariate,
)
from .polyring import FieldPoly, cyclotomic_factorization_f2, poly_gcd
from .quotients import (
    ClassPartition,
    PrimeParams,
    class_partition,
    fermat_quotient,
    legendre,
    poly_quotient,
    reduce_exponent,
)
from .seqgen import (
    PeriodicSequence,
    gen_complement,
    gen_indicator,
    gen_legendre,
    gen_threshold,
)

__version__ = "0.1.0"
