"""Exact arithmetic for degree-2 Siegel cusp form coefficient tables.

Subpackages by stage: `bqf` (forms, class groups, characters, theta),
`qexp` (level-1 q-expansions and rational L-value data), `jacobi`
(index-1 Jacobi forms), `siegel` (coefficient tables, lift, Hecke action,
file format), `periods` (Bessel period sums and the separation pipeline),
and `cli` (the command line front end).
"""

from .bqf import (
    ClassCharacter,
    ClassGroup,
    QuadCharacter,
    QuadForm,
    SL2Transform,
    ThetaSeries,
    apply_sl2,
    characters,
    class_group,
    compose,
    discriminant,
    enumerate_reduced,
    is_fundamental,
    kronecker,
    reduce,
    representation_count,
    theta_coefficients,
)
from .cyclotomic import Cyclotomic, cyclotomic_polynomial
from .errors import BoundError, DomainError, FormatError, SiegelError, TruncationError
from .jacobi import JacobiForm, cusp_basis, jacobi_eisenstein, times_qseries
from .periods import (
    PeriodValue,
    RatioReport,
    ScanResult,
    SeparationResult,
    bessel_period,
    bessel_period_chi,
    choose_character,
    fundamental_scan,
    ratio_table,
    separation_demo,
)
from .qexp import (
    CohenH,
    QSeries,
    cohen_h,
    cusp_eigenform,
    delta,
    dim_cusp_forms,
    dim_modular_forms,
    eisenstein,
    gen_bernoulli,
    hecke_ap,
    modular_basis,
)
from .siegel import (
    EigenvalueRecord,
    SiegelTable,
    coeff,
    eigenvalue_p,
    emit,
    hecke_tp,
    ingest,
    read_table,
    scale_add,
    sk_eigenvalue_p,
    sk_lift,
    write_table,
)

__version__ = "0.1.0"
