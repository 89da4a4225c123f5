"""Rainbow numbers rb(Z_n, k) for x1 + x2 = k*x3 in Z_n.

Closed-form values, an exhaustive search oracle, verified lower-bound witness
colorings, structural predicates on colorings, and a certificate-based CLI.
"""

__version__ = "0.1.0"

from .certificates import Certificate, make_certificate, read_certificate, write_certificate
from .coloring import (
    Coloring,
    LMCase,
    LMClassification,
    canonicalize,
    check_symmetry,
    classify_3coloring_LM,
    dilate,
    dominant_colors,
    find_rainbow_triple,
    is_canonical,
    is_rainbow_free,
    project_general,
    project_schur,
    residue_palettes,
)
from .constructions import (
    lift_general,
    lift_schur,
    max_coloring_q_symmetric,
    witness_general,
    witness_k_equals_p,
    witness_prime_power,
    witness_q_p,
    witness_schur,
    witness_schur_prime,
)
from .errors import (
    CertificateError,
    ConfigError,
    ConstructionError,
    InputError,
    RainbowLabError,
    UnsupportedCaseError,
)
from .formulas import (
    load_two_power_table,
    rb_general,
    rb_prime_power,
    rb_q_p,
    rb_schur,
    rb_schur_prime,
)
from .modcore import (
    CyclicInstance,
    Triple,
    divisibility_count,
    enumerate_triples,
    generates_full_group,
    is_k_periodic_subset,
    is_prime,
    is_symmetric_subset,
    is_triple,
    iter_triples,
    multiplicative_order,
    prime_factorize,
    project_triple,
)
from .results import Method, RbResult
from .search import (
    EnumerationStream,
    SearchConfig,
    SearchOutcome,
    enumerate_rainbow_free,
    iter_rainbow_free_colorings,
    max_rainbow_free_r,
    rb_oracle,
)
