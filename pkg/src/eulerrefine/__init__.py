"""Bijections and generating-function checks for refinements of Euler's partition theorem.

The central map :func:`delta` sends a partition into distinct parts to a
partition into odd parts so that (number of odd parts, alternating sum)
becomes (number of parts with odd multiplicity, number of parts).
"""

from .bijections import (
    EULER_PARAMS,
    DomainError,
    ExtractionPair,
    InsertionParams,
    Phi,
    Phi_inv,
    bessenrodt_extract,
    bessenrodt_insert,
    delta,
    delta_inv,
    delta_trace,
    psi,
    psi_inv,
    varphi,
    varphi_inv,
)
from .families import (
    FamilySpec,
    SpecError,
    cardinality,
    contains,
    enumerate_family,
    iter_family,
    joint_distribution,
    parse_spec,
)
from .partition import (
    Partition,
    StatisticsBundle,
    boulet_weight_exponents,
    conjugate,
    format_partition,
    make_partition,
    parse_partition,
    statistics,
    two_modular_conjugate,
)
from .qseries import (
    Factor,
    TruncatedSeries,
    expand_product,
    family_sum,
    load_manifest,
    series_add,
    series_equal,
    series_mul,
)

__version__ = "0.1.0"
