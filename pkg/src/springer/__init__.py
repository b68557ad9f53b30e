"""Graded traces and Betti numbers of Springer fibers for classical groups.

The core objects are partitions (Jordan types of nilpotents in types B,
C, D), their component groups, and the polynomial-valued graded traces
Q(lam, z) computed by a restriction recursion; an independent
finite-field flag-counting oracle cross-checks the results.  A FastAPI
service and a thin CLI client expose the lot.
"""

from .compgroup import ComponentElement, IDENTITY, canonical, component_group, parse_z
from .flagcount import (
    FlagCountReport,
    StandardModel,
    build_standard_model,
    count_fixed_flags,
    verify,
    verify_range,
)
from .partitions import (
    NULL,
    NullPartition,
    Partition,
    Series,
    ValidityReport,
    parse_partition,
    partitions_of,
    surgery,
    valid_partitions,
    validate,
)
from .polynomials import Poly, geom
from .traces import (
    Expansion,
    Term,
    betti_numbers,
    clear_cache,
    expand_restriction,
    full_table,
    graded_trace,
)

__version__ = "0.1.0"

__all__ = [
    "ComponentElement",
    "IDENTITY",
    "canonical",
    "component_group",
    "parse_z",
    "FlagCountReport",
    "StandardModel",
    "build_standard_model",
    "count_fixed_flags",
    "verify",
    "verify_range",
    "NULL",
    "NullPartition",
    "Partition",
    "Series",
    "ValidityReport",
    "parse_partition",
    "partitions_of",
    "surgery",
    "valid_partitions",
    "validate",
    "Poly",
    "geom",
    "Expansion",
    "Term",
    "betti_numbers",
    "clear_cache",
    "expand_restriction",
    "full_table",
    "graded_trace",
    "__version__",
]
