"""Combinatorics of the modular generalized Springer correspondence for GL(n)."""

from .correspondence import (
    CharParams,
    CorrespondenceTable,
    IrrLabel,
    LeviClass,
    SpringerDatum,
    cuspidal_levi_classes,
    full_table,
    has_cuspidal,
    induced_consistency,
    irr_labels,
    psi_co,
    series_of,
    springer_restriction,
    verify_bijection,
)
from .orbits import LeviOrbitLabel, OrbitLabel, induced_orbit, principal, zero_orbits
from .partitions import (
    ZERO,
    Composition,
    DigitTable,
    MultiPartition,
    Partition,
    dominance_leq,
    ell_adic_digits,
    enumerate_ell_regular,
    enumerate_multipartitions,
    enumerate_partitions,
    enumerate_power_partitions,
    from_multiplicities,
    multiplicities,
    transpose,
)
from .stratification import levi_leq, linear_extension, recollement_report, stratum_info

__version__ = "0.1.0"
