"""Exact-rational stability computations for sheaves on nodal curves.

The heavy lifting lives in the C++ extension; this package re-exports it.
Rationals cross the boundary as fractions.Fraction.
"""

from mgstab._core import (  # noqa: F401
    Census,
    CensusEntry,
    Chamber,
    ChamberSet,
    Component,
    DimensionVector,
    DualGraph,
    FlipEvent,
    FlipReport,
    Polarization,
    Problem,
    RankOneSheaf,
    SheafClass,
    StabilityError,
    StabilityVerdict,
    SubcurveInvariants,
    Wall,
    arithmetic_genus,
    census,
    check_rank_one,
    chi_interval,
    combined_degrees,
    connected_proper_subcurves,
    deg_on_subcurve,
    dimension_vector,
    enumerate_chambers,
    enumerate_walls,
    flip_report,
    load_problem,
    locate,
    multi_hilbert,
    normalize_sigma,
    oracle_check_rank_one,
    regularity_bound,
    sheaf_chi_deg,
    slope,
    subcurve_invariants,
    theta_of_subsheaf,
    theta_weights,
    uniform_class,
    validate_graph,
    validate_polarization,
)

__all__ = [name for name in dir() if not name.startswith("_")]
