"""Base sizes and regular-orbit counts of permutation groups.

Formula routes work over conjugacy classes of S_n with exact integers; the
``oracle_*`` functions brute-force explicit groups given in the group spec
mini-format (``sn:6/subsets:2``, ``pgl2:7``, ``gens:(1,2);(1,2,3)``).
"""

from ._core import (
    CapacityError,
    ConsistencyError,
    Error,
    InputError,
    base_size_partitions_action,
    base_size_subsets,
    base_size_wreath_subsets,
    chi_subsets,
    chi_uniform_partitions,
    class_size,
    distinguishing_number,
    enumerate_cycle_types,
    inner_product,
    large_base_bounds,
    oracle_base_size,
    oracle_is_base_controlling,
    oracle_orbit_counts,
    orbit_counts,
    regular_orbit_count,
    run_cli,
    sign_of,
)

__all__ = [
    "CapacityError",
    "ConsistencyError",
    "Error",
    "InputError",
    "base_size_partitions_action",
    "base_size_subsets",
    "base_size_wreath_subsets",
    "chi_subsets",
    "chi_uniform_partitions",
    "class_size",
    "distinguishing_number",
    "enumerate_cycle_types",
    "inner_product",
    "large_base_bounds",
    "oracle_base_size",
    "oracle_is_base_controlling",
    "oracle_orbit_counts",
    "orbit_counts",
    "regular_orbit_count",
    "run_cli",
    "sign_of",
]
