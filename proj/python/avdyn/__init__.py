"""Exact fixed-point counting for endomorphisms of abelian varieties modeled as lattice tori.

Matrices are lists of lists of ints; translations and coordinates are Fractions.
"""

from ._avdyn import (
    BudgetError,
    DegenerateError,
    ValidationError,
    brute_force_count,
    builtin_scenarios,
    charpoly,
    complementary_isogeny,
    count_fixed,
    degree,
    det,
    enumerate_fixed,
    expand_sum_power,
    exterior_trace_sum,
    growth_table,
    lefschetz_number,
    pfaffian,
    polarization_multiplier,
    run,
    scenario,
    smith_normal_form,
)

__all__ = [
    "BudgetError",
    "DegenerateError",
    "ValidationError",
    "brute_force_count",
    "builtin_scenarios",
    "charpoly",
    "complementary_isogeny",
    "count_fixed",
    "degree",
    "det",
    "enumerate_fixed",
    "expand_sum_power",
    "exterior_trace_sum",
    "growth_table",
    "lefschetz_number",
    "pfaffian",
    "polarization_multiplier",
    "run",
    "scenario",
    "smith_normal_form",
]
