# Brute-force cross-checks for tiny instances

from oracle.brute_force import (
    BruteSummary,
    EnumeratedSubgroup,
    brute_cohomology_summary,
    enumerate_cochains,
)

__all__ = ["BruteSummary", "EnumeratedSubgroup", "brute_cohomology_summary", "enumerate_cochains"]
