"""Spanning 2-spheres in random 2-complexes: counts, oracles, search and checks."""

from .complex_core import Complex2, check_closed_surface, is_spanning_sphere, tri
from .exact_counts import critical_probability, labeled_sphere_count, polygon_triangulation_count
from .moments import sample_complex
from .sphere_search import SearchBudget, find_spanning_sphere, quick_reject

__all__ = [
    "Complex2",
    "SearchBudget",
    "check_closed_surface",
    "critical_probability",
    "find_spanning_sphere",
    "is_spanning_sphere",
    "labeled_sphere_count",
    "polygon_triangulation_count",
    "quick_reject",
    "sample_complex",
    "tri",
]
