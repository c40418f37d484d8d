"""Exact alpha-partial domination numbers, spectra and bound checks for simple graphs."""

from .graph import (
    Graph,
    as_alpha,
    closed_neighborhood,
    complement,
    components,
    coverage_target,
    delete_edge,
    delete_vertex,
    generate,
    parse_graph,
    serialize_graph,
)
from .solver import PdResult, brute_force_pd, domination_number, greedy_pd, pd_alpha, pd_by_target
from .spectrum import CoverageProfile, SpectrumResult, coverage_profile, spectrum, verify_spectrum_structure
from .reports import BoundReport

__version__ = "0.1.0"
