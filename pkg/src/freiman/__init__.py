"""Freiman tests for Borel and k-Borel monomial ideals."""
from .borel import (
    BorelSpec,
    borel_closure,
    borel_leq,
    closure,
    interval_decomposition,
    is_borel_ideal,
    is_k_borel_ideal,
    k_borel_closure,
    minimal_borel_generators,
    shift_psi,
)
from .chordal import UGraph, find_induced_cycle, is_chordal, lemma_chordal_graph, to_dot
from .classify import ClassVerdict, classify_kborel, classify_principal_borel, predict_freiman
from .fiber import FreimanReport, analytic_spread, boroczky_bound, check_power_bounds, freiman_report
from .monomial import GenSet, Monomial, format_monomial, ideal_power, is_k_bounded, m_index, mu, parse_monomial
from .sorting import SortedGraph, is_sortable, is_sorted_pair, sort_pair, sorted_graph

__version__ = "0.1.0"
