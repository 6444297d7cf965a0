"""Berge cycles and paths in Sperner hypergraphs of bounded rank."""

from .bounds import DomainError, f, fstar, hsp, main_cycle_bound, main_path_bound, n_threshold, n_threshold_path
from .cliques import max_sperner_cliques, nsp_bound_check
from .connectivity import blocks, cut_nodes, is_2connected, is_connected, two_blocks
from .constructions import build_Fnkrs, build_HCal, build_Hnka, construct
from .cores import core, disintegrate, kopylov_case
from .enumeration import SearchSpace, enumerate_space, extremal_number
from .hypergraph import Graph, Hypergraph, incidence_bigraph, is_happy, is_sperner, shadow, validate
from .search import BergeWitness, check_witness, circumference, lift_shadow_cycle, lift_shadow_path, longest_berge_path
from .shrink import reduce_to_happy, shrink_step, validate_step
from .verify import VerificationReport, verify

__all__ = [
    "DomainError", "f", "fstar", "hsp", "main_cycle_bound", "main_path_bound", "n_threshold", "n_threshold_path",
    "max_sperner_cliques", "nsp_bound_check",
    "blocks", "cut_nodes", "is_2connected", "is_connected", "two_blocks",
    "build_Fnkrs", "build_HCal", "build_Hnka", "construct",
    "core", "disintegrate", "kopylov_case",
    "SearchSpace", "enumerate_space", "extremal_number",
    "Graph", "Hypergraph", "incidence_bigraph", "is_happy", "is_sperner", "shadow", "validate",
    "BergeWitness", "check_witness", "circumference", "lift_shadow_cycle", "lift_shadow_path", "longest_berge_path",
    "reduce_to_happy", "shrink_step", "validate_step",
    "VerificationReport", "verify",
]
