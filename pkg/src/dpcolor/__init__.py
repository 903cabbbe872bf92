"""DP-coloring with variable degeneracy on small planar graphs.

Constructive solver, brute-force oracle, degeneracy certificates and the cover
machinery they share.
"""

from .constructive import dp_color_planar, find_config_f, reduction_plan
from .cover import Cover, diagonal_cover, enumerate_perfect_matching_covers, random_cover, representative_graph
from .degeneracy import PeelCertificate, check_strictly_f_degenerate, verify_certificate
from .errors import DPColorError
from .graph import Graph, build_graph, induced_subgraph
from .oracle import CapacityMatrix, SolveOutcome, list_forested_coloring, solve_bruteforce, verify_solution

__all__ = [
    "CapacityMatrix",
    "Cover",
    "DPColorError",
    "Graph",
    "PeelCertificate",
    "SolveOutcome",
    "build_graph",
    "check_strictly_f_degenerate",
    "diagonal_cover",
    "dp_color_planar",
    "enumerate_perfect_matching_covers",
    "find_config_f",
    "induced_subgraph",
    "list_forested_coloring",
    "random_cover",
    "reduction_plan",
    "representative_graph",
    "solve_bruteforce",
    "verify_certificate",
    "verify_solution",
]
