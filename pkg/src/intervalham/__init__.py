"""Linear-time scattering number, path cover and Hamiltonicity certificates for interval graphs."""

from .common import NEG_INF, TooLarge
from .graph import Graph, GraphFormatError, components, induced_subgraph, intervals_to_graph, parse_graph
from .hamiltonicity import (
    Classification,
    HamiltonCertificate,
    Infeasible,
    InvalidPair,
    Unknown,
    classify,
    hamilton_cycle,
    hamilton_path,
    hamilton_path_avoiding,
    hamilton_path_between,
    verify_certificate,
)
from .model import CliquePathModel, NotInterval, build_model, verify_model
from .scattering import PathCover, ScatteringResult, ScatteringWitness, min_path_cover, scattering_number
from .stave import Stave, merge, sweep

__all__ = [
    "NEG_INF",
    "TooLarge",
    "Graph",
    "GraphFormatError",
    "components",
    "induced_subgraph",
    "intervals_to_graph",
    "parse_graph",
    "Classification",
    "HamiltonCertificate",
    "Infeasible",
    "InvalidPair",
    "Unknown",
    "classify",
    "hamilton_cycle",
    "hamilton_path",
    "hamilton_path_avoiding",
    "hamilton_path_between",
    "verify_certificate",
    "CliquePathModel",
    "NotInterval",
    "build_model",
    "verify_model",
    "PathCover",
    "ScatteringResult",
    "ScatteringWitness",
    "min_path_cover",
    "scattering_number",
    "Stave",
    "merge",
    "sweep",
]
