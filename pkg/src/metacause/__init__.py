"""Causality-based analysis of metabolic networks.

Rules become a rate-free process-calculus specification whose transition graph
is searched for derivation paths. Essentiality, checkpoints, causality,
exclusion, redundancy and robustness are each decided by a fast fixpoint
procedure and cross-checked against exhaustive path enumeration.
"""

from .cgf import CgfSpec, check_well_labeled, encode
from .errors import (InvalidExplanation, LimitExceeded, MetacauseError, OracleDisagreement,
                     ParseError)
from .lts import LtsGraph, Transition, build_graph, closure, derivable
from .model import (Explanation, MNetwork, Rule, is_explanation, is_uniform, leaf,
                    metabolites_of, node, rules_of, split_reaction, validate_network)
from .paths import (Path, chi_paths_to, chi_rule_sets, count_chi_paths, count_rho_paths,
                    forward_path, paths_of_explanation, rho_paths_to, tr_p)
from .properties import (PropertyVerdict, causes, checkpoint, checkpoint_path_conditions,
                         essential, excludable, mutually_essential, redundant, replay, screen,
                         strong_robust, universal_essential, vicarious, weak_robust)
from .textio import (export_dot, export_json, load_network, parse_network,
                     serialize_network)

__all__ = [
    "CgfSpec", "Explanation", "InvalidExplanation", "LimitExceeded", "LtsGraph",
    "MNetwork", "MetacauseError", "OracleDisagreement", "ParseError", "Path",
    "PropertyVerdict", "Rule", "Transition", "build_graph", "causes", "check_well_labeled",
    "checkpoint", "checkpoint_path_conditions", "chi_paths_to", "chi_rule_sets", "closure",
    "count_chi_paths", "count_rho_paths", "derivable", "encode", "essential", "excludable",
    "export_dot", "export_json", "forward_path", "is_explanation", "is_uniform", "leaf",
    "load_network", "metabolites_of", "mutually_essential", "node", "parse_network",
    "paths_of_explanation", "redundant", "replay", "rho_paths_to", "rules_of", "screen",
    "serialize_network", "split_reaction", "strong_robust", "tr_p", "universal_essential",
    "validate_network", "vicarious", "weak_robust",
]
