"""Exact planar-algebra engine for finite-dimensional Hopf algebras."""

from .scalars import Scalar, ScalarField, make_delta
from .groups import GroupTable, cyclic_group, klein_group, symmetric_group_3
from .hopf import (
    Element,
    HopfAlgebra,
    group_algebra,
    verify_fourier_laws,
    verify_relation_identities,
)
from .network import (
    LabeledNetwork,
    MoveError,
    NetworkSum,
    Pass,
    apply_move,
    disjoint_union,
    find_move_sites,
    minus_transform,
    validate,
)
from .evaluator import evaluate, evaluate_with_free_slots
from .pairing import (
    BudgetError,
    depth_two_gram,
    depth_two_rank,
    gram,
    gram_is_identity,
    pairing_template,
    reconstruct_structure,
)
from .duality import (
    dual_network,
    fourier_relabel,
    verify_duality_on_network,
    verify_generator_map,
)
from .randomnets import random_element, random_network, random_planar_network
from .tilings import (
    Tiling,
    enumerate_tilings,
    fan_tiling,
    flip_graph,
    hexagon_neighbors,
    surjectivity_gram,
    tiling_to_tangle,
    to_dot,
)
from .io import (
    FormatError,
    dump_network,
    hopf_from_data,
    load_hopf,
    load_network,
    network_from_data,
    network_to_data,
)

__all__ = [
    "Scalar",
    "ScalarField",
    "make_delta",
    "GroupTable",
    "cyclic_group",
    "klein_group",
    "symmetric_group_3",
    "Element",
    "HopfAlgebra",
    "group_algebra",
    "verify_fourier_laws",
    "verify_relation_identities",
    "LabeledNetwork",
    "MoveError",
    "NetworkSum",
    "Pass",
    "apply_move",
    "disjoint_union",
    "find_move_sites",
    "minus_transform",
    "validate",
    "evaluate",
    "evaluate_with_free_slots",
    "BudgetError",
    "depth_two_gram",
    "depth_two_rank",
    "gram",
    "gram_is_identity",
    "pairing_template",
    "reconstruct_structure",
    "dual_network",
    "fourier_relabel",
    "verify_duality_on_network",
    "verify_generator_map",
    "random_element",
    "random_network",
    "random_planar_network",
    "Tiling",
    "enumerate_tilings",
    "fan_tiling",
    "flip_graph",
    "hexagon_neighbors",
    "surjectivity_gram",
    "tiling_to_tangle",
    "to_dot",
    "FormatError",
    "dump_network",
    "hopf_from_data",
    "load_hopf",
    "load_network",
    "network_from_data",
    "network_to_data",
]
