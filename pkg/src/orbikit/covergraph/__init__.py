from .cases import (
    CASE_TAGS,
    TORUS_TAGS,
    SignatureCase,
    abelianize_x,
    congruence_member,
    covering_graph,
    get_case,
    h_congruence_member,
    subgroup_G,
    subgroup_H,
    y_generators,
)
from .folding import CoverGraph, fold, fold_normal, graph_member, sheets_and_rank, spanning_paths, to_dot
from .lifting import (
    allowed_puncture_images,
    allowed_regular_images,
    induced_images,
    lift_check,
    lift_criterion,
    puncture_image,
)
from .words import Word, abelianize, random_reduced_word, reduce

__all__ = [
    "CASE_TAGS",
    "TORUS_TAGS",
    "CoverGraph",
    "SignatureCase",
    "Word",
    "abelianize",
    "abelianize_x",
    "allowed_puncture_images",
    "allowed_regular_images",
    "congruence_member",
    "covering_graph",
    "fold",
    "fold_normal",
    "spanning_paths",
    "get_case",
    "graph_member",
    "h_congruence_member",
    "induced_images",
    "lift_check",
    "lift_criterion",
    "puncture_image",
    "random_reduced_word",
    "reduce",
    "sheets_and_rank",
    "subgroup_G",
    "subgroup_H",
    "to_dot",
    "y_generators",
]
