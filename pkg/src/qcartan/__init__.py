"""Dynkin types of positive definite symmetric quasi-Cartan matrices.

Structural recognizers (block trees for type A, D-cycle gluings for
type D) checked against the classical inflations method, with
unimodular congruence witnesses for every answer.
"""
from .blocks import BlockTree, FDecomposition, block_tree, classify_A, is_A_block_tree, recognize_F, reduce_to_An
from .classify import classify
from .core import (
    DOTTED,
    SOLID,
    Bigraph,
    DynkinType,
    LineStyle,
    QuasiCartanMatrix,
    bigraph_to_matrix,
    is_positive_definite,
    matrix_to_bigraph,
    simplify,
)
from .dcycle import (
    DCycleGluing,
    SplitWitness,
    decomposition_from_split,
    glue,
    identify_vertices,
    recognize_D,
    reduce_to_Dn,
    shortest_path_A,
    split_vertex,
)
from .flation import FlationStep, FlationWitness, apply_sequence, elementary_matrix, flate_graph, flate_matrix
from .inflations import ClassificationResult, canonical_cartan, inflations_method, recognize_diagram, verify_witness

__all__ = [
    "Bigraph",
    "BlockTree",
    "ClassificationResult",
    "DCycleGluing",
    "DOTTED",
    "DynkinType",
    "FDecomposition",
    "FlationStep",
    "FlationWitness",
    "LineStyle",
    "QuasiCartanMatrix",
    "SOLID",
    "SplitWitness",
    "apply_sequence",
    "bigraph_to_matrix",
    "block_tree",
    "canonical_cartan",
    "classify",
    "classify_A",
    "decomposition_from_split",
    "elementary_matrix",
    "flate_graph",
    "flate_matrix",
    "glue",
    "identify_vertices",
    "inflations_method",
    "is_A_block_tree",
    "is_positive_definite",
    "matrix_to_bigraph",
    "recognize_D",
    "recognize_F",
    "recognize_diagram",
    "reduce_to_An",
    "reduce_to_Dn",
    "shortest_path_A",
    "simplify",
    "split_vertex",
    "verify_witness",
]

__version__ = "0.1.0"
