"""Exact GKM-graph cohomology for Hessenberg varieties and their twins.

The package builds the labeled graphs attached to regular semisimple
Hessenberg varieties and their twins, computes equivariant and ordinary
graph cohomology with exact rational arithmetic, evaluates chromatic
quasisymmetric functions and unicellular LLT polynomials by coloring
enumeration, and machine-verifies the modular-law identities that tie the
two sides together.
"""

from gkmhess.hessenberg import (
    HessenbergFunction,
    IndifferenceGraph,
    ModularTriple,
    enumerate_hessenberg,
    find_modular_triples,
    from_string,
    indifference_graph,
    is_initial,
    product,
    transpose,
    transpose_duality_check,
    validate,
)
from gkmhess.symfunc import (
    ClassFunction,
    GradedSymmetricFunction,
    SymmetricFunction,
    convert,
    frobenius,
    multiply,
    omega,
)
from gkmhess.coloring import asc, csf_q, llt
from gkmhess.graphs import LabeledGraph, SignedBlowupGraph, build_GX, build_GY

__all__ = [
    "HessenbergFunction", "IndifferenceGraph", "ModularTriple",
    "enumerate_hessenberg", "find_modular_triples", "from_string",
    "indifference_graph", "is_initial", "product", "transpose",
    "transpose_duality_check", "validate",
    "ClassFunction", "GradedSymmetricFunction", "SymmetricFunction",
    "convert", "frobenius", "multiply", "omega",
    "asc", "csf_q", "llt",
    "LabeledGraph", "SignedBlowupGraph", "build_GX", "build_GY",
]
