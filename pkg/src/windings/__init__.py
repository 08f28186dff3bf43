"""Combinatorics of quiver representations carried by windings.

Core objects are quivers and windings (per-color injective quiver maps);
on top of them the package enumerates nilpotent indecomposable classes,
derives counting recursions and growth classes, computes Hall products,
commutators and tree-gluing brackets, searches nice grading sequences for
Euler characteristics, and builds coverings and contractions.
"""
from .canon import BACKEND as canon_backend
from .canon import canonical_key, key_hex
from .quiver import (
    Arrow,
    Quiver,
    QuiverMap,
    Shape,
    ShapeClass,
    Winding,
    betti_number,
    central_cycle,
    classify_shape,
    compose_quiver_maps,
    identity_map,
    inclusion_map,
    is_winding,
    reverse_arrow,
    validate_quiver_map,
    winding_violation,
)
from .representation import (
    ClosedVertexSet,
    Representation,
    SubFlavor,
    aut_count,
    closed_subsets,
    count_coefficient_isos,
    decompose,
    dimension_vector,
    direct_sum,
    hom_count,
    induced_subrepresentation,
    is_indecomposable,
    is_nilpotent,
    make_representation,
    sub_and_quotient,
    zero_representation,
)
from .serialize import (
    emit_quiver,
    emit_winding,
    parse_quiver,
    parse_winding,
)

__version__ = "0.1.0"

__all__ = [
    "Arrow",
    "ClosedVertexSet",
    "Quiver",
    "QuiverMap",
    "Representation",
    "Shape",
    "ShapeClass",
    "SubFlavor",
    "Winding",
    "aut_count",
    "betti_number",
    "canon_backend",
    "canonical_key",
    "central_cycle",
    "classify_shape",
    "closed_subsets",
    "compose_quiver_maps",
    "count_coefficient_isos",
    "decompose",
    "dimension_vector",
    "direct_sum",
    "emit_quiver",
    "emit_winding",
    "hom_count",
    "identity_map",
    "inclusion_map",
    "induced_subrepresentation",
    "is_indecomposable",
    "is_nilpotent",
    "is_winding",
    "key_hex",
    "make_representation",
    "parse_quiver",
    "parse_winding",
    "reverse_arrow",
    "sub_and_quotient",
    "validate_quiver_map",
    "winding_violation",
    "zero_representation",
]
