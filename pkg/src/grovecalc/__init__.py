"""Exact noncommutative arithmetic on planar binary trees, planar trees and groves."""

from .trees import (
    BINARY,
    LEFT,
    MIDDLE,
    PLANAR,
    RIGHT,
    DegreeCapError,
    FlavorError,
    Grove,
    GroveError,
    InvalidNameError,
    PBTree,
    PTree,
    TreeArithmeticError,
    UndefinedCaseError,
    as_grove,
    catalan,
    cell_count,
    decompose,
    decompose_many,
    degree,
    degree_cap,
    enumerate_binary,
    enumerate_planar,
    graft,
    graft_many,
    grove_make,
    grove_union,
    mirror,
    set_degree_caps,
    super_catalan,
    total_grove,
    vertex_count,
)
from .notation import (
    decode,
    encode,
    format_grove,
    format_tree,
    parse_grove,
    parse_name,
    perm_to_tree,
    sign_pattern,
    validate,
    weights,
)
from .binary import UExpr, UNIT
from . import binary, planar, tables

__all__ = [
    "BINARY",
    "PLANAR",
    "LEFT",
    "RIGHT",
    "MIDDLE",
    "Grove",
    "PBTree",
    "PTree",
    "UExpr",
    "UNIT",
    "TreeArithmeticError",
    "InvalidNameError",
    "DegreeCapError",
    "UndefinedCaseError",
    "FlavorError",
    "GroveError",
    "as_grove",
    "binary",
    "catalan",
    "cell_count",
    "decode",
    "decompose",
    "decompose_many",
    "degree",
    "degree_cap",
    "encode",
    "enumerate_binary",
    "enumerate_planar",
    "format_grove",
    "format_tree",
    "graft",
    "graft_many",
    "grove_make",
    "grove_union",
    "mirror",
    "parse_grove",
    "parse_name",
    "perm_to_tree",
    "planar",
    "set_degree_caps",
    "sign_pattern",
    "super_catalan",
    "tables",
    "total_grove",
    "validate",
    "vertex_count",
    "weights",
]
