"""Exact computations in the Kriz rational model E(X, n) of configuration spaces."""
from .ring import GradedRing, cp_ring, curve_ring, dual_basis, diagonal_class, load_ring, mul, parse_ring, preset_ring
from .exterior import Element, Monomial, TypeSignature, bigraded_dims, enumerate_basis, enumerate_types, normalize
from .action import act, character_direct, verify_monogenic
from .chars import (Character, decompose, format_decomposition, irreducible_character, partitions,
                    type_character)
from .homology import KrizComplex, betti_table, cohomology_character, differential, poincare_string

__all__ = [
    "GradedRing", "cp_ring", "curve_ring", "dual_basis", "diagonal_class", "load_ring", "mul",
    "parse_ring", "preset_ring", "Element", "Monomial", "TypeSignature", "bigraded_dims",
    "enumerate_basis", "enumerate_types", "normalize", "act", "character_direct",
    "verify_monogenic", "Character", "decompose", "format_decomposition", "irreducible_character",
    "partitions",
    "type_character", "KrizComplex", "betti_table", "cohomology_character", "differential",
    "poincare_string",
]
