"""Affine Demazure crystals on semistandard key tabloids."""

from .characters import (QPoly, decompose_into_keys, divided_difference_pi, global_energy,
                         graded_character, key_polynomial, local_energy,
                         specialized_macdonald)
from .compositions import apply_s, eta, orbit_reduced_word, sort_decreasing
from .crystal import CrystalGraph, build_crystal, e, f, lower, lower0, raise0, raise_
from .embeddings import embed_affine, embed_finite, filtration_check
from .errors import (DecompositionError, DomainError, InvalidInput, KeyTabloidError,
                     UnreachableError)
from .graphs import check_isomorphism, graph_to_dot, graph_to_json
from .reference import build_reference_crystal, reference_for_shape
from .tabloid import Tabloid, enumerate_sskd, is_sskd, maj, reading_word, u_tilde_tabloid, weight

__version__ = "0.1.0"

__all__ = [
    "QPoly", "decompose_into_keys", "divided_difference_pi", "global_energy",
    "graded_character", "key_polynomial", "local_energy", "specialized_macdonald",
    "apply_s", "eta", "orbit_reduced_word", "sort_decreasing",
    "CrystalGraph", "build_crystal", "e", "f", "lower", "lower0", "raise0", "raise_",
    "embed_affine", "embed_finite", "filtration_check",
    "DecompositionError", "DomainError", "InvalidInput", "KeyTabloidError", "UnreachableError",
    "check_isomorphism", "graph_to_dot", "graph_to_json",
    "build_reference_crystal", "reference_for_shape",
    "Tabloid", "enumerate_sskd", "is_sskd", "maj", "reading_word", "u_tilde_tabloid", "weight",
]
