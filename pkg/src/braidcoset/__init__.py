"""
Double-coset monoids of the infinite braid group, with their images in
GL(infinity) over Z[t, t^-1], in the finitary symmetric group and in the
automorphisms of the free group, plus a replayable certificate checker.
"""

from .words import (IDENTITY, BraidWord, IndexGrid, WordSyntaxError, format_word, free_reduce,
                    parse_word, shift, support_upper, tau, theta)
from .garside import GarsideNF, braid_equal, conjugate_test, normal_form
from .laurent import LaurentMatrix, LaurentPoly
from .burau import eta, in_G, star_t, theta_matrix
from .symmetric import FinPermutation, canonical_invariant, perm_of, sym_product, theta_s
from .cosets import (BraidCoset, EqualityCertificate, associativity_certificate, coset_equal,
                     coset_product, independence_certificate)
from .artin import EndoFin, FreeWord, artin, compose, vartheta

__all__ = [
    "IDENTITY", "BraidWord", "IndexGrid", "WordSyntaxError", "format_word", "free_reduce",
    "parse_word", "shift", "support_upper", "tau", "theta",
    "GarsideNF", "braid_equal", "conjugate_test", "normal_form",
    "LaurentMatrix", "LaurentPoly",
    "eta", "in_G", "star_t", "theta_matrix",
    "FinPermutation", "canonical_invariant", "perm_of", "sym_product", "theta_s",
    "BraidCoset", "EqualityCertificate", "associativity_certificate", "coset_equal",
    "coset_product", "independence_certificate",
    "EndoFin", "FreeWord", "artin", "compose", "vartheta",
]
