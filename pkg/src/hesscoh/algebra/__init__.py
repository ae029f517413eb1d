"""Permutations, exact polynomials and root systems."""

from .permgroup import Permutation, reduced_word, reduced_words
from .polyring import HilbertSeriesPoly, SparsePolynomial, VariableContext
from .rootsys import CartanDatum, WeylElement, WeylGroup, build_cartan, weyl_group

__all__ = [
    "Permutation",
    "reduced_word",
    "reduced_words",
    "SparsePolynomial",
    "VariableContext",
    "HilbertSeriesPoly",
    "CartanDatum",
    "WeylElement",
    "WeylGroup",
    "build_cartan",
    "weyl_group",
]
