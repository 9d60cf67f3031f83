"""
Signed permutations, their diagrams and essential sets of rank conditions.

>>> from signed_ess import parse, essential_set_B
>>> [str(t) for t in essential_set_B(parse("-2 3 1"))]
['(1,1,2)', '(1,3,-1)']
"""

from .bruhat import (
    leq_A,
    leq_B,
    max_with_rank_below,
    minimal_not_below,
    rank_A,
    rank_B,
    supremum,
)
from .diagrams import board, diagram, extended_diagram, render, se_corners
from .essential import (
    base_of,
    basic_leq_via_typeA,
    basic_perm_A,
    basic_signed,
    dissecting_u,
    enumerate_basic,
    essential_set_A,
    essential_set_B,
    essential_set_C,
    maximal_basic_below,
    rwy_via_bijection,
)
from .matrix_model import PrimeField, build_cell, corner_nullity, verify_rank_function
from .perm_core import (
    SignedPermutation,
    WindowPermutation,
    compose,
    inverse,
    iota,
    length,
    longest_element,
    parse,
)
from .triples import BasicTriple

__version__ = "0.1.0"
