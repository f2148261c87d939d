"""Koszul sign map on permutations of graded symbols.

Permutations are given in 1-based one-line form, e.g. ``Permutation([2, 5, 3, 1, 4])``,
or parsed from text with :func:`parse_perm`. Signs are returned as ``+1`` / ``-1``.
"""

from ._core import (
    DimensionError,
    DomainError,
    GradedSequence,
    ParseError,
    Permutation,
    ResourceError,
    SuiteReport,
    TwoCochain,
    Word,
    act,
    build_cf,
    coboundary1_equals_cf,
    coboundary2,
    decompose_adjacent,
    format_cycles,
    format_degrees,
    format_one_line,
    format_word,
    is_cocycle,
    is_constant_one,
    is_morphism,
    kappa,
    kappa_bruteforce_minword,
    kappa_exponent,
    kappa_monomials,
    kappa_word,
    module_from_degrees,
    morphism_bruteforce,
    parse_degrees,
    parse_perm,
    parse_word,
    project,
    reduce,
    relators,
    run_suite,
)

__all__ = [name for name in dir() if not name.startswith("_")]
