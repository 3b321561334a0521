"""Exact models of the 2x2 and 3x3 cube groups, their structure theory,
and the minimal faithful dimensions of their representations."""

from .abelian import (
    FiniteAbelianGroup,
    invariant_factors,
    mdim_complex_abelian,
    mdim_real_abelian,
    oracle_min_faithful,
    zk0m,
)
from .cube import (
    CubeState,
    MoveWord,
    OrientationBasis,
    apply_word,
    corner_orientation,
    corner_permutation,
    edge_orientation,
    edge_permutation,
    invariant_s,
    invariant_t,
    word,
)
from .cyclotomic import CyclotomicInt
from .perm import Permutation, StabilizerChain, chain_build, compose, conjugate
from .replib import (
    ConjMonomialMap,
    ConjMonomialRep,
    DecoratedPerm,
    ExceptionalExample,
    MonomialMap,
    MonomialRep,
    build_rep_g2,
    build_rep_g3,
    character_norm,
    decorated_perm,
    frobenius_schur,
    g2_real_case_analysis,
    g3_real_case_table,
    mu,
    realify,
)
from .structure import (
    G2Element,
    G3Element,
    SubgroupTag,
    alpha,
    beta,
    build_m,
    build_transpositions,
    edge_three_cycle,
    encode_g2,
    encode_g3,
    g2_mul,
    g3_mul,
    membership,
    phi,
    psi,
    section_g2_in_g3,
    superflip,
    word_element_g2,
    word_element_g3,
)
from .verify import Context, run_suite, report_json, report_text

__all__ = [name for name in dir() if not name.startswith("_")]
