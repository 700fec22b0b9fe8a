"""Calculus of transmission permutations: affine permutations, slipfaces,
Demazure products, reduced/Hecke words, splitting types, and elliptic-chain
transmission loci."""

from .bn import (
    ResidualPeriodic,
    SplittingType,
    gamma_rd,
    gamma_splitting,
    inv_pi_bound,
    is_bigrassmannian,
    recompose,
    rho_pi_decompose,
    splitting_d,
    splitting_type_of,
    splitting_u,
    splitting_x,
)
from .curves import (
    GENERIC,
    ChainSpec,
    G1Bundle,
    chain_tau,
    expand_strata,
    genus1_generality_report,
    genus1_tau,
    wtau_points_bruteforce,
    wtau_points_via_words,
)
from .demazure import (
    SlipfaceTable,
    bruhat_lower_set,
    demazure,
    demazure_by_max_oracle,
    demazure_fold,
    is_length_additive,
    is_reduced_pair,
    is_reduced_tuple,
    perm_from_slipface,
    tabulate,
)
from .errors import (
    BadAsymptotics,
    BadParameters,
    BadPeriod,
    DomainError,
    DuplicateResidue,
    EmptySequence,
    FormatError,
    InconsistentPeriod,
    NoUniqueMax,
    NotAWindowPermutation,
    NotSubmodular,
    PeriodMismatch,
    ShiftMismatch,
    ShiftNonzero,
    ShiftSumMismatch,
    TooLarge,
    TranspermError,
)
from .formats import (
    format_chain,
    format_perm,
    format_split,
    format_word,
    parse_chain,
    parse_perm,
    parse_split,
    parse_word,
    perm_from_json,
    perm_to_json,
)
from .perm import (
    Perm,
    apply,
    apply_inverse,
    bruhat_leq,
    compose,
    descents_right,
    essential_set,
    identity,
    inv_count,
    inverse,
    inversion_classes,
    iota,
    make_affine,
    make_finitary,
    shift,
    shift_by_count,
    sigma,
    slipface,
)
from .words import (
    ShiftedTuple,
    Word,
    evaluate_word,
    hecke_word_count,
    hecke_words_naive,
    reduced_tuples,
    reduced_word_count,
    reduced_words,
)

__version__ = "0.1.0"
