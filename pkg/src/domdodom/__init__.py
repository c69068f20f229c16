"""Dömdödöm numbers and covers of k-uniform intersecting families.

The (p,q)-dömdödöm of a family ``F`` is the least ``|F(A, B̄)|`` over
disjoint ``|A| = p``, ``|B| = q``, where ``F(A, B̄)`` collects the members
containing ``A`` and avoiding ``B``.
"""
from .beta import BetaQuery, Variant, WitnessedValue, beta, beta_fast, beta_prime
from .canonical import CanonicalForm, canonical_form, is_isomorphic
from .constructions import design10, f23, fano, fano_lift, design10_lift, lift, star, triangle
from .covers import (
    CoverReport,
    close_to_maximal,
    covering_number,
    is_maximal_intersecting,
    minimal_covers,
    up_closure,
)
from .family import Family, SetWord, degree_stats, is_intersecting, make_family, restrict
from .search import (
    EnumerationResult,
    beta_constant,
    enumerate_maximal,
    enumerate_tau_full,
    exact_beta,
)
from .verify import verify_lemma_charact, verify_thm02, verify_thm02_uniqueness

__version__ = "0.1.0"
