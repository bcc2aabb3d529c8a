"""Finite semirings as Cayley tables: congruences, ideals, isomorphism,
exhaustive enumeration and a checker for the congruence-simple
semirings whose multiplication is idempotent."""

from .congruences import (
    CongruenceLattice,
    Partition,
    congruence_generated,
    congruence_lattice,
    is_congruence,
    is_congruence_simple,
    monolith,
    quotient,
)
from .constructions import (
    SemilatticeTable,
    adjoin_biabsorber,
    adjoin_zero,
    catalog,
    catalog_semiring,
    chain,
    end0_semiring,
    end_semiring,
    projection_semiring,
    step_endomorphism,
    zig_zag,
)
from .divisibility import is_mult_divisible, power_profile
from .enumeration import ConstraintSet, enumerate_semilattices, enumerate_semirings
from .errors import AxiomError, OrderTooLarge, ParseError, SemiringError, UnknownName
from .ideals import Kind, ab_decomposition, ideal_generated, is_bi_ideal_simple, is_ideal_simple, rho_partition
from .morphisms import CanonicalForm, canonical_form, is_anti_isomorphic, is_isomorphic
from .tables import (
    FiniteSemiring,
    check_axioms,
    classify_elements,
    direct_product,
    format_semiring,
    opposite,
    parse_semiring,
    predicates,
    relabel,
)
from .verifier import verify_classification, verify_corpus_properties, verify_semiring

__all__ = [name for name in dir() if not name.startswith("_")]
