//! Orbit-level computations: rank invariants, minors and their vanishing on
//! orbits, orbit dimensions and explicit degenerations.

mod degenerations;
mod invariants;
mod tuples;

pub use degenerations::{
    case_1_12_witness, degeneration_case_1_12, degeneration_ex23, ex28_pair, ex28_report, vanishing_ex28,
};
pub use invariants::{
    build_pqk, classify_config, config_nonvanishing, minor_configs, orbit_dimension, orbit_samples,
    parity_clauses_agree, pqk_identities, prop24_check, rank_invariant_violations, rook_count,
    separating_minor_at_form, Hypothesis, MinorConfig, SeparatingMinor,
};
pub use tuples::{d_poly, minor, s_family, tuple_plus_minus, tuple_replace, IndexTuple, PairRule, Sign};
