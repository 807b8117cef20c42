//! Exact combinatorics of involutions in the classical Weyl groups and of
//! the coadjoint orbits of Borel subgroups attached to them.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact_field`]: exact scalars in `Q(z8)` and Laurent polynomials over it;
//! * [`signed_perm`] and [`root_system`]: Weyl groups of types A, B, C, D as
//!   signed permutations, with their root systems;
//! * [`bruhat_order`]: rook placements, rank matrices and Bruhat order tests;
//! * [`involution`]: supports of involutions;
//! * [`matrix_rep`]: matrix realizations of the Lie algebras, groups and the
//!   coadjoint action;
//! * [`orbit_analysis`]: rank invariants, minors and degenerations of orbits;
//! * [`incitti_chains`]: classification of pairs of involutions and chain
//!   reachability checks;
//! * [`poset`], [`report`] and [`verify`]: Hasse diagrams, JSON reports and
//!   the verification suites driven by the command-line tool.

pub mod bruhat_order;
pub mod error;
pub mod exact_field;
pub mod incitti_chains;
pub mod index;
pub mod involution;
pub mod matrix_rep;
pub mod orbit_analysis;
pub mod poset;
pub mod report;
pub mod root_system;
pub mod signed_perm;
pub mod verify;

pub use error::{Error, Result};
pub use exact_field::{CycloElement, LaurentPoly, Scalar};
pub use involution::Involution;
pub use root_system::{CartanType, Root, RootSystem};
pub use signed_perm::{GroupTag, SignedPermutation};
