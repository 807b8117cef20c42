//! Exact matrix realizations of the classical Lie algebras, their Borel
//! subgroups and the coadjoint action on the dual of the nilradical.

mod matrix;
mod realization;
mod sampling;

pub use matrix::{coadjoint, pairing, rank, LinearForm, Matrix, Shape};
pub use realization::Realization;
pub use sampling::{
    random_torus, random_unipotent, random_unipotent_with, sample_orbit, sample_seed, xi_palette, Lcg,
    OrbitSample,
};
