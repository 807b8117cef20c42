//! Seeded sampling of unipotent elements and of points of orbits.
//!
//! Random numbers come from the 64-bit linear congruential generator
//! `x <- 6364136223846793005 * x + 1442695040888963407 (mod 2^64)`, whose
//! high 32 bits are used as output, so that a seed reproduces the same
//! samples in any implementation.

use crate::error::Result;
use crate::exact_field::CycloElement;
use crate::root_system::Root;

use super::matrix::{coadjoint, LinearForm, Matrix};
use super::realization::Realization;

const LCG_MUL: u64 = 6364136223846793005;
const LCG_INC: u64 = 1442695040888963407;

#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(LCG_MUL).wrapping_add(LCG_INC);
        (self.state >> 32) as u32
    }

    /// Uniform-ish integer in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u32() as u64 % span) as i64
    }

    /// Rational with `|numerator| <= bound` and `1 <= denominator <= bound`;
    /// zero when `bound` is zero.
    pub fn rational(&mut self, bound: i64) -> CycloElement {
        if bound == 0 {
            return CycloElement::zero();
        }
        let p = self.range(-bound, bound);
        let q = self.range(1, bound);
        CycloElement::rational(p, q)
    }
}

/// Weights with square roots in `Q(z8)` used for `xi`.
pub fn xi_palette() -> [CycloElement; 5] {
    [
        CycloElement::one(),
        CycloElement::integer(4),
        CycloElement::rational(9, 4),
        CycloElement::integer(-1),
        CycloElement::integer(2),
    ]
}

/// `prod_alpha x_alpha(s_alpha)` over the positive roots in enumeration
/// order, the `s_alpha` drawn from the generator.
pub fn random_unipotent_with(real: &Realization, rng: &mut Lcg, bound: i64) -> Matrix<CycloElement> {
    let mut u = Matrix::identity(real.dim());
    for root in real.system().positive_roots() {
        let s = rng.rational(bound);
        if s.is_zero() {
            continue;
        }
        u = &u * &real.x_gen(&root, &s).expect("positive root");
    }
    u
}

pub fn random_unipotent(real: &Realization, seed: u64, bound: i64) -> Matrix<CycloElement> {
    random_unipotent_with(real, &mut Lcg::new(seed), bound)
}

/// A random diagonal element `prod_k h_{alpha_k}(t_k)` with `t_k` nonzero
/// integers.
pub fn random_torus(real: &Realization, rng: &mut Lcg, bound: i64) -> Matrix<CycloElement> {
    let mut h = Matrix::identity(real.dim());
    if bound == 0 {
        return h;
    }
    for root in real.system().simple_roots() {
        let mut t = rng.range(-bound, bound);
        if t == 0 {
            t = 1;
        }
        h = &h * &real.h_gen(&root, &CycloElement::integer(t)).expect("simple root");
    }
    h
}

/// One seeded point `u.f_{D,xi}` of the orbit attached to `support`, along
/// with the chosen weights.
#[derive(Clone, Debug)]
pub struct OrbitSample {
    pub seed: u64,
    pub xi: Vec<(Root, CycloElement)>,
    pub point: LinearForm<CycloElement>,
}

pub fn sample_orbit(real: &Realization, support: &[Root], seed: u64, bound: i64) -> Result<OrbitSample> {
    let mut rng = Lcg::new(seed);
    let palette = xi_palette();
    let xi: Vec<(Root, CycloElement)> = support
        .iter()
        .map(|r| (*r, palette[rng.range(0, palette.len() as i64 - 1) as usize].clone()))
        .collect();
    let f = real.f_form(&xi)?;
    let u = random_unipotent_with(real, &mut rng, bound);
    let point = coadjoint(&u, &f)?;
    Ok(OrbitSample { seed, xi, point })
}

/// Seeds used for the `k`-th sample of a run seeded with `seed`.
pub fn sample_seed(seed: u64, k: usize) -> u64 {
    seed.wrapping_mul(1_000_003).wrapping_add(k as u64)
}
