//! Exact scalars: the cyclotomic field `Q(z8)` and Laurent polynomials over it.

mod cyclo;
mod laurent;

pub use cyclo::CycloElement;
pub use laurent::LaurentPoly;

use std::fmt::{Debug, Display};

/// Commutative ring operations shared by the scalar types that matrices are
/// built over.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_cyclo(c: CycloElement) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiplicative inverse when it exists in the ring.
    fn try_inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Scalar for CycloElement {
    fn zero() -> Self {
        CycloElement::zero()
    }
    fn one() -> Self {
        CycloElement::one()
    }
    fn is_zero(&self) -> bool {
        CycloElement::is_zero(self)
    }
    fn from_cyclo(c: CycloElement) -> Self {
        c
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn is_one(&self) -> bool {
        CycloElement::is_one(self)
    }
}

impl Scalar for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn from_cyclo(c: CycloElement) -> Self {
        LaurentPoly::constant(c)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        self.try_inverse()
    }
}
