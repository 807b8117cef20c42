//! Laurent polynomials in one parameter `t` over [`CycloElement`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::CycloElement;
use crate::error::{Error, Result};

/// A finite sum `sum_e c_e t^e`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, CycloElement>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(CycloElement::one())
    }

    pub fn constant(c: CycloElement) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: CycloElement, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `t^exp`.
    pub fn t_pow(exp: i32) -> Self {
        Self::monomial(CycloElement::one(), exp)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &CycloElement)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i32) -> CycloElement {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Minimum exponent; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// The value at `t = 0`, defined when there is no pole.
    pub fn limit_at_zero(&self) -> Result<CycloElement> {
        match self.valuation() {
            Some(v) if v < 0 => Err(Error::PoleAtZero),
            _ => Ok(self.coeff(0)),
        }
    }

    /// Specialization `t = 1`.
    pub fn eval_at_one(&self) -> CycloElement {
        let mut acc = CycloElement::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    /// Inverse, which exists in the Laurent ring exactly for monomials.
    pub fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Self::monomial(c.inverse().ok()?, -e))
    }

    fn add_term(&mut self, exp: i32, c: &CycloElement) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }
}

impl From<CycloElement> for LaurentPoly {
    fn from(c: CycloElement) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Terms in ascending exponent order, each rendered `(coeff)*t^e`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*t^{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(e: i32) -> LaurentPoly {
        LaurentPoly::t_pow(e)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&t(-1) * &t(1), LaurentPoly::one());
        let lhs = &(&t(-2) + &LaurentPoly::one()) * &t(2);
        assert_eq!(lhs, &LaurentPoly::one() + &t(2));
        let s = LaurentPoly::monomial(CycloElement::sqrt2(), -1);
        assert_eq!(&s * &s, LaurentPoly::monomial(CycloElement::integer(2), -2));
        assert!((&t(3) - &t(3)).is_zero());
    }

    #[test]
    fn limits() {
        let p = &LaurentPoly::one() + &t(2);
        assert_eq!(p.limit_at_zero().unwrap(), CycloElement::one());
        assert_eq!((-&t(2)).limit_at_zero().unwrap(), CycloElement::zero());
        assert_eq!(t(-1).limit_at_zero(), Err(Error::PoleAtZero));
        assert_eq!(Error::PoleAtZero.to_string(), "pole at t = 0");
        assert_eq!(LaurentPoly::zero().limit_at_zero().unwrap(), CycloElement::zero());
    }

    #[test]
    fn monomial_inverse() {
        let m = LaurentPoly::monomial(-&CycloElement::imag(), -1);
        assert_eq!(&m * &m.try_inverse().unwrap(), LaurentPoly::one());
        assert!((&t(1) + &t(2)).try_inverse().is_none());
    }

    #[test]
    fn rendering() {
        let p = &LaurentPoly::monomial(CycloElement::integer(2), -2) + &t(1);
        assert_eq!(
            p.to_string(),
            "(2 + 0*z + 0*z^2 + 0*z^3)*t^-2 + (1 + 0*z + 0*z^2 + 0*z^3)*t^1"
        );
    }
}
