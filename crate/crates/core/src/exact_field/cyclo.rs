//! The eighth cyclotomic field `Q(z)`, `z^4 = -1`.
//!
//! Elements are stored in the power basis `1, z, z^2, z^3`. This field
//! contains `sqrt(2) = z - z^3` and the imaginary unit `I = z^2`, which
//! are the only irrational scalars the orbit computations need.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element `a + b z + c z^2 + d z^3` of `Q(z)` with `z^4 = -1`.
///
/// The representation is canonical, so derived equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct CycloElement {
    coeffs: [BigRational; 4],
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

impl CycloElement {
    pub fn new(coeffs: [BigRational; 4]) -> Self {
        // `BigRational` keeps itself reduced with a positive denominator.
        Self { coeffs }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new([rat(a, 1), rat(b, 1), rat(c, 1), rat(d, 1)])
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(v: i64) -> Self {
        Self::from_rational(rat(v, 1))
    }

    /// The rational `p / q`. Panics when `q == 0`.
    pub fn rational(p: i64, q: i64) -> Self {
        Self::from_rational(rat(p, q))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::new([r, BigRational::zero(), BigRational::zero(), BigRational::zero()])
    }

    /// The primitive eighth root of unity `z`.
    pub fn zeta() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    /// `sqrt(2) = z - z^3`.
    pub fn sqrt2() -> Self {
        Self::from_ints(0, 1, 0, -1)
    }

    /// `I = z^2`.
    pub fn imag() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c *= r;
        }
        out
    }

    /// The Galois automorphism `z -> z^k` for odd `k`.
    fn galois(&self, k: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = (e * k) % 8;
            if p < 4 {
                out.coeffs[p] += c;
            } else {
                out.coeffs[p - 4] -= c;
            }
        }
        out
    }

    /// Multiplicative inverse, via the norm down to `Q`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        let cof = &(&self.galois(3) * &self.galois(5)) * &self.galois(7);
        let norm = self * &cof;
        let n = norm
            .as_rational()
            .expect("field norm of Q(z) is rational")
            .clone();
        Ok(cof.scale(&n.recip()))
    }

    /// A square root inside `Q(z)` for rationals of the form `±m^2` or `±2 m^2`.
    pub fn sqrt_in_field(&self) -> Option<Self> {
        let r = self.as_rational()?;
        if r.is_zero() {
            return Some(Self::zero());
        }
        let unit = if r.is_negative() { Self::imag() } else { Self::one() };
        let a = r.abs();
        if let Some(s) = rational_sqrt(&a) {
            return Some(&unit * &Self::from_rational(s));
        }
        let half = &a / BigRational::from_integer(2.into());
        if let Some(s) = rational_sqrt(&half) {
            return Some(&(&unit * &Self::sqrt2()) * &Self::from_rational(s));
        }
        None
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl<'a> Add<&'a CycloElement> for &'a CycloElement {
    type Output = CycloElement;
    fn add(self, rhs: &CycloElement) -> CycloElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a CycloElement> for &'a CycloElement {
    type Output = CycloElement;
    fn sub(self, rhs: &CycloElement) -> CycloElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a CycloElement> for &'a CycloElement {
    type Output = CycloElement;
    fn mul(self, rhs: &CycloElement) -> CycloElement {
        let mut out = CycloElement::zero();
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let prod = x * y;
                let k = i + j;
                if k < 4 {
                    out.coeffs[k] += prod;
                } else {
                    out.coeffs[k - 4] -= prod;
                }
            }
        }
        out
    }
}

impl Neg for &CycloElement {
    type Output = CycloElement;
    fn neg(self) -> CycloElement {
        CycloElement {
            coeffs: [
                -self.coeffs[0].clone(),
                -self.coeffs[1].clone(),
                -self.coeffs[2].clone(),
                -self.coeffs[3].clone(),
            ],
        }
    }
}

impl AddAssign<&CycloElement> for CycloElement {
    fn add_assign(&mut self, rhs: &CycloElement) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&CycloElement> for CycloElement {
    fn sub_assign(&mut self, rhs: &CycloElement) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycloElement {
            type Output = CycloElement;
            fn $m(self, rhs: CycloElement) -> CycloElement {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloElement {
    type Output = CycloElement;
    fn neg(self) -> CycloElement {
        -&self
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical rendering `a + b*z + c*z^2 + d*z^3`.
impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.coeffs;
        write!(
            f,
            "{} + {}*z + {}*z^2 + {}*z^3",
            fmt_rational(&c[0]),
            fmt_rational(&c[1]),
            fmt_rational(&c[2]),
            fmt_rational(&c[3])
        )
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for CycloElement {
    type Err = Error;

    /// Parses the canonical rendering, or a bare rational.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(" + ").collect();
        if parts.len() == 1 {
            return Ok(Self::from_rational(parse_rational(parts[0])?));
        }
        if parts.len() != 4 {
            return Err(Error::Parse(format!("expected four terms in `{s}`")));
        }
        let suffixes = ["", "*z", "*z^2", "*z^3"];
        let mut coeffs: [BigRational; 4] = Default::default();
        for (k, (part, suffix)) in parts.iter().zip(suffixes).enumerate() {
            let body = if suffix.is_empty() {
                part.trim()
            } else {
                part.trim()
                    .strip_suffix(suffix)
                    .ok_or_else(|| Error::Parse(format!("term `{part}` lacks `{suffix}`")))?
            };
            coeffs[k] = parse_rational(body)?;
        }
        Ok(Self::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        let s2 = CycloElement::sqrt2();
        assert_eq!(&s2 * &s2, CycloElement::integer(2));
        let i = CycloElement::imag();
        assert_eq!(&i * &i, CycloElement::integer(-1));
        let z = CycloElement::zeta();
        assert_eq!(&z * &z.pow(3), CycloElement::integer(-1));
        assert_eq!(z.pow(8), CycloElement::one());
    }

    #[test]
    fn inverses() {
        let z = CycloElement::zeta();
        assert_eq!(z.inverse().unwrap(), -&z.pow(3));
        assert_eq!(
            CycloElement::integer(2).inverse().unwrap(),
            CycloElement::rational(1, 2)
        );
        assert_eq!(CycloElement::zero().inverse(), Err(Error::DivisionByZero));
        assert_eq!(
            Error::DivisionByZero.to_string(),
            "division by zero".to_string()
        );
    }

    #[test]
    fn square_roots_of_sample_weights() {
        for (p, q) in [(1, 1), (4, 1), (9, 4), (-1, 1), (2, 1), (-8, 9)] {
            let x = CycloElement::rational(p, q);
            let r = x.sqrt_in_field().unwrap();
            assert_eq!(&r * &r, x);
        }
        assert!(CycloElement::integer(3).sqrt_in_field().is_none());
        assert!(CycloElement::zeta().sqrt_in_field().is_none());
    }

    #[test]
    fn render_and_parse() {
        let x = CycloElement::new([rat(1, 2), rat(-3, 1), rat(0, 1), rat(7, 5)]);
        let s = x.to_string();
        assert_eq!(s, "1/2 + -3*z + 0*z^2 + 7/5*z^3");
        assert_eq!(s.parse::<CycloElement>().unwrap(), x);
        assert_eq!("-2/4".parse::<CycloElement>().unwrap(), CycloElement::rational(-1, 2));
        assert!("1 + 2".parse::<CycloElement>().is_err());
    }
}
