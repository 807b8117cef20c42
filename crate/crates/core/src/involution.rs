//! Involutions and their supports.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_system::{orthogonal, CartanType, Root, RootSystem};
use crate::signed_perm::{reflection, SignedPermutation};

/// An involution together with a set of pairwise orthogonal positive roots
/// whose reflections multiply to it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Involution {
    sys: RootSystem,
    perm: SignedPermutation,
    support: Vec<Root>,
}

impl Involution {
    /// The involution with its canonical support.
    pub fn new(sys: RootSystem, perm: SignedPermutation) -> Result<Self> {
        let support = support(&perm, sys.ty)?;
        Ok(Self { sys, perm, support })
    }

    /// Product of the reflections in `roots`, remembering `roots` as support.
    pub fn from_support(sys: RootSystem, roots: &[Root]) -> Result<Self> {
        let perm = from_support(roots, &sys)?;
        let mut support = roots.to_vec();
        support.sort();
        Ok(Self { sys, perm, support })
    }

    pub fn system(&self) -> RootSystem {
        self.sys
    }

    pub fn perm(&self) -> &SignedPermutation {
        &self.perm
    }

    pub fn support(&self) -> &[Root] {
        &self.support
    }

    pub fn is_basis(&self) -> bool {
        self.perm.is_basis()
    }

    pub fn length(&self) -> usize {
        self.perm.length()
    }
}

/// The support read off the cycle structure of `w`.
///
/// A 2-cycle `i -> j` gives `e_i - e_j`, a pair `i -> -j` gives `e_i + e_j`
/// and `i -> -i` gives `2e_i` in type C. For types B and D the last case has
/// no canonical support and is rejected.
pub fn support(w: &SignedPermutation, ty: CartanType) -> Result<Vec<Root>> {
    if ty.group_tag() != w.tag() {
        return Err(Error::TagMismatch(ty.to_string(), w.tag().to_string()));
    }
    if !w.is_involution() {
        return Err(Error::NotInvolution(w.to_text()));
    }
    let mut roots = Vec::new();
    for i in 1..=w.n() {
        let v = w.apply(i as i32);
        let j = v.unsigned_abs() as usize;
        if v > 0 && j > i {
            roots.push(Root::Diff(i, j));
        } else if v < 0 && j > i {
            roots.push(Root::Sum(i, j));
        } else if v < 0 && j == i {
            match ty {
                CartanType::C => roots.push(Root::Long(i)),
                _ => return Err(Error::SupportNotWellDefined(w.to_text())),
            }
        }
    }
    roots.sort();
    Ok(roots)
}

/// `prod_{a in roots} s_a` for pairwise orthogonal `roots`.
pub fn from_support(roots: &[Root], sys: &RootSystem) -> Result<SignedPermutation> {
    let distinct: BTreeSet<_> = roots.iter().collect();
    if distinct.len() != roots.len() {
        return Err(Error::InvalidSystem("repeated root in support".into()));
    }
    for (k, a) in roots.iter().enumerate() {
        sys.check(a)?;
        for b in &roots[k + 1..] {
            if !orthogonal(a, b) {
                return Err(Error::NotOrthogonal(a.to_string(), b.to_string()));
            }
        }
    }
    let mut w = SignedPermutation::identity(sys.n, sys.group_tag());
    for a in roots {
        w = w.compose_unchecked(&reflection(a, sys)?);
    }
    Ok(w)
}

/// Number of long roots `2e_i` in the support of a type C involution.
pub fn d_statistic(w: &SignedPermutation) -> Result<usize> {
    Ok(support(w, CartanType::C)?
        .iter()
        .filter(|r| matches!(r, Root::Long(_)))
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::strongly_orthogonal;
    use crate::signed_perm::{enumerate_involutions, GroupTag};

    fn sp(tag: GroupTag, v: &[i32]) -> SignedPermutation {
        SignedPermutation::new(tag, v.to_vec()).unwrap()
    }

    #[test]
    fn support_examples() {
        let c6 = sp(GroupTag::BC, &[3, -6, 1, -4, -5, -2]);
        assert_eq!(
            support(&c6, CartanType::C).unwrap(),
            vec![Root::Diff(1, 3), Root::Sum(2, 6), Root::Long(4), Root::Long(5)]
        );
        assert_eq!(d_statistic(&c6).unwrap(), 2);
        let b5 = sp(GroupTag::BC, &[-5, 2, 4, 3, -1]);
        assert_eq!(
            support(&b5, CartanType::B).unwrap(),
            vec![Root::Diff(3, 4), Root::Sum(1, 5)]
        );
        let id = SignedPermutation::identity(4, GroupTag::D);
        assert!(support(&id, CartanType::D).unwrap().is_empty());
        assert_eq!(d_statistic(&SignedPermutation::identity(3, GroupTag::BC)).unwrap(), 0);
    }

    #[test]
    fn support_errors() {
        let sigma = sp(GroupTag::BC, &[1, -2, -3, 4]);
        let err = support(&sigma, CartanType::B).unwrap_err();
        assert!(err.to_string().contains("support not well-defined"));
        assert!(support(&sp(GroupTag::BC, &[2, 3, 1]), CartanType::C).is_err());
    }

    #[test]
    fn from_support_examples() {
        let b4 = RootSystem::new(CartanType::B, 4).unwrap();
        assert_eq!(from_support(&[Root::Sum(1, 4)], &b4).unwrap().images(), &[-4, 2, 3, -1]);
        assert_eq!(
            from_support(&[Root::Diff(2, 3), Root::Sum(2, 3)], &b4).unwrap().images(),
            &[1, -2, -3, 4]
        );
        assert!(from_support(&[], &b4).unwrap().is_identity());
        assert!(matches!(
            from_support(&[Root::Diff(1, 2), Root::Diff(2, 3)], &b4),
            Err(Error::NotOrthogonal(..))
        ));
    }

    #[test]
    fn round_trips_and_orthogonality() {
        for ty in [CartanType::B, CartanType::C, CartanType::D] {
            for n in 2..=5 {
                let sys = RootSystem::new(ty, n).unwrap();
                for w in enumerate_involutions(n, sys.group_tag(), true) {
                    let supp = support(&w, ty).unwrap();
                    assert_eq!(from_support(&supp, &sys).unwrap(), w);
                    for (k, a) in supp.iter().enumerate() {
                        for b in &supp[k + 1..] {
                            assert!(orthogonal(a, b));
                            if ty == CartanType::C {
                                assert!(strongly_orthogonal(&sys, a, b));
                            }
                        }
                    }
                }
            }
        }
        for n in 1..=4 {
            let sys = RootSystem::new(CartanType::C, n).unwrap();
            for w in enumerate_involutions(n, GroupTag::BC, false) {
                let supp = support(&w, CartanType::C).unwrap();
                assert_eq!(from_support(&supp, &sys).unwrap(), w);
                for (k, a) in supp.iter().enumerate() {
                    for b in &supp[k + 1..] {
                        assert!(strongly_orthogonal(&sys, a, b));
                    }
                }
            }
        }
    }

    #[test]
    fn involution_with_explicit_support() {
        let b4 = RootSystem::new(CartanType::B, 4).unwrap();
        let tau = Involution::from_support(b4, &[Root::Short(1), Root::Sum(2, 3)]).unwrap();
        assert_eq!(tau.perm().images(), &[-1, -3, -2, 4]);
        assert!(!tau.is_basis());
        assert!(Involution::new(b4, tau.perm().clone()).is_err());
    }
}
