//! Hasse diagrams of the Bruhat order on sets of signed permutations.

use std::fmt::Write;

use crate::bruhat_order::leq_bruhat;
use crate::error::Result;
use crate::root_system::{CartanType, RootSystem};
use crate::signed_perm::{enumerate_involutions, SignedPermutation};

/// A finite poset with its covering relation.
#[derive(Clone, Debug)]
pub struct Poset {
    elements: Vec<SignedPermutation>,
    /// `(lower, upper)` index pairs.
    covers: Vec<(usize, usize)>,
}

impl Poset {
    /// The Bruhat order restricted to `elements`, reduced to its covers.
    pub fn bruhat(elements: Vec<SignedPermutation>) -> Result<Self> {
        let m = elements.len();
        let mut less = vec![vec![false; m]; m];
        for (a, v) in elements.iter().enumerate() {
            for (b, w) in elements.iter().enumerate() {
                less[a][b] = a != b && leq_bruhat(v, w)?;
            }
        }
        let mut covers = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if less[a][b] && !(0..m).any(|c| less[a][c] && less[c][b]) {
                    covers.push((a, b));
                }
            }
        }
        Ok(Self { elements, covers })
    }

    /// Basis involutions of the Weyl group of `ty_n` (all involutions in
    /// type A).
    pub fn basis_involutions(ty: CartanType, n: usize) -> Result<Self> {
        let sys = RootSystem::new(ty, n)?;
        let basis_only = ty != CartanType::A;
        Self::bruhat(enumerate_involutions(n, sys.group_tag(), basis_only).collect())
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Graphviz text with edges pointing up.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph bruhat {\n  rankdir=BT;\n");
        for w in &self.elements {
            let _ = writeln!(s, "  \"{}\";", w.to_text());
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\";",
                self.elements[a].to_text(),
                self.elements[b].to_text()
            );
        }
        s.push_str("}\n");
        s
    }
}
