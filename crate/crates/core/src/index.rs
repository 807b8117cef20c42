//! Logical labels of matrix rows and columns.
//!
//! Rows and columns are labelled `1, ..., n, 0, -n, ..., -1` (with the zero
//! label only for the odd orthogonal algebra) or `1, ..., n, -n, ..., -1`,
//! top to bottom and left to right. Type A uses `1, ..., n`.

use crate::root_system::CartanType;
use crate::signed_perm::GroupTag;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LabelMap {
    n: usize,
    signed: bool,
    with_zero: bool,
}

impl LabelMap {
    /// Labels of rook placements and rank matrices for a group.
    pub fn for_group(tag: GroupTag, n: usize) -> Self {
        Self {
            n,
            signed: tag != GroupTag::A,
            with_zero: false,
        }
    }

    /// Labels of the natural matrix realization of the Lie algebra.
    pub fn for_algebra(ty: CartanType, n: usize) -> Self {
        Self {
            n,
            signed: ty != CartanType::A,
            with_zero: ty == CartanType::B,
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        if !self.signed {
            self.n
        } else if self.with_zero {
            2 * self.n + 1
        } else {
            2 * self.n
        }
    }

    /// Physical 0-based position of a label, if the label exists.
    pub fn phys(&self, label: i32) -> Option<usize> {
        let n = self.n as i32;
        if label > 0 && label <= n {
            Some(label as usize - 1)
        } else if label == 0 && self.with_zero {
            Some(self.n)
        } else if label < 0 && label >= -n && self.signed {
            Some(self.dim() - (-label) as usize)
        } else {
            None
        }
    }

    /// Physical position of a label known to exist. Panics otherwise.
    pub fn at(&self, label: i32) -> usize {
        self.phys(label)
            .unwrap_or_else(|| panic!("label {label} out of range"))
    }

    pub fn label(&self, phys: usize) -> i32 {
        let n = self.n;
        if phys < n {
            phys as i32 + 1
        } else if self.with_zero && phys == n {
            0
        } else {
            -((self.dim() - phys) as i32)
        }
    }

    pub fn labels(&self) -> Vec<i32> {
        (0..self.dim()).map(|p| self.label(p)).collect()
    }

    /// Labels in `[±n]`, excluding zero.
    pub fn nonzero_labels(&self) -> Vec<i32> {
        self.labels().into_iter().filter(|&l| l != 0).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_orders() {
        let b = LabelMap::for_algebra(CartanType::B, 2);
        assert_eq!(b.labels(), vec![1, 2, 0, -2, -1]);
        let d = LabelMap::for_algebra(CartanType::D, 3);
        assert_eq!(d.labels(), vec![1, 2, 3, -3, -2, -1]);
        let a = LabelMap::for_group(GroupTag::A, 3);
        assert_eq!(a.labels(), vec![1, 2, 3]);
        for m in [b, d, a] {
            for p in 0..m.dim() {
                assert_eq!(m.at(m.label(p)), p);
            }
        }
        assert_eq!(d.phys(0), None);
        assert_eq!(a.phys(-1), None);
    }
}
