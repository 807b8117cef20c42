//! Rook placements, rank matrices and the Bruhat order on the classical Weyl
//! groups.
//!
//! Rows and columns are labelled `1, ..., n, -n, ..., -1` (types B, C, D) or
//! `1, ..., n` (type A); see [`LabelMap`].

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::index::LabelMap;
use crate::signed_perm::{enumerate_group, reflection, GroupTag, SignedPermutation};
use crate::root_system::{CartanType, RootSystem};

/// The 0/1 matrix `X_w` with `(X_w)_{w(j), j} = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RookPlacement {
    labels: LabelMap,
    tag: GroupTag,
    /// Physical row of the rook in each physical column.
    row_of_col: Vec<usize>,
}

impl RookPlacement {
    pub fn labels(&self) -> &LabelMap {
        &self.labels
    }

    pub fn tag(&self) -> GroupTag {
        self.tag
    }

    pub fn dim(&self) -> usize {
        self.row_of_col.len()
    }

    /// Entry at logical row `i`, column `j`.
    pub fn get(&self, i: i32, j: i32) -> u8 {
        (self.row_of_col[self.labels.at(j)] == self.labels.at(i)) as u8
    }

    /// `(row, column)` label pairs of all rooks, by column.
    pub fn rooks(&self) -> Vec<(i32, i32)> {
        self.row_of_col
            .iter()
            .enumerate()
            .map(|(c, &r)| (self.labels.label(r), self.labels.label(c)))
            .collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        let d = self.dim();
        let mut m = vec![vec![0; d]; d];
        for (c, &r) in self.row_of_col.iter().enumerate() {
            m[r][c] = 1;
        }
        m
    }
}

pub fn rook_matrix(w: &SignedPermutation) -> RookPlacement {
    let labels = LabelMap::for_group(w.tag(), w.n());
    let row_of_col = labels
        .labels()
        .into_iter()
        .map(|j| labels.at(w.apply(j)))
        .collect();
    RookPlacement {
        labels,
        tag: w.tag(),
        row_of_col,
    }
}

/// Counts of rooks weakly South-West of each cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankMatrix {
    labels: LabelMap,
    data: Vec<Vec<u32>>,
}

impl RankMatrix {
    pub fn labels(&self) -> &LabelMap {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn get(&self, i: i32, j: i32) -> u32 {
        self.data[self.labels.at(i)][self.labels.at(j)]
    }

    pub fn get_phys(&self, r: usize, c: usize) -> u32 {
        self.data[r][c]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.data
    }

    /// Entries on and above the diagonal set to zero.
    pub fn lower(&self) -> RankMatrix {
        let mut data = self.data.clone();
        for (r, row) in data.iter_mut().enumerate() {
            for v in row.iter_mut().skip(r) {
                *v = 0;
            }
        }
        RankMatrix {
            labels: self.labels,
            data,
        }
    }

    /// First cell (in row-major physical order) where `self > other`.
    pub fn first_excess(&self, other: &RankMatrix) -> Option<(i32, i32, u32, u32)> {
        for r in 0..self.dim() {
            for c in 0..self.dim() {
                let (x, y) = (self.data[r][c], other.data[r][c]);
                if x > y {
                    return Some((self.labels.label(r), self.labels.label(c), x, y));
                }
            }
        }
        None
    }

    pub fn leq(&self, other: &RankMatrix) -> bool {
        self.first_excess(other).is_none()
    }

    /// CSV with a header row and a header column of logical labels.
    pub fn to_csv(&self) -> String {
        let labels = self.labels.labels();
        let mut out = String::new();
        out.push_str("label");
        for l in &labels {
            write!(out, ",{l}").unwrap();
        }
        out.push('\n');
        for (r, row) in self.data.iter().enumerate() {
            write!(out, "{}", labels[r]).unwrap();
            for v in row {
                write!(out, ",{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

pub fn rank_matrix(w: &SignedPermutation) -> RankMatrix {
    let x = rook_matrix(w);
    let d = x.dim();
    // data[r][c] = #{columns c' <= c with rook row >= r}
    let mut data = vec![vec![0u32; d]; d];
    for r in (0..d).rev() {
        let mut acc = 0;
        for c in 0..d {
            if x.row_of_col[c] == r {
                acc += 1;
            }
            let below = if r + 1 < d { data[r + 1][c] } else { 0 };
            data[r][c] = below + acc;
        }
    }
    RankMatrix {
        labels: x.labels,
        data,
    }
}

pub fn rank_matrix_star(w: &SignedPermutation) -> RankMatrix {
    rank_matrix(w).lower()
}

/// `[-a, a] x [-b, b]` is an empty rectangle for `w`: no letter `i` with
/// `|i| >= b` and `|w(i)| >= a`.
pub fn empty_rectangle(w: &SignedPermutation, a: usize, b: usize) -> bool {
    (b..=w.n()).all(|i| (w.apply(i as i32).unsigned_abs() as usize) < a)
}

/// Why `v <= w` fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BruhatWitness {
    /// `(R_v)_{row,col} > (R_w)_{row,col}`.
    Entry { row: i32, col: i32, lhs: u32, rhs: u32 },
    /// The type D parity clause fails for the rectangle `[-a,a] x [-b,b]`;
    /// `lhs` and `rhs` are the entries at `(-(a-1), n)`.
    Parity { a: usize, b: usize, lhs: u32, rhs: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BruhatVerdict {
    pub leq: bool,
    pub witness: Option<BruhatWitness>,
}

fn check_pair(v: &SignedPermutation, w: &SignedPermutation) -> Result<()> {
    if v.n() != w.n() {
        return Err(Error::RankMismatch(v.n(), w.n()));
    }
    if v.tag() != w.tag() {
        return Err(Error::TagMismatch(v.tag().to_string(), w.tag().to_string()));
    }
    Ok(())
}

/// Bruhat comparison with a witness when `v` is not below `w`.
pub fn compare_bruhat(v: &SignedPermutation, w: &SignedPermutation) -> Result<BruhatVerdict> {
    check_pair(v, w)?;
    let (rv, rw) = (rank_matrix(v), rank_matrix(w));
    if let Some((row, col, lhs, rhs)) = rv.first_excess(&rw) {
        return Ok(BruhatVerdict {
            leq: false,
            witness: Some(BruhatWitness::Entry { row, col, lhs, rhs }),
        });
    }
    if let Some(&(a, b)) = parity_failures(v, w)?.first() {
        let n = v.n() as i32;
        let row = -(a as i32 - 1);
        return Ok(BruhatVerdict {
            leq: false,
            witness: Some(BruhatWitness::Parity {
                a,
                b,
                lhs: rv.get(row, n),
                rhs: rw.get(row, n),
            }),
        });
    }
    Ok(BruhatVerdict {
        leq: true,
        witness: None,
    })
}

/// Pairs `(a, b)` at which the type D parity clause fails: the rectangle
/// `[-a,a] x [-b,b]` is empty for both, the entries at `(-(a-1), b-1)` agree
/// and those at `(-(a-1), n)` differ in parity. Empty outside type D.
pub fn parity_failures(v: &SignedPermutation, w: &SignedPermutation) -> Result<Vec<(usize, usize)>> {
    check_pair(v, w)?;
    if v.tag() != GroupTag::D {
        return Ok(Vec::new());
    }
    let (rv, rw) = (rank_matrix(v), rank_matrix(w));
    let n = v.n();
    let mut out = Vec::new();
    for a in 2..=n {
        let row = -(a as i32 - 1);
        for b in 2..=n {
            if !(empty_rectangle(v, a, b) && empty_rectangle(w, a, b)) {
                continue;
            }
            let col = b as i32 - 1;
            if rv.get(row, col) == rw.get(row, col) && rv.get(row, n as i32) % 2 != rw.get(row, n as i32) % 2 {
                out.push((a, b));
            }
        }
    }
    Ok(out)
}

pub fn leq_bruhat(v: &SignedPermutation, w: &SignedPermutation) -> Result<bool> {
    compare_bruhat(v, w).map(|c| c.leq)
}

/// `R_v^* <= R_w^*` for involutions.
pub fn leq_star(v: &SignedPermutation, w: &SignedPermutation) -> Result<bool> {
    check_pair(v, w)?;
    for x in [v, w] {
        if !x.is_involution() {
            return Err(Error::NotInvolution(x.to_text()));
        }
    }
    Ok(rank_matrix_star(v).leq(&rank_matrix_star(w)))
}

/// Bruhat order of a whole group computed from the definition: the
/// reflexive-transitive closure of `wt -> w` over reflections `t` with
/// `l(wt) = l(w) - 1`.
pub struct BruhatOracle {
    index: HashMap<SignedPermutation, usize>,
    elements: Vec<SignedPermutation>,
    /// `down[k]` is the lower interval of `elements[k]` as a bitset.
    down: Vec<Vec<u64>>,
}

impl BruhatOracle {
    pub fn new(n: usize, tag: GroupTag) -> Self {
        let mut elements: Vec<SignedPermutation> = enumerate_group(n, tag).collect();
        elements.sort_by_key(|w| w.length());
        let index: HashMap<_, _> = elements
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), k))
            .collect();
        let ty = match tag {
            GroupTag::A => CartanType::A,
            GroupTag::BC => CartanType::B,
            GroupTag::D => CartanType::D,
        };
        let sys = RootSystem { ty, n };
        let reflections: Vec<SignedPermutation> = sys
            .positive_roots()
            .iter()
            .map(|r| reflection(r, &sys).expect("positive roots lie in the system"))
            .collect();
        let words = elements.len().div_ceil(64);
        let lengths: Vec<usize> = elements.iter().map(|w| w.length()).collect();
        let mut down: Vec<Vec<u64>> = Vec::with_capacity(elements.len());
        for (k, w) in elements.iter().enumerate() {
            let mut bits = vec![0u64; words];
            bits[k / 64] |= 1 << (k % 64);
            for t in &reflections {
                let u = w.compose_unchecked(t);
                let j = index[&u];
                if lengths[j] + 1 == lengths[k] {
                    for (b, d) in bits.iter_mut().zip(&down[j]) {
                        *b |= d;
                    }
                }
            }
            down.push(bits);
        }
        Self {
            index,
            elements,
            down,
        }
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn leq(&self, v: &SignedPermutation, w: &SignedPermutation) -> bool {
        let (i, j) = (self.index[v], self.index[w]);
        self.down[j][i / 64] >> (i % 64) & 1 == 1
    }
}

/// One-off oracle query; builds the whole group order.
pub fn bruhat_oracle(v: &SignedPermutation, w: &SignedPermutation) -> Result<bool> {
    check_pair(v, w)?;
    Ok(BruhatOracle::new(v.n(), v.tag()).leq(v, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed_perm::enumerate_involutions;

    fn sp(tag: GroupTag, v: &[i32]) -> SignedPermutation {
        SignedPermutation::new(tag, v.to_vec()).unwrap()
    }

    #[test]
    fn rook_and_rank_example() {
        let w = sp(GroupTag::A, &[4, 2, 5, 1, 3, 6]);
        let x = rook_matrix(&w);
        assert_eq!(x.rooks(), vec![(4, 1), (2, 2), (5, 3), (1, 4), (3, 5), (6, 6)]);
        let r = rank_matrix(&w);
        let expected = vec![
            vec![1, 2, 3, 4, 5, 6],
            vec![1, 2, 3, 3, 4, 5],
            vec![1, 1, 2, 2, 3, 4],
            vec![1, 1, 2, 2, 2, 3],
            vec![0, 0, 1, 1, 1, 2],
            vec![0, 0, 0, 0, 0, 1],
        ];
        assert_eq!(r.rows(), expected.as_slice());
        // Naive count of rooks weakly South-West.
        for i in 1..=6 {
            for j in 1..=6 {
                let count = (1..=j).filter(|&c| w.apply(c) >= i).count() as u32;
                assert_eq!(r.get(i, j), count);
            }
        }
        assert_eq!(rank_matrix_star(&w).get(5, 3), 1);
        assert_eq!(rank_matrix_star(&w).get(3, 3), 0);
    }

    #[test]
    fn identity_rank_matrix() {
        let id = SignedPermutation::identity(4, GroupTag::A);
        let r = rank_matrix(&id);
        for i in 1..=4 {
            for j in 1..=4 {
                assert_eq!(r.get(i, j), (j - i + 1).max(0) as u32);
            }
        }
        assert!(rank_matrix_star(&id).rows().iter().flatten().all(|&v| v == 0));
    }

    #[test]
    fn signed_rook_pattern() {
        let w = sp(GroupTag::D, &[-2, 4, 1, -3]);
        let x = rook_matrix(&w);
        assert_eq!(x.get(-2, 1), 1);
        assert_eq!(x.get(3, -4), 1);
        for row in x.to_dense() {
            assert_eq!(row.iter().map(|&v| v as u32).sum::<u32>(), 1);
        }
    }

    #[test]
    fn rank_matrix_monotone() {
        for w in enumerate_group(3, GroupTag::BC) {
            let r = rank_matrix(&w);
            let d = r.dim();
            for i in 0..d {
                for j in 0..d {
                    if j + 1 < d {
                        assert!(r.get_phys(i, j) <= r.get_phys(i, j + 1));
                    }
                    if i > 0 {
                        assert!(r.get_phys(i, j) <= r.get_phys(i - 1, j));
                    }
                }
            }
        }
    }

    #[test]
    fn empty_rectangle_example() {
        let w = sp(GroupTag::D, &[-2, 4, 1, -3]);
        assert!(empty_rectangle(&w, 4, 3));
        assert!(empty_rectangle(&w, 4, 4));
        for a in 1..=4 {
            for b in 1..=4 {
                if a <= 2 || b <= 1 {
                    assert!(!empty_rectangle(&w, a, b), "({a},{b})");
                }
            }
        }
    }

    #[test]
    fn oracle_agreement_small() {
        for (n, tag) in [(3, GroupTag::A), (3, GroupTag::BC), (3, GroupTag::D), (4, GroupTag::D)] {
            let oracle = BruhatOracle::new(n, tag);
            for v in oracle.elements() {
                for w in oracle.elements() {
                    assert_eq!(
                        leq_bruhat(v, w).unwrap(),
                        oracle.leq(v, w),
                        "{tag} {v} {w}"
                    );
                }
            }
        }
    }

    #[test]
    fn antisymmetry() {
        for tag in [GroupTag::A, GroupTag::BC, GroupTag::D] {
            let all: Vec<_> = enumerate_group(3, tag).collect();
            for v in &all {
                for w in &all {
                    if v != w {
                        assert!(!(leq_bruhat(v, w).unwrap() && leq_bruhat(w, v).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn star_order_on_c3() {
        let invs: Vec<_> = enumerate_involutions(3, GroupTag::BC, false).collect();
        let id = SignedPermutation::identity(3, GroupTag::BC);
        for v in &invs {
            assert!(leq_star(&id, v).unwrap());
            for w in &invs {
                assert_eq!(leq_star(v, w).unwrap(), leq_bruhat(v, w).unwrap());
            }
        }
        assert!(leq_star(&sp(GroupTag::BC, &[2, 3, 1]), &id).is_err());
    }

    #[test]
    fn mismatch_errors() {
        let v = SignedPermutation::identity(3, GroupTag::BC);
        let w = SignedPermutation::identity(4, GroupTag::BC);
        assert!(leq_bruhat(&v, &w).is_err());
        let d = SignedPermutation::identity(3, GroupTag::D);
        assert!(leq_bruhat(&v, &d).is_err());
    }

    #[test]
    fn csv_export() {
        let r = rank_matrix(&SignedPermutation::identity(2, GroupTag::BC));
        let csv = r.to_csv();
        assert_eq!(csv.lines().next().unwrap(), "label,1,2,-2,-1");
        assert_eq!(csv.lines().nth(4).unwrap(), "-1,0,0,0,1");
    }
}
