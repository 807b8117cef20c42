//! Weyl groups of types A, B/C and D as (even-)signed permutations.
//!
//! An element is stored by its values on `1, ..., n`; the values on negative
//! letters follow from `w(-i) = -w(i)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{Root, RootSystem};

/// Which Weyl group a signed permutation lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupTag {
    /// The symmetric group `S_n`.
    A,
    /// The hyperoctahedral group, Weyl group of `B_n` and `C_n`.
    BC,
    /// The even-signed hyperoctahedral group.
    D,
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupTag::A => "A",
            GroupTag::BC => "BC",
            GroupTag::D => "D",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SignedPermutation {
    tag: GroupTag,
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(tag: GroupTag, images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[a] = true;
        }
        let negatives = images.iter().filter(|&&v| v < 0).count();
        match tag {
            GroupTag::A if negatives > 0 => Err(Error::InvalidPermutation(format!(
                "{images:?} has sign changes but type A"
            ))),
            GroupTag::D if negatives % 2 == 1 => Err(Error::InvalidPermutation(format!(
                "{images:?} has an odd number of sign changes but type D"
            ))),
            _ => Ok(Self { tag, images }),
        }
    }

    pub fn identity(n: usize, tag: GroupTag) -> Self {
        Self {
            tag,
            images: (1..=n as i32).collect(),
        }
    }

    /// Parses `-5,2,4,3,-1` (commas or whitespace). A two-line form whose
    /// first line is `1 2 ... n` is also accepted.
    pub fn parse(tag: GroupTag, s: &str) -> Result<Self> {
        let rows: Vec<&str> = s
            .split(['/', '\n', ';'])
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .collect();
        let parse_row = |r: &str| -> Result<Vec<i32>> {
            r.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<i32>()
                        .map_err(|_| Error::Parse(format!("bad image `{t}`")))
                })
                .collect()
        };
        let images = match rows.as_slice() {
            [one] => parse_row(one)?,
            [top, bottom] => {
                let top = parse_row(top)?;
                let bottom = parse_row(bottom)?;
                if top != (1..=bottom.len() as i32).collect::<Vec<_>>() {
                    return Err(Error::Parse("top row must be 1 2 ... n".into()));
                }
                bottom
            }
            _ => return Err(Error::Parse(format!("cannot parse permutation `{s}`"))),
        };
        Self::new(tag, images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn tag(&self) -> GroupTag {
        self.tag
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// `w(x)` for a letter `x` in `[±n]`.
    pub fn apply(&self, x: i32) -> i32 {
        if x > 0 {
            self.images[x as usize - 1]
        } else {
            -self.images[(-x) as usize - 1]
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch(self.n(), other.n()));
        }
        if self.tag != other.tag {
            return Err(Error::TagMismatch(self.tag.to_string(), other.tag.to_string()));
        }
        Ok(())
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Self {
            tag: self.tag,
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            let pos = i as i32 + 1;
            if v > 0 {
                images[v as usize - 1] = pos;
            } else {
                images[(-v) as usize - 1] = -pos;
            }
        }
        Self { tag: self.tag, images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    pub fn is_involution(&self) -> bool {
        (1..=self.n() as i32).all(|i| self.apply(self.apply(i)) == i)
    }

    /// No letter `i > 0` with `w(i) = -i`.
    pub fn is_basis(&self) -> bool {
        self.is_involution() && self.images.iter().enumerate().all(|(i, &v)| v != -(i as i32 + 1))
    }

    pub fn negative_count(&self) -> usize {
        self.images.iter().filter(|&&v| v < 0).count()
    }

    /// Length in the simple reflections of the group: the number of positive
    /// roots sent to negative roots.
    pub fn length(&self) -> usize {
        let n = self.n();
        let key = |x: i32| -> i32 {
            if x > 0 {
                x
            } else {
                2 * n as i32 + 1 + x
            }
        };
        let inverted = |(x, y): (i32, i32)| key(self.apply(x)) > key(self.apply(y));
        let mut count = 0;
        for i in 1..=n as i32 {
            for j in i + 1..=n as i32 {
                count += inverted((i, j)) as usize;
                if self.tag != GroupTag::A {
                    count += inverted((i, -j)) as usize;
                }
            }
            if self.tag == GroupTag::BC {
                count += inverted((i, -i)) as usize;
            }
        }
        count
    }

    /// Structure-preserving rendering `-5,2,4,3,-1`.
    pub fn to_text(&self) -> String {
        self.images.iter().join(",")
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.images.iter().join(","))
    }
}

/// The reflection `s_a` as a signed permutation.
pub fn reflection(root: &Root, sys: &RootSystem) -> Result<SignedPermutation> {
    sys.check(root)?;
    let (x, y) = root.letters();
    let mut w = SignedPermutation::identity(sys.n, sys.group_tag());
    let mut set = |from: i32, to: i32| {
        if from > 0 {
            w.images[from as usize - 1] = to;
        } else {
            w.images[(-from) as usize - 1] = -to;
        }
    };
    // s_{e_x - e_y} swaps x <-> y and -y <-> -x.
    set(x, y);
    set(y, x);
    Ok(w)
}

/// The simple reflections of the group, in the order of the simple roots.
pub fn simple_reflections(n: usize, tag: GroupTag) -> Vec<SignedPermutation> {
    let sys = RootSystem {
        ty: match tag {
            GroupTag::A => crate::root_system::CartanType::A,
            GroupTag::BC => crate::root_system::CartanType::B,
            GroupTag::D => crate::root_system::CartanType::D,
        },
        n,
    };
    sys.simple_roots()
        .iter()
        .map(|r| reflection(r, &sys).expect("simple roots lie in the system"))
        .collect()
}

/// Distances from the identity in the Cayley graph on simple reflections,
/// for every group element.
pub fn bfs_lengths(n: usize, tag: GroupTag) -> HashMap<SignedPermutation, usize> {
    let gens = simple_reflections(n, tag);
    let id = SignedPermutation::identity(n, tag);
    let mut dist = HashMap::new();
    dist.insert(id.clone(), 0);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for s in &gens {
            let ws = w.compose_unchecked(s);
            if !dist.contains_key(&ws) {
                dist.insert(ws.clone(), d + 1);
                queue.push_back(ws);
            }
        }
    }
    dist
}

/// Length of `w` as a graph distance, found by breadth-first search.
pub fn bfs_length_oracle(w: &SignedPermutation) -> usize {
    let gens = simple_reflections(w.n(), w.tag());
    let id = SignedPermutation::identity(w.n(), w.tag());
    let mut seen = HashMap::from([(id.clone(), 0usize)]);
    let mut queue = VecDeque::from([id]);
    while let Some(u) = queue.pop_front() {
        let d = seen[&u];
        if &u == w {
            return d;
        }
        for s in &gens {
            let us = u.compose_unchecked(s);
            if !seen.contains_key(&us) {
                seen.insert(us.clone(), d + 1);
                queue.push_back(us);
            }
        }
    }
    unreachable!("the simple reflections generate the group")
}

/// Every element of the group, each exactly once.
pub fn enumerate_group(n: usize, tag: GroupTag) -> impl Iterator<Item = SignedPermutation> {
    let masks: Vec<u32> = match tag {
        GroupTag::A => vec![0],
        GroupTag::BC => (0..1u32 << n).collect(),
        GroupTag::D => (0..1u32 << n).filter(|m| m.count_ones() % 2 == 0).collect(),
    };
    (1..=n as i32).permutations(n).flat_map(move |perm| {
        masks
            .clone()
            .into_iter()
            .map(move |mask| SignedPermutation {
                tag,
                images: perm
                    .iter()
                    .enumerate()
                    .map(|(k, &v)| if mask >> k & 1 == 1 { -v } else { v })
                    .collect(),
            })
    })
}

/// Every involution of the group; with `basis_only`, those without a letter
/// `i` such that `w(i) = -i`.
pub fn enumerate_involutions(
    n: usize,
    tag: GroupTag,
    basis_only: bool,
) -> impl Iterator<Item = SignedPermutation> {
    fn rec(images: &mut Vec<i32>, tag: GroupTag, basis_only: bool, out: &mut Vec<SignedPermutation>) {
        let Some(i) = images.iter().position(|&v| v == 0) else {
            let w = SignedPermutation {
                tag,
                images: images.clone(),
            };
            if tag != GroupTag::D || w.negative_count().is_multiple_of(2) {
                out.push(w);
            }
            return;
        };
        let li = i as i32 + 1;
        images[i] = li;
        rec(images, tag, basis_only, out);
        if tag != GroupTag::A && !basis_only {
            images[i] = -li;
            rec(images, tag, basis_only, out);
        }
        for j in i + 1..images.len() {
            if images[j] != 0 {
                continue;
            }
            let lj = j as i32 + 1;
            images[i] = lj;
            images[j] = li;
            rec(images, tag, basis_only, out);
            if tag != GroupTag::A {
                images[i] = -lj;
                images[j] = -li;
                rec(images, tag, basis_only, out);
            }
            images[j] = 0;
        }
        images[i] = 0;
    }
    let mut out = Vec::new();
    rec(&mut vec![0; n], tag, basis_only, &mut out);
    out.into_iter()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::CartanType;

    fn sp(tag: GroupTag, v: &[i32]) -> SignedPermutation {
        SignedPermutation::new(tag, v.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(SignedPermutation::new(GroupTag::A, vec![1, -2]).is_err());
        assert!(SignedPermutation::new(GroupTag::D, vec![-1, 2]).is_err());
        assert!(SignedPermutation::new(GroupTag::BC, vec![1, 1]).is_err());
        assert!(SignedPermutation::new(GroupTag::BC, vec![1, 3]).is_err());
        assert!(SignedPermutation::new(GroupTag::D, vec![-1, -2]).is_ok());
    }

    #[test]
    fn composition_examples() {
        let d5 = RootSystem::new(CartanType::D, 5).unwrap();
        let r = |root| reflection(&root, &d5).unwrap();
        let prod = r(Root::Sum(1, 5))
            .compose(&r(Root::Sum(2, 4)))
            .unwrap()
            .compose(&r(Root::Diff(2, 4)))
            .unwrap();
        assert_eq!(prod.images(), &[-5, -2, 3, -4, -1]);

        let w = sp(GroupTag::BC, &[-5, 2, 4, 3, -1]);
        assert!(w.compose(&w).unwrap().is_identity());
        let id = SignedPermutation::identity(5, GroupTag::BC);
        assert_eq!(w.compose(&id).unwrap(), w);
        assert!(w.compose(&SignedPermutation::identity(4, GroupTag::BC)).is_err());
    }

    #[test]
    fn reflection_examples() {
        let b5 = RootSystem::new(CartanType::B, 5).unwrap();
        assert_eq!(reflection(&Root::Diff(2, 4), &b5).unwrap().images(), &[1, 4, 3, 2, 5]);
        assert_eq!(reflection(&Root::Sum(1, 5), &b5).unwrap().images(), &[-5, 2, 3, 4, -1]);
        let b4 = RootSystem::new(CartanType::B, 4).unwrap();
        assert_eq!(reflection(&Root::Short(3), &b4).unwrap().images(), &[1, 2, -3, 4]);
        assert!(reflection(&Root::Long(3), &b4).is_err());
    }

    #[test]
    fn reflections_square_to_identity() {
        for ty in [CartanType::A, CartanType::B, CartanType::C, CartanType::D] {
            let sys = RootSystem::new(ty, 5).unwrap();
            for root in sys.positive_roots() {
                let s = reflection(&root, &sys).unwrap();
                assert!(s.compose(&s).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn length_examples() {
        let id = SignedPermutation::identity(4, GroupTag::BC);
        assert_eq!(id.length(), 0);
        for tag in [GroupTag::A, GroupTag::BC, GroupTag::D] {
            for s in simple_reflections(4, tag) {
                assert_eq!(s.length(), 1);
                assert_eq!(bfs_length_oracle(&s), 1);
            }
        }
        let b5 = RootSystem::new(CartanType::B, 5).unwrap();
        let w = reflection(&Root::Sum(1, 5), &b5)
            .unwrap()
            .compose(&reflection(&Root::Diff(3, 4), &b5).unwrap())
            .unwrap();
        assert_eq!(w.length(), bfs_length_oracle(&w));
        assert_eq!(bfs_length_oracle(&w), 10);
    }

    #[test]
    fn longest_elements() {
        let w0_b2 = sp(GroupTag::BC, &[-1, -2]);
        assert_eq!(bfs_length_oracle(&w0_b2), 4);
        // In D_3 the longest element is -1 on e1, e2 and fixes e3 up to sign: (-1,-2,3).
        let w0_d3 = sp(GroupTag::D, &[-1, -2, 3]);
        assert_eq!(bfs_length_oracle(&w0_d3), 6);
        let max = bfs_lengths(3, GroupTag::D).values().copied().max().unwrap();
        assert_eq!(max, 6);
    }

    #[test]
    fn length_formula_matches_bfs() {
        for (n, tag) in [(3, GroupTag::BC), (4, GroupTag::D), (4, GroupTag::A), (3, GroupTag::A), (3, GroupTag::D)] {
            let dist = bfs_lengths(n, tag);
            assert_eq!(dist.len(), enumerate_group(n, tag).count());
            for (w, d) in dist {
                assert_eq!(w.length(), d, "{w}");
            }
        }
    }

    #[test]
    fn group_sizes() {
        assert_eq!(enumerate_group(2, GroupTag::BC).count(), 8);
        assert_eq!(enumerate_group(3, GroupTag::D).count(), 24);
        assert_eq!(enumerate_group(4, GroupTag::A).count(), 24);
        assert_eq!(enumerate_group(7, GroupTag::BC).count(), 645_120);
        let all: std::collections::HashSet<_> = enumerate_group(4, GroupTag::BC).collect();
        assert_eq!(all.len(), 384);
    }

    #[test]
    fn group_properties() {
        for w in enumerate_group(4, GroupTag::D) {
            assert_eq!(w.negative_count() % 2, 0);
            assert!(w.compose(&w.inverse()).unwrap().is_identity());
        }
    }

    #[test]
    fn involution_counts() {
        let basis2: Vec<_> = enumerate_involutions(2, GroupTag::BC, true).collect();
        assert_eq!(basis2.len(), 3);
        assert!(!basis2.contains(&sp(GroupTag::BC, &[-1, -2])));
        assert!(basis2.contains(&SignedPermutation::identity(2, GroupTag::BC)));
        // Brute force over the whole group.
        for (n, tag) in [(3, GroupTag::BC), (4, GroupTag::D), (4, GroupTag::A)] {
            for basis in [false, true] {
                let brute = enumerate_group(n, tag)
                    .filter(|w| w.is_involution() && (!basis || w.is_basis()))
                    .count();
                assert_eq!(enumerate_involutions(n, tag, basis).count(), brute);
            }
        }
        let brute7 = enumerate_group(7, GroupTag::BC).filter(|w| w.is_basis()).count();
        assert_eq!(brute7, 1303);
        assert_eq!(enumerate_involutions(7, GroupTag::BC, true).count(), 1303);
    }

    #[test]
    fn parsing() {
        let w = SignedPermutation::parse(GroupTag::BC, "-5,2,4,3,-1").unwrap();
        assert_eq!(w.images(), &[-5, 2, 4, 3, -1]);
        let v = SignedPermutation::parse(GroupTag::BC, "1 2 3 4 5 / -5 2 4 3 -1").unwrap();
        assert_eq!(v, w);
        assert_eq!(w.to_text(), "-5,2,4,3,-1");
        assert!(SignedPermutation::parse(GroupTag::BC, "2 1 / 1 2").is_err());
    }
}
