//! Positive and simple roots of the classical root systems, realized in
//! `R^n` with the standard basis `e1, ..., en`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signed_perm::GroupTag;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
}

impl CartanType {
    pub fn group_tag(self) -> GroupTag {
        match self {
            CartanType::A => GroupTag::A,
            CartanType::B | CartanType::C => GroupTag::BC,
            CartanType::D => GroupTag::D,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(CartanType::A),
            "B" | "b" => Ok(CartanType::B),
            "C" | "c" => Ok(CartanType::C),
            "D" | "d" => Ok(CartanType::D),
            other => Err(Error::Parse(format!("unknown type `{other}`"))),
        }
    }
}

/// A positive root, stored symbolically. Indices are 1-based.
///
/// Serialized as its text form, e.g. `"e1-e2"` or `"2e4"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Root {
    /// `e_i - e_j`, `i < j`.
    Diff(usize, usize),
    /// `e_i + e_j`, `i < j`.
    Sum(usize, usize),
    /// `e_i` (type B).
    Short(usize),
    /// `2 e_i` (type C).
    Long(usize),
}

impl Root {
    /// `e_i + e_j` with its indices sorted.
    pub fn sum(i: usize, j: usize) -> Self {
        Root::Sum(i.min(j), i.max(j))
    }

    /// Coordinates in `R^n`.
    pub fn coords(&self, n: usize) -> Vec<i32> {
        let mut v = vec![0; n];
        match *self {
            Root::Diff(i, j) => {
                v[i - 1] += 1;
                v[j - 1] -= 1;
            }
            Root::Sum(i, j) => {
                v[i - 1] += 1;
                v[j - 1] += 1;
            }
            Root::Short(i) => v[i - 1] = 1,
            Root::Long(i) => v[i - 1] = 2,
        }
        v
    }

    /// Largest index the root involves.
    pub fn max_index(&self) -> usize {
        match *self {
            Root::Diff(i, j) | Root::Sum(i, j) => i.max(j),
            Root::Short(i) | Root::Long(i) => i,
        }
    }

    /// The signed letters `(x, y)` with the root equal to `e_x - e_y`,
    /// where `e_{-k} = -e_k`. Short and long roots give `(i, -i)`.
    pub fn letters(&self) -> (i32, i32) {
        match *self {
            Root::Diff(i, j) => (i as i32, j as i32),
            Root::Sum(i, j) => (i as i32, -(j as i32)),
            Root::Short(i) | Root::Long(i) => (i as i32, -(i as i32)),
        }
    }

    pub fn is_diff(&self) -> bool {
        matches!(self, Root::Diff(..))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Root::Diff(i, j) => write!(f, "e{i}-e{j}"),
            Root::Sum(i, j) => write!(f, "e{i}+e{j}"),
            Root::Short(i) => write!(f, "e{i}"),
            Root::Long(i) => write!(f, "2e{i}"),
        }
    }
}

fn parse_basis_index(s: &str) -> Result<usize> {
    let bad = || Error::Parse(format!("bad basis vector `{s}`"));
    let rest = s.trim().strip_prefix('e').ok_or_else(bad)?;
    let k: usize = rest.parse().map_err(|_| bad())?;
    if k == 0 {
        return Err(bad());
    }
    Ok(k)
}

impl FromStr for Root {
    type Err = Error;

    /// Parses `e1-e2`, `e1+e5`, `e3` and `2e4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('2') {
            return Ok(Root::Long(parse_basis_index(rest)?));
        }
        if let Some((a, b)) = s.split_once('-') {
            let (i, j) = (parse_basis_index(a)?, parse_basis_index(b)?);
            if i >= j {
                return Err(Error::Parse(format!("`{s}` is not a positive root")));
            }
            return Ok(Root::Diff(i, j));
        }
        if let Some((a, b)) = s.split_once('+') {
            let (i, j) = (parse_basis_index(a)?, parse_basis_index(b)?);
            if i == j {
                return Err(Error::Parse(format!("`{s}` is not a root")));
            }
            return Ok(Root::sum(i, j));
        }
        Ok(Root::Short(parse_basis_index(s)?))
    }
}

/// Parses a comma-separated root list such as `e1-e2,e3+e4`.
impl From<Root> for String {
    fn from(r: Root) -> String {
        r.to_string()
    }
}

impl TryFrom<String> for Root {
    type Error = Error;
    fn try_from(s: String) -> Result<Root> {
        s.parse()
    }
}

pub fn parse_roots(s: &str) -> Result<Vec<Root>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(str::parse)
        .collect()
}

/// A classical root system `A_{n-1}`, `B_n`, `C_n` or `D_n` on `n` letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootSystem {
    pub ty: CartanType,
    pub n: usize,
}

impl RootSystem {
    pub fn new(ty: CartanType, n: usize) -> Result<Self> {
        let min = if ty == CartanType::D { 2 } else { 1 };
        if n < min {
            return Err(Error::InvalidSystem(format!("{ty}{n} needs rank >= {min}")));
        }
        Ok(Self { ty, n })
    }

    pub fn group_tag(&self) -> GroupTag {
        self.ty.group_tag()
    }

    pub fn contains(&self, root: &Root) -> bool {
        let n = self.n;
        match *root {
            Root::Diff(i, j) => 1 <= i && i < j && j <= n,
            Root::Sum(i, j) => self.ty != CartanType::A && 1 <= i && i < j && j <= n,
            Root::Short(i) => self.ty == CartanType::B && 1 <= i && i <= n,
            Root::Long(i) => self.ty == CartanType::C && 1 <= i && i <= n,
        }
    }

    pub fn check(&self, root: &Root) -> Result<()> {
        if self.contains(root) {
            Ok(())
        } else {
            Err(Error::RootNotInSystem {
                root: root.to_string(),
                system: self.to_string(),
            })
        }
    }

    /// Positive roots: differences, then sums, then short or long roots,
    /// each block in lexicographic index order.
    pub fn positive_roots(&self) -> Vec<Root> {
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(Root::Diff(i, j));
            }
        }
        if self.ty != CartanType::A {
            for i in 1..=n {
                for j in i + 1..=n {
                    out.push(Root::Sum(i, j));
                }
            }
        }
        match self.ty {
            CartanType::B => out.extend((1..=n).map(Root::Short)),
            CartanType::C => out.extend((1..=n).map(Root::Long)),
            _ => {}
        }
        out
    }

    /// Simple roots `a_1, ..., a_n` (`a_1, ..., a_{n-1}` for type A).
    ///
    /// The last simple root of `D_n` is `e_{n-1} + e_n`.
    pub fn simple_roots(&self) -> Vec<Root> {
        let n = self.n;
        let mut out: Vec<Root> = (1..n).map(|k| Root::Diff(k, k + 1)).collect();
        match self.ty {
            CartanType::A => {}
            CartanType::B => out.push(Root::Short(n)),
            CartanType::C => out.push(Root::Long(n)),
            CartanType::D => out.push(Root::Sum(n - 1, n)),
        }
        out
    }

    /// Whether an integer vector is a root (of either sign).
    pub fn is_root_vector(&self, v: &[i32]) -> bool {
        let nz: Vec<i32> = v.iter().copied().filter(|&x| x != 0).collect();
        match (self.ty, nz.as_slice()) {
            (CartanType::A, [a, b]) => a + b == 0 && a.abs() == 1,
            (CartanType::A, _) => false,
            (_, [a, b]) => a.abs() == 1 && b.abs() == 1,
            (CartanType::B, [a]) => a.abs() == 1,
            (CartanType::C, [a]) => a.abs() == 2,
            _ => false,
        }
    }

    /// Coordinates of `v` in the basis of simple roots, scaled by 2 so that
    /// they are always integers.
    pub fn doubled_simple_coords(&self, v: &[i32]) -> Vec<i32> {
        let n = self.n;
        let mut partial = Vec::with_capacity(n);
        let mut s = 0;
        for &x in v {
            s += x;
            partial.push(s);
        }
        match self.ty {
            CartanType::A => partial[..n - 1].iter().map(|p| 2 * p).collect(),
            CartanType::B => partial.iter().map(|p| 2 * p).collect(),
            CartanType::C => {
                let mut out: Vec<i32> = partial[..n - 1].iter().map(|p| 2 * p).collect();
                out.push(partial[n - 1]);
                out
            }
            CartanType::D => {
                let mut out: Vec<i32> = partial[..n - 2].iter().map(|p| 2 * p).collect();
                let head = partial[n - 2];
                out.push(head - v[n - 1]);
                out.push(head + v[n - 1]);
                out
            }
        }
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ty {
            CartanType::A => write!(f, "A{} (on {} letters)", self.n.saturating_sub(1), self.n),
            ty => write!(f, "{ty}{}", self.n),
        }
    }
}

fn dot(a: &[i32], b: &[i32]) -> i32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Euclidean orthogonality of two roots.
pub fn orthogonal(a: &Root, b: &Root) -> bool {
    let n = a.max_index().max(b.max_index());
    dot(&a.coords(n), &b.coords(n)) == 0
}

/// Neither `a + b` nor `a - b` is a root of `sys`.
pub fn strongly_orthogonal(sys: &RootSystem, a: &Root, b: &Root) -> bool {
    let (u, v) = (a.coords(sys.n), b.coords(sys.n));
    let sum: Vec<i32> = u.iter().zip(&v).map(|(x, y)| x + y).collect();
    let diff: Vec<i32> = u.iter().zip(&v).map(|(x, y)| x - y).collect();
    !sys.is_root_vector(&sum) && !sys.is_root_vector(&diff)
}

/// `a <= b` in the natural order: `b - a` is zero or a sum of positive roots.
pub fn natural_order_leq(sys: &RootSystem, a: &Root, b: &Root) -> bool {
    let diff: Vec<i32> = b
        .coords(sys.n)
        .iter()
        .zip(a.coords(sys.n))
        .map(|(x, y)| x - y)
        .collect();
    if sys.ty == CartanType::A && diff.iter().sum::<i32>() != 0 {
        return false;
    }
    sys.doubled_simple_coords(&diff)
        .iter()
        .all(|&c| c >= 0 && c % 2 == 0)
}
