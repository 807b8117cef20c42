//! Ordered index tuples, minors and sums of minors over tuple families.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_field::Scalar;
use crate::index::LabelMap;
use crate::matrix_rep::Matrix;

/// An ordered tuple of distinct nonzero labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IndexTuple(Vec<i32>);

impl IndexTuple {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        if entries.contains(&0) || !entries.iter().all_unique() {
            return Err(Error::InvalidTuple(format!("{entries:?}")));
        }
        Ok(Self(entries))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: i32) -> bool {
        self.0.contains(&x)
    }

    fn position(&self, x: i32) -> Result<usize> {
        self.0
            .iter()
            .position(|&v| v == x)
            .ok_or_else(|| Error::InvalidTuple(format!("{x} not in {self}")))
    }

    /// Concatenation.
    pub fn concat(&self, other: &IndexTuple) -> Result<Self> {
        Self::new(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// `T` with the entry `old` replaced in place by `new`. Entries need not stay
/// distinct (a repeated row makes a minor vanish).
pub fn tuple_replace(t: &IndexTuple, old: i32, new: i32) -> Result<Vec<i32>> {
    let k = t.position(old)?;
    let mut v = t.0.clone();
    v[k] = new;
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

/// How the two removed entries `p_i, p_j` are put back at the end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairRule {
    /// `+` appends `p_i, -p_j`; `-` appends `p_j, -p_i`.
    Crossed,
    /// `+` appends `p_i, -p_i`; `-` appends `p_j, -p_j`.
    #[default]
    Mirrored,
}

/// Removes `p_i` and `p_j` (with `p_i` before `p_j` in `t`) and appends a
/// pair according to `rule` and `sign`.
pub fn tuple_plus_minus(t: &IndexTuple, pi: i32, pj: i32, sign: Sign, rule: PairRule) -> Result<Vec<i32>> {
    let (a, b) = (t.position(pi)?, t.position(pj)?);
    if a == b {
        return Err(Error::InvalidTuple(format!("{pi} and {pj} coincide")));
    }
    let mut v: Vec<i32> = t
        .0
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != a && k != b)
        .map(|(_, &x)| x)
        .collect();
    let tail = match (rule, sign) {
        (PairRule::Crossed, Sign::Plus) => [pi, -pj],
        (PairRule::Crossed, Sign::Minus) => [pj, -pi],
        (PairRule::Mirrored, Sign::Plus) => [pi, -pi],
        (PairRule::Mirrored, Sign::Minus) => [pj, -pj],
    };
    v.extend(tail);
    Ok(v)
}

/// The family of tuples obtained from `p` by applying `+` or `-` to the
/// consecutive pairs of `pairs`, in order. Has `2^{|pairs|/2}` members
/// counted with multiplicity.
pub fn s_family(p: &IndexTuple, pairs: &IndexTuple, rule: PairRule) -> Result<Vec<Vec<i32>>> {
    if pairs.len() % 2 == 1 {
        return Err(Error::InvalidTuple(format!("{pairs} has odd length")));
    }
    if let Some(&x) = pairs.entries().iter().find(|&&x| !p.contains(x)) {
        return Err(Error::InvalidTuple(format!("{x} not in {p}")));
    }
    let mut family = vec![p.0.clone()];
    for pair in pairs.entries().chunks(2) {
        let mut next = Vec::with_capacity(family.len() * 2);
        for t in family {
            // May carry repeated entries; such members give zero minors.
            let t = IndexTuple(t);
            for sign in [Sign::Plus, Sign::Minus] {
                next.push(tuple_plus_minus(&t, pair[0], pair[1], sign, rule)?);
            }
        }
        family = next;
    }
    Ok(family)
}

/// Determinant of the submatrix of `x` on rows `rows` and columns `cols`,
/// given as labels, in the given order.
pub fn minor<S: Scalar>(x: &Matrix<S>, labels: &LabelMap, rows: &[i32], cols: &[i32]) -> Result<S> {
    if rows.len() != cols.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} rows against {} columns",
            rows.len(),
            cols.len()
        )));
    }
    let phys = |ls: &[i32]| -> Result<Vec<usize>> {
        ls.iter()
            .map(|&l| {
                labels
                    .phys(l)
                    .ok_or_else(|| Error::InvalidTuple(format!("label {l} out of range")))
            })
            .collect()
    };
    let (r, c) = (phys(rows)?, phys(cols)?);
    if !r.iter().all_unique() || !c.iter().all_unique() {
        return Ok(S::zero());
    }
    let block: Vec<Vec<S>> = r
        .iter()
        .map(|&i| c.iter().map(|&j| x.get(i, j).clone()).collect())
        .collect();
    Ok(laplace(&block))
}

fn laplace<S: Scalar>(m: &[Vec<S>]) -> S {
    let n = m.len();
    match n {
        0 => return S::one(),
        1 => return m[0][0].clone(),
        _ => {}
    }
    let mut acc = S::zero();
    for (col, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let sub: Vec<Vec<S>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = a.mul_ref(&laplace(&sub));
        acc = if col % 2 == 0 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
    }
    acc
}

/// `sum_{P_0 in S_{P,P'}} minor(x, P_0, Q)`.
pub fn d_poly<S: Scalar>(
    x: &Matrix<S>,
    labels: &LabelMap,
    p: &IndexTuple,
    pairs: &IndexTuple,
    q: &IndexTuple,
    rule: PairRule,
) -> Result<S> {
    let mut acc = S::zero();
    for rows in s_family(p, pairs, rule)? {
        acc = acc.add_ref(&minor(x, labels, &rows, q.entries())?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_field::CycloElement;
    use crate::root_system::CartanType;

    fn t(v: &[i32]) -> IndexTuple {
        IndexTuple::new(v.to_vec()).unwrap()
    }

    #[test]
    fn replace() {
        assert_eq!(tuple_replace(&t(&[1, 2, 3]), 2, 5).unwrap(), vec![1, 5, 3]);
        assert_eq!(tuple_replace(&t(&[1, 2, -3, -4]), -4, 7).unwrap(), vec![1, 2, -3, 7]);
        let once = t(&tuple_replace(&t(&[1, 2, 3]), 2, 5).unwrap());
        assert_eq!(tuple_replace(&once, 5, 2).unwrap(), vec![1, 2, 3]);
        assert!(tuple_replace(&t(&[1, 2]), 4, 5).is_err());
        assert!(IndexTuple::new(vec![1, 1]).is_err());
    }

    #[test]
    fn plus_minus_crossed() {
        let p = t(&[1, 2, -3, -4]);
        let plus = tuple_plus_minus(&p, 2, -4, Sign::Plus, PairRule::Crossed).unwrap();
        assert_eq!(plus, vec![1, -3, 2, 4]);
        let minus = tuple_plus_minus(&p, 2, -4, Sign::Minus, PairRule::Crossed).unwrap();
        assert_eq!(minus, vec![1, -3, -4, -2]);
        assert!(tuple_plus_minus(&p, 2, 5, Sign::Plus, PairRule::Crossed).is_err());
    }

    #[test]
    fn family_example() {
        let p = t(&[1, 2, -3, -4]);
        let pairs = t(&[1, -3, 2, -4]);
        let fam = s_family(&p, &pairs, PairRule::Mirrored).unwrap();
        assert_eq!(
            fam,
            vec![vec![1, -1, 2, -2], vec![1, -1, -4, 4], vec![-3, 3, 2, -2], vec![-3, 3, -4, 4]]
        );
        assert_eq!(s_family(&p, &IndexTuple::empty(), PairRule::Mirrored).unwrap(), vec![vec![1, 2, -3, -4]]);
        assert!(s_family(&p, &t(&[1, -3, 2]), PairRule::Mirrored).is_err());
        assert!(s_family(&p, &t(&[1, 5]), PairRule::Mirrored).is_err());
        for len in [0, 2, 4] {
            let fam = s_family(&t(&[5, 4, -4, -5, 1]), &t(&[5, 4, -4, -5][..len]), PairRule::Crossed).unwrap();
            assert_eq!(fam.len(), 1 << (len / 2));
        }
    }

    #[test]
    fn minors() {
        let labels = LabelMap::for_algebra(CartanType::D, 2);
        let rows: Vec<Vec<CycloElement>> = (0..4)
            .map(|r| (0..4).map(|c| CycloElement::integer((r * 4 + c + (r * c) % 3) as i64)).collect())
            .collect();
        let x = Matrix::from_rows(rows).unwrap();
        assert_eq!(minor(&x, &labels, &[-1], &[2]).unwrap(), x.get(3, 1).clone());
        assert!(minor(&x, &labels, &[-1, -1], &[1, 2]).unwrap().is_zero());
        assert_eq!(minor(&x, &labels, &[], &[]).unwrap(), CycloElement::one());
        assert!(minor(&x, &labels, &[1], &[1, 2]).is_err());
        let d = minor(&x, &labels, &[-2, -1], &[1, 2]).unwrap();
        let expected = x.get(2, 0) * x.get(3, 1) - x.get(2, 1) * x.get(3, 0);
        assert_eq!(d, expected);
        let swapped = minor(&x, &labels, &[-1, -2], &[1, 2]).unwrap();
        assert_eq!(swapped, -&d);
        assert_eq!(
            d_poly(&x, &labels, &t(&[-2, -1]), &IndexTuple::empty(), &t(&[1, 2]), PairRule::Mirrored).unwrap(),
            d
        );
    }
}
