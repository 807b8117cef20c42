use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_field::{CycloElement, Scalar};

/// Triangularity class of a square matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    Zero,
    Diagonal,
    StrictlyUpper,
    StrictlyLower,
    Upper,
    Lower,
    General,
}

/// Dense square matrix over an exact scalar ring, indexed physically.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    dim: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![S::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m.set(k, k, S::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch("rows of unequal length".into()));
        }
        Ok(Self {
            dim,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.dim + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &S) {
        let cell = &mut self.data[r * self.dim + c];
        *cell = cell.add_ref(v);
    }

    pub fn rows(&self) -> Vec<Vec<S>> {
        self.data.chunks(self.dim).map(<[S]>::to_vec).collect()
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / self.dim, k % self.dim, v))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for (r, c, v) in self.nonzeros() {
            t.set(c, r, v.clone());
        }
        t
    }

    pub fn scale(&self, s: &S) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|v| v.mul_ref(s)).collect(),
        }
    }

    pub fn trace(&self) -> S {
        (0..self.dim).fold(S::zero(), |acc, k| acc.add_ref(self.get(k, k)))
    }

    /// Strictly lower-triangular part.
    pub fn low(&self) -> Self {
        let mut m = Self::zeros(self.dim);
        for (r, c, v) in self.nonzeros() {
            if r > c {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn shape(&self) -> Shape {
        let (mut above, mut below, mut diag) = (false, false, false);
        for (r, c, _) in self.nonzeros() {
            match r.cmp(&c) {
                std::cmp::Ordering::Less => above = true,
                std::cmp::Ordering::Greater => below = true,
                std::cmp::Ordering::Equal => diag = true,
            }
        }
        match (above, below, diag) {
            (false, false, false) => Shape::Zero,
            (false, false, true) => Shape::Diagonal,
            (true, false, false) => Shape::StrictlyUpper,
            (false, true, false) => Shape::StrictlyLower,
            (true, false, true) => Shape::Upper,
            (false, true, true) => Shape::Lower,
            (true, true, _) => Shape::General,
        }
    }

    pub fn is_upper(&self) -> bool {
        matches!(
            self.shape(),
            Shape::Zero | Shape::Diagonal | Shape::StrictlyUpper | Shape::Upper
        )
    }

    pub fn is_strictly_lower(&self) -> bool {
        matches!(self.shape(), Shape::Zero | Shape::StrictlyLower)
    }

    pub fn is_diagonal(&self) -> bool {
        matches!(self.shape(), Shape::Zero | Shape::Diagonal)
    }

    pub fn is_unitriangular(&self) -> bool {
        self.is_upper() && (0..self.dim).all(|k| self.get(k, k).is_one())
    }

    /// Inverse of an upper-triangular matrix by back substitution. Only the
    /// diagonal entries need to be units.
    pub fn inverse_upper(&self) -> Result<Self> {
        if !self.is_upper() {
            return Err(Error::NotInvertible);
        }
        let d = self.dim;
        let inv_diag: Vec<S> = (0..d)
            .map(|k| self.get(k, k).try_inv().ok_or(Error::NotInvertible))
            .collect::<Result<_>>()?;
        let mut inv = Self::zeros(d);
        for c in 0..d {
            inv.set(c, c, inv_diag[c].clone());
            for r in (0..c).rev() {
                // sum_{k=r+1..=c} a[r][k] inv[k][c]
                let mut acc = S::zero();
                for k in r + 1..=c {
                    let a = self.get(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = inv.get(k, c);
                    if !b.is_zero() {
                        acc = acc.add_ref(&a.mul_ref(b));
                    }
                }
                if !acc.is_zero() {
                    inv.set(r, c, acc.mul_ref(&inv_diag[r]).neg_ref());
                }
            }
        }
        Ok(inv)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Rows of canonical scalar strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.data
            .chunks(self.dim)
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect()
    }

    fn check_dim(&self, other: &Self) {
        assert_eq!(self.dim, other.dim, "matrix dimensions differ");
    }
}

impl<S: Scalar> Add for &Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, rhs: &Matrix<S>) -> Matrix<S> {
        self.check_dim(rhs);
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }
}

impl<S: Scalar> Sub for &Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, rhs: &Matrix<S>) -> Matrix<S> {
        self.check_dim(rhs);
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }
}

impl<S: Scalar> Neg for &Matrix<S> {
    type Output = Matrix<S>;
    fn neg(self) -> Matrix<S> {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(S::neg_ref).collect(),
        }
    }
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: &Matrix<S>) -> Matrix<S> {
        self.check_dim(rhs);
        let d = self.dim;
        let mut out = Matrix::zeros(d);
        for (k, j, b) in rhs.nonzeros() {
            for i in 0..d {
                let a = self.get(i, k);
                if !a.is_zero() {
                    out.add_at(i, j, &a.mul_ref(b));
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<S: Scalar> $tr for Matrix<S> {
            type Output = Matrix<S>;
            fn $f(self, rhs: Matrix<S>) -> Matrix<S> {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// A point of the dual of the nilradical, stored as a strictly
/// lower-triangular matrix paired with the nilradical by `tr(lambda x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearForm<S> {
    m: Matrix<S>,
}

impl<S: Scalar> LinearForm<S> {
    pub fn new(m: Matrix<S>) -> Result<Self> {
        if !m.is_strictly_lower() {
            return Err(Error::DimensionMismatch(
                "a linear form must be strictly lower triangular".into(),
            ));
        }
        Ok(Self { m })
    }

    /// Strictly lower part of an arbitrary matrix.
    pub fn from_low(m: &Matrix<S>) -> Self {
        Self { m: m.low() }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            m: Matrix::zeros(dim),
        }
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.m
    }

    pub fn into_matrix(self) -> Matrix<S> {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.m.dim
    }

    /// `<lambda, x> = tr(lambda x)`.
    pub fn pair(&self, x: &Matrix<S>) -> S {
        pairing(self, x)
    }
}

impl<S: Scalar> Add for &LinearForm<S> {
    type Output = LinearForm<S>;
    fn add(self, rhs: &LinearForm<S>) -> LinearForm<S> {
        LinearForm { m: &self.m + &rhs.m }
    }
}

impl<S: Scalar> Sub for &LinearForm<S> {
    type Output = LinearForm<S>;
    fn sub(self, rhs: &LinearForm<S>) -> LinearForm<S> {
        LinearForm { m: &self.m - &rhs.m }
    }
}

pub fn pairing<S: Scalar>(lambda: &LinearForm<S>, x: &Matrix<S>) -> S {
    let m = &lambda.m;
    let mut acc = S::zero();
    for (r, c, v) in m.nonzeros() {
        let w = x.get(c, r);
        if !w.is_zero() {
            acc = acc.add_ref(&v.mul_ref(w));
        }
    }
    acc
}

/// `g.lambda = (g lambda g^{-1})_low` for upper-triangular invertible `g`.
pub fn coadjoint<S: Scalar>(g: &Matrix<S>, lambda: &LinearForm<S>) -> Result<LinearForm<S>> {
    let inv = g.inverse_upper()?;
    Ok(LinearForm::from_low(&(&(g * &lambda.m) * &inv)))
}

/// Rank over `Q(z8)` by Gaussian elimination.
pub fn rank(rows: &[Vec<CycloElement>]) -> usize {
    let mut rows: Vec<Vec<CycloElement>> = rows
        .iter()
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .cloned()
        .collect();
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inverse().expect("pivot is nonzero");
        let pivot: Vec<CycloElement> = rows[rank].iter().map(|v| v * &inv).collect();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..width {
                if !pivot[c].is_zero() {
                    let delta = &factor * &pivot[c];
                    rows[r][c] -= &delta;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
