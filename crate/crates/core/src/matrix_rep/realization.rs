use crate::error::{Error, Result};
use crate::exact_field::{CycloElement, Scalar};
use crate::index::LabelMap;
use crate::root_system::{orthogonal, CartanType, Root, RootSystem};

use super::matrix::{coadjoint, rank, LinearForm, Matrix};

/// The natural matrix realization of a classical Lie algebra and its group.
///
/// Type A lives in `gl_n`; `B_n` in `so_{2n+1}` with rows labelled
/// `1..n, 0, -n..-1`; `C_n` and `D_n` in `sp_{2n}` and `so_{2n}` with rows
/// labelled `1..n, -n..-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Realization {
    sys: RootSystem,
    labels: LabelMap,
}

impl Realization {
    pub fn new(sys: RootSystem) -> Self {
        Self {
            sys,
            labels: LabelMap::for_algebra(sys.ty, sys.n),
        }
    }

    pub fn system(&self) -> RootSystem {
        self.sys
    }

    pub fn labels(&self) -> &LabelMap {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.dim()
    }

    fn at(&self, i: i32) -> usize {
        self.labels.at(i)
    }

    /// Gram matrix of the invariant bilinear form; `None` for type A.
    pub fn gram<S: Scalar>(&self) -> Option<Matrix<S>> {
        let ty = self.sys.ty;
        if ty == CartanType::A {
            return None;
        }
        let mut j = Matrix::zeros(self.dim());
        for i in 1..=self.sys.n as i32 {
            j.set(self.at(i), self.at(-i), S::one());
            let back = if ty == CartanType::C { S::one().neg_ref() } else { S::one() };
            j.set(self.at(-i), self.at(i), back);
        }
        if ty == CartanType::B {
            j.set(self.at(0), self.at(0), S::one());
        }
        Some(j)
    }

    /// `g^T J g = J`. Always true in type A.
    pub fn preserves_form<S: Scalar>(&self, g: &Matrix<S>) -> bool {
        match self.gram::<S>() {
            None => true,
            Some(j) => &(&g.transpose() * &j) * g == j,
        }
    }

    /// `x^T J + J x = 0`. Always true in type A.
    pub fn in_algebra<S: Scalar>(&self, x: &Matrix<S>) -> bool {
        match self.gram::<S>() {
            None => true,
            Some(j) => (&(&x.transpose() * &j) + &(&j * x)).is_zero(),
        }
    }

    /// The root vector `e_alpha`, strictly upper triangular.
    pub fn root_vector<S: Scalar>(&self, root: &Root) -> Result<Matrix<S>> {
        self.sys.check(root)?;
        let ty = self.sys.ty;
        let mut e = Matrix::zeros(self.dim());
        let one = S::one();
        let minus = one.neg_ref();
        let mut put = |r: i32, c: i32, v: &S| e.set(self.at(r), self.at(c), v.clone());
        match *root {
            Root::Diff(i, j) => {
                let (i, j) = (i as i32, j as i32);
                put(i, j, &one);
                if ty != CartanType::A {
                    put(-j, -i, &minus);
                }
            }
            Root::Sum(i, j) => {
                let (i, j) = (i as i32, j as i32);
                put(i, -j, &one);
                put(j, -i, if ty == CartanType::C { &one } else { &minus });
            }
            Root::Long(i) => put(i as i32, -(i as i32), &one),
            Root::Short(i) => {
                let s2 = S::from_cyclo(CycloElement::sqrt2());
                put(i as i32, 0, &s2);
                put(0, -(i as i32), &s2.neg_ref());
            }
        }
        Ok(e)
    }

    /// The dual basis element `e_alpha^*` under the trace pairing.
    pub fn dual_root_vector<S: Scalar>(&self, root: &Root) -> Result<LinearForm<S>> {
        let e = self.root_vector::<S>(root)?.transpose();
        let scale = match (self.sys.ty, root) {
            (CartanType::A, _) | (CartanType::C, Root::Long(_)) => CycloElement::one(),
            (CartanType::B, Root::Short(_)) => CycloElement::rational(1, 4),
            _ => CycloElement::rational(1, 2),
        };
        LinearForm::new(e.scale(&S::from_cyclo(scale)))
    }

    /// `sum_alpha xi(alpha) e_alpha^*` over a pairwise orthogonal set.
    pub fn f_form<S: Scalar>(&self, weighted: &[(Root, S)]) -> Result<LinearForm<S>> {
        for (k, (a, xa)) in weighted.iter().enumerate() {
            if xa.is_zero() {
                return Err(Error::ZeroWeight(a.to_string()));
            }
            for (b, _) in &weighted[k + 1..] {
                if !orthogonal(a, b) {
                    return Err(Error::NotOrthogonal(a.to_string(), b.to_string()));
                }
            }
        }
        let mut f = LinearForm::zero(self.dim());
        for (a, xa) in weighted {
            let d = self.dual_root_vector::<S>(a)?;
            f = &f + &LinearForm::from_low(&d.matrix().scale(xa));
        }
        Ok(f)
    }

    /// `f_D`, all weights one.
    pub fn f_support<S: Scalar>(&self, roots: &[Root]) -> Result<LinearForm<S>> {
        let weighted: Vec<(Root, S)> = roots.iter().map(|r| (*r, S::one())).collect();
        self.f_form(&weighted)
    }

    /// `x_alpha(s) = exp(s e_alpha)`.
    pub fn x_gen<S: Scalar>(&self, root: &Root, s: &S) -> Result<Matrix<S>> {
        Ok(exp_nilpotent(&self.root_vector::<S>(root)?.scale(s)))
    }

    /// `x_{-alpha}(s) = x_alpha(s)^T`.
    pub fn x_neg<S: Scalar>(&self, root: &Root, s: &S) -> Result<Matrix<S>> {
        Ok(self.x_gen(root, s)?.transpose())
    }

    /// `w_alpha(s) = x_alpha(s) x_{-alpha}(-s^{-1}) x_alpha(s)`.
    pub fn w_gen<S: Scalar>(&self, root: &Root, s: &S) -> Result<Matrix<S>> {
        let inv = s.try_inv().ok_or(Error::DivisionByZero)?;
        let x = self.x_gen(root, s)?;
        Ok(&(&x * &self.x_neg(root, &inv.neg_ref())?) * &x)
    }

    /// `h_alpha(s) = w_alpha(s) w_alpha(1)^{-1}`, a diagonal matrix.
    pub fn h_gen<S: Scalar>(&self, root: &Root, s: &S) -> Result<Matrix<S>> {
        let w = self.w_gen(root, s)?;
        let m1 = S::one().neg_ref();
        // w_alpha(1)^{-1} = x_alpha(-1) x_{-alpha}(1) x_alpha(-1)
        let x = self.x_gen(root, &m1)?;
        let w1_inv = &(&x * &self.x_neg(root, &S::one())?) * &x;
        Ok(&w * &w1_inv)
    }

    /// Basis of the Cartan subalgebra of diagonal matrices.
    pub fn torus_basis<S: Scalar>(&self) -> Vec<Matrix<S>> {
        let n = self.sys.n as i32;
        (1..=n)
            .map(|k| {
                let mut h = Matrix::zeros(self.dim());
                h.set(self.at(k), self.at(k), S::one());
                if self.sys.ty != CartanType::A {
                    h.set(self.at(-k), self.at(-k), S::one().neg_ref());
                }
                h
            })
            .collect()
    }

    /// Basis of the Borel subalgebra: the torus, then the root vectors in
    /// enumeration order.
    pub fn borel_basis<S: Scalar>(&self) -> Vec<Matrix<S>> {
        let mut basis = self.torus_basis();
        for root in self.sys.positive_roots() {
            basis.push(self.root_vector(&root).expect("positive root"));
        }
        basis
    }

    pub fn coadjoint<S: Scalar>(&self, g: &Matrix<S>, lambda: &LinearForm<S>) -> Result<LinearForm<S>> {
        if g.dim() != self.dim() || lambda.dim() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "expected {0}x{0} matrices",
                self.dim()
            )));
        }
        coadjoint(g, lambda)
    }

    /// Rank of the block of rows `i` down to the last one and columns from
    /// the first one up to `j`.
    pub fn pi_rank(&self, lambda: &LinearForm<CycloElement>, i: i32, j: i32) -> usize {
        let (r0, c1) = (self.at(i), self.at(j));
        let m = lambda.matrix();
        let rows: Vec<Vec<CycloElement>> = (r0..self.dim())
            .map(|r| (0..=c1).map(|c| m.get(r, c).clone()).collect())
            .collect();
        rank(&rows)
    }

    /// Strictly lower cells `(i, j)` as label pairs.
    pub fn lower_cells(&self) -> Vec<(i32, i32)> {
        let d = self.dim();
        let mut cells = Vec::new();
        for r in 0..d {
            for c in 0..r {
                cells.push((self.labels.label(r), self.labels.label(c)));
            }
        }
        cells
    }
}

/// `exp(e)` for a matrix with `e^3 = 0`.
fn exp_nilpotent<S: Scalar>(e: &Matrix<S>) -> Matrix<S> {
    let d = e.dim();
    let e2 = e * e;
    debug_assert!((&e2 * e).is_zero());
    let half = S::from_cyclo(CycloElement::rational(1, 2));
    &(&Matrix::identity(d) + e) + &e2.scale(&half)
}
