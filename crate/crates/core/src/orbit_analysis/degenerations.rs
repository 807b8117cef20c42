//! Explicit one-parameter degenerations of orbits, computed over Laurent
//! polynomials in `t`, and the vanishing argument for a pair of non-basis
//! involutions in `B_4`.

use serde_json::json;

use crate::bruhat_order::leq_bruhat;
use crate::error::{Error, Result};
use crate::exact_field::{CycloElement, LaurentPoly, Scalar};
use crate::involution::Involution;
use crate::matrix_rep::{coadjoint, pairing, LinearForm, Matrix, OrbitSample, Realization};
use crate::report::Report;
use crate::root_system::{CartanType, Root, RootSystem};

use super::invariants::orbit_samples;

fn t_pow(e: i32) -> LaurentPoly {
    LaurentPoly::t_pow(e)
}

fn limit(f: &LinearForm<LaurentPoly>) -> Result<Matrix<CycloElement>> {
    let m = f.matrix();
    let d = m.dim();
    let mut out = Matrix::zeros(d);
    for r in 0..d {
        for c in 0..d {
            out.set(r, c, m.get(r, c).limit_at_zero()?);
        }
    }
    Ok(out)
}

fn min_valuation(f: &LinearForm<LaurentPoly>) -> Option<i32> {
    f.matrix().rows().iter().flatten().filter_map(|x| x.valuation()).min()
}

fn at_one(m: &Matrix<LaurentPoly>) -> Matrix<CycloElement> {
    m.map(|x| x.eval_at_one())
}

/// `g = x_{e1-e2}(-t^{-1}) h_{e1-e2}(t^{-1})` applied to `f_{e1}` in `B_4`;
/// the result should have no poles and tend to `f_{e2}`.
pub fn degeneration_ex23() -> Report {
    let sys = RootSystem::new(CartanType::B, 4).expect("valid");
    let real = Realization::new(sys);
    let mut report = Report::new("ex23", "short-root-degeneration-b4", json!({"type": "B", "rank": 4}));
    report.instances = 1;

    let alpha = Root::Diff(1, 2);
    let s = t_pow(-1);
    let g = &real.x_gen(&alpha, &s.neg_ref()).expect("root")
        * &real.h_gen(&alpha, &s).expect("invertible");
    let f = real.f_support::<LaurentPoly>(&[Root::Short(1)]).expect("single root");
    let moved = match coadjoint(&g, &f) {
        Ok(m) => m,
        Err(e) => {
            report.fail(json!({"error": e.to_string()}));
            return report;
        }
    };
    let v = min_valuation(&moved);
    report.detail("min_valuation", json!(v));
    if v.is_some_and(|v| v < 0) {
        report.fail(json!({"pole": v}));
    }
    let target = real.f_support::<CycloElement>(&[Root::Short(2)]).expect("single root");
    match limit(&moved) {
        Ok(lim) => {
            report.detail("limit", json!(lim.to_strings()));
            if &lim != target.matrix() {
                report.fail(json!({"limit_differs_from": "f_{e2}"}));
            }
        }
        Err(e) => report.fail(json!({"error": e.to_string()})),
    }
    // Specialization at t = 1 against the same action over Q(z8).
    let g1 = at_one(&g);
    let direct = coadjoint(&g1, &real.f_support::<CycloElement>(&[Root::Short(1)]).expect("root"))
        .expect("same dimension");
    if &at_one(moved.matrix()) != direct.matrix() {
        report.fail(json!({"specialization": "t = 1 disagrees"}));
    }
    report
}

/// Supports of `sigma` for a pair of type 1.12 built from `tau`.
fn case_1_12_sigma(tau: &Involution, i: usize, k: usize, j: usize, l: usize) -> Result<Vec<Root>> {
    if !(1 <= i && i < k && k < j && j < l && l <= tau.system().n) {
        return Err(Error::HypothesisNotSatisfied(format!(
            "need 1 <= i < k < j < l <= n, got {i},{k},{j},{l}"
        )));
    }
    let gone = [Root::Diff(i, j), Root::Sum(k, l)];
    let new = [Root::Diff(i, k), Root::Sum(j, l)];
    let supp = tau.support();
    if !gone.iter().all(|r| supp.contains(r)) || new.iter().any(|r| supp.contains(r)) {
        return Err(Error::WrongPairType(format!(
            "support of {} does not contain e{i}-e{j} and e{k}+e{l}",
            tau.perm()
        )));
    }
    let mut sigma: Vec<Root> = supp.iter().filter(|r| !gone.contains(r)).copied().collect();
    sigma.extend(new);
    sigma.sort();
    Ok(sigma)
}

/// `f = g.f_tau` with `g = x_{ek-ej}(t^{-2}) h_{ei-ej}(t^{-1}) h_{ek+el}(-I t^{-1})`,
/// checked root by root against the expected values and in the limit.
pub fn degeneration_case_1_12(tau: &Involution, i: usize, k: usize, j: usize, l: usize) -> Result<Report> {
    let sigma_supp = case_1_12_sigma(tau, i, k, j, l)?;
    let sys = tau.system();
    let sigma = Involution::from_support(sys, &sigma_supp)?;
    let real = Realization::new(sys);
    let mut report = Report::new(
        "case112",
        "type-1.12-degeneration",
        json!({"type": sys.ty.to_string(), "rank": sys.n, "tau": tau.perm().to_text(), "indices": [i, k, j, l]}),
    );
    report.instances = 1;
    report.detail("sigma", sigma.perm().to_text());

    let t_inv = t_pow(-1);
    let minus_i = LaurentPoly::monomial(-CycloElement::imag(), -1);
    let g = &(&real.x_gen(&Root::Diff(k, j), &t_pow(-2))? * &real.h_gen(&Root::Diff(i, j), &t_inv)?)
        * &real.h_gen(&Root::Sum(k, l), &minus_i)?;
    let f_tau = real.f_support::<LaurentPoly>(tau.support())?;
    let f = coadjoint(&g, &f_tau)?;

    let one = LaurentPoly::one();
    let t2 = t_pow(2);
    for alpha in sys.positive_roots() {
        let e = real.root_vector::<LaurentPoly>(&alpha)?;
        let got = pairing(&f, &e);
        let want = if alpha == Root::Diff(i, k) || alpha == Root::Sum(j, l) {
            one.clone()
        } else if alpha == Root::Diff(i, j) {
            t2.clone()
        } else if alpha == Root::Sum(k, l) {
            t2.neg_ref()
        } else {
            pairing(&f_tau, &e)
        };
        if got != want {
            report.fail(json!({"root": alpha.to_string(), "got": got.to_string(), "expected": want.to_string()}));
        }
    }
    let f_sigma = real.f_support::<CycloElement>(sigma.support())?;
    match limit(&f) {
        Ok(lim) if &lim == f_sigma.matrix() => {}
        Ok(lim) => report.fail(json!({"limit": lim.to_strings()})),
        Err(e) => report.fail(json!({"error": e.to_string()})),
    }
    let direct = coadjoint(&at_one(&g), &real.f_support::<CycloElement>(tau.support())?)?;
    if &at_one(f.matrix()) != direct.matrix() {
        report.fail(json!({"specialization": "t = 1 disagrees"}));
    }
    Ok(report)
}

/// `sigma = s_{e1+e4}` and `tau = s_{e1} s_{e2+e3}` in `B_4`.
pub fn ex28_pair() -> (Involution, Involution) {
    let sys = RootSystem::new(CartanType::B, 4).expect("valid");
    let sigma = Involution::from_support(sys, &[Root::Sum(1, 4)]).expect("single root");
    let tau = Involution::from_support(sys, &[Root::Short(1), Root::Sum(2, 3)]).expect("orthogonal");
    (sigma, tau)
}

/// `lambda(e_{e1+e4}) = 0` on every sample of the orbit of `tau`, while
/// `f_sigma(e_{e1+e4}) != 0` and `sigma <= tau`.
pub fn vanishing_ex28(samples: &[OrbitSample]) -> bool {
    let (sigma, tau) = ex28_pair();
    let real = Realization::new(sigma.system());
    let e = real.root_vector::<CycloElement>(&Root::Sum(1, 4)).expect("root");
    let f_sigma = real.f_support::<CycloElement>(sigma.support()).expect("root");
    let below = leq_bruhat(sigma.perm(), tau.perm()).expect("same group") && sigma.perm() != tau.perm();
    below && !pairing(&f_sigma, &e).is_zero() && samples.iter().all(|s| pairing(&s.point, &e).is_zero())
}

pub fn ex28_report(count: usize, seed: u64, bound: i64) -> Result<Report> {
    let (sigma, tau) = ex28_pair();
    let real = Realization::new(tau.system());
    let samples = orbit_samples(&real, tau.support(), count, seed, bound)?;
    let mut report = Report::new(
        "ex28",
        "non-basis-closure-counterexample-b4",
        json!({"samples": count, "seed": seed, "bound": bound}),
    );
    report.instances = samples.len();
    let e = real.root_vector::<CycloElement>(&Root::Sum(1, 4))?;
    for s in &samples {
        let v = pairing(&s.point, &e);
        if !v.is_zero() {
            report.fail(json!({"seed": s.seed, "value": v.to_string()}));
        }
    }
    let f_sigma = real.f_support::<CycloElement>(sigma.support())?;
    let v = pairing(&f_sigma, &e);
    report.detail("f_sigma_value", v.to_string());
    if v.is_zero() {
        report.fail(json!({"f_sigma": "vanishes"}));
    }
    let below = leq_bruhat(sigma.perm(), tau.perm())?;
    report.detail("sigma_below_tau", below);
    if !below || sigma.perm() == tau.perm() {
        report.fail(json!({"bruhat": "sigma is not strictly below tau"}));
    }
    if !vanishing_ex28(&samples) {
        report.fail(json!({"vanishing": false}));
    }
    Ok(report)
}

/// `tau = s_{e1-e3} s_{e2+e4}`, the witness for `(i,k,j,l) = (1,2,3,4)`.
pub fn case_1_12_witness(ty: CartanType, n: usize) -> Result<Involution> {
    let sys = RootSystem::new(ty, n)?;
    Involution::from_support(sys, &[Root::Diff(1, 3), Root::Sum(2, 4)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ex23_passes() {
        let r = degeneration_ex23();
        assert!(r.passed(), "{}", r.to_json());
    }

    #[test]
    fn case_1_12_witness_passes() {
        for ty in [CartanType::B, CartanType::C] {
            let tau = case_1_12_witness(ty, 4).unwrap();
            let r = degeneration_case_1_12(&tau, 1, 2, 3, 4).unwrap();
            assert!(r.passed(), "{}", r.to_json());
            assert_eq!(r.details["sigma"], json!("2,1,-4,-3"));
        }
    }

    #[test]
    fn case_1_12_rejects_other_pairs() {
        let tau = case_1_12_witness(CartanType::B, 4).unwrap();
        assert!(degeneration_case_1_12(&tau, 1, 3, 2, 4).is_err());
        assert!(degeneration_case_1_12(&tau, 2, 1, 3, 4).is_err());
    }

    #[test]
    fn ex28_passes() {
        let r = ex28_report(10, 2, 3).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert!(vanishing_ex28(&[]));
    }
}
