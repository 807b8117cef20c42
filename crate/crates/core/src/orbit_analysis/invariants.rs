use rayon::prelude::*;
use serde::Serialize;

use crate::bruhat_order::{empty_rectangle, rank_matrix};
use crate::error::{Error, Result};
use crate::exact_field::CycloElement;
use crate::involution::Involution;
use crate::matrix_rep::{rank, sample_orbit, sample_seed, OrbitSample, Realization};
use crate::root_system::{CartanType, Root};
use crate::signed_perm::SignedPermutation;

use super::tuples::{d_poly, minor, IndexTuple, PairRule};

/// `#{j in r..=s : p <= w(j) <= q}` for `-n <= p <= q <= -1 < 1 <= r <= s <= n`:
/// the rooks of `X_w` in rows `p..q` and columns `r..s`.
pub fn rook_count(w: &SignedPermutation, p: i32, q: i32, r: i32, s: i32) -> Result<usize> {
    let n = w.n() as i32;
    if !(-n <= p && p <= q && q <= -1 && 1 <= r && r <= s && s <= n) {
        return Err(Error::InvalidTuple(format!("bad block rows {p}..{q}, columns {r}..{s}")));
    }
    Ok((r..=s).filter(|&j| (p..=q).contains(&w.apply(j))).count())
}

/// `n` seeded samples of the orbit of `f_{D,xi}`, computed in parallel and
/// returned in seed order.
pub fn orbit_samples(
    real: &Realization,
    support: &[Root],
    count: usize,
    seed: u64,
    bound: i64,
) -> Result<Vec<OrbitSample>> {
    (0..count)
        .into_par_iter()
        .map(|k| sample_orbit(real, support, sample_seed(seed, k), bound))
        .collect()
}

/// Dimension of the tangent space at `f_w` of its orbit under the Borel
/// subgroup: the rank of `(x f_w - f_w x)_low` over a basis of the Borel
/// subalgebra.
pub fn orbit_dimension(w: &Involution) -> usize {
    let real = Realization::new(w.system());
    let f = real
        .f_support::<CycloElement>(w.support())
        .expect("supports are orthogonal");
    let fm = f.matrix();
    let vectors: Vec<Vec<CycloElement>> = real
        .borel_basis::<CycloElement>()
        .iter()
        .map(|x| {
            let t = (&(x * fm) - &(fm * x)).low();
            let d = t.dim();
            (0..d)
                .flat_map(|r| (0..r).map(move |c| (r, c)))
                .map(|(r, c)| t.get(r, c).clone())
                .collect()
        })
        .collect();
    rank(&vectors)
}

/// Lower cells `(i, j)` with `i, j` nonzero labels, where the rank of the
/// corner block of `lambda` differs from `(R_w^*)_{i,j}`.
pub fn rank_invariant_violations(
    w: &SignedPermutation,
    real: &Realization,
    lambda: &crate::matrix_rep::LinearForm<CycloElement>,
) -> Vec<(i32, i32, usize, u32)> {
    let rstar = rank_matrix(w).lower();
    let labels = rstar.labels().labels();
    let mut bad = Vec::new();
    for (ri, &i) in labels.iter().enumerate() {
        for &j in &labels[..ri] {
            let got = real.pi_rank(lambda, i, j);
            let want = rstar.get(i, j);
            if got != want as usize {
                bad.push((i, j, got, want));
            }
        }
    }
    bad
}

/// Rows and columns of a determinantal condition attached to an empty
/// rectangle `[-a,a] x [-b,b]`, `a >= b`, of a basis involution in type D.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorConfig {
    pub a: usize,
    pub b: usize,
    /// Rows in `a..n`.
    pub i: IndexTuple,
    /// Rows in `-n..-a`.
    pub j: IndexTuple,
    /// Rows in `-(a-1)..-1`.
    pub k: IndexTuple,
    /// Columns in `1..b-1`.
    pub q: IndexTuple,
    /// Consecutive pairs of entries of `i` and `j`.
    pub pairs: IndexTuple,
}

impl MinorConfig {
    pub fn rows(&self) -> IndexTuple {
        self.i
            .concat(&self.j)
            .and_then(|ij| ij.concat(&self.k))
            .expect("bands are disjoint")
    }

    pub fn outer_len(&self) -> usize {
        self.i.len() + self.j.len()
    }
}

/// Which clause of the vanishing hypothesis a configuration meets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    /// `|I| + |J| < n - a + 1`.
    ShortOuter,
    /// `#{e_i - e_j in Supp(w) : j >= a}` and `|I|` have different parity.
    Parity,
    /// Neither clause holds.
    Fails,
}

fn outer_root_counts(w: &Involution, a: usize) -> (usize, usize) {
    let big = |j: usize| j >= a;
    let diffs = w
        .support()
        .iter()
        .filter(|r| matches!(r, Root::Diff(_, j) if big(*j)))
        .count();
    let sums = w
        .support()
        .iter()
        .filter(|r| matches!(r, Root::Sum(_, j) if big(*j)))
        .count();
    (diffs, sums)
}

/// Checks the structural requirements of `cfg` against `w` and reports the
/// clause of the hypothesis it meets.
pub fn classify_config(w: &Involution, cfg: &MinorConfig) -> Result<Hypothesis> {
    let sys = w.system();
    let n = sys.n;
    let misuse = |msg: String| Err(Error::HypothesisNotSatisfied(msg));
    if sys.ty != CartanType::D || !w.is_basis() {
        return misuse(format!("{} is not a basis involution of type D", w.perm()));
    }
    let (a, b) = (cfg.a, cfg.b);
    if !(2 <= b && b <= a && a <= n) {
        return misuse(format!("need 2 <= b <= a <= n, got a = {a}, b = {b}"));
    }
    if !empty_rectangle(w.perm(), a, b) {
        return Err(Error::RectangleNotEmpty { a, b });
    }
    let (a_i, n_i) = (a as i32, n as i32);
    let bands = [
        (&cfg.i, a_i..=n_i),
        (&cfg.j, -n_i..=-a_i),
        (&cfg.k, -(a_i - 1)..=-1),
    ];
    for (t, band) in bands {
        if let Some(x) = t.entries().iter().find(|x| !band.contains(x)) {
            return misuse(format!("row {x} outside its band"));
        }
    }
    if let Some(q) = cfg.q.entries().iter().find(|&&q| q < 1 || q >= b as i32) {
        return misuse(format!("column {q} outside 1..b-1"));
    }
    let r = rank_matrix(w.perm()).get(a_i, b as i32 - 1) as usize;
    let rows = cfg.rows();
    if rows.len() != r || cfg.q.len() != r {
        return misuse(format!(
            "need {r} rows and columns, got {} and {}",
            rows.len(),
            cfg.q.len()
        ));
    }
    if cfg.pairs.len() % 2 == 1 {
        return misuse("odd number of paired rows".into());
    }
    if let Some(x) = cfg
        .pairs
        .entries()
        .iter()
        .find(|&&x| !cfg.i.contains(x) && !cfg.j.contains(x))
    {
        return misuse(format!("paired row {x} not in I or J"));
    }
    let (diffs, _) = outer_root_counts(w, a);
    Ok(if cfg.outer_len() < n - a + 1 {
        Hypothesis::ShortOuter
    } else if diffs % 2 != cfg.i.len() % 2 {
        Hypothesis::Parity
    } else {
        Hypothesis::Fails
    })
}

/// The two parity clauses agree when `|I| + |J| = n - a + 1`.
pub fn parity_clauses_agree(w: &Involution, cfg: &MinorConfig) -> bool {
    let n = w.system().n;
    if cfg.outer_len() != n - cfg.a + 1 {
        return true;
    }
    let (diffs, sums) = outer_root_counts(w, cfg.a);
    (diffs % 2 != cfg.i.len() % 2) == (sums % 2 != cfg.j.len() % 2)
}

/// Every configuration meeting the structural requirements for `w`, whether
/// or not it meets the hypothesis.
pub fn minor_configs(w: &Involution) -> Vec<MinorConfig> {
    let n = w.system().n;
    let rmat = rank_matrix(w.perm());
    let mut out = Vec::new();
    for a in 2..=n {
        for b in 2..=a {
            if !empty_rectangle(w.perm(), a, b) {
                continue;
            }
            let r = rmat.get(a as i32, b as i32 - 1) as usize;
            let (a_i, n_i) = (a as i32, n as i32);
            // In display order: a..n, -n..-a, -(a-1)..-1.
            let candidates: Vec<i32> = (a_i..=n_i)
                .chain(-n_i..=-a_i)
                .chain(-(a_i - 1)..=-1)
                .collect();
            for rows in itertools::Itertools::combinations(candidates.into_iter(), r) {
                let band = |lo: i32, hi: i32| {
                    IndexTuple::new(rows.iter().copied().filter(|x| (lo..=hi).contains(x)).collect())
                        .expect("distinct")
                };
                let (i, j, k) = (band(a_i, n_i), band(-n_i, -a_i), band(-(a_i - 1), -1));
                let outer: Vec<i32> = i.entries().iter().chain(j.entries()).copied().collect();
                for cols in itertools::Itertools::combinations(1..b as i32, r) {
                    let q = IndexTuple::new(cols).expect("distinct");
                    for pairs in matchings(&outer) {
                        out.push(MinorConfig {
                            a,
                            b,
                            i: i.clone(),
                            j: j.clone(),
                            k: k.clone(),
                            q: q.clone(),
                            pairs: IndexTuple::new(pairs).expect("distinct"),
                        });
                    }
                }
            }
        }
    }
    out
}

/// All partial matchings of `xs`, each as a flat list of pairs.
fn matchings(xs: &[i32]) -> Vec<Vec<i32>> {
    let Some((&first, rest)) = xs.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = matchings(rest);
    for (k, &partner) in rest.iter().enumerate() {
        let remaining: Vec<i32> = rest
            .iter()
            .enumerate()
            .filter(|&(m, _)| m != k)
            .map(|(_, &x)| x)
            .collect();
        for mut m in matchings(&remaining) {
            let mut v = vec![first, partner];
            v.append(&mut m);
            out.push(v);
        }
    }
    out
}

/// Sample indices at which the sum of minors of `cfg` does not vanish.
pub fn config_nonvanishing(
    real: &Realization,
    cfg: &MinorConfig,
    samples: &[OrbitSample],
    rule: PairRule,
) -> Result<Vec<usize>> {
    let rows = cfg.rows();
    let mut bad = Vec::new();
    for (k, s) in samples.iter().enumerate() {
        let v = d_poly(s.point.matrix(), real.labels(), &rows, &cfg.pairs, &cfg.q, rule)?;
        if !v.is_zero() {
            bad.push(k);
        }
    }
    Ok(bad)
}

/// `true` iff the sum of minors of `cfg` vanishes on every sample; misuse
/// of the hypothesis is an error.
pub fn prop24_check(w: &Involution, cfg: &MinorConfig, samples: &[OrbitSample], rule: PairRule) -> Result<bool> {
    if classify_config(w, cfg)? == Hypothesis::Fails {
        return Err(Error::HypothesisNotSatisfied(format!(
            "neither |I|+|J| < n-a+1 nor the parity clause holds for {}",
            cfg.rows()
        )));
    }
    let real = Realization::new(w.system());
    Ok(config_nonvanishing(&real, cfg, samples, rule)?.is_empty())
}

/// Rows and columns of the minor separating `f_sigma` from an orbit whose
/// rank matrix agrees with that of `sigma` off a parity condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatingMinor {
    pub a: usize,
    pub b: usize,
    pub i: IndexTuple,
    pub j: IndexTuple,
    pub k: IndexTuple,
    pub q: IndexTuple,
}

impl SeparatingMinor {
    pub fn rows(&self) -> IndexTuple {
        self.i.concat(&self.j).and_then(|ij| ij.concat(&self.k)).expect("disjoint")
    }

    pub fn as_config(&self) -> MinorConfig {
        MinorConfig {
            a: self.a,
            b: self.b,
            i: self.i.clone(),
            j: self.j.clone(),
            k: self.k.clone(),
            q: self.q.clone(),
            pairs: IndexTuple::empty(),
        }
    }
}

/// Columns `q < b` whose rook lies in rows `a..-1`, and the rows of those
/// rooks split into the bands `a..n`, `-n..-a`, `-(a-1)..-1`.
pub fn build_pqk(sigma: &Involution, a: usize, b: usize) -> Result<SeparatingMinor> {
    let w = sigma.perm();
    let n = w.n() as i32;
    if a < b {
        return Err(Error::HypothesisNotSatisfied(format!("a = {a} < b = {b}")));
    }
    if !empty_rectangle(w, a, b) {
        return Err(Error::RectangleNotEmpty { a, b });
    }
    let a_i = a as i32;
    let at_or_below = |x: i32| x < 0 || x >= a_i;
    let q: Vec<i32> = (1..b as i32).filter(|&q| at_or_below(w.apply(q))).collect();
    let rows_in = |lo: i32, hi: i32| -> Vec<i32> {
        let mut v: Vec<i32> = q.iter().map(|&c| w.apply(c)).filter(|x| (lo..=hi).contains(x)).collect();
        // display order: positive ascending, then negative ascending in value
        v.sort_by_key(|&x| if x > 0 { (0, x) } else { (1, x) });
        v
    };
    let tuple = |v: Vec<i32>| IndexTuple::new(v).expect("rows of distinct rooks");
    Ok(SeparatingMinor {
        a,
        b,
        i: tuple(rows_in(a_i, n)),
        j: tuple(rows_in(-n, -a_i)),
        k: tuple(rows_in(-(a_i - 1), -1)),
        q: tuple(q),
    })
}

/// `|K| = (R)_{-(a-1),b-1}` and `|I| + |J| = n - a + 1`.
pub fn pqk_identities(sigma: &Involution, m: &SeparatingMinor) -> (bool, bool) {
    let n = sigma.system().n;
    let r = rank_matrix(sigma.perm());
    let k_ok = m.k.len() == r.get(-(m.a as i32 - 1), m.b as i32 - 1) as usize;
    let ij_ok = m.i.len() + m.j.len() == n - m.a + 1;
    (k_ok, ij_ok)
}

/// `Delta_P^Q(f_sigma)`.
pub fn separating_minor_at_form(sigma: &Involution, m: &SeparatingMinor) -> Result<CycloElement> {
    let real = Realization::new(sigma.system());
    let f = real.f_support::<CycloElement>(sigma.support())?;
    minor(f.matrix(), real.labels(), m.rows().entries(), m.q.entries())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::RootSystem;
    use crate::signed_perm::{enumerate_involutions, GroupTag};

    fn inv(ty: CartanType, v: &[i32]) -> Involution {
        let sys = RootSystem::new(ty, v.len()).unwrap();
        Involution::new(sys, SignedPermutation::new(sys.group_tag(), v.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn rook_counts() {
        let id = SignedPermutation::identity(4, GroupTag::BC);
        assert_eq!(rook_count(&id, -4, -1, 1, 4).unwrap(), 0);
        assert!(rook_count(&id, -1, -2, 1, 4).is_err());
        assert!(rook_count(&id, -2, -1, 0, 4).is_err());
    }

    #[test]
    fn six_term_decomposition_and_symmetry() {
        for w in enumerate_involutions(5, GroupTag::D, true) {
            let n = 5i32;
            let r = rank_matrix(&w);
            for a in 2..=n {
                for b in 2..=a {
                    // Blocks with an empty range contribute nothing.
                    let c = |p: i32, q: i32, s: i32, t: i32| {
                        if p > q || s > t { 0 } else { rook_count(&w, p, q, s, t).unwrap() }
                    };
                    let total = c(-(b - 1), -1, 1, b - 1)
                        + c(-(a - 1), -b, 1, b - 1)
                        + c(-(b - 1), -1, b, a - 1)
                        + c(-(a - 1), -b, b, a - 1)
                        + c(-(b - 1), -1, a, n)
                        + c(-(a - 1), -b, a, n);
                    assert_eq!(total, r.get(-(a - 1), n) as usize, "{w} {a} {b}");
                    assert_eq!(c(-n, -a, 1, b - 1), c(-(b - 1), -1, a, n));
                }
            }
        }
    }

    #[test]
    fn dimension_small_cases() {
        let id = inv(CartanType::B, &[1, 2, 3]);
        assert_eq!(orbit_dimension(&id), 0);
        for ty in [CartanType::B, CartanType::D] {
            let sys = RootSystem::new(ty, 3).unwrap();
            for s in crate::signed_perm::simple_reflections(3, sys.group_tag()) {
                if let Ok(w) = Involution::new(sys, s.clone()) {
                    if w.is_basis() {
                        assert_eq!(orbit_dimension(&w), 1, "{s}");
                    }
                }
            }
        }
    }

    #[test]
    fn rank_invariant_on_forms() {
        let w = inv(CartanType::B, &[-4, 2, 3, -1]);
        let real = Realization::new(w.system());
        let f = real.f_support::<CycloElement>(w.support()).unwrap();
        assert!(rank_invariant_violations(w.perm(), &real, &f).is_empty());
        let samples = orbit_samples(&real, w.support(), 5, 1, 3).unwrap();
        for s in &samples {
            assert!(rank_invariant_violations(w.perm(), &real, &s.point).is_empty());
        }
    }

    #[test]
    fn matchings_count() {
        // 1 + C(4,2) + 3 perfect matchings of four points
        assert_eq!(matchings(&[1, 2, 3, 4]).len(), 10);
        assert_eq!(matchings(&[]).len(), 1);
    }

    #[test]
    fn configs_are_structurally_valid() {
        for w in enumerate_involutions(4, GroupTag::D, true) {
            let w = Involution::new(RootSystem::new(CartanType::D, 4).unwrap(), w).unwrap();
            for cfg in minor_configs(&w) {
                classify_config(&w, &cfg).unwrap();
                assert!(parity_clauses_agree(&w, &cfg));
            }
        }
    }

    #[test]
    fn check_rejects_misuse() {
        // [-4,4] x [-2,2] is empty; the rook of column 1 sits in row -4.
        let w = inv(CartanType::D, &[-4, 2, 3, -1]);
        let cfg = MinorConfig {
            a: 4,
            b: 2,
            i: IndexTuple::empty(),
            j: IndexTuple::new(vec![-4]).unwrap(),
            k: IndexTuple::empty(),
            q: IndexTuple::new(vec![1]).unwrap(),
            pairs: IndexTuple::empty(),
        };
        assert_eq!(classify_config(&w, &cfg).unwrap(), Hypothesis::Fails);
        assert!(matches!(
            prop24_check(&w, &cfg, &[], PairRule::Mirrored),
            Err(Error::HypothesisNotSatisfied(_))
        ));
        let short = MinorConfig { q: IndexTuple::empty(), ..cfg.clone() };
        assert!(matches!(classify_config(&w, &short), Err(Error::HypothesisNotSatisfied(_))));
        let wrong = MinorConfig { a: 3, ..cfg };
        assert!(matches!(classify_config(&w, &wrong), Err(Error::RectangleNotEmpty { .. })));
    }

    #[test]
    fn pqk_small() {
        let sigma = inv(CartanType::D, &[-4, 2, 3, -1]);
        assert!(build_pqk(&sigma, 3, 2).is_err());
        assert!(build_pqk(&sigma, 2, 3).is_err());
        let m = build_pqk(&sigma, 4, 2).unwrap();
        assert_eq!(m.q.entries(), &[1]);
        assert_eq!(m.j.entries(), &[-4]);
        assert!(m.k.is_empty());
        assert_eq!(pqk_identities(&sigma, &m), (true, true));
        let v = separating_minor_at_form(&sigma, &m).unwrap();
        assert!(!v.is_zero());
    }

    #[test]
    fn opposite_rows_need_not_vanish() {
        let w = inv(CartanType::D, &[-3, -4, -1, -2]);
        let cfg = MinorConfig {
            a: 3,
            b: 3,
            i: IndexTuple::new(vec![3]).unwrap(),
            j: IndexTuple::new(vec![-3]).unwrap(),
            k: IndexTuple::empty(),
            q: IndexTuple::new(vec![1, 2]).unwrap(),
            pairs: IndexTuple::empty(),
        };
        assert_eq!(classify_config(&w, &cfg).unwrap(), Hypothesis::Parity);
        let real = Realization::new(w.system());
        let f = real.f_support::<CycloElement>(w.support()).unwrap();
        let one = CycloElement::one();
        let g = real.x_gen(&Root::Sum(3, 4), &one).unwrap();
        let lambda = crate::matrix_rep::coadjoint(&g, &f).unwrap();
        let rows = cfg.rows();
        assert!(minor(f.matrix(), real.labels(), rows.entries(), cfg.q.entries()).unwrap().is_zero());
        let v = minor(lambda.matrix(), real.labels(), rows.entries(), cfg.q.entries()).unwrap();
        let quarter = CycloElement::rational(1, 4);
        assert!(v == quarter || v == -&quarter, "{v}");
    }
}
