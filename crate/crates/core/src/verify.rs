//! Verification suites. Each one runs an exhaustive or sampled check and
//! returns a [`Report`] whose failure list is empty when the claim holds.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bruhat_order::{leq_bruhat, leq_star, parity_failures, rank_matrix};
use crate::error::{Error, Result};
use crate::involution::Involution;
use crate::matrix_rep::{sample_seed, Realization};
use crate::orbit_analysis::{
    build_pqk, classify_config, config_nonvanishing, minor, minor_configs, orbit_dimension, orbit_samples,
    parity_clauses_agree, pqk_identities, rank_invariant_violations, separating_minor_at_form, Hypothesis,
    PairRule,
};
use crate::report::Report;
use crate::root_system::{CartanType, RootSystem};
use crate::signed_perm::{enumerate_involutions, GroupTag};

/// Sampling parameters shared by the sampled suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Sampling {
    pub samples: usize,
    pub seed: u64,
    pub bound: i64,
}

impl Default for Sampling {
    fn default() -> Self {
        Self {
            samples: 50,
            seed: 1,
            bound: 3,
        }
    }
}

fn basis_involutions(ty: CartanType, n: usize) -> Result<Vec<Involution>> {
    if !matches!(ty, CartanType::B | CartanType::D) {
        return Err(Error::Unsupported(format!("basis involutions of type {ty}")));
    }
    let sys = RootSystem::new(ty, n)?;
    enumerate_involutions(n, sys.group_tag(), true)
        .map(|w| Involution::new(sys, w))
        .collect()
}

/// Orbit dimension against length for every basis involution of `ty_n`.
pub fn verify_dim(ty: CartanType, n: usize) -> Result<Report> {
    let invs = basis_involutions(ty, n)?;
    let mut report = Report::new("dim", "orbit-dimension-equals-length", json!({"type": ty.to_string(), "rank": n}));
    report.instances = invs.len();
    let rows: Vec<(String, usize, usize)> = invs
        .par_iter()
        .map(|w| (w.perm().to_text(), orbit_dimension(w), w.length()))
        .collect();
    for (w, dim, len) in rows {
        if dim != len {
            report.fail(json!({"w": w, "dimension": dim, "length": len}));
        }
    }
    Ok(report)
}

/// Ranks of the corner blocks of orbit samples against `R_w^*`.
pub fn verify_rank_invariants(ty: CartanType, n: usize, s: Sampling) -> Result<Report> {
    let invs = basis_involutions(ty, n)?;
    let real = Realization::new(RootSystem::new(ty, n)?);
    let mut report = Report::new(
        "ranks",
        "corner-ranks-are-orbit-invariants",
        json!({"type": ty.to_string(), "rank": n, "sampling": s}),
    );
    let per: Vec<Result<(usize, Vec<Value>)>> = invs
        .par_iter()
        .enumerate()
        .map(|(k, w)| {
            let samples = orbit_samples(&real, w.support(), s.samples, sample_seed(s.seed, k), s.bound)?;
            let mut bad = Vec::new();
            for x in &samples {
                for (i, j, got, want) in rank_invariant_violations(w.perm(), &real, &x.point) {
                    bad.push(json!({"w": w.perm().to_text(), "seed": x.seed, "cell": [i, j], "rank": got, "expected": want}));
                }
            }
            Ok((samples.len(), bad))
        })
        .collect();
    for r in per {
        let (count, bad) = r?;
        report.instances += count;
        bad.into_iter().for_each(|b| report.fail(b));
    }
    report.detail("involutions", invs.len());
    Ok(report)
}

/// Vanishing of the sums of minors on orbit samples over every configuration
/// satisfying the hypothesis, for basis involutions of `D_n`.
///
/// `max_involutions` keeps only the involutions with the most
/// configurations.
pub fn verify_prop24(n: usize, s: Sampling, rule: PairRule, max_involutions: Option<usize>) -> Result<Report> {
    let mut invs: Vec<(usize, Involution)> = basis_involutions(CartanType::D, n)?.into_iter().enumerate().collect();
    let configs: Vec<usize> = invs.iter().map(|(_, w)| minor_configs(w).len()).collect();
    invs.retain(|(k, _)| configs[*k] > 0);
    if let Some(m) = max_involutions {
        invs.sort_by_key(|(k, _)| (std::cmp::Reverse(configs[*k]), *k));
        invs.truncate(m);
        invs.sort_by_key(|(k, _)| *k);
    }
    let real = Realization::new(RootSystem::new(CartanType::D, n)?);
    let mut report = Report::new(
        "prop24",
        "minor-sums-vanish-on-orbits",
        json!({"rank": n, "sampling": s, "rule": rule, "max_involutions": max_involutions}),
    );
    type Outcome = (usize, usize, BTreeMap<String, usize>, Vec<Value>);
    let per: Vec<Result<Outcome>> = invs
        .par_iter()
        .map(|(k, w)| {
            let samples = orbit_samples(&real, w.support(), s.samples, sample_seed(s.seed, *k), s.bound)?;
            let mut checked = 0;
            let mut opposite_failures = 0;
            let mut counts = BTreeMap::new();
            let mut bad = Vec::new();
            for cfg in minor_configs(w) {
                let h = classify_config(w, &cfg)?;
                *counts.entry(format!("{h:?}")).or_insert(0) += 1;
                if !parity_clauses_agree(w, &cfg) {
                    bad.push(json!({"w": w.perm().to_text(), "config": cfg, "kind": "parity-clauses-disagree"}));
                }
                if h == Hypothesis::Fails {
                    continue;
                }
                checked += 1;
                let nonzero = config_nonvanishing(&real, &cfg, &samples, rule)?;
                if !nonzero.is_empty() {
                    let rows = cfg.rows();
                    let opposite = rows.entries().iter().any(|&x| rows.contains(-x));
                    opposite_failures += usize::from(opposite);
                    bad.push(json!({
                        "w": w.perm().to_text(),
                        "config": cfg,
                        "kind": "nonvanishing",
                        "opposite_rows": opposite,
                        "seeds": nonzero.iter().map(|&i| samples[i].seed).collect::<Vec<_>>(),
                    }));
                }
            }
            Ok((checked, opposite_failures, counts, bad))
        })
        .collect();
    let mut totals: BTreeMap<String, usize> = BTreeMap::new();
    let mut opposite = 0;
    for r in per {
        let (checked, opp, counts, bad) = r?;
        report.instances += checked;
        opposite += opp;
        for (k, v) in counts {
            *totals.entry(k).or_insert(0) += v;
        }
        bad.into_iter().for_each(|b| report.fail(b));
    }
    report.detail("involutions", invs.len());
    report.detail("configurations", json!(totals));
    report.detail("failures_with_opposite_rows", opposite);
    report.detail("failures_without_opposite_rows", report.failures.len() - opposite);
    Ok(report)
}

/// For pairs `sigma, tau` of basis involutions of `D_n` whose rank matrices
/// compare but which fail the parity clause, the minor built from `sigma`
/// separates `f_sigma` from the orbit of `tau`.
pub fn verify_thm25(n: usize, s: Sampling) -> Result<Report> {
    let invs = basis_involutions(CartanType::D, n)?;
    let real = Realization::new(RootSystem::new(CartanType::D, n)?);
    let ranks: Vec<_> = invs.iter().map(|w| rank_matrix(w.perm())).collect();
    let mut pairs = Vec::new();
    for (a, sigma) in invs.iter().enumerate() {
        for (b, tau) in invs.iter().enumerate() {
            if ranks[a].leq(&ranks[b]) && !leq_bruhat(sigma.perm(), tau.perm())? {
                pairs.push((a, b));
            }
        }
    }
    let mut report = Report::new(
        "thm25",
        "parity-failures-are-separated-by-minors",
        json!({"rank": n, "sampling": s}),
    );
    report.instances = pairs.len();
    type Outcome = (Vec<Value>, String, bool, bool);
    let per: Vec<Result<Outcome>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let (sigma, tau) = (&invs[a], &invs[b]);
            let failures = parity_failures(sigma.perm(), tau.perm())?;
            let mut bad = Vec::new();
            let label = json!({"sigma": sigma.perm().to_text(), "tau": tau.perm().to_text()});
            let Some(&(ra, rb)) = failures.iter().find(|(x, y)| x >= y) else {
                bad.push(json!({"pair": label, "kind": "no-witness-with-a-ge-b"}));
                return Ok((bad, String::new(), false, false));
            };
            let m = build_pqk(sigma, ra, rb)?;
            if pqk_identities(sigma, &m) != (true, true) {
                bad.push(json!({"pair": label, "kind": "cardinality-identity", "minor": m}));
            }
            let delta = separating_minor_at_form(sigma, &m)?;
            if delta.is_zero() {
                bad.push(json!({"pair": label, "kind": "minor-vanishes-at-f-sigma"}));
            }
            let scale = crate::exact_field::CycloElement::integer(1 << m.rows().len());
            let scaled = &delta * &scale;
            let unit_scaled = scaled.is_one() || (-&scaled).is_one();
            let unit = delta.is_one() || (-&delta).is_one();
            let samples = orbit_samples(&real, tau.support(), s.samples, sample_seed(s.seed, b), s.bound)?;
            let rows = m.rows();
            for x in &samples {
                if !minor(x.point.matrix(), real.labels(), rows.entries(), m.q.entries())?.is_zero() {
                    bad.push(json!({"pair": label, "kind": "minor-nonzero-on-tau-orbit", "seed": x.seed}));
                }
            }
            Ok((bad, delta.to_string(), unit, unit_scaled))
        })
        .collect();
    let mut values: BTreeMap<String, usize> = BTreeMap::new();
    let (mut units, mut scaled_units) = (0, 0);
    for r in per {
        let (bad, delta, unit, unit_scaled) = r?;
        bad.into_iter().for_each(|b| report.fail(b));
        *values.entry(delta).or_insert(0) += 1;
        units += usize::from(unit);
        scaled_units += usize::from(unit_scaled);
    }
    report.detail("minor_values_at_f_sigma", json!(values));
    report.detail("minor_is_plus_minus_one", units);
    report.detail("minor_times_2_pow_r_is_plus_minus_one", scaled_units);
    Ok(report)
}

/// `R^*` comparison against the Bruhat order on all pairs of involutions of
/// `C_n`.
pub fn verify_thm15(n: usize) -> Result<Report> {
    let invs: Vec<_> = enumerate_involutions(n, GroupTag::BC, false).collect();
    let mut report = Report::new("thm15", "star-order-equals-bruhat-on-involutions", json!({"rank": n}));
    for v in &invs {
        for w in &invs {
            report.instances += 1;
            let (a, b) = (leq_star(v, w)?, leq_bruhat(v, w)?);
            if a != b {
                report.fail(json!({"v": v.to_text(), "w": w.to_text(), "star": a, "bruhat": b}));
            }
        }
    }
    report.detail("pairs_checked", report.instances);
    Ok(report)
}
