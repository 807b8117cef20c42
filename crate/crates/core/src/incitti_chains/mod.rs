//! Classification of pairs of involutions of `C_n` by the relative position
//! of their supports, and reachability checks along admissible pairs.

mod tables;

use std::collections::{BTreeMap, VecDeque};
use std::sync::LazyLock;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::bruhat_order::{rank_matrix, RankMatrix};
use crate::error::{Error, Result};
use crate::involution::Involution;
use crate::report::Report;
use crate::root_system::{CartanType, Root, RootSystem};
use crate::signed_perm::{enumerate_involutions, GroupTag};

pub use tables::{table_rows, RootPattern, TableRow, Var, TABLE_SIZES};

/// The row of the tables a pair `(tau, sigma)` matches, with the values of
/// the free indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairType {
    pub table: u8,
    pub case: u8,
    pub witness: BTreeMap<String, usize>,
}

impl PairType {
    pub fn label(&self) -> String {
        format!("{}.{}", self.table, self.case)
    }
}

type Assignment = [Option<usize>; 4];

fn bind(assign: &mut Assignment, var: Var, value: usize) -> bool {
    match assign[var.slot()] {
        Some(v) => v == value,
        None => {
            if assign.contains(&Some(value)) {
                return false;
            }
            assign[var.slot()] = Some(value);
            true
        }
    }
}

fn bind_root(assign: &Assignment, pat: RootPattern, root: Root) -> Vec<Assignment> {
    let mut out = Vec::new();
    let mut attempt = |pairs: &[(Var, usize)]| {
        let mut a = *assign;
        if pairs.iter().all(|&(v, x)| bind(&mut a, v, x)) {
            out.push(a);
        }
    };
    match (pat, root) {
        (RootPattern::Diff(x, y), Root::Diff(a, b)) => attempt(&[(x, a), (y, b)]),
        (RootPattern::Sum(x, y), Root::Sum(a, b)) => {
            attempt(&[(x, a), (y, b)]);
            attempt(&[(x, b), (y, a)]);
        }
        (RootPattern::Long(x), Root::Long(a)) => attempt(&[(x, a)]),
        _ => {}
    }
    out
}

/// All assignments under which `pats` maps bijectively onto `roots`.
fn unify(pats: &[RootPattern], roots: &[Root], assign: Assignment, used: u32, out: &mut Vec<Assignment>) {
    let Some((&p, rest)) = pats.split_first() else {
        out.push(assign);
        return;
    };
    for (k, &r) in roots.iter().enumerate() {
        if used & (1 << k) != 0 {
            continue;
        }
        for a in bind_root(&assign, p, r) {
            unify(rest, roots, a, used | (1 << k), out);
        }
    }
}

fn increasing(assign: &Assignment, order: &[Var]) -> bool {
    order
        .windows(2)
        .all(|w| match (assign[w[0].slot()], assign[w[1].slot()]) {
            (Some(a), Some(b)) => a < b,
            _ => false,
        })
}

fn difference(a: &[Root], b: &[Root]) -> Vec<Root> {
    a.iter().filter(|r| !b.contains(r)).copied().collect()
}

fn row_matches(row: &TableRow, sigma_only: &[Root], tau_only: &[Root]) -> Option<Assignment> {
    if row.sigma_only.len() != sigma_only.len() || row.tau_only.len() != tau_only.len() {
        return None;
    }
    let mut first = Vec::new();
    unify(&row.sigma_only, sigma_only, [None; 4], 0, &mut first);
    for a in first {
        let mut both = Vec::new();
        unify(&row.tau_only, tau_only, a, 0, &mut both);
        if let Some(a) = both.into_iter().find(|a| increasing(a, &row.order)) {
            return Some(a);
        }
    }
    None
}

fn pair_type(row: &TableRow, a: Assignment) -> PairType {
    let witness = [Var::I, Var::K, Var::J, Var::L]
        .into_iter()
        .filter_map(|v| a[v.slot()].map(|x| (v.name().to_string(), x)))
        .collect();
    PairType {
        table: row.table,
        case: row.case,
        witness,
    }
}

fn check_c(w: &Involution) -> Result<()> {
    if w.system().ty != CartanType::C {
        return Err(Error::Unsupported(format!(
            "pair tables are stated for type C, got {}",
            w.system()
        )));
    }
    Ok(())
}

/// Every table row that `(tau, sigma)` matches.
pub fn all_matches(tau: &Involution, sigma: &Involution) -> Result<Vec<PairType>> {
    check_c(tau)?;
    check_c(sigma)?;
    let sigma_only = difference(sigma.support(), tau.support());
    let tau_only = difference(tau.support(), sigma.support());
    Ok(TABLES
        .iter()
        .filter_map(|row| row_matches(row, &sigma_only, &tau_only).map(|a| pair_type(row, a)))
        .collect())
}

/// The first table row that `(tau, sigma)` matches.
pub fn classify_pair(tau: &Involution, sigma: &Involution) -> Result<Option<PairType>> {
    check_c(tau)?;
    check_c(sigma)?;
    let sigma_only = difference(sigma.support(), tau.support());
    let tau_only = difference(tau.support(), sigma.support());
    Ok(TABLES
        .iter()
        .find_map(|row| row_matches(row, &sigma_only, &tau_only).map(|a| pair_type(row, a))))
}

static TABLES: LazyLock<Vec<TableRow>> = LazyLock::new(table_rows);

/// `(tau, sigma)` matches a row of the first table.
pub fn is_basis_admissible(tau: &Involution, sigma: &Involution) -> Result<bool> {
    for w in [tau, sigma] {
        if !w.is_basis() {
            return Err(Error::HypothesisNotSatisfied(format!("{} is not a basis involution", w.perm())));
        }
    }
    Ok(classify_pair(tau, sigma)?.is_some_and(|t| t.table == 1))
}

/// Which pairs become edges of the reachability graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgePolicy {
    /// Table match only.
    Loose,
    /// Table match and `sigma < tau`.
    #[default]
    Strict,
}

impl std::str::FromStr for EdgePolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "loose" | "basis-admissible" => Ok(EdgePolicy::Loose),
            "strict" | "basis-admissible-and-less" => Ok(EdgePolicy::Strict),
            _ => Err(Error::Parse(format!("unknown edge policy `{s}`"))),
        }
    }
}

/// Directed graph on involutions with an edge `tau -> sigma` for each
/// admissible pair `(tau, sigma)`.
#[derive(Clone, Debug)]
pub struct ChainGraph {
    nodes: Vec<Involution>,
    ranks: Vec<RankMatrix>,
    adj: Vec<Vec<usize>>,
    /// Table matches rejected by the policy because `sigma < tau` fails.
    not_below: usize,
}

impl ChainGraph {
    /// `basis_only` restricts both the nodes and the edges to the first table.
    pub fn build(n: usize, basis_only: bool, policy: EdgePolicy) -> Result<Self> {
        let sys = RootSystem::new(CartanType::C, n)?;
        let nodes: Vec<Involution> = enumerate_involutions(n, GroupTag::BC, basis_only)
            .map(|w| Involution::new(sys, w))
            .collect::<Result<_>>()?;
        let ranks: Vec<RankMatrix> = nodes.iter().map(|w| rank_matrix(w.perm())).collect();
        let rows: Vec<(Vec<usize>, usize)> = (0..nodes.len())
            .into_par_iter()
            .map(|t| {
                let mut out = Vec::new();
                let mut rejected = 0;
                for s in 0..nodes.len() {
                    if s == t {
                        continue;
                    }
                    let Some(ty) = classify_pair(&nodes[t], &nodes[s]).expect("type C") else {
                        continue;
                    };
                    if basis_only && ty.table != 1 {
                        continue;
                    }
                    let below = ranks[s].leq(&ranks[t]);
                    if !below {
                        rejected += 1;
                    }
                    if below || policy == EdgePolicy::Loose {
                        out.push(s);
                    }
                }
                (out, rejected)
            })
            .collect();
        let not_below = rows.iter().map(|r| r.1).sum();
        let adj = rows.into_iter().map(|r| r.0).collect();
        Ok(Self {
            nodes,
            ranks,
            adj,
            not_below,
        })
    }

    pub fn nodes(&self) -> &[Involution] {
        &self.nodes
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn index_of(&self, w: &Involution) -> Option<usize> {
        self.nodes.iter().position(|x| x.perm() == w.perm())
    }

    /// `nodes[s] < nodes[t]` in the Bruhat order.
    pub fn below(&self, s: usize, t: usize) -> bool {
        s != t && self.ranks[s].leq(&self.ranks[t])
    }

    /// Breadth-first predecessor array from `source`.
    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.nodes.len()];
        parent[source] = Some(source);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &s in &self.adj[v] {
                if parent[s].is_none() {
                    parent[s] = Some(v);
                    queue.push_back(s);
                }
            }
        }
        parent
    }

    /// A shortest chain of node indices from `from` to `to`.
    pub fn chain(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let parent = self.bfs(from);
        parent[to]?;
        let mut path = vec![to];
        let mut v = to;
        while v != from {
            v = parent[v].expect("on the tree");
            path.push(v);
        }
        path.reverse();
        Some(path)
    }

    /// Pairs `(tau, sigma)` with `sigma < tau` and no chain from `tau` to
    /// `sigma`, along with the number of pairs checked.
    pub fn unreachable_pairs(&self) -> (usize, Vec<(usize, usize)>) {
        let per_source: Vec<(usize, Vec<(usize, usize)>)> = (0..self.nodes.len())
            .into_par_iter()
            .map(|t| {
                let parent = self.bfs(t);
                let mut checked = 0;
                let mut bad = Vec::new();
                for s in 0..self.nodes.len() {
                    if self.below(s, t) {
                        checked += 1;
                        if parent[s].is_none() {
                            bad.push((t, s));
                        }
                    }
                }
                (checked, bad)
            })
            .collect();
        let checked = per_source.iter().map(|p| p.0).sum();
        (checked, per_source.into_iter().flat_map(|p| p.1).collect())
    }

    pub fn chain_report(&self, from: usize, to: usize, policy: EdgePolicy) -> ChainReport {
        ChainReport {
            source: self.nodes[from].perm().to_text(),
            target: self.nodes[to].perm().to_text(),
            chain: self
                .chain(from, to)
                .map(|c| c.into_iter().map(|v| self.nodes[v].perm().to_text()).collect()),
            policy,
        }
    }
}

/// A chain of admissible pairs from `source` down to `target`, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub source: String,
    pub target: String,
    pub chain: Option<Vec<String>>,
    pub policy: EdgePolicy,
}

fn reachability_report(command: &str, claim: &str, n: usize, basis_only: bool, policy: EdgePolicy) -> Result<Report> {
    let graph = ChainGraph::build(n, basis_only, policy)?;
    let (checked, bad) = graph.unreachable_pairs();
    let mut report = Report::new(command, claim, json!({"rank": n, "policy": policy}));
    report.instances = checked;
    report.detail("nodes", graph.nodes().len());
    report.detail("edges", graph.edge_count());
    report.detail("pairs_checked", checked);
    report.detail("matches_not_below", graph.not_below);
    for (t, s) in bad {
        report.fail(json!({
            "tau": graph.nodes()[t].perm().to_text(),
            "sigma": graph.nodes()[s].perm().to_text(),
        }));
    }
    Ok(report)
}

/// Every `sigma < tau` in `B(C_n)` is joined by a chain of basis-admissible
/// pairs.
pub fn verify_conjecture27(n: usize, policy: EdgePolicy) -> Result<Report> {
    if n > 7 {
        return Err(Error::Unsupported(format!("rank {n} > 7")));
    }
    reachability_report("conj27", "basis-admissible-chains", n, true, policy)
}

/// Every `sigma < tau` in `I(C_n)` is joined by a chain of admissible pairs.
pub fn verify_corollary26(n: usize, policy: EdgePolicy) -> Result<Report> {
    if n > 5 {
        return Err(Error::Unsupported(format!("rank {n} > 5")));
    }
    reachability_report("cor26", "admissible-chains", n, false, policy)
}

/// Pairs of involutions of `C_n` matching two or more rows (doubtful rows
/// excluded), as `(tau, sigma, labels)`.
pub fn table_collisions(n: usize) -> Result<Vec<(String, String, Vec<String>)>> {
    let sys = RootSystem::new(CartanType::C, n)?;
    let nodes: Vec<Involution> = enumerate_involutions(n, GroupTag::BC, false)
        .map(|w| Involution::new(sys, w))
        .collect::<Result<_>>()?;
    let doubtful: Vec<(u8, u8)> = table_rows()
        .iter()
        .filter(|r| r.doubtful)
        .map(|r| (r.table, r.case))
        .collect();
    let mut out = Vec::new();
    for t in &nodes {
        for s in &nodes {
            let m: Vec<String> = all_matches(t, s)?
                .into_iter()
                .filter(|p| !doubtful.contains(&(p.table, p.case)))
                .map(|p| p.label())
                .collect();
            if m.len() > 1 {
                out.push((t.perm().to_text(), s.perm().to_text(), m));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed_perm::SignedPermutation;

    fn c_inv(v: &[i32]) -> Involution {
        let sys = RootSystem::new(CartanType::C, v.len()).unwrap();
        Involution::new(sys, SignedPermutation::new(GroupTag::BC, v.to_vec()).unwrap()).unwrap()
    }

    fn from_roots(n: usize, roots: &[Root]) -> Involution {
        Involution::from_support(RootSystem::new(CartanType::C, n).unwrap(), roots).unwrap()
    }

    #[test]
    fn worked_pair_is_1_12() {
        let tau = from_roots(4, &[Root::Diff(1, 3), Root::Sum(2, 4)]);
        let sigma = from_roots(4, &[Root::Diff(1, 2), Root::Sum(3, 4)]);
        let t = classify_pair(&tau, &sigma).unwrap().unwrap();
        assert_eq!(t.label(), "1.12");
        assert_eq!(t.witness["i"], 1);
        assert_eq!(t.witness["k"], 2);
        assert_eq!(t.witness["j"], 3);
        assert_eq!(t.witness["l"], 4);
        assert!(is_basis_admissible(&tau, &sigma).unwrap());
    }

    #[test]
    fn support_only_on_tau_side() {
        let tau = from_roots(3, &[Root::Diff(1, 3)]);
        let sigma = c_inv(&[1, 2, 3]);
        assert_eq!(classify_pair(&tau, &sigma).unwrap().unwrap().label(), "1.19");
    }

    #[test]
    fn equal_and_non_basis() {
        let w = c_inv(&[2, 1, 3]);
        assert_eq!(classify_pair(&w, &w).unwrap(), None);
        assert!(!is_basis_admissible(&w, &w).unwrap());
        let long = c_inv(&[-1, 2, 3]);
        assert!(is_basis_admissible(&long, &w).is_err());
        assert_eq!(classify_pair(&long, &c_inv(&[1, 2, 3])).unwrap().unwrap().label(), "3.1");
        let b = Involution::new(
            RootSystem::new(CartanType::B, 3).unwrap(),
            SignedPermutation::new(GroupTag::BC, vec![2, 1, 3]).unwrap(),
        )
        .unwrap();
        assert!(classify_pair(&b, &b).is_err());
    }

    #[test]
    fn chains_small_ranks() {
        for n in 2..=3 {
            assert!(verify_conjecture27(n, EdgePolicy::Strict).unwrap().passed());
            assert!(verify_corollary26(n, EdgePolicy::Strict).unwrap().passed());
        }
        let r = verify_corollary26(2, EdgePolicy::Loose).unwrap();
        assert_eq!(r.details["nodes"], json!(6));
    }

    #[test]
    fn chain_endpoints() {
        let g = ChainGraph::build(3, true, EdgePolicy::Strict).unwrap();
        let top = (0..g.nodes().len()).max_by_key(|&v| g.nodes()[v].length()).unwrap();
        let id = g.index_of(&c_inv(&[1, 2, 3])).unwrap();
        let c = g.chain(top, id).unwrap();
        assert_eq!((c[0], *c.last().unwrap()), (top, id));
        for w in c.windows(2) {
            assert!(g.successors(w[0]).contains(&w[1]));
            assert!(g.below(w[1], w[0]));
        }
        let rep = g.chain_report(top, id, EdgePolicy::Strict);
        assert_eq!(rep.target, "1,2,3");
    }
}
