//! Command-line front end. [`run`] parses arguments, executes one command
//! and returns the process exit status: 0 on success, 1 when a verification
//! reports failures, 2 on usage or input errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use orbitrank::bruhat_order::{compare_bruhat, rank_matrix, rank_matrix_star};
use orbitrank::incitti_chains::{verify_conjecture27, verify_corollary26, EdgePolicy};
use orbitrank::involution::support;
use orbitrank::matrix_rep::Realization;
use orbitrank::orbit_analysis::{degeneration_case_1_12, degeneration_ex23, ex28_report, orbit_samples, PairRule};
use orbitrank::poset::Poset;
use orbitrank::report::Report;
use orbitrank::root_system::parse_roots;
use orbitrank::verify::{verify_dim, verify_prop24, verify_rank_invariants, verify_thm15, verify_thm25, Sampling};
use orbitrank::{CartanType, Error, Involution, Root, RootSystem, SignedPermutation};

/// Largest rank accepted by commands that enumerate involutions.
pub const MAX_ENUMERATIVE_RANK: usize = 7;
/// Largest rank accepted by commands that check all pairs.
pub const MAX_PAIR_RANK: usize = 5;

#[derive(Parser, Debug)]
#[command(name = "orbitrank", version, about = "Bruhat order, involution supports and coadjoint orbit checks")]
struct Cli {
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Group {
    #[arg(long = "type", default_value = "B")]
    ty: CartanType,
    #[arg(long)]
    rank: usize,
}

impl Group {
    fn system(&self) -> orbitrank::Result<RootSystem> {
        RootSystem::new(self.ty, self.rank)
    }

    fn perm(&self, text: &str) -> orbitrank::Result<SignedPermutation> {
        let w = SignedPermutation::parse(self.system()?.group_tag(), text)?;
        if w.n() != self.rank {
            return Err(Error::RankMismatch(w.n(), self.rank));
        }
        Ok(w)
    }
}

#[derive(Args, Debug, Clone, Copy)]
struct SamplingArgs {
    #[arg(long, default_value_t = 50)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Bound on numerators and denominators of random coefficients.
    #[arg(long, default_value_t = 3)]
    bound: i64,
}

impl From<SamplingArgs> for Sampling {
    fn from(s: SamplingArgs) -> Self {
        Sampling {
            samples: s.samples,
            seed: s.seed,
            bound: s.bound,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare two signed permutations in the Bruhat order.
    Bruhat {
        #[command(flatten)]
        group: Group,
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Rank matrix of a signed permutation as CSV.
    RankMatrix {
        #[command(flatten)]
        group: Group,
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
        /// Keep only the strictly lower part.
        #[arg(long)]
        star: bool,
    },
    /// Support of a basis involution.
    Support {
        #[command(flatten)]
        group: Group,
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
    },
    /// Seeded points of the orbit attached to a set of orthogonal roots.
    OrbitSample {
        #[command(flatten)]
        group: Group,
        /// Comma-separated roots, e.g. `e1-e2,e3+e4`.
        #[arg(long)]
        support: String,
        #[command(flatten)]
        sampling: SamplingArgs,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Hasse diagrams.
    Poset {
        #[command(subcommand)]
        action: PosetAction,
    },
}

#[derive(Subcommand, Debug)]
enum Suite {
    /// Orbit dimension against length.
    Dim {
        #[command(flatten)]
        group: Group,
    },
    /// Corner ranks of orbit samples.
    Ranks {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        sampling: SamplingArgs,
    },
    /// Vanishing of sums of minors on orbits of type D.
    Prop24 {
        #[arg(long)]
        rank: usize,
        #[command(flatten)]
        sampling: SamplingArgs,
        #[arg(long, default_value = "mirrored", value_parser = parse_rule)]
        rule: PairRule,
        /// Keep only this many involutions, those with the most configurations.
        #[arg(long)]
        max_involutions: Option<usize>,
    },
    /// Separating minors for pairs failing the parity clause in type D.
    Thm25 {
        #[arg(long)]
        rank: usize,
        #[command(flatten)]
        sampling: SamplingArgs,
    },
    /// Short-root degeneration in B4.
    Ex23,
    /// Non-basis pair in B4.
    Ex28 {
        #[command(flatten)]
        sampling: SamplingArgs,
    },
    /// Degeneration for a pair of type 1.12.
    Case112 {
        #[arg(long = "type", default_value = "B")]
        ty: CartanType,
        #[arg(long, default_value_t = 4)]
        rank: usize,
        /// `i,k,j,l` with `i < k < j < l`.
        #[arg(long, default_value = "1,2,3,4")]
        indices: String,
        /// The upper involution; defaults to `s_{ei-ej} s_{ek+el}`.
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
    },
    /// Chains of basis-admissible pairs.
    Conj27 {
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value = "strict")]
        policy: EdgePolicy,
    },
    /// Chains of admissible pairs.
    Cor26 {
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value = "strict")]
        policy: EdgePolicy,
    },
    /// Star order against Bruhat order on involutions of C_n.
    Thm15 {
        #[arg(long)]
        rank: usize,
    },
}

#[derive(Subcommand, Debug)]
enum PosetAction {
    /// Bruhat order on the basis involutions (all involutions in type A).
    Export {
        #[command(flatten)]
        group: Group,
        /// Graphviz output instead of JSON.
        #[arg(long)]
        dot: bool,
    },
}

fn parse_rule(s: &str) -> Result<PairRule, String> {
    match s {
        "mirrored" => Ok(PairRule::Mirrored),
        "crossed" => Ok(PairRule::Crossed),
        _ => Err(format!("unknown pair rule `{s}` (mirrored|crossed)")),
    }
}

fn check_rank(rank: usize, max: usize) -> orbitrank::Result<()> {
    if rank > max {
        return Err(Error::Unsupported(format!("rank {rank} > {max}")));
    }
    Ok(())
}

fn parse_indices(s: &str) -> orbitrank::Result<[usize; 4]> {
    let v: Vec<usize> = s
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad index `{t}`"))))
        .collect::<orbitrank::Result<_>>()?;
    v.try_into()
        .map_err(|v: Vec<usize>| Error::Parse(format!("expected 4 indices, got {}", v.len())))
}

/// Text output and whether it records failures.
struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn value(v: Value) -> Self {
        Self {
            text: serde_json::to_string_pretty(&v).expect("json") + "\n",
            failed: false,
        }
    }

    fn report(r: Report) -> Self {
        Self {
            failed: !r.passed(),
            text: r.to_json() + "\n",
        }
    }
}

fn case112(ty: CartanType, rank: usize, indices: &str, tau: Option<&str>) -> orbitrank::Result<Report> {
    let [i, k, j, l] = parse_indices(indices)?;
    let sys = RootSystem::new(ty, rank)?;
    let tau = match tau {
        Some(text) => Involution::new(sys, SignedPermutation::parse(sys.group_tag(), text)?)?,
        None => {
            if !(1 <= i && i < k && k < j && j < l && l <= rank) {
                return Err(Error::HypothesisNotSatisfied(format!(
                    "need 1 <= i < k < j < l <= n, got {i},{k},{j},{l}"
                )));
            }
            Involution::from_support(sys, &[Root::Diff(i, j), Root::Sum(k, l)])?
        }
    };
    degeneration_case_1_12(&tau, i, k, j, l)
}

fn execute(command: Command) -> orbitrank::Result<Output> {
    Ok(match command {
        Command::Bruhat { group, lhs, rhs } => {
            let verdict = compare_bruhat(&group.perm(&lhs)?, &group.perm(&rhs)?)?;
            Output::value(serde_json::to_value(verdict).expect("json"))
        }
        Command::RankMatrix { group, perm, star } => {
            let w = group.perm(&perm)?;
            let m = if star { rank_matrix_star(&w) } else { rank_matrix(&w) };
            Output {
                text: m.to_csv(),
                failed: false,
            }
        }
        Command::Support { group, perm } => {
            let roots = support(&group.perm(&perm)?, group.ty)?;
            Output::value(json!(roots))
        }
        Command::OrbitSample { group, support, sampling } => {
            let real = Realization::new(group.system()?);
            let roots = parse_roots(&support)?;
            let samples = orbit_samples(&real, &roots, sampling.samples, sampling.seed, sampling.bound)?;
            let points: Vec<Value> = samples
                .iter()
                .map(|s| {
                    json!({
                        "seed": s.seed,
                        "xi": s.xi.iter().map(|(r, v)| json!([r, v.to_string()])).collect::<Vec<_>>(),
                        "matrix": s.point.matrix().to_strings(),
                    })
                })
                .collect();
            Output::value(json!({
                "type": group.ty.to_string(),
                "rank": group.rank,
                "support": roots,
                "labels": real.labels().labels(),
                "sampling": Sampling::from(sampling),
                "samples": points,
            }))
        }
        Command::Verify { suite } => Output::report(match suite {
            Suite::Dim { group } => {
                check_rank(group.rank, MAX_ENUMERATIVE_RANK)?;
                verify_dim(group.ty, group.rank)?
            }
            Suite::Ranks { group, sampling } => {
                check_rank(group.rank, MAX_ENUMERATIVE_RANK)?;
                verify_rank_invariants(group.ty, group.rank, sampling.into())?
            }
            Suite::Prop24 {
                rank,
                sampling,
                rule,
                max_involutions,
            } => {
                check_rank(rank, MAX_ENUMERATIVE_RANK)?;
                verify_prop24(rank, sampling.into(), rule, max_involutions)?
            }
            Suite::Thm25 { rank, sampling } => {
                check_rank(rank, MAX_PAIR_RANK)?;
                verify_thm25(rank, sampling.into())?
            }
            Suite::Ex23 => degeneration_ex23(),
            Suite::Ex28 { sampling } => ex28_report(sampling.samples, sampling.seed, sampling.bound)?,
            Suite::Case112 { ty, rank, indices, tau } => case112(ty, rank, &indices, tau.as_deref())?,
            Suite::Conj27 { rank, policy } => verify_conjecture27(rank, policy)?,
            Suite::Cor26 { rank, policy } => verify_corollary26(rank, policy)?,
            Suite::Thm15 { rank } => {
                check_rank(rank, MAX_PAIR_RANK)?;
                verify_thm15(rank)?
            }
        }),
        Command::Poset {
            action: PosetAction::Export { group, dot },
        } => {
            check_rank(group.rank, MAX_ENUMERATIVE_RANK)?;
            let p = Poset::basis_involutions(group.ty, group.rank)?;
            if dot {
                Output {
                    text: p.to_dot(),
                    failed: false,
                }
            } else {
                let elements: Vec<String> = p.elements().iter().map(|w| w.to_text()).collect();
                Output::value(json!({"elements": elements, "covers": p.covers()}))
            }
        }
    })
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                2
            } else {
                let _ = write!(stdout, "{e}");
                0
            };
            return code;
        }
    };
    let output = match execute(cli.command) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &output.text),
        None => stdout.write_all(output.text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return 2;
    }
    i32::from(output.failed)
}
