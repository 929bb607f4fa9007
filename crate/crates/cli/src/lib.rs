//! Command-line front end: argument model, run records and exit codes.
//!
//! Every command produces one [`RunRecord`]. It is printed as a summary
//! or as JSON, and optionally appended as a single line to an output file.

use std::fmt::Write as _;
use std::fs::OpenOptions;
use std::io::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use fourier_minors::minors::{principal_minor, MinorRecord};
use fourier_minors::search::{
    enumerate_good_permutations, find_good_permutation, find_good_permutation_resumable, first_singular_subset,
    AssignmentOrder, Permutation, SearchConfig, SearchOutcome,
};
use fourier_minors::theorems::{
    build_witness, is_square_free, scan_all, verify_theorem1, witness_sweep, ScanConfig, ScanReport, Theorem1Report,
    WitnessPlan, DEFAULT_EXEMPLAR_CAP, DEFAULT_SCAN_CEILING,
};
use fourier_minors::{CheckMode, CycRing, IndexSet};

pub const SCHEMA_VERSION: u32 = 1;
pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PRECONDITION: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "fourier-minors",
    version,
    about = "Exact principal minors of Fourier matrices"
)]
pub struct Cli {
    /// Append the run record as one JSON line to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Print the run record as JSON instead of a summary.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Exact determinant of one principal submatrix F_N[K].
    Det(DetArgs),
    /// Classify every principal minor of F_N.
    Scan(ScanArgs),
    /// Build singular principal submatrices for non-square-free N.
    Witness(WitnessArgs),
    /// Check all 2x2 and 3x3 principal minors for square-free N.
    Theorem1(Theorem1Args),
    /// Search for a column permutation with no vanishing principal minor.
    PermSearch(PermSearchArgs),
    /// Check one column permutation against all principal minors.
    PermCheck(PermCheckArgs),
    /// List good column permutations in lexicographic order.
    Enumerate(EnumerateArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Det(_) => "det",
            Command::Scan(_) => "scan",
            Command::Witness(_) => "witness",
            Command::Theorem1(_) => "theorem1",
            Command::PermSearch(_) => "perm-search",
            Command::PermCheck(_) => "perm-check",
            Command::Enumerate(_) => "enumerate",
        }
    }

    /// Whether every verdict in the payload rests on exact arithmetic alone.
    pub fn exact(&self) -> bool {
        match self {
            Command::Scan(a) => a.mode() == CheckMode::Exact,
            Command::PermSearch(a) => a.exact,
            Command::PermCheck(a) => a.exact,
            Command::Enumerate(_) => false,
            _ => true,
        }
    }
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetArgs {
    /// Matrix order N.
    #[arg(long)]
    pub n: usize,
    /// Comma-separated residues.
    #[arg(long, value_delimiter = ',', required = true)]
    pub set: Vec<usize>,
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanArgs {
    /// Matrix order N.
    #[arg(long)]
    pub n: usize,
    /// Let the certified floating-point prefilter settle nonsingular minors.
    #[arg(long)]
    pub prefilter: bool,
    /// Force exact arithmetic for every minor (overrides --prefilter).
    #[arg(long)]
    pub exact: bool,
    /// Test all sizes instead of mirroring r to N - r.
    #[arg(long)]
    pub no_complement: bool,
    /// Test every index set instead of one per translation class.
    #[arg(long)]
    pub no_shift_classes: bool,
    /// Singular sets listed per size.
    #[arg(long, default_value_t = DEFAULT_EXEMPLAR_CAP)]
    pub exemplars: usize,
    /// Refuse larger N unless --allow-over-ceiling is given.
    #[arg(long, default_value_t = DEFAULT_SCAN_CEILING)]
    pub ceiling: usize,
    /// Permit N above the ceiling, up to the hard cap of 40.
    #[arg(long)]
    pub allow_over_ceiling: bool,
    /// Worker threads; all cores when absent.
    #[arg(long)]
    pub jobs: Option<usize>,
}

impl ScanArgs {
    fn mode(&self) -> CheckMode {
        if self.prefilter && !self.exact {
            CheckMode::Prefilter
        } else {
            CheckMode::Exact
        }
    }

    fn config(&self) -> ScanConfig {
        ScanConfig {
            mode: self.mode(),
            use_complement: !self.no_complement,
            use_shift_classes: !self.no_shift_classes,
            exemplar_cap: self.exemplars,
            ceiling: self.ceiling,
            allow_over_ceiling: self.allow_over_ceiling,
            jobs: self.jobs,
        }
    }
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessArgs {
    /// Matrix order N.
    #[arg(long)]
    pub n: usize,
    /// Submatrix size.
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    pub r: Option<usize>,
    /// Every size 2 ≤ r ≤ N-2.
    #[arg(long)]
    pub all: bool,
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Args {
    /// Matrix order N.
    #[arg(long, required_unless_present = "range", conflicts_with = "range")]
    pub n: Option<usize>,
    /// Inclusive range `A..B`; moduli that are not square-free are skipped.
    #[arg(long, value_name = "A..B")]
    pub range: Option<String>,
    /// Minor sizes to check.
    #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3])]
    pub sizes: Vec<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderArg {
    Ascending,
    MostConstrained,
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermSearchArgs {
    /// Matrix order N.
    #[arg(long)]
    pub n: usize,
    /// Wall-clock budget in seconds; unlimited when absent.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_secs: Option<u64>,
    /// Worker threads; all cores when absent.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Checkpoint file: completed work units are skipped and new ones appended.
    #[arg(long, value_name = "PATH")]
    pub resume: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OrderArg::Ascending)]
    pub order: OrderArg,
    /// Largest subset size tested during descent.
    #[arg(long)]
    pub max_incremental: Option<usize>,
    /// Pin the first assigned value to 0.
    #[arg(long)]
    pub fix_first: bool,
    /// Leading positions fixed per work unit.
    #[arg(long, default_value_t = 2)]
    pub split_depth: usize,
    /// Disable the floating-point prefilter.
    #[arg(long)]
    pub exact: bool,
}

impl PermSearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            modulus: self.n,
            order: match self.order {
                OrderArg::Ascending => AssignmentOrder::Ascending,
                OrderArg::MostConstrained => AssignmentOrder::MostConstrained,
            },
            max_incremental_size: self.max_incremental,
            fix_first: self.fix_first,
            mode: if self.exact { CheckMode::Exact } else { CheckMode::Prefilter },
            split_depth: self.split_depth,
            time_budget_ms: self.budget_secs.map(|s| s.saturating_mul(1000)),
            jobs: self.jobs,
        }
    }
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermCheckArgs {
    /// Comma-separated images σ(0),…,σ(N-1).
    #[arg(long, value_delimiter = ',', required = true)]
    pub perm: Vec<usize>,
    /// Disable the floating-point prefilter.
    #[arg(long)]
    pub exact: bool,
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateArgs {
    /// Matrix order N.
    #[arg(long)]
    pub n: usize,
    /// Stop after this many permutations.
    #[arg(long, default_value_t = 1000)]
    pub limit: usize,
    /// Permit N above the enumeration ceiling.
    #[arg(long)]
    pub allow_over_ceiling: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Entry {
    pub modulus: usize,
    pub report: Option<Theorem1Report>,
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermCheck {
    pub permutation: Permutation,
    pub good: bool,
    pub first_singular: Option<IndexSet>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum Payload {
    Minor(MinorRecord),
    Scan(ScanReport),
    Witnesses(Vec<WitnessPlan>),
    Theorem1(Vec<Theorem1Entry>),
    Search(SearchOutcome),
    PermCheck(PermCheck),
    Permutations(Vec<Permutation>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub schema_version: u32,
    pub artifact_version: String,
    pub command: String,
    pub config: Command,
    pub exact: bool,
    pub wall_time_ms: u64,
    pub payload: Payload,
}

impl RunRecord {
    /// Whether the run ended without a definite answer.
    pub fn inconclusive(&self) -> bool {
        matches!(&self.payload, Payload::Search(o) if o.inconclusive)
    }
}

fn parse_range(text: &str) -> anyhow::Result<(usize, usize)> {
    let (a, b) = text
        .split_once("..")
        .with_context(|| format!("range {text:?} is not of the form A..B"))?;
    let a: usize = a.trim().parse().with_context(|| format!("bad range start in {text:?}"))?;
    let b: usize = b.trim().parse().with_context(|| format!("bad range end in {text:?}"))?;
    if a > b {
        bail!("empty range {text:?}");
    }
    Ok((a, b))
}

/// Runs one command and returns its record.
pub fn execute(command: &Command) -> anyhow::Result<RunRecord> {
    let start = Instant::now();
    let payload = match command {
        Command::Det(a) => {
            let ring = CycRing::new(a.n)?;
            let set = IndexSet::new(a.n, a.set.iter().copied())?;
            if set.len() != a.set.len() {
                bail!("index list contains duplicates");
            }
            Payload::Minor(principal_minor(&ring, &set)?)
        }
        Command::Scan(a) => Payload::Scan(scan_all(a.n, &a.config())?),
        Command::Witness(a) => Payload::Witnesses(match a.r {
            Some(r) => vec![build_witness(a.n, r)?],
            None => witness_sweep(a.n)?,
        }),
        Command::Theorem1(a) => {
            let entries = match (&a.range, a.n) {
                (Some(range), _) => {
                    let (lo, hi) = parse_range(range)?;
                    (lo.max(4)..=hi)
                        .map(|n| -> anyhow::Result<Theorem1Entry> {
                            Ok(if is_square_free(n) {
                                Theorem1Entry {
                                    modulus: n,
                                    report: Some(verify_theorem1(n, &a.sizes)?),
                                    skipped: None,
                                }
                            } else {
                                Theorem1Entry {
                                    modulus: n,
                                    report: None,
                                    skipped: Some(format!("{n} is not square-free")),
                                }
                            })
                        })
                        .collect::<anyhow::Result<Vec<_>>>()?
                }
                (None, Some(n)) => vec![Theorem1Entry {
                    modulus: n,
                    report: Some(verify_theorem1(n, &a.sizes)?),
                    skipped: None,
                }],
                (None, None) => bail!("either --n or --range is required"),
            };
            Payload::Theorem1(entries)
        }
        Command::PermSearch(a) => {
            let config = a.config();
            Payload::Search(match &a.resume {
                Some(path) => find_good_permutation_resumable(&config, path)?,
                None => find_good_permutation(&config)?,
            })
        }
        Command::PermCheck(a) => {
            let permutation = Permutation::new(a.perm.clone())?;
            let mode = if a.exact { CheckMode::Exact } else { CheckMode::Prefilter };
            let first_singular = first_singular_subset(&permutation, mode)?;
            Payload::PermCheck(PermCheck {
                permutation,
                good: first_singular.is_none(),
                first_singular,
            })
        }
        Command::Enumerate(a) => Payload::Permutations(enumerate_good_permutations(a.n, a.limit, a.allow_over_ceiling)?),
    };
    Ok(RunRecord {
        schema_version: SCHEMA_VERSION,
        artifact_version: ARTIFACT_VERSION.to_string(),
        command: command.name().to_string(),
        config: command.clone(),
        exact: command.exact(),
        wall_time_ms: start.elapsed().as_millis() as u64,
        payload,
    })
}

/// Exit status for a failed run.
pub fn error_exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<fourier_minors::Error>() {
        Some(e) if e.is_precondition() => EXIT_PRECONDITION,
        _ => EXIT_USAGE,
    }
}

/// Appends `record` as a single JSON line.
pub fn append_record(path: &std::path::Path, record: &RunRecord) -> anyhow::Result<()> {
    let mut line = serde_json::to_string(record)?;
    line.push('\n');
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .with_context(|| format!("opening {}", path.display()))?;
    file.write_all(line.as_bytes())
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Human-readable summary of a record.
pub fn summary(record: &RunRecord) -> String {
    let mut s = String::new();
    match &record.payload {
        Payload::Minor(m) => {
            let _ = writeln!(s, "F_{}[{}]: {}", m.set.modulus(), m.set, if m.singular { "singular" } else { "nonsingular" });
            if let Some(d) = &m.determinant {
                let coeffs: Vec<String> = d.coeffs().iter().map(ToString::to_string).collect();
                let _ = writeln!(s, "det = {d}");
                let _ = writeln!(
                    s,
                    "coefficients mod Phi_{} (totient {}): [{}]",
                    d.modulus(),
                    coeffs.len(),
                    coeffs.join(", ")
                );
            }
        }
        Payload::Scan(r) => {
            let _ = writeln!(
                s,
                "N = {} ({}), {} mode, {} classes tested, {} settled by prefilter",
                r.modulus,
                if r.square_free { "square-free" } else { "not square-free" },
                if r.exact { "exact" } else { "prefilter" },
                r.stats.classes_tested,
                r.stats.prefilter_hits
            );
            let _ = writeln!(s, "{:>4}  {:>12}  first singular sets", "r", "singular");
            for size in &r.sizes {
                let shown: Vec<String> = size.exemplars.iter().take(3).map(|e| format!("{{{}}}", join(e))).collect();
                let _ = writeln!(s, "{:>4}  {:>12}  {}", size.size, size.singular_count, shown.join(" "));
            }
            let _ = writeln!(s, "total singular: {}", r.total_singular());
        }
        Payload::Witnesses(plans) => {
            for w in plans {
                let _ = writeln!(
                    s,
                    "r = {:>3}  {:?}  {}  ({}; verified {})",
                    w.size, w.case, w.set, w.certificate, w.verified_singular
                );
            }
        }
        Payload::Theorem1(entries) => {
            for e in entries {
                match (&e.report, &e.skipped) {
                    (Some(r), _) => {
                        let _ = writeln!(
                            s,
                            "N = {:>4}  {}  ({} pairs, {} triples; sizes {:?} certified)",
                            r.modulus,
                            if r.passed { "pass" } else { "FAIL" },
                            r.checked_2x2,
                            r.checked_3x3,
                            r.certified_sizes
                        );
                        if let Some(c) = &r.counterexample {
                            let _ = writeln!(s, "          counterexample {{{}}}", join(c));
                        }
                    }
                    (None, Some(why)) => {
                        let _ = writeln!(s, "N = {:>4}  skipped: {why}", e.modulus);
                    }
                    (None, None) => {}
                }
            }
        }
        Payload::Search(o) => {
            let verdict = match (&o.found, o.exhausted) {
                (Some(p), _) => format!("found {p}"),
                (None, true) => "exhausted: no good permutation".to_string(),
                (None, false) if o.timed_out => "inconclusive: time budget expired".to_string(),
                (None, false) => "inconclusive".to_string(),
            };
            let _ = writeln!(s, "N = {}: {verdict}", o.modulus);
            let _ = writeln!(
                s,
                "{} nodes, units {}/{} complete ({} resumed), prunes by size {:?}",
                o.nodes, o.units_completed, o.units_total, o.units_resumed, o.prunes_by_size
            );
        }
        Payload::PermCheck(c) => {
            let _ = match &c.first_singular {
                None => writeln!(s, "{} is good", c.permutation),
                Some(k) => writeln!(s, "{} is not good: principal submatrix {} is singular", c.permutation, k),
            };
        }
        Payload::Permutations(list) => {
            let _ = writeln!(s, "{} good permutations", list.len());
            for p in list {
                let _ = writeln!(s, "{p}");
            }
        }
    }
    s
}
