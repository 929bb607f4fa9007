//! Column permutations `σ` for which every principal minor of
//! `(ω^{k·σ(ℓ)})` is nonzero.
//!
//! The principal submatrix on `K` is the Fourier submatrix with rows `K`
//! and columns `σ(K)`. The search assigns `σ` one position at a time. Once
//! position `ℓ` is fixed, every subset of assigned positions that contains
//! `ℓ` is tested, smallest first. Over a full branch these families
//! partition the nonempty subsets, so a completed branch is good.
//!
//! Translating the image, `σ ↦ σ + t`, multiplies row `k` by the unit
//! `ω^{kt}` and so preserves every verdict. [`SearchConfig::fix_first`] uses
//! this to pin the first assigned value to 0.

mod checkpoint;

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{combinations, full_mask, members};
use crate::cyclotomic::{Ball, CycRing};
use crate::error::{Error, Result};
use crate::minors::det::{ball_det_in_place, fourier_balls_into};
use crate::minors::{minor_verdict, CheckMode, IndexSet};

pub use checkpoint::{read_checkpoint, CheckpointHeader, CheckpointLine, UnitRecord, CHECKPOINT_SCHEMA_VERSION};
use checkpoint::CheckpointLog;

/// Largest modulus for searches and full goodness checks.
pub const SEARCH_CEILING: usize = 24;
/// Largest modulus [`enumerate_good_permutations`] accepts without override.
pub const ENUMERATE_CEILING: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "PermutationRepr")]
pub struct Permutation {
    modulus: usize,
    image: Vec<usize>,
}

#[derive(Deserialize)]
struct PermutationRepr {
    modulus: usize,
    image: Vec<usize>,
}

impl TryFrom<PermutationRepr> for Permutation {
    type Error = Error;

    fn try_from(r: PermutationRepr) -> Result<Permutation> {
        if r.modulus != r.image.len() {
            return Err(Error::InvalidPermutation(format!(
                "modulus {} but {} images",
                r.modulus,
                r.image.len()
            )));
        }
        Permutation::new(r.image)
    }
}

impl Permutation {
    /// `image[ℓ] = σ(ℓ)`; must be a bijection on `{0, …, N-1}`.
    pub fn new(image: Vec<usize>) -> Result<Permutation> {
        let n = image.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty image".into()));
        }
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n {
                return Err(Error::InvalidPermutation(format!("{v} is not a residue modulo {n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("{v} occurs twice")));
            }
        }
        Ok(Permutation { modulus: n, image })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            modulus: n,
            image: (0..n).collect(),
        }
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `ℓ ↦ σ(ℓ) + t mod N`.
    pub fn translate(&self, t: usize) -> Permutation {
        Permutation {
            modulus: self.modulus,
            image: self.image.iter().map(|&v| (v + t) % self.modulus).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.image)
    }
}

fn check_ceiling(n: usize, ceiling: usize, what: &'static str) -> Result<()> {
    if n > ceiling {
        return Err(Error::CeilingExceeded {
            what,
            value: n,
            ceiling,
        });
    }
    Ok(())
}

/// Reusable buffers for subset tests.
#[derive(Default)]
struct Scratch {
    rows: Vec<usize>,
    cols: Vec<usize>,
    balls: Vec<Ball>,
}

fn subset_singular(ring: &CycRing, image: &[usize], mask: u64, mode: CheckMode, scratch: &mut Scratch) -> Result<bool> {
    let n = ring.modulus();
    scratch.rows.clear();
    let mut rest = mask;
    while rest != 0 {
        scratch.rows.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    match scratch.rows[..] {
        // a single root of unity
        [_] => return Ok(false),
        // ω^{aσ(a)+bσ(b)} = ω^{aσ(b)+bσ(a)} iff N | (a-b)(σ(a)-σ(b))
        [a, b] => {
            let da = (a + n - b) % n;
            let ds = (image[a] + n - image[b]) % n;
            return Ok((da * ds).is_multiple_of(n));
        }
        _ => {}
    }
    scratch.cols.clear();
    scratch.cols.extend(scratch.rows.iter().map(|&p| image[p]));
    let r = scratch.rows.len();
    if mode == CheckMode::Prefilter {
        fourier_balls_into(ring, &scratch.rows, &scratch.cols, &mut scratch.balls);
        if ball_det_in_place(&mut scratch.balls, r).is_some_and(|d| d.excludes_zero()) {
            return Ok(false);
        }
    }
    Ok(minor_verdict(ring, &scratch.rows, &scratch.cols, CheckMode::Exact)?.singular)
}

/// The lowest-mask index set whose principal minor vanishes, if any.
///
/// All `2^N - 1` subsets are examined; complementation is not assumed for
/// permuted matrices.
pub fn first_singular_subset(sigma: &Permutation, mode: CheckMode) -> Result<Option<IndexSet>> {
    let n = sigma.modulus();
    check_ceiling(n, SEARCH_CEILING, "permutation modulus")?;
    let ring = CycRing::new(n)?;
    let hit = (1..=full_mask(n))
        .into_par_iter()
        .map_init(Scratch::default, |scratch, mask| {
            subset_singular(&ring, sigma.image(), mask, mode, scratch).map(|s| s.then_some(mask))
        })
        .find_map_first(|r| r.transpose());
    hit.transpose()
        .map(|m| m.map(|mask| IndexSet::from_mask(n, mask)))
}

/// Whether every principal minor of `(ω^{k·σ(ℓ)})` is nonzero.
pub fn is_good_permutation(sigma: &Permutation, mode: CheckMode) -> Result<bool> {
    Ok(first_singular_subset(sigma, mode)?.is_none())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AssignmentOrder {
    /// Positions `0, 1, …, N-1`.
    #[default]
    Ascending,
    /// Positions by decreasing `gcd(ℓ, N)`. Row `ℓ` takes only
    /// `N / gcd(ℓ, N)` distinct values, so these positions collide first.
    MostConstrained,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub modulus: usize,
    pub order: AssignmentOrder,
    /// Largest subset tested during descent; `None` tests all sizes.
    /// Completed branches are fully re-checked when this is limited.
    pub max_incremental_size: Option<usize>,
    /// Pin the first assigned value to 0 (translation symmetry).
    pub fix_first: bool,
    pub mode: CheckMode,
    /// Number of leading positions fixed per work unit.
    pub split_depth: usize,
    pub time_budget_ms: Option<u64>,
    pub jobs: Option<usize>,
}

impl SearchConfig {
    pub fn new(modulus: usize) -> SearchConfig {
        SearchConfig {
            modulus,
            order: AssignmentOrder::Ascending,
            max_incremental_size: None,
            fix_first: false,
            mode: CheckMode::Prefilter,
            split_depth: 2,
            time_budget_ms: None,
            jobs: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        check_ceiling(self.modulus, SEARCH_CEILING, "search modulus")?;
        if self.max_incremental_size == Some(0) {
            return Err(Error::InvalidConfig("max_incremental_size must be positive".into()));
        }
        if self.time_budget_ms == Some(0) {
            return Err(Error::InvalidConfig("time budget must be positive".into()));
        }
        if self.jobs == Some(0) {
            return Err(Error::InvalidConfig("jobs must be positive".into()));
        }
        Ok(())
    }

    fn header(&self) -> CheckpointHeader {
        CheckpointHeader {
            schema_version: CHECKPOINT_SCHEMA_VERSION,
            modulus: self.modulus,
            order: position_order(self.modulus, self.order),
            fix_first: self.fix_first,
            split_depth: self.split_depth.min(self.modulus),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub modulus: usize,
    pub found: Option<Permutation>,
    /// Every work unit finished without finding a good permutation.
    pub exhausted: bool,
    /// Neither found nor exhausted.
    pub inconclusive: bool,
    pub timed_out: bool,
    pub nodes: u64,
    /// `prunes_by_size[r]`: branches cut by a singular `r×r` minor.
    pub prunes_by_size: Vec<u64>,
    /// Completed branches rejected by the final full check.
    pub late_rejections: u64,
    pub units_total: usize,
    pub units_completed: usize,
    pub units_resumed: usize,
    pub wall_time_ms: u64,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn position_order(n: usize, order: AssignmentOrder) -> Vec<usize> {
    let mut positions: Vec<usize> = (0..n).collect();
    if order == AssignmentOrder::MostConstrained {
        positions.sort_by_key(|&l| (std::cmp::Reverse(gcd(l, n)), l));
    }
    positions
}

/// For each step `t`, the subsets (as position masks) tested after
/// assigning `order[t]`: all subsets of `order[..=t]` containing `order[t]`
/// with at most `max_size` elements, ordered by size.
pub fn incremental_family(order: &[usize], max_size: usize) -> Vec<Vec<u64>> {
    (0..order.len())
        .map(|t| {
            let bit = 1u64 << order[t];
            let mut out = Vec::new();
            for size in 1..=max_size.min(t + 1) {
                for combo in combinations(t, size - 1) {
                    let mask = members(combo).into_iter().fold(bit, |m, i| m | 1u64 << order[i]);
                    out.push(mask);
                }
            }
            out
        })
        .collect()
}

/// Injective value sequences of length `depth`, lexicographic.
fn unit_prefixes(n: usize, depth: usize, fix_first: bool) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for level in 0..depth {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                let free: Vec<usize> = (0..n)
                    .filter(|v| !p.contains(v) && !(fix_first && level == 0 && *v != 0))
                    .collect();
                free.into_iter()
                    .map(move |v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

enum Halt {
    /// The leaf callback asked to stop.
    Leaf,
    Interrupted,
}

struct Searcher<'a> {
    ring: &'a CycRing,
    order: &'a [usize],
    steps: &'a [Vec<u64>],
    mode: CheckMode,
    full_recheck: bool,
    fix_first: bool,
    image: Vec<usize>,
    used: u64,
    nodes: u64,
    prunes: Vec<u64>,
    late_rejections: u64,
    scratch: Scratch,
    interrupt: &'a (dyn Fn() -> bool + Sync),
}

impl<'a> Searcher<'a> {
    fn n(&self) -> usize {
        self.order.len()
    }

    fn place(&mut self, t: usize, v: usize) -> Result<bool> {
        self.image[self.order[t]] = v;
        self.used |= 1 << v;
        self.nodes += 1;
        for &mask in &self.steps[t] {
            if subset_singular(self.ring, &self.image, mask, self.mode, &mut self.scratch)? {
                self.prunes[mask.count_ones() as usize] += 1;
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn unplace(&mut self, v: usize) {
        self.used &= !(1 << v);
    }

    fn leaf_is_good(&mut self) -> Result<bool> {
        if !self.full_recheck {
            return Ok(true);
        }
        for mask in 1..=full_mask(self.n()) {
            if subset_singular(self.ring, &self.image, mask, self.mode, &mut self.scratch)? {
                self.late_rejections += 1;
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn descend(&mut self, t: usize, leaf: &mut dyn FnMut(&[usize]) -> bool) -> Result<Option<Halt>> {
        if t == self.n() {
            if self.leaf_is_good()? && leaf(&self.image) {
                return Ok(Some(Halt::Leaf));
            }
            return Ok(None);
        }
        if (self.interrupt)() {
            return Ok(Some(Halt::Interrupted));
        }
        for v in 0..self.n() {
            if self.used >> v & 1 == 1 || (self.fix_first && t == 0 && v != 0) {
                continue;
            }
            let ok = self.place(t, v)?;
            if ok {
                if let Some(h) = self.descend(t + 1, leaf)? {
                    self.unplace(v);
                    return Ok(Some(h));
                }
            }
            self.unplace(v);
        }
        Ok(None)
    }

    /// Searches the subtree below `prefix`; `Ok(None)` means interrupted.
    fn run_unit(&mut self, prefix: &[usize]) -> Result<Option<Option<Vec<usize>>>> {
        for (t, &v) in prefix.iter().enumerate() {
            if !self.place(t, v)? {
                return Ok(Some(None));
            }
        }
        let mut found = None;
        let halt = self.descend(prefix.len(), &mut |image| {
            found = Some(image.to_vec());
            true
        })?;
        Ok(match halt {
            Some(Halt::Interrupted) => None,
            _ => Some(found),
        })
    }
}

struct Plan {
    ring: std::sync::Arc<CycRing>,
    order: Vec<usize>,
    steps: Vec<Vec<u64>>,
    full_recheck: bool,
}

impl Plan {
    fn new(n: usize, order: AssignmentOrder, max_incremental_size: Option<usize>) -> Result<Plan> {
        let ring = CycRing::new(n)?;
        let order = position_order(n, order);
        let max = max_incremental_size.unwrap_or(n).min(n);
        let steps = incremental_family(&order, max);
        Ok(Plan {
            ring,
            order,
            steps,
            full_recheck: max < n,
        })
    }

    fn searcher<'a>(
        &'a self,
        mode: CheckMode,
        fix_first: bool,
        interrupt: &'a (dyn Fn() -> bool + Sync),
    ) -> Searcher<'a> {
        let n = self.order.len();
        Searcher {
            ring: &self.ring,
            order: &self.order,
            steps: &self.steps,
            mode,
            full_recheck: self.full_recheck,
            fix_first,
            image: vec![usize::MAX; n],
            used: 0,
            nodes: 0,
            prunes: vec![0; n + 1],
            late_rejections: 0,
            scratch: Scratch::default(),
            interrupt,
        }
    }
}

enum UnitStatus {
    Done { record: UnitRecord, resumed: bool },
    Interrupted { timed_out: bool, partial: UnitRecord },
    Skipped,
}

/// Backtracking search for a good permutation.
pub fn find_good_permutation(config: &SearchConfig) -> Result<SearchOutcome> {
    search(config, None)
}

/// As [`find_good_permutation`], logging completed work units to `path` and
/// skipping units already recorded there.
pub fn find_good_permutation_resumable(config: &SearchConfig, path: &Path) -> Result<SearchOutcome> {
    search(config, Some(path))
}

fn search(config: &SearchConfig, path: Option<&Path>) -> Result<SearchOutcome> {
    let start = Instant::now();
    config.validate()?;
    let n = config.modulus;
    let header = config.header();
    let plan = Plan::new(n, config.order, config.max_incremental_size)?;
    let units = unit_prefixes(n, header.split_depth, config.fix_first);

    let (log, done) = match path {
        Some(p) => {
            let (log, done) = CheckpointLog::open(p, &header)?;
            (Some(log), done)
        }
        None => (None, Vec::new()),
    };
    let done: HashMap<Vec<usize>, UnitRecord> = done.into_iter().map(|u| (u.prefix.clone(), u)).collect();
    let best = AtomicUsize::new(
        units
            .iter()
            .position(|p| done.get(p).is_some_and(|u| u.found.is_some()))
            .unwrap_or(usize::MAX),
    );
    let deadline = config.time_budget_ms.map(|ms| start + Duration::from_millis(ms));
    let log = Mutex::new(log);

    let run = || -> Vec<Result<UnitStatus>> {
        units
            .par_iter()
            .enumerate()
            .map(|(i, prefix)| {
                if let Some(record) = done.get(prefix) {
                    return Ok(UnitStatus::Done {
                        record: record.clone(),
                        resumed: true,
                    });
                }
                if i > best.load(Ordering::Relaxed) {
                    return Ok(UnitStatus::Skipped);
                }
                let timed_out = || deadline.is_some_and(|d| Instant::now() >= d);
                let interrupt = || best.load(Ordering::Relaxed) < i || timed_out();
                let mut s = plan.searcher(config.mode, config.fix_first, &interrupt);
                let result = s.run_unit(prefix)?;
                let mut record = UnitRecord {
                    prefix: prefix.clone(),
                    found: None,
                    nodes: s.nodes,
                    prunes_by_size: s.prunes,
                    late_rejections: s.late_rejections,
                };
                match result {
                    None => Ok(UnitStatus::Interrupted {
                        timed_out: timed_out(),
                        partial: record,
                    }),
                    Some(found) => {
                        if found.is_some() {
                            best.fetch_min(i, Ordering::Relaxed);
                        }
                        record.found = found;
                        if let Some(log) = log.lock().expect("checkpoint writer poisoned").as_mut() {
                            log.append(&record)?;
                        }
                        Ok(UnitStatus::Done {
                            record,
                            resumed: false,
                        })
                    }
                }
            })
            .collect()
    };
    let statuses = match config.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidConfig(e.to_string()))?
            .install(run),
        None => run(),
    };
    let statuses: Vec<UnitStatus> = statuses.into_iter().collect::<Result<_>>()?;

    let first_found = statuses.iter().position(|s| {
        matches!(s, UnitStatus::Done { record, .. } if record.found.is_some())
    });
    // Statistics cover the units up to the answer so that they do not
    // depend on scheduling.
    let counted = first_found.map_or(statuses.len(), |i| i + 1);
    let mut outcome = SearchOutcome {
        modulus: n,
        found: None,
        exhausted: false,
        inconclusive: false,
        timed_out: false,
        nodes: 0,
        prunes_by_size: vec![0; n + 1],
        late_rejections: 0,
        units_total: units.len(),
        units_completed: 0,
        units_resumed: 0,
        wall_time_ms: 0,
    };
    let mut all_done = true;
    let add = |outcome: &mut SearchOutcome, record: &UnitRecord| {
        outcome.nodes += record.nodes;
        outcome.late_rejections += record.late_rejections;
        for (a, b) in outcome.prunes_by_size.iter_mut().zip(&record.prunes_by_size) {
            *a += b;
        }
    };
    for status in &statuses[..counted] {
        match status {
            UnitStatus::Done { record, resumed } => {
                outcome.units_completed += 1;
                outcome.units_resumed += usize::from(*resumed);
                add(&mut outcome, record);
                if outcome.found.is_none() {
                    if let Some(image) = &record.found {
                        outcome.found = Some(Permutation::new(image.clone())?);
                    }
                }
            }
            UnitStatus::Interrupted { timed_out, partial } => {
                all_done = false;
                outcome.timed_out |= timed_out;
                add(&mut outcome, partial);
            }
            UnitStatus::Skipped => all_done = false,
        }
    }
    outcome.exhausted = outcome.found.is_none() && all_done;
    outcome.inconclusive = outcome.found.is_none() && !all_done;
    outcome.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(outcome)
}

/// Good permutations in lexicographic order of their images, at most
/// `limit` of them.
pub fn enumerate_good_permutations(n: usize, limit: usize, allow_over_ceiling: bool) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    check_ceiling(
        n,
        if allow_over_ceiling { SEARCH_CEILING } else { ENUMERATE_CEILING },
        "enumeration modulus",
    )?;
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    let plan = Plan::new(n, AssignmentOrder::Ascending, None)?;
    let never = || false;
    let mut s = plan.searcher(CheckMode::Prefilter, false, &never);
    s.descend(0, &mut |image| {
        out.push(Permutation {
            modulus: n,
            image: image.to_vec(),
        });
        out.len() >= limit
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 0, 2]).is_ok());
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::new(vec![]).is_err());
        let bad: std::result::Result<Permutation, _> = serde_json::from_str(r#"{"modulus":3,"image":[0,1]}"#);
        assert!(bad.is_err());
        let p = Permutation::new(vec![2, 0, 1]).unwrap();
        let back: Permutation = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(back, p);
        assert_eq!(p.translate(1).image(), &[0, 1, 2]);
    }

    #[test]
    fn goodness_examples() {
        for mode in [CheckMode::Exact, CheckMode::Prefilter] {
            assert!(is_good_permutation(&Permutation::identity(1), mode).unwrap());
            assert!(is_good_permutation(&Permutation::identity(5), mode).unwrap());
            let bad = first_singular_subset(&Permutation::identity(4), mode).unwrap().unwrap();
            assert_eq!(bad.members(), &[0, 2]);
        }
    }

    #[test]
    fn orders_are_permutations() {
        assert_eq!(position_order(6, AssignmentOrder::Ascending), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(position_order(6, AssignmentOrder::MostConstrained), vec![0, 3, 2, 4, 1, 5]);
    }

    #[test]
    fn unit_prefixes_are_lexicographic() {
        assert_eq!(unit_prefixes(3, 2, false).len(), 6);
        assert_eq!(unit_prefixes(3, 2, true), vec![vec![0, 1], vec![0, 2]]);
        assert_eq!(unit_prefixes(1, 1, false), vec![vec![0]]);
        let p = unit_prefixes(4, 2, false);
        assert!(p.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn small_searches() {
        let five = find_good_permutation(&SearchConfig::new(5)).unwrap();
        assert_eq!(five.found, Some(Permutation::identity(5)));
        let four = find_good_permutation(&SearchConfig::new(4)).unwrap();
        let sigma = four.found.unwrap();
        assert!(is_good_permutation(&sigma, CheckMode::Exact).unwrap());
        assert!(!four.exhausted && !four.inconclusive);
        assert_eq!(find_good_permutation(&SearchConfig::new(1)).unwrap().found, Some(Permutation::identity(1)));
    }

    #[test]
    fn config_validation() {
        let mut c = SearchConfig::new(4);
        c.time_budget_ms = Some(0);
        assert!(find_good_permutation(&c).is_err());
        assert!(find_good_permutation(&SearchConfig::new(25)).unwrap_err().is_precondition());
        assert!(enumerate_good_permutations(13, 1, false).unwrap_err().is_precondition());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_good_permutations(1, 10, false).unwrap(), vec![Permutation::identity(1)]);
        assert_eq!(enumerate_good_permutations(2, 10, false).unwrap().len(), 2);
        let four = enumerate_good_permutations(4, usize::MAX, false).unwrap();
        assert!(!four.is_empty());
        assert!(four.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(enumerate_good_permutations(4, 1, false).unwrap(), four[..1]);
    }
}
