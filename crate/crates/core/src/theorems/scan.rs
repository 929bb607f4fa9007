//! Exhaustive classification of all principal minors of `F_N`.
//!
//! Two reductions keep the work small, each can be switched off:
//!
//! * complementation: only sizes `r ≤ ⌊N/2⌋` are tested and counts are
//!   mirrored to `N - r`;
//! * translation classes: only sets containing 0 are enumerated, each class
//!   is tested once through its canonical representative and contributes
//!   its full orbit size (smaller than `N` for periodic sets).

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{combinations, full_mask, members};
use crate::cyclotomic::CycRing;
use crate::error::{Error, Result};
use crate::minors::{minor_verdict, CheckMode};

use super::is_square_free;

pub const DEFAULT_SCAN_CEILING: usize = 22;
pub const DEFAULT_EXEMPLAR_CAP: usize = 16;
/// Bitmask representation limit.
const HARD_CEILING: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub mode: CheckMode,
    pub use_complement: bool,
    pub use_shift_classes: bool,
    pub exemplar_cap: usize,
    pub ceiling: usize,
    pub allow_over_ceiling: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            mode: CheckMode::Exact,
            use_complement: true,
            use_shift_classes: true,
            exemplar_cap: DEFAULT_EXEMPLAR_CAP,
            ceiling: DEFAULT_SCAN_CEILING,
            allow_over_ceiling: false,
            jobs: None,
        }
    }
}

impl ScanConfig {
    pub fn unreduced() -> Self {
        ScanConfig {
            use_complement: false,
            use_shift_classes: false,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanStats {
    /// Index sets whose minor was actually evaluated.
    pub classes_tested: u64,
    /// Verdicts settled by the floating-point prefilter.
    pub prefilter_hits: u64,
    /// Verdicts settled by exact arithmetic.
    pub exact_checks: u64,
    /// Sizes decided by mirroring instead of testing.
    pub mirrored_sizes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeSummary {
    pub size: usize,
    /// Number of singular index sets of this size (full count).
    pub singular_count: u64,
    /// Lexicographically smallest singular sets, up to the exemplar cap.
    pub exemplars: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub modulus: usize,
    pub square_free: bool,
    pub exact: bool,
    pub use_complement: bool,
    pub use_shift_classes: bool,
    /// One entry per size `1..=N`.
    pub sizes: Vec<SizeSummary>,
    pub stats: ScanStats,
    pub wall_time_ms: u64,
}

impl ScanReport {
    pub fn count(&self, r: usize) -> u64 {
        self.sizes.get(r.wrapping_sub(1)).map_or(0, |s| s.singular_count)
    }

    pub fn counts(&self) -> Vec<u64> {
        self.sizes.iter().map(|s| s.singular_count).collect()
    }

    pub fn total_singular(&self) -> u64 {
        self.sizes.iter().map(|s| s.singular_count).sum()
    }
}

/// `K - k mod N` on bitmasks.
#[inline]
fn rotate_down(mask: u64, k: usize, n: usize) -> u64 {
    if k == 0 {
        mask
    } else {
        ((mask >> k) | (mask << (n - k))) & full_mask(n)
    }
}

/// The smallest translate of `mask` that contains 0.
fn canonical(mask: u64, n: usize) -> u64 {
    let mut best = mask;
    let mut rest = mask;
    while rest != 0 {
        let k = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        best = best.min(rotate_down(mask, k, n));
    }
    best
}

/// Number of distinct translates of `mask`.
fn orbit_size(mask: u64, n: usize) -> usize {
    crate::cyclotomic::poly::divisors(n)
        .into_iter()
        .find(|&d| rotate_down(mask, d, n) == mask)
        .unwrap_or(n)
}

/// Keeps the `cap` lexicographically smallest sets.
struct Exemplars {
    cap: usize,
    sets: BTreeSet<Vec<usize>>,
}

impl Exemplars {
    fn new(cap: usize) -> Self {
        Exemplars {
            cap,
            sets: BTreeSet::new(),
        }
    }

    fn offer(&mut self, set: Vec<usize>) {
        if self.cap == 0 {
            return;
        }
        if self.sets.len() == self.cap {
            if self.sets.last().is_some_and(|last| *last <= set) {
                return;
            }
            self.sets.pop_last();
        }
        self.sets.insert(set);
    }
}

struct Found {
    mask: u64,
    orbit: usize,
}

/// Decides singularity of every nonempty principal submatrix of `F_N`.
pub fn scan_all(n: usize, config: &ScanConfig) -> Result<ScanReport> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if n > HARD_CEILING || (n > config.ceiling && !config.allow_over_ceiling) {
        return Err(Error::CeilingExceeded {
            what: "scan modulus",
            value: n,
            ceiling: if n > HARD_CEILING { HARD_CEILING } else { config.ceiling },
        });
    }
    match config.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::InvalidConfig(e.to_string()))?
            .install(|| scan_inner(n, config)),
        None => scan_inner(n, config),
    }
}

fn scan_inner(n: usize, config: &ScanConfig) -> Result<ScanReport> {
    let start = Instant::now();
    let ring = CycRing::new(n)?;
    let mut counts = vec![0u64; n + 1];
    let mut exemplars: Vec<Exemplars> = (0..=n).map(|_| Exemplars::new(config.exemplar_cap)).collect();
    let mut stats = ScanStats::default();
    let top = if config.use_complement { n / 2 } else { n };

    for r in 1..=top {
        let candidates: Vec<u64> = if config.use_shift_classes {
            combinations(n - 1, r - 1)
                .into_iter()
                .map(|m| m << 1 | 1)
                .filter(|&m| canonical(m, n) == m)
                .collect()
        } else {
            combinations(n, r)
        };
        let verdicts: Vec<Result<(Option<Found>, bool)>> = candidates
            .par_iter()
            .map(|&mask| {
                let idx = members(mask);
                let v = minor_verdict(&ring, &idx, &idx, config.mode)?;
                let found = v.singular.then(|| Found {
                    mask,
                    orbit: if config.use_shift_classes { orbit_size(mask, n) } else { 1 },
                });
                Ok((found, v.by_prefilter))
            })
            .collect();

        let mirror = config.use_complement && 2 * r < n;
        for v in verdicts {
            let (found, by_prefilter) = v?;
            stats.classes_tested += 1;
            if by_prefilter {
                stats.prefilter_hits += 1;
            } else {
                stats.exact_checks += 1;
            }
            let Some(found) = found else { continue };
            counts[r] += found.orbit as u64;
            if mirror {
                counts[n - r] += found.orbit as u64;
            }
            for c in 0..found.orbit {
                let set = rotate_down(found.mask, (n - c) % n, n);
                exemplars[r].offer(members(set));
                if mirror {
                    exemplars[n - r].offer(members(!set & full_mask(n)));
                }
            }
        }
        if mirror {
            stats.mirrored_sizes.push(n - r);
        }
    }
    if config.use_complement && n > 0 {
        // the complement of the full set is empty, whose minor is 1
        stats.mirrored_sizes.push(n);
        stats.mirrored_sizes.sort_unstable();
        stats.mirrored_sizes.dedup();
    }

    let sizes = (1..=n)
        .map(|r| SizeSummary {
            size: r,
            singular_count: counts[r],
            exemplars: std::mem::take(&mut exemplars[r].sets).into_iter().collect(),
        })
        .collect();
    Ok(ScanReport {
        modulus: n,
        square_free: is_square_free(n),
        exact: config.mode == CheckMode::Exact,
        use_complement: config.use_complement,
        use_shift_classes: config.use_shift_classes,
        sizes,
        stats,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}
