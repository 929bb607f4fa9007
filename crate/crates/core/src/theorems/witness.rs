//! Explicit singular principal submatrices for non-square-free `N`.
//!
//! Write `N = p²m` with `p` the smallest prime whose square divides `N`. For
//! `r ≤ N/2` one of three constructions applies:
//!
//! * `p = 2`: any set of even residues containing `0` and `2m` has two
//!   all-ones rows.
//! * `p ≥ 3, r ≤ p`: a subset of `Q = {0, pm, …, (p-1)pm}`, where every
//!   entry of the submatrix is 1.
//! * `p ≥ 3, p < r ≤ N/2`: the union of the residue classes
//!   `K_j = {kp + j}` for `j < s` and the first `t` elements of `K_s`, where
//!   `r = s·pm + t`. The `p` rows indexed by `Q` factor through vectors of
//!   length `s + 1 < p` and are therefore dependent.
//!
//! Sizes above `N/2` take the complement of a witness of size `N - r`.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycRing;
use crate::error::{Error, Result};
use crate::minors::{is_singular, CheckMode, IndexSet};

use super::{is_square_free, smallest_square_factor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum WitnessCase {
    P2Even,
    Pge3SmallR,
    Pge3Blocks,
    Complemented,
}

/// A constructed singular index set together with the parameters that
/// produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPlan {
    pub modulus: usize,
    pub size: usize,
    pub prime: usize,
    pub cofactor: usize,
    pub case: WitnessCase,
    /// For complemented plans, the construction used for size `N - r`.
    pub base_case: Option<WitnessCase>,
    /// Block count `s` with `r = s·pm + t` (block construction only).
    pub blocks: Option<usize>,
    /// Partial block length `t`.
    pub partial: Option<usize>,
    pub set: IndexSet,
    pub certificate: String,
    pub verified_singular: bool,
}

/// Builds and exactly verifies a singular `r×r` principal submatrix of `F_N`.
///
/// # Panics
///
/// Panics if the constructed set is not singular; that would mean the
/// construction is implemented wrongly.
pub fn build_witness(n: usize, r: usize) -> Result<WitnessPlan> {
    if n < 4 {
        return Err(Error::ModulusTooSmall(n));
    }
    if is_square_free(n) {
        return Err(Error::SquareFree(n));
    }
    if !(2..=n - 2).contains(&r) {
        return Err(Error::SizeOutOfRange {
            size: r,
            min: 2,
            max: n - 2,
        });
    }
    let mut plan = if 2 * r > n {
        let base = construct(n, n - r)?;
        WitnessPlan {
            size: r,
            case: WitnessCase::Complemented,
            base_case: Some(base.case),
            set: base.set.complement(),
            certificate: format!(
                "complement of {} ({}); singularity is shared by complementary principal submatrices",
                base.set, base.certificate
            ),
            ..base
        }
    } else {
        construct(n, r)?
    };
    let ring = CycRing::new(n)?;
    let singular = is_singular(&ring, &plan.set, CheckMode::Exact)?;
    assert!(
        singular,
        "witness construction produced a nonsingular set {} for r = {r}",
        plan.set
    );
    plan.verified_singular = true;
    Ok(plan)
}

/// Witnesses for every size `2 ≤ r ≤ N-2`.
pub fn witness_sweep(n: usize) -> Result<Vec<WitnessPlan>> {
    if n < 4 {
        return Err(Error::ModulusTooSmall(n));
    }
    (2..=n - 2).map(|r| build_witness(n, r)).collect()
}

fn construct(n: usize, r: usize) -> Result<WitnessPlan> {
    debug_assert!(2 * r <= n && r >= 2);
    let (p, m) = smallest_square_factor(n)?;
    let pm = p * m;
    let plan = |case, blocks, partial, members: Vec<usize>, certificate: String| -> Result<WitnessPlan> {
        Ok(WitnessPlan {
            modulus: n,
            size: r,
            prime: p,
            cofactor: m,
            case,
            base_case: None,
            blocks,
            partial,
            set: IndexSet::new(n, members)?,
            certificate,
            verified_singular: false,
        })
    };
    if p == 2 {
        // rows 0 and 2m are identically 1 on even columns
        let half = 2 * m;
        let mut members = vec![0, half];
        members.extend((2..n).step_by(2).filter(|k| *k != half).take(r - 2));
        return plan(
            WitnessCase::P2Even,
            None,
            None,
            members,
            format!("rows 0 and {half} identical"),
        );
    }
    let q: Vec<usize> = (0..p).map(|k| k * pm).collect();
    if r <= p {
        return plan(
            WitnessCase::Pge3SmallR,
            None,
            None,
            q[..r].to_vec(),
            format!("rows {{k*{pm}}} all-ones"),
        );
    }
    let s = r / pm;
    let t = r - s * pm;
    let members: Vec<usize> = if s == 0 {
        // Seed Q explicitly; the remaining columns stay inside K_0 = pZ, on
        // which every row k·pm is identically 1.
        let mut members = q.clone();
        members.extend((0..pm).map(|k| k * p).filter(|x| x % pm != 0).take(r - p));
        members
    } else {
        let mut members: Vec<usize> = (0..s).flat_map(|j| (0..pm).map(move |k| k * p + j)).collect();
        members.extend((0..t).map(|k| k * p + s));
        members
    };
    let certificate = if s == 0 {
        format!("rows {{k*{pm}}} all-ones on columns in K_0")
    } else {
        format!("{p} vectors in dimension {}", s + 1)
    };
    plan(WitnessCase::Pge3Blocks, Some(s), Some(t), members, certificate)
}
