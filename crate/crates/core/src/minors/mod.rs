//! Principal submatrices of `F_N = (ω^{kℓ})`, their determinants, the
//! closed forms for `2×2` and `3×3` minors, and the two reductions that
//! preserve singularity (translation of the index set and complementation).

pub mod det;
mod index_set;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{CycElem, CycRing};
use crate::error::{Error, Result};

pub use det::{
    det_exact, fourier_det_modular, fourier_det_wide, fourier_minor_vanishes_modular, CycMatrix,
    MAX_DET_DIM, MODULAR_MAX_DIM, ROTATION_DP_MAX_DIM,
};
pub use index_set::IndexSet;

/// Largest index set accepted by [`shift_identity_check`].
pub const SHIFT_IDENTITY_MAX: usize = 8;

/// Whether a singularity test may consult the floating-point prefilter.
///
/// The prefilter only ever certifies "nonsingular"; every singular verdict
/// comes from exact arithmetic in both modes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckMode {
    #[default]
    Exact,
    Prefilter,
}

/// Outcome of one singularity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub singular: bool,
    /// The nonsingular verdict came from the prefilter alone.
    pub by_prefilter: bool,
}

/// One principal minor and its verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinorRecord {
    pub set: IndexSet,
    pub size: usize,
    pub singular: bool,
    pub determinant: Option<CycElem>,
}

/// The submatrix `(ω^{k·ℓ})_{k ∈ rows, ℓ ∈ cols}`.
pub fn submatrix(ring: &Arc<CycRing>, rows: &IndexSet, cols: &IndexSet) -> Result<CycMatrix> {
    rows.check_modulus(ring.modulus())?;
    cols.check_modulus(ring.modulus())?;
    if rows.len() != cols.len() {
        return Err(Error::DimensionMismatch {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    CycMatrix::from_rows(
        rows.members()
            .iter()
            .map(|&k| {
                cols.members()
                    .iter()
                    .map(|&l| ring.root_power((k * l % ring.modulus()) as i64))
                    .collect()
            })
            .collect(),
    )
}

/// Singularity of `(ω^{rows[i]·cols[j]})` for ordered index lists.
pub fn minor_verdict(ring: &CycRing, rows: &[usize], cols: &[usize], mode: CheckMode) -> Result<Verdict> {
    if rows.is_empty() {
        return Err(Error::EmptySet);
    }
    if mode == CheckMode::Prefilter && det::certified_nonzero(ring, rows, cols) {
        return Ok(Verdict {
            singular: false,
            by_prefilter: true,
        });
    }
    let singular = if rows.len() <= ROTATION_DP_MAX_DIM {
        ring.is_zero_wide(&fourier_det_wide(ring.modulus(), rows, cols)?)
    } else {
        fourier_minor_vanishes_modular(ring, rows, cols)?
    };
    Ok(Verdict {
        singular,
        by_prefilter: false,
    })
}

/// Exact `det(ω^{rows[i]·cols[j]})`, dispatching on dimension.
pub fn fourier_det(ring: &Arc<CycRing>, rows: &[usize], cols: &[usize]) -> Result<CycElem> {
    if rows.len() <= ROTATION_DP_MAX_DIM {
        Ok(ring.from_wide(&fourier_det_wide(ring.modulus(), rows, cols)?))
    } else {
        fourier_det_modular(ring, rows, cols)
    }
}

/// Whether the principal submatrix `F_N[K]` is singular.
pub fn is_singular(ring: &CycRing, set: &IndexSet, mode: CheckMode) -> Result<bool> {
    set.check_modulus(ring.modulus())?;
    Ok(minor_verdict(ring, set.members(), set.members(), mode)?.singular)
}

/// The exact principal minor `det F_N[K]` with its verdict.
pub fn principal_minor(ring: &Arc<CycRing>, set: &IndexSet) -> Result<MinorRecord> {
    set.check_modulus(ring.modulus())?;
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let det = fourier_det(ring, set.members(), set.members())?;
    Ok(MinorRecord {
        set: set.clone(),
        size: set.len(),
        singular: det.is_zero(),
        determinant: Some(det),
    })
}

fn check_residue(ring: &CycRing, a: usize) -> Result<()> {
    if a == 0 || a >= ring.modulus() {
        return Err(Error::InvalidResidues(format!(
            "need 0 < a <= {}, got a = {a}",
            ring.modulus().saturating_sub(1)
        )));
    }
    Ok(())
}

fn check_pair(ring: &CycRing, a: usize, b: usize) -> Result<()> {
    check_residue(ring, a)?;
    check_residue(ring, b)?;
    if a >= b {
        return Err(Error::InvalidResidues(format!("need a < b, got ({a}, {b})")));
    }
    Ok(())
}

/// `det F_N[{0, a}] = ω^{a²} - 1`.
pub fn det_2x2_formula(ring: &Arc<CycRing>, a: usize) -> Result<CycElem> {
    check_residue(ring, a)?;
    let n = ring.modulus();
    Ok(&ring.root_power((a * a % n) as i64) - &ring.one())
}

/// `ω^{a²+b²} + 2ω^{ab} - ω^{a²} - ω^{b²} - ω^{2ab}` as a vector in
/// `Z[x]/(x^N - 1)`; equal to `(ω^{a²}-1)(ω^{b²}-1) - (ω^{ab}-1)²`.
fn det_3x3_wide(n: usize, a: usize, b: usize) -> Vec<i128> {
    let (aa, bb, ab) = (a * a % n, b * b % n, a * b % n);
    let mut wide = vec![0i128; n];
    wide[(aa + bb) % n] += 1;
    wide[ab] += 2;
    wide[aa] -= 1;
    wide[bb] -= 1;
    wide[2 * ab % n] -= 1;
    wide
}

/// `det F_N[{0, a, b}] = (ω^{a²}-1)(ω^{b²}-1) - (ω^{ab}-1)²`.
pub fn det_3x3_formula(ring: &Arc<CycRing>, a: usize, b: usize) -> Result<CycElem> {
    check_pair(ring, a, b)?;
    Ok(ring.from_wide(&det_3x3_wide(ring.modulus(), a, b)))
}

/// Zero test of [`det_3x3_formula`] without leaving machine integers.
pub(crate) fn det_3x3_vanishes(ring: &CycRing, a: usize, b: usize) -> bool {
    ring.is_zero_wide(&det_3x3_wide(ring.modulus(), a, b))
}

/// Whether `(ω^{a²}-1)(ω^{b²}-1) = (ω^{ab}-1)²` holds.
pub fn singular_3x3_condition(ring: &Arc<CycRing>, a: usize, b: usize) -> Result<bool> {
    check_pair(ring, a, b)?;
    let n = ring.modulus();
    let one = ring.one();
    let lhs = &(&ring.root_power((a * a % n) as i64) - &one)
        * &(&ring.root_power((b * b % n) as i64) - &one);
    let t = &ring.root_power((a * b % n) as i64) - &one;
    Ok(lhs == &t * &t)
}

/// Checks `det F_N[K] = ω^{a₁(-r·a₁ + 2Σa_j)} · det(ω^{(a_i-a₁)(a_j-a₁)})`
/// exactly, where `a₁ < … < a_r` are the members of `K`.
pub fn shift_identity_check(ring: &Arc<CycRing>, set: &IndexSet) -> Result<bool> {
    set.check_modulus(ring.modulus())?;
    let r = set.len();
    if r == 0 {
        return Err(Error::EmptySet);
    }
    if r > SHIFT_IDENTITY_MAX {
        return Err(Error::CeilingExceeded {
            what: "index set size",
            value: r,
            ceiling: SHIFT_IDENTITY_MAX,
        });
    }
    let n = ring.modulus() as i64;
    let a: Vec<i64> = set.members().iter().map(|k| *k as i64).collect();
    let a1 = a[0];
    let sum: i64 = a.iter().sum();
    let prefactor = ring.root_power(a1 * (-(r as i64) * a1 + 2 * sum));
    let lhs = det_exact(&submatrix(ring, set, set)?)?;
    let bordered = CycMatrix::from_rows(
        a.iter()
            .map(|ai| {
                a.iter()
                    .map(|aj| ring.root_power(((ai - a1) * (aj - a1)).rem_euclid(n)))
                    .collect()
            })
            .collect(),
    )?;
    Ok(lhs == &prefactor * &det_exact(&bordered)?)
}
