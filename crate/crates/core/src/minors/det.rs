//! Determinants: a general subset-DP Laplace expansion over `Z[ω]`, a
//! specialised kernel for matrices whose entries are roots of unity, and a
//! ball-arithmetic elimination used as a nonzero prefilter.

use std::ops::{AddAssign, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::cyclotomic::modular::{det_mod, mul_mod, pow_mod, ModPrime};
use crate::cyclotomic::{Ball, CycElem, CycRing};
use crate::error::{Error, Result};

/// Largest dimension accepted by the determinant routines.
pub const MAX_DET_DIM: usize = 28;

/// Largest dimension accepted by the modular routes.
pub const MODULAR_MAX_DIM: usize = 64;

/// Largest dimension sent to the rotation kernel by the dispatching
/// routines; above it the `2^r`-entry table is replaced by modular images.
pub const ROTATION_DP_MAX_DIM: usize = 16;

/// A dense square matrix over `Z[ω]`, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CycMatrix {
    dim: usize,
    entries: Vec<CycElem>,
}

impl CycMatrix {
    pub fn from_rows(rows: Vec<Vec<CycElem>>) -> Result<CycMatrix> {
        let dim = rows.len();
        for row in &rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    rows: dim,
                    cols: row.len(),
                });
            }
        }
        Ok(CycMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &CycElem {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[CycElem]> {
        self.entries.chunks(self.dim.max(1))
    }
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_DET_DIM {
        Err(Error::DimensionOutOfRange {
            dim,
            max: MAX_DET_DIM,
        })
    } else {
        Ok(())
    }
}

/// Parity of the number of set bits of `mask` strictly above bit `c`.
#[inline]
fn inversions_odd(mask: u32, c: usize) -> bool {
    ((mask as u64) >> (c + 1)).count_ones() & 1 == 1
}

/// Exact determinant by Laplace expansion memoised over column subsets.
///
/// `D[S]` holds the signed sum over bijections from the first `|S|` rows onto
/// the columns `S`; the answer is `D[all columns]`. Uses `r·2^{r-1}` ring
/// multiplications and no division.
pub fn det_exact(m: &CycMatrix) -> Result<CycElem> {
    let r = m.dim;
    check_dim(r)?;
    let ring: Arc<CycRing> = Arc::clone(m.get(0, 0).ring());
    let full = (1u32 << r) - 1;
    let mut dp: Vec<Option<CycElem>> = vec![None; 1 << r];
    dp[0] = Some(ring.one());
    for mask in 0..full {
        let Some(cur) = dp[mask as usize].take() else {
            continue;
        };
        if cur.is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        for c in 0..r {
            if mask >> c & 1 == 1 {
                continue;
            }
            let term = &cur * m.get(row, c);
            let slot = &mut dp[(mask | 1 << c) as usize];
            let updated = match (slot.take(), inversions_odd(mask, c)) {
                (None, false) => term,
                (None, true) => -term,
                (Some(acc), false) => acc + term,
                (Some(acc), true) => acc - term,
            };
            *slot = Some(updated);
        }
    }
    Ok(dp[full as usize].take().unwrap_or_else(|| ring.zero()))
}

trait Acc: Copy + Default + AddAssign + SubAssign + Into<i128> + PartialEq {
    const ONE: Self;
}

impl Acc for i64 {
    const ONE: i64 = 1;
}

impl Acc for i128 {
    const ONE: i128 = 1;
}

/// Determinant of `(ω^{rows[i]·cols[j]})` as an element of `Z[x]/(x^N - 1)`.
///
/// Every entry is a monomial, so each DP step is a cyclic rotation and add.
/// The sum of absolute coefficients of `D[S]` is at most `|S|!`, which keeps
/// `i64` exact up to dimension 20 and `i128` up to [`MAX_DET_DIM`].
pub fn fourier_det_wide(n: usize, rows: &[usize], cols: &[usize]) -> Result<Vec<i128>> {
    if rows.len() != cols.len() {
        return Err(Error::DimensionMismatch {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    check_dim(rows.len())?;
    if rows.len() <= 20 {
        Ok(rotate_dp::<i64>(n, rows, cols))
    } else {
        Ok(rotate_dp::<i128>(n, rows, cols))
    }
}

fn rotate_dp<T: Acc>(n: usize, rows: &[usize], cols: &[usize]) -> Vec<i128> {
    let r = rows.len();
    let full = (1usize << r) - 1;
    let mut dp = vec![T::default(); (full + 1) * n];
    dp[0] = T::ONE;
    let mut exps = vec![0usize; r * r];
    for i in 0..r {
        for j in 0..r {
            exps[i * r + j] = (rows[i] % n) * (cols[j] % n) % n;
        }
    }
    for mask in 0..full {
        let (head, tail) = dp.split_at_mut((mask + 1) * n);
        let src = &head[mask * n..];
        if src.iter().all(|v| *v == T::default()) {
            continue;
        }
        let row = (mask as u32).count_ones() as usize;
        for c in 0..r {
            if mask >> c & 1 == 1 {
                continue;
            }
            let e = exps[row * r + c];
            let target = mask | 1 << c;
            let dst = &mut tail[(target - mask - 1) * n..(target - mask) * n];
            let split = n - e;
            if inversions_odd(mask as u32, c) {
                for (d, s) in dst[e..].iter_mut().zip(&src[..split]) {
                    *d -= *s;
                }
                for (d, s) in dst[..e].iter_mut().zip(&src[split..]) {
                    *d -= *s;
                }
            } else {
                for (d, s) in dst[e..].iter_mut().zip(&src[..split]) {
                    *d += *s;
                }
                for (d, s) in dst[..e].iter_mut().zip(&src[split..]) {
                    *d += *s;
                }
            }
        }
    }
    dp[full * n..].iter().map(|v| (*v).into()).collect()
}

fn log2_factorial(r: usize) -> f64 {
    (2..=r).map(|k| (k as f64).log2()).sum()
}

/// Bits that the product of the modular primes must exceed so that a
/// determinant of `(ω^{…})` with dimension `r` is pinned down exactly.
fn modular_bits(ring: &CycRing, r: usize) -> Result<f64> {
    let bound = ring
        .reduction_bound()
        .ok_or(Error::CoefficientOverflow(ring.modulus()))?;
    Ok(log2_factorial(r) + (bound as f64).log2() + 2.0)
}

fn image_matrix(ring: &CycRing, p: &ModPrime, k: usize, rows: &[usize], cols: &[usize]) -> Vec<u64> {
    let n = ring.modulus();
    let mut a = Vec::with_capacity(rows.len() * cols.len());
    for &i in rows {
        for &j in cols {
            a.push(p.root(k, (i % n) * (j % n) % n));
        }
    }
    a
}

fn check_pair(rows: &[usize], cols: &[usize]) -> Result<()> {
    if rows.len() != cols.len() {
        return Err(Error::DimensionMismatch {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    let dim = rows.len();
    if dim == 0 || dim > MODULAR_MAX_DIM {
        return Err(Error::DimensionOutOfRange {
            dim,
            max: MODULAR_MAX_DIM,
        });
    }
    Ok(())
}

/// Exact zero test of `det(ω^{rows[i]·cols[j]})` through its images in
/// `F_q` under every embedding, for enough primes `q ≡ 1 (mod N)`.
///
/// The determinant is a sum of `r!` signed roots of unity, so its canonical
/// coefficients are bounded by `r!` times [`CycRing::reduction_bound`]; the
/// primes used have a product above twice that.
pub fn fourier_minor_vanishes_modular(ring: &CycRing, rows: &[usize], cols: &[usize]) -> Result<bool> {
    check_pair(rows, cols)?;
    let r = rows.len();
    for p in ring.mod_primes(modular_bits(ring, r)?) {
        for &k in ring.units() {
            if det_mod(image_matrix(ring, &p, k, rows, cols), r, p.q) != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Solves `a·x = b` over `F_q` for invertible `a`.
fn solve_mod(mut a: Vec<u64>, mut b: Vec<u64>, q: u64) -> Vec<u64> {
    let n = b.len();
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&i| a[i * n + col] != 0)
            .expect("embedding matrix is invertible");
        if pivot_row != col {
            for j in 0..n {
                a.swap(pivot_row * n + j, col * n + j);
            }
            b.swap(pivot_row, col);
        }
        let inv = pow_mod(a[col * n + col], q - 2, q);
        for j in col..n {
            a[col * n + j] = mul_mod(a[col * n + j], inv, q);
        }
        b[col] = mul_mod(b[col], inv, q);
        for i in 0..n {
            if i == col || a[i * n + col] == 0 {
                continue;
            }
            let f = a[i * n + col];
            for j in col..n {
                let sub = mul_mod(f, a[col * n + j], q);
                a[i * n + j] = (a[i * n + j] + q - sub) % q;
            }
            let sub = mul_mod(f, b[col], q);
            b[i] = (b[i] + q - sub) % q;
        }
    }
    b
}

/// Exact determinant of `(ω^{rows[i]·cols[j]})` by multi-modular images
/// and Chinese remaindering of the canonical coefficients.
pub fn fourier_det_modular(ring: &Arc<CycRing>, rows: &[usize], cols: &[usize]) -> Result<CycElem> {
    check_pair(rows, cols)?;
    let r = rows.len();
    let phi = ring.totient();
    let primes = ring.mod_primes(modular_bits(ring, r)?);
    let mut value = vec![BigInt::zero(); phi];
    let mut modulus = BigInt::one();
    for p in &primes {
        let images: Vec<u64> = ring
            .units()
            .iter()
            .map(|&k| det_mod(image_matrix(ring, p, k, rows, cols), r, p.q))
            .collect();
        let vandermonde: Vec<u64> = ring
            .units()
            .iter()
            .flat_map(|&k| (0..phi).map(move |i| p.root(k, i)))
            .collect();
        let residues = solve_mod(vandermonde, images, p.q);
        // x ≡ value (mod modulus), x ≡ residue (mod q)
        let q = BigInt::from(p.q);
        let inv = BigInt::from(pow_mod(
            (&modulus % &q).try_into().expect("residue fits u64"),
            p.q - 2,
            p.q,
        ));
        for (v, res) in value.iter_mut().zip(residues) {
            let diff = ((BigInt::from(res) - &*v) % &q + &q) % &q;
            let step = (diff * &inv) % &q;
            *v += &modulus * step;
        }
        modulus *= q;
    }
    let half = &modulus >> 1;
    for v in &mut value {
        if *v > half {
            *v -= &modulus;
        }
    }
    Ok(ring.from_coeffs(value))
}

/// Gaussian elimination with partial pivoting in ball arithmetic.
///
/// Returns an enclosure of the determinant, or `None` when some pivot disc
/// touches zero (the elimination cannot be certified).
pub fn ball_det(mut a: Vec<Ball>, r: usize) -> Option<Ball> {
    ball_det_in_place(&mut a, r)
}

/// As [`ball_det`], eliminating inside a caller-owned buffer.
pub fn ball_det_in_place(a: &mut [Ball], r: usize) -> Option<Ball> {
    debug_assert_eq!(a.len(), r * r);
    let mut det = Ball::exact(Complex64::new(1.0, 0.0));
    for col in 0..r {
        let pivot_row = (col..r)
            .max_by(|&x, &y| {
                a[x * r + col]
                    .mid
                    .norm_sqr()
                    .total_cmp(&a[y * r + col].mid.norm_sqr())
            })
            .expect("nonempty range");
        if pivot_row != col {
            for j in 0..r {
                a.swap(pivot_row * r + j, col * r + j);
            }
            det = -det;
        }
        let pivot = a[col * r + col];
        let inv = pivot.recip()?;
        det = det * pivot;
        for i in col + 1..r {
            let factor = a[i * r + col] * inv;
            for j in col + 1..r {
                a[i * r + j] = a[i * r + j] - factor * a[col * r + j];
            }
        }
    }
    det.is_finite().then_some(det)
}

/// Ball enclosure of the matrix `(ω^{rows[i]·cols[j]})`.
pub fn fourier_balls(ring: &CycRing, rows: &[usize], cols: &[usize]) -> Vec<Ball> {
    let mut out = Vec::with_capacity(rows.len() * cols.len());
    fourier_balls_into(ring, rows, cols, &mut out);
    out
}

/// As [`fourier_balls`], reusing `out`.
pub fn fourier_balls_into(ring: &CycRing, rows: &[usize], cols: &[usize], out: &mut Vec<Ball>) {
    let n = ring.modulus();
    out.clear();
    for &k in rows {
        for &l in cols {
            let (c, s) = ring.unit_root((k % n) * (l % n) % n);
            out.push(Ball::unit_root(c, s));
        }
    }
}

/// True when floating-point enclosures prove `det(ω^{rows[i]·cols[j]}) ≠ 0`.
pub fn certified_nonzero(ring: &CycRing, rows: &[usize], cols: &[usize]) -> bool {
    ball_det(fourier_balls(ring, rows, cols), rows.len()).is_some_and(|d| d.excludes_zero())
}
