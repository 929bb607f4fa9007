//! Exact arithmetic in the cyclotomic integers `Z[ω]`, `ω = e^{2πi/N}`.
//!
//! Elements are stored as canonical residues modulo the `N`-th cyclotomic
//! polynomial `Φ_N`, a vector of `φ(N)` integers. Since `Φ_N` is the minimal
//! polynomial of `ω`, two elements are equal as complex numbers exactly when
//! their coefficient vectors agree, which makes zero testing a coefficient
//! scan.
//!
//! Hot paths elsewhere in the crate accumulate in the group ring
//! `Z[x]/(x^N - 1)` ("wide" vectors of length `N`, machine integers) and only
//! reduce modulo `Φ_N` at the end; [`CycRing::is_zero_wide`] and
//! [`CycRing::from_wide`] perform that final step.

mod approx;
pub mod modular;
pub mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use approx::{Ball, APPROX_ROOT_ERROR};
pub use modular::ModPrime;

/// Default upper bound on the modulus accepted by [`CycRing::new`].
pub const DEFAULT_MAX_MODULUS: usize = 10_000;

/// The ring `Z[ω]` for a fixed modulus `N`. Immutable once built.
#[derive(Debug)]
pub struct CycRing {
    modulus: usize,
    totient: usize,
    phi_poly: Vec<BigInt>,
    /// Nonzero coefficients of `Φ_N` below the leading term, for long division.
    phi_tail: Vec<(usize, i128)>,
    /// `(cos, sin)` of `2πj/N` for `j < N`.
    unit_roots: Vec<(f64, f64)>,
    /// Residues `k` coprime to `N`, indexing the embeddings `ω ↦ ω^k`.
    units: Vec<usize>,
    mod_primes: OnceLock<Vec<ModPrime>>,
    reduction_bound: OnceLock<Option<u128>>,
}

impl CycRing {
    /// Builds the ring for modulus `n` with the default size cap.
    pub fn new(n: usize) -> Result<Arc<CycRing>> {
        Self::with_max_modulus(n, DEFAULT_MAX_MODULUS)
    }

    pub fn with_max_modulus(n: usize, max: usize) -> Result<Arc<CycRing>> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        if n > max {
            return Err(Error::ModulusTooLarge { modulus: n, max });
        }
        let phi = poly::cyclotomic(n)?;
        let totient = phi.len() - 1;
        debug_assert_eq!(totient, poly::totient(n));
        let phi_tail = phi[..totient]
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| (i, *c))
            .collect();
        let unit_roots = (0..n)
            .map(|j| {
                let theta = std::f64::consts::TAU * (j as f64) / (n as f64);
                (theta.cos(), theta.sin())
            })
            .collect();
        let units = (1..=n).filter(|k| gcd(*k, n) == 1).map(|k| k % n).collect();
        Ok(Arc::new(CycRing {
            modulus: n,
            totient,
            phi_poly: phi.into_iter().map(BigInt::from).collect(),
            phi_tail,
            unit_roots,
            units,
            mod_primes: OnceLock::new(),
            reduction_bound: OnceLock::new(),
        }))
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// `φ(N)`, the length of every canonical coefficient vector.
    pub fn totient(&self) -> usize {
        self.totient
    }

    /// Coefficients of `Φ_N`, constant term first. Monic of degree `φ(N)`.
    pub fn phi_poly(&self) -> &[BigInt] {
        &self.phi_poly
    }

    /// Canonical coefficients of `x^j mod Φ_N`.
    ///
    /// This is the reduction table entry for `j ≥ φ(N)`; rows are computed on
    /// demand because reduction itself runs as sparse long division.
    pub fn reduction_row(&self, j: usize) -> Vec<BigInt> {
        let mut wide = vec![0i128; j + 1];
        wide[j] = 1;
        self.reduce_wide_big(&wide)
    }

    pub(crate) fn unit_root(&self, j: usize) -> (f64, f64) {
        self.unit_roots[j % self.modulus]
    }

    /// Exponents `k` coprime to `N`; `ω ↦ ω^k` runs over all embeddings.
    pub fn units(&self) -> &[usize] {
        &self.units
    }

    /// Primes `q ≡ 1 (mod N)` whose product exceeds `2^bits`.
    pub fn mod_primes(&self, bits: f64) -> Vec<ModPrime> {
        let cached = self
            .mod_primes
            .get_or_init(|| modular::PrimeStream::new(self.modulus).take(3).collect());
        let mut out = Vec::new();
        let mut have = 0.0;
        let mut stream = cached.iter().cloned().chain(modular::PrimeStream::new(self.modulus).skip(3));
        while have <= bits {
            let p = stream.next().expect("enough primes below 2^61");
            have += (p.q as f64).log2() - 1e-9;
            out.push(p);
        }
        out
    }

    /// `max_{j < N} ‖x^j mod Φ_N‖_∞`, or `None` if it does not fit in `u128`.
    ///
    /// If `Σ_j |w_j| ≤ S` then every canonical coefficient of `Σ_j w_j ω^j`
    /// is at most `S` times this bound.
    pub fn reduction_bound(&self) -> Option<u128> {
        *self.reduction_bound.get_or_init(|| {
            let deg = self.totient;
            let mut row = vec![0i128; deg];
            row[0] = 1;
            let mut best: u128 = 1;
            for _ in 1..self.modulus {
                // row <- x * row mod Φ_N
                let top = row[deg - 1];
                row.rotate_right(1);
                row[0] = 0;
                if top != 0 {
                    for &(i, a) in &self.phi_tail {
                        row[i] = row[i].checked_sub(top.checked_mul(a)?)?;
                    }
                }
                for c in &row {
                    best = best.max(c.unsigned_abs());
                }
            }
            Some(best)
        })
    }

    pub fn zero(self: &Arc<Self>) -> CycElem {
        CycElem {
            ring: Arc::clone(self),
            coeffs: vec![BigInt::zero(); self.totient],
        }
    }

    pub fn one(self: &Arc<Self>) -> CycElem {
        self.root_power(0)
    }

    /// Embeds an integer.
    pub fn integer(self: &Arc<Self>, value: i64) -> CycElem {
        let mut e = self.zero();
        e.coeffs[0] = BigInt::from(value);
        e
    }

    /// `ω^j`, with `j` reduced modulo `N` first.
    pub fn root_power(self: &Arc<Self>, j: i64) -> CycElem {
        let e = j.rem_euclid(self.modulus as i64) as usize;
        let mut wide = vec![0i128; e + 1];
        wide[e] = 1;
        self.from_wide(&wide)
    }

    /// Builds an element from an arbitrary-length coefficient vector,
    /// reducing modulo `Φ_N`.
    pub fn from_coeffs(self: &Arc<Self>, coeffs: Vec<BigInt>) -> CycElem {
        CycElem {
            ring: Arc::clone(self),
            coeffs: self.reduce_big(coeffs),
        }
    }

    /// Reduces a machine-integer polynomial (any length) to canonical form.
    pub fn from_wide(self: &Arc<Self>, wide: &[i128]) -> CycElem {
        let coeffs = match self.reduce_wide(wide) {
            Some(small) => small.into_iter().map(BigInt::from).collect(),
            None => self.reduce_wide_big(wide),
        };
        CycElem {
            ring: Arc::clone(self),
            coeffs,
        }
    }

    /// True iff the polynomial `Σ wide[j] x^j` vanishes at `x = ω`.
    pub fn is_zero_wide(&self, wide: &[i128]) -> bool {
        match self.reduce_wide(wide) {
            Some(rem) => rem.iter().all(|c| *c == 0),
            None => self.reduce_wide_big(wide).iter().all(Zero::is_zero),
        }
    }

    /// Long division by `Φ_N` in `i128`; `None` on overflow.
    fn reduce_wide(&self, wide: &[i128]) -> Option<Vec<i128>> {
        let deg = self.totient;
        let mut p = wide.to_vec();
        if p.len() < deg {
            p.resize(deg, 0);
        }
        for j in (deg..p.len()).rev() {
            let c = p[j];
            if c == 0 {
                continue;
            }
            let base = j - deg;
            for &(i, a) in &self.phi_tail {
                p[base + i] = p[base + i].checked_sub(c.checked_mul(a)?)?;
            }
        }
        p.truncate(deg);
        Some(p)
    }

    fn reduce_wide_big(&self, wide: &[i128]) -> Vec<BigInt> {
        self.reduce_big(wide.iter().map(|c| BigInt::from(*c)).collect())
    }

    fn reduce_big(&self, mut p: Vec<BigInt>) -> Vec<BigInt> {
        let deg = self.totient;
        if p.len() < deg {
            p.resize(deg, BigInt::zero());
        }
        for j in (deg..p.len()).rev() {
            if p[j].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut p[j]);
            let base = j - deg;
            for &(i, a) in &self.phi_tail {
                p[base + i] -= &c * a;
            }
        }
        p.truncate(deg);
        p
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// An element of `Z[ω]` in canonical form.
#[derive(Clone)]
pub struct CycElem {
    ring: Arc<CycRing>,
    coeffs: Vec<BigInt>,
}

impl CycElem {
    pub fn ring(&self) -> &Arc<CycRing> {
        &self.ring
    }

    pub fn modulus(&self) -> usize {
        self.ring.modulus
    }

    /// Canonical coefficients in the basis `1, ω, …, ω^{φ(N)-1}`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Floating-point value with a rigorous error radius.
    ///
    /// The true value lies within `radius` of the returned approximation.
    /// When any coefficient is too large to convert exactly the radius is
    /// `+∞` and the prefilter abstains.
    pub fn approx_complex(&self) -> (num_complex::Complex64, f64) {
        approx::evaluate(self)
    }

    fn check_ring(&self, other: &CycElem) {
        assert_eq!(
            self.ring.modulus, other.ring.modulus,
            "cyclotomic elements from different rings"
        );
    }

    pub fn pow(&self, mut exp: u32) -> CycElem {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Coefficients as `i64` when they all fit.
    pub fn coeffs_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Largest absolute coefficient.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl PartialEq for CycElem {
    fn eq(&self, other: &Self) -> bool {
        self.ring.modulus == other.ring.modulus && self.coeffs == other.coeffs
    }
}

impl Eq for CycElem {}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycElem(N={}, {:?})", self.ring.modulus, self.coeffs)
    }
}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "w")?,
                (1, false) => write!(f, "{mag}*w")?,
                (_, true) => write!(f, "w^{i}")?,
                (_, false) => write!(f, "{mag}*w^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a CycElem> for &'a CycElem {
    type Output = CycElem;
    fn add(self, rhs: &CycElem) -> CycElem {
        self.check_ring(rhs);
        CycElem {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a CycElem> for &'a CycElem {
    type Output = CycElem;
    fn sub(self, rhs: &CycElem) -> CycElem {
        self.check_ring(rhs);
        CycElem {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        CycElem {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl<'a> Mul<&'a CycElem> for &'a CycElem {
    type Output = CycElem;
    /// Convolution followed by reduction modulo `Φ_N`.
    fn mul(self, rhs: &CycElem) -> CycElem {
        self.check_ring(rhs);
        let n = self.coeffs.len();
        let mut prod = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        CycElem {
            ring: Arc::clone(&self.ring),
            coeffs: self.ring.reduce_big(prod),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<CycElem> for CycElem {
            type Output = CycElem;
            fn $method(self, rhs: CycElem) -> CycElem {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        -&self
    }
}

/// Wire form: modulus and totient echoed next to decimal coefficients.
#[derive(Serialize, Deserialize)]
struct CycElemRepr {
    modulus: usize,
    totient: usize,
    coeffs: Vec<String>,
}

impl Serialize for CycElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CycElemRepr {
            modulus: self.ring.modulus,
            totient: self.ring.totient,
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycElem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CycElemRepr::deserialize(deserializer)?;
        let ring = CycRing::new(repr.modulus).map_err(D::Error::custom)?;
        if repr.totient != ring.totient || repr.coeffs.len() != ring.totient {
            return Err(D::Error::custom("coefficient vector length does not match totient"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(CycElem { ring, coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|c| BigInt::from(*c)).collect()
    }

    #[test]
    fn rejects_bad_moduli() {
        assert_eq!(CycRing::new(0).unwrap_err(), Error::ZeroModulus);
        assert!(matches!(
            CycRing::new(10_001).unwrap_err(),
            Error::ModulusTooLarge { .. }
        ));
        assert!(CycRing::with_max_modulus(50, 40).is_err());
    }

    #[test]
    fn phi_fixtures() {
        assert_eq!(CycRing::new(1).unwrap().phi_poly(), big(&[-1, 1]).as_slice());
        assert_eq!(CycRing::new(4).unwrap().phi_poly(), big(&[1, 0, 1]).as_slice());
        assert_eq!(CycRing::new(7).unwrap().phi_poly(), vec![BigInt::one(); 7].as_slice());
    }

    #[test]
    fn root_power_examples() {
        let r4 = CycRing::new(4).unwrap();
        assert!((&r4.root_power(2) + &r4.root_power(0)).is_zero());
        for n in 1..=12 {
            let r = CycRing::new(n).unwrap();
            assert_eq!(r.root_power(n as i64), r.root_power(0));
            assert!(r.root_power(0).is_one());
            assert_eq!(r.root_power(-1), r.root_power(n as i64 - 1));
        }
        let r6 = CycRing::new(6).unwrap();
        assert_eq!(r6.root_power(2).coeffs(), big(&[-1, 1]).as_slice());
    }

    #[test]
    fn hand_expanded_square_for_n4() {
        let r = CycRing::new(4).unwrap();
        let w_minus_1 = &r.root_power(1) - &r.one();
        let sq = &w_minus_1 * &w_minus_1;
        assert_eq!(sq.coeffs(), big(&[0, -2]).as_slice());
    }

    #[test]
    fn zero_tests_from_the_proofs() {
        let r6 = CycRing::new(6).unwrap();
        assert!(!(&r6.root_power(9) - &r6.one()).is_zero());
        let r4 = CycRing::new(4).unwrap();
        assert!((&r4.root_power(4) - &r4.one()).is_zero());
        assert!((&r6.root_power(6) - &r6.one()).is_zero());
    }

    #[test]
    fn reduction_rows_match_monomials() {
        let r = CycRing::new(12).unwrap();
        let t = r.totient();
        for j in t..=2 * t - 2 {
            let row = r.reduction_row(j);
            assert_eq!(row.len(), t);
            assert_eq!(row.as_slice(), r.root_power(j as i64).coeffs());
        }
        // x^4 ≡ x^2 - 1 (mod x^4 - x^2 + 1)
        assert_eq!(r.reduction_row(4), big(&[-1, 0, 1, 0]));
    }

    #[test]
    fn wide_reduction_agrees_with_ring_ops() {
        let r = CycRing::new(15).unwrap();
        let wide: Vec<i128> = (0..15).map(|j| (j as i128 * 7) % 5 - 2).collect();
        let mut acc = r.zero();
        for (j, c) in wide.iter().enumerate() {
            acc = &acc + &(&r.integer(*c as i64) * &r.root_power(j as i64));
        }
        assert_eq!(r.from_wide(&wide), acc);
        assert_eq!(r.is_zero_wide(&wide), acc.is_zero());
        // 1 + x^5 + x^10 vanishes at a primitive 15th root
        let mut w = vec![0i128; 15];
        w[0] = 1;
        w[5] = 1;
        w[10] = 1;
        assert!(r.is_zero_wide(&w));
    }

    #[test]
    fn serde_round_trip() {
        let r = CycRing::new(9).unwrap();
        let e = &r.root_power(4) * &r.integer(-3) + r.root_power(7);
        let json = serde_json::to_string(&e).unwrap();
        assert!(json.contains("\"modulus\":9"));
        let back: CycElem = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e);
        let bad = json.replace("\"totient\":6", "\"totient\":5");
        assert!(serde_json::from_str::<CycElem>(&bad).is_err());
    }

    #[test]
    fn reduction_bound_covers_monomials() {
        for n in [1usize, 2, 9, 12, 30, 105] {
            let r = CycRing::new(n).unwrap();
            let bound = BigInt::from(r.reduction_bound().unwrap());
            let observed = (0..n)
                .map(|j| r.root_power(j as i64).max_abs_coeff())
                .max()
                .unwrap();
            assert_eq!(observed, bound, "N={n}");
        }
    }

    #[test]
    fn units_are_coprime_residues() {
        assert_eq!(CycRing::new(12).unwrap().units(), &[1, 5, 7, 11]);
        assert_eq!(CycRing::new(1).unwrap().units(), &[0]);
    }

    #[test]
    fn display_is_readable() {
        let r = CycRing::new(6).unwrap();
        assert_eq!(r.root_power(2).to_string(), "-1 + w");
        assert_eq!(r.zero().to_string(), "0");
    }
}
