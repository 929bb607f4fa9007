//! Floating-point enclosures used only to certify that a value is nonzero.
//!
//! Every quantity carries a radius that bounds its distance from the exact
//! value. Rounding is accounted for by inflating each result by a relative
//! slack several times larger than the worst-case error of the IEEE
//! operation involved, so an enclosure that excludes zero proves the exact
//! value is nonzero. A zero verdict is never drawn from these enclosures.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive};

use super::CycElem;

/// Bound on `|ω^j - (cos θ_j, sin θ_j)|` for the tabulated unit roots,
/// covering the rounding of `2πj/N` and of `cos`/`sin`.
pub const APPROX_ROOT_ERROR: f64 = 1e-14;

/// Relative slack applied after every floating operation.
const SLACK: f64 = 16.0 * f64::EPSILON;

/// Upper bound on `|z|` without `hypot`.
#[inline]
fn mag_hi(z: Complex64) -> f64 {
    (z.re.abs() + z.im.abs()) * (1.0 + SLACK)
}

/// Lower bound on `|z|`; gives up (returns 0) near the subnormal range.
#[inline]
fn mag_lo(z: Complex64) -> f64 {
    let sq = z.norm_sqr();
    if sq < 1e-280 {
        0.0
    } else {
        sq.sqrt() * (1.0 - SLACK)
    }
}

/// Largest integer magnitude converted to `f64` without rounding.
const EXACT_F64_INT: f64 = 9_007_199_254_740_992.0;

pub(super) fn evaluate(e: &CycElem) -> (Complex64, f64) {
    let ring = e.ring();
    let mut value = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0f64;
    for (j, c) in e.coeffs().iter().enumerate() {
        let Some(cf) = to_exact_f64(c) else {
            return (value, f64::INFINITY);
        };
        if cf == 0.0 {
            continue;
        }
        let (cos, sin) = ring.unit_root(j);
        value += Complex64::new(cf * cos, cf * sin);
        abs_sum += cf.abs();
    }
    if abs_sum == 0.0 {
        return (value, 0.0);
    }
    let terms = e.coeffs().len() as f64;
    let per_unit = 2.0 * APPROX_ROOT_ERROR + (terms + 2.0) * SLACK;
    let radius = abs_sum * (1.0 + SLACK) * per_unit * (1.0 + SLACK) + f64::MIN_POSITIVE;
    if !value.re.is_finite() || !value.im.is_finite() || !radius.is_finite() {
        return (value, f64::INFINITY);
    }
    (value, radius)
}

fn to_exact_f64(c: &BigInt) -> Option<f64> {
    let f = c.to_f64()?;
    if f.abs() > EXACT_F64_INT || c.abs().to_f64()? > EXACT_F64_INT {
        return None;
    }
    Some(f)
}

/// A closed disc `{z : |z - mid| ≤ rad}` in the complex plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ball {
    pub mid: Complex64,
    pub rad: f64,
}

impl Ball {
    pub const ZERO: Ball = Ball {
        mid: Complex64::new(0.0, 0.0),
        rad: 0.0,
    };

    pub fn exact(mid: Complex64) -> Ball {
        Ball { mid, rad: 0.0 }
    }

    pub fn new(mid: Complex64, rad: f64) -> Ball {
        Ball { mid, rad }
    }

    /// Enclosure of a tabulated root of unity.
    pub fn unit_root(cos: f64, sin: f64) -> Ball {
        Ball {
            mid: Complex64::new(cos, sin),
            rad: APPROX_ROOT_ERROR,
        }
    }

    fn rounded(mid: Complex64, rad: f64) -> Ball {
        Ball {
            mid,
            rad: (rad + mag_hi(mid) * SLACK) * (1.0 + SLACK) + f64::MIN_POSITIVE,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.mid.re.is_finite() && self.mid.im.is_finite() && self.rad.is_finite()
    }

    /// True when the disc certainly excludes the origin.
    pub fn excludes_zero(&self) -> bool {
        self.is_finite() && mag_lo(self.mid) > self.rad
    }

    /// Lower bound on `|z|` over the disc (zero if it may contain the origin).
    pub fn mag_lower(&self) -> f64 {
        (mag_lo(self.mid) - self.rad).max(0.0)
    }

    /// Enclosure of `1/z`, or `None` when the disc may contain zero.
    pub fn recip(self) -> Option<Ball> {
        if !self.excludes_zero() {
            return None;
        }
        let m = mag_lo(self.mid);
        let rad = self.rad / ((m - self.rad) * m * (1.0 - SLACK));
        let mid = Complex64::new(1.0, 0.0) / self.mid;
        let out = Ball::rounded(mid, rad);
        out.is_finite().then_some(out)
    }
}

impl std::ops::Add for Ball {
    type Output = Ball;

    fn add(self, other: Ball) -> Ball {
        Ball::rounded(self.mid + other.mid, self.rad + other.rad)
    }
}

impl std::ops::Sub for Ball {
    type Output = Ball;

    fn sub(self, other: Ball) -> Ball {
        Ball::rounded(self.mid - other.mid, self.rad + other.rad)
    }
}

impl std::ops::Neg for Ball {
    type Output = Ball;

    fn neg(self) -> Ball {
        Ball {
            mid: -self.mid,
            rad: self.rad,
        }
    }
}

impl std::ops::Mul for Ball {
    type Output = Ball;

    fn mul(self, other: Ball) -> Ball {
        let a = mag_hi(self.mid);
        let b = mag_hi(other.mid);
        let rad = a * other.rad + b * self.rad + self.rad * other.rad;
        Ball::rounded(self.mid * other.mid, rad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CycRing;

    #[test]
    fn zero_element_has_zero_radius() {
        let r = CycRing::new(7).unwrap();
        let (v, eps) = r.zero().approx_complex();
        assert_eq!(eps, 0.0);
        assert!(v.norm() <= eps);
    }

    #[test]
    fn omega_minus_one_for_n4() {
        let r = CycRing::new(4).unwrap();
        let (v, eps) = (&r.root_power(1) - &r.one()).approx_complex();
        assert!(eps < 1e-12);
        assert!((v - Complex64::new(-1.0, 1.0)).norm() <= eps);
    }

    #[test]
    fn huge_coefficients_abstain() {
        let r = CycRing::new(5).unwrap();
        let huge = BigInt::from(1u64 << 60) * BigInt::from(1u64 << 10);
        let e = r.from_coeffs(vec![huge, BigInt::from(1)]);
        assert_eq!(e.approx_complex().1, f64::INFINITY);
    }

    #[test]
    fn ball_arithmetic_encloses_exact_products() {
        let a = Ball::unit_root(0.6, 0.8);
        let b = Ball::exact(Complex64::new(2.0, -1.0));
        let p = a * b;
        let exact = Complex64::new(0.6, 0.8) * Complex64::new(2.0, -1.0);
        assert!((p.mid - exact).norm() <= p.rad);
        let inv = b.recip().unwrap();
        assert!((inv.mid - Complex64::new(0.4, 0.2)).norm() <= inv.rad);
        assert!(Ball::new(Complex64::new(1e-3, 0.0), 1e-2).recip().is_none());
    }
}
