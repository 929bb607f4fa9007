//! Independent oracles shared by the integration suites.
#![allow(dead_code)]

use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use fourier_minors::minors::is_singular;
use fourier_minors::{CheckMode, CycElem, CycRing, IndexSet};

/// Schoolbook product of integer polynomials (ascending coefficients).
pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Remainder of `a` by a monic polynomial.
pub fn poly_rem(a: &[BigInt], monic: &[BigInt]) -> Vec<BigInt> {
    let d = monic.len() - 1;
    let mut r = a.to_vec();
    while r.len() > d {
        let lead = r.pop().unwrap();
        let shift = r.len() - d;
        for (k, m) in monic[..d].iter().enumerate() {
            r[shift + k] -= &lead * m;
        }
    }
    r.resize(d, BigInt::zero());
    r
}

pub fn x_pow_minus_one(n: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n + 1];
    v[0] = BigInt::from(-1);
    v[n] = BigInt::one();
    v
}

pub fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// `Σ_π sgn(π) Π_i ω^{rows[i]·cols[π(i)]}` over all `r!` permutations.
pub fn leibniz_det(ring: &Arc<CycRing>, rows: &[usize], cols: &[usize]) -> CycElem {
    let r = rows.len();
    let n = ring.modulus();
    let mut perm: Vec<usize> = (0..r).collect();
    let mut total = ring.zero();
    loop {
        let exp: usize = (0..r).map(|i| rows[i] * cols[perm[i]] % n).sum();
        let term = ring.root_power((exp % n) as i64);
        total = if parity(&perm) { &total - &term } else { &total + &term };
        if !next_permutation(&mut perm) {
            break;
        }
    }
    total
}

fn parity(perm: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            odd ^= perm[i] > perm[j];
        }
    }
    odd
}

/// Lexicographic successor; false after the last permutation.
pub fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Floating-point value of a ring element by direct summation.
pub fn eval(e: &CycElem) -> Complex64 {
    let n = e.modulus() as f64;
    e.coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let c: f64 = c.to_string().parse().unwrap();
            Complex64::from_polar(c, 2.0 * std::f64::consts::PI * j as f64 / n)
        })
        .sum()
}

/// Plain complex determinant of `(ω^{rows[i]·cols[j]})` by elimination.
pub fn float_det(n: usize, rows: &[usize], cols: &[usize]) -> Complex64 {
    let r = rows.len();
    let mut a: Vec<Complex64> = rows
        .iter()
        .flat_map(|&k| {
            cols.iter()
                .map(move |&l| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * ((k * l) % n) as f64 / n as f64))
        })
        .collect();
    let mut det = Complex64::new(1.0, 0.0);
    for c in 0..r {
        let p = (c..r).max_by(|&x, &y| a[x * r + c].norm().total_cmp(&a[y * r + c].norm())).unwrap();
        if p != c {
            for j in 0..r {
                a.swap(p * r + j, c * r + j);
            }
            det = -det;
        }
        let piv = a[c * r + c];
        det *= piv;
        if piv.norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        for i in c + 1..r {
            let f = a[i * r + c] / piv;
            for j in c + 1..r {
                let v = a[c * r + j];
                a[i * r + j] -= f * v;
            }
        }
    }
    det
}

pub fn random_elem(ring: &Arc<CycRing>, rng: &mut impl Rng, bound: i64) -> CycElem {
    ring.from_coeffs((0..ring.totient()).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect())
}

/// A random `r`-subset of `{0..n}`.
pub fn random_set(rng: &mut impl Rng, n: usize, r: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    let mut s = all[..r].to_vec();
    s.sort_unstable();
    s
}

pub fn rotate(mask: u64, c: usize, n: usize) -> u64 {
    let full = (1u64 << n) - 1;
    if c.is_multiple_of(n) {
        mask
    } else {
        let c = c % n;
        ((mask << c) | (mask >> (n - c))) & full
    }
}

pub fn negate(mask: u64, n: usize) -> u64 {
    (0..n)
        .filter(|k| mask >> k & 1 == 1)
        .fold(0, |m, k| m | 1 << ((n - k) % n))
}

/// Exact singularity verdict for every mask in `0..2^n` (index 0 unused).
pub fn verdict_table(n: usize) -> Vec<bool> {
    let ring = CycRing::new(n).unwrap();
    let mut table = vec![false; 1 << n];
    for mask in 1u64..(1 << n) {
        table[mask as usize] = is_singular(&ring, &IndexSet::from_mask(n, mask), CheckMode::Exact).unwrap();
    }
    table
}

/// All permutations of `0..n`, lexicographic.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    while next_permutation(&mut p) {
        out.push(p.clone());
    }
    out
}

/// Prints the one-line verdict for an acceptance criterion and returns it.
pub fn report(id: &str, title: &str, ok: bool, elapsed: std::time::Duration, detail: &str) -> bool {
    println!(
        "criterion {id}: {} - {title} ({:.2}s) {detail}",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    ok
}
