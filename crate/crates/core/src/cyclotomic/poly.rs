//! Integer polynomial helpers used to build cyclotomic polynomials.
//!
//! Polynomials are little-endian coefficient vectors (`p[i]` is the
//! coefficient of `x^i`).

use crate::error::{Error, Result};

/// Positive divisors of `n` in ascending order.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient by trial factorisation.
pub fn totient(n: usize) -> usize {
    let mut result = n;
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    result
}

/// Exact quotient of `dividend` by the monic polynomial `divisor`.
///
/// Returns `None` on overflow or when the division leaves a remainder.
pub fn exact_div_monic(dividend: &[i128], divisor: &[i128]) -> Option<Vec<i128>> {
    let dd = divisor.len() - 1;
    debug_assert_eq!(divisor[dd], 1);
    if dividend.len() <= dd {
        return None;
    }
    let mut rem = dividend.to_vec();
    let qlen = dividend.len() - dd;
    let mut quot = vec![0i128; qlen];
    let nonzero: Vec<(usize, i128)> = divisor[..dd]
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, c)| (i, *c))
        .collect();
    for k in (0..qlen).rev() {
        let c = rem[k + dd];
        if c == 0 {
            continue;
        }
        quot[k] = c;
        rem[k + dd] = 0;
        for &(i, a) in &nonzero {
            rem[k + i] = rem[k + i].checked_sub(c.checked_mul(a)?)?;
        }
    }
    if rem.iter().any(|c| *c != 0) {
        return None;
    }
    Some(quot)
}

/// Product of two integer polynomials.
pub fn mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `x^n - 1`.
pub fn x_pow_minus_one(n: usize) -> Vec<i128> {
    let mut p = vec![0i128; n + 1];
    p[0] = -1;
    p[n] = 1;
    p
}

/// The `n`-th cyclotomic polynomial, by dividing `x^n - 1` by `Φ_d` for every
/// proper divisor `d`. The `Φ_d` are built bottom-up over the divisor
/// lattice of `n`, so each is computed once.
pub fn cyclotomic(n: usize) -> Result<Vec<i128>> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let divs = divisors(n);
    let mut table: Vec<(usize, Vec<i128>)> = Vec::with_capacity(divs.len());
    for &d in &divs {
        let mut p = x_pow_minus_one(d);
        for (e, phi_e) in &table {
            if d % e == 0 {
                p = exact_div_monic(&p, phi_e).ok_or(Error::CoefficientOverflow(n))?;
            }
        }
        table.push((d, p));
    }
    Ok(table.pop().expect("n has at least one divisor").1)
}
