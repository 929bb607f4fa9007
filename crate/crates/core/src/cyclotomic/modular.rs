//! Reduction of `Z[ω]` modulo primes `q ≡ 1 (mod N)`.
//!
//! For such `q` the ring `Z[ω]/q` splits as `F_q^{φ(N)}` through the maps
//! `ω ↦ g^k`, `g` a primitive `N`-th root of unity mod `q` and `k` coprime
//! to `N`. An element vanishes modulo `q` iff all these images vanish, and
//! an integer vector divisible by primes whose product exceeds twice its
//! largest coefficient is zero.

/// A prime `q ≡ 1 (mod N)` with a table of `g^e mod q`, `e < N`.
#[derive(Debug, Clone)]
pub struct ModPrime {
    pub q: u64,
    pub powers: Vec<u64>,
}

impl ModPrime {
    /// Image of `ω^e` under the embedding indexed by `k`.
    #[inline]
    pub fn root(&self, k: usize, e: usize) -> u64 {
        let n = self.powers.len();
        self.powers[(k % n) * (e % n) % n]
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, q: u64) -> u64 {
    let mut acc = 1u64 % q;
    base %= q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, q);
        }
        base = mul_mod(base, base, q);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Primes `q ≡ 1 (mod n)` below `2^61`, in descending order, each with a
/// primitive `n`-th root of unity.
pub struct PrimeStream {
    n: u64,
    k: u64,
    factors: Vec<usize>,
}

impl PrimeStream {
    pub fn new(n: usize) -> PrimeStream {
        PrimeStream {
            n: n as u64,
            k: ((1u64 << 61) - 1) / n as u64,
            factors: prime_factors(n),
        }
    }
}

impl Iterator for PrimeStream {
    type Item = ModPrime;

    fn next(&mut self) -> Option<ModPrime> {
        while self.k > 0 {
            let q = self.k * self.n + 1;
            self.k -= 1;
            if !is_prime_u64(q) {
                continue;
            }
            let cofactor = (q - 1) / self.n;
            for h in 2..q {
                let g = pow_mod(h, cofactor, q);
                let primitive = self
                    .factors
                    .iter()
                    .all(|&l| pow_mod(g, self.n / l as u64, q) != 1);
                if primitive {
                    let mut powers = Vec::with_capacity(self.n as usize);
                    let mut x = 1u64;
                    for _ in 0..self.n {
                        powers.push(x);
                        x = mul_mod(x, g, q);
                    }
                    return Some(ModPrime { q, powers });
                }
            }
        }
        None
    }
}

/// Determinant over `F_q` by Gaussian elimination; consumes the matrix.
pub fn det_mod(mut a: Vec<u64>, r: usize, q: u64) -> u64 {
    let mut det = 1u64;
    for col in 0..r {
        let Some(pivot_row) = (col..r).find(|&i| a[i * r + col] != 0) else {
            return 0;
        };
        if pivot_row != col {
            for j in 0..r {
                a.swap(pivot_row * r + j, col * r + j);
            }
            det = q - det;
            if det == q {
                det = 0;
            }
        }
        let pivot = a[col * r + col];
        det = mul_mod(det, pivot, q);
        let inv = pow_mod(pivot, q - 2, q);
        for i in col + 1..r {
            let f = mul_mod(a[i * r + col], inv, q);
            if f == 0 {
                continue;
            }
            for j in col + 1..r {
                let sub = mul_mod(f, a[col * r + j], q);
                let v = a[i * r + j];
                a[i * r + j] = if v >= sub { v - sub } else { v + q - sub };
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(2_305_843_009_213_693_951)); // 2^61 - 1
        assert!(!is_prime_u64(561));
        assert!(!is_prime_u64(3_215_031_751));
    }

    #[test]
    fn primes_carry_primitive_roots() {
        for n in [1usize, 2, 7, 12, 22] {
            let p = PrimeStream::new(n).next().unwrap();
            assert_eq!((p.q - 1) % n as u64, 0);
            assert!(is_prime_u64(p.q));
            let g = p.powers.get(1).copied().unwrap_or(1);
            assert_eq!(pow_mod(g, n as u64, p.q), 1);
            for e in 1..n {
                assert_ne!(p.powers[e], 1, "order of g divides {e}");
            }
        }
    }

    #[test]
    fn small_determinants() {
        let q = 101;
        assert_eq!(det_mod(vec![1, 2, 3, 4], 2, q), 99);
        assert_eq!(det_mod(vec![0, 1, 1, 0], 2, q), 100);
        assert_eq!(det_mod(vec![1, 1, 1, 1], 2, q), 0);
    }
}
