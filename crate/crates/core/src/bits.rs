//! Index sets as `u64` bitmasks.

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// All `r`-subsets of `{0..n}` as bitmasks, ascending (Gosper's hack).
pub(crate) fn combinations(n: usize, r: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    if r == 0 {
        out.push(0);
        return out;
    }
    let limit = 1u64 << n;
    let mut m = (1u64 << r) - 1;
    while m < limit {
        out.push(m);
        let c = m & m.wrapping_neg();
        let t = m + c;
        m = (((t ^ m) >> 2) / c) | t;
    }
    out
}

/// Set bits in ascending order.
pub(crate) fn members(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gosper_enumerates_binomially_many() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(6, 0), vec![0]);
        assert_eq!(combinations(3, 3), vec![0b111]);
        assert!(combinations(2, 3).is_empty());
        let c = combinations(6, 3);
        assert!(c.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn members_and_masks() {
        assert_eq!(members(0b1011), vec![0, 1, 3]);
        assert!(members(0).is_empty());
        assert_eq!(full_mask(3), 0b111);
        assert_eq!(full_mask(64), u64::MAX);
    }
}
