use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset of `{0, …, N-1}`, kept sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "IndexSetRepr", into = "IndexSetRepr")]
pub struct IndexSet {
    modulus: usize,
    members: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct IndexSetRepr {
    modulus: usize,
    members: Vec<usize>,
}

impl TryFrom<IndexSetRepr> for IndexSet {
    type Error = Error;
    fn try_from(r: IndexSetRepr) -> Result<Self> {
        IndexSet::new(r.modulus, r.members)
    }
}

impl From<IndexSet> for IndexSetRepr {
    fn from(s: IndexSet) -> Self {
        IndexSetRepr {
            modulus: s.modulus,
            members: s.members,
        }
    }
}

impl IndexSet {
    /// Sorts the given residues; rejects duplicates and out-of-range values.
    pub fn new(modulus: usize, members: impl IntoIterator<Item = usize>) -> Result<IndexSet> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateIndex(w[0]));
            }
        }
        if let Some(&last) = members.last() {
            if last >= modulus {
                return Err(Error::IndexOutOfRange {
                    index: last,
                    modulus,
                });
            }
        }
        Ok(IndexSet { modulus, members })
    }

    pub fn empty(modulus: usize) -> IndexSet {
        IndexSet {
            modulus,
            members: Vec::new(),
        }
    }

    pub fn full(modulus: usize) -> IndexSet {
        IndexSet {
            modulus,
            members: (0..modulus).collect(),
        }
    }

    /// Bit `k` of `mask` selects residue `k`. Requires `modulus ≤ 64`.
    pub fn from_mask(modulus: usize, mask: u64) -> IndexSet {
        assert!(modulus <= 64, "bitmask sets need modulus <= 64");
        debug_assert!(modulus == 64 || mask >> modulus == 0);
        IndexSet {
            modulus,
            members: (0..modulus).filter(|k| mask >> k & 1 == 1).collect(),
        }
    }

    pub fn to_mask(&self) -> Option<u64> {
        (self.modulus <= 64).then(|| self.members.iter().fold(0u64, |m, k| m | 1 << k))
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.members.binary_search(&k).is_ok()
    }

    /// `{0, …, N-1} \ K`.
    pub fn complement(&self) -> IndexSet {
        IndexSet {
            modulus: self.modulus,
            members: (0..self.modulus).filter(|k| !self.contains(*k)).collect(),
        }
    }

    /// `{0, k₂-k₁, …, k_r-k₁}` for `K = {k₁ < k₂ < … < k_r}`.
    pub fn index_reduce(&self) -> Result<IndexSet> {
        let first = *self.members.first().ok_or(Error::EmptySet)?;
        Ok(self.shift(-(first as i64)))
    }

    /// `K + c mod N`.
    pub fn shift(&self, c: i64) -> IndexSet {
        let n = self.modulus as i64;
        let mut members: Vec<usize> = self
            .members
            .iter()
            .map(|k| (*k as i64 + c).rem_euclid(n) as usize)
            .collect();
        members.sort_unstable();
        IndexSet {
            modulus: self.modulus,
            members,
        }
    }

    /// `{N - k mod N : k ∈ K}`.
    pub fn negate(&self) -> IndexSet {
        let n = self.modulus;
        let mut members: Vec<usize> = self.members.iter().map(|k| (n - k) % n).collect();
        members.sort_unstable();
        IndexSet {
            modulus: n,
            members,
        }
    }

    pub(crate) fn check_modulus(&self, n: usize) -> Result<()> {
        if self.modulus == n {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(self.modulus, n))
        }
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, k) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "}} mod {}", self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, m: &[usize]) -> IndexSet {
        IndexSet::new(n, m.iter().copied()).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert_eq!(set(9, &[7, 1, 4]).members(), &[1, 4, 7]);
        assert_eq!(
            IndexSet::new(5, [1, 1]).unwrap_err(),
            Error::DuplicateIndex(1)
        );
        assert!(matches!(
            IndexSet::new(5, [5]).unwrap_err(),
            Error::IndexOutOfRange { .. }
        ));
        assert_eq!(IndexSet::new(0, []).unwrap_err(), Error::ZeroModulus);
    }

    #[test]
    fn index_reduction_examples() {
        assert_eq!(set(4, &[1, 3]).index_reduce().unwrap(), set(4, &[0, 2]));
        let k = set(10, &[0, 3, 8]);
        assert_eq!(k.index_reduce().unwrap(), k);
        assert_eq!(set(9, &[4, 7, 1]).index_reduce().unwrap(), set(9, &[0, 3, 6]));
        assert_eq!(IndexSet::empty(3).index_reduce().unwrap_err(), Error::EmptySet);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(set(4, &[0, 2]).complement(), set(4, &[1, 3]));
        assert_eq!(IndexSet::empty(5).complement(), IndexSet::full(5));
        let k = set(11, &[2, 3, 10]);
        assert_eq!(k.complement().complement(), k);
    }

    #[test]
    fn masks_round_trip() {
        let k = set(12, &[0, 5, 11]);
        let m = k.to_mask().unwrap();
        assert_eq!(m, 1 | 1 << 5 | 1 << 11);
        assert_eq!(IndexSet::from_mask(12, m), k);
    }

    #[test]
    fn shift_and_negate() {
        assert_eq!(set(6, &[1, 5]).shift(2), set(6, &[1, 3]));
        assert_eq!(set(6, &[0, 1, 2]).negate(), set(6, &[0, 4, 5]));
    }
}
