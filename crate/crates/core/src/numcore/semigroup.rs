use std::fmt;
use std::ops::Deref;

use num_integer::Integer;

use super::bits::{self, Words};
use super::set::{NumericalSet, DEFAULT_MAX_FROBENIUS};
use crate::error::{Error, Result};

/// Sorted, distinct positive integers with gcd 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorList(Vec<i64>);

impl GeneratorList {
    pub fn new<I: IntoIterator<Item = i64>>(gens: I) -> Result<Self> {
        let mut v: Vec<i64> = gens.into_iter().collect();
        if let Some(&bad) = v.iter().find(|&&g| g <= 0) {
            return Err(Error::InvalidGenerator(bad));
        }
        if v.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        v.sort_unstable();
        v.dedup();
        let d = v.iter().fold(0i64, |acc, &g| acc.gcd(&g));
        if d != 1 {
            return Err(Error::GcdNotOne(d));
        }
        Ok(GeneratorList(v))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

/// A numerical set closed under addition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericalSemigroup(NumericalSet);

impl NumericalSemigroup {
    pub fn natural() -> Self {
        NumericalSemigroup(NumericalSet::natural())
    }

    /// `{0, f+1, ...}`.
    pub fn ordinary(f: i64) -> Result<Self> {
        NumericalSet::ordinary(f).map(NumericalSemigroup)
    }

    pub fn from_gaps<I: IntoIterator<Item = i64>>(gaps: I) -> Result<Self> {
        Self::try_from(NumericalSet::from_gaps(gaps)?)
    }

    /// The smallest semigroup containing `gens`.
    pub fn from_generators(gens: &GeneratorList) -> Result<Self> {
        let g = gens.as_slice();
        let (lo, hi) = (g[0], g[g.len() - 1]);
        if lo == 1 {
            return Ok(Self::natural());
        }
        // Every integer >= lo*hi is representable, so the last non-member
        // below that bound is the Frobenius number.
        let bound = (lo * hi) as usize;
        let mut reach = vec![false; bound + 1];
        reach[0] = true;
        for x in 1..=bound {
            reach[x] = g.iter().any(|&a| a as usize <= x && reach[x - a as usize]);
        }
        let frobenius = (0..=bound).rev().find(|&x| !reach[x]).unwrap_or(0) as i64;
        if frobenius > DEFAULT_MAX_FROBENIUS {
            return Err(Error::CapacityExceeded {
                frobenius,
                limit: DEFAULT_MAX_FROBENIUS,
            });
        }
        let mut words = Words::new();
        for (x, _) in reach
            .iter()
            .enumerate()
            .take(frobenius as usize + 1)
            .skip(1)
            .filter(|(_, &r)| !r)
        {
            bits::set(&mut words, x);
        }
        Ok(NumericalSemigroup(NumericalSet::from_words(words)))
    }

    /// Wraps a set already known to be closed.
    pub(crate) fn new_unchecked(set: NumericalSet) -> Self {
        debug_assert!(set.is_closed(), "{set} is not closed");
        NumericalSemigroup(set)
    }

    pub fn as_set(&self) -> &NumericalSet {
        &self.0
    }

    pub fn into_set(self) -> NumericalSet {
        self.0
    }

    /// Elements that are not a sum of two nonzero elements.
    pub fn minimal_generators(&self) -> Vec<i64> {
        if self.is_natural() {
            return vec![1];
        }
        let m = self.multiplicity();
        let f = self.frobenius();
        // Every element above F + m is a sum of m and another element.
        let top = f + m;
        let members = self.0.nonzero_member_words();
        (1..=top)
            .filter(|&s| self.contains(s) && !self.is_decomposable(s, &members))
            .collect()
    }

    fn is_decomposable(&self, s: i64, small: &[u64]) -> bool {
        (1..=s / 2).any(|a| {
            let b = s - a;
            (a > self.frobenius() || bits::get(small, a as usize))
                && (b > self.frobenius() || bits::get(small, b as usize))
        })
    }

    /// Minimal generators larger than the Frobenius number; removing any
    /// one of them leaves a semigroup.
    pub fn generators_above_frobenius(&self) -> Vec<i64> {
        if self.is_natural() {
            return vec![1];
        }
        let f = self.frobenius();
        let m = self.multiplicity();
        let members = self.0.nonzero_member_words();
        (f + 1..=f + m)
            .filter(|&s| !self.is_decomposable(s, &members))
            .collect()
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators().len()
    }
}

impl TryFrom<NumericalSet> for NumericalSemigroup {
    type Error = Error;

    fn try_from(set: NumericalSet) -> Result<Self> {
        match set.closure_witness() {
            None => Ok(NumericalSemigroup(set)),
            Some((x, y)) => Err(Error::NotClosed { x, y }),
        }
    }
}

impl Deref for NumericalSemigroup {
    type Target = NumericalSet;

    fn deref(&self) -> &NumericalSet {
        &self.0
    }
}

impl AsRef<NumericalSet> for NumericalSemigroup {
    fn as_ref(&self) -> &NumericalSet {
        &self.0
    }
}

impl From<NumericalSemigroup> for NumericalSet {
    fn from(s: NumericalSemigroup) -> Self {
        s.0
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup({})", self.0)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(v: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(&GeneratorList::new(v.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn from_generators_examples() {
        assert_eq!(gens(&[3, 5]).gap_list(), vec![1, 2, 4, 7]);
        assert_eq!(gens(&[5, 7, 9]).gap_list(), vec![1, 2, 3, 4, 6, 8, 11, 13]);
        assert!(gens(&[1]).is_natural());
        assert!(gens(&[1, 7]).is_natural());
        assert_eq!(gens(&[2, 3]).gap_list(), vec![1]);
    }

    #[test]
    fn generator_list_validation() {
        assert_eq!(GeneratorList::new([4, 6]), Err(Error::GcdNotOne(2)));
        assert_eq!(GeneratorList::new([]), Err(Error::EmptyGenerators));
        assert_eq!(GeneratorList::new([3, 0]), Err(Error::InvalidGenerator(0)));
        assert_eq!(GeneratorList::new([5, 3, 5]).unwrap().as_slice(), &[3, 5]);
    }

    #[test]
    fn capacity_is_enforced_for_generators() {
        let big = GeneratorList::new([30, 31]).unwrap();
        assert!(matches!(
            NumericalSemigroup::from_generators(&big),
            Err(Error::CapacityExceeded { frobenius: 869, .. })
        ));
    }

    #[test]
    fn minimal_generator_examples() {
        assert_eq!(gens(&[5, 7, 9]).minimal_generators(), vec![5, 7, 9]);
        let ord = NumericalSemigroup::ordinary(3).unwrap();
        assert_eq!(ord.minimal_generators(), vec![4, 5, 6, 7]);
        assert_eq!(NumericalSemigroup::natural().minimal_generators(), vec![1]);
        assert_eq!(gens(&[3, 5, 6, 10]).minimal_generators(), vec![3, 5]);
    }

    #[test]
    fn rejects_unclosed() {
        let h = NumericalSet::from_gaps([1, 3, 4, 6, 8]).unwrap();
        assert_eq!(
            NumericalSemigroup::try_from(h),
            Err(Error::NotClosed { x: 2, y: 2 })
        );
    }

    #[test]
    fn generators_above_frobenius() {
        assert_eq!(
            NumericalSemigroup::natural().generators_above_frobenius(),
            vec![1]
        );
        let s = NumericalSemigroup::from_gaps([1]).unwrap();
        assert_eq!(s.generators_above_frobenius(), vec![2, 3]);
        assert!(gens(&[3, 5]).generators_above_frobenius().is_empty());
    }
}
