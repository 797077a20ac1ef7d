use std::fmt;

use super::bits::{self, Words};
use crate::error::{Error, Result};

/// Largest Frobenius number accepted by the default constructors.
pub const DEFAULT_MAX_FROBENIUS: i64 = 512;

/// A cofinite subset of ℕ containing 0, stored as a bit mask of its gaps.
///
/// Bit `x` of the mask is set exactly when `x` is a gap. Bits above the
/// Frobenius number are never set, so two sets are equal exactly when their
/// masks are equal. The natural numbers themselves have Frobenius number -1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericalSet {
    frobenius: i64,
    gaps: Words,
}

/// Frobenius number, genus, multiplicity and the count of elements in `[0, F]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Profile {
    pub frobenius: i64,
    pub genus: i64,
    pub multiplicity: i64,
    pub small_elements: i64,
}

impl NumericalSet {
    /// ℕ itself.
    pub fn natural() -> Self {
        NumericalSet {
            frobenius: -1,
            gaps: Words::new(),
        }
    }

    /// `{0, f+1, f+2, ...}`.
    pub fn ordinary(f: i64) -> Result<Self> {
        Self::from_gaps(1..=f)
    }

    pub fn from_gaps<I: IntoIterator<Item = i64>>(gaps: I) -> Result<Self> {
        Self::from_gaps_with_limit(gaps, DEFAULT_MAX_FROBENIUS)
    }

    pub fn from_gaps_with_limit<I: IntoIterator<Item = i64>>(gaps: I, limit: i64) -> Result<Self> {
        let mut words = Words::new();
        for g in gaps {
            if g <= 0 {
                return Err(Error::InvalidGap(g));
            }
            if g > limit {
                return Err(Error::CapacityExceeded {
                    frobenius: g,
                    limit,
                });
            }
            bits::set(&mut words, g as usize);
        }
        Ok(Self::from_words(words))
    }

    /// Builds a set from a raw gap mask. Bit 0 must be clear.
    pub(crate) fn from_words(mut gaps: Words) -> Self {
        debug_assert!(!bits::get(&gaps, 0));
        bits::trim(&mut gaps);
        let frobenius = bits::highest(&gaps).map_or(-1, |h| h as i64);
        NumericalSet { frobenius, gaps }
    }

    pub(crate) fn gap_words(&self) -> &[u64] {
        &self.gaps
    }

    /// Mask of the elements in `[0, F]`, including 0.
    pub(crate) fn member_words(&self) -> Words {
        let len = (self.frobenius + 1) as usize;
        let mut out: Words = self.gaps.iter().map(|w| !w).collect();
        if !len.is_multiple_of(64) {
            if let Some(last) = out.last_mut() {
                *last &= (1u64 << (len % 64)) - 1;
            }
        }
        out
    }

    /// Mask of the elements in `[1, F]`.
    pub(crate) fn nonzero_member_words(&self) -> Words {
        let mut out = self.member_words();
        bits::clear(&mut out, 0);
        out
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn genus(&self) -> i64 {
        bits::count(&self.gaps) as i64
    }

    /// Smallest positive element.
    pub fn multiplicity(&self) -> i64 {
        (1..).find(|&x| self.contains(x)).unwrap_or(1)
    }

    /// `n = F + 1 - g`, the number of elements in `[0, F]`.
    pub fn small_elements(&self) -> i64 {
        self.frobenius + 1 - self.genus()
    }

    pub fn profile(&self) -> Profile {
        if self.is_natural() {
            return Profile {
                frobenius: -1,
                genus: 0,
                multiplicity: 1,
                small_elements: 0,
            };
        }
        Profile {
            frobenius: self.frobenius,
            genus: self.genus(),
            multiplicity: self.multiplicity(),
            small_elements: self.small_elements(),
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && (x > self.frobenius || !bits::get(&self.gaps, x as usize))
    }

    pub fn is_gap(&self, x: i64) -> bool {
        x > 0 && x <= self.frobenius && bits::get(&self.gaps, x as usize)
    }

    pub fn is_natural(&self) -> bool {
        self.frobenius < 0
    }

    /// `{0, F+1, ...}` with at least one gap.
    pub fn is_ordinary(&self) -> bool {
        self.frobenius >= 1 && self.genus() == self.frobenius
    }

    /// Gaps in increasing order.
    pub fn gaps(&self) -> impl Iterator<Item = i64> + '_ {
        bits::iter_ones(&self.gaps).map(|x| x as i64)
    }

    pub fn gap_list(&self) -> Vec<i64> {
        self.gaps().collect()
    }

    /// Elements in `[0, bound]`, increasing.
    pub fn elements_upto(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (0..=bound).filter(move |&x| self.contains(x))
    }

    /// True when every sum of two nonzero elements is again an element.
    pub fn is_closed(&self) -> bool {
        self.closure_witness().is_none()
    }

    /// A pair of elements whose sum is a gap, if any.
    pub fn closure_witness(&self) -> Option<(i64, i64)> {
        let members = self.nonzero_member_words();
        for x in bits::iter_ones(&members) {
            if x as i64 * 2 > self.frobenius {
                break;
            }
            if bits::shifted_intersects(&self.gaps, x, &members) {
                let y = (1..=self.frobenius)
                    .find(|&y| y >= x as i64 && self.contains(y) && self.is_gap(x as i64 + y))
                    .expect("intersection implies a witness");
                return Some((x as i64, y));
            }
        }
        None
    }

    /// The `i`-th positive element; `m_0 = 0`.
    pub fn m_index(&self, i: usize) -> i64 {
        if i == 0 {
            return 0;
        }
        let below = self.small_elements().max(1) as usize - 1;
        if i <= below {
            self.elements_upto(self.frobenius)
                .filter(|&x| x > 0)
                .nth(i - 1)
                .expect("counted")
        } else {
            (self.frobenius + 1).max(1) + (i - below - 1) as i64
        }
    }

    /// The `i`-th largest gap, `1 <= i <= g`.
    pub fn f_index(&self, i: usize) -> Result<i64> {
        let g = self.genus();
        if i == 0 || i as i64 > g {
            return Err(Error::OutOfRange {
                what: "largest-gap",
                index: i as i64,
                min: 1,
                max: g,
            });
        }
        Ok(self.gaps().nth((g as usize) - i).expect("counted"))
    }

    /// `self ∪ {x}`.
    pub fn with_element(&self, x: i64) -> Self {
        if !self.is_gap(x) {
            return self.clone();
        }
        let mut words = self.gaps.clone();
        bits::clear(&mut words, x as usize);
        Self::from_words(words)
    }

    /// `self \ {x}` for positive `x`.
    pub fn without_element(&self, x: i64) -> Result<Self> {
        if x <= 0 {
            return Err(Error::InvalidGap(x));
        }
        if x > DEFAULT_MAX_FROBENIUS {
            return Err(Error::CapacityExceeded {
                frobenius: x,
                limit: DEFAULT_MAX_FROBENIUS,
            });
        }
        let mut words = self.gaps.clone();
        bits::set(&mut words, x as usize);
        Ok(Self::from_words(words))
    }
}

impl fmt::Debug for NumericalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSet({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_gaps_examples() {
        let n = NumericalSet::from_gaps([]).unwrap();
        assert!(n.is_natural());
        assert_eq!((n.frobenius(), n.genus()), (-1, 0));

        let h = NumericalSet::from_gaps([1, 2, 4, 7]).unwrap();
        let members: Vec<i64> = h.elements_upto(9).collect();
        assert_eq!(members, vec![0, 3, 5, 6, 8, 9]);
        assert_eq!((h.frobenius(), h.genus()), (7, 4));

        let h = NumericalSet::from_gaps([1, 2, 3, 4, 6, 8, 11, 13]).unwrap();
        assert_eq!((h.frobenius(), h.genus()), (13, 8));
        assert!(h.is_closed());
    }

    #[test]
    fn from_gaps_rejects_bad_input() {
        assert_eq!(NumericalSet::from_gaps([0]), Err(Error::InvalidGap(0)));
        assert_eq!(NumericalSet::from_gaps([3, -2]), Err(Error::InvalidGap(-2)));
        assert!(matches!(
            NumericalSet::from_gaps([513]),
            Err(Error::CapacityExceeded { .. })
        ));
        assert!(NumericalSet::from_gaps([512]).is_ok());
        assert!(NumericalSet::from_gaps_with_limit([40], 32).is_err());
    }

    #[test]
    fn closure() {
        assert!(NumericalSet::from_gaps([1, 2, 4, 7]).unwrap().is_closed());
        let h = NumericalSet::from_gaps([1, 3, 4, 6, 8]).unwrap();
        assert!(!h.is_closed());
        assert_eq!(h.closure_witness(), Some((2, 2)));
        assert!(NumericalSet::natural().is_closed());
    }

    #[test]
    fn profiles() {
        let p = NumericalSet::from_gaps([1, 2, 4, 7]).unwrap().profile();
        assert_eq!(
            (p.frobenius, p.genus, p.multiplicity, p.small_elements),
            (7, 4, 3, 4)
        );
        let p = NumericalSet::ordinary(9).unwrap().profile();
        assert_eq!(
            (p.frobenius, p.genus, p.multiplicity, p.small_elements),
            (9, 9, 10, 1)
        );
        let p = NumericalSet::natural().profile();
        assert_eq!(
            (p.frobenius, p.genus, p.multiplicity, p.small_elements),
            (-1, 0, 1, 0)
        );
    }

    #[test]
    fn indices() {
        let s = NumericalSet::from_gaps([1, 2, 3, 4, 6, 8, 11, 13]).unwrap();
        assert_eq!(s.m_index(0), 0);
        assert_eq!(s.m_index(2), 7);
        assert_eq!(s.m_index(6), 14);
        assert_eq!(s.m_index(7), 15);
        assert_eq!(NumericalSet::natural().m_index(3), 3);
        assert_eq!(s.f_index(1), Ok(13));
        assert_eq!(s.f_index(3), Ok(8));
        assert!(s.f_index(9).is_err());
        assert!(s.f_index(0).is_err());
        let t = NumericalSet::from_gaps([1, 2, 4, 7]).unwrap();
        assert_eq!(t.f_index(4), Ok(1));
    }

    #[test]
    fn wide_sets_span_words() {
        let h = NumericalSet::from_gaps([1, 63, 64, 65, 200]).unwrap();
        assert_eq!(h.frobenius(), 200);
        assert!(h.is_gap(64) && !h.contains(64) && h.contains(66));
        let h2 = h.with_element(200);
        assert_eq!(h2.frobenius(), 65);
        assert_eq!(h2.gap_list(), vec![1, 63, 64, 65]);
    }
}
