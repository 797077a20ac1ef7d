//! Word-level helpers for the fixed-width gap masks.

use smallvec::SmallVec;

pub(crate) type Words = SmallVec<[u64; 2]>;

#[inline]
pub(crate) fn get(words: &[u64], i: usize) -> bool {
    let w = i / 64;
    w < words.len() && (words[w] >> (i % 64)) & 1 == 1
}

#[inline]
pub(crate) fn set(words: &mut Words, i: usize) {
    let w = i / 64;
    if w >= words.len() {
        words.resize(w + 1, 0);
    }
    words[w] |= 1 << (i % 64);
}

#[inline]
pub(crate) fn clear(words: &mut [u64], i: usize) {
    let w = i / 64;
    if w < words.len() {
        words[w] &= !(1 << (i % 64));
    }
}

/// Word `i` of `words >> shift`.
#[inline]
fn shifted_word(words: &[u64], shift: usize, i: usize) -> u64 {
    let q = shift / 64;
    let r = shift % 64;
    let lo = words.get(i + q).copied().unwrap_or(0);
    if r == 0 {
        lo
    } else {
        let hi = words.get(i + q + 1).copied().unwrap_or(0);
        (lo >> r) | (hi << (64 - r))
    }
}

/// Whether `(a >> shift) & b` has any bit set.
#[inline]
pub(crate) fn shifted_intersects(a: &[u64], shift: usize, b: &[u64]) -> bool {
    let q = shift / 64;
    if q >= a.len() {
        return false;
    }
    let n = (a.len() - q).min(b.len());
    (0..n).any(|i| shifted_word(a, shift, i) & b[i] != 0)
}

/// Index of the highest set bit.
pub(crate) fn highest(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

pub(crate) fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// Drops trailing zero words.
pub(crate) fn trim(words: &mut Words) {
    while words.last() == Some(&0) {
        words.pop();
    }
}

pub(crate) fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + b)
            }
        })
    })
}
