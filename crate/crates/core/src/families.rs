//! Explicit families of semigroups with a fixed Frobenius number and a type
//! that does not depend on the free subset `A` used to build each member.
//!
//! Two constructions are provided. The almost symmetric family takes
//! `A ⊆ (F/3, ⌊(F-1)/2⌋ - k)` and fills in everything above
//! `⌈(F+1)/2⌉ + k` that is not a reflection of `A`. The general family
//! takes a slope `β ∈ (2/5, 1/2)` and `A ⊆ (βF, F/2)`. All interval
//! endpoints are compared exactly; `β` is rational, and the constructor
//! rejects `(β, F)` pairs where `βF` or `2βF` is an integer.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;

use crate::enumeration::enumerate_by_frobenius;
use crate::error::{Error, Result};
use crate::numcore::{NumericalSemigroup, NumericalSet};
use crate::transforms::{is_almost_symmetric, type_of};

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    AlmostSymmetric,
    General,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::AlmostSymmetric => "as",
            FamilyKind::General => "gen",
        })
    }
}

/// Parameters selecting one member of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub frobenius: i64,
    pub k: i64,
    pub a_subset: Vec<i64>,
    /// Only used by the general family.
    pub beta: Option<Rational>,
}

fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

fn ceil_half(x: i64) -> i64 {
    x.div_euclid(2) + x.rem_euclid(2)
}

/// Integers strictly between `F/3` and `⌊(F-1)/2⌋ - k`.
pub fn as_candidates(f: i64, k: i64) -> Result<Vec<i64>> {
    if k < 0 {
        return Err(param(format!("k = {k} must be non-negative")));
    }
    if f <= 6 * k + 6 {
        return Err(param(format!(
            "almost symmetric family requires F > 6k+6 = {}, got F = {f}",
            6 * k + 6
        )));
    }
    let hi = (f - 1).div_euclid(2) - k;
    Ok((1..hi).filter(|&x| 3 * x > f).collect())
}

fn check_subset(a: &[i64], candidates: &[i64]) -> Result<()> {
    match a.iter().find(|x| !candidates.contains(x)) {
        Some(x) => Err(param(format!(
            "{x} is not in the candidate interval {candidates:?}"
        ))),
        None => Ok(()),
    }
}

fn semigroup_from_elements(f: i64, elements: &BTreeSet<i64>) -> Result<NumericalSemigroup> {
    let gaps = (1..=f).filter(|x| !elements.contains(x));
    NumericalSemigroup::try_from(NumericalSet::from_gaps(gaps)?)
}

/// `S = {0} ∪ A ∪ B ∪ {F+1, ...}` with
/// `B = {x : ⌈(F+1)/2⌉ + k < x < F, F - x ∉ A}`.
pub fn family_as_member(spec: &FamilySpec) -> Result<NumericalSemigroup> {
    let (f, k) = (spec.frobenius, spec.k);
    let candidates = as_candidates(f, k)?;
    check_subset(&spec.a_subset, &candidates)?;
    let a: BTreeSet<i64> = spec.a_subset.iter().copied().collect();
    let lo = ceil_half(f + 1) + k;
    let mut elements = a.clone();
    elements.extend((lo + 1..f).filter(|x| !a.contains(&(f - x))));
    semigroup_from_elements(f, &elements)
}

fn subsets(candidates: &[i64]) -> impl Iterator<Item = Vec<i64>> + '_ {
    assert!(candidates.len() < 32, "too many candidates to enumerate");
    (0u32..(1 << candidates.len())).map(move |mask| {
        candidates
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect()
    })
}

/// One member per subset of the candidate interval.
pub fn family_as_enumerate(f: i64, k: i64) -> Result<Vec<NumericalSemigroup>> {
    let candidates = as_candidates(f, k)?;
    subsets(&candidates)
        .map(|a| {
            family_as_member(&FamilySpec {
                frobenius: f,
                k,
                a_subset: a,
                beta: None,
            })
        })
        .collect()
}

fn validate_beta(f: i64, k: i64, beta: Rational) -> Result<()> {
    if k < 0 {
        return Err(param(format!("k = {k} must be non-negative")));
    }
    if beta <= Rational::new(2, 5) || beta >= Rational::new(1, 2) {
        return Err(param(format!(
            "beta = {beta} must lie strictly between 2/5 and 1/2"
        )));
    }
    let fr = Rational::from_integer(f);
    if (beta * fr).is_integer() {
        return Err(param(format!(
            "beta·F = {} must not be an integer",
            beta * fr
        )));
    }
    if (beta * fr * 2).is_integer() {
        return Err(param(format!(
            "2·beta·F = {} must not be an integer",
            beta * fr * 2
        )));
    }
    let b1 = Rational::from_integer(k + 1) / (beta * 5 - 2);
    let b2 = Rational::from_integer(k) / (Rational::from_integer(1) - beta * 2);
    if fr <= b1 || fr <= b2 {
        return Err(param(format!(
            "general family requires F > max((k+1)/(5·beta-2), k/(1-2·beta)) = {}, got F = {f}",
            b1.max(b2)
        )));
    }
    Ok(())
}

/// Integers strictly between `βF` and `F/2`.
pub fn general_candidates(f: i64, k: i64, beta: Rational) -> Result<Vec<i64>> {
    validate_beta(f, k, beta)?;
    let lo = beta * f;
    Ok((1..f)
        .filter(|&x| Rational::from_integer(x) > lo && 2 * x < f)
        .collect())
}

/// `S = {0} ∪ A ∪ B ∪ [⌈(1-β)F⌉, ⌊2βF⌋ - k] ∪ [⌈2βF⌉, F-1] ∪ {F+1, ...}`
/// with `B = {x : F/2 < x < (1-β)F, F - x ∉ A}`.
pub fn family_general_member(spec: &FamilySpec) -> Result<NumericalSemigroup> {
    let (f, k) = (spec.frobenius, spec.k);
    let beta = spec
        .beta
        .ok_or_else(|| param("general family needs beta"))?;
    let candidates = general_candidates(f, k, beta)?;
    check_subset(&spec.a_subset, &candidates)?;
    let a: BTreeSet<i64> = spec.a_subset.iter().copied().collect();
    let one_minus = (Rational::from_integer(1) - beta) * f;
    let two_beta = beta * f * 2;

    let mut elements = a.clone();
    elements.extend(
        (1..f).filter(|&x| {
            2 * x > f && Rational::from_integer(x) < one_minus && !a.contains(&(f - x))
        }),
    );
    elements.extend(one_minus.ceil().to_integer()..=two_beta.floor().to_integer() - k);
    elements.extend(two_beta.ceil().to_integer()..f);
    semigroup_from_elements(f, &elements)
}

pub fn family_general_enumerate(f: i64, k: i64, beta: Rational) -> Result<Vec<NumericalSemigroup>> {
    let candidates = general_candidates(f, k, beta)?;
    subsets(&candidates)
        .map(|a| {
            family_general_member(&FamilySpec {
                frobenius: f,
                k,
                a_subset: a,
                beta: Some(beta),
            })
        })
        .collect()
}

/// Size of a family and how it compares with the exhaustive counts.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyReport {
    pub kind: FamilyKind,
    pub frobenius: i64,
    pub k: i64,
    pub candidates: Vec<i64>,
    /// `2^|candidates|`.
    pub count: u64,
    /// Distinct member types; a single value when the family type is constant.
    pub observed_types: BTreeSet<i64>,
    pub all_almost_symmetric: bool,
    /// Type the published construction states: `2k+1`/`2k+2` for the
    /// almost symmetric family, `k+1`/`k+2` for the general one (odd/even F).
    pub stated_type: i64,
    /// `2^(F/6 - α/2)` with `α` the stated type (almost symmetric family only).
    pub stated_bound: Option<f64>,
    /// Exhaustive count of (almost symmetric, for that family) semigroups with
    /// this Frobenius number and the observed type, when `F <= exact_upto`.
    pub exact_count: Option<u64>,
}

impl FamilyReport {
    pub fn constant_type(&self) -> Option<i64> {
        (self.observed_types.len() == 1).then(|| *self.observed_types.first().unwrap())
    }

    /// Whether the family alone reaches the stated lower bound.
    pub fn meets_stated_bound(&self) -> Option<bool> {
        self.stated_bound.map(|b| self.count as f64 >= b)
    }
}

pub fn family_counts(
    kind: FamilyKind,
    f: i64,
    k: i64,
    beta: Option<Rational>,
    exact_upto: i64,
) -> Result<FamilyReport> {
    let (candidates, members) = match kind {
        FamilyKind::AlmostSymmetric => (as_candidates(f, k)?, family_as_enumerate(f, k)?),
        FamilyKind::General => {
            let beta = beta.ok_or_else(|| param("general family needs beta"))?;
            (
                general_candidates(f, k, beta)?,
                family_general_enumerate(f, k, beta)?,
            )
        }
    };
    let mut observed_types = BTreeSet::new();
    let mut all_almost_symmetric = true;
    for s in &members {
        observed_types.insert(type_of(s)?);
        all_almost_symmetric &= is_almost_symmetric(s)?;
    }
    let parity = if f % 2 == 1 { 1 } else { 2 };
    let (stated_type, stated_bound) = match kind {
        FamilyKind::AlmostSymmetric => {
            let alpha = 2 * k + parity;
            (alpha, Some(2f64.powf(f as f64 / 6.0 - alpha as f64 / 2.0)))
        }
        FamilyKind::General => (k + parity, None),
    };
    let mut report = FamilyReport {
        kind,
        frobenius: f,
        k,
        count: members.len() as u64,
        candidates,
        observed_types,
        all_almost_symmetric,
        stated_type,
        stated_bound,
        exact_count: None,
    };
    if let (Some(t), true) = (report.constant_type(), f <= exact_upto) {
        let mut n = 0;
        enumerate_by_frobenius(f, |s| {
            let ts = type_of(s).expect("has gaps");
            if ts == t && (kind == FamilyKind::General || ts == 2 * s.genus() - f) {
                n += 1;
            }
        });
        report.exact_count = Some(n);
    }
    Ok(report)
}

/// Parses `p/q`, `p`, and sums or differences of them such as `43/100+1/1000000`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let mut total = Rational::from_integer(0);
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut sign = 1;
    let mut i = 0;
    let flush = |from: usize, to: usize, sign: i64, total: &mut Rational| -> Result<()> {
        let term = s[from..to].trim();
        let bad = || Error::Parse {
            position: from,
            message: format!("expected p/q, found {term:?}"),
        };
        let value = match term.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                if q == 0 {
                    return Err(Error::Parse {
                        position: from,
                        message: "zero denominator".into(),
                    });
                }
                Rational::new(p, q)
            }
            None => Rational::from_integer(term.parse().map_err(|_| bad())?),
        };
        *total += value * sign;
        Ok(())
    };
    while i < bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && i > start {
            flush(start, i, sign, &mut total)?;
            sign = if bytes[i] == b'-' { -1 } else { 1 };
            start = i + 1;
        }
        i += 1;
    }
    flush(start, bytes.len(), sign, &mut total)?;
    Ok(total)
}
