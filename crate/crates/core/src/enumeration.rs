//! Exhaustive generation of semigroups and numerical sets, and the
//! type-count tables built from it.
//!
//! Semigroups are generated from the tree in which the parent of `S` is
//! `S ∪ {F(S)}`. Walking down the tree the genus grows by one per step, the
//! Frobenius number strictly increases and `n = F + 1 - g` never decreases,
//! so a bound on any of the three prunes whole subtrees.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::numcore::raw;
use crate::numcore::{NumericalSemigroup, NumericalSet, Words};
use crate::transforms::{associated, type_of};

/// Children of `S`: `S \ {x}` for each minimal generator `x > F(S)`.
pub fn children(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    s.generators_above_frobenius()
        .into_iter()
        .map(|x| NumericalSemigroup::new_unchecked(s.without_element(x).expect("x is positive")))
        .collect()
}

/// Limits on a tree walk. A node is visited when it satisfies every bound
/// that is set.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TreeBounds {
    pub max_genus: Option<i64>,
    pub max_frobenius: Option<i64>,
    /// Bound on `n(S) = F + 1 - g`.
    pub max_small_elements: Option<i64>,
}

impl TreeBounds {
    pub fn genus(g: i64) -> Self {
        TreeBounds {
            max_genus: Some(g),
            ..Default::default()
        }
    }

    pub fn frobenius(f: i64) -> Self {
        TreeBounds {
            max_genus: Some(f.max(0)),
            max_frobenius: Some(f),
            ..Default::default()
        }
    }

    pub fn with_max_small_elements(mut self, n: i64) -> Self {
        self.max_small_elements = Some(n);
        self
    }

    fn admits(&self, s: &NumericalSemigroup) -> bool {
        self.max_genus.is_none_or(|g| s.genus() <= g)
            && self.max_frobenius.is_none_or(|f| s.frobenius() <= f)
            && self
                .max_small_elements
                .is_none_or(|n| s.small_elements() <= n)
    }

    fn expand(&self, s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
        if self.max_genus.is_some_and(|g| s.genus() >= g) {
            return Vec::new();
        }
        let mut out = children(s);
        out.retain(|c| self.admits(c));
        out
    }

    fn is_bounded(&self) -> bool {
        self.max_genus.is_some() || self.max_frobenius.is_some()
    }
}

fn walk_from(
    root: NumericalSemigroup,
    bounds: &TreeBounds,
    visit: &mut impl FnMut(&NumericalSemigroup),
) {
    let mut stack = vec![root];
    while let Some(s) = stack.pop() {
        visit(&s);
        let mut kids = bounds.expand(&s);
        kids.reverse();
        stack.extend(kids);
    }
}

/// Depth-first preorder over every semigroup within `bounds`, smaller
/// removed generators first.
///
/// # Panics
/// If neither a genus nor a Frobenius bound is set (the tree is infinite).
pub fn walk(bounds: TreeBounds, mut visit: impl FnMut(&NumericalSemigroup)) {
    assert!(
        bounds.is_bounded(),
        "tree walk needs a genus or Frobenius bound"
    );
    let root = NumericalSemigroup::natural();
    if bounds.admits(&root) {
        walk_from(root, &bounds, &mut visit);
    }
}

/// Genus at which [`par_fold`] hands subtrees to workers.
pub const DEFAULT_SPLIT_GENUS: i64 = 8;

/// Folds every semigroup within `bounds` into an accumulator, splitting the
/// tree into independent subtrees at `split_genus` and running them on
/// `workers` threads.
///
/// Subtree results are merged in tree order, so for an associative `merge`
/// the result does not depend on `workers`. `visit` runs concurrently and
/// must only touch its own accumulator.
pub fn par_fold<A, I, V, M>(
    bounds: TreeBounds,
    workers: usize,
    split_genus: i64,
    init: I,
    visit: V,
    merge: M,
) -> A
where
    A: Send,
    I: Fn() -> A + Sync,
    V: Fn(&mut A, &NumericalSemigroup) + Sync,
    M: Fn(A, A) -> A + Sync,
{
    assert!(
        bounds.is_bounded(),
        "tree walk needs a genus or Frobenius bound"
    );
    let mut acc = init();
    let root = NumericalSemigroup::natural();
    if !bounds.admits(&root) {
        return acc;
    }
    let mut frontier = Vec::new();
    let mut stack = vec![root];
    while let Some(s) = stack.pop() {
        if s.genus() >= split_genus {
            frontier.push(s);
            continue;
        }
        visit(&mut acc, &s);
        let mut kids = bounds.expand(&s);
        kids.reverse();
        stack.extend(kids);
    }

    let run = || {
        frontier
            .par_iter()
            .map(|sub| {
                let mut local = init();
                walk_from(sub.clone(), &bounds, &mut |s| visit(&mut local, s));
                local
            })
            .collect::<Vec<A>>()
    };
    let parts = match rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
    {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    parts.into_iter().fold(acc, merge)
}

/// Visits every semigroup of genus exactly `g`; returns how many there are.
pub fn enumerate_by_genus(g: i64, mut visit: impl FnMut(&NumericalSemigroup)) -> u64 {
    let mut count = 0;
    if g < 0 {
        return 0;
    }
    walk(TreeBounds::genus(g), |s| {
        if s.genus() == g {
            count += 1;
            visit(s);
        }
    });
    count
}

/// Visits every semigroup with Frobenius number exactly `f`.
pub fn enumerate_by_frobenius(f: i64, mut visit: impl FnMut(&NumericalSemigroup)) -> u64 {
    let mut count = 0;
    if f < 1 {
        return 0;
    }
    walk(TreeBounds::frobenius(f), |s| {
        if s.frobenius() == f {
            count += 1;
            visit(s);
        }
    });
    count
}

/// Visits the `2^(f-1)` numerical sets whose Frobenius number is `f`.
pub fn enumerate_numerical_sets(f: i64, mut visit: impl FnMut(&NumericalSet)) -> u64 {
    if f < 1 {
        return 0;
    }
    assert!(
        f <= 40,
        "2^(F-1) numerical sets is beyond desk scale for F = {f}"
    );
    let free = (f - 1) as u32;
    let mut count = 0;
    for mask in 0u64..(1u64 << free) {
        let mut words = Words::new();
        raw::set(&mut words, f as usize);
        for b in 0..free {
            if mask >> b & 1 == 1 {
                raw::set(&mut words, b as usize + 1);
            }
        }
        visit(&NumericalSet::from_words(words));
        count += 1;
    }
    count
}

/// Every numerical set with Frobenius number at most `max_f`, ℕ included.
pub fn numerical_sets_upto(max_f: i64, mut visit: impl FnMut(&NumericalSet)) -> u64 {
    visit(&NumericalSet::natural());
    1 + (1..=max_f)
        .map(|f| enumerate_numerical_sets(f, &mut visit))
        .sum::<u64>()
}

/// Numerical sets `T` with `g(T) + g(A(T)) = alpha`, searching `F(T) <= max_f`.
pub fn sets_with_gap_sum_within(alpha: i64, max_f: i64) -> Vec<NumericalSet> {
    let mut out = Vec::new();
    numerical_sets_upto(max_f, |t| {
        if t.genus() + associated(t).genus() == alpha {
            out.push(t.clone());
        }
    });
    out
}

/// Numerical sets `T` with `g(T) + g(A(T)) = alpha`. These all have
/// `F(T) <= 2 alpha - 3`.
pub fn sets_with_gap_sum(alpha: i64) -> Vec<NumericalSet> {
    sets_with_gap_sum_within(alpha, 2 * alpha - 3)
}

/// Numerical sets `T` with `g(A(T)) = alpha`, searching `F(T) <= max_f`.
pub fn sets_with_assoc_genus_within(alpha: i64, max_f: i64) -> Vec<NumericalSet> {
    let mut out = Vec::new();
    numerical_sets_upto(max_f, |t| {
        if associated(t).genus() == alpha {
            out.push(t.clone());
        }
    });
    out
}

/// Numerical sets `T` with `g(A(T)) = alpha`. These all have `F(T) <= 2 alpha - 1`.
pub fn sets_with_assoc_genus(alpha: i64) -> Vec<NumericalSet> {
    sets_with_assoc_genus_within(alpha, 2 * alpha - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Frobenius,
    Genus,
}

impl Axis {
    pub fn column(self) -> &'static str {
        match self {
            Axis::Frobenius => "F",
            Axis::Genus => "g",
        }
    }
}

/// Counts of semigroups keyed by (Frobenius number or genus, type).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub axis: Axis,
    pub max_index: i64,
    rows: BTreeMap<(i64, i64), u64>,
}

impl CountTable {
    pub fn new(axis: Axis, max_index: i64) -> Self {
        CountTable {
            axis,
            max_index,
            rows: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, index: i64, t: i64, count: u64) {
        *self.rows.entry((index, t)).or_default() += count;
    }

    pub fn merge(mut self, other: CountTable) -> CountTable {
        for ((i, t), c) in other.rows {
            self.add(i, t, c);
        }
        self
    }

    pub fn get(&self, index: i64, t: i64) -> u64 {
        self.rows.get(&(index, t)).copied().unwrap_or(0)
    }

    /// Nonzero `(index, type, count)` rows in increasing order.
    pub fn rows(&self) -> impl Iterator<Item = (i64, i64, u64)> + '_ {
        self.rows.iter().map(|(&(i, t), &c)| (i, t, c))
    }

    pub fn total(&self, index: i64) -> u64 {
        self.rows
            .range((index, i64::MIN)..=(index, i64::MAX))
            .map(|(_, &c)| c)
            .sum()
    }

    /// `(odd type, even type)` counts at `index`.
    pub fn parity(&self, index: i64) -> (u64, u64) {
        self.rows.range((index, i64::MIN)..=(index, i64::MAX)).fold(
            (0, 0),
            |(odd, even), (&(_, t), &c)| {
                if t % 2 == 1 {
                    (odd + c, even)
                } else {
                    (odd, even + c)
                }
            },
        )
    }

    /// Parity rollup for every index in `1..=max_index`.
    pub fn parity_rollup(&self) -> BTreeMap<i64, (u64, u64)> {
        (1..=self.max_index).map(|i| (i, self.parity(i))).collect()
    }
}

/// `T(F, t)`, `T_1(F, t)` and `L(g, t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tables {
    pub by_frobenius: CountTable,
    pub almost_symmetric_by_frobenius: CountTable,
    pub by_genus: CountTable,
}

/// Type counts by Frobenius number: every semigroup and the almost
/// symmetric ones.
pub fn frobenius_tables(max_f: i64, workers: usize) -> (CountTable, CountTable) {
    par_fold(
        TreeBounds::frobenius(max_f),
        workers,
        DEFAULT_SPLIT_GENUS,
        || {
            (
                CountTable::new(Axis::Frobenius, max_f),
                CountTable::new(Axis::Frobenius, max_f),
            )
        },
        |(all, almost), s| {
            if s.is_natural() {
                return;
            }
            let f = s.frobenius();
            let t = type_of(s).expect("has gaps");
            all.add(f, t, 1);
            if t == 2 * s.genus() - f {
                almost.add(f, t, 1);
            }
        },
        |(a1, b1), (a2, b2)| (a1.merge(a2), b1.merge(b2)),
    )
}

/// Type counts by genus.
pub fn genus_table(max_g: i64, workers: usize) -> CountTable {
    par_fold(
        TreeBounds::genus(max_g),
        workers,
        DEFAULT_SPLIT_GENUS,
        || CountTable::new(Axis::Genus, max_g),
        |table, s| {
            if !s.is_natural() {
                table.add(s.genus(), type_of(s).expect("has gaps"), 1);
            }
        },
        CountTable::merge,
    )
}

pub fn build_tables(max_f: i64, max_g: i64, workers: usize) -> Tables {
    let (by_frobenius, almost_symmetric_by_frobenius) = frobenius_tables(max_f, workers);
    Tables {
        by_frobenius,
        almost_symmetric_by_frobenius,
        by_genus: genus_table(max_g, workers),
    }
}
