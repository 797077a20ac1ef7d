//! Transforms on numerical sets: pseudo-Frobenius numbers and type, the
//! associated semigroup `A(H)`, the star closure `A*(H)`, the T-set
//! reflection and its chain, ordinarization, and the classification
//! predicates built on them.

use std::cell::OnceCell;

use crate::error::{Error, Result};
use crate::numcore::raw;
use crate::numcore::{NumericalSemigroup, NumericalSet, Profile, Words, DEFAULT_MAX_FROBENIUS};

fn require_gaps(h: &NumericalSet, op: &'static str) -> Result<()> {
    if h.is_natural() {
        Err(Error::NaturalNumbers { op })
    } else {
        Ok(())
    }
}

/// `A(H) = {x : x + H ⊆ H}`.
pub fn associated(h: &NumericalSet) -> NumericalSemigroup {
    let gaps = h.gap_words();
    let members = h.member_words();
    let mut out = Words::new();
    for x in 1..=h.frobenius().max(0) as usize {
        // bit 0 of `members` is 0 itself, so gaps of H are excluded here too
        if raw::shifted_intersects(gaps, x, &members) {
            raw::set(&mut out, x);
        }
    }
    NumericalSemigroup::new_unchecked(NumericalSet::from_words(out))
}

/// Gap mask of `A*(H)`: every `a <= F` with `a + s` a gap for some nonzero `s ∈ H`.
fn star_gap_words(h: &NumericalSet) -> Words {
    let gaps = h.gap_words();
    let nonzero = h.nonzero_member_words();
    let mut out = Words::new();
    for a in 1..=h.frobenius() as usize {
        if raw::shifted_intersects(gaps, a, &nonzero) {
            raw::set(&mut out, a);
        }
    }
    out
}

/// `A*(H) = {a : a + (H \ {0}) ⊆ H}`, defined for `H ≠ ℕ`.
pub fn a_star(h: &NumericalSet) -> Result<NumericalSemigroup> {
    require_gaps(h, "A*")?;
    Ok(NumericalSemigroup::new_unchecked(NumericalSet::from_words(
        star_gap_words(h),
    )))
}

/// Gaps `a` with `a + (H \ {0}) ⊆ H`, increasing.
pub fn pseudo_frobenius(h: &NumericalSet) -> Result<Vec<i64>> {
    require_gaps(h, "PF")?;
    let nonzero = h.nonzero_member_words();
    Ok(h.gaps()
        .filter(|&a| !raw::shifted_intersects(h.gap_words(), a as usize, &nonzero))
        .collect())
}

/// `t(H) = |PF(H)|`.
pub fn type_of(h: &NumericalSet) -> Result<i64> {
    require_gaps(h, "type")?;
    let gaps = h.gap_words();
    let nonzero = h.nonzero_member_words();
    Ok(raw::iter_ones(gaps)
        .filter(|&a| !raw::shifted_intersects(gaps, a, &nonzero))
        .count() as i64)
}

/// `T(H) = {x ∈ ℕ : F - x ∈ (ℤ \ H) ∪ {0}}`.
///
/// Its gaps are `F - x` for the elements `x ∈ H ∩ [1, F]`; ordinary sets map to ℕ.
pub fn t_set(h: &NumericalSet) -> Result<NumericalSet> {
    require_gaps(h, "T-set")?;
    let f = h.frobenius();
    let mut out = Words::new();
    for x in h.elements_upto(f).skip(1) {
        raw::set(&mut out, (f - x) as usize);
    }
    Ok(NumericalSet::from_words(out))
}

/// `T^k(H)`; stops with an error if ℕ is reached before `k` steps.
pub fn t_power(h: &NumericalSet, k: usize) -> Result<NumericalSet> {
    let mut cur = h.clone();
    for _ in 0..k {
        cur = t_set(&cur)?;
    }
    Ok(cur)
}

/// `B(S) = {x : x ∉ S, F - x ∉ S}`.
pub fn b_set(s: &NumericalSemigroup) -> Result<Vec<i64>> {
    require_gaps(s, "B-set")?;
    let f = s.frobenius();
    Ok(s.gaps().filter(|&x| !s.contains(f - x)).collect())
}

/// `H ∪ {F(H)}`.
pub fn adjoin_frobenius_set(h: &NumericalSet) -> Result<NumericalSet> {
    require_gaps(h, "adjoining the Frobenius number")?;
    Ok(h.with_element(h.frobenius()))
}

/// The parent of `S` in the semigroup tree, `S ∪ {F(S)}`.
pub fn adjoin_frobenius(s: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    adjoin_frobenius_set(s).map(NumericalSemigroup::new_unchecked)
}

/// `O(H) = H ∪ {F(H)} \ {m(H)}` for non-ordinary `H`.
pub fn ordinarization(h: &NumericalSet) -> Result<NumericalSet> {
    require_gaps(h, "ordinarization")?;
    let m = h.multiplicity();
    if m > h.frobenius() {
        return Err(Error::Ordinary {
            op: "ordinarization",
        });
    }
    h.with_element(h.frobenius()).without_element(m)
}

/// `O^i(H)`.
pub fn ordinarization_power(h: &NumericalSet, i: usize) -> Result<NumericalSet> {
    let mut cur = h.clone();
    for _ in 0..i {
        cur = ordinarization(&cur)?;
    }
    Ok(cur)
}

/// `l(H) = |H ∩ [1, g(H)]|`.
pub fn small_l(h: &NumericalSet) -> i64 {
    let g = h.genus();
    (1..=g).filter(|&x| h.contains(x)).count() as i64
}

/// Number of T-set steps from `H` down to ℕ.
pub fn big_l(h: &NumericalSet) -> i64 {
    let l = small_l(h);
    if h.contains(h.genus()) {
        2 * l
    } else {
        2 * l + 1
    }
}

/// `[H, T(H), ..., T^L(H) = ℕ]`.
pub fn t_chain(h: &NumericalSet) -> Vec<NumericalSet> {
    let mut chain = vec![h.clone()];
    while let Some(last) = chain.last().filter(|s| !s.is_natural()) {
        let next = t_set(last).expect("non-natural");
        chain.push(next);
    }
    chain
}

/// `T^{2i}(H)` computed directly as a shift: the elements `x - m_i` for
/// `x ≥ m_i` in `H` together with the `i` largest gaps.
pub fn shifted_t_power(h: &NumericalSet, i: usize) -> Result<NumericalSet> {
    let l = big_l(h);
    if 2 * i as i64 > l {
        return Err(Error::OutOfRange {
            what: "even T-power",
            index: i as i64,
            min: 0,
            max: l / 2,
        });
    }
    if i == 0 {
        return Ok(h.clone());
    }
    let shift = h.m_index(i);
    let g = h.genus() as usize;
    let mut out = Words::new();
    // skip the i largest gaps; they become elements
    for x in h.gaps().take(g - i) {
        if x > shift {
            raw::set(&mut out, (x - shift) as usize);
        }
    }
    Ok(NumericalSet::from_words(out))
}

/// Inverse of the T-set on semigroups of Frobenius number `f`:
/// `S = (ℕ \ (f - T)) ∪ {0}`, valid when `f > 2 F(T)`.
pub fn construct_from_tset(t: &NumericalSet, f: i64) -> Result<NumericalSemigroup> {
    if f < 1 || f <= 2 * t.frobenius() {
        return Err(Error::Parameter(format!(
            "Frobenius number {f} must be positive and exceed 2·F(T) = {}",
            2 * t.frobenius()
        )));
    }
    if f > DEFAULT_MAX_FROBENIUS {
        return Err(Error::CapacityExceeded {
            frobenius: f,
            limit: DEFAULT_MAX_FROBENIUS,
        });
    }
    let mut out = Words::new();
    for y in t.elements_upto(f - 1) {
        raw::set(&mut out, (f - y) as usize);
    }
    NumericalSemigroup::try_from(NumericalSet::from_words(out))
}

/// `φ_S(x) = max{s ∈ S : x + s ∈ Gap(S)}` for a gap `x`.
pub fn phi(s: &NumericalSemigroup, x: i64) -> Result<i64> {
    if !s.is_gap(x) {
        return Err(Error::Parameter(format!("{x} is not a gap of {s}")));
    }
    Ok((0..=s.frobenius() - x)
        .rev()
        .find(|&y| s.contains(y) && s.is_gap(x + y))
        .expect("y = 0 qualifies"))
}

pub fn is_ordinary(h: &NumericalSet) -> Result<bool> {
    require_gaps(h, "ordinary test")?;
    Ok(h.is_ordinary())
}

/// `g = (F + 1) / 2`.
pub fn is_symmetric(s: &NumericalSemigroup) -> Result<bool> {
    require_gaps(s, "symmetry test")?;
    Ok(2 * s.genus() == s.frobenius() + 1)
}

/// `t = 2g - F`.
pub fn is_almost_symmetric(s: &NumericalSemigroup) -> Result<bool> {
    Ok(type_of(s)? == 2 * s.genus() - s.frobenius())
}

/// Embedding dimension equals multiplicity.
pub fn is_max_ed(s: &NumericalSemigroup) -> Result<bool> {
    require_gaps(s, "max embedding dimension test")?;
    Ok(s.embedding_dimension() as i64 == s.multiplicity())
}

/// `S = {0, m, 2m, ..., nm, →}` for some `m, n ≥ 1`.
pub fn is_staircase(s: &NumericalSemigroup) -> Result<bool> {
    require_gaps(s, "staircase test")?;
    let m = s.multiplicity();
    let f = s.frobenius();
    Ok((f + 1) % m == 0 && (1..=f).all(|x| s.contains(x) == (x % m == 0)))
}

/// Derived quantities of one numerical set, each computed on first access.
///
/// Fields that are undefined for the input (anything needing a gap when the
/// input is ℕ, or the B-set when the input is not a semigroup) read as `None`.
pub struct TransformReport {
    source: NumericalSet,
    semigroup: OnceCell<Option<NumericalSemigroup>>,
    pf: OnceCell<Option<Vec<i64>>>,
    tset: OnceCell<Option<NumericalSet>>,
    assoc: OnceCell<NumericalSemigroup>,
    astar: OnceCell<Option<NumericalSemigroup>>,
    bset: OnceCell<Option<Vec<i64>>>,
    chain: OnceCell<Vec<NumericalSet>>,
}

impl TransformReport {
    pub fn new(source: NumericalSet) -> Self {
        TransformReport {
            source,
            semigroup: OnceCell::new(),
            pf: OnceCell::new(),
            tset: OnceCell::new(),
            assoc: OnceCell::new(),
            astar: OnceCell::new(),
            bset: OnceCell::new(),
            chain: OnceCell::new(),
        }
    }

    pub fn source(&self) -> &NumericalSet {
        &self.source
    }

    pub fn profile(&self) -> Profile {
        self.source.profile()
    }

    /// The source as a semigroup, when it is closed.
    pub fn semigroup(&self) -> Option<&NumericalSemigroup> {
        self.semigroup
            .get_or_init(|| NumericalSemigroup::try_from(self.source.clone()).ok())
            .as_ref()
    }

    pub fn pf(&self) -> Option<&[i64]> {
        self.pf
            .get_or_init(|| pseudo_frobenius(&self.source).ok())
            .as_deref()
    }

    pub fn t(&self) -> Option<i64> {
        self.pf().map(|p| p.len() as i64)
    }

    pub fn tset(&self) -> Option<&NumericalSet> {
        self.tset.get_or_init(|| t_set(&self.source).ok()).as_ref()
    }

    pub fn assoc(&self) -> &NumericalSemigroup {
        self.assoc.get_or_init(|| associated(&self.source))
    }

    pub fn astar(&self) -> Option<&NumericalSemigroup> {
        self.astar
            .get_or_init(|| a_star(&self.source).ok())
            .as_ref()
    }

    pub fn bset(&self) -> Option<&[i64]> {
        self.bset
            .get_or_init(|| self.semigroup().and_then(|s| b_set(s).ok()))
            .as_deref()
    }

    pub fn chain_length(&self) -> i64 {
        big_l(&self.source)
    }

    pub fn chain(&self) -> &[NumericalSet] {
        self.chain.get_or_init(|| t_chain(&self.source))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: &[i64]) -> NumericalSet {
        NumericalSet::from_gaps(g.iter().copied()).unwrap()
    }

    fn sg(s: &str) -> NumericalSemigroup {
        s.parse().unwrap()
    }

    #[test]
    fn associated_examples() {
        let t = set(&[1, 3, 4, 6, 8]);
        assert_eq!(associated(&t).gap_list(), vec![1, 2, 3, 4, 6, 8]);
        let s = sg("gens=5,7,9");
        assert_eq!(associated(&s), s);
        let a = associated(&set(&[2]));
        assert_eq!(a.gap_list(), vec![1, 2]);
        assert_eq!(a.genus(), 2);
        assert!(associated(&NumericalSet::natural()).is_natural());
    }

    #[test]
    fn a_star_examples() {
        let s = sg("gens=5,7,9");
        let expected: NumericalSet = s.with_element(11).with_element(13);
        assert_eq!(a_star(&s).unwrap().as_set(), &expected);
        let s = sg("gens=3,5");
        assert_eq!(a_star(&s).unwrap().as_set(), &s.with_element(7));
        let ord = NumericalSet::ordinary(9).unwrap();
        assert!(a_star(&ord).unwrap().is_natural());
        assert!(matches!(
            a_star(&NumericalSet::natural()),
            Err(Error::NaturalNumbers { .. })
        ));
    }

    #[test]
    fn pseudo_frobenius_examples() {
        assert_eq!(pseudo_frobenius(&sg("gens=5,7,9")).unwrap(), vec![11, 13]);
        assert_eq!(
            pseudo_frobenius(&NumericalSet::ordinary(6).unwrap()).unwrap(),
            vec![1, 2, 3, 4, 5, 6]
        );
        assert_eq!(pseudo_frobenius(&sg("gens=3,5")).unwrap(), vec![7]);
        assert!(pseudo_frobenius(&NumericalSet::natural()).is_err());
    }

    #[test]
    fn type_examples() {
        assert_eq!(type_of(&sg("gens=5,7,9")), Ok(2));
        assert_eq!(type_of(&NumericalSet::ordinary(11).unwrap()), Ok(11));
        assert_eq!(type_of(&set(&[1, 2, 4, 5])), Ok(2));
        assert!(type_of(&NumericalSet::natural()).is_err());
    }

    #[test]
    fn t_set_examples() {
        assert_eq!(t_set(&sg("gens=3,5")).unwrap().gap_list(), vec![1, 2, 4]);
        let t = t_set(&sg("gens=5,7,9")).unwrap();
        assert_eq!(t.gap_list(), vec![1, 3, 4, 6, 8]);
        assert!(!t.is_closed());
        assert!(t_set(&NumericalSet::ordinary(7).unwrap())
            .unwrap()
            .is_natural());
        assert!(t_set(&NumericalSet::natural()).is_err());
    }

    #[test]
    fn b_set_examples() {
        assert_eq!(b_set(&sg("gens=5,7,9")).unwrap(), vec![2, 11]);
        assert!(b_set(&sg("gens=3,5")).unwrap().is_empty());
        assert_eq!(
            b_set(&NumericalSemigroup::ordinary(3).unwrap()).unwrap(),
            vec![1, 2]
        );
        assert!(b_set(&NumericalSemigroup::natural()).is_err());
    }

    #[test]
    fn adjoin_examples() {
        let p = adjoin_frobenius(&sg("gens=5,7,9")).unwrap();
        assert_eq!(p.gap_list(), vec![1, 2, 3, 4, 6, 8, 11]);
        assert_eq!(p.frobenius(), 11);
        let p = adjoin_frobenius(&sg("gaps=1,3")).unwrap();
        assert_eq!(p.gap_list(), vec![1]);
        assert!(adjoin_frobenius(&sg("gaps=1")).unwrap().is_natural());
        assert!(adjoin_frobenius(&NumericalSemigroup::natural()).is_err());
    }

    #[test]
    fn ordinarization_examples() {
        let o = ordinarization(&sg("gens=5,7,9")).unwrap();
        assert_eq!(o.gap_list(), vec![1, 2, 3, 4, 5, 6, 8, 11]);
        let o = ordinarization(&sg("gens=3,5")).unwrap();
        assert_eq!(o.gap_list(), vec![1, 2, 3, 4]);
        let o = ordinarization(&sg("gaps=1,3")).unwrap();
        assert_eq!(o.gap_list(), vec![1, 2]);
        assert!(matches!(
            ordinarization(&NumericalSet::ordinary(4).unwrap()),
            Err(Error::Ordinary { .. })
        ));
    }

    #[test]
    fn chain_length_examples() {
        let s = sg("gens=5,7,9");
        assert_eq!((small_l(&s), big_l(&s)), (2, 5));
        let n = NumericalSet::natural();
        assert_eq!((small_l(&n), big_l(&n)), (0, 0));
        let s = sg("gens=3,5");
        assert_eq!((small_l(&s), big_l(&s)), (1, 3));
    }

    #[test]
    fn chain_examples() {
        assert_eq!(t_chain(&NumericalSet::natural()).len(), 1);
        let c = t_chain(&sg("gens=3,5"));
        assert_eq!(c.len(), 4);
        assert!(c[3].is_natural() && c[..3].iter().all(|h| !h.is_natural()));
        let c = t_chain(&sg("gens=5,7,9"));
        assert_eq!(c.len(), 6);
        for (k, h) in c.iter().enumerate() {
            assert_eq!(big_l(h), 5 - k as i64);
        }
    }

    #[test]
    fn shifted_power_examples() {
        let s = sg("gens=5,7,9");
        assert_eq!(shifted_t_power(&s, 0).unwrap(), *s.as_set());
        let t2 = shifted_t_power(&s, 1).unwrap();
        assert_eq!(t2.gap_list(), vec![1, 3, 6]);
        assert_eq!(t2, t_power(&s, 2).unwrap());
        let t4 = shifted_t_power(&s, 2).unwrap();
        assert_eq!(t4.gap_list(), vec![1]);
        assert_eq!(t4, t_power(&s, 4).unwrap());
        assert!(matches!(
            shifted_t_power(&s, 3),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn predicates() {
        let s = sg("gens=3,5");
        assert_eq!(is_symmetric(&s), Ok(true));
        assert_eq!(is_almost_symmetric(&s), Ok(true));
        assert_eq!(is_staircase(&s), Ok(false));
        assert_eq!(is_max_ed(&s), Ok(false));

        let s = sg("gens=5,7,9");
        assert_eq!(is_almost_symmetric(&s), Ok(false));
        assert_eq!(is_symmetric(&s), Ok(false));

        let st = sg("gaps=1,2,4,5");
        assert_eq!(is_staircase(&st), Ok(true));
        assert_eq!(type_of(&st), Ok(2));

        assert_eq!(
            is_max_ed(&NumericalSemigroup::ordinary(4).unwrap()),
            Ok(true)
        );
        assert!(is_symmetric(&NumericalSemigroup::natural()).is_err());
        assert!(is_almost_symmetric(&NumericalSemigroup::natural()).is_err());
        assert!(is_ordinary(&NumericalSet::natural()).is_err());
    }

    #[test]
    fn construct_inverts_t_set() {
        let t = set(&[1, 3, 4, 6, 8]);
        let s = construct_from_tset(&t, 17).unwrap();
        assert_eq!(t_set(&s).unwrap(), t);
        assert_eq!(s.frobenius(), 17);
        assert!(construct_from_tset(&t, 16).is_err());
        assert!(construct_from_tset(&NumericalSet::natural(), 0).is_err());
        assert_eq!(
            construct_from_tset(&NumericalSet::natural(), 1)
                .unwrap()
                .gap_list(),
            vec![1]
        );
    }

    #[test]
    fn phi_examples() {
        let s = sg("gens=5,7,9");
        assert_eq!(phi(&s, 13), Ok(0));
        assert_eq!(phi(&s, 1), Ok(12));
        assert!(phi(&s, 5).is_err());
    }

    #[test]
    fn report_fields() {
        let r = TransformReport::new("gens=5,7,9".parse().unwrap());
        assert_eq!(r.pf(), Some(&[11, 13][..]));
        assert_eq!(r.t(), Some(2));
        assert_eq!(r.bset(), Some(&[2, 11][..]));
        assert_eq!(r.chain_length(), 5);
        assert_eq!(r.chain().len(), 6);
        let astar: &NumericalSet = r.astar().unwrap();
        let pf_and_assoc: Vec<i64> = r.pf().unwrap().to_vec();
        assert!(pf_and_assoc
            .iter()
            .all(|&x| astar.contains(x) && !r.assoc().contains(x)));

        let n = TransformReport::new(NumericalSet::natural());
        assert!(n.pf().is_none() && n.tset().is_none() && n.astar().is_none());
        assert!(n.bset().is_none());
        assert!(n.assoc().is_natural());

        let h = TransformReport::new(set(&[1, 3, 4, 6, 8]));
        assert!(h.semigroup().is_none() && h.bset().is_none());
        assert!(h.pf().is_some());
    }
}
