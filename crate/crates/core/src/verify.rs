//! Exhaustive checks of the structural identities over all small semigroups
//! and numerical sets.
//!
//! Every check sweeps a finite domain, tests one or more identities on each
//! member and reports failures with a `gaps=` witness that parses back into
//! the offending set. Equivalences are always tested in both directions.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::time::Instant;

use crate::enumeration::{
    enumerate_by_genus, numerical_sets_upto, sets_with_assoc_genus, sets_with_gap_sum, walk,
    TreeBounds,
};
use crate::error::{Error, Result};
use crate::numcore::{NumericalSemigroup, NumericalSet};
use crate::transforms::{
    a_star, adjoin_frobenius, adjoin_frobenius_set, associated, b_set, big_l, construct_from_tset,
    is_almost_symmetric, is_max_ed, is_staircase, is_symmetric, ordinarization_power, phi,
    pseudo_frobenius, shifted_t_power, t_chain, t_set, type_of,
};

const MAX_WITNESSES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub identity: String,
    /// `gaps=` encoding of the set that violates `identity`.
    pub witness: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.identity, self.witness)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub domain: String,
    /// Identity evaluations performed.
    pub cases: u64,
    /// Evaluations skipped because a precondition did not hold.
    pub skipped: u64,
    pub failure_count: u64,
    /// The first few failures.
    pub failures: Vec<Failure>,
    pub millis: u128,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// One line: `PASS name cases=.. skipped=.. failures=.. millis=.. [domain]`.
    pub fn summary_line(&self) -> String {
        format!(
            "{} {} cases={} skipped={} failures={} millis={} [{}]",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.cases,
            self.skipped,
            self.failure_count,
            self.millis,
            self.domain
        )
    }
}

struct Recorder {
    name: &'static str,
    domain: String,
    start: Instant,
    cases: u64,
    skipped: u64,
    failure_count: u64,
    failures: Vec<Failure>,
}

impl Recorder {
    fn new(name: &'static str, domain: String) -> Self {
        Recorder {
            name,
            domain,
            start: Instant::now(),
            cases: 0,
            skipped: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, identity: &str, witness: &NumericalSet) {
        self.cases += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_WITNESSES {
                self.failures.push(Failure {
                    identity: identity.to_string(),
                    witness: witness.to_string(),
                });
            }
        }
    }

    fn skip(&mut self) {
        self.skipped += 1;
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name.to_string(),
            domain: self.domain,
            cases: self.cases,
            skipped: self.skipped,
            failure_count: self.failure_count,
            failures: self.failures,
            millis: self.start.elapsed().as_millis(),
        }
    }
}

/// All semigroups with `1 <= g <= max_g`.
fn semigroups_upto(max_g: i64) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    walk(TreeBounds::genus(max_g), |s| {
        if !s.is_natural() {
            out.push(s.clone());
        }
    });
    out
}

fn t(h: &NumericalSet) -> i64 {
    type_of(h).expect("caller excludes ℕ")
}

fn union(a: &NumericalSet, extra: &[i64]) -> NumericalSet {
    extra.iter().fold(a.clone(), |acc, &x| acc.with_element(x))
}

/// `g/n <= t <= 2g - F` for every semigroup, checked as `g <= n t`.
pub fn check_type_bounds(max_g: i64) -> CheckResult {
    let mut r = Recorder::new("type_bounds", format!("semigroups 1 <= g <= {max_g}"));
    for s in semigroups_upto(max_g) {
        let ts = t(&s);
        r.check(s.genus() <= s.small_elements() * ts, "g <= n t", &s);
        r.check(ts <= 2 * s.genus() - s.frobenius(), "t <= 2g - F", &s);
    }
    r.finish()
}

/// `t = 2g - F` exactly when the T-set is closed.
pub fn check_as_equivalence(max_g: i64) -> CheckResult {
    let mut r = Recorder::new(
        "almost_symmetric_iff_tset_closed",
        format!("semigroups 1 <= g <= {max_g}"),
    );
    for s in semigroups_upto(max_g) {
        let by_type = is_almost_symmetric(&s).unwrap();
        let by_tset = t_set(&s).unwrap().is_closed();
        r.check(by_type == by_tset, "t = 2g-F <=> T(S) closed", &s);
    }
    r.finish()
}

/// Identities relating a semigroup to its T-set, star closure and B-set.
pub fn check_semigroup_identities(max_g: i64) -> CheckResult {
    let mut r = Recorder::new(
        "semigroup_tset_identities",
        format!("semigroups 1 <= g <= {max_g}"),
    );
    for s in semigroups_upto(max_g) {
        let (f, g, m) = (s.frobenius(), s.genus(), s.multiplicity());
        let pf = pseudo_frobenius(&s).unwrap();
        let ts = pf.len() as i64;
        let tset = t_set(&s).unwrap();
        let a_of_t = associated(&tset);
        let s_pf = union(&s, &pf);

        r.check(tset.frobenius() == f - m, "F(T(S)) = F - m", &s);
        r.check(tset.genus() == f - g, "g(T(S)) = F - g", &s);
        r.check(*a_of_t == s_pf, "A(T(S)) = S ∪ PF(S)", &s);
        r.check(*a_star(&s).unwrap() == s_pf, "A*(S) = S ∪ PF(S)", &s);
        r.check(ts == g - a_of_t.genus(), "t = g - g(A(T(S)))", &s);
        r.check(
            2 * g - f - ts == a_of_t.genus() - tset.genus(),
            "2g - F - t = g(A(T)) - g(T)",
            &s,
        );

        let gap_law = s
            .gaps()
            .all(|x| s.gaps().all(|y| x + y <= f || s.is_gap(x + y - f)));
        r.check(
            gap_law == is_almost_symmetric(&s).unwrap(),
            "almost symmetric <=> (x, y gaps, x+y > F => x+y-F gap)",
            &s,
        );
        r.check(
            b_set(&s).unwrap().len() as i64 == 2 * g - f - 1,
            "|B(S)| = 2g - F - 1",
            &s,
        );
        r.check(
            (f - m + 1..=f).all(|x| s_pf.contains(x)),
            "[F-m+1, F] ⊆ S ∪ PF(S)",
            &s,
        );
        r.check(
            is_symmetric(&s).unwrap() == (ts == 1),
            "g = (F+1)/2 <=> t = 1",
            &s,
        );
        r.check(
            is_max_ed(&s).unwrap() == (ts == m - 1),
            "max embedding dimension <=> t = m - 1",
            &s,
        );
    }
    r.finish()
}

/// Type along the semigroup tree: adjoining the Frobenius number to a
/// non-ordinary semigroup never lowers the type, with the exact increment
/// `t(T(S)) - 1`, and the T²-closure criteria.
pub fn check_chain_theorems(max_g: i64) -> CheckResult {
    let mut r = Recorder::new(
        "frobenius_adjoin_chain",
        format!("semigroups 1 <= g <= {max_g}"),
    );
    for s in semigroups_upto(max_g) {
        if s.is_ordinary() {
            r.skip();
            continue;
        }
        let parent = adjoin_frobenius(&s).unwrap();
        let tset = t_set(&s).unwrap();
        let (ts, tt) = (t(&s), t(&tset));
        let tp = t(&parent);
        r.check(tp == ts + tt - 1, "t(S ∪ F) = t(S) + t(T(S)) - 1", &s);
        r.check(tp >= ts, "t(S ∪ F) >= t(S)", &s);

        let t2_closed = t_set(&tset).unwrap().is_closed();
        r.check(
            t2_closed == is_max_ed(&parent).unwrap(),
            "T(T(S)) closed <=> S ∪ F has max embedding dimension",
            &s,
        );
        r.check(
            t2_closed == (ts + tt == s.multiplicity()),
            "T(T(S)) closed <=> t(S) + t(T(S)) = m",
            &s,
        );

        // Walk up the tree while non-ordinary: the type never drops.
        let mut cur = s.clone();
        let mut ok_identity = true;
        let mut ok_monotone = true;
        while !cur.is_ordinary() {
            let up = adjoin_frobenius(&cur).unwrap();
            let (tc, tu) = (t(&cur), t(&up));
            ok_identity &= tu == tc + t(&t_set(&cur).unwrap()) - 1;
            ok_monotone &= tu >= tc;
            cur = up;
        }
        r.check(ok_identity, "chain: type identity at every step", &s);
        r.check(ok_monotone, "chain: type non-increasing down the tree", &s);
    }
    r.finish()
}

/// `t = g/n` exactly for symmetric and staircase semigroups, and the
/// injection `x ↦ (φ(x), x + φ(x))` behind the lower bound.
pub fn check_staircase(max_g: i64) -> CheckResult {
    let mut r = Recorder::new(
        "minimal_type_classification",
        format!("semigroups 1 <= g <= {max_g}"),
    );
    for s in semigroups_upto(max_g) {
        let ts = t(&s);
        let tight = s.genus() == s.small_elements() * ts;
        let shape = is_symmetric(&s).unwrap() || is_staircase(&s).unwrap();
        r.check(tight == shape, "g = n t <=> symmetric or staircase", &s);

        let pf: BTreeSet<i64> = pseudo_frobenius(&s).unwrap().into_iter().collect();
        let mut images = BTreeSet::new();
        let mut lemma = true;
        let mut into = true;
        for x in s.gaps() {
            let p = phi(&s, x).unwrap();
            lemma &= 0 <= p && p < s.frobenius();
            lemma &= (p == 0) == pf.contains(&x);
            into &= s.contains(p) && pf.contains(&(x + p));
            images.insert((p, x + p));
        }
        r.check(lemma, "0 <= φ(x) < F and φ(x) = 0 <=> x ∈ PF", &s);
        r.check(into, "x ↦ (φ(x), x+φ(x)) lands in S × PF", &s);
        r.check(
            images.len() as i64 == s.genus(),
            "x ↦ (φ(x), x+φ(x)) injective",
            &s,
        );
    }
    r.finish()
}

/// For every `k < L(S)`: `S, A*(S), ..., A*^k(S)` are all almost symmetric
/// exactly when their types follow the closed forms in `g`, `m_i`, `F_i`.
pub fn check_star_chain_almost_symmetric(max_g: i64) -> CheckResult {
    let mut r = Recorder::new(
        "star_chain_almost_symmetric",
        format!("semigroups 1 <= g <= {max_g}"),
    );
    for s in semigroups_upto(max_g) {
        let l = big_l(&s) as usize;
        let g = s.genus();
        let mut stars: Vec<Option<NumericalSemigroup>> = vec![Some(s.clone())];
        for _ in 1..l {
            let next = stars
                .last()
                .unwrap()
                .as_ref()
                .and_then(|cur| a_star(cur).ok());
            stars.push(next);
        }
        let mut all_as = true;
        let mut all_formula = true;
        for (j, star) in stars.iter().enumerate() {
            let (is_as, formula) = match star {
                Some(x) if !x.is_natural() => {
                    let tj = t(x);
                    let i = j / 2;
                    let expected = if j % 2 == 0 {
                        s.f_index(i + 1).ok().map(|fi| 2 * g - s.m_index(i) - fi)
                    } else {
                        s.f_index(i + 1)
                            .ok()
                            .map(|fi| fi - 2 * g + s.m_index(i + 1))
                    };
                    (is_almost_symmetric(x).unwrap(), expected == Some(tj))
                }
                _ => (false, false),
            };
            all_as &= is_as;
            all_formula &= formula;
            r.check(
                all_as == all_formula,
                "A*^0..k almost symmetric <=> type formulas",
                &s,
            );
        }
    }
    r.finish()
}

/// Type of the ordinarization powers of a semigroup.
pub fn check_ordinarization(max_g: i64) -> CheckResult {
    let mut r = Recorder::new(
        "ordinarization_type",
        format!("semigroups 1 <= g <= {max_g}"),
    );
    for s in semigroups_upto(max_g) {
        let chain = t_chain(&s);
        let l = chain.len() - 1;
        let types: Vec<i64> = chain[..l].iter().map(t).collect();
        let g = s.genus();
        for i in 0.. {
            if 2 * i + 1 > l {
                break;
            }
            let Ok(o) = ordinarization_power(&s, i) else {
                r.skip();
                continue;
            };
            let fi = s.f_index(i + 1).unwrap();
            let to = t(&o);
            let sum: i64 = types[..=2 * i].iter().sum();
            r.check(o.frobenius() == fi, "F(O^i(S)) = F_{i+1}(S)", &s);
            r.check(o.genus() == g, "g(O^i(S)) = g(S)", &s);
            r.check(o.is_closed(), "O^i(S) is a semigroup", &s);
            r.check(to == sum, "t(O^i(S)) = Σ_{j<=2i} t(T^j(S))", &s);
            r.check(to <= 2 * g - fi, "t(O^i(S)) <= 2g - F_{i+1}", &s);
            let closed = chain[2 * i + 1].is_closed();
            r.check(
                (to == 2 * g - fi) == closed,
                "equality <=> T^{2i+1}(S) closed",
                &s,
            );
            r.check(
                (to == 2 * o.genus() - o.frobenius()) == closed,
                "O^i(S) almost symmetric <=> T^{2i+1}(S) closed",
                &s,
            );
        }
    }
    r.finish()
}

/// Identities for arbitrary numerical sets `H ≠ ℕ` with `F(H) <= max_f`.
pub fn check_numerical_set_theorems(max_f: i64) -> CheckResult {
    let mut r = Recorder::new(
        "numerical_set_identities",
        format!("numerical sets 1 <= F <= {max_f}"),
    );
    numerical_sets_upto(max_f, |h| {
        if !h.is_natural() {
            check_one_set(&mut r, h);
        }
    });
    r.finish()
}

fn check_one_set(r: &mut Recorder, h: &NumericalSet) {
    let (f, g, m) = (h.frobenius(), h.genus(), h.multiplicity());
    let a = associated(h);
    let star = a_star(h).unwrap();
    let pf = pseudo_frobenius(h).unwrap();
    let th = pf.len() as i64;
    let tset = t_set(h).unwrap();
    let ga = a.genus();

    // associated semigroup, star closure and pseudo-Frobenius numbers
    r.check(star.is_closed(), "A*(H) is a semigroup", h);
    r.check(a.is_closed(), "A(H) is a semigroup", h);
    r.check(
        (0..=f + 1).all(|x| !a.contains(x) || h.contains(x)),
        "A(H) ⊆ H",
        h,
    );
    r.check(
        (0..=f + 1).all(|x| a.contains(x) == (star.contains(x) && h.contains(x))),
        "A(H) = A*(H) ∩ H",
        h,
    );
    r.check(
        pf.iter().all(|&p| !a.contains(p) && star.contains(p))
            && (0..=f + 1).all(|x| star.contains(x) == (a.contains(x) || pf.contains(&x))),
        "A*(H) = PF(H) ⊔ A(H)",
        h,
    );
    r.check(pf.contains(&f), "F ∈ PF(H)", h);
    if let Ok(s) = NumericalSemigroup::try_from(h.clone()) {
        r.check(*star == union(&s, &pf), "semigroup: A*(S) = S ∪ PF(S)", h);
        r.check(a == s, "semigroup: A(S) = S", h);
    } else {
        r.check(*a != *h, "non-semigroup: A(H) ≠ H", h);
    }
    let pf_a = pseudo_frobenius(&a).unwrap();
    r.check(pf.iter().all(|p| pf_a.contains(p)), "PF(H) ⊆ PF(A(H))", h);

    // T-set
    r.check(tset.frobenius() == f - m, "F(T(H)) = F - m", h);
    r.check(tset.genus() == f - g, "g(T(H)) = F - g", h);
    r.check(
        tset.is_natural() == h.is_ordinary(),
        "T(H) = ℕ <=> H ordinary",
        h,
    );
    let a_t = associated(&tset);
    r.check(a_t == star, "A(T(H)) = A*(H)", h);
    r.check(th == ga - a_t.genus(), "t(H) = g(A(H)) - g(A(T(H)))", h);
    r.check(th <= g + ga - f, "t(H) <= g + g(A) - F", h);
    r.check(
        (th == g + ga - f) == tset.is_closed(),
        "t(H) = g + g(A) - F <=> T(H) closed",
        h,
    );

    // sets between a semigroup and its B-set
    let b = b_set(&a).unwrap();
    r.check(a.frobenius() == f, "F(A(H)) = F(H)", h);
    r.check(
        h.gaps().all(|x| a.is_gap(x)) && a.gaps().all(|x| h.is_gap(x) || b.contains(&x)),
        "A(H) ⊆ H ⊆ A(H) ∪ B(A(H))",
        h,
    );
    r.check(g > f - ga, "g(H) >= F(H) - g(A(H)) + 1", h);

    if !h.is_ordinary() {
        let tt = t(&tset);
        let t2 = t_set(&tset).unwrap();
        r.check(tt + th <= ga - g + m, "t(T(H)) + t(H) <= g(A) - g + m", h);
        r.check(
            (tt + th == ga - g + m) == t2.is_closed(),
            "t(T(H)) + t(H) = g(A) - g + m <=> T²(H) closed",
            h,
        );
        // T²(H) = {x - m : x ∈ H ∪ {F}, x ≠ 0}, built directly
        let with_f = h.with_element(f);
        let shifted_gaps = (1..=f).filter(|&y| !with_f.contains(y + m));
        let shifted = NumericalSet::from_gaps(shifted_gaps).unwrap();
        r.check(t2 == shifted, "T²(H) = (H ∪ {F}) \\ {0} - m", h);
        r.check(t2.genus() == g - m, "g(T²(H)) = g - m", h);
        r.check(
            associated(&t2) == a_star(&with_f).unwrap_or_else(|_| NumericalSemigroup::natural()),
            "A(T²(H)) = A*(H ∪ {F})",
            h,
        );
    }

    check_set_chain(r, h);
}

fn check_set_chain(r: &mut Recorder, h: &NumericalSet) {
    let chain = t_chain(h);
    let l = big_l(h) as usize;
    let g = h.genus();
    let ga = associated(h).genus();
    r.check(chain.len() == l + 1, "chain has L(H) + 1 terms", h);
    r.check(
        chain.windows(2).all(|w| big_l(&w[1]) == big_l(&w[0]) - 1),
        "L(T(H)) = L(H) - 1",
        h,
    );
    r.check(
        chain[..l].iter().all(|x| !x.is_natural()),
        "only T^L(H) is ℕ",
        h,
    );

    let types: Vec<i64> = chain[..l].iter().map(t).collect();
    let mut running = 0;
    for k in 0..l {
        running += types[k];
        r.check(
            running == ga - associated(&chain[k + 1]).genus(),
            "Σ_{i<=k} t(T^i) = g(A(H)) - g(A(T^{k+1}))",
            h,
        );
    }
    r.check(types.iter().sum::<i64>() == ga, "Σ t(T^i) = g(A(H))", h);

    for i in 0..=l / 2 {
        let direct = shifted_t_power(h, i).unwrap();
        r.check(direct == chain[2 * i], "T^{2i}(H) = shift by m_i", h);
        let mi = h.m_index(i);
        let mi1 = h.m_index(i + 1);
        if 2 * i < l {
            let fi1 = h.f_index(i + 1).unwrap();
            let p = chain[2 * i].profile();
            r.check(
                p.frobenius == fi1 - mi && p.genus == g - mi,
                "F, g of T^{2i}(H)",
                h,
            );
            // The smallest element above m_i of H ∪ {F_1..F_i}; this is
            // m_{i+1} unless one of those gaps lies in (m_i, m_{i+1}).
            let top: Vec<i64> = (1..=i).map(|j| h.f_index(j).unwrap()).collect();
            let next = (mi + 1..)
                .find(|&x| h.contains(x) || top.contains(&x))
                .unwrap();
            r.check(p.multiplicity == next - mi, "m of T^{2i}(H)", h);
            if next == mi1 {
                r.check(
                    p.multiplicity == mi1 - mi,
                    "m(T^{2i}(H)) = m_{i+1} - m_i",
                    h,
                );
            }

            let odd = chain[2 * i + 1].profile();
            r.check(
                odd.frobenius == fi1 - next && odd.genus == fi1 - g,
                "F, g of T^{2i+1}(H)",
                h,
            );
            if next == mi1 {
                r.check(
                    odd.frobenius == fi1 - mi1,
                    "F(T^{2i+1}(H)) = F_{i+1} - m_{i+1}",
                    h,
                );
            }
            // F_{i+2} - m_i is the second largest gap of T^{2i}(H) when it
            // exists; otherwise T^{2i+1}(H) is ordinary.
            match h.f_index(i + 2).ok().filter(|&x| x > mi) {
                Some(fi2) => r.check(
                    odd.multiplicity == fi1 - fi2,
                    "m(T^{2i+1}(H)) = F_{i+1} - F_{i+2}",
                    h,
                ),
                None => r.check(
                    odd.frobenius < 0 || odd.multiplicity == odd.frobenius + 1,
                    "T^{2i+1}(H) ordinary when F_{i+2} <= m_i",
                    h,
                ),
            }
        }
        if i >= 1 {
            let sum: i64 = types[..2 * i].iter().sum();
            r.check(sum <= ga - g + mi, "Σ_{j<2i} t(T^j) <= g(A) - g + m_i", h);
            r.check(
                (sum == ga - g + mi) == chain[2 * i].is_closed(),
                "Σ_{j<2i} t(T^j) = g(A) - g + m_i <=> T^{2i} closed",
                h,
            );
        }
        if 2 * i < l {
            let fi1 = h.f_index(i + 1).unwrap();
            let sum: i64 = types[..=2 * i].iter().sum();
            r.check(
                sum <= ga + g - fi1,
                "Σ_{j<=2i} t(T^j) <= g(A) + g - F_{i+1}",
                h,
            );
            r.check(
                (sum == ga + g - fi1) == chain[2 * i + 1].is_closed(),
                "Σ_{j<=2i} t(T^j) = g(A) + g - F_{i+1} <=> T^{2i+1} closed",
                h,
            );
        }
    }

    // associated semigroups along the chain versus ordinarization
    for i in 0..=l / 2 {
        if 2 * i < l {
            match ordinarization_power(h, i).and_then(|o| a_star(&o)) {
                Ok(star) => r.check(
                    associated(&chain[2 * i + 1]) == star,
                    "A(T^{2i+1}(H)) = A*(O^i(H))",
                    h,
                ),
                Err(_) => r.skip(),
            }
        }
        if i >= 1 && 2 * i <= l {
            let rhs = adjoin_frobenius_set(h)
                .and_then(|hf| ordinarization_power(&hf, i - 1))
                .and_then(|o| a_star(&o));
            match rhs {
                Ok(star) => r.check(
                    associated(&chain[2 * i]) == star,
                    "A(T^{2i}(H)) = A*(O^{i-1}(H ∪ {F}))",
                    h,
                ),
                Err(_) => r.skip(),
            }
        }
    }
}

fn require(cond: bool, msg: String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Parameter(msg))
    }
}

fn range_text(r: &RangeInclusive<i64>) -> String {
    format!("{}..={}", r.start(), r.end())
}

/// Semigroups with Frobenius number `f` and type `f - alpha` correspond to
/// numerical sets `T` with `g(T) + g(A(T)) = alpha` through the T-set.
pub fn check_bijection_frobenius(alpha: i64, fs: RangeInclusive<i64>) -> Result<CheckResult> {
    require(alpha >= 1, format!("alpha = {alpha} must be positive"))?;
    require(
        *fs.start() > 4 * alpha - 6 && *fs.start() >= 1,
        format!("every F must exceed 4·alpha - 6 = {}", 4 * alpha - 6),
    )?;
    let mut r = Recorder::new(
        "frobenius_type_bijection",
        format!("alpha = {alpha}, F in {}", range_text(&fs)),
    );
    let targets: BTreeSet<NumericalSet> = sets_with_gap_sum(alpha).into_iter().collect();
    for f in fs {
        // t <= 2g - F forces n = F + 1 - g <= alpha/2 + 1
        let bounds = TreeBounds::frobenius(f).with_max_small_elements(alpha / 2 + 1);
        let mut images = BTreeSet::new();
        let mut count = 0;
        let mut witness = None;
        walk(bounds, |s| {
            if s.frobenius() == f && t(s) == f - alpha {
                count += 1;
                images.insert(t_set(s).unwrap());
                witness.get_or_insert_with(|| s.as_set().clone());
            }
        });
        let w = witness.unwrap_or_else(|| NumericalSet::ordinary(f).unwrap());
        r.check(
            count == targets.len(),
            "count = |{T : g(T) + g(A(T)) = alpha}|",
            &w,
        );
        r.check(images == targets, "S ↦ T(S) is onto the target sets", &w);
        for tt in &targets {
            match construct_from_tset(tt, f) {
                Ok(s) => r.check(
                    t_set(&s).unwrap() == *tt && s.frobenius() == f && t(&s) == f - alpha,
                    "T ↦ (ℕ \\ (F - T)) ∪ {0} inverts the T-set",
                    tt,
                ),
                Err(_) => r.check(false, "construction applies", tt),
            }
        }
    }
    Ok(r.finish())
}

/// Semigroups of genus `g` and type `g - alpha` correspond to numerical sets
/// `T` with `g(A(T)) = alpha`.
pub fn check_bijection_genus(alpha: i64, gs: RangeInclusive<i64>) -> Result<CheckResult> {
    require(alpha >= 0, format!("alpha = {alpha} must be non-negative"))?;
    require(
        *gs.start() >= 3 * alpha - 1 && *gs.start() >= 1,
        format!(
            "every g must be at least max(1, 3·alpha - 1) = {}",
            (3 * alpha - 1).max(1)
        ),
    )?;
    let mut r = Recorder::new(
        "genus_type_bijection",
        format!("alpha = {alpha}, g in {}", range_text(&gs)),
    );
    let targets: BTreeSet<NumericalSet> = sets_with_assoc_genus(alpha).into_iter().collect();
    for g in gs {
        // t <= 2g - F forces n = F + 1 - g <= alpha + 1
        let bounds = TreeBounds::genus(g).with_max_small_elements(alpha + 1);
        let mut images = BTreeSet::new();
        let mut count = 0;
        let mut witness = None;
        walk(bounds, |s| {
            if s.genus() == g && t(s) == g - alpha {
                count += 1;
                images.insert(t_set(s).unwrap());
                witness.get_or_insert_with(|| s.as_set().clone());
            }
        });
        let w = witness.unwrap_or_else(|| NumericalSet::ordinary(g).unwrap());
        r.check(
            count == targets.len(),
            "count = |{T : g(A(T)) = alpha}|",
            &w,
        );
        r.check(images == targets, "S ↦ T(S) is onto the target sets", &w);
        for tt in &targets {
            let f = g + tt.genus();
            match construct_from_tset(tt, f) {
                Ok(s) => r.check(
                    t_set(&s).unwrap() == *tt && s.genus() == g && t(&s) == g - alpha,
                    "T ↦ construction with F = g + g(T) inverts the T-set",
                    tt,
                ),
                Err(_) => r.check(false, "construction applies", tt),
            }
        }
    }
    Ok(r.finish())
}

/// Almost symmetric semigroups with Frobenius number `F` and type `F - 2β`
/// are as many as the semigroups of genus `β`.
pub fn check_corollary_t1(beta: i64, fs: RangeInclusive<i64>) -> Result<CheckResult> {
    require(beta >= 1, format!("beta = {beta} must be positive"))?;
    require(
        *fs.start() > 8 * beta - 6,
        format!("every F must exceed 8·beta - 6 = {}", 8 * beta - 6),
    )?;
    let mut r = Recorder::new(
        "almost_symmetric_genus_correspondence",
        format!("beta = {beta}, F in {}", range_text(&fs)),
    );
    let mut genus_beta = BTreeSet::new();
    let expected = enumerate_by_genus(beta, |s| {
        genus_beta.insert(s.as_set().clone());
    });
    for f in fs {
        let bounds = TreeBounds::frobenius(f).with_max_small_elements(beta + 1);
        let mut images = BTreeSet::new();
        let mut count = 0;
        walk(bounds, |s| {
            if s.frobenius() == f && t(s) == f - 2 * beta && is_almost_symmetric(s).unwrap() {
                count += 1;
                images.insert(t_set(s).unwrap());
            }
        });
        let w = NumericalSet::ordinary(f).unwrap();
        r.check(count == expected, "T_1(F, F - 2β) = #{S : g(S) = β}", &w);
        r.check(
            images == genus_beta,
            "T-sets are exactly the genus-β semigroups",
            &w,
        );
    }
    Ok(r.finish())
}

/// Sweep bounds for [`run_all`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_genus: i64,
    pub max_set_frobenius: i64,
    pub bijection_max_frobenius: i64,
    pub bijection_max_genus: i64,
}

impl VerifyConfig {
    pub fn fast() -> Self {
        VerifyConfig {
            max_genus: 10,
            max_set_frobenius: 10,
            bijection_max_frobenius: 30,
            bijection_max_genus: 20,
        }
    }

    pub fn full() -> Self {
        VerifyConfig {
            max_genus: 12,
            max_set_frobenius: 12,
            bijection_max_frobenius: 40,
            bijection_max_genus: 28,
        }
    }
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self::full()
    }
}

/// Every check at the given bounds.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let g = cfg.max_genus;
    let mut out = vec![
        check_type_bounds(g),
        check_as_equivalence(g),
        check_semigroup_identities(g),
        check_chain_theorems(g),
        check_staircase(g),
        check_star_chain_almost_symmetric(g),
        check_ordinarization(g),
        check_numerical_set_theorems(cfg.max_set_frobenius),
    ];
    for alpha in 1..=4 {
        let lo = (4 * alpha - 5).max(1);
        out.push(
            check_bijection_frobenius(alpha, lo..=cfg.bijection_max_frobenius)
                .expect("valid range"),
        );
    }
    for alpha in 0..=3 {
        let lo = (3 * alpha - 1).max(1);
        out.push(check_bijection_genus(alpha, lo..=cfg.bijection_max_genus).expect("valid range"));
    }
    for beta in 1..=4 {
        let lo = 8 * beta - 5;
        out.push(check_corollary_t1(beta, lo..=cfg.bijection_max_frobenius).expect("valid range"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for res in [
            check_type_bounds(8),
            check_as_equivalence(8),
            check_semigroup_identities(8),
            check_chain_theorems(8),
            check_staircase(8),
            check_star_chain_almost_symmetric(8),
            check_ordinarization(8),
            check_numerical_set_theorems(8),
        ] {
            assert!(res.passed(), "{}\n{:?}", res.summary_line(), res.failures);
            assert!(res.cases > 0);
        }
    }

    #[test]
    fn bijection_examples() {
        let r = check_bijection_frobenius(2, 3..=12).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        let r = check_bijection_frobenius(1, 1..=12).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(check_bijection_frobenius(3, 5..=9).is_err());
        let r = check_bijection_genus(0, 1..=10).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        let r = check_bijection_genus(2, 5..=12).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(check_bijection_genus(2, 4..=12).is_err());
        let r = check_corollary_t1(1, 3..=14).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(check_corollary_t1(2, 10..=14).is_err());
    }

    #[test]
    fn witnesses_parse_back() {
        let mut r = Recorder::new("demo", String::new());
        let h = NumericalSet::from_gaps([1, 3, 4, 6, 8]).unwrap();
        r.check(false, "always fails", &h);
        let res = r.finish();
        assert!(!res.passed());
        assert_eq!(res.failures[0].witness.parse::<NumericalSet>().unwrap(), h);
        assert!(res.summary_line().starts_with("FAIL demo"));
    }
}
