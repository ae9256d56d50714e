//! Chain-valued fuzzy subsets of a finite semigroup.
//!
//! A fuzzy subset assigns every element a grade on a [`ValueChain`]. The
//! composite of two fuzzy subsets takes, at each element, the best grade
//! achievable over its factorizations: `(f . g)(a)` is the maximum of
//! `min(f(b), g(c))` over all pairs with `b*c = a`, and `0` when `a` has no
//! factorization. All suprema are maxima because everything is finite.

use crate::chain::ValueChain;
use crate::error::{Error, Result};
use crate::semigroup::{ElementSubset, FiniteSemigroup};

/// Budget for `(k+1)^n` grade-assignment scans.
pub const DEFAULT_FUZZY_BUDGET: u128 = 10_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FuzzySubset {
    chain: ValueChain,
    values: Vec<usize>,
}

impl FuzzySubset {
    pub fn new(chain: ValueChain, values: Vec<usize>) -> Result<Self> {
        for &level in &values {
            if !chain.contains(level) {
                return Err(Error::LevelOutOfRange {
                    level,
                    max: chain.top(),
                });
            }
        }
        Ok(FuzzySubset { chain, values })
    }

    pub fn constant(order: usize, chain: ValueChain, level: usize) -> Result<Self> {
        Self::new(chain, vec![level; order])
    }

    /// The characteristic map of a crisp subset: top on the subset, zero
    /// elsewhere.
    pub fn characteristic(s: &FiniteSemigroup, subset: ElementSubset, chain: ValueChain) -> Self {
        let values = s
            .elements()
            .map(|a| if subset.contains(a) { chain.top() } else { 0 })
            .collect();
        FuzzySubset {
            chain,
            values,
        }
    }

    pub fn chain(&self) -> ValueChain {
        self.chain
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn grade(&self, element: usize) -> usize {
        self.values[element]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn check_compatible(&self, other: &FuzzySubset) -> Result<()> {
        if self.chain != other.chain {
            return Err(Error::ChainMismatch {
                left: self.chain.resolution(),
                right: other.chain.resolution(),
            });
        }
        if self.values.len() != other.values.len() {
            return Err(Error::OrderMismatch {
                values: other.values.len(),
                order: self.values.len(),
            });
        }
        Ok(())
    }

    fn check_host(&self, s: &FiniteSemigroup) -> Result<()> {
        if self.values.len() != s.order() {
            return Err(Error::OrderMismatch {
                values: self.values.len(),
                order: s.order(),
            });
        }
        Ok(())
    }

    /// Pointwise minimum.
    pub fn meet(&self, other: &FuzzySubset) -> Result<FuzzySubset> {
        self.check_compatible(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Ok(FuzzySubset {
            chain: self.chain,
            values,
        })
    }

    /// Pointwise order: `self(a) <= other(a)` everywhere.
    pub fn is_subset_of(&self, other: &FuzzySubset) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(&a, &b)| a <= b))
    }

    /// `(self . other)(a) = max over a = b*c of min(self(b), other(c))`,
    /// zero where `a` has no factorization.
    pub fn composite(&self, other: &FuzzySubset, s: &FiniteSemigroup) -> Result<FuzzySubset> {
        self.check_compatible(other)?;
        self.check_host(s)?;
        let mut values = vec![0usize; s.order()];
        composite_into(s, &self.values, &other.values, &mut values);
        Ok(FuzzySubset {
            chain: self.chain,
            values,
        })
    }

    /// `f(a*b) >= min(f(a), f(b))` for all pairs.
    pub fn is_fuzzy_subsemigroup(&self, s: &FiniteSemigroup) -> bool {
        self.assert_host(s);
        s.elements().all(|a| {
            s.elements()
                .all(|b| self.values[s.mul(a, b)] >= self.values[a].min(self.values[b]))
        })
    }

    /// `f(a*b) >= f(b)` for all pairs.
    pub fn is_fuzzy_left_ideal(&self, s: &FiniteSemigroup) -> bool {
        self.assert_host(s);
        s.elements()
            .all(|a| s.elements().all(|b| self.values[s.mul(a, b)] >= self.values[b]))
    }

    /// `f(a*b) >= f(a)` for all pairs.
    pub fn is_fuzzy_right_ideal(&self, s: &FiniteSemigroup) -> bool {
        self.assert_host(s);
        s.elements()
            .all(|a| s.elements().all(|b| self.values[s.mul(a, b)] >= self.values[a]))
    }

    /// `(q . top) meet (top . q)` lies below `q` pointwise.
    pub fn is_fuzzy_quasi_ideal(&self, s: &FiniteSemigroup) -> bool {
        self.assert_host(s);
        let top = vec![self.chain.top(); s.order()];
        let mut right = vec![0usize; s.order()];
        let mut left = vec![0usize; s.order()];
        composite_into(s, &self.values, &top, &mut right);
        composite_into(s, &top, &self.values, &mut left);
        s.elements()
            .all(|a| right[a].min(left[a]) <= self.values[a])
    }

    fn assert_host(&self, s: &FiniteSemigroup) {
        assert_eq!(
            self.values.len(),
            s.order(),
            "fuzzy subset does not match the semigroup order"
        );
    }

    /// The crisp cut `{a : f(a) >= t}`. Only positive levels are admitted;
    /// the zero cut is always everything and signals a degenerate query.
    pub fn level_set(&self, t: usize) -> Result<ElementSubset> {
        if t == 0 {
            return Err(Error::ZeroCutLevel);
        }
        if !self.chain.contains(t) {
            return Err(Error::LevelOutOfRange {
                level: t,
                max: self.chain.top(),
            });
        }
        let mut out = ElementSubset::empty();
        for (a, &v) in self.values.iter().enumerate() {
            if v >= t {
                out.insert(a);
            }
        }
        Ok(out)
    }

    /// Every positive cut is nonempty and left simple as a semigroup in its
    /// own right. Errors when `self` is not a fuzzy subsemigroup, which is
    /// distinct from a `false` verdict.
    pub fn is_left_simple_fuzzy_subsemigroup(&self, s: &FiniteSemigroup) -> Result<bool> {
        self.cuts_all(s, |sub| sub.is_left_simple())
    }

    /// Every positive cut is nonempty and completely simple.
    pub fn is_completely_simple_fuzzy_subsemigroup(&self, s: &FiniteSemigroup) -> Result<bool> {
        self.cuts_all(s, |sub| sub.is_completely_simple())
    }

    fn cuts_all(
        &self,
        s: &FiniteSemigroup,
        pred: impl Fn(&FiniteSemigroup) -> bool,
    ) -> Result<bool> {
        self.check_host(s)?;
        if !self.is_fuzzy_subsemigroup(s) {
            return Err(Error::NotFuzzySubsemigroup);
        }
        for t in self.chain.positive_levels() {
            let cut = self.level_set(t)?;
            if cut.is_empty() {
                return Ok(false);
            }
            let (sub, _) = s
                .restriction(cut)
                .expect("nonempty cuts of fuzzy subsemigroups are closed");
            if !pred(&sub) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Text form `k; v0 v1 ... v_{n-1}`.
    pub fn to_text(&self) -> String {
        let values: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        format!("{}; {}", self.chain.resolution(), values.join(" "))
    }

    pub fn parse(input: &str) -> Result<Self> {
        let (head, tail) = input
            .split_once(';')
            .ok_or_else(|| Error::Parse("expected `k; v0 v1 ...`".into()))?;
        let resolution: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad resolution {head:?}")))?;
        let chain = ValueChain::new(resolution)?;
        let values: Vec<usize> = tail
            .split_whitespace()
            .map(|tok| {
                tok.parse()
                    .map_err(|_| Error::Parse(format!("bad grade {tok:?}")))
            })
            .collect::<Result<_>>()?;
        if values.is_empty() {
            return Err(Error::Parse("no grades given".into()));
        }
        Self::new(chain, values)
    }
}

impl std::fmt::Debug for FuzzySubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FuzzySubset({})", self.to_text())
    }
}

/// Shared kernel for composites: one pass over the table.
fn composite_into(s: &FiniteSemigroup, f: &[usize], g: &[usize], out: &mut [usize]) {
    out.fill(0);
    for b in s.elements() {
        for c in s.elements() {
            let grade = f[b].min(g[c]);
            let target = &mut out[s.mul(b, c)];
            if grade > *target {
                *target = grade;
            }
        }
    }
}

pub(crate) fn composite_levels(s: &FiniteSemigroup, f: &[usize], g: &[usize], out: &mut [usize]) {
    composite_into(s, f, g, out)
}

/// Membership filters for fuzzy-subset enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FuzzyFilter {
    All,
    Subsemigroup,
    LeftIdeal,
    RightIdeal,
    QuasiIdeal,
}

impl FuzzyFilter {
    fn admits(&self, f: &FuzzySubset, s: &FiniteSemigroup) -> bool {
        match self {
            FuzzyFilter::All => true,
            FuzzyFilter::Subsemigroup => f.is_fuzzy_subsemigroup(s),
            FuzzyFilter::LeftIdeal => f.is_fuzzy_left_ideal(s),
            FuzzyFilter::RightIdeal => f.is_fuzzy_right_ideal(s),
            FuzzyFilter::QuasiIdeal => f.is_fuzzy_quasi_ideal(s),
        }
    }
}

/// Streams all `(k+1)^n` grade assignments in odometer order, keeping those
/// passing the filter. Refuses up front when the scan exceeds `budget`.
pub fn enumerate_fuzzy_subsets<'a>(
    s: &'a FiniteSemigroup,
    chain: ValueChain,
    filter: FuzzyFilter,
    budget: u128,
) -> Result<FuzzySubsetIter<'a>> {
    let assignments = (chain.resolution() as u128 + 1)
        .checked_pow(s.order() as u32)
        .ok_or(Error::BudgetExceeded {
            assignments: u128::MAX,
            budget,
        })?;
    if assignments > budget {
        return Err(Error::BudgetExceeded {
            assignments,
            budget,
        });
    }
    Ok(FuzzySubsetIter {
        semigroup: s,
        chain,
        filter,
        next: Some(vec![0; s.order()]),
    })
}

pub struct FuzzySubsetIter<'a> {
    semigroup: &'a FiniteSemigroup,
    chain: ValueChain,
    filter: FuzzyFilter,
    next: Option<Vec<usize>>,
}

impl FuzzySubsetIter<'_> {
    fn advance(&mut self) {
        let Some(values) = &mut self.next else {
            return;
        };
        for v in values.iter_mut() {
            if *v < self.chain.top() {
                *v += 1;
                return;
            }
            *v = 0;
        }
        self.next = None;
    }
}

impl Iterator for FuzzySubsetIter<'_> {
    type Item = FuzzySubset;

    fn next(&mut self) -> Option<FuzzySubset> {
        loop {
            let values = self.next.clone()?;
            self.advance();
            let candidate = FuzzySubset {
                chain: self.chain,
                values,
            };
            if self.filter.admits(&candidate, self.semigroup) {
                return Some(candidate);
            }
        }
    }
}

/// Checks the semilattice-family conditions for fuzzy subsemigroups
/// `family[y]` indexed by the semilattice `index`, over the host `s`:
///
/// 1. distinct members meet in the zero map;
/// 2. `family[y] . family[z]` lies below `family[y * z]`;
/// 3. every positive cut of every member is nonempty, and every pair
///    `(element, positive level)` is covered by some member.
///
/// Violated preconditions (index not a semilattice, member counts, chain or
/// host mismatches, members that are not fuzzy subsemigroups) are errors;
/// the three conditions themselves decide the returned boolean.
pub fn is_fuzzy_semilattice_family(
    s: &FiniteSemigroup,
    chain: ValueChain,
    index: &FiniteSemigroup,
    family: &[FuzzySubset],
) -> Result<bool> {
    if !index.is_semilattice() {
        return Err(Error::NotSemilattice);
    }
    if family.len() != index.order() {
        return Err(Error::FamilyMismatch {
            family: family.len(),
            index: index.order(),
        });
    }
    for (member, f) in family.iter().enumerate() {
        if f.chain != chain {
            return Err(Error::ChainMismatch {
                left: chain.resolution(),
                right: f.chain.resolution(),
            });
        }
        f.check_host(s)?;
        if !f.is_fuzzy_subsemigroup(s) {
            return Err(Error::FamilyMemberNotSubsemigroup { member });
        }
    }

    // 1: disjoint supports.
    for y in 0..family.len() {
        for z in y + 1..family.len() {
            let meet = family[y].meet(&family[z])?;
            if meet.values().iter().any(|&v| v > 0) {
                return Ok(false);
            }
        }
    }
    // 2: composites respect the index product.
    for (y, fy) in family.iter().enumerate() {
        for (z, fz) in family.iter().enumerate() {
            let composite = fy.composite(fz, s)?;
            if !composite.is_subset_of(&family[index.mul(y, z)])? {
                return Ok(false);
            }
        }
    }
    // 3: nonempty cuts and full coverage.
    for f in family {
        for t in chain.positive_levels() {
            if f.level_set(t)?.is_empty() {
                return Ok(false);
            }
        }
    }
    for a in s.elements() {
        for t in chain.positive_levels() {
            if !family.iter().any(|f| f.grade(a) >= t) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lz2() -> FiniteSemigroup {
        FiniteSemigroup::from_table(&[vec![0, 0], vec![1, 1]]).unwrap()
    }

    fn null2() -> FiniteSemigroup {
        FiniteSemigroup::from_table(&[vec![0, 0], vec![0, 0]]).unwrap()
    }

    fn chain2() -> FiniteSemigroup {
        FiniteSemigroup::from_table(&[vec![0, 0], vec![0, 1]]).unwrap()
    }

    fn subset(chain: usize, values: &[usize]) -> FuzzySubset {
        FuzzySubset::new(ValueChain::new(chain).unwrap(), values.to_vec()).unwrap()
    }

    #[test]
    fn grades_must_stay_on_the_chain() {
        let err = FuzzySubset::new(ValueChain::new(2).unwrap(), vec![3, 0]).unwrap_err();
        assert!(matches!(err, Error::LevelOutOfRange { level: 3, max: 2 }));
    }

    #[test]
    fn characteristic_takes_top_grade() {
        let chain = ValueChain::new(3).unwrap();
        let a = ElementSubset::from_indices(2, [1]).unwrap();
        let f = FuzzySubset::characteristic(&lz2(), a, chain);
        assert_eq!(f.values(), &[0, 3]);
    }

    #[test]
    fn composite_in_null_semigroup() {
        // Everything multiplies to 0, and 1 has no factorization.
        let chain = ValueChain::new(1).unwrap();
        let f = FuzzySubset::characteristic(&null2(), ElementSubset::singleton(0), chain);
        let fg = f.composite(&f, &null2()).unwrap();
        assert_eq!(fg.values(), &[1, 0]);
    }

    #[test]
    fn composite_in_left_zero_semigroup() {
        let f = subset(2, &[2, 1]);
        let g = FuzzySubset::constant(2, ValueChain::new(2).unwrap(), 2).unwrap();
        let fg = f.composite(&g, &lz2()).unwrap();
        assert_eq!(fg.values(), &[2, 1]);
    }

    #[test]
    fn mismatches_are_rejected() {
        let f = subset(2, &[0, 1]);
        let g = subset(3, &[0, 1]);
        assert!(matches!(f.meet(&g), Err(Error::ChainMismatch { .. })));
        let h = subset(2, &[0, 1, 2]);
        assert!(matches!(f.meet(&h), Err(Error::OrderMismatch { .. })));
        assert!(matches!(
            h.composite(&h, &lz2()),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn one_sided_fuzzy_ideals_differ() {
        let f = subset(2, &[2, 1]);
        assert!(f.is_fuzzy_right_ideal(&lz2()));
        assert!(!f.is_fuzzy_left_ideal(&lz2()));
        assert!(f.is_fuzzy_subsemigroup(&lz2()));
        assert!(f.is_fuzzy_quasi_ideal(&lz2()));
    }

    #[test]
    fn level_sets_and_bad_cuts() {
        let f = subset(3, &[3, 1, 0]);
        assert_eq!(
            f.level_set(1).unwrap(),
            ElementSubset::from_indices(3, [0, 1]).unwrap()
        );
        assert_eq!(f.level_set(2).unwrap(), ElementSubset::singleton(0));
        assert!(matches!(f.level_set(0), Err(Error::ZeroCutLevel)));
        assert!(matches!(
            f.level_set(4),
            Err(Error::LevelOutOfRange { level: 4, max: 3 })
        ));
    }

    #[test]
    fn left_simple_cuts() {
        let f = subset(2, &[2, 1]);
        assert!(f.is_left_simple_fuzzy_subsemigroup(&lz2()).unwrap());
        // With a zero grade the top cut stays nonempty but drops element 1;
        // the singleton {0} is still left simple, so push the failure via a
        // non-subsemigroup precondition instead.
        let g = subset(2, &[1, 2]);
        // In the chain semilattice, g(0) = g(1*0) must dominate min(g, g),
        // 1 >= 1 holds; cuts are {0, 1} and {1}; S*0 = {0} != S, not left
        // simple at level 1.
        assert!(!g.is_left_simple_fuzzy_subsemigroup(&chain2()).unwrap());
    }

    #[test]
    fn cut_checks_demand_fuzzy_subsemigroups() {
        // In the null semigroup f(1*1) = f(0) = 0 < f(1): not a fuzzy
        // subsemigroup.
        let f = subset(1, &[0, 1]);
        assert!(matches!(
            f.is_left_simple_fuzzy_subsemigroup(&null2()),
            Err(Error::NotFuzzySubsemigroup)
        ));
    }

    #[test]
    fn empty_cut_fails_left_simplicity() {
        let f = subset(2, &[1, 1]);
        // Fuzzy subsemigroup of LZ(2), but the level-2 cut is empty.
        assert!(f.is_fuzzy_subsemigroup(&lz2()));
        assert!(!f.is_left_simple_fuzzy_subsemigroup(&lz2()).unwrap());
    }

    #[test]
    fn characteristic_family_on_the_chain_semilattice() {
        let s = chain2();
        let chain = ValueChain::new(2).unwrap();
        let family = vec![
            FuzzySubset::characteristic(&s, ElementSubset::singleton(0), chain),
            FuzzySubset::characteristic(&s, ElementSubset::singleton(1), chain),
        ];
        assert!(is_fuzzy_semilattice_family(&s, chain, &s, &family).unwrap());
    }

    #[test]
    fn family_with_a_short_member_fails_coverage() {
        let s = chain2();
        let chain = ValueChain::new(2).unwrap();
        let family = vec![
            FuzzySubset::characteristic(&s, ElementSubset::singleton(0), chain),
            subset(2, &[0, 1]),
        ];
        // The second member never reaches grade 2, so its top cut is empty.
        assert!(!is_fuzzy_semilattice_family(&s, chain, &s, &family).unwrap());
    }

    #[test]
    fn family_preconditions_are_errors() {
        let s = chain2();
        let chain = ValueChain::new(2).unwrap();
        let family = vec![FuzzySubset::characteristic(&s, ElementSubset::singleton(0), chain)];
        // Index not a semilattice:
        let z2 = FiniteSemigroup::from_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(matches!(
            is_fuzzy_semilattice_family(&s, chain, &z2, &family),
            Err(Error::NotSemilattice)
        ));
        // Family length mismatch:
        assert!(matches!(
            is_fuzzy_semilattice_family(&s, chain, &s, &family),
            Err(Error::FamilyMismatch { family: 1, index: 2 })
        ));
    }

    #[test]
    fn enumeration_counts() {
        let trivial = FiniteSemigroup::from_table(&[vec![0]]).unwrap();
        let chain = ValueChain::new(1).unwrap();
        let all: Vec<FuzzySubset> =
            enumerate_fuzzy_subsets(&trivial, chain, FuzzyFilter::Subsemigroup, DEFAULT_FUZZY_BUDGET)
                .unwrap()
                .collect();
        assert_eq!(all.len(), 2);

        let chain = ValueChain::new(2).unwrap();
        let all: Vec<FuzzySubset> =
            enumerate_fuzzy_subsets(&lz2(), chain, FuzzyFilter::All, DEFAULT_FUZZY_BUDGET)
                .unwrap()
                .collect();
        assert_eq!(all.len(), 9);

        // Fuzzy left ideals of LZ(2) force f(a) >= f(b) for all pairs, so
        // only the constants survive; cross-checked by a direct scan.
        let chain = ValueChain::new(1).unwrap();
        let lefts: Vec<FuzzySubset> =
            enumerate_fuzzy_subsets(&lz2(), chain, FuzzyFilter::LeftIdeal, DEFAULT_FUZZY_BUDGET)
                .unwrap()
                .collect();
        let direct: Vec<Vec<usize>> = [[0, 0], [0, 1], [1, 0], [1, 1]]
            .iter()
            .filter(|v| {
                (0..2).all(|a| (0..2).all(|b| v[lz2().mul(a, b)] >= v[b]))
            })
            .map(|v| v.to_vec())
            .collect();
        assert_eq!(lefts.len(), direct.len());
        assert_eq!(lefts.len(), 2);
    }

    #[test]
    fn enumeration_budget() {
        let s = lz2();
        let chain = ValueChain::new(9).unwrap();
        assert!(matches!(
            enumerate_fuzzy_subsets(&s, chain, FuzzyFilter::All, 99),
            Err(Error::BudgetExceeded {
                assignments: 100,
                budget: 99
            })
        ));
    }

    #[test]
    fn text_round_trip() {
        let f = subset(2, &[2, 0]);
        assert_eq!(f.to_text(), "2; 2 0");
        assert_eq!(FuzzySubset::parse("2; 2 0").unwrap(), f);
        assert!(FuzzySubset::parse("2 2 0").is_err());
        assert!(FuzzySubset::parse("2; 3 0").is_err());
        assert!(FuzzySubset::parse("0; 0").is_err());
    }
}
