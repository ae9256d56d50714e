//! Finite semigroups as Cayley tables, subset algebra, and the structural
//! predicates the rest of the crate is built on.
//!
//! Elements are the indices `0..n-1`. The table is the single source of
//! truth: `table[a * n + b]` is the product `a * b`. Construction checks
//! associativity, so every value of [`FiniteSemigroup`] is a genuine
//! semigroup.

use std::fmt;

use crate::chain::ValueChain;
use crate::error::{Error, Result};

/// Largest supported order. Subsets are `u128` bit masks.
pub const MAX_ORDER: usize = 128;

/// Default cap on the order of semigroups whose subsets get enumerated
/// exhaustively; `2^n` blows up quickly.
pub const DEFAULT_ENUMERATION_BOUND: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>,
}

impl FiniteSemigroup {
    /// Builds a semigroup from table rows, rejecting non-square tables,
    /// out-of-range entries, and non-associative operations. The
    /// associativity error reports the first violating triple in
    /// lexicographic `(a, b, c)` order.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != order {
                return Err(Error::NonSquareTable {
                    row,
                    found: entries.len(),
                    expected: order,
                });
            }
        }
        let flat: Vec<usize> = rows.iter().flatten().copied().collect();
        Self::from_flat(order, flat)
    }

    /// Same as [`from_table`](Self::from_table) but takes the row-major
    /// flattened table.
    pub fn from_flat(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        if table.len() != order * order {
            return Err(Error::NonSquareTable {
                row: table.len() / order,
                found: table.len() % order,
                expected: order,
            });
        }
        for (i, &value) in table.iter().enumerate() {
            if value >= order {
                return Err(Error::EntryOutOfRange {
                    row: i / order,
                    col: i % order,
                    value,
                    order,
                });
            }
        }
        let s = FiniteSemigroup { order, table };
        s.check_associative()?;
        Ok(s)
    }

    /// Constructor for tables that are associative by construction
    /// (relabelings, direct products of semigroups, ...).
    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<usize>) -> Self {
        let s = FiniteSemigroup { order, table };
        debug_assert!(s.check_associative().is_ok());
        s
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    let left = self.mul(ab, c);
                    let right = self.mul(a, self.mul(b, c));
                    if left != right {
                        return Err(Error::NotAssociative {
                            a,
                            b,
                            c,
                            left,
                            right,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn universe(&self) -> ElementSubset {
        ElementSubset::universe(self.order)
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    // --- element-level structure -------------------------------------------

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Every element idempotent.
    pub fn is_band(&self) -> bool {
        self.elements().all(|a| self.mul(a, a) == a)
    }

    /// A commutative band.
    pub fn is_semilattice(&self) -> bool {
        self.is_band() && self.is_commutative()
    }

    pub fn idempotents(&self) -> ElementSubset {
        let mut set = ElementSubset::empty();
        for a in self.elements() {
            if self.mul(a, a) == a {
                set.insert(a);
            }
        }
        set
    }

    /// `a` is regular when `a = a*x*a` for some `x`.
    pub fn is_regular(&self) -> bool {
        self.elements()
            .all(|a| self.elements().any(|x| self.mul(self.mul(a, x), a) == a))
    }

    /// `a` is left regular when `a = x*a*a` for some `x`.
    pub fn is_left_regular(&self) -> bool {
        self.elements().all(|a| {
            let aa = self.mul(a, a);
            self.elements().any(|x| self.mul(x, aa) == a)
        })
    }

    /// Regular with a commuting witness: `a = a*x*a` and `a*x = x*a`.
    pub fn is_completely_regular(&self) -> bool {
        self.elements().all(|a| {
            self.elements()
                .any(|x| self.mul(self.mul(a, x), a) == a && self.mul(a, x) == self.mul(x, a))
        })
    }

    /// The only left ideal is the whole semigroup; equivalently `S*a = S`
    /// for every `a`.
    pub fn is_left_simple(&self) -> bool {
        self.elements().all(|a| {
            let mut reached = ElementSubset::empty();
            for s in self.elements() {
                reached.insert(self.mul(s, a));
            }
            reached == self.universe()
        })
    }

    /// The only two-sided ideal is the whole semigroup; checked via the
    /// ideal generated by each element.
    pub fn is_simple(&self) -> bool {
        self.elements().all(|a| {
            let mut reached = ElementSubset::empty();
            reached.insert(a);
            for s in self.elements() {
                reached.insert(self.mul(s, a));
                reached.insert(self.mul(a, s));
                for t in self.elements() {
                    reached.insert(self.mul(self.mul(s, a), t));
                }
            }
            reached == self.universe()
        })
    }

    /// Simple with at least one idempotent. For finite semigroups this
    /// matches the primitive-idempotent characterisation, which
    /// [`is_completely_simple_by_primitive`](Self::is_completely_simple_by_primitive)
    /// computes independently.
    pub fn is_completely_simple(&self) -> bool {
        self.is_simple() && !self.idempotents().is_empty()
    }

    /// Simple with a primitive idempotent: an idempotent `e` such that each
    /// idempotent `f` with `e*f = f*e = f` equals `e`.
    pub fn is_completely_simple_by_primitive(&self) -> bool {
        self.is_simple() && self.has_primitive_idempotent()
    }

    fn has_primitive_idempotent(&self) -> bool {
        let idems: Vec<usize> = self.idempotents().iter().collect();
        idems.iter().any(|&e| {
            idems
                .iter()
                .all(|&f| !(self.mul(e, f) == f && self.mul(f, e) == f) || f == e)
        })
    }

    // --- subset algebra ----------------------------------------------------

    fn require_in_range(&self, set: ElementSubset) {
        assert!(
            set.max_element().is_none_or(|m| m < self.order),
            "subset mentions elements outside 0..{}",
            self.order
        );
    }

    /// Elementwise product `{a*b : a in A, b in B}`.
    pub fn subset_product(&self, a: ElementSubset, b: ElementSubset) -> ElementSubset {
        self.require_in_range(a);
        self.require_in_range(b);
        let mut out = ElementSubset::empty();
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// `S*A` is contained in `A`. The empty subset is rejected: it signals a
    /// degenerate query, not a meaningful ideal.
    pub fn is_left_ideal(&self, a: ElementSubset) -> Result<bool> {
        if a.is_empty() {
            return Err(Error::EmptySubset);
        }
        self.require_in_range(a);
        Ok(self.subset_product(self.universe(), a).is_subset_of(a))
    }

    /// `A*S` is contained in `A`.
    pub fn is_right_ideal(&self, a: ElementSubset) -> Result<bool> {
        if a.is_empty() {
            return Err(Error::EmptySubset);
        }
        self.require_in_range(a);
        Ok(self.subset_product(a, self.universe()).is_subset_of(a))
    }

    pub fn is_ideal(&self, a: ElementSubset) -> Result<bool> {
        Ok(self.is_left_ideal(a)? && self.is_right_ideal(a)?)
    }

    /// `Q*S intersect S*Q` is contained in `Q`. No identity is adjoined:
    /// the translates are taken in `S` itself.
    pub fn is_quasi_ideal(&self, q: ElementSubset) -> Result<bool> {
        if q.is_empty() {
            return Err(Error::EmptySubset);
        }
        self.require_in_range(q);
        let qs = self.subset_product(q, self.universe());
        let sq = self.subset_product(self.universe(), q);
        Ok(qs.intersect(sq).is_subset_of(q))
    }

    pub fn is_subsemigroup(&self, a: ElementSubset) -> bool {
        self.require_in_range(a);
        self.subset_product(a, a).is_subset_of(a)
    }

    fn enumerated_subsets(&self, bound: usize) -> Result<impl Iterator<Item = ElementSubset>> {
        if self.order > bound {
            return Err(Error::EnumerationBound {
                order: self.order,
                bound,
            });
        }
        Ok(ElementSubset::nonempty_subsets(self.order))
    }

    /// All nonempty subsets closed under the product. `bound` guards the
    /// `2^n` scan.
    pub fn all_subsemigroups(&self, bound: usize) -> Result<Vec<ElementSubset>> {
        Ok(self
            .enumerated_subsets(bound)?
            .filter(|&a| self.is_subsemigroup(a))
            .collect())
    }

    pub fn all_left_ideals(&self, bound: usize) -> Result<Vec<ElementSubset>> {
        let sets: Vec<ElementSubset> = self.enumerated_subsets(bound)?.collect();
        let mut out = Vec::new();
        for a in sets {
            if self.is_left_ideal(a)? {
                out.push(a);
            }
        }
        Ok(out)
    }

    pub fn all_right_ideals(&self, bound: usize) -> Result<Vec<ElementSubset>> {
        let sets: Vec<ElementSubset> = self.enumerated_subsets(bound)?.collect();
        let mut out = Vec::new();
        for a in sets {
            if self.is_right_ideal(a)? {
                out.push(a);
            }
        }
        Ok(out)
    }

    pub fn all_quasi_ideals(&self, bound: usize) -> Result<Vec<ElementSubset>> {
        let sets: Vec<ElementSubset> = self.enumerated_subsets(bound)?.collect();
        let mut out = Vec::new();
        for q in sets {
            if self.is_quasi_ideal(q)? {
                out.push(q);
            }
        }
        Ok(out)
    }

    // --- derived semigroups ------------------------------------------------

    /// The sub-semigroup on a closed subset, with elements re-indexed in
    /// increasing order. Returns the restriction together with the map from
    /// new indices back to elements of `self`.
    pub fn restriction(&self, subset: ElementSubset) -> Result<(FiniteSemigroup, Vec<usize>)> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        self.require_in_range(subset);
        let elements: Vec<usize> = subset.iter().collect();
        let mut index_of = vec![usize::MAX; self.order];
        for (i, &e) in elements.iter().enumerate() {
            index_of[e] = i;
        }
        let m = elements.len();
        let mut table = vec![0usize; m * m];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                let p = self.mul(a, b);
                if !subset.contains(p) {
                    return Err(Error::NotClosed { a, b, product: p });
                }
                table[i * m + j] = index_of[p];
            }
        }
        Ok((FiniteSemigroup::from_flat_unchecked(m, table), elements))
    }

    /// The image under a bijective relabeling `perm` of `0..n-1`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteSemigroup {
        let n = self.order;
        assert_eq!(perm.len(), n, "permutation length mismatch");
        let mut table = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        FiniteSemigroup::from_flat_unchecked(n, table)
    }

    /// The opposite semigroup `a *' b = b * a`.
    pub fn opposite(&self) -> FiniteSemigroup {
        let n = self.order;
        let mut table = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.mul(b, a);
            }
        }
        FiniteSemigroup::from_flat_unchecked(n, table)
    }

    // --- text formats ------------------------------------------------------

    /// Multi-line text form: the order, then one row per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for a in self.elements() {
            let row: Vec<String> = self.elements().map(|b| self.mul(a, b).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Single-line form: the `n*n` entries separated by spaces.
    pub fn to_line(&self) -> String {
        let cells: Vec<String> = self.table.iter().map(|v| v.to_string()).collect();
        cells.join(" ")
    }

    /// Parses either the multi-line text form or a JSON array of rows.
    pub fn parse(input: &str) -> Result<Self> {
        let trimmed = input.trim_start();
        if trimmed.starts_with('[') {
            let rows: Vec<Vec<usize>> = serde_json::from_str(trimmed)
                .map_err(|e| Error::Parse(format!("bad JSON table: {e}")))?;
            return Self::from_table(&rows);
        }
        let mut lines = input.lines().filter(|l| !l.trim().is_empty());
        let first = lines.next().ok_or(Error::EmptyTable)?;
        let order: usize = first
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad order line {first:?}")))?;
        let mut rows = Vec::with_capacity(order);
        for _ in 0..order {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("table ends early".into()))?;
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse()
                        .map_err(|_| Error::Parse(format!("bad entry {tok:?}")))
                })
                .collect::<Result<_>>()?;
            rows.push(row);
        }
        Self::from_table(&rows)
    }
}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSemigroup(n={}, [{}])", self.order, self.to_line())
    }
}

impl fmt::Display for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A set of element indices of a semigroup of order at most [`MAX_ORDER`],
/// stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementSubset {
    bits: u128,
}

impl ElementSubset {
    pub fn empty() -> Self {
        ElementSubset { bits: 0 }
    }

    pub fn universe(order: usize) -> Self {
        assert!(order <= MAX_ORDER);
        if order == MAX_ORDER {
            ElementSubset { bits: u128::MAX }
        } else {
            ElementSubset {
                bits: (1u128 << order) - 1,
            }
        }
    }

    pub fn singleton(element: usize) -> Self {
        assert!(element < MAX_ORDER);
        ElementSubset {
            bits: 1u128 << element,
        }
    }

    /// Collects indices, rejecting any outside `0..order`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(order: usize, indices: I) -> Result<Self> {
        let mut set = ElementSubset::empty();
        for element in indices {
            if element >= order {
                return Err(Error::ElementOutOfRange { element, order });
            }
            set.insert(element);
        }
        Ok(set)
    }

    pub fn insert(&mut self, element: usize) {
        assert!(element < MAX_ORDER);
        self.bits |= 1u128 << element;
    }

    pub fn contains(&self, element: usize) -> bool {
        element < MAX_ORDER && self.bits >> element & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_subset_of(&self, other: ElementSubset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn intersect(&self, other: ElementSubset) -> ElementSubset {
        ElementSubset {
            bits: self.bits & other.bits,
        }
    }

    pub fn union(&self, other: ElementSubset) -> ElementSubset {
        ElementSubset {
            bits: self.bits | other.bits,
        }
    }

    pub fn max_element(&self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(127 - self.bits.leading_zeros() as usize)
        }
    }

    /// Indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_ORDER).filter(move |&i| self.contains(i))
    }

    /// All `2^order - 1` nonempty subsets, in mask order.
    pub fn nonempty_subsets(order: usize) -> impl Iterator<Item = ElementSubset> {
        assert!(order <= 32, "subset enumeration is capped well below this");
        (1u128..(1u128 << order)).map(|bits| ElementSubset { bits })
    }
}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

/// The direct product of a semigroup with a chain of levels under `min`,
/// keeping track of how pairs `(element, level)` map to indices.
///
/// With `include_zero` the level component runs over `0..=k`; without it
/// only the nonzero levels `1..=k` appear.
#[derive(Clone, Debug)]
pub struct ChainProduct {
    semigroup: FiniteSemigroup,
    base_order: usize,
    chain: ValueChain,
    include_zero: bool,
}

impl ChainProduct {
    pub fn new(base: &FiniteSemigroup, chain: ValueChain, include_zero: bool) -> Result<Self> {
        let levels = if include_zero {
            chain.resolution() + 1
        } else {
            chain.resolution()
        };
        let order = base.order() * levels;
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        let lowest = usize::from(!include_zero);
        let n = base.order();
        let mut table = vec![0usize; order * order];
        for a in 0..n {
            for x in lowest..=chain.resolution() {
                for b in 0..n {
                    for y in lowest..=chain.resolution() {
                        let i = (a * levels) + (x - lowest);
                        let j = (b * levels) + (y - lowest);
                        let p = (base.mul(a, b) * levels) + (chain.meet(x, y) - lowest);
                        table[i * order + j] = p;
                    }
                }
            }
        }
        // Product of two semigroups; still routed through validation.
        let semigroup = FiniteSemigroup::from_flat(order, table)?;
        Ok(ChainProduct {
            semigroup,
            base_order: n,
            chain,
            include_zero,
        })
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn chain(&self) -> ValueChain {
        self.chain
    }

    pub fn includes_zero(&self) -> bool {
        self.include_zero
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    fn levels(&self) -> usize {
        if self.include_zero {
            self.chain.resolution() + 1
        } else {
            self.chain.resolution()
        }
    }

    /// The product index of `(element, level)`, if the level is present.
    pub fn index_of(&self, element: usize, level: usize) -> Option<usize> {
        if element >= self.base_order || !self.chain.contains(level) {
            return None;
        }
        if !self.include_zero && level == 0 {
            return None;
        }
        let lowest = usize::from(!self.include_zero);
        Some(element * self.levels() + (level - lowest))
    }

    /// The pair `(element, level)` at a product index.
    pub fn pair_at(&self, index: usize) -> (usize, usize) {
        assert!(index < self.semigroup.order());
        let lowest = usize::from(!self.include_zero);
        (index / self.levels(), index % self.levels() + lowest)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lz2() -> FiniteSemigroup {
        FiniteSemigroup::from_table(&[vec![0, 0], vec![1, 1]]).unwrap()
    }

    fn rz2() -> FiniteSemigroup {
        FiniteSemigroup::from_table(&[vec![0, 1], vec![0, 1]]).unwrap()
    }

    fn null2() -> FiniteSemigroup {
        FiniteSemigroup::from_table(&[vec![0, 0], vec![0, 0]]).unwrap()
    }

    fn z2() -> FiniteSemigroup {
        FiniteSemigroup::from_table(&[vec![0, 1], vec![1, 0]]).unwrap()
    }

    fn chain2() -> FiniteSemigroup {
        FiniteSemigroup::from_table(&[vec![0, 0], vec![0, 1]]).unwrap()
    }

    fn set(order: usize, elems: &[usize]) -> ElementSubset {
        ElementSubset::from_indices(order, elems.iter().copied()).unwrap()
    }

    #[test]
    fn accepts_left_zero_table() {
        let s = lz2();
        assert_eq!(s.order(), 2);
        assert_eq!(s.mul(0, 1), 0);
        assert_eq!(s.mul(1, 0), 1);
    }

    #[test]
    fn reports_first_violating_triple() {
        let err = FiniteSemigroup::from_table(&[vec![1, 0], vec![0, 0]]).unwrap_err();
        match err {
            Error::NotAssociative { a, b, c, .. } => assert_eq!((a, b, c), (0, 0, 1)),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_out_of_range_entries() {
        let err = FiniteSemigroup::from_table(&[vec![0, 2], vec![0, 0]]).unwrap_err();
        assert!(matches!(err, Error::EntryOutOfRange { value: 2, .. }));
    }

    #[test]
    fn rejects_ragged_tables() {
        let err = FiniteSemigroup::from_table(&[vec![0, 0], vec![0]]).unwrap_err();
        assert!(matches!(err, Error::NonSquareTable { row: 1, .. }));
    }

    #[test]
    fn subset_products() {
        let s = lz2();
        let p = s.subset_product(set(2, &[0]), set(2, &[1]));
        assert_eq!(p, set(2, &[0]));
        let n = null2();
        assert_eq!(n.subset_product(set(2, &[1]), set(2, &[1])), set(2, &[0]));
    }

    #[test]
    fn null_semigroup_ideals() {
        let s = null2();
        let zero = set(2, &[0]);
        assert!(s.is_left_ideal(zero).unwrap());
        assert!(s.is_right_ideal(zero).unwrap());
        assert!(s.is_ideal(zero).unwrap());
    }

    #[test]
    fn left_zero_one_sided_ideals() {
        let s = lz2();
        let zero = set(2, &[0]);
        assert!(!s.is_left_ideal(zero).unwrap());
        assert!(s.is_right_ideal(zero).unwrap());
        assert!(s.is_quasi_ideal(zero).unwrap());
    }

    #[test]
    fn empty_subset_is_rejected() {
        let s = lz2();
        assert!(matches!(
            s.is_left_ideal(ElementSubset::empty()),
            Err(Error::EmptySubset)
        ));
        assert!(matches!(
            s.is_quasi_ideal(ElementSubset::empty()),
            Err(Error::EmptySubset)
        ));
    }

    #[test]
    fn all_left_ideals_of_small_semigroups() {
        let lz = lz2();
        assert_eq!(
            lz.all_left_ideals(DEFAULT_ENUMERATION_BOUND).unwrap(),
            vec![set(2, &[0, 1])]
        );
        let rz = rz2();
        assert_eq!(
            rz.all_left_ideals(DEFAULT_ENUMERATION_BOUND).unwrap().len(),
            3
        );
        let n = null2();
        assert_eq!(
            n.all_left_ideals(DEFAULT_ENUMERATION_BOUND).unwrap(),
            vec![set(2, &[0]), set(2, &[0, 1])]
        );
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let s = lz2();
        assert!(matches!(
            s.all_left_ideals(1),
            Err(Error::EnumerationBound { order: 2, bound: 1 })
        ));
    }

    #[test]
    fn regularity_predicates() {
        for s in [z2(), lz2()] {
            assert!(s.is_regular());
            assert!(s.is_left_regular());
            assert!(s.is_completely_regular());
        }
        let n = null2();
        assert!(!n.is_regular());
        assert!(!n.is_left_regular());
        assert!(!n.is_completely_regular());
    }

    #[test]
    fn simplicity_predicates() {
        assert!(lz2().is_left_simple());
        assert!(!rz2().is_left_simple());
        assert!(z2().is_left_simple());
        assert!(lz2().is_simple());
        assert!(!null2().is_simple());
        assert!(!chain2().is_simple());
    }

    #[test]
    fn rectangular_band_is_completely_simple() {
        // 2x2 rectangular band: (i, j) * (k, l) = (i, l).
        let rb = FiniteSemigroup::from_table(&[
            vec![0, 1, 0, 1],
            vec![0, 1, 0, 1],
            vec![2, 3, 2, 3],
            vec![2, 3, 2, 3],
        ])
        .unwrap();
        assert!(rb.is_simple());
        assert!(rb.is_completely_simple());
        assert!(rb.is_completely_simple_by_primitive());
        assert!(!rb.is_left_simple());
    }

    #[test]
    fn primitive_route_matches_direct_route() {
        for s in [lz2(), rz2(), null2(), z2(), chain2()] {
            assert_eq!(
                s.is_completely_simple(),
                s.is_completely_simple_by_primitive()
            );
        }
    }

    #[test]
    fn idempotent_sets() {
        assert_eq!(lz2().idempotents(), set(2, &[0, 1]));
        assert_eq!(z2().idempotents(), set(2, &[0]));
        assert_eq!(null2().idempotents(), set(2, &[0]));
    }

    #[test]
    fn restriction_reindexes() {
        let s = chain2();
        let (sub, elems) = s.restriction(set(2, &[1])).unwrap();
        assert_eq!(sub.order(), 1);
        assert_eq!(elems, vec![1]);
        let err = lz2().restriction(ElementSubset::empty()).unwrap_err();
        assert!(matches!(err, Error::EmptySubset));
        // {1} is not closed in the null semigroup: 1*1 = 0.
        let err = null2().restriction(set(2, &[1])).unwrap_err();
        assert!(matches!(err, Error::NotClosed { product: 0, .. }));
    }

    #[test]
    fn relabel_and_opposite() {
        let s = lz2();
        let relabeled = s.relabel(&[1, 0]);
        assert_eq!(relabeled, lz2());
        assert_eq!(s.opposite(), rz2());
    }

    #[test]
    fn chain_product_with_zero_level() {
        let trivial = FiniteSemigroup::from_table(&[vec![0]]).unwrap();
        let chain = ValueChain::new(1).unwrap();
        let product = ChainProduct::new(&trivial, chain, true).unwrap();
        // Two levels under min: a two-element chain semilattice.
        assert_eq!(product.semigroup().order(), 2);
        assert!(product.semigroup().is_semilattice());
        assert_eq!(product.index_of(0, 1), Some(1));
        assert_eq!(product.pair_at(0), (0, 0));
    }

    #[test]
    fn chain_product_multiplies_componentwise() {
        let chain = ValueChain::new(2).unwrap();
        let product = ChainProduct::new(&lz2(), chain, true).unwrap();
        assert_eq!(product.semigroup().order(), 6);
        let i = product.index_of(0, 2).unwrap();
        let j = product.index_of(1, 1).unwrap();
        let p = product.semigroup().mul(i, j);
        assert_eq!(product.pair_at(p), (0, 1));
    }

    #[test]
    fn chain_product_without_zero_level() {
        let chain = ValueChain::new(2).unwrap();
        let product = ChainProduct::new(&lz2(), chain, false).unwrap();
        assert_eq!(product.semigroup().order(), 4);
        assert_eq!(product.index_of(0, 0), None);
        assert_eq!(product.index_of(1, 2), Some(3));
        assert_eq!(product.pair_at(3), (1, 2));
    }

    #[test]
    fn text_round_trip() {
        let s = rz2();
        let text = s.to_text();
        assert_eq!(text, "2\n0 1\n0 1\n");
        assert_eq!(FiniteSemigroup::parse(&text).unwrap(), s);
        let json = "[[0, 1], [0, 1]]";
        assert_eq!(FiniteSemigroup::parse(json).unwrap(), s);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(FiniteSemigroup::parse("").is_err());
        assert!(FiniteSemigroup::parse("2\n0 1\n").is_err());
        assert!(FiniteSemigroup::parse("[[0, 9], [0, 1]]").is_err());
    }

    #[test]
    fn subset_display_is_sorted() {
        assert_eq!(set(3, &[2, 0]).to_string(), "{0, 2}");
        assert_eq!(ElementSubset::empty().to_string(), "{}");
    }
}
