//! The passage between fuzzy subsets of `S` and regions of the product of
//! `S` with a chain of levels.
//!
//! A fuzzy subset `f` determines the region under its graph: all pairs
//! `(b, y)` with `y <= f(b)`. Such regions are recognized intrinsically by
//! three structural conditions (full projection onto `S`, attained fiber
//! maxima, downward-closed fibers) combined with a closure requirement in
//! the product semigroup: a subsemigroup for plain fuzzy subsemigroups, a
//! left or right ideal for fuzzy one-sided ideals, and a quasi-ideal plus a
//! factorization-dominance condition for fuzzy quasi-ideals. In the other
//! direction every subsemigroup of the product yields a fuzzy subsemigroup
//! through its fiber maxima. [`verify_bijections`] checks exhaustively that
//! the two passages are mutually inverse.

use std::collections::BTreeSet;

use crate::chain::ValueChain;
use crate::congruence::Decomposition;
use crate::error::{Error, Result};
use crate::fuzzy::{enumerate_fuzzy_subsets, FuzzyFilter, FuzzySubset};
use crate::semigroup::{ChainProduct, ElementSubset, FiniteSemigroup};

/// A set of `(element, level)` pairs over a fixed chain.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductRegion {
    chain: ValueChain,
    pairs: BTreeSet<(usize, usize)>,
}

impl ProductRegion {
    /// Collects pairs, rejecting elements outside `0..order` and levels
    /// outside the chain.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(
        chain: ValueChain,
        order: usize,
        pairs: I,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (element, level) in pairs {
            if element >= order {
                return Err(Error::ElementOutOfRange { element, order });
            }
            if !chain.contains(level) {
                return Err(Error::LevelOutOfRange {
                    level,
                    max: chain.top(),
                });
            }
            set.insert((element, level));
        }
        Ok(ProductRegion { chain, pairs: set })
    }

    pub fn chain(&self) -> ValueChain {
        self.chain
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, element: usize, level: usize) -> bool {
        self.pairs.contains(&(element, level))
    }

    /// The levels paired with `element`.
    pub fn fiber(&self, element: usize) -> impl Iterator<Item = usize> + '_ {
        self.pairs
            .range((element, 0)..=(element, usize::MAX))
            .map(|&(_, level)| level)
    }

    /// The greatest level paired with `element`, if any.
    pub fn fiber_max(&self, element: usize) -> Option<usize> {
        self.fiber(element).max()
    }

    /// Space-separated `(element,level)` pairs in sorted order.
    pub fn to_text(&self) -> String {
        let pairs: Vec<String> = self
            .pairs
            .iter()
            .map(|(e, l)| format!("({e},{l})"))
            .collect();
        pairs.join(" ")
    }

    /// Parses the [`to_text`](Self::to_text) form; parentheses are
    /// optional.
    pub fn parse(chain: ValueChain, order: usize, input: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for token in input.split_whitespace() {
            let bare = token.trim_matches(|c| c == '(' || c == ')');
            if bare.is_empty() {
                continue;
            }
            let (e, l) = bare
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad pair {token:?}")))?;
            let element = e
                .parse()
                .map_err(|_| Error::Parse(format!("bad element {e:?}")))?;
            let level = l
                .parse()
                .map_err(|_| Error::Parse(format!("bad level {l:?}")))?;
            pairs.push((element, level));
        }
        Self::new(chain, order, pairs)
    }

    /// The region as a subset of the full chain product (zero level
    /// included); `None` when a pair does not map.
    fn to_subset(&self, product: &ChainProduct) -> Option<ElementSubset> {
        let mut out = ElementSubset::empty();
        for &(element, level) in &self.pairs {
            out.insert(product.index_of(element, level)?);
        }
        Some(out)
    }
}

impl std::fmt::Debug for ProductRegion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ProductRegion[{}]", self.to_text())
    }
}

/// The region under the graph of `f`: all `(b, y)` with `y <= f(b)`.
pub fn graph_region(f: &FuzzySubset) -> ProductRegion {
    let mut pairs = BTreeSet::new();
    for (b, &grade) in f.values().iter().enumerate() {
        for y in 0..=grade {
            pairs.insert((b, y));
        }
    }
    ProductRegion {
        chain: f.chain(),
        pairs,
    }
}

/// The three structural conditions shared by every recognized region:
/// every element of the base carries a nonempty fiber, each fiber attains
/// its supremum, and fibers are downward closed.
fn structural_conditions(region: &ProductRegion, base_order: usize) -> bool {
    for a in 0..base_order {
        let fiber: Vec<usize> = region.fiber(a).collect();
        let Some(&max) = fiber.iter().max() else {
            // Empty fiber: the projection misses `a`.
            return false;
        };
        if !region.contains(a, max) {
            return false;
        }
        // Downward closure: the fiber is exactly {0, ..., max}.
        if fiber.len() != max + 1 {
            return false;
        }
    }
    true
}

/// Fiber maxima dominate factorizations: whenever `a = b*c` has solutions,
/// the maximum at `a` bounds all the `b`-side maxima or all the `c`-side
/// maxima. Fuzzy quasi-ideals have this property through their graph
/// regions.
pub fn factorization_dominance(s: &FiniteSemigroup, region: &ProductRegion) -> bool {
    let sigma: Vec<usize> = s
        .elements()
        .map(|a| region.fiber_max(a).unwrap_or(0))
        .collect();
    for a in s.elements() {
        let mut left_ok = true;
        let mut right_ok = true;
        let mut factored = false;
        for b in s.elements() {
            for c in s.elements() {
                if s.mul(b, c) != a {
                    continue;
                }
                factored = true;
                left_ok &= sigma[b] <= sigma[a];
                right_ok &= sigma[c] <= sigma[a];
            }
        }
        if factored && !left_ok && !right_ok {
            return false;
        }
    }
    true
}

fn full_product(s: &FiniteSemigroup, chain: ValueChain) -> Result<ChainProduct> {
    ChainProduct::new(s, chain, true)
}

fn closure_holds(
    product: &ChainProduct,
    region: &ProductRegion,
    closure: Closure,
) -> bool {
    let Some(subset) = region.to_subset(product) else {
        return false;
    };
    if subset.is_empty() {
        return false;
    }
    let s = product.semigroup();
    match closure {
        Closure::Subsemigroup => s.is_subsemigroup(subset),
        Closure::LeftIdeal => s.is_left_ideal(subset).unwrap_or(false),
        Closure::RightIdeal => s.is_right_ideal(subset).unwrap_or(false),
        Closure::QuasiIdeal => s.is_quasi_ideal(subset).unwrap_or(false),
    }
}

#[derive(Clone, Copy)]
enum Closure {
    Subsemigroup,
    LeftIdeal,
    RightIdeal,
    QuasiIdeal,
}

fn conditions_with(
    s: &FiniteSemigroup,
    product: &ChainProduct,
    region: &ProductRegion,
    closure: Closure,
) -> bool {
    if !closure_holds(product, region, closure) {
        return false;
    }
    if !structural_conditions(region, s.order()) {
        return false;
    }
    match closure {
        Closure::QuasiIdeal => factorization_dominance(s, region),
        _ => true,
    }
}

/// The region is a subsemigroup of the chain product and satisfies the
/// structural conditions.
pub fn satisfies_subsemigroup_conditions(
    s: &FiniteSemigroup,
    region: &ProductRegion,
) -> Result<bool> {
    let product = full_product(s, region.chain())?;
    Ok(conditions_with(s, &product, region, Closure::Subsemigroup))
}

/// As above with the closure strengthened to a left ideal of the product.
pub fn satisfies_left_ideal_conditions(
    s: &FiniteSemigroup,
    region: &ProductRegion,
) -> Result<bool> {
    let product = full_product(s, region.chain())?;
    Ok(conditions_with(s, &product, region, Closure::LeftIdeal))
}

/// As above with a right ideal closure.
pub fn satisfies_right_ideal_conditions(
    s: &FiniteSemigroup,
    region: &ProductRegion,
) -> Result<bool> {
    let product = full_product(s, region.chain())?;
    Ok(conditions_with(s, &product, region, Closure::RightIdeal))
}

/// Quasi-ideal closure in the product plus factorization dominance of the
/// fiber maxima.
pub fn satisfies_quasi_ideal_conditions(
    s: &FiniteSemigroup,
    region: &ProductRegion,
) -> Result<bool> {
    let product = full_product(s, region.chain())?;
    Ok(conditions_with(s, &product, region, Closure::QuasiIdeal))
}

/// Collapses a region to the fuzzy subset of its fiber maxima, with `0` on
/// elements outside the projection.
///
/// The region must be a subsemigroup of the chain product (the structural
/// conditions are not required). The result is always a fuzzy
/// subsemigroup containing the region under its graph; both facts are
/// asserted.
pub fn region_to_fuzzy(s: &FiniteSemigroup, region: &ProductRegion) -> Result<FuzzySubset> {
    let product = full_product(s, region.chain())?;
    let subset = region
        .to_subset(&product)
        .ok_or_else(|| match region.pairs.iter().find(|&&(e, _)| e >= s.order()) {
            Some(&(element, _)) => Error::ElementOutOfRange {
                element,
                order: s.order(),
            },
            None => Error::RegionNotSubsemigroup,
        })?;
    if !product.semigroup().is_subsemigroup(subset) {
        return Err(Error::RegionNotSubsemigroup);
    }
    let values: Vec<usize> = s
        .elements()
        .map(|a| region.fiber_max(a).unwrap_or(0))
        .collect();
    let sigma = FuzzySubset::new(region.chain(), values)?;
    assert!(
        sigma.is_fuzzy_subsemigroup(s),
        "fiber maxima of a product subsemigroup must form a fuzzy subsemigroup"
    );
    assert!(
        region
            .pairs
            .iter()
            .all(|&(b, y)| y <= sigma.grade(b)),
        "a region must sit below the graph of its fiber maxima"
    );
    Ok(sigma)
}

/// One family's worth of round-trip evidence.
#[derive(Clone, Debug)]
pub struct BijectionFamilyReport {
    pub family: &'static str,
    pub fuzzy_count: usize,
    pub region_count: usize,
    pub ok: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct BijectionReport {
    pub families: Vec<BijectionFamilyReport>,
}

impl BijectionReport {
    pub fn all_ok(&self) -> bool {
        self.families.iter().all(|f| f.ok)
    }
}

/// Exhaustively verifies, for each of the four families, that the graph
/// passage is a bijection onto the regions satisfying the matching
/// condition system, with the fiber-maxima passage as its inverse.
///
/// Candidate regions are generated from all `(k+1)^n` fiber-maximum
/// vectors; the structural conditions make every qualifying region of this
/// shape, so that sweep is exhaustive on the region side.
pub fn verify_bijections(
    s: &FiniteSemigroup,
    chain: ValueChain,
    budget: u128,
) -> Result<BijectionReport> {
    let product = full_product(s, chain)?;
    let families: [(&'static str, FuzzyFilter, Closure); 4] = [
        ("subsemigroups", FuzzyFilter::Subsemigroup, Closure::Subsemigroup),
        ("left_ideals", FuzzyFilter::LeftIdeal, Closure::LeftIdeal),
        ("right_ideals", FuzzyFilter::RightIdeal, Closure::RightIdeal),
        ("quasi_ideals", FuzzyFilter::QuasiIdeal, Closure::QuasiIdeal),
    ];
    let mut out = Vec::new();
    for (name, filter, closure) in families {
        let mut ok = true;
        let mut witness = None;
        let fail = |msg: String, ok: &mut bool, witness: &mut Option<String>| {
            if witness.is_none() {
                *witness = Some(msg);
            }
            *ok = false;
        };

        // Fuzzy side: every member maps to a qualifying region and returns
        // unchanged through the fiber maxima.
        let members: Vec<FuzzySubset> = enumerate_fuzzy_subsets(s, chain, filter, budget)?.collect();
        let mut images = BTreeSet::new();
        for f in &members {
            let region = graph_region(f);
            if !conditions_with(s, &product, &region, closure) {
                fail(
                    format!("graph of {} misses the {name} conditions", f.to_text()),
                    &mut ok,
                    &mut witness,
                );
            }
            match region_to_fuzzy(s, &region) {
                Ok(back) if &back == f => {}
                Ok(back) => fail(
                    format!("{} returned as {}", f.to_text(), back.to_text()),
                    &mut ok,
                    &mut witness,
                ),
                Err(e) => fail(
                    format!("graph of {} did not collapse: {e}", f.to_text()),
                    &mut ok,
                    &mut witness,
                ),
            }
            images.insert(region);
        }
        if images.len() != members.len() {
            fail(
                format!(
                    "graphs of {} members collide into {} regions",
                    members.len(),
                    images.len()
                ),
                &mut ok,
                &mut witness,
            );
        }

        // Region side: sweep all fiber-maximum vectors.
        let mut region_count = 0usize;
        for v in enumerate_fuzzy_subsets(s, chain, FuzzyFilter::All, budget)? {
            let region = graph_region(&v);
            if !conditions_with(s, &product, &region, closure) {
                continue;
            }
            region_count += 1;
            match region_to_fuzzy(s, &region) {
                Ok(sigma) => {
                    if !filter_admits(filter, &sigma, s) {
                        fail(
                            format!(
                                "region [{}] collapses outside the family: {}",
                                region.to_text(),
                                sigma.to_text()
                            ),
                            &mut ok,
                            &mut witness,
                        );
                    }
                    if graph_region(&sigma) != region {
                        fail(
                            format!("region [{}] does not round-trip", region.to_text()),
                            &mut ok,
                            &mut witness,
                        );
                    }
                }
                Err(e) => fail(
                    format!("region [{}] did not collapse: {e}", region.to_text()),
                    &mut ok,
                    &mut witness,
                ),
            }
        }
        if region_count != members.len() {
            fail(
                format!(
                    "{} fuzzy members vs {} qualifying regions",
                    members.len(),
                    region_count
                ),
                &mut ok,
                &mut witness,
            );
        }
        out.push(BijectionFamilyReport {
            family: name,
            fuzzy_count: members.len(),
            region_count,
            ok,
            witness,
        });
    }
    Ok(BijectionReport { families: out })
}

fn filter_admits(filter: FuzzyFilter, f: &FuzzySubset, s: &FiniteSemigroup) -> bool {
    match filter {
        FuzzyFilter::All => true,
        FuzzyFilter::Subsemigroup => f.is_fuzzy_subsemigroup(s),
        FuzzyFilter::LeftIdeal => f.is_fuzzy_left_ideal(s),
        FuzzyFilter::RightIdeal => f.is_fuzzy_right_ideal(s),
        FuzzyFilter::QuasiIdeal => f.is_fuzzy_quasi_ideal(s),
    }
}

/// One slice of a fuzzy semilattice family: the cut of member `y` at level
/// `t`, placed on the level-`t` floor of the zero-free chain product.
#[derive(Clone, Debug)]
pub struct LevelComponent {
    /// `(index element, level)`.
    pub index_pair: (usize, usize),
    /// Pairs `(element, t)` of the zero-free product.
    pub carrier: Vec<(usize, usize)>,
}

/// The semilattice decomposition of the zero-free chain product induced by
/// a fuzzy semilattice family.
#[derive(Clone, Debug)]
pub struct LevelDecomposition {
    pub components: Vec<LevelComponent>,
    pub product: ChainProduct,
    pub decomposition: Decomposition,
}

/// Slices a fuzzy semilattice family into level components and verifies
/// that they decompose the zero-free chain product over the index
/// semilattice paired with the positive levels under `min`.
///
/// The family must pass [`is_fuzzy_semilattice_family`]; any failure of the
/// resulting components to decompose the product is reported as a theorem
/// violation.
///
/// [`is_fuzzy_semilattice_family`]: crate::fuzzy::is_fuzzy_semilattice_family
pub fn level_components(
    s: &FiniteSemigroup,
    chain: ValueChain,
    index: &FiniteSemigroup,
    family: &[FuzzySubset],
) -> Result<LevelDecomposition> {
    if !crate::fuzzy::is_fuzzy_semilattice_family(s, chain, index, family)? {
        return Err(Error::NotSemilatticeFamily);
    }
    let product = ChainProduct::new(s, chain, false)?;
    let index_product = ChainProduct::new(index, chain, false)?;

    let mut components = Vec::new();
    let mut blocks = vec![ElementSubset::empty(); index_product.semigroup().order()];
    for y in index.elements() {
        for t in chain.positive_levels() {
            let cut = family[y].level_set(t)?;
            let carrier: Vec<(usize, usize)> = cut.iter().map(|a| (a, t)).collect();
            let block_index = index_product
                .index_of(y, t)
                .expect("positive levels index the zero-free product");
            let mut block = ElementSubset::empty();
            for &(a, level) in &carrier {
                block.insert(
                    product
                        .index_of(a, level)
                        .expect("positive levels index the zero-free product"),
                );
            }
            blocks[block_index] = block;
            components.push(LevelComponent {
                index_pair: (y, t),
                carrier,
            });
        }
    }
    let decomposition = Decomposition::new(
        product.semigroup(),
        index_product.semigroup().clone(),
        blocks,
    )?;
    Ok(LevelDecomposition {
        components,
        product,
        decomposition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::DEFAULT_FUZZY_BUDGET;

    fn lz2() -> FiniteSemigroup {
        FiniteSemigroup::from_table(&[vec![0, 0], vec![1, 1]]).unwrap()
    }

    fn z2() -> FiniteSemigroup {
        FiniteSemigroup::from_table(&[vec![0, 1], vec![1, 0]]).unwrap()
    }

    fn chain2() -> FiniteSemigroup {
        FiniteSemigroup::from_table(&[vec![0, 0], vec![0, 1]]).unwrap()
    }

    fn k(resolution: usize) -> ValueChain {
        ValueChain::new(resolution).unwrap()
    }

    fn fuzzy(resolution: usize, values: &[usize]) -> FuzzySubset {
        FuzzySubset::new(k(resolution), values.to_vec()).unwrap()
    }

    #[test]
    fn graph_region_lists_all_pairs_below_the_graph() {
        let region = graph_region(&fuzzy(2, &[2, 1]));
        let pairs: Vec<(usize, usize)> = region.pairs().collect();
        assert_eq!(pairs, vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)]);
        assert_eq!(region.fiber_max(0), Some(2));
        assert_eq!(region.fiber_max(1), Some(1));
    }

    #[test]
    fn partial_projection_fails_the_conditions() {
        let region = ProductRegion::new(k(2), 2, [(0, 1)]).unwrap();
        // {(0,1)} is closed under the product but projects onto {0} only.
        assert!(!satisfies_subsemigroup_conditions(&lz2(), &region).unwrap());
    }

    #[test]
    fn graph_regions_satisfy_their_conditions() {
        let s = lz2();
        let f = fuzzy(2, &[2, 1]);
        let region = graph_region(&f);
        assert!(satisfies_subsemigroup_conditions(&s, &region).unwrap());
        assert!(satisfies_right_ideal_conditions(&s, &region).unwrap());
        // f is not a fuzzy left ideal of LZ(2).
        assert!(!satisfies_left_ideal_conditions(&s, &region).unwrap());
        assert!(satisfies_quasi_ideal_conditions(&s, &region).unwrap());
    }

    #[test]
    fn dominance_rejects_spiking_fibers() {
        // In Z2 the element 0 factors as 1*1, so a region whose fiber
        // maxima are 0 at 0 and 1 at 1 breaks dominance.
        let region = ProductRegion::new(k(1), 2, [(0, 0), (1, 0), (1, 1)]).unwrap();
        assert!(!factorization_dominance(&z2(), &region));
        assert!(!satisfies_quasi_ideal_conditions(&z2(), &region).unwrap());
    }

    #[test]
    fn fiber_collapse_and_strict_containment() {
        let s = lz2();
        let region = ProductRegion::new(k(2), 2, [(0, 1)]).unwrap();
        let sigma = region_to_fuzzy(&s, &region).unwrap();
        assert_eq!(sigma.values(), &[1, 0]);
        // The graph of sigma strictly contains the region.
        let graph = graph_region(&sigma);
        assert!(region.pairs().all(|(e, l)| graph.contains(e, l)));
        assert!(graph.len() > region.len());
    }

    #[test]
    fn collapse_requires_a_closed_region() {
        // {(1,1)} in Z2 x chain squares to (0,1), which is missing.
        let region = ProductRegion::new(k(1), 2, [(1, 1)]).unwrap();
        assert!(matches!(
            region_to_fuzzy(&z2(), &region),
            Err(Error::RegionNotSubsemigroup)
        ));
    }

    #[test]
    fn bijections_on_the_trivial_semigroup() {
        let trivial = FiniteSemigroup::from_table(&[vec![0]]).unwrap();
        let report = verify_bijections(&trivial, k(1), DEFAULT_FUZZY_BUDGET).unwrap();
        assert!(report.all_ok());
        for family in &report.families {
            assert_eq!(family.fuzzy_count, 2);
            assert_eq!(family.region_count, 2);
        }
    }

    #[test]
    fn bijections_on_small_semigroups() {
        for s in [lz2(), z2(), chain2()] {
            for resolution in [1, 2] {
                let report = verify_bijections(&s, k(resolution), DEFAULT_FUZZY_BUDGET).unwrap();
                assert!(report.all_ok(), "{s:?} at k={resolution}: {report:?}");
            }
        }
    }

    #[test]
    fn level_components_of_the_chain_family() {
        let s = chain2();
        let chain = k(1);
        let family = vec![
            FuzzySubset::characteristic(&s, ElementSubset::singleton(0), chain),
            FuzzySubset::characteristic(&s, ElementSubset::singleton(1), chain),
        ];
        let level = level_components(&s, chain, &s, &family).unwrap();
        assert_eq!(level.components.len(), 2);
        assert_eq!(level.components[0].index_pair, (0, 1));
        assert_eq!(level.components[0].carrier, vec![(0, 1)]);
        assert_eq!(level.components[1].carrier, vec![(1, 1)]);
        assert_eq!(level.decomposition.blocks().len(), 2);
    }

    #[test]
    fn level_components_reject_non_families() {
        let s = chain2();
        let chain = k(1);
        // Two copies of the same member overlap, breaking disjointness.
        let family = vec![
            FuzzySubset::constant(2, chain, 1).unwrap(),
            FuzzySubset::constant(2, chain, 1).unwrap(),
        ];
        assert!(matches!(
            level_components(&s, chain, &s, &family),
            Err(Error::NotSemilatticeFamily)
        ));
    }

    #[test]
    fn region_text_round_trip() {
        let region = ProductRegion::new(k(2), 2, [(1, 0), (0, 1), (0, 0)]).unwrap();
        assert_eq!(region.to_text(), "(0,0) (0,1) (1,0)");
        let back = ProductRegion::parse(k(2), 2, "(0,0) (0,1) (1,0)").unwrap();
        assert_eq!(back, region);
        let bare = ProductRegion::parse(k(2), 2, "0,0 0,1 1,0").unwrap();
        assert_eq!(bare, region);
        assert!(ProductRegion::parse(k(2), 2, "(2,0)").is_err());
        assert!(ProductRegion::parse(k(2), 2, "(0,3)").is_err());
    }
}
