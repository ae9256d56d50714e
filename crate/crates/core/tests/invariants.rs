//! Containments and transfer laws that must hold across the whole public
//! surface, swept exhaustively on small semigroups.

use fuzzy_semigroups::correspondence::{graph_region, region_to_fuzzy, ProductRegion};
use fuzzy_semigroups::enumeration::{enumerate_semigroups, standard_catalog};
use fuzzy_semigroups::fuzzy::{enumerate_fuzzy_subsets, DEFAULT_FUZZY_BUDGET};
use fuzzy_semigroups::{
    ChainProduct, Dedup, ElementSubset, FiniteSemigroup, FuzzyFilter, FuzzySubset, ValueChain,
};

fn small_hosts() -> Vec<FiniteSemigroup> {
    let mut hosts: Vec<FiniteSemigroup> = (1..=3)
        .flat_map(|n| enumerate_semigroups(n, Dedup::Iso).unwrap())
        .collect();
    hosts.extend(standard_catalog(5).into_iter().map(|(_, s)| s));
    hosts
}

#[test]
fn one_sided_ideals_are_quasi_ideals() {
    for s in small_hosts() {
        for l in s.all_left_ideals(6).unwrap() {
            assert!(s.is_quasi_ideal(l).unwrap(), "{s:?}: left ideal {l}");
        }
        for r in s.all_right_ideals(6).unwrap() {
            assert!(s.is_quasi_ideal(r).unwrap(), "{s:?}: right ideal {r}");
        }
    }
}

#[test]
fn fuzzy_one_sided_ideals_are_fuzzy_quasi_ideals() {
    let chain = ValueChain::new(2).unwrap();
    for s in (1..=3).flat_map(|n| enumerate_semigroups(n, Dedup::Iso).unwrap()) {
        for f in enumerate_fuzzy_subsets(&s, chain, FuzzyFilter::All, DEFAULT_FUZZY_BUDGET).unwrap()
        {
            if f.is_fuzzy_left_ideal(&s) || f.is_fuzzy_right_ideal(&s) {
                assert!(f.is_fuzzy_quasi_ideal(&s), "{s:?}: {}", f.to_text());
                assert!(f.is_fuzzy_subsemigroup(&s), "{s:?}: {}", f.to_text());
            }
        }
    }
}

#[test]
fn regularity_transfers_to_chain_products() {
    for (label, s) in standard_catalog(4) {
        if !s.is_regular() {
            continue;
        }
        for k in 1..=3 {
            let chain = ValueChain::new(k).unwrap();
            for include_zero in [false, true] {
                let product = ChainProduct::new(&s, chain, include_zero).unwrap();
                assert!(
                    product.semigroup().is_regular(),
                    "{label} x chain(k={k}, zero={include_zero})"
                );
            }
        }
    }
}

#[test]
fn every_product_subsemigroup_sits_below_its_fiber_maxima() {
    let chain = ValueChain::new(2).unwrap();
    for s in enumerate_semigroups(2, Dedup::None).unwrap() {
        let product = ChainProduct::new(&s, chain, true).unwrap();
        let host = product.semigroup();
        for subset in ElementSubset::nonempty_subsets(host.order()) {
            if !host.is_subsemigroup(subset) {
                continue;
            }
            let pairs: Vec<(usize, usize)> = subset.iter().map(|i| product.pair_at(i)).collect();
            let region = ProductRegion::new(chain, s.order(), pairs.clone()).unwrap();
            // region_to_fuzzy asserts both the fuzzy-subsemigroup law and
            // the containment; re-check the containment exhaustively.
            let sigma = region_to_fuzzy(&s, &region).unwrap();
            let graph = graph_region(&sigma);
            for (element, level) in pairs {
                assert!(graph.contains(element, level), "{s:?}: {region:?}");
            }
        }
    }
}

#[test]
fn characteristic_cuts_recover_the_subset() {
    let chain = ValueChain::new(3).unwrap();
    for s in enumerate_semigroups(3, Dedup::Iso).unwrap() {
        for subset in ElementSubset::nonempty_subsets(s.order()) {
            let f = FuzzySubset::characteristic(&s, subset, chain);
            for t in 1..=chain.top() {
                assert_eq!(f.level_set(t).unwrap(), subset);
            }
        }
    }
}

#[test]
fn meet_laws_hold() {
    let chain = ValueChain::new(2).unwrap();
    let s = FiniteSemigroup::from_table(&[vec![0, 0], vec![0, 1]]).unwrap();
    let all: Vec<FuzzySubset> =
        enumerate_fuzzy_subsets(&s, chain, FuzzyFilter::All, DEFAULT_FUZZY_BUDGET)
            .unwrap()
            .collect();
    for f in &all {
        assert_eq!(&f.meet(f).unwrap(), f);
        for g in &all {
            let fg = f.meet(g).unwrap();
            assert_eq!(fg, g.meet(f).unwrap());
            assert!(fg.is_subset_of(f).unwrap());
            assert!(fg.is_subset_of(g).unwrap());
            for h in &all {
                assert_eq!(fg.meet(h).unwrap(), f.meet(&g.meet(h).unwrap()).unwrap());
            }
        }
    }
}
