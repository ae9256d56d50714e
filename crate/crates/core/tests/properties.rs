//! Randomized laws over catalog hosts, complementing the exhaustive
//! sweeps with larger orders and resolutions.

use proptest::prelude::*;

use fuzzy_semigroups::enumeration::{canonical_form, standard_catalog};
use fuzzy_semigroups::{ElementSubset, FiniteSemigroup, FuzzySubset, ValueChain};

fn hosts() -> Vec<FiniteSemigroup> {
    standard_catalog(5).into_iter().map(|(_, s)| s).collect()
}

fn fuzzy_values(order: usize, top: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0..=top, order)
}

proptest! {
    #[test]
    fn composite_is_associative(
        host_index in 0usize..22,
        resolution in 1usize..=4,
        seed_f in proptest::collection::vec(0usize..=4, 25),
        seed_g in proptest::collection::vec(0usize..=4, 25),
        seed_h in proptest::collection::vec(0usize..=4, 25),
    ) {
        let s = &hosts()[host_index];
        let chain = ValueChain::new(resolution).unwrap();
        let clamp = |seed: &[usize]| {
            let values: Vec<usize> = seed[..s.order()].iter().map(|&v| v.min(resolution)).collect();
            FuzzySubset::new(chain, values).unwrap()
        };
        let (f, g, h) = (clamp(&seed_f), clamp(&seed_g), clamp(&seed_h));
        let left = f.composite(&g, s).unwrap().composite(&h, s).unwrap();
        let right = f.composite(&g.composite(&h, s).unwrap(), s).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn composite_respects_meet_ordering(
        host_index in 0usize..22,
        values in fuzzy_values(25, 3),
        smaller in fuzzy_values(25, 3),
    ) {
        let s = &hosts()[host_index];
        let chain = ValueChain::new(3).unwrap();
        let f = FuzzySubset::new(chain, values[..s.order()].to_vec()).unwrap();
        let g = FuzzySubset::new(
            chain,
            smaller[..s.order()]
                .iter()
                .zip(f.values())
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
        .unwrap();
        // g <= f pointwise, so g∘g <= f∘f pointwise.
        let gg = g.composite(&g, s).unwrap();
        let ff = f.composite(&f, s).unwrap();
        prop_assert!(gg.is_subset_of(&ff).unwrap());
    }

    #[test]
    fn canonical_form_is_a_class_invariant(perm in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle()) {
        let s = fuzzy_semigroups::enumeration::CatalogSpec::RectangularBand(2, 2)
            .build()
            .unwrap();
        let relabeled = s.relabel(&perm);
        prop_assert_eq!(canonical_form(&relabeled).unwrap(), canonical_form(&s).unwrap());
    }

    #[test]
    fn subset_product_is_associative(
        host_index in 0usize..22,
        a_bits in 0u32..32,
        b_bits in 0u32..32,
        c_bits in 0u32..32,
    ) {
        let s = &hosts()[host_index];
        let mask = |bits: u32| {
            let mut subset = ElementSubset::empty();
            for e in s.elements() {
                if bits & (1 << e) != 0 {
                    subset.insert(e);
                }
            }
            subset
        };
        let (a, b, c) = (mask(a_bits), mask(b_bits), mask(c_bits));
        let left = s.subset_product(s.subset_product(a, b), c);
        let right = s.subset_product(a, s.subset_product(b, c));
        prop_assert_eq!(left, right);
    }
}
