//! Brute-force verification sweeps: each sweep evaluates the separate
//! conditions of one equivalence (or lemma) on one semigroup and reports
//! whether their truth values agree.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::chain::ValueChain;
use crate::congruence::{quotient, semilattice_congruences, semilattice_decomposition, Congruence};
use crate::correspondence::{level_components, verify_bijections};
use crate::enumeration::{canonical_form, MAX_CANONICAL_ORDER};
use crate::error::{Error, Result};
use crate::fuzzy::{
    composite_levels, enumerate_fuzzy_subsets, FuzzyFilter, FuzzySubset, DEFAULT_FUZZY_BUDGET,
};
use crate::semigroup::{ElementSubset, FiniteSemigroup, DEFAULT_ENUMERATION_BOUND};

/// The verifiable statements, named by what they sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// Crisp regularity equivalences over subset ideals and quasi-ideals.
    RegularityCrisp,
    /// The fuzzy counterpart over chain-valued ideals and quasi-ideals.
    RegularityFuzzy,
    /// Characteristic maps turn subset products into composites.
    CharacteristicComposite,
    /// Decomposability into left simple pieces, four ways.
    LeftSimpleDecomposition,
    /// Crisp versus fuzzy decomposability into left simple pieces.
    LeftSimpleDecompositionFuzzy,
    /// Complete regularity versus decomposability into completely simple
    /// pieces, crisp and fuzzy.
    CompletelyRegularFuzzy,
    /// The graph and fiber-maxima passages are inverse bijections.
    Correspondence,
}

pub const ALL_THEOREMS: [TheoremId; 7] = [
    TheoremId::RegularityCrisp,
    TheoremId::RegularityFuzzy,
    TheoremId::CharacteristicComposite,
    TheoremId::LeftSimpleDecomposition,
    TheoremId::LeftSimpleDecompositionFuzzy,
    TheoremId::CompletelyRegularFuzzy,
    TheoremId::Correspondence,
];

impl TheoremId {
    pub fn name(&self) -> &'static str {
        match self {
            TheoremId::RegularityCrisp => "regularity-crisp",
            TheoremId::RegularityFuzzy => "regularity-fuzzy",
            TheoremId::CharacteristicComposite => "characteristic-composite",
            TheoremId::LeftSimpleDecomposition => "left-simple-decomposition",
            TheoremId::LeftSimpleDecompositionFuzzy => "left-simple-decomposition-fuzzy",
            TheoremId::CompletelyRegularFuzzy => "completely-regular-fuzzy",
            TheoremId::Correspondence => "correspondence",
        }
    }

    /// Whether the sweep quantifies over chain-valued fuzzy subsets.
    pub fn uses_chain(&self) -> bool {
        matches!(
            self,
            TheoremId::RegularityFuzzy
                | TheoremId::LeftSimpleDecompositionFuzzy
                | TheoremId::CompletelyRegularFuzzy
                | TheoremId::Correspondence
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_THEOREMS
            .iter()
            .find(|t| t.name() == s)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown theorem {s:?}")))
    }
}

/// Default cap on composite evaluations per sweep; at this cap a sweep
/// stays in the seconds range on small orders.
pub const DEFAULT_COMPOSITE_BUDGET: u128 = 100_000_000;

/// Resource limits for a sweep.
#[derive(Clone, Copy, Debug)]
pub struct Budgets {
    /// Cap on `(k+1)^n` fuzzy-subset enumerations.
    pub fuzzy_assignments: u128,
    /// Cap on composite evaluations in one sweep. The fuzzy regularity
    /// sweep multiplies out all pairs and triples of the collected
    /// quasi-ideal family, so its work is cubic in the family size; the
    /// sweep is rejected up front when the predicted count exceeds this.
    pub composite_evaluations: u128,
    /// Largest order for subset and partition enumeration.
    pub subset_order: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            fuzzy_assignments: DEFAULT_FUZZY_BUDGET,
            composite_evaluations: DEFAULT_COMPOSITE_BUDGET,
            subset_order: DEFAULT_ENUMERATION_BOUND,
        }
    }
}

/// The outcome of one sweep on one semigroup.
#[derive(Clone, Debug)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub semigroup_id: String,
    /// Chain resolution, for sweeps that quantify over fuzzy subsets.
    pub chain_resolution: Option<usize>,
    /// Condition names with their computed truth values, in statement
    /// order.
    pub conditions: Vec<(String, bool)>,
    pub equivalent: bool,
    /// Present exactly when the verdict failed.
    pub witness: Option<String>,
}

/// One evaluated condition; `detail` carries a counterexample when false.
struct Check {
    name: &'static str,
    value: bool,
    detail: Option<String>,
}

impl Check {
    fn new(name: &'static str, (value, detail): (bool, Option<String>)) -> Self {
        Check { name, value, detail }
    }
}

fn equivalence_verdict(
    theorem: TheoremId,
    s: &FiniteSemigroup,
    chain_resolution: Option<usize>,
    checks: Vec<Check>,
) -> TheoremVerdict {
    let equivalent = checks.windows(2).all(|w| w[0].value == w[1].value);
    let witness = if equivalent {
        None
    } else {
        let holds = checks.iter().find(|c| c.value).expect("mixed");
        let fails = checks.iter().find(|c| !c.value).expect("mixed");
        Some(match &fails.detail {
            Some(d) => format!("{}=true but {}=false: {}", holds.name, fails.name, d),
            None => format!("{}=true but {}=false", holds.name, fails.name),
        })
    };
    finish(theorem, s, chain_resolution, checks, equivalent, witness)
}

fn conjunction_verdict(
    theorem: TheoremId,
    s: &FiniteSemigroup,
    chain_resolution: Option<usize>,
    checks: Vec<Check>,
) -> TheoremVerdict {
    let equivalent = checks.iter().all(|c| c.value);
    let witness = if equivalent {
        None
    } else {
        let fails = checks.iter().find(|c| !c.value).expect("some check failed");
        Some(match &fails.detail {
            Some(d) => format!("{} failed: {}", fails.name, d),
            None => format!("{} failed", fails.name),
        })
    };
    finish(theorem, s, chain_resolution, checks, equivalent, witness)
}

fn finish(
    theorem: TheoremId,
    s: &FiniteSemigroup,
    chain_resolution: Option<usize>,
    checks: Vec<Check>,
    equivalent: bool,
    witness: Option<String>,
) -> TheoremVerdict {
    TheoremVerdict {
        theorem,
        semigroup_id: semigroup_id(s),
        chain_resolution,
        conditions: checks.into_iter().map(|c| (c.name.to_string(), c.value)).collect(),
        equivalent,
        witness,
    }
}

/// A 16-hex-digit identifier: the hash of the canonical table, so that
/// isomorphic semigroups share an id. Larger orders hash the raw table.
pub fn semigroup_id(s: &FiniteSemigroup) -> String {
    let keyed = if s.order() <= MAX_CANONICAL_ORDER {
        canonical_form(s).expect("order is within the canonical bound")
    } else {
        s.clone()
    };
    let mut hasher = Sha256::new();
    hasher.update((keyed.order() as u64).to_le_bytes());
    for &v in keyed.flat_table() {
        hasher.update((v as u64).to_le_bytes());
    }
    let digest = hasher.finalize();
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

// --- crisp regularity ------------------------------------------------------

fn crisp_meet_eq_product(
    s: &FiniteSemigroup,
    rights: &[ElementSubset],
    lefts: &[ElementSubset],
) -> (bool, Option<String>) {
    for &r in rights {
        for &l in lefts {
            let meet = r.intersect(l);
            let prod = s.subset_product(r, l);
            if meet != prod {
                return (false, Some(format!("R={r}, L={l}: R∩L={meet} but RL={prod}")));
            }
        }
    }
    (true, None)
}

fn crisp_powers_and_quasi(
    s: &FiniteSemigroup,
    rights: &[ElementSubset],
    lefts: &[ElementSubset],
) -> (bool, Option<String>) {
    for &r in rights {
        if s.subset_product(r, r) != r {
            return (false, Some(format!("R={r}: RR={}", s.subset_product(r, r))));
        }
    }
    for &l in lefts {
        if s.subset_product(l, l) != l {
            return (false, Some(format!("L={l}: LL={}", s.subset_product(l, l))));
        }
    }
    for &r in rights {
        for &l in lefts {
            let prod = s.subset_product(r, l);
            if !s.is_quasi_ideal(prod).unwrap_or(false) {
                return (false, Some(format!("R={r}, L={l}: RL={prod} is not a quasi-ideal")));
            }
        }
    }
    (true, None)
}

fn crisp_quasi_regular(
    s: &FiniteSemigroup,
    quasis: &[ElementSubset],
) -> (bool, Option<String>) {
    let family: BTreeSet<ElementSubset> = quasis.iter().copied().collect();
    for &a in quasis {
        for &b in quasis {
            let prod = s.subset_product(a, b);
            if !family.contains(&prod) {
                return (
                    false,
                    Some(format!("Q1={a}, Q2={b}: Q1Q2={prod} is not a quasi-ideal")),
                );
            }
        }
    }
    for &q in quasis {
        let regular = quasis.iter().any(|&p| {
            s.subset_product(s.subset_product(q, p), q) == q
        });
        if !regular {
            return (false, Some(format!("Q={q} has no P with QPQ=Q")));
        }
    }
    (true, None)
}

fn crisp_sandwich(s: &FiniteSemigroup, quasis: &[ElementSubset]) -> (bool, Option<String>) {
    let universe = ElementSubset::universe(s.order());
    for &q in quasis {
        let sandwich = s.subset_product(s.subset_product(q, universe), q);
        if sandwich != q {
            return (false, Some(format!("Q={q}: QSQ={sandwich}")));
        }
    }
    (true, None)
}

/// Five forms of regularity over subsets: elementwise regularity; meets of
/// right with left ideals equal their products; one-sided ideals are
/// idempotent and their products are quasi-ideals; the quasi-ideals form a
/// regular semigroup under subset product; every quasi-ideal equals its
/// sandwich with the whole semigroup.
pub fn verify_regularity_crisp(s: &FiniteSemigroup, budgets: Budgets) -> Result<TheoremVerdict> {
    let bound = budgets.subset_order;
    let rights = s.all_right_ideals(bound)?;
    let lefts = s.all_left_ideals(bound)?;
    let quasis = s.all_quasi_ideals(bound)?;
    let checks = vec![
        Check::new("regular", (s.is_regular(), None)),
        Check::new("ideal_meet_eq_product", crisp_meet_eq_product(s, &rights, &lefts)),
        Check::new(
            "ideal_powers_and_quasi_product",
            crisp_powers_and_quasi(s, &rights, &lefts),
        ),
        Check::new("quasi_family_regular", crisp_quasi_regular(s, &quasis)),
        Check::new("quasi_sandwich", crisp_sandwich(s, &quasis)),
    ];
    Ok(equivalence_verdict(TheoremId::RegularityCrisp, s, None, checks))
}

// --- fuzzy regularity ------------------------------------------------------

fn fuzzy_meet_eq_composite(
    s: &FiniteSemigroup,
    frs: &[FuzzySubset],
    fls: &[FuzzySubset],
) -> (bool, Option<String>) {
    for f in frs {
        for g in fls {
            let meet = f.meet(g).expect("same chain");
            let comp = f.composite(g, s).expect("same chain");
            if meet != comp {
                let a = (0..s.order())
                    .find(|&a| meet.grade(a) != comp.grade(a))
                    .expect("unequal somewhere");
                return (
                    false,
                    Some(format!(
                        "f={}, g={}: (f∩g)({a})={} but (f∘g)({a})={}",
                        f.to_text(),
                        g.to_text(),
                        meet.grade(a),
                        comp.grade(a)
                    )),
                );
            }
        }
    }
    (true, None)
}

fn fuzzy_powers_and_quasi(
    s: &FiniteSemigroup,
    frs: &[FuzzySubset],
    fls: &[FuzzySubset],
) -> (bool, Option<String>) {
    for f in frs {
        if &f.composite(f, s).expect("same chain") != f {
            return (false, Some(format!("f={}: f∘f≠f", f.to_text())));
        }
    }
    for g in fls {
        if &g.composite(g, s).expect("same chain") != g {
            return (false, Some(format!("g={}: g∘g≠g", g.to_text())));
        }
    }
    for f in frs {
        for g in fls {
            let comp = f.composite(g, s).expect("same chain");
            if !comp.is_fuzzy_quasi_ideal(s) {
                return (
                    false,
                    Some(format!(
                        "f={}, g={}: f∘g={} is not a fuzzy quasi-ideal",
                        f.to_text(),
                        g.to_text(),
                        comp.to_text()
                    )),
                );
            }
        }
    }
    (true, None)
}

/// The chain-valued fuzzy quasi-ideals under composition: closure,
/// associativity, and the sandwich identity with the constant-top member
/// (which witnesses regularity of that composition semigroup).
fn fuzzy_quasi_regular(
    s: &FiniteSemigroup,
    chain: ValueChain,
    fqs: &[FuzzySubset],
) -> (bool, Option<String>) {
    let n = s.order();
    let m = fqs.len();
    let family: BTreeSet<&[usize]> = fqs.iter().map(|q| q.values()).collect();
    let top = FuzzySubset::constant(n, chain, chain.top()).expect("top is on the chain");
    debug_assert!(family.contains(top.values()), "the whole semigroup is a quasi-ideal");

    // Closure, collecting all pairwise composites for the associativity
    // pass.
    let mut pairwise = vec![0usize; m * m * n];
    for (i, a) in fqs.iter().enumerate() {
        for (j, b) in fqs.iter().enumerate() {
            let out = &mut pairwise[(i * m + j) * n..(i * m + j + 1) * n];
            composite_levels(s, a.values(), b.values(), out);
            if !family.contains(out) {
                return (
                    false,
                    Some(format!(
                        "q1={}, q2={}: q1∘q2 is not a fuzzy quasi-ideal",
                        a.to_text(),
                        b.to_text()
                    )),
                );
            }
        }
    }

    // Associativity of composition on the family.
    let mut left = vec![0usize; n];
    let mut right = vec![0usize; n];
    for i in 0..m {
        for j in 0..m {
            let ij = &pairwise[(i * m + j) * n..(i * m + j + 1) * n].to_vec();
            for l in 0..m {
                composite_levels(s, ij, fqs[l].values(), &mut left);
                let jl = &pairwise[(j * m + l) * n..(j * m + l + 1) * n];
                composite_levels(s, fqs[i].values(), jl, &mut right);
                if left != right {
                    return (
                        false,
                        Some(format!(
                            "composition is not associative at ({}, {}, {})",
                            fqs[i].to_text(),
                            fqs[j].to_text(),
                            fqs[l].to_text()
                        )),
                    );
                }
            }
        }
    }

    // Sandwich identity with the constant-top member.
    let mut half = vec![0usize; n];
    let mut full = vec![0usize; n];
    for q in fqs {
        composite_levels(s, q.values(), top.values(), &mut half);
        composite_levels(s, &half, q.values(), &mut full);
        if full != q.values() {
            return (false, Some(format!("q={}: q∘⊤∘q≠q", q.to_text())));
        }
    }
    (true, None)
}

/// The fuzzy counterpart of [`verify_regularity_crisp`], quantifying over
/// all chain-valued fuzzy one-sided ideals and quasi-ideals.
pub fn verify_regularity_fuzzy(
    s: &FiniteSemigroup,
    chain: ValueChain,
    budgets: Budgets,
) -> Result<TheoremVerdict> {
    let mut frs = Vec::new();
    let mut fls = Vec::new();
    let mut fqs = Vec::new();
    for f in enumerate_fuzzy_subsets(s, chain, FuzzyFilter::All, budgets.fuzzy_assignments)? {
        if f.is_fuzzy_right_ideal(s) {
            frs.push(f.clone());
        }
        if f.is_fuzzy_left_ideal(s) {
            fls.push(f.clone());
        }
        if f.is_fuzzy_quasi_ideal(s) {
            fqs.push(f);
        }
    }
    // The family passes below are quadratic in the ideal counts and cubic
    // in the quasi-ideal count; predict the composite work and refuse
    // rather than grind. LZ(5) at resolution 5 already has 7776
    // quasi-ideals, putting the triple pass near 10^12 composites.
    let (fr, fl, m) = (frs.len() as u128, fls.len() as u128, fqs.len() as u128);
    let predicted = 4 * fr * fl + fr + fl + m * m + 2 * m * m * m + 2 * m;
    if predicted > budgets.composite_evaluations {
        return Err(Error::CompositeBudgetExceeded {
            evaluations: predicted,
            budget: budgets.composite_evaluations,
        });
    }
    let checks = vec![
        Check::new("regular", (s.is_regular(), None)),
        Check::new("ideal_meet_eq_composite", fuzzy_meet_eq_composite(s, &frs, &fls)),
        Check::new(
            "ideal_powers_and_quasi_composite",
            fuzzy_powers_and_quasi(s, &frs, &fls),
        ),
        Check::new("quasi_family_regular", fuzzy_quasi_regular(s, chain, &fqs)),
    ];
    Ok(equivalence_verdict(
        TheoremId::RegularityFuzzy,
        s,
        Some(chain.resolution()),
        checks,
    ))
}

// --- characteristic composites ---------------------------------------------

fn characteristic_composites_hold(
    s: &FiniteSemigroup,
    subs: &[ElementSubset],
    chain: ValueChain,
) -> (bool, Option<String>) {
    for &b in subs {
        for &c in subs {
            let lhs = FuzzySubset::characteristic(s, b, chain)
                .composite(&FuzzySubset::characteristic(s, c, chain), s)
                .expect("same chain");
            let rhs = FuzzySubset::characteristic(s, s.subset_product(b, c), chain);
            if lhs != rhs {
                return (
                    false,
                    Some(format!("B={b}, C={c}: χB∘χC={} but χ(BC)={}", lhs.to_text(), rhs.to_text())),
                );
            }
        }
    }
    (true, None)
}

/// Characteristic maps of subsemigroups compose like their subset
/// products, checked at resolution 1 and at resolution `|S|`.
pub fn verify_characteristic_composite(
    s: &FiniteSemigroup,
    budgets: Budgets,
) -> Result<TheoremVerdict> {
    let subs = s.all_subsemigroups(budgets.subset_order)?;
    let unit = ValueChain::new(1).expect("1 is a valid resolution");
    let full = ValueChain::new(s.order().max(1)).expect("order is positive");
    let checks = vec![
        Check::new(
            "holds_at_unit_resolution",
            characteristic_composites_hold(s, &subs, unit),
        ),
        Check::new("holds_at_resolution", characteristic_composites_hold(s, &subs, full)),
    ];
    Ok(conjunction_verdict(TheoremId::CharacteristicComposite, s, None, checks))
}

// --- left simple decompositions --------------------------------------------

fn left_meet_eq_product(s: &FiniteSemigroup, lefts: &[ElementSubset]) -> (bool, Option<String>) {
    for &a in lefts {
        for &b in lefts {
            let meet = a.intersect(b);
            let prod = s.subset_product(a, b);
            if meet != prod {
                return (false, Some(format!("L1={a}, L2={b}: L1∩L2={meet} but L1L2={prod}")));
            }
        }
    }
    (true, None)
}

fn left_ideals_semilattice(
    s: &FiniteSemigroup,
    lefts: &[ElementSubset],
) -> (bool, Option<String>) {
    let family: BTreeSet<ElementSubset> = lefts.iter().copied().collect();
    for &a in lefts {
        for &b in lefts {
            let prod = s.subset_product(a, b);
            if !family.contains(&prod) {
                return (false, Some(format!("L1={a}, L2={b}: L1L2={prod} is not a left ideal")));
            }
            if prod != s.subset_product(b, a) {
                return (
                    false,
                    Some(format!("L1={a}, L2={b}: L1L2={prod} but L2L1={}", s.subset_product(b, a))),
                );
            }
        }
        if s.subset_product(a, a) != a {
            return (false, Some(format!("L={a}: LL={}", s.subset_product(a, a))));
        }
    }
    (true, None)
}

fn left_regular_two_sided(s: &FiniteSemigroup, lefts: &[ElementSubset]) -> (bool, Option<String>) {
    if !s.is_left_regular() {
        return (false, Some("not left regular".to_string()));
    }
    for &l in lefts {
        if !s.is_ideal(l).unwrap_or(false) {
            return (false, Some(format!("left ideal L={l} is not two-sided")));
        }
    }
    (true, None)
}

/// Four forms of decomposability over an index semilattice into left
/// simple pieces: the canonical congruence decomposition has left simple
/// blocks; meets of left ideals equal their products; the left ideals form
/// a semilattice under subset product; the semigroup is left regular with
/// every left ideal two-sided.
pub fn verify_left_simple_decomposition(
    s: &FiniteSemigroup,
    budgets: Budgets,
) -> Result<TheoremVerdict> {
    let lefts = s.all_left_ideals(budgets.subset_order)?;
    let sd = semilattice_decomposition(s);
    let decomposes = sd.is_semilattice_of_left_simple();
    let detail = if decomposes {
        None
    } else {
        Some("a canonical block is not left simple".to_string())
    };
    let checks = vec![
        Check::new("decomposes_into_left_simple", (decomposes, detail)),
        Check::new("left_ideal_meet_eq_product", left_meet_eq_product(s, &lefts)),
        Check::new("left_ideals_semilattice", left_ideals_semilattice(s, &lefts)),
        Check::new("left_regular_two_sided", left_regular_two_sided(s, &lefts)),
    ];
    Ok(equivalence_verdict(TheoremId::LeftSimpleDecomposition, s, None, checks))
}

/// Lifts the classes of a congruence to characteristic fuzzy subsets over
/// its quotient.
fn congruence_family(
    s: &FiniteSemigroup,
    cong: &Congruence,
    chain: ValueChain,
) -> (FiniteSemigroup, Vec<FuzzySubset>) {
    let (index, _) = quotient(s, cong);
    let family = cong
        .classes()
        .iter()
        .map(|&class| FuzzySubset::characteristic(s, class, chain))
        .collect();
    (index, family)
}

/// Searches the semilattice congruences for one whose lifted
/// characteristic family is a fuzzy semilattice family with every member
/// satisfying `member_ok`.
fn fuzzy_partition_exists(
    s: &FiniteSemigroup,
    chain: ValueChain,
    member_ok: impl Fn(&FuzzySubset) -> Result<bool>,
) -> Result<bool> {
    for cong in semilattice_congruences(s) {
        let (index, family) = congruence_family(s, &cong, chain);
        if !crate::fuzzy::is_fuzzy_semilattice_family(s, chain, &index, &family)? {
            continue;
        }
        let mut all = true;
        for member in &family {
            if !member_ok(member)? {
                all = false;
                break;
            }
        }
        if all {
            return Ok(true);
        }
    }
    Ok(false)
}

fn check_partition_bound(s: &FiniteSemigroup, budgets: Budgets) -> Result<()> {
    if s.order() > budgets.subset_order {
        return Err(Error::EnumerationBound {
            order: s.order(),
            bound: budgets.subset_order,
        });
    }
    Ok(())
}

/// Crisp versus fuzzy decomposability into left simple pieces. The fuzzy
/// side searches all semilattice congruences for a lifted family of left
/// simple fuzzy subsemigroups. When the crisp side holds, the canonical
/// family is additionally sliced into level components and the induced
/// decomposition of the zero-free chain product is validated.
pub fn verify_left_simple_decomposition_fuzzy(
    s: &FiniteSemigroup,
    chain: ValueChain,
    budgets: Budgets,
) -> Result<TheoremVerdict> {
    check_partition_bound(s, budgets)?;
    let sd = semilattice_decomposition(s);
    let decomposes = sd.is_semilattice_of_left_simple();
    let fuzzy_decomposes =
        fuzzy_partition_exists(s, chain, |m| m.is_left_simple_fuzzy_subsemigroup(s))?;
    if decomposes {
        let (index, family) = congruence_family(s, &sd.congruence, chain);
        level_components(s, chain, &index, &family)?;
    }
    let checks = vec![
        Check::new(
            "decomposes_into_left_simple",
            (decomposes, (!decomposes).then(|| "a canonical block is not left simple".to_string())),
        ),
        Check::new(
            "fuzzy_decomposes_into_left_simple",
            (
                fuzzy_decomposes,
                (!fuzzy_decomposes)
                    .then(|| "no semilattice congruence lifts to a left simple fuzzy family".to_string()),
            ),
        ),
    ];
    Ok(equivalence_verdict(
        TheoremId::LeftSimpleDecompositionFuzzy,
        s,
        Some(chain.resolution()),
        checks,
    ))
}

/// Complete regularity versus crisp and fuzzy decomposability into
/// completely simple pieces; both decomposability sides search all
/// semilattice congruences.
pub fn verify_completely_regular_fuzzy(
    s: &FiniteSemigroup,
    chain: ValueChain,
    budgets: Budgets,
) -> Result<TheoremVerdict> {
    check_partition_bound(s, budgets)?;
    let mut crisp = false;
    for cong in semilattice_congruences(s) {
        let all_simple = cong.classes().iter().all(|&class| {
            let (block, _) = s.restriction(class).expect("classes are nonempty");
            block.is_completely_simple()
        });
        if all_simple {
            crisp = true;
            break;
        }
    }
    let fuzzy =
        fuzzy_partition_exists(s, chain, |m| m.is_completely_simple_fuzzy_subsemigroup(s))?;
    let checks = vec![
        Check::new("completely_regular", (s.is_completely_regular(), None)),
        Check::new(
            "decomposes_into_completely_simple",
            (crisp, (!crisp).then(|| "no semilattice congruence has completely simple classes".to_string())),
        ),
        Check::new(
            "fuzzy_decomposes_into_completely_simple",
            (
                fuzzy,
                (!fuzzy)
                    .then(|| "no semilattice congruence lifts to a completely simple fuzzy family".to_string()),
            ),
        ),
    ];
    Ok(equivalence_verdict(
        TheoremId::CompletelyRegularFuzzy,
        s,
        Some(chain.resolution()),
        checks,
    ))
}

/// Runs the graph/fiber-maxima bijection sweep and reports one condition
/// per family.
pub fn verify_correspondence(
    s: &FiniteSemigroup,
    chain: ValueChain,
    budgets: Budgets,
) -> Result<TheoremVerdict> {
    let report = verify_bijections(s, chain, budgets.fuzzy_assignments)?;
    let checks = report
        .families
        .iter()
        .map(|f| Check {
            name: f.family,
            value: f.ok,
            detail: f.witness.clone(),
        })
        .collect();
    Ok(conjunction_verdict(
        TheoremId::Correspondence,
        s,
        Some(chain.resolution()),
        checks,
    ))
}

// --- suite runner ----------------------------------------------------------

/// One corpus member: a loaded semigroup or the reason it failed to load.
#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub label: String,
    pub semigroup: std::result::Result<FiniteSemigroup, String>,
}

/// Chain resolution policy for a suite run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainChoice {
    /// `k = |S|` per member.
    MatchOrder,
    Fixed(usize),
}

impl ChainChoice {
    pub fn resolution_for(&self, s: &FiniteSemigroup) -> usize {
        match self {
            ChainChoice::MatchOrder => s.order().max(1),
            ChainChoice::Fixed(k) => *k,
        }
    }
}

impl fmt::Display for ChainChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainChoice::MatchOrder => f.write_str("auto"),
            ChainChoice::Fixed(k) => write!(f, "{k}"),
        }
    }
}

impl FromStr for ChainChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "auto" {
            return Ok(ChainChoice::MatchOrder);
        }
        s.parse::<usize>()
            .map(ChainChoice::Fixed)
            .map_err(|_| Error::Parse(format!("bad chain resolution {s:?}")))
    }
}

/// One report row.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteItem {
    pub label: String,
    pub semigroup_hash: String,
    pub theorem: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain_k: Option<usize>,
    pub conditions: BTreeMap<String, bool>,
    pub equivalent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub corpus: String,
    /// `"auto"` or a fixed resolution.
    pub chain_k: String,
    pub items: Vec<SuiteItem>,
    pub summary: SuiteSummary,
}

impl SuiteReport {
    /// True when some verdict computed and came out non-equivalent.
    pub fn has_failures(&self) -> bool {
        self.summary.failed > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn apply_theorem(
    theorem: TheoremId,
    s: &FiniteSemigroup,
    chain: ChainChoice,
    budgets: Budgets,
) -> Result<TheoremVerdict> {
    let resolution = || ValueChain::new(chain.resolution_for(s));
    match theorem {
        TheoremId::RegularityCrisp => verify_regularity_crisp(s, budgets),
        TheoremId::RegularityFuzzy => verify_regularity_fuzzy(s, resolution()?, budgets),
        TheoremId::CharacteristicComposite => verify_characteristic_composite(s, budgets),
        TheoremId::LeftSimpleDecomposition => verify_left_simple_decomposition(s, budgets),
        TheoremId::LeftSimpleDecompositionFuzzy => {
            verify_left_simple_decomposition_fuzzy(s, resolution()?, budgets)
        }
        TheoremId::CompletelyRegularFuzzy => {
            verify_completely_regular_fuzzy(s, resolution()?, budgets)
        }
        TheoremId::Correspondence => verify_correspondence(s, resolution()?, budgets),
    }
}

fn item_rows(
    item: &CorpusItem,
    chain: ChainChoice,
    theorems: &[TheoremId],
    budgets: Budgets,
) -> Vec<SuiteItem> {
    let s = match &item.semigroup {
        Ok(s) => s,
        Err(reason) => {
            return vec![SuiteItem {
                label: item.label.clone(),
                semigroup_hash: String::new(),
                theorem: "load".to_string(),
                chain_k: None,
                conditions: BTreeMap::new(),
                equivalent: false,
                witness: None,
                error: Some(reason.clone()),
                millis: 0,
            }];
        }
    };
    theorems
        .iter()
        .map(|&theorem| {
            let start = Instant::now();
            let outcome = apply_theorem(theorem, s, chain, budgets);
            let millis = start.elapsed().as_millis();
            match outcome {
                Ok(v) => SuiteItem {
                    label: item.label.clone(),
                    semigroup_hash: v.semigroup_id,
                    theorem: theorem.name().to_string(),
                    chain_k: v.chain_resolution,
                    conditions: v.conditions.into_iter().collect(),
                    equivalent: v.equivalent,
                    witness: v.witness,
                    error: None,
                    millis,
                },
                Err(e) => SuiteItem {
                    label: item.label.clone(),
                    semigroup_hash: semigroup_id(s),
                    theorem: theorem.name().to_string(),
                    chain_k: None,
                    conditions: BTreeMap::new(),
                    equivalent: false,
                    witness: None,
                    error: Some(e.to_string()),
                    millis,
                },
            }
        })
        .collect()
}

/// Runs the requested sweeps on every corpus member in parallel and
/// assembles a deterministic report (rows sorted by semigroup id, label,
/// theorem). Per-member failures to load or to stay in budget become rows
/// with an `error` field; they never abort the suite and they count apart
/// from equivalence failures.
pub fn run_suite(
    corpus: &str,
    items: &[CorpusItem],
    chain: ChainChoice,
    theorems: &[TheoremId],
    budgets: Budgets,
    out: Option<&Path>,
) -> Result<SuiteReport> {
    let mut rows: Vec<SuiteItem> = items
        .par_iter()
        .map(|item| item_rows(item, chain, theorems, budgets))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    rows.sort_by(|a, b| {
        (&a.semigroup_hash, &a.label, &a.theorem).cmp(&(&b.semigroup_hash, &b.label, &b.theorem))
    });
    let errors = rows.iter().filter(|r| r.error.is_some()).count();
    let failed = rows
        .iter()
        .filter(|r| r.error.is_none() && !r.equivalent)
        .count();
    let passed = rows
        .iter()
        .filter(|r| r.error.is_none() && r.equivalent)
        .count();
    let report = SuiteReport {
        corpus: corpus.to_string(),
        chain_k: chain.to_string(),
        items: rows,
        summary: SuiteSummary {
            total: passed + failed + errors,
            passed,
            failed,
            errors,
        },
    };
    if let Some(path) = out {
        std::fs::write(path, report.to_json() + "\n")?;
    }
    Ok(report)
}
