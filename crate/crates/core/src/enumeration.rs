//! Generating corpora of small semigroups: a catalog of standard
//! families, exhaustive enumeration by backtracking, canonical forms for
//! deduplication, seeded random sampling, and a text cache format.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// Largest order the exhaustive backtracking search will attempt.
pub const MAX_BACKTRACK_ORDER: usize = 4;
/// Largest order the seeded random search will attempt.
pub const MAX_RANDOM_ORDER: usize = 5;
/// Largest order for which canonical forms are computed (all permutations
/// are tried).
pub const MAX_CANONICAL_ORDER: usize = 6;

/// A named family member with a closed-form multiplication table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogSpec {
    /// `a * b = a`.
    LeftZero(usize),
    /// `a * b = b`.
    RightZero(usize),
    /// Every product is `0`.
    Null(usize),
    /// The chain `0 < 1 < ... < n-1` under `min`.
    Chain(usize),
    /// Addition mod `n`.
    CyclicGroup(usize),
    /// `p x q` pairs with `(a,b) * (c,d) = (a,d)`.
    RectangularBand(usize, usize),
}

impl CatalogSpec {
    pub fn name(&self) -> String {
        match *self {
            CatalogSpec::LeftZero(n) => format!("LZ({n})"),
            CatalogSpec::RightZero(n) => format!("RZ({n})"),
            CatalogSpec::Null(n) => format!("NULL({n})"),
            CatalogSpec::Chain(n) => format!("CHAIN({n})"),
            CatalogSpec::CyclicGroup(n) => format!("Z({n})"),
            CatalogSpec::RectangularBand(p, q) => format!("RB({p},{q})"),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            CatalogSpec::LeftZero(n)
            | CatalogSpec::RightZero(n)
            | CatalogSpec::Null(n)
            | CatalogSpec::Chain(n)
            | CatalogSpec::CyclicGroup(n) => n,
            CatalogSpec::RectangularBand(p, q) => p * q,
        }
    }

    /// Builds the table and revalidates it through the ordinary
    /// constructor.
    pub fn build(&self) -> Result<FiniteSemigroup> {
        let n = self.order();
        if n == 0 {
            return Err(Error::InvalidCatalog(self.name()));
        }
        let mut table = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = match *self {
                    CatalogSpec::LeftZero(_) => a,
                    CatalogSpec::RightZero(_) => b,
                    CatalogSpec::Null(_) => 0,
                    CatalogSpec::Chain(_) => a.min(b),
                    CatalogSpec::CyclicGroup(m) => (a + b) % m,
                    CatalogSpec::RectangularBand(_, q) => (a / q) * q + b % q,
                };
            }
        }
        FiniteSemigroup::from_flat(n, table)
    }
}

/// The catalog used by sweeps: the trivial semigroup, then left zero,
/// right zero, null, chain, and cyclic group families at each order from
/// 2 to `max_order`, then rectangular bands with both sides at least 2.
pub fn standard_catalog(max_order: usize) -> Vec<(String, FiniteSemigroup)> {
    let mut specs = Vec::new();
    if max_order >= 1 {
        specs.push(CatalogSpec::CyclicGroup(1));
    }
    for n in 2..=max_order.max(1) {
        specs.push(CatalogSpec::LeftZero(n));
        specs.push(CatalogSpec::RightZero(n));
        specs.push(CatalogSpec::Null(n));
        specs.push(CatalogSpec::Chain(n));
        specs.push(CatalogSpec::CyclicGroup(n));
    }
    for p in 2..=max_order {
        for q in 2..=max_order {
            if p * q <= max_order {
                specs.push(CatalogSpec::RectangularBand(p, q));
            }
        }
    }
    specs
        .into_iter()
        .map(|spec| {
            let s = spec
                .build()
                .expect("catalog tables are associative by construction");
            (spec.name(), s)
        })
        .collect()
}

/// How enumeration results are deduplicated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dedup {
    /// Keep every labeled table.
    None,
    /// One representative per isomorphism class.
    Iso,
    /// One representative per isomorphism-or-anti-isomorphism class.
    IsoAnti,
}

impl fmt::Display for Dedup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dedup::None => "none",
            Dedup::Iso => "iso",
            Dedup::IsoAnti => "iso-anti",
        })
    }
}

impl FromStr for Dedup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Dedup::None),
            "iso" => Ok(Dedup::Iso),
            "iso-anti" => Ok(Dedup::IsoAnti),
            other => Err(Error::Parse(format!("unknown dedup mode {other:?}"))),
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn recurse(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            recurse(k - 1, items, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    recurse(n, &mut items, &mut out);
    out
}

/// The least relabeling of `s` in flat-table order; equal canonical forms
/// characterize isomorphic semigroups.
pub fn canonical_form(s: &FiniteSemigroup) -> Result<FiniteSemigroup> {
    canonical_by(s, Dedup::Iso)
}

/// As [`canonical_form`], additionally minimizing over the opposite table
/// so that anti-isomorphic semigroups coincide.
pub fn canonical_form_with_opposite(s: &FiniteSemigroup) -> Result<FiniteSemigroup> {
    canonical_by(s, Dedup::IsoAnti)
}

fn canonical_by(s: &FiniteSemigroup, dedup: Dedup) -> Result<FiniteSemigroup> {
    let n = s.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::EnumerationBound {
            order: n,
            bound: MAX_CANONICAL_ORDER,
        });
    }
    let mut variants = vec![s.clone()];
    if dedup == Dedup::IsoAnti {
        variants.push(s.opposite());
    }
    let mut best: Option<Vec<usize>> = None;
    for variant in &variants {
        for perm in permutations(n) {
            let relabeled = variant.relabel(&perm);
            let flat = relabeled.flat_table().to_vec();
            if best.as_ref().is_none_or(|b| flat < *b) {
                best = Some(flat);
            }
        }
    }
    let table = best.expect("at least the identity permutation applies");
    FiniteSemigroup::from_flat(n, table)
}

/// Determined-triple consistency of a partial table: every triple whose
/// two bracketings are both defined must agree.
fn consistent(n: usize, table: &[Option<usize>]) -> bool {
    for a in 0..n {
        for b in 0..n {
            let Some(ab) = table[a * n + b] else { continue };
            for c in 0..n {
                let lhs = table[ab * n + c];
                let rhs = table[b * n + c].and_then(|bc| table[a * n + bc]);
                if let (Some(l), Some(r)) = (lhs, rhs) {
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Depth-first fill of the table, pruning inconsistent prefixes. The value
/// order at each cell comes from `orders`; `sink` returns `false` to stop
/// the search.
fn backtrack(
    n: usize,
    table: &mut [Option<usize>],
    pos: usize,
    orders: &[Vec<usize>],
    sink: &mut dyn FnMut(&[Option<usize>]) -> bool,
) -> bool {
    if pos == n * n {
        return sink(table);
    }
    for &v in &orders[pos] {
        table[pos] = Some(v);
        if consistent(n, table) && !backtrack(n, table, pos + 1, orders, sink) {
            return false;
        }
        table[pos] = None;
    }
    true
}

fn default_orders(n: usize) -> Vec<Vec<usize>> {
    vec![(0..n).collect(); n * n]
}

/// Every associative table of the given order, deduplicated as requested.
/// Results are sorted by flat table.
pub fn enumerate_semigroups(order: usize, dedup: Dedup) -> Result<Vec<FiniteSemigroup>> {
    if order == 0 {
        return Err(Error::EmptyTable);
    }
    if order > MAX_BACKTRACK_ORDER {
        return Err(Error::EnumerationBound {
            order,
            bound: MAX_BACKTRACK_ORDER,
        });
    }
    let mut tables: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut table = vec![None; order * order];
    let orders = default_orders(order);
    backtrack(order, &mut table, 0, &orders, &mut |t| {
        let flat: Vec<usize> = t.iter().map(|v| v.unwrap()).collect();
        let s = FiniteSemigroup::from_flat(order, flat).expect("search output is associative");
        let keep = match dedup {
            Dedup::None => s,
            Dedup::Iso => canonical_form(&s).unwrap(),
            Dedup::IsoAnti => canonical_form_with_opposite(&s).unwrap(),
        };
        tables.insert(keep.flat_table().to_vec());
        true
    });
    tables
        .into_iter()
        .map(|flat| FiniteSemigroup::from_flat(order, flat))
        .collect()
}

/// Deterministic sample of labeled semigroups: a depth-first search with
/// seeded value shuffles, collecting the first `count` completions. Fewer
/// may be returned when the order has fewer semigroups.
pub fn random_semigroups(order: usize, count: usize, seed: u64) -> Result<Vec<FiniteSemigroup>> {
    if order == 0 {
        return Err(Error::EmptyTable);
    }
    if order > MAX_RANDOM_ORDER {
        return Err(Error::EnumerationBound {
            order,
            bound: MAX_RANDOM_ORDER,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut orders = default_orders(order);
    for cell in orders.iter_mut() {
        cell.shuffle(&mut rng);
    }
    let mut out = Vec::new();
    let mut table = vec![None; order * order];
    backtrack(order, &mut table, 0, &orders, &mut |t| {
        let flat: Vec<usize> = t.iter().map(|v| v.unwrap()).collect();
        out.push(FiniteSemigroup::from_flat(order, flat).expect("search output is associative"));
        out.len() < count
    });
    Ok(out)
}

/// A stored enumeration result.
#[derive(Clone, Debug)]
pub struct EnumerationCache {
    pub order: usize,
    pub dedup: Dedup,
    pub semigroups: Vec<FiniteSemigroup>,
}

const CACHE_VERSION: &str = "semigroups v1";

/// The cache text: a header line, then one flat table per line.
pub fn cache_text(cache: &EnumerationCache) -> String {
    let mut out = format!("{CACHE_VERSION} n={} dedup={}\n", cache.order, cache.dedup);
    for s in &cache.semigroups {
        out.push_str(&s.to_line());
        out.push('\n');
    }
    out
}

pub fn cache_store(path: &Path, cache: &EnumerationCache) -> Result<()> {
    std::fs::write(path, cache_text(cache))?;
    Ok(())
}

/// Reads a cache back, revalidating every table, rejecting duplicates,
/// and checking canonicality when the header claims deduplication.
pub fn cache_load(path: &Path) -> Result<EnumerationCache> {
    let text = std::fs::read_to_string(path)?;
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Parse("empty cache".into()))?;
    let rest = header.strip_prefix(CACHE_VERSION).ok_or_else(|| Error::CacheVersion {
        found: header.split(" n=").next().unwrap_or(header).to_string(),
        expected: CACHE_VERSION.to_string(),
    })?;
    let mut order = None;
    let mut dedup = None;
    for field in rest.split_whitespace() {
        if let Some(n) = field.strip_prefix("n=") {
            order = Some(n.parse::<usize>().map_err(|_| Error::Parse(format!("bad order {n:?}")))?);
        } else if let Some(d) = field.strip_prefix("dedup=") {
            dedup = Some(d.parse::<Dedup>()?);
        } else {
            return Err(Error::Parse(format!("unknown header field {field:?}")));
        }
    }
    let order = order.ok_or_else(|| Error::Parse("header is missing n=".into()))?;
    let dedup = dedup.ok_or_else(|| Error::Parse("header is missing dedup=".into()))?;

    let mut seen = BTreeSet::new();
    let mut semigroups = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let entries: Vec<usize> = line
            .split_whitespace()
            .map(|tok| tok.parse().map_err(|_| Error::Parse(format!("line {}: bad entry {tok:?}", i + 2))))
            .collect::<Result<_>>()?;
        let s = FiniteSemigroup::from_flat(order, entries)?;
        if !seen.insert(s.flat_table().to_vec()) {
            return Err(Error::Parse(format!("line {}: duplicate table", i + 2)));
        }
        let canonical_ok = match dedup {
            Dedup::None => true,
            Dedup::Iso => canonical_form(&s)? == s,
            Dedup::IsoAnti => canonical_form_with_opposite(&s)? == s,
        };
        if !canonical_ok {
            return Err(Error::Parse(format!(
                "line {}: table is not canonical under dedup={dedup}",
                i + 2
            )));
        }
        semigroups.push(s);
    }
    Ok(EnumerationCache { order, dedup, semigroups })
}
