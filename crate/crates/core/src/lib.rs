//! A workbench for finite semigroups and their fuzzy subsystems.
//!
//! Semigroups are multiplication tables over elements `0..n`. Fuzzy
//! subsets grade elements on a finite chain `{0, 1/k, ..., 1}` and come
//! with the usual notions of fuzzy subsemigroup, one-sided ideal, and
//! quasi-ideal. The [`correspondence`] module links fuzzy subsets of `S`
//! to regions of the product of `S` with the chain, and [`verify`] sweeps
//! whole corpora of small semigroups checking that the classical
//! equivalences hold condition by condition.
//!
//! ```
//! use fuzzy_semigroups::{FiniteSemigroup, FuzzySubset, ValueChain};
//!
//! // The two-element left zero semigroup: a * b = a.
//! let s = FiniteSemigroup::from_table(&[vec![0, 0], vec![1, 1]])?;
//! assert!(s.is_regular());
//!
//! // Grade element 0 fully and element 1 halfway on a two-step chain.
//! let chain = ValueChain::new(2)?;
//! let f = FuzzySubset::new(chain, vec![2, 1])?;
//! assert!(f.is_fuzzy_quasi_ideal(&s));
//! assert!(!f.is_fuzzy_left_ideal(&s));
//! # Ok::<(), fuzzy_semigroups::Error>(())
//! ```

pub mod chain;
pub mod congruence;
pub mod correspondence;
pub mod enumeration;
pub mod error;
pub mod fuzzy;
pub mod semigroup;
pub mod verify;

pub use chain::ValueChain;
pub use congruence::{Congruence, Decomposition, SemilatticeDecomposition};
pub use correspondence::{BijectionReport, LevelDecomposition, ProductRegion};
pub use enumeration::{CatalogSpec, Dedup, EnumerationCache};
pub use error::{Error, Result};
pub use fuzzy::{FuzzyFilter, FuzzySubset};
pub use semigroup::{ChainProduct, ElementSubset, FiniteSemigroup};
pub use verify::{
    Budgets, ChainChoice, CorpusItem, SuiteReport, TheoremId, TheoremVerdict, ALL_THEOREMS,
};
