//! Finite chains of membership grades.
//!
//! Grades live on an integer chain `0..=k` ordered by `<=`; `0` is "not a
//! member" and `k` is full membership. Arithmetic never leaves the chain:
//! meet is `min`, join is `max`, and suprema over finite sets are attained,
//! so every computation is exact.

use crate::error::{Error, Result};

/// The chain `{0, 1, ..., k}` of membership grades, `k >= 1`.
///
/// The level `i` stands for the fraction `i/k`; fractions appear only when
/// formatting, all computation stays on the integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ValueChain {
    resolution: usize,
}

impl ValueChain {
    pub fn new(resolution: usize) -> Result<Self> {
        if resolution == 0 {
            return Err(Error::ZeroResolution);
        }
        Ok(ValueChain { resolution })
    }

    /// Number of steps `k`; the chain has `k + 1` levels.
    pub fn resolution(&self) -> usize {
        self.resolution
    }

    /// The top level `k` (full membership).
    pub fn top(&self) -> usize {
        self.resolution
    }

    pub fn contains(&self, level: usize) -> bool {
        level <= self.resolution
    }

    /// All levels, bottom to top.
    pub fn levels(&self) -> std::ops::RangeInclusive<usize> {
        0..=self.resolution
    }

    /// The nonzero levels `1..=k`.
    pub fn positive_levels(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.resolution
    }

    /// Greatest lower bound, i.e. `min`.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        debug_assert!(self.contains(a) && self.contains(b));
        a.min(b)
    }

    /// Least upper bound, i.e. `max`.
    pub fn join(&self, a: usize, b: usize) -> usize {
        debug_assert!(self.contains(a) && self.contains(b));
        a.max(b)
    }

    /// The exact fraction `level / k` as a numerator/denominator pair.
    pub fn label(&self, level: usize) -> (usize, usize) {
        debug_assert!(self.contains(level));
        (level, self.resolution)
    }

    pub fn format_label(&self, level: usize) -> String {
        format!("{}/{}", level, self.resolution)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_resolution() {
        assert!(matches!(ValueChain::new(0), Err(Error::ZeroResolution)));
    }

    #[test]
    fn meet_and_join_are_min_and_max() {
        let chain = ValueChain::new(3).unwrap();
        assert_eq!(chain.meet(1, 2), 1);
        assert_eq!(chain.join(1, 2), 2);
        assert_eq!(chain.meet(3, 3), 3);
        assert_eq!(chain.top(), 3);
    }

    #[test]
    fn labels_are_exact_fractions() {
        let chain = ValueChain::new(4).unwrap();
        assert_eq!(chain.label(3), (3, 4));
        assert_eq!(chain.format_label(0), "0/4");
        assert_eq!(chain.format_label(4), "4/4");
    }

    #[test]
    fn positive_levels_skip_zero() {
        let chain = ValueChain::new(2).unwrap();
        let levels: Vec<usize> = chain.positive_levels().collect();
        assert_eq!(levels, vec![1, 2]);
    }
}
