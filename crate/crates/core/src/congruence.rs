//! Congruences, quotients, and semilattice decompositions.

use crate::error::{Error, Result};
use crate::semigroup::{ElementSubset, FiniteSemigroup};

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            // path halving
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when the two classes were distinct.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (hi, lo) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[lo] = hi;
        true
    }
}

/// A partition of the elements compatible with the product on both sides.
///
/// Class labels are normalized by first occurrence: element 0 lies in class
/// 0, and labels increase in the order new classes appear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    class_of: Vec<usize>,
    classes: Vec<ElementSubset>,
}

impl Congruence {
    /// Validates compatibility of the partition described by `labels`
    /// (`labels[a]` names the class of `a`; any label values work, they are
    /// normalized).
    pub fn new(s: &FiniteSemigroup, labels: &[usize]) -> Result<Self> {
        if labels.len() != s.order() {
            return Err(Error::OrderMismatch {
                values: labels.len(),
                order: s.order(),
            });
        }
        let c = Self::from_labels_unchecked(labels);
        for a in s.elements() {
            for b in a + 1..s.order() {
                if c.class_of[a] != c.class_of[b] {
                    continue;
                }
                for x in s.elements() {
                    if c.class_of[s.mul(x, a)] != c.class_of[s.mul(x, b)]
                        || c.class_of[s.mul(a, x)] != c.class_of[s.mul(b, x)]
                    {
                        return Err(Error::NotCongruence { a, b, c: x });
                    }
                }
            }
        }
        Ok(c)
    }

    fn from_labels_unchecked(labels: &[usize]) -> Self {
        let mut remap = vec![usize::MAX; labels.len()];
        let mut class_of = Vec::with_capacity(labels.len());
        let mut next = 0;
        for &raw in labels {
            if remap[raw] == usize::MAX {
                remap[raw] = next;
                next += 1;
            }
            class_of.push(remap[raw]);
        }
        let mut classes = vec![ElementSubset::empty(); next];
        for (element, &class) in class_of.iter().enumerate() {
            classes[class].insert(element);
        }
        Congruence { class_of, classes }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_labels_unchecked(&(0..n).collect::<Vec<_>>())
    }

    pub fn universal(n: usize) -> Self {
        Self::from_labels_unchecked(&vec![0; n])
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[ElementSubset] {
        &self.classes
    }

    pub fn is_identity(&self) -> bool {
        self.classes.len() == self.class_of.len()
    }

    pub fn is_universal(&self) -> bool {
        self.classes.len() == 1
    }
}

/// The smallest congruence containing the given pairs: the union-find
/// closure under left and right translation, run to a fixpoint.
pub fn generated_congruence(s: &FiniteSemigroup, pairs: &[(usize, usize)]) -> Result<Congruence> {
    let n = s.order();
    for &(a, b) in pairs {
        for element in [a, b] {
            if element >= n {
                return Err(Error::ElementOutOfRange { element, order: n });
            }
        }
    }
    let mut uf = UnionFind::new(n);
    for &(a, b) in pairs {
        uf.union(a, b);
    }
    loop {
        let mut changed = false;
        for a in 0..n {
            for b in a + 1..n {
                if uf.find(a) != uf.find(b) {
                    continue;
                }
                for c in 0..n {
                    changed |= uf.union(s.mul(c, a), s.mul(c, b));
                    changed |= uf.union(s.mul(a, c), s.mul(b, c));
                }
            }
        }
        if !changed {
            break;
        }
    }
    let labels: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    let c = Congruence::from_labels_unchecked(&labels);
    debug_assert!(Congruence::new(s, &labels).is_ok());
    Ok(c)
}

/// The least congruence whose quotient is a semilattice, generated by
/// `a ~ a*a` and `a*b ~ b*a`.
pub fn least_semilattice_congruence(s: &FiniteSemigroup) -> Congruence {
    let mut pairs = Vec::new();
    for a in s.elements() {
        pairs.push((a, s.mul(a, a)));
        for b in s.elements() {
            pairs.push((s.mul(a, b), s.mul(b, a)));
        }
    }
    let c = generated_congruence(s, &pairs).expect("generator pairs are in range");
    let (q, _) = quotient(s, &c);
    assert!(
        q.is_semilattice(),
        "closure bug: quotient by the generated congruence is not a semilattice"
    );
    c
}

/// The quotient semigroup and the element-to-class map.
pub fn quotient(s: &FiniteSemigroup, c: &Congruence) -> (FiniteSemigroup, Vec<usize>) {
    let m = c.num_classes();
    let reps: Vec<usize> = c
        .classes()
        .iter()
        .map(|class| class.iter().next().expect("classes are nonempty"))
        .collect();
    let mut table = vec![0usize; m * m];
    for i in 0..m {
        for j in 0..m {
            table[i * m + j] = c.class_of(s.mul(reps[i], reps[j]));
        }
    }
    let q = FiniteSemigroup::from_flat(m, table).expect("quotient of a congruence is associative");
    (q, c.class_of.clone())
}

/// A partition of a host semigroup into subsemigroup blocks indexed by a
/// semilattice, with block products landing in the block of the index
/// product.
#[derive(Clone, Debug)]
pub struct Decomposition {
    index: FiniteSemigroup,
    blocks: Vec<ElementSubset>,
    host_order: usize,
}

impl Decomposition {
    /// Validates that `blocks[y]` partition the host, that each block is a
    /// subsemigroup, that the index is a semilattice, and that
    /// `block(y) * block(z)` lands inside `block(y * z)`.
    pub fn new(
        host: &FiniteSemigroup,
        index: FiniteSemigroup,
        blocks: Vec<ElementSubset>,
    ) -> Result<Self> {
        if !index.is_semilattice() {
            return Err(Error::NotSemilattice);
        }
        if blocks.len() != index.order() {
            return Err(Error::FamilyMismatch {
                family: blocks.len(),
                index: index.order(),
            });
        }
        let mut seen = ElementSubset::empty();
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::EmptySubset);
            }
            if !block.intersect(seen).is_empty() {
                return Err(Error::TheoremViolation("blocks overlap".into()));
            }
            seen = seen.union(*block);
        }
        if seen != host.universe() {
            return Err(Error::TheoremViolation(format!(
                "blocks cover {seen} instead of the whole host"
            )));
        }
        for (y, a) in blocks.iter().enumerate() {
            for (z, b) in blocks.iter().enumerate() {
                let product = host.subset_product(*a, *b);
                let target = blocks[index.mul(y, z)];
                if !product.is_subset_of(target) {
                    return Err(Error::TheoremViolation(format!(
                        "block {y} * block {z} = {product} escapes block {}",
                        index.mul(y, z)
                    )));
                }
            }
        }
        Ok(Decomposition {
            index,
            blocks,
            host_order: host.order(),
        })
    }

    pub fn index(&self) -> &FiniteSemigroup {
        &self.index
    }

    pub fn blocks(&self) -> &[ElementSubset] {
        &self.blocks
    }

    pub fn host_order(&self) -> usize {
        self.host_order
    }

    pub fn block_of(&self, element: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(element))
            .expect("blocks partition the host")
    }
}

/// The decomposition of a semigroup along its least semilattice congruence,
/// with per-block structure flags.
#[derive(Clone, Debug)]
pub struct SemilatticeDecomposition {
    pub congruence: Congruence,
    pub decomposition: Decomposition,
    pub block_left_simple: Vec<bool>,
    pub block_completely_simple: Vec<bool>,
}

impl SemilatticeDecomposition {
    pub fn is_semilattice_of_left_simple(&self) -> bool {
        self.block_left_simple.iter().all(|&b| b)
    }

    pub fn is_semilattice_of_completely_simple(&self) -> bool {
        self.block_completely_simple.iter().all(|&b| b)
    }
}

/// Decomposes along the least semilattice congruence and records, per
/// block, whether the block is left simple and completely simple.
pub fn semilattice_decomposition(s: &FiniteSemigroup) -> SemilatticeDecomposition {
    let congruence = least_semilattice_congruence(s);
    let (index, _) = quotient(s, &congruence);
    let blocks = congruence.classes().to_vec();
    let decomposition =
        Decomposition::new(s, index, blocks).expect("congruence classes decompose the host");
    let mut block_left_simple = Vec::new();
    let mut block_completely_simple = Vec::new();
    for block in decomposition.blocks() {
        let (sub, _) = s
            .restriction(*block)
            .expect("congruence classes are closed");
        block_left_simple.push(sub.is_left_simple());
        block_completely_simple.push(sub.is_completely_simple());
    }
    SemilatticeDecomposition {
        congruence,
        decomposition,
        block_left_simple,
        block_completely_simple,
    }
}

/// All partitions of `0..n` as restricted-growth label vectors.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    fn grow(labels: &mut Vec<usize>, pos: usize, max_used: usize, out: &mut Vec<Vec<usize>>) {
        if pos == labels.len() {
            out.push(labels.clone());
            return;
        }
        for label in 0..=max_used + 1 {
            labels[pos] = label;
            grow(labels, pos + 1, max_used.max(label), out);
        }
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    grow(&mut labels, 1, 0, &mut out);
    out
}

/// Every congruence of `s` whose quotient is a semilattice.
pub fn semilattice_congruences(s: &FiniteSemigroup) -> Vec<Congruence> {
    let mut out = Vec::new();
    for labels in set_partitions(s.order()) {
        let Ok(c) = Congruence::new(s, &labels) else {
            continue;
        };
        let (q, _) = quotient(s, &c);
        if q.is_semilattice() {
            out.push(c);
        }
    }
    out
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

    #[test]
    fn congruence_validation() {
        // Merging {0, 1} in the two-element chain is a congruence.
        assert!(Congruence::new(&chain2(), &[0, 0]).is_ok());
        // The identity partition always is.
        assert!(Congruence::new(&chain2(), &[0, 1]).is_ok());
    }

    #[test]
    fn incompatible_partition_is_rejected() {
        // Order-3 chain semilattice; merging the top two elements only
        // breaks translation by the bottom... it does not, so use a
        // partition separating a product from its class instead.
        let s = FiniteSemigroup::from_table(&[vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]])
            .unwrap();
        // {0, 2} {1}: 2*1 = 1 but 0*1 = 0 splits the pair (0, 2).
        let err = Congruence::new(&s, &[0, 1, 0]).unwrap_err();
        assert!(matches!(err, Error::NotCongruence { .. }));
    }

    #[test]
    fn generated_congruence_of_group_pair_is_universal() {
        let c = generated_congruence(&z2(), &[(1, 0)]).unwrap();
        assert!(c.is_universal());
    }

    #[test]
    fn generated_congruence_of_no_pairs_is_identity() {
        let c = generated_congruence(&z2(), &[]).unwrap();
        assert!(c.is_identity());
    }

    #[test]
    fn least_semilattice_congruences() {
        assert!(least_semilattice_congruence(&lz2()).is_universal());
        assert!(least_semilattice_congruence(&rz2()).is_universal());
        assert!(least_semilattice_congruence(&z2()).is_universal());
        assert!(least_semilattice_congruence(&null2()).is_universal());
        assert!(least_semilattice_congruence(&chain2()).is_identity());
    }

    #[test]
    fn quotient_of_universal_is_trivial() {
        let c = Congruence::universal(2);
        let (q, map) = quotient(&z2(), &c);
        assert_eq!(q.order(), 1);
        assert_eq!(map, vec![0, 0]);
    }

    #[test]
    fn decomposition_flags() {
        let d = semilattice_decomposition(&chain2());
        assert_eq!(d.decomposition.blocks().len(), 2);
        assert!(d.is_semilattice_of_left_simple());
        assert!(d.is_semilattice_of_completely_simple());

        let d = semilattice_decomposition(&lz2());
        assert_eq!(d.decomposition.blocks().len(), 1);
        assert!(d.is_semilattice_of_left_simple());

        // The null semigroup collapses to one block that is not left simple.
        let d = semilattice_decomposition(&null2());
        assert_eq!(d.decomposition.blocks().len(), 1);
        assert!(!d.is_semilattice_of_left_simple());

        // Right-zero: one block, left simplicity fails, complete simplicity
        // holds.
        let d = semilattice_decomposition(&rz2());
        assert!(!d.is_semilattice_of_left_simple());
        assert!(d.is_semilattice_of_completely_simple());
    }

    #[test]
    fn partition_counts_are_bell_numbers() {
        assert_eq!(set_partitions(1).len(), 1);
        assert_eq!(set_partitions(2).len(), 2);
        assert_eq!(set_partitions(3).len(), 5);
        assert_eq!(set_partitions(4).len(), 15);
        assert_eq!(set_partitions(5).len(), 52);
    }

    #[test]
    fn semilattice_congruences_of_chain() {
        // Both partitions of the two-chain give semilattice quotients.
        assert_eq!(semilattice_congruences(&chain2()).len(), 2);
        // For the two-element group only the collapse does.
        assert_eq!(semilattice_congruences(&z2()).len(), 1);
    }

    #[test]
    fn decomposition_rejects_bad_blocks() {
        let s = chain2();
        let index = FiniteSemigroup::from_table(&[vec![0]]).unwrap();
        // One block misses element 1.
        let blocks = vec![ElementSubset::from_indices(2, [0]).unwrap()];
        assert!(Decomposition::new(&s, index, blocks).is_err());
    }
}
