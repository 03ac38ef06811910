//! Integer partitions and the canonical ordering used for basis transitions.
//!
//! Partitions index every symmetric-function basis in this crate. The total
//! order implemented by [`Ord`] on [`Partition`] sorts first by size, then
//! lexicographically ascending on the weakly decreasing part tuples, so
//! partitions of smaller numbers come first and a strict refinement always
//! precedes the partition it refines. That property is what makes the
//! `m̄̃ → p̄` transition matrix unit upper triangular.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A weakly decreasing sequence of positive integers.
///
/// The empty partition is valid and is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Size `|λ|`: the sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length `ℓ(λ)`: the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn max_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Multiplicity view: map from part size `j` to the number of parts equal to `j`.
    pub fn multiplicity_view(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Rebuilds a partition from a multiplicity map; inverse of [`Self::multiplicity_view`].
    pub fn from_multiplicities(mults: &BTreeMap<usize, usize>) -> Self {
        let mut parts = Vec::new();
        for (&j, &count) in mults.iter().rev() {
            assert!(j > 0, "part sizes must be positive");
            parts.extend(std::iter::repeat_n(j, count));
        }
        Partition { parts }
    }

    /// Number of parts equal to `j`.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.parts.iter().filter(|&&p| p == j).count()
    }

    /// Concatenates the parts of two partitions (the partition of `p̄_λ · p̄_μ`).
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// True iff the parts of `self` can be grouped into blocks whose sums are
    /// exactly the parts of `coarser`. Requires equal sizes; every partition
    /// refines itself. Exhaustive backtracking, adequate at desk scale.
    pub fn is_refinement_of(&self, coarser: &Partition) -> bool {
        if self.size() != coarser.size() {
            return false;
        }
        if self.len() < coarser.len() {
            return false;
        }
        let mut remaining: Vec<usize> = coarser.parts.clone();
        fits(&self.parts, 0, &mut remaining)
    }
}

/// Places `parts[idx..]` (weakly decreasing) into the remaining capacities.
fn fits(parts: &[usize], idx: usize, remaining: &mut Vec<usize>) -> bool {
    if idx == parts.len() {
        return remaining.iter().all(|&r| r == 0);
    }
    let p = parts[idx];
    let mut tried = Vec::new();
    for slot in 0..remaining.len() {
        let cap = remaining[slot];
        if cap < p || tried.contains(&cap) {
            continue;
        }
        tried.push(cap);
        remaining[slot] -= p;
        if fits(parts, idx + 1, remaining) {
            remaining[slot] += p;
            return true;
        }
        remaining[slot] += p;
    }
    false
}

/// Free-function form of the canonical total order (size ascending, then
/// lexicographic ascending on the decreasing part tuples).
pub fn partition_compare(a: &Partition, b: &Partition) -> Ordering {
    a.cmp(b)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All partitions of `n`, each exactly once, in the canonical order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    gen_descending(n, n, &mut current, &mut out);
    out.reverse();
    out
}

fn gen_descending(n: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for p in (1..=n.min(max_part)).rev() {
        current.push(p);
        gen_descending(n - p, p, current, out);
        current.pop();
    }
}

/// All partitions of every size in `0..=max_size`, in the canonical order.
pub fn partitions_up_to(max_size: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions_of).collect()
}

impl fmt::Display for Partition {
    /// Parts joined without separators when all parts are single digits
    /// (`"3321"`), comma-separated otherwise (`"12,3,1"`); empty is `"()"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let sep = if self.parts.iter().all(|&p| p <= 9) { "" } else { "," };
        let rendered: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", rendered.join(sep))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        if parts.contains(&0) {
            return Err(D::Error::custom("partition parts must be positive"));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(D::Error::custom("partition parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }
}
