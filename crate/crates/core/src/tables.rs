//! Per-degree tables of Baxter classes of permutations, built once and
//! shared across threads.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::insertion::TwinPair;
use crate::par;
use crate::perms::Permutation;

/// Largest degree for which full `S_n` tables may be built.
pub const MAX_TABLE_DEGREE: usize = 9;

pub struct DegreeTable {
    pub n: usize,
    /// Twin pairs of size `n`, sorted.
    pub pairs: Vec<TwinPair>,
    pub class: HashMap<TwinPair, Vec<Permutation>>,
    pub pair_of: HashMap<Permutation, TwinPair>,
}

impl DegreeTable {
    /// Builds the table directly, without caching.
    pub fn build(n: usize) -> Self {
        let perms = Permutation::all(n);
        let keys = par::map(&perms, TwinPair::of_permutation);
        let mut class: HashMap<TwinPair, Vec<Permutation>> = HashMap::new();
        let mut pair_of = HashMap::with_capacity(perms.len());
        for (s, j) in perms.into_iter().zip(keys) {
            class.entry(j.clone()).or_default().push(s.clone());
            pair_of.insert(s, j);
        }
        let mut pairs: Vec<TwinPair> = class.keys().cloned().collect();
        pairs.sort();
        DegreeTable { n, pairs, class, pair_of }
    }

    pub fn class_of(&self, pair: &TwinPair) -> &[Permutation] {
        &self.class[pair]
    }

    pub fn pair_of(&self, sigma: &Permutation) -> &TwinPair {
        &self.pair_of[sigma]
    }
}

static TABLES: [OnceLock<DegreeTable>; MAX_TABLE_DEGREE + 1] = [const { OnceLock::new() }; MAX_TABLE_DEGREE + 1];

/// The cached table for degree `n`.
pub fn degree(n: usize) -> &'static DegreeTable {
    assert!(n <= MAX_TABLE_DEGREE, "degree {n} exceeds the table bound {MAX_TABLE_DEGREE}");
    TABLES[n].get_or_init(|| DegreeTable::build(n))
}

/// Twin pair of a permutation, through the cache when in range.
pub fn pair_of(sigma: &Permutation) -> TwinPair {
    if sigma.len() <= MAX_TABLE_DEGREE && TABLES[sigma.len()].get().is_some() {
        degree(sigma.len()).pair_of(sigma).clone()
    } else {
        TwinPair::of_permutation(sigma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let expected = [1usize, 1, 2, 6, 22, 92, 422, 2074];
        for (n, &b) in expected.iter().enumerate() {
            let t = degree(n);
            assert_eq!(t.pairs.len(), b);
            assert_eq!(t.class.values().map(Vec::len).sum::<usize>(), (1..=n).product::<usize>());
        }
    }
}
