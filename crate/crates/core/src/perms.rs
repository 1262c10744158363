//! Permutations: co-inversions, the right weak order, Baxter patterns,
//! and the `/`, `\` concatenations.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::words::{parse_letters, write_letters};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Validates bijectivity on `{1..n}`.
    pub fn new(v: Vec<u32>) -> Option<Self> {
        let n = v.len();
        let mut seen = vec![false; n + 1];
        for &x in &v {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation(v))
    }

    pub(crate) fn from_vec_unchecked(v: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(v.clone()).is_some(), "not a permutation: {v:?}");
        Permutation(v)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    /// `n n-1 ... 1`
    pub fn reversal(n: usize) -> Self {
        Permutation((1..=n as u32).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// All permutations of size `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Permutation::identity(n).0;
        loop {
            out.push(Permutation(cur.clone()));
            if !next_permutation(&mut cur) {
                return out;
            }
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize - 1] = i as u32 + 1;
        }
        Permutation(inv)
    }

    /// 0-based positions of each value: `pos[v - 1]`.
    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            pos[x as usize - 1] = i;
        }
        pos
    }

    pub fn co_inversion_count(&self) -> usize {
        let s = &self.0;
        (0..s.len())
            .map(|i| (i + 1..s.len()).filter(|&j| s[i] > s[j]).count())
            .sum()
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Orders by size first, then lexicographically.
impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "ε");
        }
        write_letters(f, &self.0)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let v = parse_letters(s)?;
        Permutation::new(v).ok_or_else(|| Error::parse(s, 0, "not a permutation of {1..n}"))
    }
}

impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A co-inversion set stored as a strict upper-triangular boolean matrix
/// indexed by values: `get(i, j)` for `i < j` is true iff `j` comes before `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoInversions {
    n: usize,
    bits: Vec<bool>,
}

impl CoInversions {
    fn empty(n: usize) -> Self {
        CoInversions { n, bits: vec![false; n * n] }
    }

    /// Values are 1-based, `i < j`.
    pub fn get(&self, i: u32, j: u32) -> bool {
        self.bits[(i as usize - 1) * self.n + (j as usize - 1)]
    }

    fn set(&mut self, i: u32, j: u32, v: bool) {
        self.bits[(i as usize - 1) * self.n + (j as usize - 1)] = v;
    }

    pub fn pairs(&self) -> BTreeSet<(u32, u32)> {
        let n = self.n as u32;
        let mut out = BTreeSet::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.get(i, j) {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    pub fn is_subset(&self, other: &CoInversions) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }

    fn transitive_closure(&mut self) {
        // (i, j) and (j, k) with i < j < k give (i, k)
        let n = self.n as u32;
        loop {
            let mut changed = false;
            for i in 1..=n {
                for j in i + 1..=n {
                    if !self.get(i, j) {
                        continue;
                    }
                    for k in j + 1..=n {
                        if self.get(j, k) && !self.get(i, k) {
                            self.set(i, k, true);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return;
            }
        }
    }

    fn complement(&self) -> CoInversions {
        let n = self.n as u32;
        let mut out = CoInversions::empty(self.n);
        for i in 1..=n {
            for j in i + 1..=n {
                out.set(i, j, !self.get(i, j));
            }
        }
        out
    }

    /// The permutation with this co-inversion set, if the set is realizable.
    pub fn to_permutation(&self) -> Option<Permutation> {
        let n = self.n as u32;
        // number of values placed before v
        let mut pos = vec![0usize; self.n];
        for v in 1..=n {
            let before = (1..=n)
                .filter(|&w| w != v && comes_before(self, w, v))
                .count();
            pos[v as usize - 1] = before;
        }
        let mut out = vec![0u32; self.n];
        for (v, &p) in pos.iter().enumerate() {
            if out[p] != 0 {
                return None;
            }
            out[p] = v as u32 + 1;
        }
        let perm = Permutation(out);
        (co_inversions(&perm) == *self).then_some(perm)
    }
}

fn comes_before(c: &CoInversions, w: u32, v: u32) -> bool {
    if w < v {
        !c.get(w, v)
    } else {
        c.get(v, w)
    }
}

/// Pairs of values `i < j` with `j` before `i` in `σ`.
pub fn co_inversions(sigma: &Permutation) -> CoInversions {
    let n = sigma.len();
    let pos = sigma.positions();
    let mut c = CoInversions::empty(n);
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            if pos[i as usize - 1] > pos[j as usize - 1] {
                c.set(i, j, true);
            }
        }
    }
    c
}

/// Right weak order, decided by co-inversion inclusion.
pub fn permutohedron_leq(sigma: &Permutation, nu: &Permutation) -> bool {
    assert_eq!(sigma.len(), nu.len(), "permutohedron_leq: size mismatch");
    co_inversions(sigma).is_subset(&co_inversions(nu))
}

/// Permutations obtained by swapping one adjacent ascent.
pub fn permutohedron_covers(sigma: &Permutation) -> Vec<Permutation> {
    let s = sigma.as_slice();
    (0..s.len().saturating_sub(1))
        .filter(|&i| s[i] < s[i + 1])
        .map(|i| {
            let mut v = s.to_vec();
            v.swap(i, i + 1);
            Permutation(v)
        })
        .collect()
}

pub fn weak_order_join(sigma: &Permutation, nu: &Permutation) -> Permutation {
    assert_eq!(sigma.len(), nu.len(), "weak_order_join: size mismatch");
    let (a, b) = (co_inversions(sigma), co_inversions(nu));
    let mut u = CoInversions {
        n: a.n,
        bits: a.bits.iter().zip(&b.bits).map(|(&x, &y)| x || y).collect(),
    };
    u.transitive_closure();
    u.to_permutation().expect("closure of a union of co-inversion sets is realizable")
}

pub fn weak_order_meet(sigma: &Permutation, nu: &Permutation) -> Permutation {
    assert_eq!(sigma.len(), nu.len(), "weak_order_meet: size mismatch");
    let (a, b) = (co_inversions(sigma).complement(), co_inversions(nu).complement());
    let mut u = CoInversions {
        n: a.n,
        bits: a.bits.iter().zip(&b.bits).map(|(&x, &y)| x || y).collect(),
    };
    u.transitive_closure();
    u.complement()
        .to_permutation()
        .expect("closure of a union of non-inversion sets is realizable")
}

/// Avoids `2-41-3` and `3-14-2`.
pub fn is_baxter(sigma: &Permutation) -> bool {
    let s = sigma.as_slice();
    let n = s.len();
    for j in 1..n.saturating_sub(2) {
        let (b, c) = (s[j], s[j + 1]);
        // b, c adjacent; need i < j and l > j + 1
        let (lo, hi) = if b < c { (b, c) } else { (c, b) };
        for &x in &s[..j] {
            if x <= lo || x >= hi {
                continue;
            }
            for &y in &s[j + 2..] {
                if y <= lo || y >= hi {
                    continue;
                }
                // 2-41-3: b > c, x < y ; 3-14-2: b < c, x > y
                if (b > c && x < y) || (b < c && x > y) {
                    return false;
                }
            }
        }
    }
    true
}

/// `σ/ν`: σ followed by ν shifted by `|σ|`.
pub fn perm_over(sigma: &Permutation, nu: &Permutation) -> Permutation {
    let k = sigma.len() as u32;
    let mut v = sigma.0.clone();
    v.extend(nu.0.iter().map(|&x| x + k));
    Permutation(v)
}

/// `σ\ν`: ν shifted by `|σ|` followed by σ.
pub fn perm_under(sigma: &Permutation, nu: &Permutation) -> Permutation {
    let k = sigma.len() as u32;
    let mut v: Vec<u32> = nu.0.iter().map(|&x| x + k).collect();
    v.extend_from_slice(&sigma.0);
    Permutation(v)
}

/// No proper nonempty prefix is a permutation of `{1..k}`.
pub fn is_connected(sigma: &Permutation) -> bool {
    let mut max = 0;
    for (k, &x) in sigma.0.iter().enumerate().take(sigma.len().saturating_sub(1)) {
        max = max.max(x);
        if max as usize == k + 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_and_order() {
        assert_eq!(Permutation::all(0), vec![Permutation::identity(0)]);
        assert_eq!(Permutation::all(4).len(), 24);
        assert!(p("21") < p("123"));
        assert!(Permutation::new(vec![1, 1]).is_none());
        assert!("1243x".parse::<Permutation>().is_err());
        assert!("124".parse::<Permutation>().is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("2413").inverse(), p("3142"));
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
        assert_eq!(p("21").inverse(), p("21"));
    }

    #[test]
    fn co_inversion_examples() {
        assert_eq!(co_inversions(&p("312")).pairs(), BTreeSet::from([(1, 3), (2, 3)]));
        assert!(co_inversions(&Permutation::identity(4)).pairs().is_empty());
        assert_eq!(co_inversions(&Permutation::reversal(5)).pairs().len(), 10);
    }

    #[test]
    fn leq_examples() {
        assert!(permutohedron_leq(&p("123"), &p("321")));
        assert!(permutohedron_leq(&p("2413"), &p("2413")));
        assert!(!permutohedron_leq(&p("213"), &p("132")));
        assert!(!permutohedron_leq(&p("132"), &p("213")));
    }

    #[test]
    #[should_panic(expected = "size mismatch")]
    fn leq_size_mismatch() {
        permutohedron_leq(&p("12"), &p("123"));
    }

    #[test]
    fn cover_examples() {
        let c: HashSet<_> = permutohedron_covers(&p("123")).into_iter().collect();
        assert_eq!(c, HashSet::from([p("213"), p("132")]));
        assert!(permutohedron_covers(&p("321")).is_empty());
        assert_eq!(permutohedron_covers(&p("12")), vec![p("21")]);
    }

    #[test]
    fn join_meet_examples() {
        assert_eq!(weak_order_join(&p("2413"), &p("2413")), p("2413"));
        assert_eq!(weak_order_join(&p("213"), &p("132")), p("321"));
        assert_eq!(weak_order_meet(&p("213"), &p("132")), p("123"));
    }

    #[test]
    fn baxter_examples() {
        assert!(!is_baxter(&p("42173856")));
        assert!(is_baxter(&p("436975128")));
        assert!(!is_baxter(&p("2413")));
        assert!(!is_baxter(&p("3142")));
        assert!(is_baxter(&p("2143")));
    }

    #[test]
    fn over_under_examples() {
        assert_eq!(perm_over(&p("312"), &p("2314")), p("3125647"));
        assert_eq!(perm_under(&p("312"), &p("2314")), p("5647312"));
        assert_eq!(perm_over(&Permutation::identity(0), &p("21")), p("21"));
    }

    #[test]
    fn connected_examples() {
        assert!(!is_connected(&p("12")));
        assert!(is_connected(&p("21")));
        assert!(is_connected(&p("2413")));
        assert!(is_connected(&p("1")));
    }

    /// Reflexive-transitive closure of the cover relation, by search.
    fn cover_closure_leq(a: &Permutation, b: &Permutation) -> bool {
        let mut seen = HashSet::from([a.clone()]);
        let mut stack = vec![a.clone()];
        while let Some(x) = stack.pop() {
            if &x == b {
                return true;
            }
            for y in permutohedron_covers(&x) {
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        false
    }

    #[test]
    fn inclusion_order_matches_cover_closure() {
        for n in 0..=5 {
            let all = Permutation::all(n);
            for a in &all {
                for b in &all {
                    assert_eq!(permutohedron_leq(a, b), cover_closure_leq(a, b), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn join_meet_are_brute_force_bounds() {
        for n in 0..=5 {
            let all = Permutation::all(n);
            let co: Vec<_> = all.iter().map(co_inversions).collect();
            let leq = |i: usize, j: usize| co[i].is_subset(&co[j]);
            for i in 0..all.len() {
                for j in 0..all.len() {
                    let ub: Vec<usize> = (0..all.len()).filter(|&k| leq(i, k) && leq(j, k)).collect();
                    let lub = ub.iter().copied().find(|&k| ub.iter().all(|&m| leq(k, m))).unwrap();
                    let lb: Vec<usize> = (0..all.len()).filter(|&k| leq(k, i) && leq(k, j)).collect();
                    let glb = lb.iter().copied().find(|&k| lb.iter().all(|&m| leq(m, k))).unwrap();
                    assert_eq!(weak_order_join(&all[i], &all[j]), all[lub]);
                    assert_eq!(weak_order_meet(&all[i], &all[j]), all[glb]);
                }
            }
        }
    }

    #[test]
    fn lattice_axioms_on_s4() {
        let all = Permutation::all(4);
        for a in &all {
            assert_eq!(weak_order_meet(a, a), *a);
            for b in &all {
                assert_eq!(weak_order_join(a, b), weak_order_join(b, a));
                assert_eq!(weak_order_meet(a, &weak_order_join(a, b)), *a);
                assert_eq!(weak_order_join(a, &weak_order_meet(a, b)), *a);
                for c in &all {
                    assert_eq!(
                        weak_order_join(a, &weak_order_join(b, c)),
                        weak_order_join(&weak_order_join(a, b), c)
                    );
                    assert_eq!(
                        weak_order_meet(a, &weak_order_meet(b, c)),
                        weak_order_meet(&weak_order_meet(a, b), c)
                    );
                }
            }
        }
    }

    /// Literal definition: some 4-letter subword with its middle letters
    /// adjacent standardizes to 2413 or 3142.
    fn is_baxter_oracle(s: &Permutation) -> bool {
        let v = s.as_slice();
        let n = v.len();
        for i in 0..n {
            for j in i + 1..n {
                let k = j + 1;
                for l in k + 1..n {
                    if k >= n {
                        continue;
                    }
                    let st = crate::words::standardize(&[v[i], v[j], v[k], v[l]]);
                    if st == p("2413") || st == p("3142") {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn baxter_counts_and_inverse_symmetry() {
        let expected = [1usize, 1, 2, 6, 22, 92, 422, 2074];
        for (n, &want) in expected.iter().enumerate() {
            let all = Permutation::all(n);
            let count = all.iter().filter(|s| is_baxter(s)).count();
            assert_eq!(count, want, "n = {n}");
            for s in &all {
                assert_eq!(is_baxter(s), is_baxter(&s.inverse()), "{s}");
                if n <= 6 {
                    assert_eq!(is_baxter(s), is_baxter_oracle(s), "{s}");
                }
            }
        }
    }
}
