//! The Baxter lattice on twin pairs.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::Serialize;

use crate::insertion::{is_twin, max_perm, min_perm, TwinPair};
use crate::par;
use crate::perms::{weak_order_join, weak_order_meet};
use crate::trees::{canopy, tamari_vector, try_left_rotate, try_right_rotate, BinaryTree};

/// All twin pairs of size `n`, sorted.
pub fn enumerate_tbt(n: usize) -> Vec<TwinPair> {
    if n == 0 {
        return vec![TwinPair::empty()];
    }
    let mut by_canopy: BTreeMap<Vec<u8>, Vec<BinaryTree>> = BTreeMap::new();
    for t in BinaryTree::all(n) {
        by_canopy.entry(canopy(&t)).or_default().push(t);
    }
    let mut out = Vec::new();
    for (c, lefts) in &by_canopy {
        let twin: Vec<u8> = c.iter().map(|b| 1 - b).collect();
        if let Some(rights) = by_canopy.get(&twin) {
            for l in lefts {
                for r in rights {
                    out.push(TwinPair::new(l.clone(), r.clone()).expect("complementary canopies"));
                }
            }
        }
    }
    out.sort();
    out
}

pub fn baxter_leq(j0: &TwinPair, j1: &TwinPair) -> bool {
    assert_eq!(j0.size(), j1.size(), "baxter_leq: size mismatch");
    let ge = |a: &BinaryTree, b: &BinaryTree| tamari_vector(a).iter().zip(tamari_vector(b)).all(|(x, y)| *x >= y);
    ge(j0.left(), j1.left()) && ge(j1.right(), j0.right())
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverCase {
    LeftOnly,
    RightOnly,
    Simultaneous,
}

impl CoverCase {
    pub fn name(self) -> &'static str {
        match self {
            CoverCase::LeftOnly => "left-only",
            CoverCase::RightOnly => "right-only",
            CoverCase::Simultaneous => "simultaneous",
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PairCover {
    pub target: TwinPair,
    pub case: CoverCase,
}

/// Upper covers of `j`, sorted by target.
pub fn baxter_covers(j: &TwinPair) -> Vec<PairCover> {
    let n = j.size();
    if n == 0 {
        return Vec::new();
    }
    let (cl, cr) = (canopy(j.left()), canopy(j.right()));
    let mut out = Vec::new();
    for i in 1..=n {
        if let Some(tl) = try_left_rotate(j.left(), i) {
            if canopy(&tl) == cl {
                out.push(PairCover {
                    target: TwinPair::new(tl, j.right().clone()).expect("canopy preserved"),
                    case: CoverCase::LeftOnly,
                });
            } else {
                let partners: Vec<BinaryTree> = (1..=n)
                    .filter_map(|k| try_right_rotate(j.right(), k))
                    .filter(|tr| is_twin(&tl, tr))
                    .collect();
                assert!(partners.len() <= 1, "simultaneous cover of {j} at node {i}: {} partners", partners.len());
                if let Some(tr) = partners.into_iter().next() {
                    out.push(PairCover {
                        target: TwinPair::new(tl, tr).unwrap(),
                        case: CoverCase::Simultaneous,
                    });
                }
            }
        }
        if let Some(tr) = try_right_rotate(j.right(), i) {
            if canopy(&tr) == cr {
                out.push(PairCover {
                    target: TwinPair::new(j.left().clone(), tr).expect("canopy preserved"),
                    case: CoverCase::RightOnly,
                });
            }
        }
    }
    out.sort();
    out
}

/// Meet, projected from the permutohedron meet of the class minima.
pub fn baxter_meet(j0: &TwinPair, j1: &TwinPair) -> TwinPair {
    assert_eq!(j0.size(), j1.size(), "baxter_meet: size mismatch");
    TwinPair::of_permutation(&weak_order_meet(&min_perm(j0), &min_perm(j1)))
}

/// Join, projected from the permutohedron join of the class maxima.
pub fn baxter_join(j0: &TwinPair, j1: &TwinPair) -> TwinPair {
    assert_eq!(j0.size(), j1.size(), "baxter_join: size mismatch");
    TwinPair::of_permutation(&weak_order_join(&max_perm(j0), &max_perm(j1)))
}

pub fn bottom(n: usize) -> TwinPair {
    TwinPair::new(BinaryTree::right_comb(n), BinaryTree::left_comb(n)).unwrap()
}

pub fn top(n: usize) -> TwinPair {
    TwinPair::new(BinaryTree::left_comb(n), BinaryTree::right_comb(n)).unwrap()
}

/// Pairs of one size in a fixed linear extension of `≤_B`, with the
/// order relation precomputed.
pub struct OrderTable {
    pub pairs: Vec<TwinPair>,
    pub index: HashMap<TwinPair, usize>,
    /// `above[i]`: indices `k` with `pairs[i] ≤_B pairs[k]`, ascending.
    pub above: Vec<Vec<usize>>,
    /// `below[i]`: indices `k` with `pairs[k] ≤_B pairs[i]`, ascending.
    pub below: Vec<Vec<usize>>,
}

impl OrderTable {
    pub fn build(n: usize) -> Self {
        let mut keyed: Vec<(i64, TwinPair)> = enumerate_tbt(n)
            .into_iter()
            .map(|j| {
                let s = |t: &BinaryTree| tamari_vector(t).iter().sum::<usize>() as i64;
                (s(j.right()) - s(j.left()), j)
            })
            .collect();
        keyed.sort();
        let pairs: Vec<TwinPair> = keyed.into_iter().map(|(_, j)| j).collect();
        let vectors: Vec<(Vec<usize>, Vec<usize>)> =
            pairs.iter().map(|j| (tamari_vector(j.left()), tamari_vector(j.right()))).collect();
        let leq = |a: usize, b: usize| {
            let (la, ra) = &vectors[a];
            let (lb, rb) = &vectors[b];
            la.iter().zip(lb).all(|(x, y)| x >= y) && ra.iter().zip(rb).all(|(x, y)| x <= y)
        };
        let m = pairs.len();
        let above = par::map_range(0..m, |i| (i..m).filter(|&k| leq(i, k)).collect::<Vec<_>>());
        let below = par::map_range(0..m, |i| (0..=i).filter(|&k| leq(k, i)).collect::<Vec<_>>());
        let index = pairs.iter().cloned().enumerate().map(|(i, j)| (j, i)).collect();
        OrderTable { pairs, index, above, below }
    }
}

const CACHED_ORDERS: usize = 8;
static ORDERS: [OnceLock<OrderTable>; CACHED_ORDERS] = [const { OnceLock::new() }; CACHED_ORDERS];

/// Cached order table for size `n` (`n < 8`).
pub fn order_table(n: usize) -> &'static OrderTable {
    assert!(n < CACHED_ORDERS, "order table for size {n} is beyond the cache bound");
    ORDERS[n].get_or_init(|| OrderTable::build(n))
}

pub struct Hasse {
    pub vertices: Vec<TwinPair>,
    pub edges: Vec<(TwinPair, PairCover)>,
}

pub fn hasse(n: usize) -> Hasse {
    let vertices = enumerate_tbt(n);
    let covers = par::map(&vertices, baxter_covers);
    let edges = vertices
        .iter()
        .zip(covers)
        .flat_map(|(j, cs)| cs.into_iter().map(move |c| (j.clone(), c)))
        .collect();
    Hasse { vertices, edges }
}

pub fn hasse_dot(n: usize) -> String {
    let h = hasse(n);
    let mut s = format!("digraph baxter_{n} {{\n  rankdir=BT;\n");
    for v in &h.vertices {
        writeln!(s, "  \"{v}\";").unwrap();
    }
    for (a, c) in &h.edges {
        writeln!(s, "  \"{a}\" -> \"{}\" [label=\"{}\"];", c.target, c.case.name()).unwrap();
    }
    s.push_str("}\n");
    s
}

pub fn hasse_json(n: usize) -> serde_json::Value {
    let h = hasse(n);
    serde_json::json!({
        "n": n,
        "vertices": h.vertices.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "edges": h.edges.iter().map(|(a, c)| serde_json::json!({
            "source": a.to_string(),
            "target": c.target.to_string(),
            "case": c.case.name(),
        })).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perms::{permutohedron_leq, Permutation};
    use std::collections::BTreeSet;

    fn pair(s: &str) -> TwinPair {
        TwinPair::of_permutation(&s.parse().unwrap())
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_tbt(0), vec![TwinPair::empty()]);
        let counts: Vec<usize> = (0..=6).map(|n| enumerate_tbt(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 22, 92, 422]);
    }

    #[test]
    fn order_examples() {
        let j = pair("2143");
        assert!(baxter_leq(&j, &j));
        for n in 0..6 {
            let (b, t) = (pair(&Permutation::identity(n).to_string()), pair(&Permutation::reversal(n).to_string()));
            if n > 0 {
                assert!(baxter_leq(&b, &t));
            }
            assert_eq!(b, bottom(n));
            assert_eq!(t, top(n));
        }
        assert!(baxter_leq(&pair("12"), &pair("21")));
        assert!(!baxter_leq(&pair("21"), &pair("12")));
    }

    #[test]
    fn cover_examples() {
        assert!(baxter_covers(&pair("1")).is_empty());
        let c = baxter_covers(&bottom(2));
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].target, top(2));
        assert!(baxter_covers(&top(4)).is_empty());
    }

    /// Transitive reduction of the brute-force order.
    fn reduction(pairs: &[TwinPair]) -> BTreeSet<(TwinPair, TwinPair)> {
        let mut out = BTreeSet::new();
        for a in pairs {
            for b in pairs {
                if a == b || !baxter_leq(a, b) {
                    continue;
                }
                let between = pairs.iter().any(|c| c != a && c != b && baxter_leq(a, c) && baxter_leq(c, b));
                if !between {
                    out.insert((a.clone(), b.clone()));
                }
            }
        }
        out
    }

    #[test]
    fn covers_match_transitive_reduction() {
        for n in 0..=5 {
            let pairs = enumerate_tbt(n);
            let got: BTreeSet<(TwinPair, TwinPair)> = pairs
                .iter()
                .flat_map(|j| baxter_covers(j).into_iter().map(move |c| (j.clone(), c.target)))
                .collect();
            assert_eq!(got, reduction(&pairs), "n = {n}");
        }
    }

    #[test]
    fn order_is_induced_by_permutohedron() {
        for n in 0..=5 {
            let perms = Permutation::all(n);
            let pairs: Vec<TwinPair> = perms.iter().map(TwinPair::of_permutation).collect();
            for (a, ja) in perms.iter().zip(&pairs) {
                for (b, jb) in perms.iter().zip(&pairs) {
                    if permutohedron_leq(a, b) {
                        assert!(baxter_leq(ja, jb), "{a} {b}");
                    }
                }
            }
            for ja in enumerate_tbt(n) {
                for jb in enumerate_tbt(n) {
                    if baxter_leq(&ja, &jb) {
                        assert!(permutohedron_leq(&min_perm(&ja), &min_perm(&jb)));
                        assert!(permutohedron_leq(&max_perm(&ja), &max_perm(&jb)));
                    }
                }
            }
        }
    }

    #[test]
    fn meet_join_are_bounds() {
        for n in 0..=4 {
            let pairs = enumerate_tbt(n);
            for a in &pairs {
                assert_eq!(baxter_meet(a, a), *a);
                assert_eq!(baxter_join(&bottom(n), a), *a);
                for b in &pairs {
                    let lower: Vec<&TwinPair> = pairs.iter().filter(|c| baxter_leq(c, a) && baxter_leq(c, b)).collect();
                    let glb = lower.iter().find(|c| lower.iter().all(|d| baxter_leq(d, c))).unwrap();
                    assert_eq!(baxter_meet(a, b), **glb);
                    let upper: Vec<&TwinPair> = pairs.iter().filter(|c| baxter_leq(a, c) && baxter_leq(b, c)).collect();
                    let lub = upper.iter().find(|c| upper.iter().all(|d| baxter_leq(c, d))).unwrap();
                    assert_eq!(baxter_join(a, b), **lub);
                }
            }
        }
    }

    #[test]
    fn order_table_is_a_linear_extension() {
        for n in 0..=5 {
            let t = order_table(n);
            for (i, a) in t.pairs.iter().enumerate() {
                for (k, b) in t.pairs.iter().enumerate() {
                    let rel = baxter_leq(a, b);
                    assert_eq!(rel, t.above[i].contains(&k));
                    assert_eq!(rel, t.below[k].contains(&i));
                    if rel {
                        assert!(i <= k);
                    }
                }
            }
        }
    }

    #[test]
    fn hasse_exports() {
        let d1 = hasse_dot(1);
        assert_eq!(d1.matches(" -> ").count(), 0);
        assert_eq!(d1.lines().filter(|l| l.trim_end().ends_with("\";")).count(), 1);
        let d2 = hasse_dot(2);
        assert_eq!(d2.matches(" -> ").count(), 1);
        let j3 = hasse_json(3);
        assert_eq!(j3["vertices"].as_array().unwrap().len(), 6);
        let edges = reduction(&enumerate_tbt(3)).len();
        assert_eq!(j3["edges"].as_array().unwrap().len(), edges);
    }
}
