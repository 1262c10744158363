//! Exhaustive checks of the structural claims, grouped into suites.
//!
//! Every check returns `Ok(summary)` or `Err(first counterexample)`.
//! Bounds are explicit arguments; [`run_suite`] derives them from a single
//! `max_n`, capping the expensive ones.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::congruence::{congruence_class, CongruenceKind};
use crate::error::{Error, Result};
use crate::exactlin::RationalMatrix;
use crate::hopf::baxter::{
    f_collect_to_psylv, p_coproduct_basis, p_tensor_product, psylv_to_f,
};
use crate::hopf::{self, tensor, Element, Tensor, E, F, H, P, PSylv};
use crate::insertion::{
    adjacent_co_inversions, baxter_representative, class_of_pair, is_decreasing, max_perm, min_perm, p_symbol,
    q_symbol, right_oriented_leaves, sylvester_shape, TwinPair,
};
use crate::lattice::{self, baxter_covers, baxter_join, baxter_leq, baxter_meet, enumerate_tbt, order_table};
use crate::par;
use crate::perms::{co_inversions, is_baxter, is_connected, weak_order_join, weak_order_meet, Permutation};
use crate::tables;
use crate::trees::{leaf_insert, root_insert, tamari_leq, try_right_rotate, BinaryTree, BstFlavor, LabeledTree};
use crate::words::{schuetzenberger, standardize, Word};

pub type Outcome = std::result::Result<String, String>;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub ok: bool,
    pub detail: String,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// All words of length `len` over `{1..alpha}`.
pub fn words_of_length(len: usize, alpha: u32) -> Vec<Word> {
    let mut layer = vec![Vec::<u32>::new()];
    for _ in 0..len {
        layer = layer
            .into_iter()
            .flat_map(|v| {
                (1..=alpha).map(move |a| {
                    let mut x = v.clone();
                    x.push(a);
                    x
                })
            })
            .collect();
    }
    layer.into_iter().map(Word::new).collect()
}

/// Partition ids of `items` by BFS closure under `kind`.
fn closure_ids(items: &[Word], kind: CongruenceKind) -> HashMap<Word, usize> {
    let mut id = HashMap::new();
    let mut next = 0;
    for u in items {
        if id.contains_key(u) {
            continue;
        }
        for v in congruence_class(u, kind) {
            id.insert(v, next);
        }
        next += 1;
    }
    id
}

/// Whether the two labelings induce the same partition of `items`.
fn same_partition<A: Eq + std::hash::Hash, B: Eq + std::hash::Hash>(
    items: &[Word],
    a: impl Fn(&Word) -> A,
    b: impl Fn(&Word) -> B,
) -> std::result::Result<(), String> {
    let mut ab: HashMap<A, (B, &Word)> = HashMap::new();
    let mut ba: HashMap<B, &Word> = HashMap::new();
    for u in items {
        let (ka, kb) = (a(u), b(u));
        if let Some((kb0, w)) = ab.get(&ka) {
            if *kb0 != kb {
                return Err(format!("{w} and {u} are together on the left only"));
            }
        } else {
            if let Some(w) = ba.get(&kb) {
                return Err(format!("{w} and {u} are together on the right only"));
            }
            ba.insert(b(u), u);
            ab.insert(ka, (kb, u));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- counts

/// Class counts of `S_n`, twin-pair counts and Baxter-permutation counts
/// against `expected`.
pub fn hilbert_series(expected: &[usize]) -> Outcome {
    for (n, &b) in expected.iter().enumerate() {
        let classes = tables::degree(n).pairs.len();
        let pairs = enumerate_tbt(n).len();
        let bax = par::count(&Permutation::all(n), is_baxter);
        ensure(classes == b && pairs == b && bax == b, || {
            format!("n = {n}: classes {classes}, pairs {pairs}, Baxter permutations {bax}, expected {b}")
        })?;
    }
    Ok(format!("B_0..B_{} = {:?}", expected.len() - 1, expected))
}

/// Every class of `S_n` holds exactly one Baxter permutation.
pub fn theorem1(nmax: usize) -> Outcome {
    for n in 0..=nmax {
        let t = tables::degree(n);
        if let Some(j) = par::find_failure(&t.pairs, |j| t.class_of(j).iter().filter(|s| is_baxter(s)).count() == 1) {
            return Err(format!("class {j} does not have exactly one Baxter permutation"));
        }
        if let Some(j) = par::find_failure(&t.pairs, |j| baxter_representative(j).is_ok()) {
            return Err(format!("no representative for {j}"));
        }
    }
    Ok(format!("n <= {nmax}"))
}

// ------------------------------------------------------------ congruences

/// `≡_B = ≡_S ∩ ≡_S#` on `S_n`, all three by rewriting closure.
pub fn prop4(nmax: usize) -> Outcome {
    for n in 0..=nmax {
        let items: Vec<Word> = Permutation::all(n).iter().map(Word::from).collect();
        let b = closure_ids(&items, CongruenceKind::Baxter);
        let s = closure_ids(&items, CongruenceKind::Sylvester);
        let sh = closure_ids(&items, CongruenceKind::SylvesterSharp);
        same_partition(&items, |u| b[u], |u| (s[u], sh[u])).map_err(|e| format!("n = {n}: {e}"))?;
    }
    Ok(format!("n <= {nmax}"))
}

/// P-symbol equality versus rewriting closure on words.
pub fn prop6(len: usize, alpha: u32) -> Outcome {
    let mut total = 0;
    for l in 0..=len {
        let items = words_of_length(l, alpha);
        let ids = closure_ids(&items, CongruenceKind::Baxter);
        same_partition(&items, |u| p_symbol(u.letters()), |u| ids[u]).map_err(|e| format!("length {l}: {e}"))?;
        total += items.len();
    }
    Ok(format!("{total} words of length <= {len} over {{1..{alpha}}}"))
}

/// Congruent words share their last letter.
pub fn last_letter(len: usize, alpha: u32) -> Outcome {
    for l in 1..=len {
        let items = words_of_length(l, alpha);
        let ids = closure_ids(&items, CongruenceKind::Baxter);
        let mut last: HashMap<usize, u32> = HashMap::new();
        for u in &items {
            let a = *last.entry(ids[u]).or_insert(u.last().unwrap());
            ensure(a == u.last().unwrap(), || format!("class of {u} mixes last letters"))?;
        }
    }
    Ok(format!("words of length <= {len} over {{1..{alpha}}}"))
}

/// Compatibility of `≡_B` with restriction to intervals, `#` and
/// standardization, on words.
pub fn compatibilities(len: usize, alpha: u32) -> Outcome {
    for l in 0..=len {
        let items = words_of_length(l, alpha);
        let key = |u: &Word| p_symbol(u.letters());
        let mut rep: HashMap<_, &Word> = HashMap::new();
        for u in &items {
            let v = *rep.entry(key(u)).or_insert(u);
            for lo in 1..=alpha {
                for hi in lo..=alpha {
                    let (ru, rv) = (crate::words::restrict(u, lo, hi), crate::words::restrict(v, lo, hi));
                    ensure(key(&ru) == key(&rv), || format!("restriction [{lo},{hi}] separates {u} and {v}"))?;
                }
            }
            let (su, sv) = (schuetzenberger(u), schuetzenberger(v));
            ensure(key(&su) == key(&sv), || format!("# separates {u} and {v}"))?;
            let (tu, tv) = (standardize(u.letters()), standardize(v.letters()));
            ensure(key(&Word::from(&tu)) == key(&Word::from(&tv)), || format!("std separates {u} and {v}"))?;
        }
    }
    Ok(format!("words of length <= {len} over {{1..{alpha}}}"))
}

// -------------------------------------------------------------- insertion

/// Root insertion left to right equals right-BST leaf insertion right to
/// left, on words and permutations.
pub fn lemma1(nmax: usize, word_len: usize, alpha: u32) -> Outcome {
    let check = |v: &[u32]| {
        let mut root = LabeledTree::Leaf;
        for &a in v {
            root = root_insert(&root, a);
        }
        let mut leaf = LabeledTree::Leaf;
        for &a in v.iter().rev() {
            leaf = leaf_insert(&leaf, a, BstFlavor::Right);
        }
        root == leaf && root == p_symbol(v).right
    };
    for n in 0..=nmax {
        let perms = Permutation::all(n);
        if let Some(s) = par::find_failure(&perms, |s| check(s.as_slice())) {
            return Err(format!("permutation {s}"));
        }
    }
    for l in 0..=word_len {
        let items = words_of_length(l, alpha);
        if let Some(u) = par::find_failure(&items, |u| check(u.letters())) {
            return Err(format!("word {u}"));
        }
    }
    Ok(format!("permutations n <= {nmax}, words of length <= {word_len} over {{1..{alpha}}}"))
}

/// Leaf `i + 1` of the leaf-insertion tree is right-oriented iff
/// `(i, i + 1)` is a co-inversion.
pub fn lemma2(nmax: usize) -> Outcome {
    for n in 1..=nmax {
        let perms = Permutation::all(n);
        let bad = par::find_failure(&perms, |s| {
            let leaves = right_oriented_leaves(&p_symbol(s.as_slice()).left.shape());
            leaves[1..n] == adjacent_co_inversions(s)[..]
        });
        if let Some(s) = bad {
            return Err(format!("{s}"));
        }
    }
    Ok(format!("n <= {nmax}"))
}

/// Class enumeration by backtracking agrees with filtering `S_n`.
pub fn class_enumeration(nmax: usize) -> Outcome {
    for n in 0..=nmax {
        let t = tables::degree(n);
        if let Some(j) = par::find_failure(&t.pairs, |j| class_of_pair(j) == t.class_of(j)) {
            return Err(format!("class of {j}"));
        }
    }
    Ok(format!("n <= {nmax}"))
}

/// `σ ↦ (P(σ), Q(σ))` is injective; `Q` is decreasing with the shape of
/// the right tree.
pub fn rs_injective(nmax: usize) -> Outcome {
    for n in 0..=nmax {
        let mut seen = HashSet::new();
        for s in Permutation::all(n) {
            let ps = p_symbol(s.as_slice());
            let q = q_symbol(s.as_slice());
            ensure(is_decreasing(&q) && q.shape() == ps.right.shape(), || format!("Q-symbol of {s}"))?;
            ensure(seen.insert((ps, q)), || format!("{s} collides"))?;
        }
    }
    Ok(format!("n <= {nmax}"))
}

/// Each class is the interval `[min, max]` of the weak order.
pub fn classes_are_intervals(nmax: usize) -> Outcome {
    for n in 0..=nmax {
        let t = tables::degree(n);
        let all = Permutation::all(n);
        let cos: Vec<_> = all.iter().map(co_inversions).collect();
        let bad = par::find_failure(&t.pairs, |j| {
            let (lo, hi) = (co_inversions(&min_perm(j)), co_inversions(&max_perm(j)));
            let members: HashSet<&Permutation> = t.class_of(j).iter().collect();
            let interval: Vec<&Permutation> = all
                .iter()
                .zip(&cos)
                .filter(|(_, c)| lo.is_subset(c) && c.is_subset(&hi))
                .map(|(s, _)| s)
                .collect();
            interval.len() == members.len() && interval.iter().all(|s| members.contains(s))
        });
        if let Some(j) = bad {
            return Err(format!("class of {j} is not an interval"));
        }
    }
    Ok(format!("n <= {nmax}"))
}

/// `σ ≤_P ν` implies the class extremes compare the same way, and the
/// pairs compare under `≤_B`.
pub fn monotonicity(nmax: usize) -> Outcome {
    for n in 0..=nmax {
        let t = tables::degree(n);
        let all = Permutation::all(n);
        let cos: Vec<_> = all.iter().map(co_inversions).collect();
        let ext: HashMap<&TwinPair, (crate::perms::CoInversions, crate::perms::CoInversions)> = t
            .pairs
            .iter()
            .map(|j| (j, (co_inversions(&min_perm(j)), co_inversions(&max_perm(j)))))
            .collect();
        let idx: Vec<usize> = (0..all.len()).collect();
        let bad = par::find_failure(&idx, |&a| {
            let ja = t.pair_of(&all[a]);
            (0..all.len()).all(|b| {
                if !cos[a].is_subset(&cos[b]) {
                    return true;
                }
                let jb = t.pair_of(&all[b]);
                let ((lo_a, hi_a), (lo_b, hi_b)) = (&ext[ja], &ext[jb]);
                lo_a.is_subset(lo_b) && hi_a.is_subset(hi_b) && baxter_leq(ja, jb)
            })
        });
        if let Some(&a) = bad {
            return Err(format!("monotonicity fails from {}", all[a]));
        }
    }
    Ok(format!("n <= {nmax}"))
}

// ------------------------------------------------------------------ trees

/// Vector comparison equals the closure of right rotations.
pub fn tamari_pinning(nmax: usize) -> Outcome {
    let mut pairs = 0usize;
    for n in 0..=nmax {
        let trees = BinaryTree::all(n);
        let reach = par::map(&trees, |t| {
            let mut seen: HashSet<BinaryTree> = HashSet::from([t.clone()]);
            let mut queue = VecDeque::from([t.clone()]);
            while let Some(x) = queue.pop_front() {
                for i in 1..=n {
                    if let Some(y) = try_right_rotate(&x, i) {
                        if seen.insert(y.clone()) {
                            queue.push_back(y);
                        }
                    }
                }
            }
            seen
        });
        for (a, ra) in trees.iter().zip(&reach) {
            for b in &trees {
                ensure(tamari_leq(a, b) == ra.contains(b), || format!("{a} vs {b}"))?;
            }
        }
        pairs += trees.len() * trees.len();
    }
    Ok(format!("{pairs} ordered pairs of trees with n <= {nmax}"))
}

// ---------------------------------------------------------------- lattices

/// Weak-order join and meet are least upper and greatest lower bounds.
pub fn weak_order_bounds(nmax: usize) -> Outcome {
    for n in 0..=nmax {
        let all = Permutation::all(n);
        let cos: Vec<_> = all.iter().map(co_inversions).collect();
        let idx: Vec<usize> = (0..all.len()).collect();
        let bad = par::find_failure(&idx, |&a| {
            (0..all.len()).all(|b| {
                let up: Vec<usize> = idx.iter().copied().filter(|&c| cos[a].is_subset(&cos[c]) && cos[b].is_subset(&cos[c])).collect();
                let lub = up.iter().copied().find(|&c| up.iter().all(|&d| cos[c].is_subset(&cos[d])));
                let down: Vec<usize> = idx.iter().copied().filter(|&c| cos[c].is_subset(&cos[a]) && cos[c].is_subset(&cos[b])).collect();
                let glb = down.iter().copied().find(|&c| down.iter().all(|&d| cos[d].is_subset(&cos[c])));
                lub.map(|c| &all[c]) == Some(&weak_order_join(&all[a], &all[b]))
                    && glb.map(|c| &all[c]) == Some(&weak_order_meet(&all[a], &all[b]))
            })
        });
        if let Some(&a) = bad {
            return Err(format!("bounds fail for {}", all[a]));
        }
    }
    Ok(format!("n <= {nmax}"))
}

/// Meet and join on twin pairs are the brute-force bounds and satisfy
/// the lattice axioms; bottom and top are the combs.
pub fn baxter_lattice(nmax: usize) -> Outcome {
    for n in 0..=nmax {
        let t = order_table(n);
        let m = t.pairs.len();
        let mut leq = vec![vec![false; m]; m];
        for i in 0..m {
            for &k in &t.above[i] {
                leq[i][k] = true;
            }
        }
        let idx: Vec<usize> = (0..m).collect();
        let table = par::map(&idx, |&a| {
            (0..m)
                .map(|b| (t.index[&baxter_meet(&t.pairs[a], &t.pairs[b])], t.index[&baxter_join(&t.pairs[a], &t.pairs[b])]))
                .collect::<Vec<_>>()
        });
        let (meet, join) = (|a: usize, b: usize| table[a][b].0, |a: usize, b: usize| table[a][b].1);
        for a in 0..m {
            for b in 0..m {
                let lower: Vec<usize> = (0..m).filter(|&c| leq[c][a] && leq[c][b]).collect();
                let glb = lower.iter().copied().find(|&c| lower.iter().all(|&d| leq[d][c]));
                let upper: Vec<usize> = (0..m).filter(|&c| leq[a][c] && leq[b][c]).collect();
                let lub = upper.iter().copied().find(|&c| upper.iter().all(|&d| leq[c][d]));
                ensure(glb == Some(meet(a, b)) && lub == Some(join(a, b)), || {
                    format!("bounds of {} and {}", t.pairs[a], t.pairs[b])
                })?;
                ensure(meet(a, b) == meet(b, a) && join(a, b) == join(b, a), || "commutativity".into())?;
                ensure(meet(a, join(a, b)) == a && join(a, meet(a, b)) == a, || "absorption".into())?;
            }
            ensure(meet(a, a) == a && join(a, a) == a, || "idempotence".into())?;
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    ensure(meet(meet(a, b), c) == meet(a, meet(b, c)), || "meet associativity".into())?;
                    ensure(join(join(a, b), c) == join(a, join(b, c)), || "join associativity".into())?;
                }
            }
        }
        let bottom = t.index[&lattice::bottom(n)];
        let top = t.index[&lattice::top(n)];
        ensure((0..m).all(|a| leq[bottom][a] && leq[a][top]), || format!("bounds of the lattice at n = {n}"))?;
        ensure(lattice::bottom(n) == TwinPair::of_permutation(&Permutation::identity(n)), || "bottom".into())?;
        ensure(lattice::top(n) == TwinPair::of_permutation(&Permutation::reversal(n)), || "top".into())?;
    }
    Ok(format!("n <= {nmax}"))
}

/// Covers from the three rotation cases equal the transitive reduction.
pub fn covers(nmax: usize) -> Outcome {
    let mut edges = 0;
    for n in 0..=nmax {
        let t = order_table(n);
        let m = t.pairs.len();
        let mut leq = vec![vec![false; m]; m];
        for i in 0..m {
            for &k in &t.above[i] {
                leq[i][k] = true;
            }
        }
        let idx: Vec<usize> = (0..m).collect();
        let bad = par::find_failure(&idx, |&i| {
            let reduction: BTreeSet<usize> = t.above[i]
                .iter()
                .copied()
                .filter(|&k| k != i && !t.above[i].iter().any(|&c| c != i && c != k && leq[c][k]))
                .collect();
            let got: Vec<usize> = baxter_covers(&t.pairs[i]).iter().map(|c| t.index[&c.target]).collect();
            let got_set: BTreeSet<usize> = got.iter().copied().collect();
            got.len() == got_set.len() && got_set == reduction
        });
        if let Some(&i) = bad {
            return Err(format!("covers of {}", t.pairs[i]));
        }
        edges += idx.iter().map(|&i| baxter_covers(&t.pairs[i]).len()).sum::<usize>();
    }
    Ok(format!("{edges} cover edges for n <= {nmax}"))
}

// ------------------------------------------------------------------- Hopf

fn pairs_up_to(n: usize) -> Vec<TwinPair> {
    (0..=n).flat_map(enumerate_tbt).collect()
}

/// All `(J0, J1)` with `|J0| + |J1| <= total`.
fn graded_pairs(total: usize) -> Vec<(TwinPair, TwinPair)> {
    let all = pairs_up_to(total);
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            if a.size() + b.size() <= total {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn catch<T>(f: impl FnOnce() -> T) -> std::result::Result<T, String> {
    std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)).map_err(|e| {
        e.downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into())
    })
}

/// Product and coproduct collections succeed, product coefficients are 1,
/// `Δ(xy) = Δ(x)Δ(y)`, and `Δ` is coassociative.
pub fn hopf_closure(total: usize) -> Outcome {
    let pairs = graded_pairs(total);
    let bad = par::find_failure(&pairs, |(a, b)| {
        let ok = catch(|| {
            let mut memo = HashMap::new();
            let x = hopf::p_to_f(&Element::basis(a.clone()));
            let y = hopf::p_to_f(&Element::basis(b.clone()));
            let prod = hopf::f_collect_to_p(&hopf::f_product(&x, &y)).ok()?;
            if !prod.terms().all(|(_, c)| c.is_one()) {
                return None;
            }
            let lhs = hopf::p_coproduct(&prod);
            let rhs = p_tensor_product(&mut memo, &p_coproduct_basis(a), &p_coproduct_basis(b));
            Some(lhs == rhs)
        });
        matches!(ok, Ok(Some(true)))
    });
    if let Some((a, b)) = bad {
        return Err(format!("P[{a}] · P[{b}]"));
    }
    let singles = pairs_up_to(total);
    if let Some(j) = par::find_failure(&singles, |j| catch(|| coassociative(j)).unwrap_or(false)) {
        return Err(format!("coassociativity at {j}"));
    }
    Ok(format!("{} products, {} coproducts, total degree <= {total}", pairs.len(), singles.len()))
}

fn coassociative(j: &TwinPair) -> bool {
    let d = p_coproduct_basis(j);
    let left: Element<((P, P), P)> = d.map_linear(|(a, b)| tensor(&p_coproduct_basis(a), &Element::<P>::basis(b.clone())));
    let right: Element<(P, (P, P))> = d.map_linear(|(a, b)| tensor(&Element::<P>::basis(a.clone()), &p_coproduct_basis(b)));
    left.map_keys::<(P, (P, P))>(|((a, b), c)| (a.clone(), (b.clone(), c.clone()))) == right
}

/// `E_J0 E_J1 = E_{J0/J1}` and `H_J0 H_J1 = H_{J0\J1}`, compared in the
/// `P` basis.
pub fn prop10(total: usize) -> Outcome {
    let pairs = graded_pairs(total);
    let bad = par::find_failure(&pairs, |(a, b)| {
        let e = hopf::p_product(&hopf::e_to_p(&Element::<E>::basis(a.clone())), &hopf::e_to_p(&Element::basis(b.clone())));
        let h = hopf::p_product(&hopf::h_to_p(&Element::<H>::basis(a.clone())), &hopf::h_to_p(&Element::basis(b.clone())));
        e == hopf::e_to_p(&Element::basis(hopf::pair_over(a, b))) && h == hopf::h_to_p(&Element::basis(hopf::pair_under(a, b)))
    });
    if let Some((a, b)) = bad {
        return Err(format!("{a} and {b}"));
    }
    Ok(format!("{} ordered pairs, total degree <= {total}", pairs.len()))
}

/// Change of basis matrices between `P` and `E`, `H` invert, and the
/// element-level solves agree.
pub fn basis_changes(nmax: usize) -> Outcome {
    for n in 0..=nmax {
        for (name, (pairs, m)) in [("E", hopf::e_matrix(n)), ("H", hopf::h_matrix(n))] {
            let inv = m.inverse().ok_or_else(|| format!("{name} matrix singular at n = {n}"))?;
            ensure(inv.mul(&m) == RationalMatrix::identity(pairs.len()), || format!("{name} inverse at n = {n}"))?;
            for (c, j) in pairs.iter().enumerate() {
                let x = Element::<P>::basis(j.clone());
                let coords: Element<P> = Element::from_terms(pairs.iter().enumerate().map(|(r, k)| (k.clone(), inv.get(r, c))));
                let via_solve = if name == "E" {
                    hopf::p_to_e(&x).map_keys::<P>(Clone::clone)
                } else {
                    hopf::p_to_h(&x).map_keys::<P>(Clone::clone)
                };
                ensure(coords == via_solve, || format!("{name} solve at {j}"))?;
            }
        }
    }
    Ok(format!("n <= {nmax}"))
}

/// The dendriform operations and half coproducts of `F` preserve the
/// span of class sums, and split the product and reduced coproduct.
pub fn bidendriform(total: usize) -> Outcome {
    let pairs: Vec<(TwinPair, TwinPair)> =
        graded_pairs(total).into_iter().filter(|(a, b)| a.size() > 0 && b.size() > 0).collect();
    let bad = par::find_failure(&pairs, |(a, b)| {
        let x = hopf::p_to_f(&Element::basis(a.clone()));
        let y = hopf::p_to_f(&Element::basis(b.clone()));
        let (l, r) = (hopf::f_prec(&x, &y), hopf::f_succ(&x, &y));
        hopf::f_collect_to_p(&l).is_ok() && hopf::f_collect_to_p(&r).is_ok() && &l + &r == hopf::f_product(&x, &y)
    });
    if let Some((a, b)) = bad {
        return Err(format!("dendriform products of {a} and {b}"));
    }
    let singles: Vec<TwinPair> = pairs_up_to(total).into_iter().filter(|j| j.size() > 0).collect();
    let bad = par::find_failure(&singles, |j| {
        let x = hopf::p_to_f(&Element::basis(j.clone()));
        let (dl, dr) = (hopf::f_delta_prec(&x), hopf::f_delta_succ(&x));
        let one = Element::<F>::basis(Permutation::identity(0));
        let whole = &(&(&tensor(&one, &x) + &tensor(&x, &one)) + &dl) + &dr;
        hopf::f_collect_to_p_tensor(&dl).is_ok() && hopf::f_collect_to_p_tensor(&dr).is_ok() && whole == hopf::f_coproduct(&x)
    });
    if let Some(j) = bad {
        return Err(format!("half coproducts of {j}"));
    }
    Ok(format!("total degree <= {total}"))
}

/// `ψ` maps products and coproducts of `F` to those of `F*`.
pub fn psi_isomorphism(total: usize) -> Outcome {
    let perms: Vec<Permutation> = (0..=total).flat_map(Permutation::all).collect();
    let bad = par::find_failure(&perms, |s| {
        let x = Element::<F>::basis(s.clone());
        let dual: Tensor<crate::hopf::FStar, crate::hopf::FStar> =
            hopf::f_coproduct(&x).map_keys(|(a, b)| (a.inverse(), b.inverse()));
        if dual != hopf::fstar_coproduct(&hopf::psi(&x)) {
            return false;
        }
        perms.iter().filter(|t| s.len() + t.len() <= total).all(|t| {
            let y = Element::<F>::basis(t.clone());
            hopf::psi(&hopf::f_product(&x, &y)) == hopf::fstar_product(&hopf::psi(&x), &hopf::psi(&y))
        })
    });
    if let Some(s) = bad {
        return Err(format!("at {s}"));
    }
    Ok(format!("degree <= {total}"))
}

/// Dual products and coproducts do not depend on class representatives.
pub fn dual_independence(nmax: usize) -> Outcome {
    let pairs = pairs_up_to(nmax);
    for a in &pairs {
        let ca = class_of_pair(a);
        for b in &pairs {
            let expected = hopf::dual_product(&Element::basis(a.clone()), &Element::basis(b.clone()));
            for s in &ca {
                for t in class_of_pair(b) {
                    let got = hopf::phi(&hopf::fstar_product(&Element::basis(s.clone()), &Element::basis(t)));
                    ensure(got == expected, || format!("product {a} · {b} via {s}"))?;
                }
            }
        }
        let expected = hopf::dual_coproduct(&Element::basis(a.clone()));
        for s in &ca {
            let got: Tensor<crate::hopf::PStar, crate::hopf::PStar> = hopf::fstar_coproduct(&Element::basis(s.clone()))
                .map_keys(|(u, v)| (TwinPair::of_permutation(u), TwinPair::of_permutation(v)));
            ensure(got == expected, || format!("coproduct of {a} via {s}"))?;
        }
    }
    Ok(format!("pairs of size <= {nmax}"))
}

/// `φψθ` sends the pairs of 2143 and 3142 to the same element.
pub fn dual_collision() -> Outcome {
    let p = |s: &str| TwinPair::of_permutation(&s.parse().unwrap());
    let (j1, j2) = (p("2143"), p("3142"));
    ensure(p("2413") == j1 && p("3412") == j2, || "class membership of 2413, 3412".into())?;
    let fj1: BTreeSet<String> = class_of_pair(&j1).iter().map(ToString::to_string).collect();
    let fj2: BTreeSet<String> = class_of_pair(&j2).iter().map(ToString::to_string).collect();
    ensure(fj1 == BTreeSet::from(["2143".into(), "2413".into()]), || format!("class of 2143 is {fj1:?}"))?;
    ensure(fj2 == BTreeSet::from(["3142".into(), "3412".into()]), || format!("class of 3142 is {fj2:?}"))?;
    let a = hopf::phi_psi_theta(&Element::basis(j1.clone()));
    let b = hopf::phi_psi_theta(&Element::basis(j2.clone()));
    let want = Element::sum_of([j1, j2]);
    ensure(a == want && b == want, || format!("images {a} and {b}"))?;
    Ok(format!("both map to {want}"))
}

/// `ρ` is injective on trees of size `<= inj` and multiplicative on
/// sizes summing to `<= mult`.
pub fn rho_morphism(inj: usize, mult_each: usize) -> Outcome {
    for n in 0..=inj {
        let trees = BinaryTree::all(n);
        let pairs = enumerate_tbt(n);
        let mut m = RationalMatrix::zeros(pairs.len(), trees.len());
        for (c, t) in trees.iter().enumerate() {
            let img = hopf::rho(&Element::basis(t.clone()));
            ensure(p_of_sylv(t) == hopf::p_to_f(&img), || format!("ρ of {t} is not the sylvester class sum"))?;
            for (j, v) in img.terms() {
                m.set(pairs.binary_search(j).unwrap(), c, v.clone());
            }
        }
        ensure(m.rank() == trees.len(), || format!("ρ not injective at size {n}"))?;
    }
    let trees: Vec<BinaryTree> = (0..=mult_each).flat_map(BinaryTree::all).collect();
    let prods: Vec<(BinaryTree, BinaryTree)> =
        trees.iter().flat_map(|a| trees.iter().map(move |b| (a.clone(), b.clone()))).collect();
    let bad = par::find_failure(&prods, |(a, b)| {
        let (x, y) = (Element::<PSylv>::basis(a.clone()), Element::<PSylv>::basis(b.clone()));
        let s = psylv_to_f(&x);
        let t = psylv_to_f(&y);
        match f_collect_to_psylv(&hopf::f_product(&s, &t)) {
            Ok(xy) => hopf::p_product(&hopf::rho(&x), &hopf::rho(&y)) == hopf::rho(&xy),
            Err(_) => false,
        }
    });
    if let Some((a, b)) = bad {
        return Err(format!("ρ({a}) ρ({b})"));
    }
    Ok(format!("injective to size {inj}, multiplicative to {mult_each} + {mult_each}"))
}

fn p_of_sylv(t: &BinaryTree) -> Element<F> {
    Element::sum_of(Permutation::all(t.size()).into_iter().filter(|s| sylvester_shape(s.as_slice()) == *t))
}

/// Connected-pair counts against `expected` (from degree 1), and against
/// `1 − 1/B` up to `series_n` using Baxter permutations beyond the
/// enumerated range.
pub fn freeness(expected: &[usize], series_n: usize) -> Outcome {
    for (i, &c) in expected.iter().enumerate() {
        let n = i + 1;
        let got = hopf::connected_pairs(n);
        ensure(got.len() == c, || format!("n = {n}: {} connected pairs, expected {c}", got.len()))?;
        let via_perms = par::count(&Permutation::all(n), |s| is_baxter(s) && is_connected(s));
        ensure(via_perms == c, || format!("n = {n}: {via_perms} connected Baxter permutations"))?;
    }
    let mut b = Vec::new();
    let mut conn = Vec::new();
    for n in 0..=series_n {
        let perms = Permutation::all(n);
        b.push(par::count(&perms, is_baxter) as i128);
        conn.push(if n == 0 { 0 } else { par::count(&perms, |s| is_baxter(s) && is_connected(s)) as i128 });
    }
    let series = hopf::primitives::connected_series(&b);
    ensure(series == conn, || format!("connected counts {conn:?} vs 1 - 1/B {series:?}"))?;
    Ok(format!("counts {expected:?}; series matches to degree {series_n}"))
}

/// Totally primitive dimensions against `expected` (from degree 1) and
/// `(B − 1)/B²`, plus the degree-3 generator.
pub fn totally_primitive(expected: &[usize]) -> Outcome {
    let nmax = expected.len();
    let b: Vec<i128> = (0..=nmax).map(|n| enumerate_tbt(n).len() as i128).collect();
    let series = hopf::primitives::totally_primitive_series(&b);
    for (i, &d) in expected.iter().enumerate() {
        let n = i + 1;
        let basis = hopf::totally_primitive_basis(n);
        ensure(basis.len() == d && series[n] == d as i128, || {
            format!("n = {n}: kernel {}, series {}, expected {d}", basis.len(), series[n])
        })?;
    }
    if nmax >= 3 {
        let p = |s: &str| TwinPair::of_permutation(&s.parse().unwrap());
        let t31 = &Element::<P>::basis(p("231")) - &Element::basis(p("132"));
        let basis = hopf::totally_primitive_basis(3);
        let k = &basis[0];
        let ratio = k.coeff(&p("231"));
        ensure(!ratio.is_zero() && *k == t31.scale(&ratio), || format!("degree-3 kernel spanned by {k}"))?;
    }
    Ok(format!("dimensions {expected:?}"))
}

// ----------------------------------------------------------------- suites

pub const SUITES: &[&str] = &["congruence", "insertion", "trees", "lattice", "hopf", "dual", "series"];

fn check(suite: &'static str, name: &'static str, outcome: Outcome) -> Check {
    let (ok, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Check { suite, name, ok, detail }
}

/// Runs one suite (or `"all"`) with bounds derived from `max_n`.
pub fn run_suite(name: &str, max_n: usize) -> Result<Vec<Check>> {
    if name != "all" && !SUITES.contains(&name) {
        return Err(Error::parse(name, 0, format!("unknown suite; expected one of all, {}", SUITES.join(", "))));
    }
    let want = |s: &str| name == "all" || name == s;
    let k = max_n;
    let mut out = Vec::new();
    if want("congruence") {
        out.push(check("congruence", "prop4", prop4(k.min(6))));
        out.push(check("congruence", "prop6", prop6(k.min(6), 4)));
        out.push(check("congruence", "last-letter", last_letter(k.min(6), 4)));
        out.push(check("congruence", "compatibilities", compatibilities(k.min(5), 4)));
    }
    if want("insertion") {
        let baxter = [1, 1, 2, 6, 22, 92, 422, 2074];
        out.push(check("insertion", "hilbert-series", hilbert_series(&baxter[..=k.min(7)])));
        out.push(check("insertion", "theorem1", theorem1(k.min(7))));
        out.push(check("insertion", "lemma1", lemma1(k.min(7), k.min(7), 4)));
        out.push(check("insertion", "lemma2", lemma2(k.min(7))));
        out.push(check("insertion", "class-enumeration", class_enumeration(k.min(7))));
        out.push(check("insertion", "rs-injective", rs_injective(k.min(7))));
        out.push(check("insertion", "intervals", classes_are_intervals(k.min(6))));
        out.push(check("insertion", "monotonicity", monotonicity(k.min(6))));
    }
    if want("trees") {
        out.push(check("trees", "tamari-pinning", tamari_pinning(k.min(7))));
    }
    if want("lattice") {
        out.push(check("lattice", "weak-order-bounds", weak_order_bounds(k.min(5))));
        out.push(check("lattice", "baxter-lattice", baxter_lattice(k.min(5))));
        out.push(check("lattice", "covers", covers(k.min(6))));
    }
    if want("hopf") {
        out.push(check("hopf", "closure-bialgebra", hopf_closure(k.min(6))));
        out.push(check("hopf", "prop10", prop10(k.min(6))));
        out.push(check("hopf", "basis-changes", basis_changes(k.min(5))));
        out.push(check("hopf", "bidendriform", bidendriform(k.min(6))));
        out.push(check("hopf", "rho", rho_morphism(k.min(4), k.min(6) / 2)));
    }
    if want("dual") {
        out.push(check("dual", "psi-isomorphism", psi_isomorphism(k.min(5))));
        out.push(check("dual", "representative-independence", dual_independence(k.min(3))));
        out.push(check("dual", "collision", dual_collision()));
    }
    if want("series") {
        let conn = [1, 1, 3, 11, 47, 221, 1113];
        let tp = [1, 0, 1, 4, 19, 96];
        let c = k.clamp(1, 7);
        out.push(check("series", "freeness", freeness(&conn[..c], k.clamp(1, 8))));
        out.push(check("series", "totally-primitive", totally_primitive(&tp[..k.clamp(1, 5)])));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for c in run_suite("all", 3).unwrap() {
            assert!(c.ok, "{}/{}: {}", c.suite, c.name, c.detail);
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", 3).is_err());
    }

    #[test]
    fn partition_helper_detects_differences() {
        let items = words_of_length(2, 2);
        assert!(same_partition(&items, |u| u.letters()[0], |u| u.letters()[0] + 7).is_ok());
        assert!(same_partition(&items, |u| u.letters()[0], |_| 0).is_err());
        assert!(same_partition(&items, |_| 0, |u| u.letters()[1]).is_err());
    }
}
