//! The insertion algorithm into pairs of twin binary trees.
//!
//! Inserting a letter leaf-inserts it into the left tree (a left binary
//! search tree) and root-inserts it into the right tree (a right binary
//! search tree). The P-symbol of a word is the pair obtained from `(⊥, ⊥)`;
//! the Q-symbol records when each node of the right tree was created.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perms::{co_inversions, is_baxter, Permutation};
use crate::trees::{
    canopy, infix_labeling, leaf_insert, split_by, BinaryTree, BstFlavor, LabeledTree, TreeParser,
};

/// A pair of unlabeled binary trees of equal size with complementary
/// canopies. The index set of the Baxter basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwinPair {
    left: BinaryTree,
    right: BinaryTree,
}

impl TwinPair {
    /// `None` unless the trees have equal size and complementary canopies.
    pub fn new(left: BinaryTree, right: BinaryTree) -> Option<Self> {
        is_twin(&left, &right).then_some(TwinPair { left, right })
    }

    pub fn empty() -> Self {
        TwinPair {
            left: BinaryTree::Leaf,
            right: BinaryTree::Leaf,
        }
    }

    pub fn left(&self) -> &BinaryTree {
        &self.left
    }

    pub fn right(&self) -> &BinaryTree {
        &self.right
    }

    pub fn size(&self) -> usize {
        self.left.size()
    }

    /// The pair of `σ`'s P-symbol.
    pub fn of_permutation(sigma: &Permutation) -> Self {
        shape(&p_symbol(sigma.as_slice())).expect("P-symbols are twin pairs")
    }
}

pub fn is_twin(left: &BinaryTree, right: &BinaryTree) -> bool {
    if left.size() != right.size() {
        return false;
    }
    if left.is_leaf() {
        return true;
    }
    canopy(left).iter().zip(canopy(right)).all(|(a, b)| *a != b)
}

impl fmt::Display for TwinPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[ {} | {} ]", self.left, self.right)
    }
}

impl fmt::Debug for TwinPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for TwinPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = TreeParser::new(s);
        p.expect('[')?;
        let left = p.unlabeled()?;
        p.expect('|')?;
        let right = p.unlabeled()?;
        p.expect(']')?;
        p.finish()?;
        TwinPair::new(left, right).ok_or_else(|| Error::parse(s, 0, "trees are not twins (sizes or canopies)"))
    }
}

impl serde::Serialize for TwinPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The P-symbol: a left binary search tree and a right binary search tree
/// carrying the same letters.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LabeledTwinPair {
    pub left: LabeledTree<u32>,
    pub right: LabeledTree<u32>,
}

/// Both symbols at once; the right tree carries `(letter, date)` labels.
fn insert_word(u: &[u32]) -> (LabeledTree<u32>, LabeledTree<(u32, u32)>) {
    let mut left = LabeledTree::Leaf;
    let mut right: LabeledTree<(u32, u32)> = LabeledTree::Leaf;
    for (step, &a) in u.iter().enumerate() {
        left = leaf_insert(&left, a, BstFlavor::Left);
        let (lo, hi) = split_by(&right, a, &|&(letter, _)| letter);
        right = LabeledTree::node((a, step as u32 + 1), lo, hi);
    }
    (left, right)
}

pub fn p_symbol(u: &[u32]) -> LabeledTwinPair {
    let (left, right) = insert_word(u);
    LabeledTwinPair {
        left,
        right: right.map(&|&(a, _)| a),
    }
}

/// Decreasing tree of creation dates, with the shape of the P-symbol's
/// right tree.
pub fn q_symbol(u: &[u32]) -> LabeledTree<u32> {
    insert_word(u).1.map(&|&(_, date)| date)
}

/// Forgets labels. Fails only if the canopies are not complementary,
/// which would mean the insertion is broken.
pub fn shape(pair: &LabeledTwinPair) -> Result<TwinPair> {
    let (l, r) = (pair.left.shape(), pair.right.shape());
    TwinPair::new(l.clone(), r.clone())
        .ok_or_else(|| Error::Internal(format!("P-symbol shape [ {l} | {r} ] is not a twin pair")))
}

/// Shape of the right tree alone: the sylvester P-symbol of `u`.
pub fn sylvester_shape(u: &[u32]) -> BinaryTree {
    insert_word(u).1.shape()
}

/// Every child's label is smaller than its parent's, labels are `1..n`.
pub fn is_decreasing(t: &LabeledTree<u32>) -> bool {
    fn go(t: &LabeledTree<u32>, bound: Option<u32>) -> bool {
        match t {
            LabeledTree::Leaf => true,
            LabeledTree::Node { label, left, right } => {
                bound.map_or(true, |b| *label < b) && go(left, Some(*label)) && go(right, Some(*label))
            }
        }
    }
    let mut labels = t.infix_labels();
    labels.sort();
    labels.iter().enumerate().all(|(i, &x)| x == i as u32 + 1) && go(t, None)
}

/// Parent of every value in an infix-labeled tree (`None` for the root).
fn parents(t: &LabeledTree<u32>, n: usize) -> Vec<Option<u32>> {
    fn go(t: &LabeledTree<u32>, parent: Option<u32>, out: &mut [Option<u32>]) {
        if let LabeledTree::Node { label, left, right } = t {
            out[*label as usize - 1] = parent;
            go(left, Some(*label), out);
            go(right, Some(*label), out);
        }
    }
    let mut out = vec![None; n];
    go(t, None, &mut out);
    out
}

/// All permutations whose P-symbol has shape `pair`.
///
/// With both trees labeled in infix order, `σ` qualifies iff read left to
/// right it lists every left-tree node before its descendants, and read
/// right to left it lists every right-tree node before its descendants.
pub fn class_of_pair(pair: &TwinPair) -> Vec<Permutation> {
    let n = pair.size();
    let left_parent = parents(&infix_labeling(&pair.left), n);
    let right_parent = parents(&infix_labeling(&pair.right), n);
    // pending right-tree children that must be placed before a value
    let mut right_children = vec![0u32; n];
    for p in right_parent.iter().flatten() {
        right_children[*p as usize - 1] += 1;
    }
    let mut placed = vec![false; n];
    let mut prefix = Vec::with_capacity(n);
    let mut out = Vec::new();
    extend_class(
        &left_parent,
        &right_parent,
        &mut right_children,
        &mut placed,
        &mut prefix,
        &mut out,
    );
    out
}

fn extend_class(
    left_parent: &[Option<u32>],
    right_parent: &[Option<u32>],
    right_pending: &mut [u32],
    placed: &mut [bool],
    prefix: &mut Vec<u32>,
    out: &mut Vec<Permutation>,
) {
    let n = placed.len();
    if prefix.len() == n {
        out.push(Permutation::from_vec_unchecked(prefix.clone()));
        return;
    }
    for v in 0..n {
        if placed[v] || right_pending[v] > 0 {
            continue;
        }
        if let Some(p) = left_parent[v] {
            if !placed[p as usize - 1] {
                continue;
            }
        }
        placed[v] = true;
        prefix.push(v as u32 + 1);
        if let Some(p) = right_parent[v] {
            right_pending[p as usize - 1] -= 1;
        }
        extend_class(left_parent, right_parent, right_pending, placed, prefix, out);
        if let Some(p) = right_parent[v] {
            right_pending[p as usize - 1] += 1;
        }
        prefix.pop();
        placed[v] = false;
    }
}

/// The unique Baxter permutation of the class.
pub fn baxter_representative(pair: &TwinPair) -> Result<Permutation> {
    let found: Vec<Permutation> = class_of_pair(pair).into_iter().filter(is_baxter).collect();
    match found.len() {
        1 => Ok(found.into_iter().next().unwrap()),
        k => Err(Error::Internal(format!("class {pair} contains {k} Baxter permutations"))),
    }
}

/// Minimum of the class for the right weak order.
pub fn min_perm(pair: &TwinPair) -> Permutation {
    extreme(pair, false)
}

/// Maximum of the class for the right weak order.
pub fn max_perm(pair: &TwinPair) -> Permutation {
    extreme(pair, true)
}

fn extreme(pair: &TwinPair, top: bool) -> Permutation {
    // classes are weak-order intervals, so the extremes have the fewest
    // (resp. most) co-inversions
    let class = class_of_pair(pair);
    let pick = if top {
        class.into_iter().max_by_key(Permutation::co_inversion_count)
    } else {
        class.into_iter().min_by_key(Permutation::co_inversion_count)
    };
    pick.expect("classes are nonempty")
}

/// Leaf orientations of a tree built by leaf insertion, all leaves
/// included: `true` for a right child.
pub fn right_oriented_leaves(t: &BinaryTree) -> Vec<bool> {
    fn go(t: &BinaryTree, is_right: bool, out: &mut Vec<bool>) {
        match t {
            BinaryTree::Leaf => out.push(is_right),
            BinaryTree::Node(l, r) => {
                go(l, false, out);
                go(r, true, out);
            }
        }
    }
    let mut out = Vec::new();
    go(t, false, &mut out);
    out
}

/// Whether `(i, i+1)` is a co-inversion, for `i = 1..n-1`.
pub fn adjacent_co_inversions(sigma: &Permutation) -> Vec<bool> {
    let c = co_inversions(sigma);
    (1..sigma.len() as u32).map(|i| c.get(i, i + 1)).collect()
}
