//! Planar binary trees: rotations, the Tamari order, canopies, grafting,
//! and binary search tree insertions.
//!
//! Nodes are addressed by their 1-based infix index, which rotations
//! preserve. The text form of an unlabeled tree is `.` for the empty tree
//! and `(L R)` for a node; labeled trees are written `(a L R)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub enum BinaryTree {
    #[default]
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn leaf() -> Self {
        BinaryTree::Leaf
    }

    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BinaryTree::Leaf)
    }

    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn children(&self) -> Option<(&BinaryTree, &BinaryTree)> {
        match self {
            BinaryTree::Leaf => None,
            BinaryTree::Node(l, r) => Some((l, r)),
        }
    }

    /// `(. (. (. .)))`: every left subtree empty.
    pub fn right_comb(n: usize) -> Self {
        (0..n).fold(BinaryTree::Leaf, |t, _| BinaryTree::node(BinaryTree::Leaf, t))
    }

    /// `(((. .) .) .)`: every right subtree empty.
    pub fn left_comb(n: usize) -> Self {
        (0..n).fold(BinaryTree::Leaf, |t, _| BinaryTree::node(t, BinaryTree::Leaf))
    }

    /// All binary trees with `n` nodes.
    pub fn all(n: usize) -> Vec<BinaryTree> {
        let mut table: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Leaf]];
        for m in 1..=n {
            let mut level = Vec::new();
            for k in 0..m {
                for l in &table[k] {
                    for r in &table[m - 1 - k] {
                        level.push(BinaryTree::node(l.clone(), r.clone()));
                    }
                }
            }
            table.push(level);
        }
        table.swap_remove(n)
    }
}

/// Size first, then structure.
impl Ord for BinaryTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| structural_cmp(self, other))
    }
}

impl PartialOrd for BinaryTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn structural_cmp(a: &BinaryTree, b: &BinaryTree) -> Ordering {
    match (a, b) {
        (BinaryTree::Leaf, BinaryTree::Leaf) => Ordering::Equal,
        (BinaryTree::Leaf, _) => Ordering::Less,
        (_, BinaryTree::Leaf) => Ordering::Greater,
        (BinaryTree::Node(al, ar), BinaryTree::Node(bl, br)) => {
            structural_cmp(al, bl).then_with(|| structural_cmp(ar, br))
        }
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => write!(f, "."),
            BinaryTree::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut p = TreeParser::new(s);
        let t = p.unlabeled()?;
        p.finish()?;
        Ok(t)
    }
}

impl serde::Serialize for BinaryTree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub(crate) struct TreeParser<'a> {
    input: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> TreeParser<'a> {
    pub(crate) fn new(input: &'a str) -> Self {
        TreeParser {
            input,
            chars: input.char_indices().collect(),
            pos: 0,
        }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.input.len(), |&(o, _)| o)
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::parse(self.input, self.offset(), message)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), Error> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(self.err(format!("expected {c:?}, found {x:?}"))),
            None => Err(self.err(format!("expected {c:?}, found end of input"))),
        }
    }

    pub(crate) fn finish(&mut self) -> Result<(), Error> {
        match self.peek() {
            None => Ok(()),
            Some(x) => Err(self.err(format!("unexpected trailing {x:?}"))),
        }
    }

    pub(crate) fn unlabeled(&mut self) -> Result<BinaryTree, Error> {
        match self.peek() {
            Some('.') => {
                self.pos += 1;
                Ok(BinaryTree::Leaf)
            }
            Some('(') => {
                self.pos += 1;
                let l = self.unlabeled()?;
                let r = self.unlabeled()?;
                self.expect(')')?;
                Ok(BinaryTree::node(l, r))
            }
            Some(x) => Err(self.err(format!("expected '.' or '(', found {x:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<u32, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a label"));
        }
        let text: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        match text.parse::<u32>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => {
                self.pos = start;
                Err(self.err(format!("invalid label {text:?}")))
            }
        }
    }

    pub(crate) fn labeled(&mut self) -> Result<LabeledTree<u32>, Error> {
        match self.peek() {
            Some('.') => {
                self.pos += 1;
                Ok(LabeledTree::Leaf)
            }
            Some('(') => {
                self.pos += 1;
                let a = self.number()?;
                let l = self.labeled()?;
                let r = self.labeled()?;
                self.expect(')')?;
                Ok(LabeledTree::node(a, l, r))
            }
            Some(x) => Err(self.err(format!("expected '.' or '(', found {x:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// `T0/T1`: `T0` grafted on the leftmost leaf of `T1`.
pub fn graft_over(t0: &BinaryTree, t1: &BinaryTree) -> BinaryTree {
    match t1 {
        BinaryTree::Leaf => t0.clone(),
        BinaryTree::Node(l, r) => BinaryTree::node(graft_over(t0, l), (**r).clone()),
    }
}

/// `T0\T1`: `T1` grafted on the rightmost leaf of `T0`.
pub fn graft_under(t0: &BinaryTree, t1: &BinaryTree) -> BinaryTree {
    match t0 {
        BinaryTree::Leaf => t1.clone(),
        BinaryTree::Node(l, r) => BinaryTree::node((**l).clone(), graft_under(r, t1)),
    }
}

/// Right rotation at the node with infix index `node`:
/// `((A x B) y C)` becomes `(A x (B y C))`. `None` if that node has an
/// empty left subtree or does not exist.
pub fn try_right_rotate(t: &BinaryTree, node: usize) -> Option<BinaryTree> {
    rotate_at(t, node, |l, r| match l {
        BinaryTree::Node(a, b) => Some(BinaryTree::node((**a).clone(), BinaryTree::node((**b).clone(), r.clone()))),
        BinaryTree::Leaf => None,
    })
}

/// Left rotation at the node with infix index `node`:
/// `(A x (B y C))` becomes `((A x B) y C)`.
pub fn try_left_rotate(t: &BinaryTree, node: usize) -> Option<BinaryTree> {
    rotate_at(t, node, |l, r| match r {
        BinaryTree::Node(b, c) => Some(BinaryTree::node(BinaryTree::node(l.clone(), (**b).clone()), (**c).clone())),
        BinaryTree::Leaf => None,
    })
}

pub fn right_rotate(t: &BinaryTree, node: usize) -> BinaryTree {
    try_right_rotate(t, node).unwrap_or_else(|| panic!("right_rotate: node {node} of {t} has no left child"))
}

pub fn left_rotate(t: &BinaryTree, node: usize) -> BinaryTree {
    try_left_rotate(t, node).unwrap_or_else(|| panic!("left_rotate: node {node} of {t} has no right child"))
}

fn rotate_at(
    t: &BinaryTree,
    node: usize,
    f: impl Fn(&BinaryTree, &BinaryTree) -> Option<BinaryTree>,
) -> Option<BinaryTree> {
    match t {
        BinaryTree::Leaf => None,
        BinaryTree::Node(l, r) => {
            let k = l.size() + 1;
            match node.cmp(&k) {
                Ordering::Equal => f(l, r),
                Ordering::Less => Some(BinaryTree::node(rotate_at(l, node, f)?, (**r).clone())),
                Ordering::Greater => Some(BinaryTree::node((**l).clone(), rotate_at(r, node - k, f)?)),
            }
        }
    }
}

/// Leaves other than the first and the last, left to right: `0` for a
/// leaf that is a right child, `1` for a left child.
pub fn canopy(t: &BinaryTree) -> Vec<u8> {
    assert!(!t.is_leaf(), "canopy of the empty tree");
    let mut bits = Vec::with_capacity(t.size() + 1);
    leaf_orientations(t, &mut bits);
    bits[1..bits.len() - 1].to_vec()
}

fn leaf_orientations(t: &BinaryTree, out: &mut Vec<u8>) {
    if let BinaryTree::Node(l, r) = t {
        if l.is_leaf() {
            out.push(1);
        } else {
            leaf_orientations(l, out);
        }
        if r.is_leaf() {
            out.push(0);
        } else {
            leaf_orientations(r, out);
        }
    }
}

/// `v_i` = smallest infix index in the subtree of node `i`.
pub fn tamari_vector(t: &BinaryTree) -> Vec<usize> {
    let mut out = Vec::with_capacity(t.size());
    fill_tamari(t, 1, &mut out);
    out
}

fn fill_tamari(t: &BinaryTree, first: usize, out: &mut Vec<usize>) {
    if let BinaryTree::Node(l, r) = t {
        fill_tamari(l, first, out);
        out.push(first);
        fill_tamari(r, first + l.size() + 1, out);
    }
}

/// Tamari order, decided by componentwise comparison of Tamari vectors.
pub fn tamari_leq(t0: &BinaryTree, t1: &BinaryTree) -> bool {
    assert_eq!(t0.size(), t1.size(), "tamari_leq: size mismatch");
    tamari_vector(t0).iter().zip(tamari_vector(t1)).all(|(a, b)| *a <= b)
}

/// Whether a labeled tree is read as a left or a right binary search tree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BstFlavor {
    /// `a < b <= c`
    Left,
    /// `a <= b < c`
    Right,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub enum LabeledTree<L> {
    #[default]
    Leaf,
    Node {
        label: L,
        left: Box<LabeledTree<L>>,
        right: Box<LabeledTree<L>>,
    },
}

impl<L: Clone> LabeledTree<L> {
    pub fn node(label: L, left: LabeledTree<L>, right: LabeledTree<L>) -> Self {
        LabeledTree::Node {
            label,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn single(label: L) -> Self {
        Self::node(label, LabeledTree::Leaf, LabeledTree::Leaf)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, LabeledTree::Leaf)
    }

    pub fn size(&self) -> usize {
        match self {
            LabeledTree::Leaf => 0,
            LabeledTree::Node { left, right, .. } => 1 + left.size() + right.size(),
        }
    }

    pub fn label(&self) -> Option<&L> {
        match self {
            LabeledTree::Leaf => None,
            LabeledTree::Node { label, .. } => Some(label),
        }
    }

    pub fn shape(&self) -> BinaryTree {
        match self {
            LabeledTree::Leaf => BinaryTree::Leaf,
            LabeledTree::Node { left, right, .. } => BinaryTree::node(left.shape(), right.shape()),
        }
    }

    pub fn map<M: Clone>(&self, f: &impl Fn(&L) -> M) -> LabeledTree<M> {
        match self {
            LabeledTree::Leaf => LabeledTree::Leaf,
            LabeledTree::Node { label, left, right } => LabeledTree::node(f(label), left.map(f), right.map(f)),
        }
    }

    /// Labels in infix order.
    pub fn infix_labels(&self) -> Vec<L> {
        let mut out = Vec::new();
        self.collect_infix(&mut out);
        out
    }

    fn collect_infix(&self, out: &mut Vec<L>) {
        if let LabeledTree::Node { label, left, right } = self {
            left.collect_infix(out);
            out.push(label.clone());
            right.collect_infix(out);
        }
    }
}

impl LabeledTree<u32> {
    /// Checks the binary search tree inequalities of `flavor` at every node.
    pub fn is_bst(&self, flavor: BstFlavor) -> bool {
        let labels = self.infix_labels();
        // infix sortedness plus the strictness rule at each node
        if labels.windows(2).any(|w| w[0] > w[1]) {
            return false;
        }
        self.check_strictness(flavor)
    }

    fn check_strictness(&self, flavor: BstFlavor) -> bool {
        match self {
            LabeledTree::Leaf => true,
            LabeledTree::Node { label, left, right } => {
                let ok_left = left.infix_labels().iter().all(|a| match flavor {
                    BstFlavor::Left => a < label,
                    BstFlavor::Right => a <= label,
                });
                let ok_right = right.infix_labels().iter().all(|c| match flavor {
                    BstFlavor::Left => label <= c,
                    BstFlavor::Right => label < c,
                });
                ok_left && ok_right && left.check_strictness(flavor) && right.check_strictness(flavor)
            }
        }
    }
}

impl fmt::Display for LabeledTree<u32> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabeledTree::Leaf => write!(f, "."),
            LabeledTree::Node { label, left, right } => write!(f, "({label} {left} {right})"),
        }
    }
}

impl fmt::Debug for LabeledTree<u32> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for LabeledTree<u32> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut p = TreeParser::new(s);
        let t = p.labeled()?;
        p.finish()?;
        Ok(t)
    }
}

impl serde::Serialize for LabeledTree<u32> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Leaf insertion of `a` into a binary search tree of the given flavor.
pub fn leaf_insert(t: &LabeledTree<u32>, a: u32, flavor: BstFlavor) -> LabeledTree<u32> {
    match t {
        LabeledTree::Leaf => LabeledTree::single(a),
        LabeledTree::Node { label, left, right } => {
            let go_left = match flavor {
                BstFlavor::Left => a < *label,
                BstFlavor::Right => a <= *label,
            };
            if go_left {
                LabeledTree::node(*label, leaf_insert(left, a, flavor), (**right).clone())
            } else {
                LabeledTree::node(*label, (**left).clone(), leaf_insert(right, a, flavor))
            }
        }
    }
}

/// Splits a right binary search tree into the nodes with key `<= b` and
/// those with key `> b`, keeping ancestor relations. `key` extracts the
/// letter from a label so that extra payload (creation dates) rides along.
pub(crate) fn split_by<L: Clone>(
    t: &LabeledTree<L>,
    b: u32,
    key: &impl Fn(&L) -> u32,
) -> (LabeledTree<L>, LabeledTree<L>) {
    match t {
        LabeledTree::Leaf => (LabeledTree::Leaf, LabeledTree::Leaf),
        LabeledTree::Node { label, left, right } => {
            if key(label) <= b {
                // the whole left subtree is <= label <= b
                let (lo, hi) = split_by(right, b, key);
                (LabeledTree::node(label.clone(), (**left).clone(), lo), hi)
            } else {
                // the whole right subtree is > label > b
                let (lo, hi) = split_by(left, b, key);
                (lo, LabeledTree::node(label.clone(), hi, (**right).clone()))
            }
        }
    }
}

/// `(T_{<=b}, T_{>b})` for a right binary search tree.
pub fn restricted_trees(t: &LabeledTree<u32>, b: u32) -> (LabeledTree<u32>, LabeledTree<u32>) {
    split_by(t, b, &|&a| a)
}

/// Root insertion into a right binary search tree.
pub fn root_insert(t: &LabeledTree<u32>, a: u32) -> LabeledTree<u32> {
    let (lo, hi) = restricted_trees(t, a);
    LabeledTree::node(a, lo, hi)
}

/// Labels the nodes `1..n` in infix order.
pub fn infix_labeling(t: &BinaryTree) -> LabeledTree<u32> {
    fn go(t: &BinaryTree, next: &mut u32) -> LabeledTree<u32> {
        match t {
            BinaryTree::Leaf => LabeledTree::Leaf,
            BinaryTree::Node(l, r) => {
                let left = go(l, next);
                let label = *next;
                *next += 1;
                let right = go(r, next);
                LabeledTree::node(label, left, right)
            }
        }
    }
    go(t, &mut 1)
}
