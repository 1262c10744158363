//! The Baxter, sylvester and #-sylvester congruences on words.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::insertion::{p_symbol, sylvester_shape};
use crate::words::Word;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CongruenceKind {
    Baxter,
    Sylvester,
    SylvesterSharp,
}

impl fmt::Display for CongruenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CongruenceKind::Baxter => "baxter",
            CongruenceKind::Sylvester => "sylvester",
            CongruenceKind::SylvesterSharp => "sylvester-sharp",
        })
    }
}

impl FromStr for CongruenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "baxter" | "B" => Ok(CongruenceKind::Baxter),
            "sylvester" | "S" => Ok(CongruenceKind::Sylvester),
            "sylvester-sharp" | "sylvester_sharp" | "S#" => Ok(CongruenceKind::SylvesterSharp),
            _ => Err(Error::parse(s, 0, "unknown congruence kind")),
        }
    }
}

/// Whether the adjacent letters at positions `i`, `i + 1` of `u` may be
/// swapped under `kind`.
fn swappable(u: &[u32], i: usize, kind: CongruenceKind) -> bool {
    let (x, y) = (u[i], u[i + 1]);
    if x == y {
        return false;
    }
    let (a, d) = (x.min(y), x.max(y));
    let before = &u[..i];
    let after = &u[i + 2..];
    match kind {
        // c ... {a d} ... b with a <= b < c <= d, or
        // b ... {a d} ... c with a < b <= c < d
        CongruenceKind::Baxter => before.iter().any(|&w| {
            after.iter().any(|&z| {
                (a <= z && z < w && w <= d) || (a < w && w <= z && z < d)
            })
        }),
        // {a c} ... b with a <= b < c
        CongruenceKind::Sylvester => after.iter().any(|&b| a <= b && b < d),
        // b ... {a c} with a < b <= c
        CongruenceKind::SylvesterSharp => before.iter().any(|&b| a < b && b <= d),
    }
}

/// Words reachable from `u` by one adjacency rewrite.
pub fn adjacent_rewrites(u: &Word, kind: CongruenceKind) -> BTreeSet<Word> {
    let v = u.letters();
    let mut out = BTreeSet::new();
    for i in 0..v.len().saturating_sub(1) {
        if swappable(v, i, kind) {
            let mut x = v.to_vec();
            x.swap(i, i + 1);
            out.insert(Word::new(x));
        }
    }
    out
}

/// Breadth-first closure of the adjacency rewrites.
pub fn congruence_class(u: &Word, kind: CongruenceKind) -> BTreeSet<Word> {
    let mut seen: HashSet<Word> = HashSet::from([u.clone()]);
    let mut queue = VecDeque::from([u.clone()]);
    while let Some(x) = queue.pop_front() {
        for y in adjacent_rewrites(&x, kind) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Decides `u ≡ v`. Baxter and sylvester use insertion symbols; the
/// #-sylvester case maps through the Schützenberger involution.
pub fn equivalent(u: &Word, v: &Word, kind: CongruenceKind) -> bool {
    if u.len() != v.len() {
        return false;
    }
    match kind {
        CongruenceKind::Baxter => p_symbol(u.letters()) == p_symbol(v.letters()),
        CongruenceKind::Sylvester => sylvester_symbol(u) == sylvester_symbol(v),
        CongruenceKind::SylvesterSharp => {
            // u ≡_{S#} v iff u^# ≡_S v^#, where # must use a common maximum
            let m = u.max_letter().max(v.max_letter()) + 1;
            let sharp = |w: &Word| Word::new(w.letters().iter().rev().map(|&a| m - a).collect());
            sylvester_symbol(&sharp(u)) == sylvester_symbol(&sharp(v))
        }
    }
}

/// The right tree of the P-symbol with labels; decides `≡_S`.
fn sylvester_symbol(u: &Word) -> crate::trees::LabeledTree<u32> {
    p_symbol(u.letters()).right
}

/// Shape-only sylvester key, for permutations.
pub fn sylvester_key(u: &Word) -> crate::trees::BinaryTree {
    sylvester_shape(u.letters())
}
