//! Words over the positive integers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::perms::Permutation;

/// A finite word; letter `a_i` is the integer `i >= 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        assert!(letters.iter().all(|&a| a >= 1), "letters must be positive");
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter, 0 for the empty word.
    pub fn max_letter(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }
}

impl From<&Permutation> for Word {
    fn from(p: &Permutation) -> Self {
        Word(p.as_slice().to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Compact digits when every letter is a single digit, space-separated
/// integers otherwise.
pub(crate) fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[u32]) -> fmt::Result {
    if letters.iter().all(|&a| a <= 9) {
        for a in letters {
            write!(f, "{a}")?;
        }
        Ok(())
    } else {
        let parts: Vec<String> = letters.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Parses letters from either whitespace/comma separated integers or, for
/// a single token, a compact digit string (`"5273641"`).
pub(crate) fn parse_letters(input: &str) -> Result<Vec<u32>, Error> {
    let trimmed = input.trim();
    if trimmed.is_empty() || trimmed == "ε" || trimmed == "-" {
        return Ok(Vec::new());
    }
    let separated = trimmed.contains(|c: char| c.is_whitespace() || c == ',');
    let mut out = Vec::new();
    if separated {
        let mut start = None;
        let offset = input.len() - input.trim_start().len();
        let bytes: Vec<(usize, char)> = trimmed.char_indices().collect();
        let flush = |s: usize, e: usize, out: &mut Vec<u32>| -> Result<(), Error> {
            let tok = &trimmed[s..e];
            match tok.parse::<u32>() {
                Ok(0) => Err(Error::parse(input, offset + s, "letters must be positive")),
                Ok(v) => {
                    out.push(v);
                    Ok(())
                }
                Err(_) => Err(Error::parse(input, offset + s, format!("invalid letter {tok:?}"))),
            }
        };
        for &(i, c) in &bytes {
            if c.is_whitespace() || c == ',' {
                if let Some(s) = start.take() {
                    flush(s, i, &mut out)?;
                }
            } else if start.is_none() {
                start = Some(i);
            }
        }
        if let Some(s) = start {
            flush(s, trimmed.len(), &mut out)?;
        }
    } else {
        let offset = input.len() - input.trim_start().len();
        for (i, c) in trimmed.char_indices() {
            match c.to_digit(10) {
                Some(0) => return Err(Error::parse(input, offset + i, "letters must be positive")),
                Some(d) => out.push(d),
                None => return Err(Error::parse(input, offset + i, format!("unexpected character {c:?}"))),
            }
        }
    }
    Ok(out)
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        parse_letters(s).map(Word)
    }
}

/// The unique permutation `σ` with `σ_i < σ_j` iff `u_i <= u_j` (for `i < j`).
pub fn standardize(u: &[u32]) -> Permutation {
    let mut idx: Vec<usize> = (0..u.len()).collect();
    // stable: equal letters keep their left-to-right order
    idx.sort_by_key(|&i| u[i]);
    let mut out = vec![0u32; u.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    Permutation::from_vec_unchecked(out)
}

/// Entry `i - 1` is the number of occurrences of letter `i`.
pub fn evaluation(u: &Word) -> Vec<usize> {
    let mut out = vec![0; u.max_letter() as usize];
    for &a in u.letters() {
        out[a as usize - 1] += 1;
    }
    out
}

/// Subword of the letters in `[lo, hi]`.
pub fn restrict(u: &Word, lo: u32, hi: u32) -> Word {
    assert!(lo <= hi, "restrict: empty interval [{lo}, {hi}]");
    Word(u.letters().iter().copied().filter(|&a| lo <= a && a <= hi).collect())
}

/// Reverse and complement against `max(u) + 1`.
pub fn schuetzenberger(u: &Word) -> Word {
    let m = u.max_letter() + 1;
    Word(u.letters().iter().rev().map(|&a| m - a).collect())
}

/// The shuffle product, as a multiset.
pub fn shuffle(u: &Word, v: &Word) -> BTreeMap<Word, usize> {
    let mut out = BTreeMap::new();
    let mut buf = Vec::with_capacity(u.len() + v.len());
    shuffle_into(u.letters(), v.letters(), &mut buf, &mut |w| {
        *out.entry(Word(w.to_vec())).or_insert(0) += 1;
    });
    out
}

pub(crate) fn shuffle_into(u: &[u32], v: &[u32], buf: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if u.is_empty() || v.is_empty() {
        let n = buf.len();
        buf.extend_from_slice(u);
        buf.extend_from_slice(v);
        emit(buf);
        buf.truncate(n);
        return;
    }
    buf.push(u[0]);
    shuffle_into(&u[1..], v, buf, emit);
    buf.pop();
    buf.push(v[0]);
    shuffle_into(u, &v[1..], buf, emit);
    buf.pop();
}

/// `σ ⧢ (ν + |σ|)`; all results are distinct.
pub fn shifted_shuffle(sigma: &Permutation, nu: &Permutation) -> BTreeSet<Permutation> {
    let shift = sigma.len() as u32;
    let shifted: Vec<u32> = nu.as_slice().iter().map(|&x| x + shift).collect();
    let mut out = BTreeSet::new();
    let mut buf = Vec::with_capacity(sigma.len() + nu.len());
    shuffle_into(sigma.as_slice(), &shifted, &mut buf, &mut |w| {
        out.insert(Permutation::from_vec_unchecked(w.to_vec()));
    });
    out
}
