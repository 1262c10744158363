//! Exact rational arithmetic and small linear algebra over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact rational number, always in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n, d),
            None => (t, "1"),
        };
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::parse(s, 0, "invalid numerator"))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::parse(s, num.len() + 1, "invalid denominator"))?;
        if d.is_zero() {
            return Err(Error::parse(s, num.len() + 1, "zero denominator"));
        }
        Ok(Rational(BigRational::new(n, d)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

/// A sparse row: `(column, value)` pairs sorted by column, no zero values.
type SparseRow = Vec<(usize, Rational)>;

/// A sparse matrix over the rationals. Absent entries are zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from dense integer rows. All rows must share a length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, Rational::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (r, c, v) in self.entries() {
            out[r][c] = v.clone();
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        let mut out = vec![Rational::zero(); self.rows];
        for (r, c, x) in self.entries() {
            out[r] += &(x * &v[c]);
        }
        out
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut by_row: BTreeMap<usize, Vec<(usize, &Rational)>> = BTreeMap::new();
        for (r, c, v) in other.entries() {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (r, k, a) in self.entries() {
            if let Some(row) = by_row.get(&k) {
                for &(c, b) in row {
                    *acc.entry((r, c)).or_default() += &(a * b);
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        RationalMatrix {
            rows: self.rows,
            cols: other.cols,
            entries: acc,
        }
    }

    fn sparse_rows(&self) -> Vec<SparseRow> {
        let mut rows: Vec<SparseRow> = vec![Vec::new(); self.rows];
        for (r, c, v) in self.entries() {
            rows[r].push((c, v.clone()));
        }
        rows
    }

    /// Pivot rows of the reduced row-echelon form, keyed by pivot column.
    /// Each row is normalized so its pivot entry is 1.
    fn reduced_pivots(&self) -> BTreeMap<usize, SparseRow> {
        let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for mut row in self.sparse_rows() {
            // forward reduction against existing pivots
            while let Some(&(lead, _)) = row.first() {
                match pivots.get(&lead) {
                    Some(p) => {
                        let factor = row[0].1.clone();
                        row = axpy(&row, &factor, p);
                    }
                    None => break,
                }
            }
            if let Some((lead, v)) = row.first().cloned() {
                let inv = v.recip();
                for e in row.iter_mut() {
                    e.1 = &e.1 * &inv;
                }
                pivots.insert(lead, row);
            }
        }
        // back substitution, from the last pivot upwards
        let cols: Vec<usize> = pivots.keys().copied().collect();
        for (i, &pc) in cols.iter().enumerate().rev() {
            let prow = pivots[&pc].clone();
            for &qc in &cols[..i] {
                let q = pivots.get_mut(&qc).unwrap();
                if let Ok(pos) = q.binary_search_by_key(&pc, |e| e.0) {
                    let factor = q[pos].1.clone();
                    *q = axpy(q, &factor, &prow);
                }
            }
        }
        pivots
    }

    /// Reduced row-echelon form. Zero rows are moved to the bottom.
    pub fn rref(&self) -> RationalMatrix {
        let mut out = RationalMatrix::zeros(self.rows, self.cols);
        for (r, (_, row)) in self.reduced_pivots().into_iter().enumerate() {
            for (c, v) in row {
                out.set(r, c, v);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.reduced_pivots().len()
    }

    /// A basis of the right null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let pivots = self.reduced_pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (&pc, row) in &pivots {
                    if let Ok(pos) = row.binary_search_by_key(&f, |e| e.0) {
                        v[pc] = -&row[pos].1;
                    }
                }
                v
            })
            .collect()
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = RationalMatrix::zeros(n, 2 * n);
        for (r, c, v) in self.entries() {
            aug.set(r, c, v.clone());
        }
        for i in 0..n {
            aug.set(i, n + i, Rational::one());
        }
        let pivots = aug.reduced_pivots();
        if (0..n).any(|c| !pivots.contains_key(&c)) {
            return None;
        }
        let mut out = RationalMatrix::zeros(n, n);
        for (r, (_, row)) in pivots.into_iter().enumerate() {
            for (c, v) in row {
                if c >= n {
                    out.set(r, c - n, v);
                }
            }
        }
        Some(out)
    }
}

/// `row - factor * other`, both sorted sparse rows.
fn axpy(row: &SparseRow, factor: &Rational, other: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        let take_left = j == other.len() || (i < row.len() && row[i].0 < other[j].0);
        let take_right = i == row.len() || (j < other.len() && other[j].0 < row[i].0);
        if take_left {
            out.push(row[i].clone());
            i += 1;
        } else if take_right {
            out.push((other[j].0, -(factor * &other[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - &(factor * &other[j].1);
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
