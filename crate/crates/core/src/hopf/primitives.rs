//! Totally primitive elements and the generating-series identities.

use std::collections::HashMap;

use serde::Serialize;

use super::baxter::{connected_pairs, p_to_f};
use super::fqsym::{f_delta_prec, f_delta_succ};
use super::{Element, P};
use crate::exactlin::{Rational, RationalMatrix};
use crate::lattice::enumerate_tbt;
use crate::par;
use crate::perms::Permutation;

/// The matrix of `x ↦ (Δ_≺ x, Δ_≻ x)` on degree-`n` `P` vectors, in
/// `F⊗F` coordinates. Columns follow `enumerate_tbt(n)`.
pub fn half_coproduct_matrix(n: usize) -> RationalMatrix {
    let pairs = enumerate_tbt(n);
    let images = par::map(&pairs, |j| {
        let f = p_to_f(&Element::basis(j.clone()));
        (f_delta_prec(&f), f_delta_succ(&f))
    });
    let mut rows: HashMap<(bool, Permutation, Permutation), usize> = HashMap::new();
    let mut entries = Vec::new();
    for (c, (prec, succ)) in images.iter().enumerate() {
        for (side, t) in [(false, prec), (true, succ)] {
            for ((a, b), v) in t.terms() {
                let next = rows.len();
                let r = *rows.entry((side, a.clone(), b.clone())).or_insert(next);
                entries.push((r, c, v.clone()));
            }
        }
    }
    let mut m = RationalMatrix::zeros(rows.len(), pairs.len());
    for (r, c, v) in entries {
        m.set(r, c, v);
    }
    m
}

/// A basis of the totally primitive elements of degree `n`.
pub fn totally_primitive_basis(n: usize) -> Vec<Element<P>> {
    if n == 0 {
        return Vec::new();
    }
    let pairs = enumerate_tbt(n);
    half_coproduct_matrix(n)
        .kernel_basis()
        .into_iter()
        .map(|v| Element::from_terms(pairs.iter().cloned().zip(v)))
        .collect()
}

/// Dimension of the totally primitive space in degree `n`.
pub fn totally_primitive_dimension(n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    enumerate_tbt(n).len() - half_coproduct_matrix(n).rank()
}

/// Power series `1/B` for `B` with constant term 1, truncated to `B`'s length.
fn inverse_series(b: &[i128]) -> Vec<i128> {
    assert_eq!(b.first(), Some(&1), "series must have constant term 1");
    let mut inv = vec![0i128; b.len()];
    inv[0] = 1;
    for n in 1..b.len() {
        inv[n] = -(1..=n).map(|k| b[k] * inv[n - k]).sum::<i128>();
    }
    inv
}

fn mul_series(a: &[i128], b: &[i128]) -> Vec<i128> {
    (0..a.len().min(b.len())).map(|n| (0..=n).map(|k| a[k] * b[n - k]).sum()).collect()
}

/// Coefficients of `1 − 1/B(z)`.
pub fn connected_series(b: &[i128]) -> Vec<i128> {
    let inv = inverse_series(b);
    inv.iter().enumerate().map(|(n, c)| if n == 0 { 1 - c } else { -c }).collect()
}

/// Coefficients of `(B(z) − 1)/B(z)²`.
pub fn totally_primitive_series(b: &[i128]) -> Vec<i128> {
    let inv = inverse_series(b);
    let mut bm1 = b.to_vec();
    bm1[0] = 0;
    mul_series(&mul_series(&bm1, &inv), &inv)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DimsRow {
    pub n: usize,
    pub baxter: u64,
    pub connected: u64,
    pub totally_primitive: u64,
    pub connected_series: i128,
    pub totally_primitive_series: i128,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesReport {
    pub rows: Vec<DimsRow>,
    /// Degrees at which a count disagrees with its series.
    pub mismatches: Vec<usize>,
}

impl SeriesReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Counts `B_n`, connected pairs and totally primitive dimensions by
/// enumeration for `n ≤ nmax` and checks them against the series.
pub fn series_check(nmax: usize) -> SeriesReport {
    let b: Vec<i128> = (0..=nmax).map(|n| enumerate_tbt(n).len() as i128).collect();
    let cs = connected_series(&b);
    let ts = totally_primitive_series(&b);
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for n in 0..=nmax {
        let row = DimsRow {
            n,
            baxter: b[n] as u64,
            connected: connected_pairs(n).len() as u64,
            totally_primitive: totally_primitive_dimension(n) as u64,
            connected_series: cs[n],
            totally_primitive_series: ts[n],
        };
        if row.connected as i128 != cs[n] || row.totally_primitive as i128 != ts[n] {
            mismatches.push(n);
        }
        rows.push(row);
    }
    SeriesReport { rows, mismatches }
}

/// Rescales to integer coefficients with content 1 and a positive
/// leading coefficient.
pub fn primitive_integral(x: &Element<P>) -> Element<P> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Zero};
    let lcm = x.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let scaled: Vec<BigInt> = x.terms().map(|(_, c)| c.numer() * (&lcm / c.denom())).collect();
    let mut g = scaled.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return x.clone();
    }
    if scaled.first().is_some_and(|v| v < &BigInt::zero()) {
        g = -g;
    }
    x.scale(&(Rational::from_bigint(lcm) / Rational::from_bigint(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::insertion::TwinPair;

    fn pair(s: &str) -> TwinPair {
        TwinPair::of_permutation(&s.parse().unwrap())
    }

    fn tp(s: &str) -> TwinPair {
        s.parse().unwrap()
    }

    #[test]
    fn series_coefficients() {
        let b = [1i128, 1, 2, 6, 22, 92, 422, 2074, 10754];
        assert_eq!(connected_series(&b), [0, 1, 1, 3, 11, 47, 221, 1113, 5903]);
        assert_eq!(totally_primitive_series(&b)[..7], [0, 1, 0, 1, 4, 19, 96]);
    }

    #[test]
    fn small_kernels() {
        let t1 = totally_primitive_basis(1);
        assert_eq!(t1, vec![Element::basis(pair("1"))]);
        assert!(totally_primitive_basis(2).is_empty());
        let t3 = totally_primitive_basis(3);
        assert_eq!(t3.len(), 1);
        let want = &Element::basis(pair("231")) - &Element::basis(pair("132"));
        assert_eq!(primitive_integral(&t3[0]), primitive_integral(&want));
    }

    #[test]
    fn degree_four_golden_span() {
        let t = |plus: &[&str], minus: &[&str]| {
            let mut x = Element::<P>::sum_of(plus.iter().map(|s| tp(s)));
            x.add_scaled(&Element::sum_of(minus.iter().map(|s| tp(s))), &Rational::from_integer(-1));
            x
        };
        let golden = [
            t(
                &[
                    "[ (((. .) .) (. .)) | (. (. ((. .) .))) ]",
                    "[ (((. .) .) (. .)) | (. ((. (. .)) .)) ]",
                    "[ (. ((. (. .)) .)) | (((. .) .) (. .)) ]",
                    "[ (. (. ((. .) .))) | (((. .) .) (. .)) ]",
                ],
                &[
                    "[ ((. (. .)) (. .)) | ((. .) ((. .) .)) ]",
                    "[ (. (((. .) .) .)) | ((. .) (. (. .))) ]",
                    "[ (. ((. .) (. .))) | ((. .) ((. .) .)) ]",
                ],
            ),
            t(&["[ ((. .) ((. .) .)) | (. ((. .) (. .))) ]"], &["[ (. (((. .) .) .)) | ((. .) (. (. .))) ]"]),
            t(&["[ ((. .) (. (. .))) | (. (((. .) .) .)) ]"], &["[ (. ((. .) (. .))) | ((. .) ((. .) .)) ]"]),
            t(&["[ ((. .) ((. .) .)) | ((. (. .)) (. .)) ]"], &["[ ((. (. .)) (. .)) | ((. .) ((. .) .)) ]"]),
        ];
        let pairs = enumerate_tbt(4);
        let m = half_coproduct_matrix(4);
        let column = |x: &Element<P>| pairs.iter().map(|j| x.coeff(j)).collect::<Vec<_>>();
        for g in &golden {
            assert!(m.mul_vec(&column(g)).iter().all(Rational::is_zero), "{g}");
        }
        let mut stacked = RationalMatrix::zeros(golden.len(), pairs.len());
        for (r, g) in golden.iter().enumerate() {
            for (c, v) in column(g).into_iter().enumerate() {
                stacked.set(r, c, v);
            }
        }
        assert_eq!(stacked.rank(), 4);
        assert_eq!(totally_primitive_basis(4).len(), 4);
    }

    #[test]
    fn report_to_five() {
        let r = series_check(5);
        assert!(r.ok(), "{:?}", r.mismatches);
        let cols: Vec<(u64, u64, u64)> = r.rows.iter().map(|x| (x.baxter, x.connected, x.totally_primitive)).collect();
        assert_eq!(cols, [(1, 0, 0), (1, 1, 1), (2, 1, 0), (6, 3, 1), (22, 11, 4), (92, 47, 19)]);
    }
}
