//! **FQSym**, its dual, and the Baxter subalgebra at desk scale.
//!
//! Elements are finite linear combinations over a basis marker type
//! (`F`, `P`, `E`, ...). Baxter-level operations expand to the `F` basis,
//! compute there, and collect back; collection checks that the result is
//! constant on Baxter classes, so every closure theorem is exercised on
//! each call.

pub mod baxter;
pub mod dual;
pub mod fqsym;
pub mod primitives;

use std::collections::BTreeMap;
use std::fmt::{self, Display};
use std::hash::Hash;
use std::marker::PhantomData;

use serde_json::{json, Value};

use crate::exactlin::Rational;
use crate::insertion::TwinPair;
use crate::perms::Permutation;
use crate::trees::BinaryTree;

pub use baxter::{
    connected_pairs, e_matrix, e_product, e_to_p, f_collect_to_p, f_collect_to_p_tensor, h_matrix, h_product,
    h_to_p, p_coproduct, p_product, p_to_e, p_to_f, p_to_h, pair_over, pair_under, rho, sylvester_product,
};
pub use dual::{dual_coproduct, dual_product, phi, phi_psi_theta};
pub use fqsym::{
    f_coproduct, f_delta_prec, f_delta_succ, f_prec, f_product, f_succ, fstar_coproduct, fstar_product, psi,
};
pub use primitives::{series_check, totally_primitive_basis, SeriesReport};

/// A basis: names the index type and how keys are printed.
pub trait Basis: 'static {
    type Index: Ord + Clone + Hash + Send + Sync + fmt::Debug;
    fn name() -> String;
    fn degree(k: &Self::Index) -> usize;
    fn key_json(k: &Self::Index) -> Value;
    fn key_text(k: &Self::Index) -> String;
}

macro_rules! basis {
    ($(#[$doc:meta])* $t:ident, $name:literal, $index:ty, $deg:expr) => {
        $(#[$doc])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq)]
        pub struct $t;

        impl Basis for $t {
            type Index = $index;
            fn name() -> String {
                $name.to_string()
            }
            fn degree(k: &$index) -> usize {
                $deg(k)
            }
            fn key_json(k: &$index) -> Value {
                Value::String(k.to_string())
            }
            fn key_text(k: &$index) -> String {
                k.to_string()
            }
        }
    };
}

basis!(/// Fundamental basis of **FQSym**.
    F, "F", Permutation, Permutation::len);
basis!(/// Class sums of `F` over Baxter classes.
    P, "P", TwinPair, TwinPair::size);
basis!(/// `E_J`: sum of `P_J'` over `J ≤_B J'`.
    E, "E", TwinPair, TwinPair::size);
basis!(/// `H_J`: sum of `P_J'` over `J' ≤_B J`.
    H, "H", TwinPair, TwinPair::size);
basis!(/// Dual fundamental basis.
    FStar, "Fstar", Permutation, Permutation::len);
basis!(/// Dual Baxter basis.
    PStar, "Pstar", TwinPair, TwinPair::size);
basis!(/// Class sums of `F` over sylvester classes, indexed by binary trees.
    PSylv, "Psylv", BinaryTree, BinaryTree::size);

impl<A: Basis, B: Basis> Basis for (A, B) {
    type Index = (A::Index, B::Index);
    fn name() -> String {
        format!("{}⊗{}", A::name(), B::name())
    }
    fn degree(k: &Self::Index) -> usize {
        A::degree(&k.0) + B::degree(&k.1)
    }
    fn key_json(k: &Self::Index) -> Value {
        json!([A::key_json(&k.0), B::key_json(&k.1)])
    }
    fn key_text(k: &Self::Index) -> String {
        format!("{} ⊗ {}", A::key_text(&k.0), B::key_text(&k.1))
    }
}

pub type Tensor<A, B> = Element<(A, B)>;

/// Finite linear combination with exact coefficients. Zero coefficients
/// are never stored; terms are kept sorted by key (degree first).
pub struct Element<B: Basis> {
    terms: BTreeMap<B::Index, Rational>,
    _basis: PhantomData<fn() -> B>,
}

impl<B: Basis> Clone for Element<B> {
    fn clone(&self) -> Self {
        Element::from_map(self.terms.clone())
    }
}

impl<B: Basis> PartialEq for Element<B> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<B: Basis> Eq for Element<B> {}

impl<B: Basis> fmt::Debug for Element<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<B: Basis> Default for Element<B> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Basis> Element<B> {
    fn from_map(terms: BTreeMap<B::Index, Rational>) -> Self {
        Element { terms, _basis: PhantomData }
    }

    pub fn zero() -> Self {
        Self::from_map(BTreeMap::new())
    }

    /// The basis vector at `k`.
    pub fn basis(k: B::Index) -> Self {
        Self::from_map(BTreeMap::from([(k, Rational::one())]))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (B::Index, Rational)>) -> Self {
        let mut x = Self::zero();
        for (k, c) in terms {
            x.add_term(k, &c);
        }
        x
    }

    /// Sum of basis vectors, with multiplicity.
    pub fn sum_of(keys: impl IntoIterator<Item = B::Index>) -> Self {
        let one = Rational::one();
        let mut x = Self::zero();
        for k in keys {
            x.add_term(k, &one);
        }
        x
    }

    pub fn add_term(&mut self, k: B::Index, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), &(v * c));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&B::Index, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &B::Index> {
        self.terms.keys()
    }

    pub fn coeff(&self, k: &B::Index) -> Rational {
        self.terms.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut x = Self::zero();
        x.add_scaled(self, c);
        x
    }

    /// Homogeneous component of degree `n`.
    pub fn degree_part(&self, n: usize) -> Self {
        Self::from_map(self.terms.iter().filter(|(k, _)| B::degree(k) == n).map(|(k, c)| (k.clone(), c.clone())).collect())
    }

    /// Linear extension of `f` defined on basis vectors.
    pub fn map_linear<C: Basis>(&self, mut f: impl FnMut(&B::Index) -> Element<C>) -> Element<C> {
        let mut out = Element::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Relabels keys; colliding keys are summed.
    pub fn map_keys<C: Basis>(&self, mut f: impl FnMut(&B::Index) -> C::Index) -> Element<C> {
        let mut out = Element::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "basis": B::name(),
            "terms": self.terms.iter().map(|(k, c)| json!({
                "coeff": c.to_string(),
                "key": B::key_json(k),
            })).collect::<Vec<_>>(),
        })
    }

    /// One `coeff<TAB>key` line per term.
    pub fn to_plain(&self) -> String {
        self.terms.iter().map(|(k, c)| format!("{c}\t{}\n", B::key_text(k))).collect()
    }
}

/// Bilinear extension of `f` on basis vectors.
pub fn bilinear<A: Basis, B: Basis, C: Basis>(
    x: &Element<A>,
    y: &Element<B>,
    mut f: impl FnMut(&A::Index, &B::Index) -> Element<C>,
) -> Element<C> {
    let mut out = Element::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            out.add_scaled(&f(a, b), &(ca * cb));
        }
    }
    out
}

/// `x ⊗ y`.
pub fn tensor<A: Basis, B: Basis>(x: &Element<A>, y: &Element<B>) -> Tensor<A, B> {
    bilinear(x, y, |a, b| Element::basis((a.clone(), b.clone())))
}

/// Componentwise product of two tensors.
pub fn tensor_product<A: Basis, B: Basis>(
    x: &Tensor<A, B>,
    y: &Tensor<A, B>,
    mut left: impl FnMut(&A::Index, &A::Index) -> Element<A>,
    mut right: impl FnMut(&B::Index, &B::Index) -> Element<B>,
) -> Tensor<A, B> {
    bilinear(x, y, |(a0, b0), (a1, b1)| tensor(&left(a0, a1), &right(b0, b1)))
}

impl<B: Basis> Display for Element<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs} ")?;
            }
            write!(f, "{}[{}]", B::name(), B::key_text(k))?;
        }
        Ok(())
    }
}

impl<B: Basis> std::ops::Add for &Element<B> {
    type Output = Element<B>;
    fn add(self, rhs: Self) -> Element<B> {
        let mut x = self.clone();
        x.add_scaled(rhs, &Rational::one());
        x
    }
}

impl<B: Basis> std::ops::Sub for &Element<B> {
    type Output = Element<B>;
    fn sub(self, rhs: Self) -> Element<B> {
        let mut x = self.clone();
        x.add_scaled(rhs, &Rational::from_integer(-1));
        x
    }
}
