//! The graded dual **Baxter*** as a quotient of **FQSym***.

use super::baxter::{class, p_to_f, pair_of};
use super::fqsym::{fstar_coproduct, fstar_product, psi};
use super::{bilinear, Element, FStar, PStar, Tensor, P};
use crate::insertion::TwinPair;

/// `φ(F*_σ) = P*_{J(σ)}`.
pub fn phi(x: &Element<FStar>) -> Element<PStar> {
    x.map_keys(pair_of)
}

fn representative(j: &TwinPair) -> Element<FStar> {
    Element::basis(class(j).swap_remove(0))
}

/// `P*_J0 · P*_J1 = φ(F*_σ · F*_ν)` for any representatives.
pub fn dual_product(x: &Element<PStar>, y: &Element<PStar>) -> Element<PStar> {
    bilinear(x, y, |a, b| phi(&fstar_product(&representative(a), &representative(b))))
}

/// `Δ(P*_J) = (φ ⊗ φ)(Δ F*_σ)`.
pub fn dual_coproduct(x: &Element<PStar>) -> Tensor<PStar, PStar> {
    x.map_linear(|j| fstar_coproduct(&representative(j)).map_keys(|(a, b)| (pair_of(a), pair_of(b))))
}

/// `φ ∘ ψ ∘ θ`: expand to `F`, invert permutations, project.
pub fn phi_psi_theta(x: &Element<P>) -> Element<PStar> {
    phi(&psi(&p_to_f(x)))
}
