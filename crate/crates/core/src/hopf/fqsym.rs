//! Product, coproduct and dendriform structure of **FQSym** and its dual.

use super::{bilinear, Element, FStar, Tensor, F};
use crate::perms::Permutation;
use crate::words::{shifted_shuffle, standardize};

fn std_perm(v: &[u32]) -> Permutation {
    standardize(v)
}

/// `F_σ · F_ν`: sum over the shifted shuffle.
pub fn f_product(x: &Element<F>, y: &Element<F>) -> Element<F> {
    bilinear(x, y, |s, n| Element::sum_of(shifted_shuffle(s, n)))
}

/// `F_σ ≺ F_ν`: terms of the shifted shuffle ending with `σ`'s last letter.
pub fn f_prec(x: &Element<F>, y: &Element<F>) -> Element<F> {
    bilinear(x, y, |s, n| {
        let last = s.as_slice().last().copied();
        Element::sum_of(shifted_shuffle(s, n).into_iter().filter(|p| p.as_slice().last().copied() == last))
    })
}

/// `F_σ ≻ F_ν`: terms ending with `ν`'s last letter shifted by `|σ|`.
pub fn f_succ(x: &Element<F>, y: &Element<F>) -> Element<F> {
    bilinear(x, y, |s, n| {
        let last = n.as_slice().last().map(|&a| a + s.len() as u32);
        Element::sum_of(shifted_shuffle(s, n).into_iter().filter(|p| p.as_slice().last().copied() == last))
    })
}

fn split(s: &Permutation, i: usize) -> (Permutation, Permutation) {
    let v = s.as_slice();
    (std_perm(&v[..i]), std_perm(&v[i..]))
}

/// Deconcatenation followed by standardization.
pub fn f_coproduct(x: &Element<F>) -> Tensor<F, F> {
    x.map_linear(|s| Element::sum_of((0..=s.len()).map(|i| split(s, i))))
}

/// 1-based position of the maximal letter.
fn max_position(s: &Permutation) -> usize {
    s.as_slice().iter().position(|&a| a as usize == s.len()).map_or(0, |p| p + 1)
}

/// Half coproduct keeping the maximal letter on the left, right factor
/// nonempty.
pub fn f_delta_prec(x: &Element<F>) -> Tensor<F, F> {
    x.map_linear(|s| Element::sum_of((max_position(s)..s.len()).filter(|&i| i > 0).map(|i| split(s, i))))
}

/// Half coproduct keeping the maximal letter on the right, left factor
/// nonempty.
pub fn f_delta_succ(x: &Element<F>) -> Tensor<F, F> {
    x.map_linear(|s| Element::sum_of((1..max_position(s)).map(|i| split(s, i))))
}

/// Calls `emit` with each `k`-subset of `{1..n}` as an increasing vector.
fn for_each_subset(n: usize, k: usize, emit: &mut impl FnMut(&[u32])) {
    fn go(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
        if cur.len() == k {
            emit(cur);
            return;
        }
        for a in start..=n {
            if (n - a + 1) as usize + cur.len() < k {
                break;
            }
            cur.push(a);
            go(a + 1, n, k, cur, emit);
            cur.pop();
        }
    }
    go(1, n as u32, k, &mut Vec::with_capacity(k), emit);
}

/// `F*_σ · F*_ν`: every `π` whose prefix standardizes to `σ` and suffix
/// to `ν`.
pub fn fstar_product(x: &Element<FStar>, y: &Element<FStar>) -> Element<FStar> {
    bilinear(x, y, |s, t| {
        let (k, n) = (s.len(), s.len() + t.len());
        let mut out = Vec::new();
        for_each_subset(n, k, &mut |sub| {
            let rest: Vec<u32> = (1..=n as u32).filter(|a| !sub.contains(a)).collect();
            let mut v: Vec<u32> = s.as_slice().iter().map(|&a| sub[a as usize - 1]).collect();
            v.extend(t.as_slice().iter().map(|&a| rest[a as usize - 1]));
            out.push(Permutation::from_vec_unchecked(v));
        });
        Element::sum_of(out)
    })
}

/// Restriction to the value intervals `[1, i]` and `[i + 1, n]`.
pub fn fstar_coproduct(x: &Element<FStar>) -> Tensor<FStar, FStar> {
    x.map_linear(|s| {
        let v = s.as_slice();
        Element::sum_of((0..=s.len() as u32).map(|i| {
            let lo: Vec<u32> = v.iter().copied().filter(|&a| a <= i).collect();
            let hi: Vec<u32> = v.iter().copied().filter(|&a| a > i).collect();
            (std_perm(&lo), std_perm(&hi))
        }))
    })
}

/// `ψ(F_σ) = F*_{σ⁻¹}`.
pub fn psi(x: &Element<F>) -> Element<FStar> {
    x.map_keys(Permutation::inverse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Rational;
    use crate::hopf::{tensor, tensor_product, Basis};
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn fe(s: &str) -> Element<F> {
        Element::basis(p(s))
    }

    fn fs(perms: &[&str]) -> Element<F> {
        Element::sum_of(perms.iter().map(|s| p(s)))
    }

    fn ff(pairs: &[(&str, &str)]) -> Tensor<F, F> {
        Element::sum_of(pairs.iter().map(|(a, b)| (p(a), p(b))))
    }

    #[test]
    fn product_examples() {
        assert_eq!(f_product(&fe("1"), &fe("1")), fs(&["12", "21"]));
        assert_eq!(f_product(&fe("12"), &fe("21")), fs(&["1243", "1423", "1432", "4123", "4132", "4312"]));
        let x = fs(&["132", "21"]);
        assert_eq!(f_product(&fe(""), &x), x);
        assert_eq!(f_product(&x, &fe("")), x);
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(f_coproduct(&fe("1")), ff(&[("", "1"), ("1", "")]));
        assert_eq!(f_coproduct(&fe("21")), ff(&[("", "21"), ("1", "1"), ("21", "")]));
        assert_eq!(f_coproduct(&fe("12")), ff(&[("", "12"), ("1", "1"), ("12", "")]));
    }

    #[test]
    fn dendriform_examples() {
        assert_eq!(f_prec(&fe("1"), &fe("1")), fe("21"));
        assert_eq!(f_succ(&fe("1"), &fe("1")), fe("12"));
        assert_eq!(f_delta_prec(&fe("21")), ff(&[("1", "1")]));
        assert!(f_delta_succ(&fe("21")).is_zero());
        assert_eq!(f_delta_succ(&fe("12")), ff(&[("1", "1")]));
    }

    #[test]
    fn dual_examples() {
        let e = |s: &str| Element::<FStar>::basis(p(s));
        assert_eq!(fstar_product(&e("1"), &e("1")), Element::sum_of([p("12"), p("21")]));
        assert_eq!(fstar_product(&e("12"), &e("1")), Element::sum_of([p("123"), p("132"), p("231")]));
        let d = fstar_coproduct(&e("21"));
        assert_eq!(d, Element::sum_of([(p(""), p("21")), (p("1"), p("1")), (p("21"), p(""))]));
        assert_eq!(psi(&fe("231")), e("312"));
    }

    fn coassoc_f(x: &Element<F>) -> bool {
        let d = f_coproduct(x);
        let left: Element<((F, F), F)> = d.map_linear(|(a, b)| tensor(&f_coproduct(&Element::basis(a.clone())), &Element::<F>::basis(b.clone())));
        let right: Element<(F, (F, F))> = d.map_linear(|(a, b)| tensor(&Element::<F>::basis(a.clone()), &f_coproduct(&Element::basis(b.clone()))));
        left.map_keys::<(F, (F, F))>(|((a, b), c)| (a.clone(), (b.clone(), c.clone()))) == right
    }

    fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
        (0..=max).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle()).prop_map(|v| Permutation::new(v).unwrap())
    }

    fn arb_element(max: usize) -> impl Strategy<Value = Element<F>> {
        prop::collection::vec((arb_perm(max), -3i64..=3), 0..4)
            .prop_map(|ts| Element::from_terms(ts.into_iter().map(|(s, c)| (s, Rational::from_integer(c)))))
    }

    fn augmented(x: Element<F>) -> Element<F> {
        let mut y = x.clone();
        y.add_term(Permutation::identity(0), &-x.coeff(&Permutation::identity(0)));
        y
    }

    proptest! {
        #[test]
        fn dendriform_splitting(x in arb_element(3), y in arb_element(3)) {
            let (x, y) = (augmented(x), augmented(y));
            prop_assert_eq!(f_product(&x, &y), &f_prec(&x, &y) + &f_succ(&x, &y));
            let one = Element::<F>::basis(Permutation::identity(0));
            let mut whole = &tensor(&one, &x) + &tensor(&x, &one);
            whole = &whole + &f_delta_prec(&x);
            whole = &whole + &f_delta_succ(&x);
            prop_assert_eq!(f_coproduct(&x), whole);
        }

        #[test]
        fn bialgebra_and_coassociativity(x in arb_element(3), y in arb_element(3)) {
            let lhs = f_coproduct(&f_product(&x, &y));
            let rhs = tensor_product(&f_coproduct(&x), &f_coproduct(&y),
                |a, b| f_product(&Element::basis(a.clone()), &Element::basis(b.clone())),
                |a, b| f_product(&Element::basis(a.clone()), &Element::basis(b.clone())));
            prop_assert_eq!(lhs, rhs);
            prop_assert!(coassoc_f(&x));
        }

        #[test]
        fn psi_is_a_bialgebra_map(s in arb_perm(3), t in arb_perm(3)) {
            let (a, b) = (Element::<F>::basis(s), Element::<F>::basis(t));
            prop_assert_eq!(psi(&f_product(&a, &b)), fstar_product(&psi(&a), &psi(&b)));
            let lhs: Tensor<FStar, FStar> = f_coproduct(&a).map_keys(|(u, v)| (u.inverse(), v.inverse()));
            prop_assert_eq!(lhs, fstar_coproduct(&psi(&a)));
        }

        #[test]
        fn products_are_graded(x in arb_element(3), y in arb_element(3)) {
            for (k, _) in f_product(&x, &y).terms() {
                prop_assert!(F::degree(k) <= 6);
            }
        }
    }
}
