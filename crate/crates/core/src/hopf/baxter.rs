//! The subalgebra **Baxter** of **FQSym** in the `P`, `E` and `H` bases,
//! and the embedding of the sylvester algebra.

use std::collections::HashMap;

use super::fqsym::{f_coproduct, f_product};
use super::{bilinear, Basis, Element, PSylv, Tensor, E, F, H, P};
use crate::error::{Error, Result};
use crate::exactlin::{Rational, RationalMatrix};
use crate::insertion::{baxter_representative, class_of_pair, is_twin, sylvester_shape, TwinPair};
use crate::lattice::{enumerate_tbt, order_table};
use crate::perms::{is_connected, Permutation};
use crate::tables;
use crate::trees::{canopy, graft_over, graft_under, BinaryTree};

/// Degrees up to which class tables are cached.
const CACHE_DEGREE: usize = 7;

pub(crate) fn class(j: &TwinPair) -> Vec<Permutation> {
    if j.size() <= CACHE_DEGREE {
        tables::degree(j.size()).class_of(j).to_vec()
    } else {
        class_of_pair(j)
    }
}

pub(crate) fn pair_of(s: &Permutation) -> TwinPair {
    if s.len() <= CACHE_DEGREE {
        tables::degree(s.len()).pair_of(s).clone()
    } else {
        TwinPair::of_permutation(s)
    }
}

fn class_size(j: &TwinPair) -> usize {
    if j.size() <= CACHE_DEGREE {
        tables::degree(j.size()).class_of(j).len()
    } else {
        class_of_pair(j).len()
    }
}

/// `P_J = Σ F_σ` over the class of `J`.
pub fn p_to_f(x: &Element<P>) -> Element<F> {
    x.map_linear(|j| Element::sum_of(class(j)))
}

/// Inverse of [`p_to_f`] on its image.
pub fn f_collect_to_p(x: &Element<F>) -> Result<Element<P>> {
    let mut groups: HashMap<TwinPair, (Rational, usize)> = HashMap::new();
    for (s, c) in x.terms() {
        let j = pair_of(s);
        match groups.get_mut(&j) {
            None => {
                groups.insert(j, (c.clone(), 1));
            }
            Some((c0, m)) => {
                if c0 != c {
                    return Err(Error::NotInSubalgebra { class: j.to_string() });
                }
                *m += 1;
            }
        }
    }
    let mut out = Element::zero();
    for (j, (c, m)) in groups {
        if m != class_size(&j) {
            return Err(Error::NotInSubalgebra { class: j.to_string() });
        }
        out.add_term(j, &c);
    }
    Ok(out)
}

/// Tensor version of [`f_collect_to_p`].
pub fn f_collect_to_p_tensor(x: &Tensor<F, F>) -> Result<Tensor<P, P>> {
    let mut groups: HashMap<(TwinPair, TwinPair), (Rational, usize)> = HashMap::new();
    for ((a, b), c) in x.terms() {
        let key = (pair_of(a), pair_of(b));
        match groups.get_mut(&key) {
            None => {
                groups.insert(key, (c.clone(), 1));
            }
            Some((c0, m)) => {
                if c0 != c {
                    return Err(Error::NotInSubalgebra { class: format!("{} ⊗ {}", key.0, key.1) });
                }
                *m += 1;
            }
        }
    }
    let mut out = Element::zero();
    for ((ja, jb), (c, m)) in groups {
        if m != class_size(&ja) * class_size(&jb) {
            return Err(Error::NotInSubalgebra { class: format!("{ja} ⊗ {jb}") });
        }
        out.add_term((ja, jb), &c);
    }
    Ok(out)
}

fn closure<T>(r: Result<T>, what: &str) -> T {
    r.unwrap_or_else(|e| panic!("{what} left the Baxter subalgebra: {e}"))
}

/// Product in the `P` basis, by expansion and collection.
pub fn p_product(x: &Element<P>, y: &Element<P>) -> Element<P> {
    closure(f_collect_to_p(&f_product(&p_to_f(x), &p_to_f(y))), "product")
}

/// Coproduct in the `P` basis.
pub fn p_coproduct(x: &Element<P>) -> Tensor<P, P> {
    closure(f_collect_to_p_tensor(&f_coproduct(&p_to_f(x))), "coproduct")
}

/// `E_J` in the `P` basis.
pub fn e_to_p(x: &Element<E>) -> Element<P> {
    x.map_linear(|j| {
        let t = order_table(j.size());
        Element::sum_of(t.above[t.index[j]].iter().map(|&k| t.pairs[k].clone()))
    })
}

/// `H_J` in the `P` basis.
pub fn h_to_p(x: &Element<H>) -> Element<P> {
    x.map_linear(|j| {
        let t = order_table(j.size());
        Element::sum_of(t.below[t.index[j]].iter().map(|&k| t.pairs[k].clone()))
    })
}

/// Unitriangular solve against the order sums. With `upper`, solves
/// `c_J' = Σ_{J ≤ J'} d_J`, otherwise `c_J' = Σ_{J' ≤ J} d_J`.
fn solve_order<B: Basis<Index = TwinPair>>(x: &Element<P>, upper: bool) -> Element<B> {
    let mut out = Element::zero();
    let degrees: std::collections::BTreeSet<usize> = x.keys().map(TwinPair::size).collect();
    for n in degrees {
        let t = order_table(n);
        let m = t.pairs.len();
        let mut c: Vec<Rational> = t.pairs.iter().map(|j| x.coeff(j)).collect();
        let order: Box<dyn Iterator<Item = usize>> = if upper { Box::new(0..m) } else { Box::new((0..m).rev()) };
        for i in order {
            if c[i].is_zero() {
                continue;
            }
            let d = c[i].clone();
            let reach = if upper { &t.above[i] } else { &t.below[i] };
            for &k in reach {
                c[k] -= &d;
            }
            out.add_term(t.pairs[i].clone(), &d);
        }
    }
    out
}

pub fn p_to_e(x: &Element<P>) -> Element<E> {
    solve_order(x, true)
}

pub fn p_to_h(x: &Element<P>) -> Element<H> {
    solve_order(x, false)
}

pub fn e_product(x: &Element<E>, y: &Element<E>) -> Element<E> {
    p_to_e(&p_product(&e_to_p(x), &e_to_p(y)))
}

pub fn h_product(x: &Element<H>, y: &Element<H>) -> Element<H> {
    p_to_h(&p_product(&h_to_p(x), &h_to_p(y)))
}

fn order_matrix(n: usize, upper: bool) -> (Vec<TwinPair>, RationalMatrix) {
    let pairs = enumerate_tbt(n);
    let t = order_table(n);
    let mut m = RationalMatrix::zeros(pairs.len(), pairs.len());
    for (c, j) in pairs.iter().enumerate() {
        let i = t.index[j];
        let reach = if upper { &t.above[i] } else { &t.below[i] };
        for &k in reach {
            let r = pairs.binary_search(&t.pairs[k]).unwrap();
            m.set(r, c, Rational::one());
        }
    }
    (pairs, m)
}

/// Column `c` holds `E_{pairs[c]}` in the `P` basis; rows and columns
/// follow the sorted pair list.
pub fn e_matrix(n: usize) -> (Vec<TwinPair>, RationalMatrix) {
    order_matrix(n, true)
}

/// As [`e_matrix`] for `H`.
pub fn h_matrix(n: usize) -> (Vec<TwinPair>, RationalMatrix) {
    order_matrix(n, false)
}

/// `J0/J1 = (T0_L \ T1_L, T0_R / T1_R)`.
pub fn pair_over(j0: &TwinPair, j1: &TwinPair) -> TwinPair {
    TwinPair::new(graft_under(j0.left(), j1.left()), graft_over(j0.right(), j1.right())).expect("grafts of twins are twins")
}

/// `J0\J1 = (T0_L / T1_L, T0_R \ T1_R)`.
pub fn pair_under(j0: &TwinPair, j1: &TwinPair) -> TwinPair {
    TwinPair::new(graft_over(j0.left(), j1.left()), graft_under(j0.right(), j1.right())).expect("grafts of twins are twins")
}

/// Pairs of size `n ≥ 1` whose Baxter permutation is connected.
pub fn connected_pairs(n: usize) -> Vec<TwinPair> {
    if n == 0 {
        return Vec::new();
    }
    let pairs = enumerate_tbt(n);
    let keep = crate::par::map(&pairs, |j| {
        let s = baxter_representative(j).expect("every class has one Baxter permutation");
        is_connected(&s)
    });
    pairs.into_iter().zip(keep).filter_map(|(j, k)| k.then_some(j)).collect()
}

/// `P_T` of the sylvester algebra in the `F` basis.
pub fn psylv_to_f(x: &Element<PSylv>) -> Element<F> {
    x.map_linear(|t| Element::sum_of(Permutation::all(t.size()).into_iter().filter(|s| sylvester_shape(s.as_slice()) == *t)))
}

/// Inverse of [`psylv_to_f`] on its image.
pub fn f_collect_to_psylv(x: &Element<F>) -> Result<Element<PSylv>> {
    let mut groups: HashMap<BinaryTree, Vec<Rational>> = HashMap::new();
    for (s, c) in x.terms() {
        groups.entry(sylvester_shape(s.as_slice())).or_default().push(c.clone());
    }
    let mut out = Element::zero();
    for (t, cs) in groups {
        let size = psylv_to_f(&Element::basis(t.clone())).len();
        if cs.len() != size || cs.iter().any(|c| *c != cs[0]) {
            return Err(Error::NotInSubalgebra { class: t.to_string() });
        }
        out.add_term(t, &cs[0]);
    }
    Ok(out)
}

pub fn sylvester_product(x: &Element<PSylv>, y: &Element<PSylv>) -> Element<PSylv> {
    closure(
        f_collect_to_psylv(&f_product(&psylv_to_f(x), &psylv_to_f(y))),
        "sylvester product",
    )
}

/// Left partners of `t` in twin pairs.
pub fn left_partners(t: &BinaryTree) -> Vec<BinaryTree> {
    if t.is_leaf() {
        return vec![BinaryTree::Leaf];
    }
    let want: Vec<u8> = canopy(t).iter().map(|b| 1 - b).collect();
    BinaryTree::all(t.size()).into_iter().filter(|l| canopy(l) == want).collect()
}

/// `ρ(P_T) = Σ P_(T', T)` over left partners `T'`.
pub fn rho(x: &Element<PSylv>) -> Element<P> {
    x.map_linear(|t| {
        Element::sum_of(left_partners(t).into_iter().map(|l| {
            debug_assert!(is_twin(&l, t));
            TwinPair::new(l, t.clone()).unwrap()
        }))
    })
}

/// `P_J0 · P_J1` on basis vectors, memoized by the caller's map.
pub fn p_product_memo(memo: &mut HashMap<(TwinPair, TwinPair), Element<P>>, a: &TwinPair, b: &TwinPair) -> Element<P> {
    memo.entry((a.clone(), b.clone()))
        .or_insert_with(|| p_product(&Element::basis(a.clone()), &Element::basis(b.clone())))
        .clone()
}

/// `Δ(P_J)` as a tensor, for bilinear use.
pub fn p_coproduct_basis(j: &TwinPair) -> Tensor<P, P> {
    p_coproduct(&Element::basis(j.clone()))
}

/// Product of two `P⊗P` tensors.
pub fn p_tensor_product(
    memo: &mut HashMap<(TwinPair, TwinPair), Element<P>>,
    x: &Tensor<P, P>,
    y: &Tensor<P, P>,
) -> Tensor<P, P> {
    bilinear(x, y, |(a0, b0), (a1, b1)| {
        let l = p_product_memo(memo, a0, a1);
        let r = p_product_memo(memo, b0, b1);
        super::tensor(&l, &r)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pair(s: &str) -> TwinPair {
        TwinPair::of_permutation(&p(s))
    }

    fn tp(s: &str) -> TwinPair {
        s.parse().unwrap()
    }

    fn pe(j: TwinPair) -> Element<P> {
        Element::basis(j)
    }

    #[test]
    fn class_sums() {
        assert_eq!(p_to_f(&pe(pair("12"))), Element::basis(p("12")));
        assert_eq!(p_to_f(&pe(pair("2143"))), Element::sum_of([p("2143"), p("2413")]));
        assert_eq!(p_to_f(&pe(pair("542163"))), Element::sum_of([p("542163"), p("542613"), p("546213")]));
    }

    #[test]
    fn collection() {
        let x = Element::sum_of([p("2143"), p("2413")]);
        assert_eq!(f_collect_to_p(&x).unwrap(), pe(pair("2143")));
        let err = f_collect_to_p(&Element::basis(p("2143"))).unwrap_err();
        assert!(matches!(err, Error::NotInSubalgebra { ref class } if *class == pair("2143").to_string()));
        assert!(f_collect_to_p(&Element::zero()).unwrap().is_zero());
    }

    #[test]
    fn degree_one_product() {
        let one = pe(pair("1"));
        assert_eq!(p_product(&one, &one), Element::sum_of([pair("12"), pair("21")]));
    }

    #[test]
    fn product_golden() {
        let x = pe(tp("[ ((. (. .)) .) | ((. .) (. .)) ]"));
        let y = pe(tp("[ (. (. .)) | ((. .) .) ]"));
        let want = Element::sum_of(
            [
                "[ ((. (. .)) (. (. .))) | ((((. .) (. .)) .) .) ]",
                "[ ((. (. .)) (. (. .))) | (((. .) ((. .) .)) .) ]",
                "[ ((. (. .)) (. (. .))) | ((. .) (((. .) .) .)) ]",
                "[ (((. (. .)) .) (. .)) | (((. .) (. (. .))) .) ]",
                "[ (((. (. .)) .) (. .)) | ((. .) ((. (. .)) .)) ]",
                "[ (((. (. .)) .) (. .)) | ((. .) (. ((. .) .))) ]",
            ]
            .map(tp),
        );
        assert_eq!(p_product(&x, &y), want);
    }

    #[test]
    fn coproduct_golden() {
        let ja = tp("[ ((. .) ((. .) .)) | ((. (. .)) (. .)) ]");
        assert_eq!(ja, pair("2143"));
        let e = TwinPair::empty();
        let one = tp("[ (. .) | (. .) ]");
        let want = Element::sum_of([
            (e.clone(), ja.clone()),
            (one.clone(), tp("[ (. ((. .) .)) | ((. .) (. .)) ]")),
            (one.clone(), tp("[ ((. (. .)) .) | ((. .) (. .)) ]")),
            (tp("[ (. (. .)) | ((. .) .) ]"), tp("[ (. (. .)) | ((. .) .) ]")),
            (tp("[ ((. .) .) | (. (. .)) ]"), tp("[ ((. .) .) | (. (. .)) ]")),
            (tp("[ ((. .) (. .)) | ((. (. .)) .) ]"), one.clone()),
            (tp("[ ((. .) (. .)) | (. ((. .) .)) ]"), one.clone()),
            (ja.clone(), e),
        ]);
        assert_eq!(p_coproduct(&pe(ja)), want);
    }

    #[test]
    fn e_and_h_small() {
        let (b, t) = (pair("12"), pair("21"));
        assert_eq!(e_to_p(&Element::basis(b.clone())), Element::sum_of([b.clone(), t.clone()]));
        assert_eq!(e_to_p(&Element::basis(t.clone())), pe(t.clone()));
        assert_eq!(h_to_p(&Element::basis(t.clone())), Element::sum_of([b.clone(), t.clone()]));
        let one = pair("1");
        assert_eq!(e_to_p(&Element::basis(one.clone())), pe(one.clone()));
        assert_eq!(h_to_p(&Element::basis(one.clone())), pe(one));
    }

    #[test]
    fn basis_changes_invert() {
        for n in 0..=4 {
            for j in enumerate_tbt(n) {
                let x = pe(j);
                assert_eq!(e_to_p(&p_to_e(&x)), x);
                assert_eq!(h_to_p(&p_to_h(&x)), x);
            }
            let (_, em) = e_matrix(n);
            let inv = em.inverse().unwrap();
            assert_eq!(inv.mul(&em), RationalMatrix::identity(em.rows()));
        }
    }

    #[test]
    fn grafts() {
        let one = pair("1");
        assert_eq!(pair_over(&one, &one), pair("12"));
        assert_eq!(pair_under(&one, &one), pair("21"));
        let j = pair("2143");
        assert_eq!(pair_over(&j, &TwinPair::empty()), j);
        assert_eq!(pair_under(&TwinPair::empty(), &j), j);
    }

    #[test]
    fn multiplicativity_small() {
        for a in (0..=2).flat_map(enumerate_tbt) {
            for b in (0..=2).flat_map(enumerate_tbt) {
                let (ea, eb) = (Element::<E>::basis(a.clone()), Element::<E>::basis(b.clone()));
                assert_eq!(e_product(&ea, &eb), Element::basis(pair_over(&a, &b)));
                let (ha, hb) = (Element::<H>::basis(a.clone()), Element::<H>::basis(b.clone()));
                assert_eq!(h_product(&ha, &hb), Element::basis(pair_under(&a, &b)));
            }
        }
    }

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_pairs(n).len()).collect();
        assert_eq!(counts, [1, 1, 3, 11, 47]);
        assert_eq!(connected_pairs(2), vec![pair("21")]);
        assert!(connected_pairs(0).is_empty());
    }

    #[test]
    fn rho_golden() {
        let t: BinaryTree = "(((. .) .) ((. .) .))".parse().unwrap();
        let want = Element::sum_of(
            ["(. ((. (. .)) (. .)))", "((. (. (. .))) (. .))", "(. (. ((. .) (. .))))"]
                .map(|l| TwinPair::new(l.parse().unwrap(), t.clone()).unwrap()),
        );
        assert_eq!(rho(&Element::basis(t)), want);
        let leaf1: BinaryTree = "(. .)".parse().unwrap();
        assert_eq!(rho(&Element::basis(leaf1)), pe(pair("1")));
    }

    #[test]
    fn rho_is_multiplicative_small() {
        for a in (0..=2).flat_map(BinaryTree::all) {
            for b in (0..=2).flat_map(BinaryTree::all) {
                let (x, y) = (Element::<PSylv>::basis(a.clone()), Element::<PSylv>::basis(b.clone()));
                assert_eq!(p_product(&rho(&x), &rho(&y)), rho(&sylvester_product(&x, &y)));
            }
        }
    }

    #[test]
    fn bialgebra_small() {
        let mut memo = HashMap::new();
        for a in (0..=2).flat_map(enumerate_tbt) {
            for b in (0..=2).flat_map(enumerate_tbt) {
                let (x, y) = (pe(a.clone()), pe(b.clone()));
                let lhs = p_coproduct(&p_product(&x, &y));
                let rhs = p_tensor_product(&mut memo, &p_coproduct_basis(&a), &p_coproduct_basis(&b));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
