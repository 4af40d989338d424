use proptest::prelude::*;

use ghc_core::genericity::{check_condition_2, check_condition_2_exhaustive, TStarForm};
use ghc_core::lie::{weyl_dimension, Element, LieAlgebra, PositiveSystem, Weight, WeightContext, WeightMultiset};
use ghc_core::lie::weyl::weyl_layers;
use ghc_core::oracle::construct_module;
use ghc_core::parabolic::RhoVectors;
use ghc_core::rational::{add_vec, fmt_q, parse_q, q, Q};
use num_bigint::BigInt;
use num_traits::Zero;

fn alg(s: &str) -> LieAlgebra {
    LieAlgebra::new(&s.parse().unwrap())
}

fn element(l: &LieAlgebra, v: &[i64]) -> Element {
    Element::new((0..l.dim()).map(|i| q(v[i % v.len()])).collect())
}

fn ty() -> impl Strategy<Value = &'static str> {
    prop_oneof![Just("A2"), Just("B2"), Just("G2"), Just("A1xA1"), Just("C3")]
}

fn tw(v: &[i64]) -> Weight {
    Weight::new(WeightContext::T, v.iter().map(|&x| q(x)).collect())
}

fn rho_stub(rho: Weight) -> RhoVectors {
    let z = Weight::zero(WeightContext::T, rho.dim());
    RhoVectors {
        rho,
        rho_n: z.clone(),
        rho_n_perp: z.clone(),
        mu_shift: z,
        weights_n: WeightMultiset::new(),
        weights_n_cap_k: WeightMultiset::new(),
        weights_n_cap_kperp: WeightMultiset::new(),
    }
}

/// Random positive definite Gram `Lᵀ L + I` on a 2-dimensional `t*`.
fn form_2d(a: i64, b: i64, c: i64) -> TStarForm {
    let (a, b, c) = (q(a), q(b), q(c));
    TStarForm {
        gram: vec![
            vec![&a * &a + &b * &b + q(1), &b * &c],
            vec![&b * &c, &c * &c + q(1)],
        ],
    }
}

fn multiset_strategy() -> impl Strategy<Value = Vec<((i64, i64), usize)>> {
    prop::collection::vec(((-3i64..=3, -3i64..=3), 1usize..=3), 1..=5)
}

fn build_multiset(items: &[((i64, i64), usize)], budget: usize) -> WeightMultiset {
    let mut s = WeightMultiset::new();
    let mut total = 0;
    for &((x, y), m) in items {
        let m = m.min(budget - total);
        if m == 0 {
            break;
        }
        s.insert(tw(&[x, y]), m);
        total += m;
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jacobi_on_random_elements(t in ty(), a in prop::collection::vec(-3i64..=3, 1..8),
                                 b in prop::collection::vec(-3i64..=3, 1..8), c in prop::collection::vec(-3i64..=3, 1..8)) {
        let l = alg(t);
        let (x, y, z) = (element(&l, &a), element(&l, &b), element(&l, &c));
        let j1 = l.bracket(&x, &l.bracket(&y, &z).unwrap()).unwrap();
        let j2 = l.bracket(&y, &l.bracket(&z, &x).unwrap()).unwrap();
        let j3 = l.bracket(&z, &l.bracket(&x, &y).unwrap()).unwrap();
        let s = add_vec(&add_vec(&j1.coords, &j2.coords), &j3.coords);
        prop_assert!(s.iter().all(Zero::is_zero));
    }

    #[test]
    fn killing_form_is_invariant(t in ty(), a in prop::collection::vec(-2i64..=2, 1..6),
                                 b in prop::collection::vec(-2i64..=2, 1..6), c in prop::collection::vec(-2i64..=2, 1..6)) {
        let l = alg(t);
        let (x, y, z) = (element(&l, &a), element(&l, &b), element(&l, &c));
        let lhs = l.killing(&l.bracket(&x, &y).unwrap(), &z).unwrap();
        let rhs = l.killing(&x, &l.bracket(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pruned_condition_2_matches_exhaustive(
        mu in (-6i64..=6, -6i64..=6), rho in (-2i64..=2, -2i64..=2),
        f in (-2i64..=2, -2i64..=2, -2i64..=2), items in multiset_strategy(),
    ) {
        let form = form_2d(f.0, f.1, f.2);
        let s = build_multiset(&items, 12);
        let mu = tw(&[mu.0, mu.1]);
        let rv = rho_stub(tw(&[rho.0, rho.1]));
        let a = check_condition_2(&mu, &rv, &s, &form, 24).unwrap();
        let b = check_condition_2_exhaustive(&mu, &rv, &s, &form, 24).unwrap();
        prop_assert_eq!(a.holds, b.holds);
        prop_assert_eq!(&a.witness, &b.witness);
        let product: u128 = s.iter().map(|(_, m)| m as u128 + 1).product();
        prop_assert_eq!(a.enumerated_count, product - 1);
        prop_assert_eq!(b.enumerated_count, product - 1);
        prop_assert!(a.evaluated <= b.evaluated);
    }

    #[test]
    fn condition_2_ignores_insertion_order(mu in (-6i64..=6, -6i64..=6),
                                           items in prop::collection::vec(((-3i64..=3, -3i64..=3), 1usize..=3), 1..=4)) {
        let form = form_2d(1, 0, 1);
        let rv = rho_stub(tw(&[1, 1]));
        let mu = tw(&[mu.0, mu.1]);
        let mut fwd = WeightMultiset::new();
        let mut rev = WeightMultiset::new();
        for &((x, y), m) in &items {
            fwd.insert(tw(&[x, y]), m);
        }
        for &((x, y), m) in items.iter().rev() {
            rev.insert(tw(&[x, y]), m);
        }
        let a = check_condition_2(&mu, &rv, &fwd, &form, 24).unwrap();
        let b = check_condition_2(&mu, &rv, &rev, &form, 24).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn dot_action_preserves_shifted_norm(t in ty(), labels in prop::collection::vec(0i64..=3, 3), len in 0usize..=4) {
        let l = alg(t);
        let rs = l.roots();
        let ps = PositiveSystem::standard(rs);
        let rho = ps.rho(rs);
        let nu: Vec<Q> = (0..l.rank()).map(|i| q(labels[i % labels.len()])).collect();
        let shifted = add_vec(&nu, &rho);
        let norm = rs.weight_inner(&shifted, &shifted);
        let layers = weyl_layers(rs, &ps, len).unwrap();
        for w in layers.iter().flatten() {
            let moved = add_vec(&w.dot_action(&nu, &rho), &rho);
            prop_assert_eq!(rs.weight_inner(&moved, &moved), norm.clone());
        }
    }

    #[test]
    fn rationals_round_trip(n in -10_000i64..=10_000, d in 1i64..=500) {
        let x = Q::new(n.into(), d.into());
        prop_assert_eq!(parse_q(&fmt_q(&x)).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn module_dimension_is_weyl_dimension(t in prop_oneof![Just("A1"), Just("A2"), Just("B2")], labels in prop::collection::vec(0i64..=2, 2)) {
        let l = alg(t);
        let ps = l.standard_positive();
        let nu = Weight::new(WeightContext::HStd, (0..l.rank()).map(|i| q(labels[i])).collect());
        let w = construct_module(&l, &ps, &nu, 2000).unwrap();
        prop_assert_eq!(BigInt::from(w.dim), weyl_dimension(l.roots(), &ps, &nu.coords).unwrap());
        prop_assert!(w.check_relations(&l, &ps, false));
    }
}
