mod common;

use common::{loopless_matroid, matroid, permutation, point, proper_subset, seed};
use proptest::prelude::*;

use brion::brion::{
    cone_partial_sum_eval, loop_product, q_matroid, q_matroid_ordered, rational_sum_eval, reciprocity_pair,
    recursion_check,
};
use brion::fixtures::{random_delta, random_family, random_submodular, rng};
use brion::matroid::{GroundSubset, Matroid};
use brion::perm::Permutation;
use brion::plaur::PiecewiseLaurent;

fn matroid_family(max_n: usize) -> impl Strategy<Value = (Matroid, PiecewiseLaurent)> {
    (matroid(max_n), seed()).prop_map(|(m, s)| {
        let f = random_family(&mut rng(s), m.n());
        (m, f)
    })
}

fn matroid_monomial(min_n: usize, max_n: usize) -> impl Strategy<Value = (Matroid, PiecewiseLaurent, GroundSubset)> {
    (min_n..=max_n, seed(), seed()).prop_flat_map(|(n, s1, s2)| {
        let m = brion::fixtures::random_matroid(&mut rng(s1), n);
        let f = PiecewiseLaurent::from_delta(&random_delta(&mut rng(s2), n, 2));
        (Just(m), Just(f), proper_subset(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn q_agrees_with_the_rational_sum((m, f) in matroid_family(4), pt in point(4)) {
        let pt = brion::laurent::RationalPoint::new(pt.coords()[..m.n()].to_vec()).unwrap();
        let q = q_matroid(&f, &m).unwrap().result;
        prop_assert_eq!(q.eval(&pt).unwrap(), rational_sum_eval(&f, &m, &pt).unwrap());
    }

    #[test]
    fn boolean_q_counts_lattice_points(n in 1usize..=4, s in seed()) {
        let z = random_submodular(&mut rng(s), n);
        let q = q_matroid(&z.piecewise_monomial(), &Matroid::boolean(n)).unwrap().result;
        prop_assert_eq!(q, z.enumerate_lattice_points().unwrap());
    }

    #[test]
    fn constant_family_gives_the_loop_product(m in matroid(5)) {
        let q = q_matroid(&PiecewiseLaurent::one(m.n()), &m).unwrap().result;
        prop_assert_eq!(q, loop_product(&m));
    }

    #[test]
    fn loops_divide_q((m, f) in matroid_family(4)) {
        let q = q_matroid(&f, &m).unwrap().result;
        for i in m.loops().elements() {
            prop_assert!(q.set_one(i).is_zero());
        }
    }

    #[test]
    fn facet_slide_recursion((m, f, t) in matroid_monomial(2, 4)) {
        let check = recursion_check(&f, &m, t).unwrap();
        prop_assert!(check.holds(), "{} vs {}", check.q, check.rhs());
    }

    #[test]
    fn reciprocity((m, f) in matroid_family(4)) {
        let (lhs, rhs) = reciprocity_pair(&f, &m).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn elimination_order_is_irrelevant((m, f) in matroid_family(4), s in seed()) {
        let mut order: Vec<usize> = (0..m.n()).collect();
        rand::seq::SliceRandom::shuffle(order.as_mut_slice(), &mut rng(s));
        let ordered = q_matroid_ordered(&f, &m, &order).unwrap();
        prop_assert_eq!(ordered.result, q_matroid(&f, &m).unwrap().result);
        prop_assert_eq!(ordered.elimination_order, order);
    }

    #[test]
    fn q_is_additive_in_the_family((m, f) in matroid_family(4), s in seed()) {
        let g = random_family(&mut rng(s), m.n());
        let sum = q_matroid(&f.add(&g).unwrap(), &m).unwrap().result;
        let parts = &q_matroid(&f, &m).unwrap().result + &q_matroid(&g, &m).unwrap().result;
        prop_assert_eq!(sum, parts);
    }

    #[test]
    fn traced_elimination_matches_the_plain_one((m, f) in matroid_family(4)) {
        let plain = q_matroid(&f, &m).unwrap();
        let traced = brion::brion::q_matroid_with(&f, &m, brion::brion::QOptions::traced()).unwrap();
        prop_assert_eq!(plain.result, traced.result);
        prop_assert_eq!(traced.trace.len(), m.n().saturating_sub(1));
    }

    #[test]
    fn loopless_constant_family_gives_one(m in loopless_matroid(4)) {
        let q = q_matroid(&PiecewiseLaurent::one(m.n()), &m).unwrap().result;
        prop_assert_eq!(q, brion::laurent::LaurentPoly::one(m.n()));
    }
}

fn mu_and_index(max_n: usize) -> impl Strategy<Value = (Permutation, usize)> {
    (2..=max_n).prop_flat_map(|n| (permutation(n - 1), 1..n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cone_partial_sums_have_closed_forms((mu, i) in mu_and_index(6), pt in point(6)) {
        let pt = brion::laurent::RationalPoint::new(pt.coords()[..=mu.len()].to_vec()).unwrap();
        prop_assert!(cone_partial_sum_eval(&mu, i, &pt).is_ok());
    }
}
