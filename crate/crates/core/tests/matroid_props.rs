mod common;

use common::{matroid, permutation};
use proptest::prelude::*;

use brion::matroid::{GroundSubset, Matroid};
use brion::perm::Permutation;

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Matroid, Permutation)> {
    matroid(max_n).prop_flat_map(|m| {
        let n = m.n();
        (Just(m), permutation(n))
    })
}

fn subsets(m: &Matroid) -> Vec<GroundSubset> {
    GroundSubset::all(m.n()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn generated_matroids_validate(m in matroid(5)) {
        prop_assert!(m.validate().is_ok());
        prop_assert!(!m.bases().is_empty());
        prop_assert_eq!(m.rank_of(GroundSubset::full(m.n())), m.rank());
    }

    #[test]
    fn greedy_basis_spans_every_prefix((m, sigma) in with_permutation(5)) {
        let b = m.greedy_basis(&sigma);
        prop_assert!(m.is_basis(b));
        for k in 0..=m.n() {
            let prefix = GroundSubset::from_elements(sigma.as_slice()[..k].iter().copied());
            prop_assert_eq!(m.rank_of(prefix), b.intersection(prefix).len());
        }
        let (loops, coloops) = m.loops_coloops();
        prop_assert!(b.intersection(loops).is_empty());
        prop_assert!(coloops.is_subset(b));
    }

    #[test]
    fn greedy_basis_of_identity_is_lex_first(m in matroid(4)) {
        let id = Permutation::identity(m.n());
        let b = m.greedy_basis(&id);
        let lex_first = m.bases().iter().copied().max_by_key(|s| {
            (0..m.n()).map(|i| s.contains(i)).collect::<Vec<_>>()
        });
        prop_assert_eq!(Some(b), lex_first);
    }

    #[test]
    fn rank_is_submodular_and_monotone(m in matroid(5)) {
        let all = subsets(&m);
        for &a in &all {
            prop_assert!(m.rank_of(a) <= a.len());
            for &b in &all {
                prop_assert!(
                    m.rank_of(a) + m.rank_of(b) >= m.rank_of(a.union(b)) + m.rank_of(a.intersection(b))
                );
                if a.is_subset(b) {
                    prop_assert!(m.rank_of(a) <= m.rank_of(b));
                }
            }
        }
    }

    #[test]
    fn minors_are_matroids(m in matroid(5), mask in any::<u32>()) {
        let t = GroundSubset(mask & ((1 << m.n()) - 1));
        let (r, rmap) = m.restrict(t);
        let (c, cmap) = m.contract(t);
        prop_assert!(r.validate().is_ok());
        prop_assert!(c.validate().is_ok());
        prop_assert_eq!(r.n() + c.n(), m.n());
        prop_assert_eq!(r.rank() + c.rank(), m.rank());
        for s in GroundSubset::all(r.n()) {
            prop_assert_eq!(r.rank_of(s), m.rank_of(rmap.lift(s)));
        }
        for s in GroundSubset::all(c.n()) {
            prop_assert_eq!(c.rank_of(s), m.rank_of(cmap.lift(s).union(t)) - m.rank_of(t));
        }
    }

    #[test]
    fn flats_are_closed_under_intersection(m in matroid(5)) {
        let flats = m.flats();
        prop_assert!(flats.contains(&GroundSubset::full(m.n())));
        prop_assert!(flats.contains(&m.loops()));
        for &a in &flats {
            for &b in &flats {
                prop_assert!(m.is_flat(a.intersection(b)));
            }
            for i in a.complement(m.n()).elements() {
                prop_assert!(m.rank_of(a.with(i)) > m.rank_of(a));
            }
        }
    }

    #[test]
    fn relabel_preserves_rank((m, sigma) in with_permutation(5)) {
        let perm = sigma.as_slice();
        let r = m.relabel(perm);
        for s in GroundSubset::all(m.n()) {
            let image = GroundSubset::from_elements(s.elements().map(|i| perm[i]));
            prop_assert_eq!(r.rank_of(image), m.rank_of(s));
        }
    }
}
