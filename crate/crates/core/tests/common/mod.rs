#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use brion::fixtures;
use brion::laurent::{LaurentPoly, RationalPoint};
use brion::matroid::{GroundSubset, Matroid};
use brion::perm::Permutation;

pub fn poly(nvars: usize, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, nvars), -5i64..=5), 0..=max_terms)
        .prop_map(move |terms| LaurentPoly::from_terms(nvars, terms))
}

/// Pairwise distinct, nonzero rational coordinates.
pub fn point(n: usize) -> impl Strategy<Value = RationalPoint> {
    prop::collection::vec((1i64..=30, 1i64..=4, any::<bool>()), n)
        .prop_map(|cs| {
            cs.into_iter()
                .map(|(a, b, neg)| BigRational::new(BigInt::from(if neg { -a } else { a }), BigInt::from(b)))
                .collect::<Vec<_>>()
        })
        .prop_filter("distinct coordinates", |cs| {
            (0..cs.len()).all(|i| (i + 1..cs.len()).all(|j| cs[i] != cs[j]))
        })
        .prop_map(|cs| RationalPoint::new(cs).expect("nonzero"))
}

/// `(n, M)` from a seeded generator, so shrinking moves through seeds.
pub fn matroid(max_n: usize) -> impl Strategy<Value = Matroid> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| fixtures::random_matroid(&mut fixtures::rng(seed), n))
}

pub fn loopless_matroid(max_n: usize) -> impl Strategy<Value = Matroid> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| fixtures::random_loopless_matroid(&mut fixtures::rng(seed), n))
}

pub fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|w| Permutation::new(w).expect("shuffle"))
}

pub fn proper_subset(n: usize) -> impl Strategy<Value = GroundSubset> {
    (1u32..(1 << n) - 1).prop_map(GroundSubset)
}

pub fn seed() -> impl Strategy<Value = u64> {
    any::<u64>()
}
