// The defining sum over permutations is a rational function; evaluated at
// points it agrees with the polynomial Q_M computed by elimination.

use std::fmt::Write;

use brion::brion::{q_matroid, rational_sum_eval};
use brion::fixtures::{random_matroid, random_submodular, rng};
use brion::laurent::RationalPoint;

pub fn run_example() -> String {
    let mut out = String::new();
    let mut r = rng(1);
    for n in 2..=5 {
        let m = random_matroid(&mut r, n);
        let f = random_submodular(&mut r, n).piecewise_monomial();
        let q = q_matroid(&f, &m).unwrap().result;
        let pt = RationalPoint::primes(n);
        let sum = rational_sum_eval(&f, &m, &pt).unwrap();
        assert_eq!(sum, q.eval(&pt).unwrap());
        writeln!(
            out,
            "n = {n}, rank {}: {} terms, value {sum} at the first primes",
            m.rank(),
            q.len()
        )
        .unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
