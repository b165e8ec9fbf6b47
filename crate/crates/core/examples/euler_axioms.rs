// χ*_M on δ-coefficient data: its flat recursion, its blindness to
// non-flats, and its vanishing in the presence of loops.

use std::fmt::Write;

use brion::euler::{axiom_check, chi_star, shift_pair};
use brion::fixtures::{direct_sum, loops, random_delta, rng};
use brion::matroid::{GroundSubset, Matroid};
use brion::polytope::SetFunction;

pub fn run_example() -> String {
    let mut out = String::new();
    let m = Matroid::uniform(2, 4);
    let a = random_delta(&mut rng(5), 4, 2);
    writeln!(out, "a = {:?}", a.keyed_values()).unwrap();
    writeln!(out, "chi*(0) = {}", chi_star(&m, &SetFunction::zero(4)).unwrap().value).unwrap();
    writeln!(out, "chi*(a) = {}", chi_star(&m, &a).unwrap().value).unwrap();

    let report = axiom_check(&m, &a).unwrap();
    for row in &report.rows {
        writeln!(
            out,
            "  F = {}: {} = {} + {} * {}",
            row.flat, row.lhs, row.shifted, row.restricted, row.contracted
        )
        .unwrap();
    }
    assert!(report.holds());

    let t = GroundSubset::from_one_indexed(&[1, 2, 3]).unwrap();
    let (before, after) = shift_pair(&m, &a, t).unwrap();
    writeln!(out, "non-flat {t}: {before} -> {after}").unwrap();

    let looped = direct_sum(&m, &loops(1));
    let b = random_delta(&mut rng(6), 5, 2);
    writeln!(out, "with a loop: chi* = {}", chi_star(&looped, &b).unwrap().value).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
