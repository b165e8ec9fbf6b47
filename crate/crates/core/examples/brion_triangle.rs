// Lattice points of the triangle 3Δ recovered from its vertex cones, with
// the Boolean matroid so that no cone is twisted.

use std::fmt::Write;

use brion::brion::q_matroid;
use brion::fixtures::simplex;
use brion::matroid::Matroid;

pub fn run_example() -> String {
    let mut out = String::new();
    let z = simplex(3, 3);
    let f = z.piecewise_monomial();
    for (sigma, vertex) in f.iter() {
        writeln!(out, "vertex of cone {sigma}: {vertex}").unwrap();
    }
    let q = q_matroid(&f, &Matroid::boolean(3)).unwrap().result;
    assert_eq!(q, z.enumerate_lattice_points().unwrap());
    writeln!(out, "Q = {q}").unwrap();

    // drop x3, which is pinned by x1 + x2 + x3 = 3
    let plane = q.project(&[0, 1]);
    writeln!(out, "x3 = 1: {plane}").unwrap();
    writeln!(out, "terms: {}", plane.len()).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
