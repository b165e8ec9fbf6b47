// Q_M of the dual family against Q_M twisted by ω_M. For the Boolean matroid
// this is the interior of the polytope, read with inverted variables and
// signed by (-1)^dim.

use std::fmt::Write;

use brion::brion::{q_matroid, reciprocity_pair};
use brion::fixtures::{hexagon, set_functions};
use brion::matroid::Matroid;

pub fn run_example() -> String {
    let mut out = String::new();
    let z = hexagon();
    let f = z.piecewise_monomial();
    let dual = q_matroid(&f.dual(), &Matroid::boolean(3)).unwrap().result;
    let interior = z.interior_lattice_points().unwrap();
    // the hexagon spans a plane in three coordinates
    assert_eq!(dual, interior.dual());
    writeln!(out, "hexagon interior: {interior}").unwrap();
    writeln!(out, "Q(f^v) = {dual}").unwrap();

    for (name, z) in set_functions().into_iter().filter(|(_, z)| z.n() == 3) {
        for (mn, m) in [
            ("B3", Matroid::boolean(3)),
            ("U23", Matroid::uniform(2, 3)),
            ("U13", Matroid::uniform(1, 3)),
        ] {
            let (lhs, rhs) = reciprocity_pair(&z.piecewise_monomial(), &m).unwrap();
            writeln!(out, "{name} / {mn}: {}", if lhs == rhs { "holds" } else { "fails" }).unwrap();
        }
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
