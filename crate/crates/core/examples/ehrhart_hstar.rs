// k ↦ χ*_M(k·z) is a polynomial; its h*-vector, and Ehrhart reciprocity
// when M is Boolean.

use std::fmt::Write;

use brion::euler::{default_kmax, hstar, interpolate_at};
use brion::fixtures::{hexagon, permutohedron, simplex};
use brion::matroid::Matroid;
use num_bigint::BigInt;

pub fn run_example() -> String {
    let mut out = String::new();
    let cases = [
        ("3Δ", simplex(3, 3)),
        ("hexagon", hexagon()),
        ("permutohedron4", permutohedron(4)),
    ];
    for (name, z) in &cases {
        let n = z.n();
        for (mn, m) in [
            ("boolean", Matroid::boolean(n)),
            ("uniform rank 2", Matroid::uniform(2, n)),
        ] {
            let h = hstar(&m, z, default_kmax(n)).unwrap();
            let e: Vec<String> = h.entries.iter().map(ToString::to_string).collect();
            writeln!(out, "{name}, {mn}: d = {}, h* = ({})", h.d, e.join(", ")).unwrap();
        }
        let values: Vec<BigInt> = z.ehrhart_values(n + 2).unwrap().into_iter().map(BigInt::from).collect();
        let interior = z.interior_lattice_points().unwrap().len();
        writeln!(
            out,
            "  E(-1) = {}, interior points {interior}",
            interpolate_at(&values, -1)
        )
        .unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
