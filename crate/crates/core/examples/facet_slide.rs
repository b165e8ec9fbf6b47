// Sliding one facet of the hexagon inward splits Q_M into the slid
// polytope plus a product over the restriction and contraction.

use std::fmt::Write;

use brion::brion::recursion_check;
use brion::fixtures::hexagon;
use brion::matroid::{GroundSubset, Matroid};

pub fn run_example() -> String {
    let mut out = String::new();
    let z = hexagon();
    let f = z.piecewise_monomial();
    for m in [Matroid::boolean(3), Matroid::uniform(2, 3), Matroid::uniform(1, 3)] {
        writeln!(out, "M with bases {:?}", m.bases_one_indexed()).unwrap();
        for t in GroundSubset::all(3).filter(|t| !t.is_empty() && t.len() < 3) {
            let check = recursion_check(&f, &m, t).unwrap();
            assert!(check.holds());
            writeln!(
                out,
                "  T = {t}: {} terms = {} + {} x {}",
                check.q.len(),
                check.q_slide.len(),
                check.q_restrict.len(),
                check.q_contract.len()
            )
            .unwrap();
        }
    }
    let slid = z.slide_facet(GroundSubset::from_one_indexed(&[1]).unwrap()).unwrap();
    writeln!(
        out,
        "hexagon points {}, after sliding {{1}}: {}",
        count(&z),
        count(&slid)
    )
    .unwrap();
    out
}

fn count(z: &brion::polytope::SetFunction) -> usize {
    z.enumerate_lattice_points().unwrap().len()
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
