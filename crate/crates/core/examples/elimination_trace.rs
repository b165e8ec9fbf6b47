// One step of the elimination, cone by cone: divided differences g, their
// sum h, and the case the top element falls into.

use std::fmt::Write;

use brion::brion::{eliminate_top, q_matroid_with, QOptions};
use brion::fixtures::hexagon;
use brion::matroid::Matroid;

pub fn run_example() -> String {
    let mut out = String::new();
    let f = hexagon().piecewise_monomial();
    for m in [
        Matroid::boolean(3),
        Matroid::uniform(2, 3),
        Matroid::uniform(1, 3),
        Matroid::uniform(0, 3),
    ] {
        writeln!(out, "bases {:?}", m.bases_one_indexed()).unwrap();
        let (next, steps) = eliminate_top(&f, &m).unwrap();
        for step in &steps {
            let k = step.k.map_or("-".to_string(), |k| k.to_string());
            writeln!(out, "  mu = {} case = {} k = {k}", step.mu, step.case.name()).unwrap();
            writeln!(out, "    h = {}", step.h).unwrap();
            writeln!(out, "    f = {}", step.f_out).unwrap();
        }
        assert!(next.validate().is_ok());
        let report = q_matroid_with(&f, &m, QOptions::traced()).unwrap();
        writeln!(out, "  Q has {} terms", report.result.len()).unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
