// Bases, greedy bases, flats and minors of a few small matroids.

use std::fmt::Write;

use brion::fixtures::{direct_sum, loops, matroids};
use brion::matroid::{GroundSubset, Matroid};
use brion::perm::Permutation;

pub fn run_example() -> String {
    let mut out = String::new();
    let m = direct_sum(&Matroid::uniform(2, 3), &loops(1));
    writeln!(out, "U23 + loop: bases {:?}", m.bases_one_indexed()).unwrap();
    writeln!(out, "rank {}, loops {}", m.rank(), m.loops()).unwrap();
    for sigma in Permutation::all(4).take(6) {
        writeln!(out, "  greedy basis of {sigma}: {}", m.greedy_basis(&sigma)).unwrap();
    }
    let flats: Vec<String> = m.flats().iter().map(ToString::to_string).collect();
    writeln!(out, "flats: {}", flats.join(" ")).unwrap();

    let t = GroundSubset::from_one_indexed(&[1, 4]).unwrap();
    let (r, _) = m.restrict(t);
    let (c, _) = m.contract(t);
    writeln!(out, "M|{t}: bases {:?}", r.bases_one_indexed()).unwrap();
    writeln!(out, "M/{t}: bases {:?}", c.bases_one_indexed()).unwrap();

    let named = matroids();
    let looped = named.iter().filter(|(_, m)| !m.is_loopless()).count();
    writeln!(out, "{} fixture matroids, {looped} with loops", named.len()).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
