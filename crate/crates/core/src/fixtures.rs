//! Small named matroids and set functions, plus seeded random instances.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::laurent::LaurentPoly;
use crate::matroid::{GroundSubset, Matroid};
use crate::plaur::PiecewiseLaurent;
use crate::polytope::SetFunction;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rank of a list of vectors over `GF(p)`.
fn rank_mod_p(vectors: &[&Vec<u8>], p: u8) -> usize {
    let mut rows: Vec<Vec<u8>> = vectors.iter().map(|v| v.iter().map(|x| x % p).collect()).collect();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = (1..p)
            .find(|&x| (x as u16 * rows[rank][col] as u16) % p as u16 == 1)
            .expect("p prime");
        for v in rows[rank].iter_mut() {
            *v = ((*v as u16 * inv as u16) % p as u16) as u8;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col] as u16;
                for (v, &q) in row.iter_mut().zip(&pivot_row) {
                    let sub = (factor * q as u16) % p as u16;
                    *v = ((*v as u16 + p as u16 - sub) % p as u16) as u8;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The column matroid of `columns` over `GF(p)`; zero columns are loops.
pub fn vector_matroid(columns: &[Vec<u8>], p: u8) -> Matroid {
    let n = columns.len();
    let all: Vec<&Vec<u8>> = columns.iter().collect();
    let r = rank_mod_p(&all, p);
    let bases = GroundSubset::all(n)
        .filter(|s| s.len() == r && rank_mod_p(&s.elements().map(|i| &columns[i]).collect::<Vec<_>>(), p) == r);
    Matroid::new_unchecked(n, bases)
}

/// `a ⊕ b` on `a.n() + b.n()` elements, `b` shifted up.
pub fn direct_sum(a: &Matroid, b: &Matroid) -> Matroid {
    let shift = a.n();
    let mut bases = Vec::new();
    for x in a.bases() {
        for y in b.bases() {
            bases.push(x.union(GroundSubset(y.0 << shift)));
        }
    }
    Matroid::new_unchecked(a.n() + b.n(), bases)
}

pub fn loops(k: usize) -> Matroid {
    Matroid::uniform(0, k)
}

/// Named matroids on at most five elements, loop-bearing ones included.
pub fn matroids() -> Vec<(String, Matroid)> {
    let u = Matroid::uniform;
    let named = |s: &str, m: Matroid| (s.to_string(), m);
    vec![
        named("B1", Matroid::boolean(1)),
        named("L1", loops(1)),
        named("B2", Matroid::boolean(2)),
        named("U12", u(1, 2)),
        named("B1+L1", direct_sum(&Matroid::boolean(1), &loops(1))),
        named("L2", loops(2)),
        named("B3", Matroid::boolean(3)),
        named("U13", u(1, 3)),
        named("U23", u(2, 3)),
        named("U12+L1", direct_sum(&u(1, 2), &loops(1))),
        named("L1+U12", direct_sum(&loops(1), &u(1, 2))),
        named("U12+B1", direct_sum(&u(1, 2), &Matroid::boolean(1))),
        named("B4", Matroid::boolean(4)),
        named("U14", u(1, 4)),
        named("U24", u(2, 4)),
        named("U34", u(3, 4)),
        named("U23+B1", direct_sum(&u(2, 3), &Matroid::boolean(1))),
        named("U23+L1", direct_sum(&u(2, 3), &loops(1))),
        named("U12+U12", direct_sum(&u(1, 2), &u(1, 2))),
        named("U25", u(2, 5)),
        named("U35", u(3, 5)),
        named(
            "K4-e",
            vector_matroid(
                &[
                    vec![1, 1, 0, 0],
                    vec![1, 0, 1, 0],
                    vec![0, 1, 1, 0],
                    vec![0, 1, 0, 1],
                    vec![0, 0, 1, 1],
                ],
                2,
            ),
        ),
        named("U24+L1", direct_sum(&u(2, 4), &loops(1))),
        named(
            "L1+U13+B1",
            direct_sum(&direct_sum(&loops(1), &u(1, 3)), &Matroid::boolean(1)),
        ),
    ]
}

pub fn hexagon() -> SetFunction {
    SetFunction::from_fn(3, |s| [0, 6, 10, 12][s.len()])
}

/// `k` times the standard simplex `{x ≥ 0, Σ x = k}` in `n` coordinates.
pub fn simplex(n: usize, k: i64) -> SetFunction {
    SetFunction::from_fn(n, |_| k)
}

/// The permutohedron with vertices the permutations of `(n, n-1, …, 1)`.
pub fn permutohedron(n: usize) -> SetFunction {
    SetFunction::from_fn(n, |s| (0..s.len()).map(|i| (n - i) as i64).sum())
}

/// `z(S) = |∪_{i∈S} A_i|`.
pub fn coverage(sets: &[u32]) -> SetFunction {
    SetFunction::from_fn(sets.len(), |s| {
        s.elements().fold(0u32, |acc, i| acc | sets[i]).count_ones() as i64
    })
}

/// `z(S) + Σ_{i∈S} w_i`, the translate of `z` by `w`.
pub fn translate(z: &SetFunction, w: &[i64]) -> SetFunction {
    SetFunction::from_fn(z.n(), |s| z.get(s) + s.elements().map(|i| w[i]).sum::<i64>())
}

/// Named submodular set functions on at most five elements.
pub fn set_functions() -> Vec<(String, SetFunction)> {
    let named = |s: &str, z: SetFunction| (s.to_string(), z);
    vec![
        named("point1", simplex(1, 2)),
        named("segment3", simplex(2, 3)),
        named(
            "segment234",
            SetFunction::new(2, vec![0, 2, 3, 4]).expect("four values"),
        ),
        named("U12-rank", SetFunction::rank_function(&Matroid::uniform(1, 2))),
        named("hexagon", hexagon()),
        named("simplex3x3", simplex(3, 3)),
        named("permutohedron3", permutohedron(3)),
        named("U23-rank", SetFunction::rank_function(&Matroid::uniform(2, 3))),
        named("hexagon-shifted", translate(&hexagon(), &[-1, 0, 2])),
        named("coverage3", coverage(&[0b011, 0b110, 0b101])),
        named("permutohedron4", permutohedron(4)),
        named("U24-rank", SetFunction::rank_function(&Matroid::uniform(2, 4))),
        named("simplex4x2", simplex(4, 2)),
        named("coverage4", coverage(&[0b0011, 0b0110, 0b1100, 0b1001])),
        named("U25-rank", SetFunction::rank_function(&Matroid::uniform(2, 5))),
        named("simplex5x1", simplex(5, 1)),
        named(
            "U15+U25",
            SetFunction::rank_function(&Matroid::uniform(1, 5))
                .plus(&SetFunction::rank_function(&Matroid::uniform(2, 5))),
        ),
    ]
}

/// A random `GF(2)` or `GF(3)` column matroid; zero columns give loops.
pub fn random_matroid(rng: &mut impl Rng, n: usize) -> Matroid {
    let p = *[2u8, 3].choose(rng).expect("nonempty");
    let r = rng.gen_range(1..=n.max(1));
    let columns: Vec<Vec<u8>> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.12) {
                vec![0; r]
            } else {
                (0..r).map(|_| rng.gen_range(0..p)).collect()
            }
        })
        .collect();
    vector_matroid(&columns, p)
}

pub fn random_loopless_matroid(rng: &mut impl Rng, n: usize) -> Matroid {
    loop {
        let m = random_matroid(rng, n);
        if m.is_loopless() {
            return m;
        }
    }
}

/// Nonnegative combinations of matroid ranks, concave functions of `|S|`
/// and coverage functions, plus a modular part.
pub fn random_submodular(rng: &mut impl Rng, n: usize) -> SetFunction {
    let mut z = SetFunction::zero(n);
    for _ in 0..rng.gen_range(1..=2) {
        let part = match rng.gen_range(0..3) {
            0 => SetFunction::rank_function(&random_matroid(rng, n)).dilate(rng.gen_range(1..=2)),
            1 => {
                let mut slope = rng.gen_range(1..=3i64);
                let mut g = vec![0i64];
                for _ in 0..n {
                    g.push(g.last().copied().unwrap_or(0) + slope);
                    slope -= rng.gen_range(0..=1);
                }
                SetFunction::from_fn(n, |s| g[s.len()])
            }
            _ => {
                let sets: Vec<u32> = (0..n).map(|_| rng.gen_range(0..16u32)).collect();
                coverage(&sets)
            }
        };
        z = z.plus(&part);
    }
    let w: Vec<i64> = (0..n).map(|_| rng.gen_range(-1..=1)).collect();
    translate(&z, &w)
}

/// Arbitrary integer data with `a(∅) = 0`.
pub fn random_delta(rng: &mut impl Rng, n: usize, bound: i64) -> SetFunction {
    SetFunction::from_fn(n, |_| rng.gen_range(-bound..=bound))
}

/// A valid family that is usually not monomial: a small integer combination
/// of monomial families, sometimes multiplied by a constant polynomial.
pub fn random_family(rng: &mut impl Rng, n: usize) -> PiecewiseLaurent {
    let mut f = PiecewiseLaurent::constant(n, LaurentPoly::zero(n));
    for _ in 0..rng.gen_range(1..=3) {
        let c = rng.gen_range(-2..=2i64);
        let term = PiecewiseLaurent::from_delta(&random_delta(rng, n, 2)).map(|p| p.scale(&c.into()));
        f = f.add(&term).expect("same shape");
    }
    if rng.gen_bool(0.3) {
        let i = rng.gen_range(0..n);
        let scalar = &LaurentPoly::one(n) + &LaurentPoly::var(n, i);
        f = f.map(|p| p * &scalar);
    }
    f
}
