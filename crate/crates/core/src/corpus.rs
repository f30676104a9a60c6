//! Small named arrangements and seeded random ones.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{Arrangement, Hyperplane};

fn build(dim: usize, hs: &[(&[i64], i64)]) -> Arrangement {
    let hyperplanes = hs.iter().map(|(a, b)| Hyperplane::from_ints(a, *b).expect("nonzero normal")).collect();
    Arrangement::new(dim, hyperplanes).expect("valid arrangement")
}

/// `{x = 0}` in `R^1`.
pub fn r1() -> Arrangement {
    build(1, &[(&[1], 0)])
}

/// The coordinate axes in `R^2`.
pub fn crossing_lines() -> Arrangement {
    build(2, &[(&[1, 0], 0), (&[0, 1], 0)])
}

/// `x = 0`, `y = 0`, `x + y = 1`.
pub fn generic3() -> Arrangement {
    build(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 1)])
}

/// `x = 0`, `x = 1`.
pub fn parallel2() -> Arrangement {
    build(2, &[(&[1, 0], 0), (&[1, 0], 1)])
}

/// Two horizontal and two vertical lines, oriented so that the apartment
/// `H1^-` carries the six chambers of the worked example.
pub fn figure1() -> Arrangement {
    build(2, &[(&[0, 1], 10), (&[-1, 0], -1), (&[-1, 0], -2), (&[0, 1], 0)])
}

/// `x = 0`, `y = 0`, `x + y = 1` in `R^3`: a triangular prism.
pub fn prism3() -> Arrangement {
    build(3, &[(&[1, 0, 0], 0), (&[0, 1, 0], 0), (&[1, 1, 0], 1)])
}

/// The coordinate planes and `x + y + z = 1`.
pub fn generic4_3d() -> Arrangement {
    build(3, &[(&[1, 0, 0], 0), (&[0, 1, 0], 0), (&[0, 0, 1], 0), (&[1, 1, 1], 1)])
}

pub fn named() -> Vec<(&'static str, Arrangement)> {
    vec![
        ("r1", r1()),
        ("crossing_lines", crossing_lines()),
        ("generic3", generic3()),
        ("parallel2", parallel2()),
        ("figure1", figure1()),
        ("prism3", prism3()),
        ("generic4_3d", generic4_3d()),
    ]
}

/// `m` distinct hyperplanes in `R^dim` with integer coefficients in
/// `[-bound, bound]`.
pub fn random_arrangement(rng: &mut impl Rng, dim: usize, m: usize, bound: i64) -> Arrangement {
    let mut hyperplanes: Vec<Hyperplane> = Vec::with_capacity(m);
    while hyperplanes.len() < m {
        let normal: Vec<i64> = (0..dim).map(|_| rng.gen_range(-bound..=bound)).collect();
        let offset = rng.gen_range(-bound..=bound);
        let Ok(h) = Hyperplane::from_ints(&normal, offset) else { continue };
        if hyperplanes.iter().all(|g| !g.same_subspace(&h)) {
            hyperplanes.push(h);
        }
    }
    Arrangement::new(dim, hyperplanes).expect("distinct hyperplanes")
}

/// `per_size` random arrangements for every size `1..=max_m`, determined by `seed`.
pub fn random_corpus(seed: u64, dim: usize, max_m: usize, per_size: usize) -> Vec<Arrangement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for m in 1..=max_m {
        for _ in 0..per_size {
            out.push(random_arrangement(&mut rng, dim, m, 3));
        }
    }
    out
}
