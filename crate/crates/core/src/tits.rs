//! Tits product, opposite chambers through a face, and nested intervals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::faces::{FaceComplex, FaceId, Sign};
use crate::geometry::{side_of, Rational};
use crate::report::{Counterexample, Details, ReportEntry};

/// A pair `lower ⪯ upper` of faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NestedFace {
    pub lower: FaceId,
    pub upper: FaceId,
}

impl NestedFace {
    /// Requires `lower ≺ upper` strictly.
    pub fn strict(c: &FaceComplex, lower: FaceId, upper: FaceId) -> Result<Self> {
        if lower == upper || !c.leq(lower, upper) {
            return Err(Error::NotNested { lower: lower.0, upper: upper.0 });
        }
        Ok(NestedFace { lower, upper })
    }

    /// Allows `lower = upper`.
    pub fn relaxed(c: &FaceComplex, lower: FaceId, upper: FaceId) -> Result<Self> {
        if !c.leq(lower, upper) {
            return Err(Error::NotNested { lower: lower.0, upper: upper.0 });
        }
        Ok(NestedFace { lower, upper })
    }
}

/// Sign-level Tits product.
pub fn product_signs(f: &[Sign], g: &[Sign]) -> Vec<Sign> {
    f.iter().zip(g).map(|(&a, &b)| if a.is_zero() { b } else { a }).collect()
}

impl FaceComplex {
    /// The face `FG`: signs of `F` where nonzero, of `G` elsewhere.
    pub fn tits_product(&self, f: FaceId, g: FaceId) -> Result<FaceId> {
        self.require(product_signs(self.signs(f).signs(), self.signs(g).signs()))
    }

    /// The chamber `D̃_A`: signs of `D` flipped where `A` vanishes.
    pub fn opposite_through(&self, a: FaceId, d: FaceId) -> Result<FaceId> {
        self.require_chamber(d)?;
        if !self.leq(a, d) {
            return Err(Error::NotNested { lower: a.0, upper: d.0 });
        }
        let signs = self
            .signs(a)
            .signs()
            .iter()
            .zip(self.signs(d).signs())
            .map(|(&sa, &sd)| if sa.is_zero() { -sd } else { sa })
            .collect();
        self.require(signs)
    }

    /// `{K : A ⪯ K ⪯ D}`.
    pub fn nested_interval(&self, a: FaceId, d: FaceId) -> Result<Vec<FaceId>> {
        if !self.leq(a, d) {
            return Err(Error::NotNested { lower: a.0, upper: d.0 });
        }
        Ok(self.ids().filter(|&k| self.leq(a, k) && self.leq(k, d)).collect())
    }

    /// `rk F = dim F - c_A`.
    pub fn rank(&self, f: FaceId) -> usize {
        self.face(f).dim - self.min_dim()
    }

    /// Every pair `(A, D)` with `A ⪯ D` and `D` a chamber, ordered by `(A, D)`.
    pub fn nested_pairs_to_chambers(&self) -> Vec<NestedFace> {
        let mut out = Vec::new();
        for a in self.ids() {
            for &d in self.chambers() {
                if self.leq(a, d) {
                    out.push(NestedFace { lower: a, upper: d });
                }
            }
        }
        out
    }
}

/// Step used for the segment check: `p(t) = (1 - t) x_F + t x_G`.
pub fn path_step() -> Rational {
    Rational::new(1.into(), (1u64 << 20).into())
}

/// Semigroup checks: associativity over all triples (when the complex has at
/// most `max_triple_faces` faces), idempotence, `F ⪯ G ⇔ FG = G`, and the
/// segment check on `random_pairs` seeded pairs of faces.
pub fn tits_suite(c: &FaceComplex, random_pairs: usize, seed: u64, max_triple_faces: usize) -> ReportEntry {
    let mut details = Details::default();
    let ids: Vec<FaceId> = c.ids().collect();
    let record = |details: &mut Details, what: String, faces: Vec<FaceId>| {
        details.counterexamples.push(Counterexample::new(what, faces));
    };

    let mut table = vec![FaceId(0); ids.len() * ids.len()];
    for &f in &ids {
        for &g in &ids {
            match c.tits_product(f, g) {
                Ok(k) => table[f.0 * ids.len() + g.0] = k,
                Err(e) => {
                    record(&mut details, format!("product missing: {e}"), vec![f, g]);
                    return ReportEntry::from_details("tits", details);
                }
            }
        }
    }
    let prod = |f: FaceId, g: FaceId| table[f.0 * ids.len() + g.0];

    for &f in &ids {
        details.checked += 1;
        if prod(f, f) != f {
            record(&mut details, "FF != F".into(), vec![f]);
        }
        for &g in &ids {
            details.checked += 1;
            if c.leq(f, g) != (prod(f, g) == g) {
                record(&mut details, "F <= G disagrees with FG = G".into(), vec![f, g]);
            }
        }
    }

    if ids.len() <= max_triple_faces {
        for &e in &ids {
            for &f in &ids {
                let ef = prod(e, f);
                for &g in &ids {
                    details.checked += 1;
                    if prod(ef, g) != prod(e, prod(f, g)) {
                        record(&mut details, "(EF)G != E(FG)".into(), vec![e, f, g]);
                    }
                }
            }
        }
    } else {
        details.skipped += 1;
        details.note("associativity", format!("skipped: {} faces exceeds {}", ids.len(), max_triple_faces));
    }

    let t = path_step();
    let one_minus_t = Rational::from_integer(1.into()) - &t;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random_pairs {
        let f = ids[rng.gen_range(0..ids.len())];
        let g = ids[rng.gen_range(0..ids.len())];
        details.checked += 1;
        let xf = &c.face(f).witness;
        let xg = &c.face(g).witness;
        let p: Vec<Rational> = xf.iter().zip(xg).map(|(a, b)| &one_minus_t * a + &t * b).collect();
        let expected = c.signs(prod(f, g));
        let ok = c
            .arrangement()
            .hyperplanes()
            .iter()
            .zip(expected.signs())
            .all(|(h, &s)| side_of(h, &p).map(|v| v == s).unwrap_or(false));
        if !ok {
            record(&mut details, "segment start does not lie in FG".into(), vec![f, g]);
        }
    }
    details.note("random_pairs", random_pairs.to_string());
    details.note("seed", seed.to_string());
    ReportEntry::from_details("tits", details)
}
