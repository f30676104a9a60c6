//! The generalized Witt identities, checked as integer vectors indexed by
//! chambers.

use rayon::prelude::*;

use crate::error::Result;
use crate::euler::{classify, euler_closure, ChamberType};
use crate::faces::{FaceComplex, FaceId};
use crate::report::{Counterexample, Details, ReportEntry};

/// Coefficients of the formal chambers `x_C`, in [`FaceComplex::chambers`] order.
pub type ChamberVector = Vec<i64>;

fn sign_of_rank(c: &FaceComplex, f: FaceId) -> i64 {
    if c.rank(f) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Coordinate at `C`: `Σ (-1)^{rk F}` over `F ∈ [A, D]` with `FC = D`.
pub fn witt_lhs(c: &FaceComplex, a: FaceId, d: FaceId) -> Result<ChamberVector> {
    c.require_chamber(d)?;
    let interval = c.nested_interval(a, d)?;
    c.chambers()
        .iter()
        .map(|&ch| {
            let mut acc = 0;
            for &f in &interval {
                if c.tits_product(f, ch)? == d {
                    acc += sign_of_rank(c, f);
                }
            }
            Ok(acc)
        })
        .collect()
}

/// Coordinate at `C`: `(-1)^{rk D}` when `AC = D̃_A`, zero otherwise.
pub fn witt_rhs(c: &FaceComplex, a: FaceId, d: FaceId) -> Result<ChamberVector> {
    let opposite = c.opposite_through(a, d)?;
    let s = sign_of_rank(c, d);
    c.chambers().iter().map(|&ch| Ok(if c.tits_product(a, ch)? == opposite { s } else { 0 })).collect()
}

/// Coordinate at `C`: `Σ (-1)^{rk F}` over `F ⪯ D` with `FC = D`.
pub fn witt2_lhs(c: &FaceComplex, d: FaceId) -> Result<ChamberVector> {
    c.require_chamber(d)?;
    let closure = c.closure_faces(d);
    c.chambers()
        .iter()
        .map(|&ch| {
            let mut acc = 0;
            for &f in &closure {
                if c.tits_product(f, ch)? == d {
                    acc += sign_of_rank(c, f);
                }
            }
            Ok(acc)
        })
        .collect()
}

fn witt2_details(c: &FaceComplex, d: FaceId) -> Result<Details> {
    let mut details = Details::default();
    let kind = classify(c, d)?;
    if matches!(kind, ChamberType::Type1 | ChamberType::Unknown) {
        details.skipped += 1;
        details.note(&format!("skipped {d}"), format!("{kind:?}"));
        return Ok(details);
    }
    details.checked += 1;
    let lhs = witt2_lhs(c, d)?;
    let sign = if c.min_dim() % 2 == 0 { 1 } else { -1 };
    let diagonal = sign * euler_closure(c, d)?;
    for (k, &ch) in c.chambers().iter().enumerate() {
        let expected = if ch == d { diagonal } else { 0 };
        if lhs[k] != expected {
            details.counterexamples.push(Counterexample::new(
                format!("{kind:?} chamber: coefficient {} at chamber {ch}, expected {expected}", lhs[k]),
                vec![d, ch],
            ));
        }
    }
    Ok(details)
}

/// Off-diagonal vanishing and diagonal `(-1)^{c_A} χ(D̄)`; type-1 and
/// unclassified chambers are skipped.
pub fn witt2_check(c: &FaceComplex, d: FaceId) -> ReportEntry {
    let details = witt2_details(c, d).unwrap_or_else(|e| {
        let mut details = Details::default();
        details.counterexamples.push(Counterexample::new(e.to_string(), vec![d]));
        details
    });
    ReportEntry::from_details("witt2", details)
}

fn witt_pair(c: &FaceComplex, a: FaceId, d: FaceId) -> Result<Option<Counterexample>> {
    let (lhs, rhs) = (witt_lhs(c, a, d)?, witt_rhs(c, a, d)?);
    Ok((lhs != rhs).then(|| Counterexample::new(format!("lhs {lhs:?} != rhs {rhs:?}"), vec![a, d])))
}

/// Both identities over every nested pair and every eligible chamber.
pub fn witt_sweep(c: &FaceComplex) -> ReportEntry {
    let pairs = c.nested_pairs_to_chambers();
    let outcomes: Vec<_> = pairs.par_iter().map(|p| witt_pair(c, p.lower, p.upper)).collect();
    let mut details = Details::default();
    for (p, outcome) in pairs.iter().zip(outcomes) {
        details.checked += 1;
        match outcome {
            Ok(None) => {}
            Ok(Some(cx)) => details.counterexamples.push(cx),
            Err(e) => details.counterexamples.push(Counterexample::new(e.to_string(), vec![p.lower, p.upper])),
        }
    }
    let second: Vec<ReportEntry> = c.chambers().par_iter().map(|&d| witt2_check(c, d)).collect();
    for entry in second {
        details.merge(entry.details);
    }
    details.note("nested_pairs", pairs.len().to_string());
    ReportEntry::from_details("witt", details)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::faces::{enumerate_faces, SignVector};
    use crate::geometry::{Arrangement, Hyperplane};
    use crate::report::Status;

    fn complex(dim: usize, hs: &[(&[i64], i64)]) -> FaceComplex {
        let arr =
            Arrangement::new(dim, hs.iter().map(|(a, b)| Hyperplane::from_ints(a, *b).unwrap()).collect()).unwrap();
        enumerate_faces(&arr).unwrap()
    }

    fn id(c: &FaceComplex, s: &str) -> FaceId {
        c.lookup(SignVector::parse(s).unwrap().signs()).unwrap()
    }

    #[test]
    fn trivial_interval() {
        let c = complex(2, &[(&[1, 0], 0), (&[0, 1], 0)]);
        let d = id(&c, "+-");
        let lhs = witt_lhs(&c, d, d).unwrap();
        assert!(lhs.iter().all(|&x| x == 1));
        assert_eq!(lhs, witt_rhs(&c, d, d).unwrap());
    }

    #[test]
    fn r1_pair() {
        let c = complex(1, &[(&[1], 0)]);
        let (z, p, m) = (id(&c, "0"), id(&c, "+"), id(&c, "-"));
        let lhs = witt_lhs(&c, z, p).unwrap();
        assert_eq!(lhs[c.chamber_index(p).unwrap()], 0);
        assert_eq!(lhs[c.chamber_index(m).unwrap()], -1);
        assert_eq!(lhs, witt_rhs(&c, z, p).unwrap());
    }

    #[test]
    fn crossing_vertex() {
        let c = complex(2, &[(&[1, 0], 0), (&[0, 1], 0)]);
        let (v, d) = (id(&c, "00"), id(&c, "++"));
        assert_eq!(witt_lhs(&c, v, d).unwrap(), witt_rhs(&c, v, d).unwrap());
    }

    #[test]
    fn second_identity() {
        let c = complex(2, &[(&[1, 0], 0), (&[1, 0], 1)]);
        let slab = id(&c, "+-");
        let e = witt2_check(&c, slab);
        assert_eq!(e.status, Status::Pass);
        assert_eq!(witt2_lhs(&c, slab).unwrap()[c.chamber_index(slab).unwrap()], 1);

        let c = complex(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 1)]);
        let triangle = id(&c, "++-");
        let lhs = witt2_lhs(&c, triangle).unwrap();
        let k = c.chamber_index(triangle).unwrap();
        assert!(lhs.iter().enumerate().all(|(i, &x)| x == if i == k { 1 } else { 0 }));

        let c = complex(1, &[(&[1], 0)]);
        for &d in c.chambers() {
            assert_eq!(witt2_check(&c, d).status, Status::Skipped);
        }
    }

    #[test]
    fn sweeps() {
        for c in [
            complex(1, &[(&[1], 0)]),
            complex(2, &[(&[1, 0], 0), (&[0, 1], 0)]),
            complex(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 1)]),
        ] {
            let e = witt_sweep(&c);
            assert!(e.passed(), "{e:?}");
        }
    }
}
