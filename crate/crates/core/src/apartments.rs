//! Apartments: chambers of sub-arrangements, and the faces of the full
//! arrangement lying inside them.

use std::fmt;

use crate::error::{Error, Result};
use crate::faces::{enumerate_faces, FaceComplex, FaceId, Sign};
use crate::geometry::{feasible_interior, Arrangement};

/// The open region `{x : sign_H(x) = base_H for H in subset}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Apartment {
    subset: Vec<usize>,
    base_signs: Vec<Sign>,
}

impl Apartment {
    /// The apartment of the empty subset, all of `R^n`.
    pub fn whole_space() -> Self {
        Apartment { subset: Vec::new(), base_signs: Vec::new() }
    }

    /// Validated constructor; `signs` is aligned with `subset`.
    pub fn new(arr: &Arrangement, subset: &[usize], signs: &[Sign]) -> Result<Self> {
        if subset.len() != signs.len() {
            return Err(Error::InvalidApartment(format!(
                "{} hyperplanes but {} signs",
                subset.len(),
                signs.len()
            )));
        }
        let mut pairs: Vec<(usize, Sign)> = subset.iter().copied().zip(signs.iter().copied()).collect();
        pairs.sort();
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidApartment(format!("hyperplane {} listed twice", w[0].0)));
            }
        }
        let mut constraints = Vec::with_capacity(pairs.len());
        for &(h, s) in &pairs {
            if s.is_zero() {
                return Err(Error::InvalidApartment(format!("zero sign on hyperplane {h}")));
            }
            constraints.push((arr.hyperplane(h)?, s));
        }
        if feasible_interior(arr.dim(), &constraints)?.is_none() {
            return Err(Error::InvalidApartment("region is empty".into()));
        }
        Ok(Apartment { subset: pairs.iter().map(|p| p.0).collect(), base_signs: pairs.iter().map(|p| p.1).collect() })
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn base_signs(&self) -> &[Sign] {
        &self.base_signs
    }

    pub fn is_whole_space(&self) -> bool {
        self.subset.is_empty()
    }

    /// Whether a face with these signs lies in the apartment.
    pub fn contains(&self, signs: &[Sign]) -> bool {
        self.subset.iter().zip(&self.base_signs).all(|(&h, &s)| signs[h] == s)
    }

    /// Whether a face with these signs lies in the closure of the apartment.
    pub fn closure_contains(&self, signs: &[Sign]) -> bool {
        self.subset.iter().zip(&self.base_signs).all(|(&h, &s)| signs[h] == s || signs[h].is_zero())
    }

    /// `F_A^K`.
    pub fn faces_in(&self, c: &FaceComplex) -> Vec<FaceId> {
        c.ids().filter(|&f| self.contains(c.signs(f).signs())).collect()
    }

    /// `C_A^K`, in id order.
    pub fn chambers_in(&self, c: &FaceComplex) -> Vec<FaceId> {
        c.chambers().iter().copied().filter(|&f| self.contains(c.signs(f).signs())).collect()
    }

    /// Hyperplanes `H` with `dim(H ∩ K̄) = n - 1`.
    pub fn facet_hyperplanes(&self, c: &FaceComplex) -> Vec<usize> {
        let n = c.dim();
        let mut out: Vec<usize> = c
            .faces()
            .iter()
            .filter(|f| f.dim + 1 == n && self.closure_contains(f.signs.signs()))
            .flat_map(|f| f.signs.zero_set())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl fmt::Display for Apartment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.subset.is_empty() {
            return write!(f, "R^n");
        }
        let parts: Vec<String> = self.subset.iter().zip(&self.base_signs).map(|(h, s)| format!("H{}{}", h + 1, s)).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// All chambers of the sub-arrangement on `subset`, in sign order.
pub fn enumerate_apartments(arr: &Arrangement, subset: &[usize]) -> Result<Vec<Apartment>> {
    let mut subset = subset.to_vec();
    subset.sort_unstable();
    subset.dedup();
    let sub = arr.sub_arrangement(&subset)?;
    let complex = enumerate_faces(&sub)?;
    Ok(complex
        .chambers()
        .iter()
        .map(|&ch| Apartment { subset: subset.clone(), base_signs: complex.signs(ch).signs().to_vec() })
        .collect())
}

/// The apartment of `A \ A_E` containing `E`: inside it every hyperplane of
/// the arrangement that meets the apartment passes through `E`.
pub fn central_apartment_around(c: &FaceComplex, e: FaceId) -> Result<Apartment> {
    if c.is_chamber(e) {
        return Err(Error::IsAChamber(e.0));
    }
    let signs = c.signs(e).signs();
    let subset: Vec<usize> = (0..signs.len()).filter(|&h| !signs[h].is_zero()).collect();
    let base_signs = subset.iter().map(|&h| signs[h]).collect();
    Ok(Apartment { subset, base_signs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::faces::SignVector;
    use crate::geometry::Hyperplane;

    fn arr(dim: usize, hs: &[(&[i64], i64)]) -> Arrangement {
        Arrangement::new(dim, hs.iter().map(|(a, b)| Hyperplane::from_ints(a, *b).unwrap()).collect()).unwrap()
    }

    fn names(c: &FaceComplex, ids: &[FaceId]) -> Vec<String> {
        ids.iter().map(|&f| c.signs(f).to_string()).collect()
    }

    #[test]
    fn enumeration_counts() {
        let r1 = arr(1, &[(&[1], 0)]);
        assert_eq!(enumerate_apartments(&r1, &[]).unwrap(), vec![Apartment::whole_space()]);
        assert_eq!(enumerate_apartments(&r1, &[0]).unwrap().len(), 2);
        let cross = arr(2, &[(&[1, 0], 0), (&[0, 1], 0)]);
        assert_eq!(enumerate_apartments(&cross, &[0]).unwrap().len(), 2);
        assert!(enumerate_apartments(&cross, &[5]).is_err());
    }

    #[test]
    fn faces_and_chambers_in_half_plane() {
        let cross = arr(2, &[(&[1, 0], 0), (&[0, 1], 0)]);
        let c = enumerate_faces(&cross).unwrap();
        let k = Apartment::new(&cross, &[0], &[Sign::Plus]).unwrap();
        assert_eq!(names(&c, &k.faces_in(&c)), ["++", "+0", "+-"]);
        assert_eq!(names(&c, &k.chambers_in(&c)), ["++", "+-"]);
        assert_eq!(k.to_string(), "H1+");
        let all = Apartment::whole_space();
        assert_eq!(all.faces_in(&c).len(), c.len());
        assert_eq!(all.chambers_in(&c).len(), 4);

        let r1 = arr(1, &[(&[1], 0)]);
        let c1 = enumerate_faces(&r1).unwrap();
        let plus = Apartment::new(&r1, &[0], &[Sign::Plus]).unwrap();
        assert_eq!(plus.chambers_in(&c1).len(), 1);
    }

    #[test]
    fn invalid_apartments() {
        let par = arr(2, &[(&[1, 0], 0), (&[1, 0], 1)]);
        assert!(Apartment::new(&par, &[0, 1], &[Sign::Minus, Sign::Plus]).is_err());
        assert!(Apartment::new(&par, &[0], &[Sign::Zero]).is_err());
        assert!(Apartment::new(&par, &[0], &[]).is_err());
        assert!(Apartment::new(&par, &[0, 0], &[Sign::Plus, Sign::Plus]).is_err());
        assert!(Apartment::new(&par, &[1, 0], &[Sign::Minus, Sign::Plus]).is_ok());
    }

    #[test]
    fn central_apartments() {
        let cross = arr(2, &[(&[1, 0], 0), (&[0, 1], 0)]);
        let c = enumerate_faces(&cross).unwrap();
        let v = c.lookup(SignVector::parse("00").unwrap().signs()).unwrap();
        assert_eq!(central_apartment_around(&c, v).unwrap(), Apartment::whole_space());
        let ray = c.lookup(SignVector::parse("0+").unwrap().signs()).unwrap();
        let k = central_apartment_around(&c, ray).unwrap();
        assert_eq!(k.subset(), &[1]);
        assert_eq!(k.base_signs(), &[Sign::Plus]);
        let ch = c.chambers()[0];
        assert_eq!(central_apartment_around(&c, ch), Err(Error::IsAChamber(ch.0)));

        let gen = arr(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 1)]);
        let c = enumerate_faces(&gen).unwrap();
        let v = c.lookup(SignVector::parse("00-").unwrap().signs()).unwrap();
        let k = central_apartment_around(&c, v).unwrap();
        assert_eq!(k.subset(), &[2]);
        assert_eq!(k.base_signs(), &[Sign::Minus]);
    }
}
