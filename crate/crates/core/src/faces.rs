//! The face poset of an arrangement, encoded by sign vectors.

use std::collections::HashMap;
use std::fmt;
use std::ops::Neg;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{affine_rank, feasible_interior, side_of, Arrangement, Rational};

/// Side of a hyperplane. The derived order `+ < 0 < -` fixes face ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub const ALL: [Sign; 3] = [Sign::Plus, Sign::Zero, Sign::Minus];

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Zero => '0',
            Sign::Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '0' => Some(Sign::Zero),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Zero => Sign::Zero,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(pub Vec<Sign>);

impl SignVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, h: usize) -> Sign {
        self.0[h]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn zero_set(&self) -> Vec<usize> {
        (0..self.len()).filter(|&h| self.0[h].is_zero()).collect()
    }

    pub fn has_zero(&self) -> bool {
        self.0.iter().any(|s| s.is_zero())
    }

    pub fn parse(text: &str) -> Option<SignVector> {
        text.chars().map(Sign::from_char).collect::<Option<Vec<_>>>().map(SignVector)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// `F ⪯ G`: every nonzero sign of `F` agrees with `G`.
pub fn signs_leq(f: &[Sign], g: &[Sign]) -> bool {
    f.iter().zip(g).all(|(a, b)| a.is_zero() || a == b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FaceId(pub usize);

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    pub signs: SignVector,
    pub dim: usize,
    pub witness: Vec<Rational>,
}

impl Face {
    pub fn is_chamber(&self) -> bool {
        !self.signs.has_zero()
    }
}

#[derive(Clone, Debug)]
pub struct FaceComplex {
    arrangement: Arrangement,
    faces: Vec<Face>,
    index: HashMap<SignVector, FaceId>,
    order: Vec<bool>,
    chambers: Vec<FaceId>,
    chamber_pos: Vec<Option<usize>>,
    min_dim: usize,
}

impl FaceComplex {
    fn build(arrangement: Arrangement, mut raw: Vec<(Vec<crate::faces::Sign>, Vec<Rational>)>) -> Self {
        raw.sort_by(|a, b| a.0.cmp(&b.0));
        let n = arrangement.dim();
        let faces: Vec<Face> = raw
            .into_iter()
            .enumerate()
            .map(|(i, (signs, witness))| {
                let normals: Vec<Vec<Rational>> = signs
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| s.is_zero())
                    .map(|(h, _)| arrangement.hyperplanes()[h].normal().to_vec())
                    .collect();
                Face { id: FaceId(i), signs: SignVector(signs), dim: n - affine_rank(&normals), witness }
            })
            .collect();

        let len = faces.len();
        let mut order = vec![false; len * len];
        for f in &faces {
            for g in &faces {
                order[f.id.0 * len + g.id.0] = signs_leq(f.signs.signs(), g.signs.signs());
            }
        }
        let index = faces.iter().map(|f| (f.signs.clone(), f.id)).collect();
        let chambers: Vec<FaceId> = faces.iter().filter(|f| f.is_chamber()).map(|f| f.id).collect();
        let mut chamber_pos = vec![None; len];
        for (pos, c) in chambers.iter().enumerate() {
            chamber_pos[c.0] = Some(pos);
        }
        let min_dim = faces.iter().map(|f| f.dim).min().unwrap_or(n);
        FaceComplex { arrangement, faces, index, order, chambers, chamber_pos, min_dim }
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.arrangement.dim()
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id.0]
    }

    pub fn ids(&self) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.faces.len()).map(FaceId)
    }

    pub fn signs(&self, id: FaceId) -> &SignVector {
        &self.faces[id.0].signs
    }

    pub fn chambers(&self) -> &[FaceId] {
        &self.chambers
    }

    pub fn is_chamber(&self, id: FaceId) -> bool {
        self.chamber_pos[id.0].is_some()
    }

    /// Position of a chamber in [`FaceComplex::chambers`].
    pub fn chamber_index(&self, id: FaceId) -> Option<usize> {
        self.chamber_pos[id.0]
    }

    /// `c_A`, the smallest face dimension.
    pub fn min_dim(&self) -> usize {
        self.min_dim
    }

    pub fn lookup(&self, signs: &[Sign]) -> Option<FaceId> {
        self.index.get(&SignVector(signs.to_vec())).copied()
    }

    pub(crate) fn require(&self, signs: Vec<Sign>) -> Result<FaceId> {
        let sv = SignVector(signs);
        self.index.get(&sv).copied().ok_or(Error::MissingFace(sv))
    }

    pub(crate) fn require_chamber(&self, id: FaceId) -> Result<()> {
        if self.is_chamber(id) {
            Ok(())
        } else {
            Err(Error::NotAChamber(id.0))
        }
    }

    /// `F ⪯ G`.
    pub fn leq(&self, f: FaceId, g: FaceId) -> bool {
        self.order[f.0 * self.faces.len() + g.0]
    }

    /// All faces `F ⪯ c`.
    pub fn closure_faces(&self, c: FaceId) -> Vec<FaceId> {
        self.ids().filter(|&f| self.leq(f, c)).collect()
    }

    /// The codimension-one faces in the closure of chamber `c`.
    pub fn panels(&self, c: FaceId) -> Result<Vec<FaceId>> {
        self.require_chamber(c)?;
        let n = self.dim();
        Ok(self
            .closure_faces(c)
            .into_iter()
            .filter(|&f| !self.is_chamber(f) && self.face(f).dim + 1 == n)
            .collect())
    }

    /// Indices of the hyperplanes containing a non-chamber face.
    pub fn centralization(&self, f: FaceId) -> Result<Vec<usize>> {
        if self.is_chamber(f) {
            return Err(Error::IsAChamber(f.0));
        }
        Ok(self.signs(f).zero_set())
    }
}

/// Builds the face poset by inserting hyperplanes one at a time and splitting
/// every face into its LP-feasible `+`, `0`, `-` refinements.
pub fn enumerate_faces(arr: &Arrangement) -> Result<FaceComplex> {
    let n = arr.dim();
    let origin = feasible_interior(n, &[])?.expect("R^n is nonempty");
    let mut current: Vec<(Vec<Sign>, Vec<Rational>)> = vec![(Vec::new(), origin)];

    for (k, h) in arr.hyperplanes().iter().enumerate() {
        let prefix = &arr.hyperplanes()[..=k];
        let mut next = Vec::with_capacity(current.len() * 3);
        for (signs, witness) in current {
            let here = side_of(h, &witness)?;
            for s in Sign::ALL {
                let mut extended = signs.clone();
                extended.push(s);
                if s == here {
                    next.push((extended, witness.clone()));
                    continue;
                }
                let constraints: Vec<_> = prefix.iter().zip(extended.iter().copied()).collect();
                if let Some(p) = feasible_interior(n, &constraints)? {
                    next.push((extended, p));
                }
            }
        }
        current = next;
    }
    Ok(FaceComplex::build(arr.clone(), current))
}
