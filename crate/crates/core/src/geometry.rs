//! Exact rational geometry: hyperplanes, arrangements, and the LP-backed
//! predicates the face enumeration is built on.
//!
//! Orientation is global: `H^+ = {x : normal · x > offset}`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::faces::Sign;
use crate::lp::{Outcome, Problem, Relation};

pub type Rational = num_rational::BigRational;

pub(crate) fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    normal: Vec<Rational>,
    offset: Rational,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Result<Self> {
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::ZeroNormal);
        }
        Ok(Hyperplane { normal, offset })
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_ints(normal: &[i64], offset: i64) -> Result<Self> {
        Hyperplane::new(normal.iter().map(|&a| rational(a)).collect(), rational(offset))
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// `normal · p - offset`.
    pub fn evaluate(&self, p: &[Rational]) -> Result<Rational> {
        if p.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: p.len() });
        }
        let dot = self.normal.iter().zip(p).fold(Rational::zero(), |acc, (a, x)| acc + a * x);
        Ok(dot - &self.offset)
    }

    /// Scaled so that the first nonzero normal coefficient is 1.
    pub fn normalized(&self) -> Hyperplane {
        let lead = self.normal.iter().find(|a| !a.is_zero()).expect("nonzero normal").clone();
        Hyperplane {
            normal: self.normal.iter().map(|a| a / &lead).collect(),
            offset: &self.offset / &lead,
        }
    }

    /// Whether both hyperplanes describe the same affine subspace.
    pub fn same_subspace(&self, other: &Hyperplane) -> bool {
        self.dim() == other.dim() && self.normalized() == other.normalized()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        for h in &hyperplanes {
            if h.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: h.dim() });
            }
        }
        let normalized: Vec<Hyperplane> = hyperplanes.iter().map(Hyperplane::normalized).collect();
        for j in 0..normalized.len() {
            for i in 0..j {
                if normalized[i] == normalized[j] {
                    return Err(Error::DuplicateHyperplane { first: i, second: j });
                }
            }
        }
        Ok(Arrangement { dim, hyperplanes })
    }

    pub fn empty(dim: usize) -> Result<Self> {
        Arrangement::new(dim, Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane(&self, index: usize) -> Result<&Hyperplane> {
        self.hyperplanes.get(index).ok_or(Error::HyperplaneIndex { index, len: self.len() })
    }

    /// The sub-arrangement on `indices`, in the given order.
    pub fn sub_arrangement(&self, indices: &[usize]) -> Result<Arrangement> {
        let hs = indices.iter().map(|&i| self.hyperplane(i).cloned()).collect::<Result<Vec<_>>>()?;
        Arrangement::new(self.dim, hs)
    }

    /// Hex SHA-256 of the canonical text serialization.
    pub fn digest(&self) -> String {
        let text = crate::format::write_arrangement(self);
        Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Constraint list pairing each hyperplane with the given signs.
    pub fn constraints<'a>(&'a self, signs: &[Sign]) -> Vec<(&'a Hyperplane, Sign)> {
        self.hyperplanes.iter().zip(signs.iter().copied()).collect()
    }
}

pub fn side_of(h: &Hyperplane, p: &[Rational]) -> Result<Sign> {
    let v = h.evaluate(p)?;
    Ok(if v.is_positive() {
        Sign::Plus
    } else if v.is_negative() {
        Sign::Minus
    } else {
        Sign::Zero
    })
}

fn check_dims(dim: usize, constraints: &[(&Hyperplane, Sign)]) -> Result<()> {
    for (h, _) in constraints {
        if h.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: h.dim() });
        }
    }
    Ok(())
}

/// A point of the relatively open set cut out by `constraints`, if nonempty.
///
/// Solves `max t` subject to `normal·x - offset >= t` on `+` constraints,
/// `<= -t` on `-`, `= 0` on `0`, and `t <= 1`; the set is nonempty exactly
/// when the optimum is positive.
pub fn feasible_interior(dim: usize, constraints: &[(&Hyperplane, Sign)]) -> Result<Option<Vec<Rational>>> {
    check_dims(dim, constraints)?;
    let mut objective = vec![Rational::zero(); dim + 1];
    objective[dim] = Rational::one();
    let mut lp = Problem::maximize(objective);
    for (h, sign) in constraints {
        let mut row: Vec<Rational> = h.normal().to_vec();
        match sign {
            Sign::Plus => {
                row.push(-Rational::one());
                lp.constrain(row, Relation::Ge, h.offset().clone());
            }
            Sign::Minus => {
                row.push(Rational::one());
                lp.constrain(row, Relation::Le, h.offset().clone());
            }
            Sign::Zero => {
                row.push(Rational::zero());
                lp.constrain(row, Relation::Eq, h.offset().clone());
            }
        }
    }
    let mut cap = vec![Rational::zero(); dim + 1];
    cap[dim] = Rational::one();
    lp.constrain(cap, Relation::Le, Rational::one());

    match lp.solve() {
        Outcome::Optimal { value, mut point } if value.is_positive() => {
            point.truncate(dim);
            Ok(Some(point))
        }
        _ => Ok(None),
    }
}

/// Rank over the rationals of a list of equal-length vectors.
pub fn affine_rank(vectors: &[Vec<Rational>]) -> usize {
    let mut rows: Vec<Vec<Rational>> = vectors.to_vec();
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &pivot[col];
            for (v, pv) in row.iter_mut().zip(&pivot) {
                *v -= &f * pv;
            }
        }
        rank += 1;
    }
    rank
}

/// Whether the (feasible) set cut out by `constraints` is bounded, decided by
/// checking that its recession cone is `{0}`.
pub fn is_bounded(dim: usize, constraints: &[(&Hyperplane, Sign)]) -> Result<bool> {
    if feasible_interior(dim, constraints)?.is_none() {
        return Err(Error::Infeasible);
    }
    for axis in 0..dim {
        for direction in [1i64, -1] {
            let mut objective = vec![Rational::zero(); dim];
            objective[axis] = rational(direction);
            let mut lp = Problem::maximize(objective);
            for (h, sign) in constraints {
                let rel = match sign {
                    Sign::Plus => Relation::Ge,
                    Sign::Minus => Relation::Le,
                    Sign::Zero => Relation::Eq,
                };
                lp.constrain(h.normal().to_vec(), rel, Rational::zero());
            }
            for j in 0..dim {
                let mut e = vec![Rational::zero(); dim];
                e[j] = Rational::one();
                lp.constrain(e.clone(), Relation::Le, Rational::one());
                lp.constrain(e, Relation::Ge, -Rational::one());
            }
            match lp.solve() {
                Outcome::Optimal { value, .. } if value.is_zero() => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}
