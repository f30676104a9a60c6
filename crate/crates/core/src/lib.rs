//! Exact combinatorics of affine hyperplane arrangements.
//!
//! The crate enumerates the face poset of an arrangement with exact rational
//! linear programming, exposes the Tits product and apartments, builds the
//! Varchenko distance matrix over `Z[h_H^+, h_H^-]`, and checks its
//! determinant against the product `∏ (1 - b_F)^{β_F}` together with the
//! Witt and Euler-characteristic identities that lead to it.

pub mod apartments;
pub mod corpus;
pub mod error;
pub mod euler;
pub mod faces;
pub mod format;
pub mod geometry;
mod lp;
pub mod modp;
pub mod polyring;
pub mod report;
pub mod tits;
pub mod varchenko;
pub mod witt;

pub use apartments::{central_apartment_around, enumerate_apartments, Apartment};
pub use error::{Error, Result};
pub use euler::ChamberType;
pub use faces::{enumerate_faces, Face, FaceComplex, FaceId, Sign, SignVector};
pub use geometry::{Arrangement, Hyperplane, Rational};
pub use polyring::{Monomial, Polynomial, VarId};
pub use report::{Status, VerificationReport};
pub use varchenko::{FactoredDet, VMatrix};
