//! Exact analysis of algebraic Z^2-actions defined by a single Laurent
//! polynomial over a prime field.
//!
//! The pipeline runs from prime-field arithmetic ([`field`]) through
//! bivariate Laurent polynomials and ideal membership ([`laurent`]), integer
//! convex hulls ([`geom`]), Newton polygons and norm extensions ([`newton`])
//! to the mixing analysis proper ([`mixing`]). [`parse`] holds the textual
//! input formats.

pub mod error;
pub mod exponent;
pub mod field;
pub mod geom;
pub mod laurent;
mod linalg;
pub mod mixing;
pub mod newton;
pub mod parse;
pub mod rational;

pub use error::{Error, Result};
pub use exponent::ExponentVec;
pub use field::{Degree, ExtInt, Field, FpPoly};
pub use geom::{Degeneracy, Face, LatticePolygon};
pub use laurent::{AxisMap, LaurentPoly, PolyInU1};
pub use rational::Rational;
