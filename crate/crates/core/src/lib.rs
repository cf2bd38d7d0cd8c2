//! Exact calculus of one-dimensional formal group laws.
//!
//! The crate builds logarithm/exponential pairs `F`, `G` from coefficient
//! lists, closed-form generating functions or a named catalog, and derives
//! from them:
//!
//! - universal Bernoulli-type polynomials and numbers (symbolic in the
//!   graded indeterminates `c1, c2, ...` or concrete over the rationals),
//! - congruence verifiers (universal von Staudt and Kummer,
//!   Almkvist-Meurman-type, Bartz-Rutkowski-type, Granville-class scans),
//! - genus characteristic series (`Todd`, `L`, `A`) and their polynomial
//!   families,
//! - integer sequences from differences of group exponentials,
//! - special values of generalized Hurwitz zeta functions at non-positive
//!   integers, including Dirichlet-character twists over cyclotomic rings.
//!
//! All arithmetic is exact (big rationals); truncation orders are always
//! explicit.

pub mod bernoulli;
pub mod congruence;
pub mod cpoly;
pub mod cyclo;
pub mod error;
pub mod fgl;
pub mod gfexpr;
pub mod rational;
pub mod ring;
pub mod sequences;
pub mod series;
pub mod xpoly;
pub mod zeta;

pub use cpoly::{CPoly, Monomial};
pub use cyclo::CycloElem;
pub use error::{Error, Result};
pub use fgl::FormalGroup;
pub use rational::{Int, Rat};
pub use ring::Ring;
pub use series::{MultiSeries, TruncSeries};
pub use xpoly::XPoly;
