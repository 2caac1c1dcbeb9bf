//! Exact residues, Faddeev reciprocity and explicit cyclic symbol algebras
//! for Brauer classes over `k(x, y)` ramified along plane quartics.
//!
//! The base field is modeled by the cyclotomic field `Q(rho)`; see
//! [`scalar::Scalar`]. Everything is exact and allocation-only (`no_std`).

#![no_std]

extern crate alloc;

pub mod brauer;
pub mod cyclify;
pub mod error;
pub mod factor;
pub mod frac;
pub mod geometry;
pub mod modp;
pub mod pipeline;
pub mod poly;
pub mod poly3;
pub mod quotient;
pub mod ring;
pub mod scalar;

pub use error::{Error, Result};
pub use frac::{BiRatFunc, Frac, LPoly, RatFunc, UniPoly};
pub use poly::Poly;
pub use quotient::QuotientElement;
pub use ring::{Field, Ring, Q};
pub use scalar::Scalar;
