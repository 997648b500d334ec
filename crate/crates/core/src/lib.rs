//! Distinguished principal series of GL_n(C) relative to GL_n(R): characters,
//! Tate and Rankin-Selberg gamma factors, the involution test, the converse
//! test through twisted gamma values, and the matrix and stratification tools
//! behind the orbit geometry.
//!
//! The crate is `no_std` with `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod character;
pub mod converse;
pub mod distinguish;
pub mod error;
pub mod gamma;
pub mod involution;
pub mod lgamma;
pub mod matrix;
pub mod poly;
pub mod sample;
pub mod scalar;
pub mod strata;

pub use character::{BorelCharacter, Character};
pub use distinguish::{find_involution, verify_certificate, Certificate, MatchMode, Verdict};
pub use error::{Error, Result};
pub use gamma::{rs_gamma, tate_fe_defect, tate_gamma, GammaKind, GammaValue};
pub use involution::Involution;
pub use scalar::Scalar;
