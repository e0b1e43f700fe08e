//! Symmetric 2-groups presented by 2-term complexes of finitely generated
//! abelian groups, and 2-modules over finite discrete 2-rings.
//!
//! All integer algebra runs through Smith normal form over an exact integer
//! type ([`scalar::Int`]); the aliases below fix it to [`BigInt`].

pub mod abgroup;
pub mod error;
pub mod json;
pub mod matrix;
pub mod oracle;
pub mod ring2mod;
pub mod scalar;
pub mod sgp2;
pub mod snf;

pub use num_bigint::BigInt;

pub use error::{Error, Result};
pub use scalar::Int;

pub type IntMatrix = matrix::Matrix<BigInt>;
pub type FinGenAbGroup = abgroup::AbGroup<BigInt>;
pub type IntHom = abgroup::AbHom<BigInt>;
pub type PicardComplex = sgp2::Complex<BigInt>;
pub type ChainHom = sgp2::ChainMap<BigInt>;
pub type IntHomotopy = sgp2::Homotopy<BigInt>;
