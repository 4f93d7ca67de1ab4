//! q-enumeration of standard Young tableaux by major index, fake degrees of the
//! complex reflection groups `G(m,d,n)`, and maj-increasing tableau mutations.
//!
//! Polynomials are exact ([`qpoly::QPoly`] uses big-integer coefficients).
//! Brute-force enumeration lives in [`tableau`] and serves as the oracle for
//! the closed formulas in [`genfun`], [`zeros`] and [`deformed`].

pub mod deformed;
pub mod error;
pub mod genfun;
pub mod mutations;
pub mod par;
pub mod qpoly;
pub mod shapes;
pub mod tableau;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};
pub use qpoly::{CycloProduct, QPoly};
pub use shapes::{BlockShape, Partition, SkewShape};
pub use tableau::Tableau;
