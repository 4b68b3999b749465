//! Exact computations with finite-dimensional Hopf algebras: coradical
//! filtrations, link quivers, corepresentation type, based rings, tame
//! Frobenius quotients and Radford biproducts.

pub mod basedring;
pub mod bosonize;
pub mod catalog;
pub mod coradical;
pub mod error;
pub mod exactfield;
pub mod linalg;
pub mod modroots;
pub mod quiver;
pub mod tamefrob;
pub mod tensorcore;

pub use error::{HopfError, Result};
pub use exactfield::{CycloNumber, Scalar};
