//! Generalized quantum Tanner codes from pairs of commuting Schreier graphs.

pub mod builtin;
pub mod characterize;
pub mod code;
pub mod complex;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod intmat;
pub mod spectral;

pub use error::{Error, Result};
