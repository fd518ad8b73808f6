//! Exact constructions of the real Lie algebra e6(-14) and its fine gradings.

pub mod error;
pub mod scalar;

pub use error::{Error, Result};
pub mod exactla;
pub mod structalg;
pub mod gradings;
pub mod composition;
pub mod jordan;
pub mod rootsys;
pub mod liemodels;
pub mod sp8;
pub mod report;
