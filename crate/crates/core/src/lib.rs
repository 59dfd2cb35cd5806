//! Finite models of equivariant spans: Burnside and Mackey structure,
//! parameter multicategories, strictification of pseudo-linear maps,
//! retractive sets and homotopy fixed points, and coherence checks for
//! the comparison 2-cells.

#![allow(clippy::needless_range_loop)]

pub mod assemble;
pub mod burnside;
pub mod category;
pub mod error;
pub mod group;
pub mod gset;
pub mod hfp;
pub mod io;
pub mod multicat;
pub mod report;
pub mod retractive;
pub mod span;
pub mod spancat;
pub mod strictify;
pub mod suites;
pub mod table;
pub mod theta;

pub use error::{Error, Result};
