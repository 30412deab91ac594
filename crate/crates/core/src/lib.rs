//! Exact generating functions for embedded trees with bounded labels,
//! lattice-path meanders and excursions, and three-walker systems.
//!
//! Every closed form is paired with an independent brute-force oracle;
//! [`harness`] runs the whole verification campaign.

pub mod arith;
pub mod binary;
pub mod dary;
pub mod error;
pub mod harness;
pub mod kernel;
pub mod paths;
pub mod walkers;

pub use arith::{Rat, Series};
pub use error::{Error, Result};
