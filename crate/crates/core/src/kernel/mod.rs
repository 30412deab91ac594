//! Algebraic equations over truncated power series: Newton solving, Hensel
//! extraction of the small-branch factor, and its symmetric functions.

mod hensel;
mod newton;
mod symmetric;

pub use hensel::{characteristic_poly, hensel_small_factor, small_factor, SmallFactor};
pub use newton::{fixed_point, fuss_catalan, newton_solve, tree_equation, SeriesPoly};
pub use symmetric::{complete_homogeneous, power_sums};
