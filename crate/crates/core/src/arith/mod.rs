//! Exact coefficient arithmetic: rationals, truncated power series,
//! marker-Laurent bivariate series, sparse multivariate polynomials,
//! rational functions, gcd-normalized univariate rational functions, and
//! Laurent series over cyclotomic fields.

mod cyclo;
mod laurent;
mod multipoly;
mod ratfunc;
mod rational;
mod series;
mod unipoly;

pub use cyclo::{cyclotomic_poly, Cyc, CycSeries, CycloField};
pub use laurent::{BiSeries, LaurentPoly};
pub use multipoly::MultiPoly;
pub use ratfunc::RationalFunction;
pub use rational::{parse_rat, rat, ratio, Rat};
pub use series::Series;
pub use unipoly::{UniPoly, UniRational};

/// Binary operation selector used by the `*_arith` entry points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
}
