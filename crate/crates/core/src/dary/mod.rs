//! Naturally embedded `(2d+1)`-ary and `2d`-ary trees: the bounded-label
//! table, the characteristic small branches, an exact rational
//! parametrization, one-parameter solutions, and the multi-branch α expansion.

#![allow(non_snake_case)]
mod alpha;
mod general;
mod oracle;
mod param;

use std::fmt;
use std::str::FromStr;

use crate::arith::{rat, Rat, Series};
use crate::error::{Error, Result};
use crate::kernel::{characteristic_poly, newton_solve, small_factor, tree_equation, SmallFactor};
use crate::paths::StepSet;

pub use alpha::{dary_alpha_one_param, one_param_alpha_closed, OneParamAlpha};
pub use general::{
    alpha_table, dary_alpha_general, small_branches, verify_prop_main_equation, Branches,
    MultiAlphaTable, PropReport, PureMode, Seed,
};
pub use oracle::{brute_force_dary, dary_oracle_table, MAX_DARY_ORACLE_SIZE};
pub use param::{
    dary_rational_parametrization, lemma_one_param_solution, one_param_residual, verify_one_param,
    OneParamSolution,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DaryKind {
    /// Arity `2d+1`, child offsets `−d..=d`.
    Odd,
    /// Arity `2d`, child offsets `±1, ±3, …, ±(2d−1)`.
    Even,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DaryFamily {
    pub kind: DaryKind,
    pub d: usize,
}

impl DaryFamily {
    pub fn new(kind: DaryKind, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::Invalid("d must be positive".into()));
        }
        Ok(DaryFamily { kind, d })
    }

    pub fn odd(d: usize) -> Self {
        Self::new(DaryKind::Odd, d).expect("d > 0")
    }

    pub fn even(d: usize) -> Self {
        Self::new(DaryKind::Even, d).expect("d > 0")
    }

    pub fn arity(&self) -> usize {
        match self.kind {
            DaryKind::Odd => 2 * self.d + 1,
            DaryKind::Even => 2 * self.d,
        }
    }

    /// Child label offsets, ascending.
    pub fn offsets(&self) -> Vec<i64> {
        let d = self.d as i64;
        match self.kind {
            DaryKind::Odd => (-d..=d).collect(),
            DaryKind::Even => (-(2 * d - 1)..=2 * d - 1).step_by(2).collect(),
        }
    }

    pub fn max_offset(&self) -> usize {
        match self.kind {
            DaryKind::Odd => self.d,
            DaryKind::Even => 2 * self.d - 1,
        }
    }

    /// Number of small branches, equal to the number of pinned rows below zero.
    pub fn c(&self) -> usize {
        self.max_offset()
    }

    /// The offsets as a unit-weight step set.
    pub fn step_set(&self) -> StepSet {
        StepSet::new(self.offsets().into_iter().map(|o| (o, rat(1))).collect())
            .expect("distinct offsets")
    }
}

impl fmt::Display for DaryFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            DaryKind::Odd => "odd",
            DaryKind::Even => "even",
        };
        write!(f, "{k}:{}", self.d)
    }
}

impl FromStr for DaryFamily {
    type Err = Error;

    /// `"odd:d"` or `"even:d"`.
    fn from_str(s: &str) -> Result<Self> {
        let (k, d) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected kind:d, got {s:?}")))?;
        let kind = match k.trim() {
            "odd" => DaryKind::Odd,
            "even" => DaryKind::Even,
            other => return Err(Error::Parse(format!("unknown kind {other:?}"))),
        };
        let d = d
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("d: {e}")))?;
        Self::new(kind, d)
    }
}

/// `T = 1 + zT^arity`.
pub fn dary_T(fam: &DaryFamily, order: usize) -> Series {
    newton_solve(&tree_equation(fam.arity(), order), &rat(1)).expect("simple root at the origin")
}

/// `Z = zT^{arity−1}`.
pub fn dary_Z(fam: &DaryFamily, order: usize) -> Series {
    let t = dary_T(fam, order);
    &Series::z(order) * &t.pow(fam.arity() as i64 - 1).expect("non-negative power")
}

/// Rows `j = −c..=j_max` of `T_j = 1 + z Π_o T_{j+o}` with rows below zero pinned
/// to 1. Rows far above `j_max` are seeded with `T`, which they equal to this order.
pub fn dary_Tj_table(fam: &DaryFamily, j_max: usize, order: usize) -> Vec<Series> {
    let c = fam.c() as i64;
    let m = fam.max_offset() as i64;
    let offs = fam.offsets();
    let top = (j_max as i64 + 1).max(order.saturating_sub(2) as i64 * m);
    let t = dary_T(fam, order);
    let rows = (c + top + m + 1) as usize;
    let idx = |j: i64| (j + c) as usize;
    let mut coef: Vec<Vec<Rat>> = (0..rows)
        .map(|r| {
            let j = r as i64 - c;
            if j < 0 {
                let mut v = vec![rat(0); order];
                if order > 0 {
                    v[0] = rat(1);
                }
                v
            } else if j >= top {
                t.coeffs().to_vec()
            } else {
                Vec::with_capacity(order)
            }
        })
        .collect();
    // partial[j][k] holds the coefficients of Π_{first k+1 offsets} T_{j+o}.
    let mut partial: Vec<Vec<Vec<Rat>>> =
        vec![vec![Vec::with_capacity(order); offs.len()]; top as usize];
    for n in 0..order {
        for j in 0..top {
            let v = if n == 0 {
                rat(1)
            } else {
                let e = n - 1;
                let pj = &mut partial[j as usize];
                for (k, o) in offs.iter().enumerate() {
                    let row = &coef[idx(j + o)];
                    let x = if k == 0 {
                        row[e].clone()
                    } else {
                        let prev = &pj[k - 1];
                        (0..=e).map(|i| &prev[i] * &row[e - i]).sum()
                    };
                    pj[k].push(x);
                }
                pj[offs.len() - 1][e].clone()
            };
            coef[idx(j)].push(v);
        }
    }
    coef.truncate(idx(j_max as i64) + 1);
    coef.into_iter().map(Series::from_coeffs).collect()
}

/// Monic small-branch factor of `X^c − Z X^c P(X)` with `Z = zT^{arity−1}`.
pub fn dary_char_factor(fam: &DaryFamily, order: usize) -> Result<SmallFactor> {
    let f = characteristic_poly(&fam.step_set(), &dary_Z(fam, order));
    small_factor(&f, fam.c()).map(|(a, _)| a)
}
