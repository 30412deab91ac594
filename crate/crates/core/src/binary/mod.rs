//! The five-weight family of embedded binary trees: counting series, the
//! characteristic series `X`, the bounded-label table `T_j`, the α expansion
//! and its closed forms, one-parameter solutions, plane-tree heights and a
//! weighted ternary family.

#![allow(non_snake_case)]
mod alpha;
mod conjecture;
mod height;
mod one_param;
mod oracle;
mod ternary;

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::arith::{parse_rat, rat, MultiPoly, Rat, Series};
use crate::error::{Error, Result};
use crate::kernel::{newton_solve, SeriesPoly};

pub use alpha::{
    beta_lemma1, beta_recurrence, beta_w3_only, binary_alpha, graded_residual, AlphaMode,
    AlphaTable,
};
pub use conjecture::{conjecture_check, conjecture_p, ConjectureReport};
pub use height::{
    height_T, height_Tj, height_Tj_symbolic, height_X, height_alpha_closed,
    height_alpha_recurrence, height_oracle, height_plane_trees, height_table,
};
pub use one_param::{
    adapt_lambda, binary_Tj_closed, binary_Tj_residual, binary_Tj_symbolic, corollary_binary,
    corollary_planar,
};
pub use oracle::{binary_oracle_table, brute_force_embedded_binary};
pub use ternary::{ternary_T, ternary_X, ternary_alpha, ternary_residual};

/// Weights `(v1, v2, w1, w2, w3)` of the unary and binary node kinds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryWeights {
    pub v1: Rat,
    pub v2: Rat,
    pub w1: Rat,
    pub w2: Rat,
    pub w3: Rat,
}

impl BinaryWeights {
    pub fn new(v1: Rat, v2: Rat, w1: Rat, w2: Rat, w3: Rat) -> Result<Self> {
        let w = BinaryWeights { v1, v2, w1, w2, w3 };
        if w.all().iter().any(|x| x.is_negative()) {
            return Err(Error::DegenerateWeights(
                "weights must be non-negative".into(),
            ));
        }
        Ok(w)
    }

    pub fn ints(v: [i64; 5]) -> Self {
        Self::new(rat(v[0]), rat(v[1]), rat(v[2]), rat(v[3]), rat(v[4]))
            .expect("non-negative weights")
    }

    pub fn all(&self) -> [&Rat; 5] {
        [&self.v1, &self.v2, &self.w1, &self.w2, &self.w3]
    }

    /// `2v1 + v2`, the unary weight of `T`.
    pub fn unary(&self) -> Rat {
        &self.v1 * rat(2) + &self.v2
    }

    /// `w1 + w2 + 2w3`, the binary weight of `T`.
    pub fn binary(&self) -> Rat {
        &self.w1 + &self.w2 + &self.w3 * rat(2)
    }

    /// The domain `w2 = w3`, `(w1, w2) ≠ 0` of the one-parameter closed forms.
    pub fn check_lemma_domain(&self) -> Result<()> {
        if self.w2 != self.w3 {
            return Err(Error::DegenerateWeights("closed form needs w2 = w3".into()));
        }
        if self.w1.is_zero() && self.w2.is_zero() {
            return Err(Error::DegenerateWeights("w1 = w2 = w3 = 0".into()));
        }
        Ok(())
    }
}

impl FromStr for BinaryWeights {
    type Err = Error;

    /// `"v1,v2,w1,w2,w3"` with rational entries.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 5 {
            return Err(Error::Parse(format!("expected five weights, got `{s}`")));
        }
        let v: Vec<Rat> = parts.iter().map(|p| parse_rat(p)).collect::<Result<_>>()?;
        Self::new(
            v[0].clone(),
            v[1].clone(),
            v[2].clone(),
            v[3].clone(),
            v[4].clone(),
        )
    }
}

impl fmt::Display for BinaryWeights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{})",
            self.v1, self.v2, self.w1, self.w2, self.w3
        )
    }
}

/// Value of `T_{−1}`: 1 when only node labels are bounded, 0 when leaves are too.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Boundary {
    One,
    Zero,
}

impl Boundary {
    pub fn value(self) -> Rat {
        match self {
            Boundary::One => rat(1),
            Boundary::Zero => rat(0),
        }
    }
}

impl FromStr for Boundary {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" | "one" => Ok(Boundary::One),
            "0" | "zero" => Ok(Boundary::Zero),
            _ => Err(Error::Parse(format!("boundary must be 0 or 1, got `{s}`"))),
        }
    }
}

/// `T = 1 + z(2v1+v2)T + z(w1+w2+2w3)T²` by Newton iteration.
pub fn binary_T(w: &BinaryWeights, order: usize) -> Series {
    let z = Series::z(order);
    let eq = SeriesPoly::new(vec![
        Series::one(order),
        &z.scale(&w.unary()) - &Series::one(order),
        z.scale(&w.binary()),
    ]);
    newton_solve(&eq, &rat(1)).expect("simple root at the origin")
}

/// The same `T` from the quadratic formula; needs `w1 + w2 + 2w3 > 0`.
pub fn binary_T_radical(w: &BinaryWeights, order: usize) -> Result<Series> {
    let b = w.binary();
    if b.is_zero() {
        return Err(Error::DegenerateWeights("no binary nodes".into()));
    }
    let n = order + 1;
    let z = Series::z(n);
    let lin = &Series::one(n) - &z.scale(&w.unary());
    let disc = &(&lin * &lin) - &z.scale(&(b.clone() * rat(4)));
    let num = &lin - &disc.sqrt()?;
    Ok(num.div(&z.scale(&(b * rat(2))))?.truncate(order))
}

/// `1 − X^k`.
pub(crate) fn one_minus_pow(x: &Series, k: i64) -> Series {
    &Series::one(x.order()) - &x.pow(k).expect("non-negative power")
}

/// `X^e · s` for any integer `e`, cancelling powers of `X` when `e < 0`.
pub(crate) fn mul_xpow(s: &Series, x: &Series, e: i64) -> Result<Series> {
    if e >= 0 {
        Ok(s * &x.pow(e)?)
    } else {
        s.div(&x.pow(-e)?)
    }
}

/// Coefficients `a = z(v1 + T(w1+w3))`, `b = z(v2 + 2T(w2+w3))` of the
/// characteristic equation `aX² − (1 − b)X + a = 0`.
fn char_coeffs(w: &BinaryWeights, t: &Series) -> (Series, Series) {
    let n = t.order();
    let z = Series::z(n);
    let a = &z * &(&Series::constant(w.v1.clone(), n) + &t.scale(&(&w.w1 + &w.w3)));
    let b = &z * &(&Series::constant(w.v2.clone(), n) + &t.scale(&((&w.w2 + &w.w3) * rat(2))));
    (a, b)
}

/// Small root of `1 = z(v1(1/X+X)+v2) + zT(w1(1/X+X) + 2w2 + w3(1/X+2+X))` via the radical.
pub fn binary_X(w: &BinaryWeights, order: usize) -> Result<Series> {
    let lead = &w.v1 + &w.w1 + &w.w3;
    if lead.is_zero() {
        return Err(Error::DegenerateCharacteristic);
    }
    let n = order + 1;
    let t = binary_T(w, n);
    let (a, b) = char_coeffs(w, &t);
    let lin = &Series::one(n) - &b;
    let disc = &(&lin * &lin) - &(&a * &a).scale(&rat(4));
    let num = &lin - &disc.sqrt()?;
    Ok(num.div(&a.scale(&rat(2)))?.truncate(order))
}

/// `aX² − (1−b)X + a` evaluated at `x`; vanishes for the characteristic series.
pub fn binary_char_residual(w: &BinaryWeights, t: &Series, x: &Series) -> Series {
    let (a, b) = char_coeffs(w, t);
    let n = x.order().min(t.order());
    let x = x.truncate(n);
    &(&(&a * &(&x * &x)) - &(&(&Series::one(n) - &b) * &x)) + &a
}

/// `t1(X) = w1(1+X²) + 2w2X + w3(1+X)² − v1(1−X)²` and `t2(X) = w1(1−X+X²) + w2X + w3(1+X²)`.
pub fn t_polys(w: &BinaryWeights) -> (MultiPoly, MultiPoly) {
    let v = ["X"];
    let p = |c: &[i64]| MultiPoly::from_coeffs(&v, "X", c);
    let t1 = &(&(&p(&[1, 0, 1]).scale(&w.w1) + &p(&[0, 2]).scale(&w.w2))
        + &p(&[1, 2, 1]).scale(&w.w3))
        - &p(&[1, -2, 1]).scale(&w.v1);
    let t2 =
        &(&p(&[1, -1, 1]).scale(&w.w1) + &p(&[0, 1]).scale(&w.w2)) + &p(&[1, 0, 1]).scale(&w.w3);
    (t1, t2)
}

/// `T = (t1 + √(t1² + 4 t2 (v1(1+X²) + v2 X))) / (2 t2)` evaluated at a series `X`.
pub fn binary_T_of_X(w: &BinaryWeights, x: &Series) -> Result<Series> {
    let s = &w.v1 + &w.w1 + &w.w3;
    if s.is_zero() || (&w.w1 + &w.w3).is_zero() {
        return Err(Error::DegenerateCharacteristic);
    }
    let (t1, t2) = t_polys(w);
    let n = x.order();
    let m = std::collections::HashMap::from([("X".to_string(), x.clone())]);
    let t1 = t1.eval_series(&m)?;
    let t2 = t2.eval_series(&m)?;
    let xs = x.clone();
    let p = &(&Series::one(n) + &(&xs * &xs)).scale(&w.v1) + &xs.scale(&w.v2);
    let rad = &(&t1 * &t1) + &(&t2 * &p).scale(&rat(4));
    let root = rad.scale(&(&s * &s).recip()).sqrt()?.scale(&s);
    (&t1 + &root).div(&t2.scale(&rat(2)))
}

/// Rows `T_{−1}, T_0, …, T_{j_max}` of the recurrence
/// `T_j = 1 + z(v1(T_{j−1}+T_{j+1}) + v2T_j) + z(w1T_{j−1}T_{j+1} + w2T_j² + w3T_j(T_{j−1}+T_{j+1}))`,
/// solved coefficient by coefficient with rows far above `j_max` seeded by `T`.
pub fn binary_Tj_table(
    w: &BinaryWeights,
    boundary: Boundary,
    j_max: usize,
    order: usize,
) -> Vec<Series> {
    let top = (j_max + 1).max(order) + 1;
    let t = binary_T(w, order);
    // rows[r] holds T_{r−1}
    let rows_n = top + 1;
    let mut c: Vec<Vec<Rat>> = vec![Vec::with_capacity(order); rows_n];
    for n in 0..order {
        let prev: Vec<&[Rat]> = c.iter().map(|r| &r[..n]).collect();
        let conv = |a: &[Rat], b: &[Rat]| -> Rat {
            if n == 0 {
                return Rat::zero();
            }
            (0..n).map(|k| &a[k] * &b[n - 1 - k]).sum()
        };
        let lin = |a: &[Rat]| -> Rat {
            if n == 0 {
                Rat::zero()
            } else {
                a[n - 1].clone()
            }
        };
        let mut next = Vec::with_capacity(rows_n);
        for r in 0..rows_n {
            let v = if r == 0 {
                if n == 0 {
                    boundary.value()
                } else {
                    Rat::zero()
                }
            } else if r == rows_n - 1 {
                t.coeffs()[n].clone()
            } else {
                let (lo, mid, hi) = (prev[r - 1], prev[r], prev[r + 1]);
                let mut acc = if n == 0 { rat(1) } else { Rat::zero() };
                acc += &w.v1 * (lin(lo) + lin(hi)) + &w.v2 * lin(mid);
                acc += &w.w1 * conv(lo, hi)
                    + &w.w2 * conv(mid, mid)
                    + &w.w3 * (conv(mid, lo) + conv(mid, hi));
                acc
            };
            next.push(v);
        }
        for (r, v) in next.into_iter().enumerate() {
            c[r].push(v);
        }
    }
    c.into_iter()
        .take(j_max + 2)
        .map(Series::from_coeffs)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_counting_series() {
        assert_eq!(
            binary_T(&BinaryWeights::ints([0, 0, 1, 0, 0]), 5),
            Series::from_ints(&[1, 1, 2, 5, 14])
        );
        assert_eq!(
            binary_T(&BinaryWeights::ints([1, 0, 1, 0, 0]), 5),
            Series::from_ints(&[1, 3, 12, 57, 300])
        );
        assert_eq!(
            binary_T(&BinaryWeights::ints([0, 1, 1, 0, 0]), 5),
            Series::from_ints(&[1, 2, 6, 22, 90])
        );
        assert_eq!(
            binary_T(&BinaryWeights::ints([0, 0, 0, 1, 1]), 4),
            Series::from_ints(&[1, 3, 18, 135])
        );
    }

    #[test]
    fn radical_agrees_with_newton() {
        for v in [
            [0, 0, 1, 0, 0],
            [1, 2, 1, 0, 3],
            [2, 0, 0, 1, 1],
            [0, 1, 0, 0, 1],
        ] {
            let w = BinaryWeights::ints(v);
            assert_eq!(binary_T_radical(&w, 20).unwrap(), binary_T(&w, 20));
        }
        assert!(binary_T_radical(&BinaryWeights::ints([1, 1, 0, 0, 0]), 5).is_err());
    }

    #[test]
    fn characteristic_residual_vanishes() {
        for v in [
            [0, 0, 1, 0, 0],
            [0, 0, 0, 1, 1],
            [1, 1, 2, 1, 0],
            [3, 0, 0, 0, 1],
        ] {
            let w = BinaryWeights::ints(v);
            let x = binary_X(&w, 40).unwrap();
            assert!(x.coeffs()[0].is_zero());
            assert!(x.coeffs().iter().all(|c| !c.is_negative()));
            let t = binary_T(&w, 40);
            assert!(binary_char_residual(&w, &t, &x).is_zero());
        }
        assert!(matches!(
            binary_X(&BinaryWeights::ints([0, 1, 0, 1, 0]), 5),
            Err(Error::DegenerateCharacteristic)
        ));
    }

    #[test]
    fn t_recovered_from_x() {
        for v in [
            [0, 0, 1, 0, 0],
            [1, 2, 1, 0, 3],
            [2, 1, 1, 1, 1],
            [0, 0, 0, 1, 1],
        ] {
            let w = BinaryWeights::ints(v);
            let x = binary_X(&w, 40).unwrap();
            assert_eq!(binary_T_of_X(&w, &x).unwrap(), binary_T(&w, 40), "{v:?}");
        }
    }

    #[test]
    fn table_stabilizes_and_respects_boundary() {
        let w = BinaryWeights::ints([0, 0, 0, 1, 1]);
        let tab = binary_Tj_table(&w, Boundary::Zero, 12, 10);
        assert!(tab[0].is_zero());
        assert_eq!(tab[13], binary_T(&w, 10));
        let w = BinaryWeights::ints([0, 0, 1, 0, 0]);
        let tab = binary_Tj_table(&w, Boundary::One, 3, 8);
        // [z^n] T_j = [z^n] T once n ≤ j + 1
        let t = binary_T(&w, 8);
        for j in 0..=3usize {
            for n in 0..=(j + 1).min(7) {
                assert_eq!(tab[j + 1].coeffs()[n], t.coeffs()[n]);
            }
        }
    }

    #[test]
    fn weights_parse() {
        let w: BinaryWeights = "1, 0, 1/2, 0, 0".parse().unwrap();
        assert_eq!(w.w1, crate::arith::ratio(1, 2));
        assert!("1,2,3".parse::<BinaryWeights>().is_err());
        assert!("-1,0,0,0,0".parse::<BinaryWeights>().is_err());
        assert_eq!(w.to_string(), "(1,0,1/2,0,0)");
    }
}
