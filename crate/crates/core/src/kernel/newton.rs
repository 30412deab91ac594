use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;

use crate::arith::{Rat, Series};
use crate::error::{Error, Result};

/// Polynomial in an unknown `X` whose coefficients are truncated series;
/// `coeffs[k]` multiplies `X^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPoly {
    coeffs: Vec<Series>,
    order: usize,
}

impl SeriesPoly {
    /// Trailing zero coefficients are dropped; orders are unified to the minimum.
    /// An empty list gives the zero polynomial of order 0.
    pub fn new(coeffs: Vec<Series>) -> Self {
        let n = coeffs.iter().map(Series::order).min().unwrap_or(0);
        Self::with_order(coeffs, n)
    }

    fn with_order(coeffs: Vec<Series>, n: usize) -> Self {
        let mut coeffs: Vec<Series> = coeffs.into_iter().map(|s| s.truncate(n)).collect();
        while coeffs.last().is_some_and(Series::is_zero) {
            coeffs.pop();
        }
        SeriesPoly { coeffs, order: n }
    }

    pub fn zero(order: usize) -> Self {
        SeriesPoly {
            coeffs: vec![],
            order,
        }
    }

    /// Polynomial with constant (z-free) coefficients.
    pub fn from_rats(c: &[Rat], order: usize) -> Self {
        Self::with_order(
            c.iter()
                .map(|x| Series::constant(x.clone(), order))
                .collect(),
            order,
        )
    }

    pub fn coeffs(&self) -> &[Series] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Series {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| Series::zero(self.order()))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::with_order(self.coeffs.clone(), order.min(self.order))
    }

    pub fn padded(&self, order: usize) -> Self {
        SeriesPoly {
            coeffs: self.coeffs.iter().map(|s| s.padded(order)).collect(),
            order: order.max(self.order),
        }
    }

    pub fn eval(&self, x: &Series) -> Series {
        x.truncate(self.order()).horner(&self.coeffs)
    }

    pub fn derivative(&self) -> Self {
        Self::with_order(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rat::from_integer(BigInt::from(k))))
                .collect(),
            self.order,
        )
    }

    /// Coefficients at `z = 0`.
    pub fn at_origin(&self) -> Vec<Rat> {
        self.coeffs
            .iter()
            .map(|s| s.get(0).cloned().unwrap_or_else(Rat::zero))
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let ord = self.order().min(o.order());
        Self::with_order(
            (0..n)
                .map(|k| &self.coeff(k).truncate(ord) + &o.coeff(k).truncate(ord))
                .collect(),
            ord,
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let ord = self.order().min(o.order());
        Self::with_order(
            (0..n)
                .map(|k| &self.coeff(k).truncate(ord) - &o.coeff(k).truncate(ord))
                .collect(),
            ord,
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        let ord = self.order().min(o.order());
        if self.is_zero() || o.is_zero() {
            return Self::zero(ord);
        }
        let mut c = vec![Series::zero(ord); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = &c[i + j] + &(a * b);
                }
            }
        }
        Self::with_order(c, ord)
    }

    /// Division with remainder by a polynomial whose leading coefficient is exactly 1.
    pub fn divrem_monic(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("nonzero divisor");
        let ord = self.order().min(d.order());
        let mut r: Vec<Series> = self.coeffs.iter().map(|s| s.truncate(ord)).collect();
        if r.len() <= dd {
            return (Self::zero(ord), Self::with_order(r, ord));
        }
        let mut q = vec![Series::zero(ord); r.len() - dd];
        for i in (0..q.len()).rev() {
            let t = r[i + dd].clone();
            if t.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] = &r[i + j] - &(&t * dc);
            }
            q[i] = t;
        }
        r.truncate(dd);
        (Self::with_order(q, ord), Self::with_order(r, ord))
    }

    pub fn scale_series(&self, s: &Series) -> Self {
        let ord = self.order.min(s.order());
        Self::with_order(self.coeffs.iter().map(|c| c * s).collect(), ord)
    }
}

/// Solves `F(T) = 0` for the series root with `T(0) = t0` by Newton iteration
/// with precision doubling. The result has the order of `eq`.
pub fn newton_solve(eq: &SeriesPoly, t0: &Rat) -> Result<Series> {
    let n = eq.order();
    let origin = eq.at_origin();
    let f0 = origin.iter().rev().fold(Rat::zero(), |a, c| a * t0 + c);
    if !f0.is_zero() {
        return Err(Error::NoRootAtOrigin);
    }
    let d = eq.derivative();
    let d0 = d
        .at_origin()
        .iter()
        .rev()
        .fold(Rat::zero(), |a, c| a * t0 + c);
    if d0.is_zero() {
        return Err(Error::SingularRoot);
    }
    let mut t = Series::constant(t0.clone(), 1.min(n));
    let mut p = 1;
    while p < n {
        p = (2 * p).min(n);
        let tp = t.padded(p);
        let fv = eq.truncate(p).eval(&tp);
        let dv = d.truncate(p).eval(&tp);
        t = &tp - &fv.div(&dv)?;
    }
    Ok(t)
}

/// Naive iteration `T <- f(T)` from `t0`; gains at least one coefficient per round.
pub fn fixed_point(f: impl Fn(&Series) -> Series, t0: &Rat, order: usize) -> Series {
    let mut t = Series::constant(t0.clone(), order);
    for _ in 0..order {
        let next = f(&t);
        if next == t {
            break;
        }
        t = next;
    }
    t
}

/// `binom(dn, n) / ((d−1)n + 1)`.
pub fn fuss_catalan(n: u64, d: u64) -> Rat {
    let b: BigInt = binomial(BigInt::from(d * n), BigInt::from(n));
    Rat::new(b, BigInt::from((d - 1) * n + 1))
}

/// `T = 1 + z T^d` as a [`SeriesPoly`] in `T`.
pub fn tree_equation(d: usize, order: usize) -> SeriesPoly {
    let mut c = vec![Series::zero(order); d + 1];
    c[0] = Series::one(order);
    c[1] = -Series::one(order);
    c[d] = &c[d] + &Series::z(order);
    SeriesPoly::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn catalan_and_ternary() {
        let t = newton_solve(&tree_equation(2, 6), &rat(1)).unwrap();
        assert_eq!(t, Series::from_ints(&[1, 1, 2, 5, 14, 42]));
        let t3 = newton_solve(&tree_equation(3, 5), &rat(1)).unwrap();
        assert_eq!(t3, Series::from_ints(&[1, 1, 3, 12, 55]));
    }

    #[test]
    fn linear_equation() {
        // T = 1 + 8 z T
        let n = 4;
        let eq = SeriesPoly::new(vec![
            Series::one(n),
            &Series::monomial(rat(8), 1, n) - &Series::one(n),
        ]);
        assert_eq!(
            newton_solve(&eq, &rat(1)).unwrap(),
            Series::from_ints(&[1, 8, 64, 512])
        );
    }

    #[test]
    fn errors() {
        let eq = tree_equation(2, 5);
        assert!(matches!(
            newton_solve(&eq, &rat(2)),
            Err(Error::NoRootAtOrigin)
        ));
        // (T-1)^2 has a double root
        let sq = SeriesPoly::from_rats(&[rat(1), rat(-2), rat(1)], 5);
        assert!(matches!(
            newton_solve(&sq, &rat(1)),
            Err(Error::SingularRoot)
        ));
    }

    #[test]
    fn residual_vanishes_and_matches_fixed_point() {
        for d in 2..=5 {
            let eq = tree_equation(d, 25);
            let t = newton_solve(&eq, &rat(1)).unwrap();
            assert!(eq.eval(&t).is_zero());
            let fp = fixed_point(
                |s| &Series::one(25) + &(&Series::z(25) * &s.pow(d as i64).unwrap()),
                &rat(1),
                25,
            );
            assert_eq!(fp, t);
        }
    }

    #[test]
    fn fuss_catalan_values() {
        assert_eq!(fuss_catalan(3, 2), rat(5));
        assert_eq!(fuss_catalan(0, 7), rat(1));
        assert_eq!(fuss_catalan(4, 3), rat(55));
        let t = newton_solve(&tree_equation(3, 5), &rat(1)).unwrap();
        assert_eq!(t.get(4), Some(&fuss_catalan(4, 3)));
    }

    #[test]
    fn monic_division() {
        let n = 3;
        let c = |v: i64| Series::constant(rat(v), n);
        let f = SeriesPoly::new(vec![c(-1), c(0), c(1)]);
        let d = SeriesPoly::new(vec![c(-1), c(1)]);
        let (q, r) = f.divrem_monic(&d);
        assert_eq!(q, SeriesPoly::new(vec![c(1), c(1)]));
        assert!(r.is_zero());
    }
}
