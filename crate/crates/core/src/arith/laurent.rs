use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Op, Rat, Series};
use crate::error::{Error, Result};

/// Laurent polynomial in a marker `m`, stored densely over `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    lo: i64,
    c: Vec<Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coef: Rat, e: i64) -> Self {
        let mut p = LaurentPoly {
            lo: e,
            c: vec![coef],
        };
        p.normalize();
        p
    }

    pub fn constant(coef: Rat) -> Self {
        Self::monomial(coef, 0)
    }

    fn normalize(&mut self) {
        while self.c.last().is_some_and(Zero::is_zero) {
            self.c.pop();
        }
        let lead = self.c.iter().take_while(|x| x.is_zero()).count();
        if lead > 0 {
            self.c.drain(..lead);
            self.lo += lead as i64;
        }
        if self.c.is_empty() {
            self.lo = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Lowest exponent with nonzero coefficient (`None` for zero).
    pub fn lo(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.lo)
    }

    pub fn hi(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.lo + self.c.len() as i64 - 1)
    }

    /// `[m^e]`; exact zero outside the support.
    pub fn coeff(&self, e: i64) -> Rat {
        let i = e - self.lo;
        if i < 0 || i >= self.c.len() as i64 {
            Rat::zero()
        } else {
            self.c[i as usize].clone()
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(i, x)| (self.lo + i as i64, x))
    }

    pub fn scale(&self, k: &Rat) -> Self {
        let mut p = LaurentPoly {
            lo: self.lo,
            c: self.c.iter().map(|x| x * k).collect(),
        };
        p.normalize();
        p
    }

    /// Multiplies by `m^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            lo: self.lo + k,
            c: self.c.clone(),
        }
    }

    /// Drops all terms with exponent above `cap`.
    pub fn cap(&self, cap: i64) -> Self {
        let mut p = self.clone();
        if let Some(h) = p.hi() {
            if h > cap {
                let keep = (cap - p.lo + 1).max(0) as usize;
                p.c.truncate(keep);
                p.normalize();
            }
        }
        p
    }

    /// Value at `m = 1`.
    pub fn sum(&self) -> Rat {
        self.c.iter().fold(Rat::zero(), |a, b| a + b)
    }

    fn combine(&self, o: &Self, sign: bool) -> Self {
        if self.is_zero() {
            return if sign { o.clone() } else { -o };
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(o.lo);
        let hi = self.hi().unwrap().max(o.hi().unwrap());
        let mut c = vec![Rat::zero(); (hi - lo + 1) as usize];
        for (i, x) in self.c.iter().enumerate() {
            c[(self.lo - lo) as usize + i] += x;
        }
        for (i, x) in o.c.iter().enumerate() {
            let t = &mut c[(o.lo - lo) as usize + i];
            if sign {
                *t += x;
            } else {
                *t -= x;
            }
        }
        let mut p = LaurentPoly { lo, c };
        p.normalize();
        p
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        self.combine(o, true)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self.combine(o, false)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        let n = self.c.len() + o.c.len() - 1;
        let c = super::series::cauchy(&pad(&self.c, n), &pad(&o.c, n), n);
        let mut p = LaurentPoly {
            lo: self.lo + o.lo,
            c,
        };
        p.normalize();
        p
    }
}

fn pad(c: &[Rat], n: usize) -> Vec<Rat> {
    let mut v = c.to_vec();
    v.resize(n, Rat::zero());
    v
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            lo: self.lo,
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
}

/// Series in `z` whose coefficients are Laurent polynomials in a marker,
/// optionally truncated above a marker degree `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    c: Vec<LaurentPoly>,
    cap: Option<i64>,
}

impl BiSeries {
    pub fn zero(order: usize, cap: Option<i64>) -> Self {
        BiSeries {
            c: vec![LaurentPoly::zero(); order],
            cap,
        }
    }

    pub fn from_polys(c: Vec<LaurentPoly>, cap: Option<i64>) -> Self {
        let mut b = BiSeries { c, cap };
        b.apply_cap();
        b
    }

    /// Lifts a plain series to marker degree 0.
    pub fn from_series(s: &Series, cap: Option<i64>) -> Self {
        Self::from_series_at(s, 0, cap)
    }

    /// `s · m^k`.
    pub fn from_series_at(s: &Series, k: i64, cap: Option<i64>) -> Self {
        Self::from_polys(
            s.coeffs()
                .iter()
                .map(|x| LaurentPoly::monomial(x.clone(), k))
                .collect(),
            cap,
        )
    }

    pub fn one(order: usize, cap: Option<i64>) -> Self {
        Self::from_series(&Series::one(order), cap)
    }

    fn apply_cap(&mut self) {
        if let Some(k) = self.cap {
            for p in &mut self.c {
                *p = p.cap(k);
            }
        }
    }

    pub fn order(&self) -> usize {
        self.c.len()
    }

    pub fn cap(&self) -> Option<i64> {
        self.cap
    }

    pub fn coeff(&self, n: usize) -> &LaurentPoly {
        &self.c[n]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(LaurentPoly::is_zero)
    }

    fn joint_cap(&self, o: &Self) -> Option<i64> {
        match (self.cap, o.cap) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn arith(&self, o: &Self, op: Op) -> Self {
        match op {
            Op::Add => self + o,
            Op::Sub => self - o,
            Op::Mul => self * o,
        }
    }

    /// Series of the coefficients of `m^k`.
    pub fn extract(&self, k: i64) -> Series {
        Series::from_coeffs(self.c.iter().map(|p| p.coeff(k)).collect())
    }

    /// Specialization `m = 1`.
    pub fn at_one(&self) -> Series {
        Series::from_coeffs(self.c.iter().map(LaurentPoly::sum).collect())
    }

    /// Multiplies by `m^k`.
    pub fn shift_marker(&self, k: i64) -> Self {
        Self::from_polys(self.c.iter().map(|p| p.shift(k)).collect(), self.cap)
    }

    pub fn mul_series(&self, s: &Series) -> Self {
        self * &BiSeries::from_series(s, self.cap)
    }

    pub fn truncate(&self, order: usize) -> Self {
        BiSeries {
            c: self.c[..order.min(self.order())].to_vec(),
            cap: self.cap,
        }
    }

    /// Inverse of `a0 + r` where `a0` is the marker-free part (a unit series) and
    /// `r` has only positive marker degrees; needs a cap to terminate.
    pub fn inv(&self) -> Result<Self> {
        let cap = self
            .cap
            .ok_or(Error::Invalid("inverse needs a marker cap".into()))?;
        if self.c.iter().any(|p| p.lo().is_some_and(|l| l < 0)) {
            return Err(Error::Invalid(
                "inverse needs non-negative marker support".into(),
            ));
        }
        let a0 = self.extract(0);
        let a0inv = BiSeries::from_series(&a0.inv()?, self.cap);
        let r = self - &BiSeries::from_series(&a0, self.cap);
        let q = -(&r * &a0inv);
        let mut acc = BiSeries::one(self.order(), self.cap);
        let mut term = acc.clone();
        for _ in 0..cap.max(0) {
            term = &term * &q;
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
        }
        Ok(&acc * &a0inv)
    }
}

impl<'a> Add<&'a BiSeries> for &'a BiSeries {
    type Output = BiSeries;
    fn add(self, o: &BiSeries) -> BiSeries {
        let n = self.order().min(o.order());
        BiSeries::from_polys(
            (0..n).map(|i| &self.c[i] + &o.c[i]).collect(),
            self.joint_cap(o),
        )
    }
}

impl<'a> Sub<&'a BiSeries> for &'a BiSeries {
    type Output = BiSeries;
    fn sub(self, o: &BiSeries) -> BiSeries {
        let n = self.order().min(o.order());
        BiSeries::from_polys(
            (0..n).map(|i| &self.c[i] - &o.c[i]).collect(),
            self.joint_cap(o),
        )
    }
}

impl<'a> Mul<&'a BiSeries> for &'a BiSeries {
    type Output = BiSeries;
    fn mul(self, o: &BiSeries) -> BiSeries {
        let n = self.order().min(o.order());
        let cap = self.joint_cap(o);
        let mut c = vec![LaurentPoly::zero(); n];
        for i in 0..n {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                if o.c[j].is_zero() {
                    continue;
                }
                let mut t = &self.c[i] * &o.c[j];
                if let Some(k) = cap {
                    t = t.cap(k);
                }
                c[i + j] = &c[i + j] + &t;
            }
        }
        BiSeries { c, cap }
    }
}

impl Neg for &BiSeries {
    type Output = BiSeries;
    fn neg(self) -> BiSeries {
        BiSeries {
            c: self.c.iter().map(|p| -p).collect(),
            cap: self.cap,
        }
    }
}

impl Neg for BiSeries {
    type Output = BiSeries;
    fn neg(self) -> BiSeries {
        -&self
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl LaurentPoly {
    /// Polynomial from coefficients starting at exponent `lo`.
    pub fn from_coeffs(lo: i64, c: Vec<Rat>) -> Self {
        let mut p = LaurentPoly { lo, c };
        p.normalize();
        p
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.c.len() == 1 && self.c[0].is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn vpv() -> LaurentPoly {
        &LaurentPoly::monomial(rat(1), 1) + &LaurentPoly::monomial(rat(1), -1)
    }

    #[test]
    fn extract_direct_read() {
        let b = BiSeries::from_polys(vec![LaurentPoly::constant(rat(1)), vpv()], None);
        assert_eq!(b.extract(0), Series::from_ints(&[1, 0]));
    }

    #[test]
    fn square_of_v_plus_inverse() {
        let p = &vpv() * &vpv();
        assert_eq!(p.coeff(2), rat(1));
        assert_eq!(p.coeff(0), rat(2));
        assert_eq!(p.coeff(-2), rat(1));
        assert_eq!(p.coeff(1), rat(0));
    }

    #[test]
    fn central_binomials() {
        // 1/(1 - z(v + 1/v)) = sum z^n (v + 1/v)^n
        let n = 6;
        let mut c = Vec::new();
        let mut p = LaurentPoly::constant(rat(1));
        for _ in 0..n {
            c.push(p.clone());
            p = &p * &vpv();
        }
        let b = BiSeries::from_polys(c, None);
        assert_eq!(b.extract(0), Series::from_ints(&[1, 0, 2, 0, 6, 0]));
        // same through inversion of 1 - z(v+1/v) is not allowed (negative support);
        let mut k = vec![LaurentPoly::constant(rat(1)); 1];
        k.push(-vpv());
        k.resize(n, LaurentPoly::zero());
        assert!(BiSeries::from_polys(k, Some(10)).inv().is_err());
    }

    #[test]
    fn capped_inverse_geometric() {
        // 1/(1 - m z) with cap 3
        let mut c = vec![
            LaurentPoly::constant(rat(1)),
            LaurentPoly::monomial(rat(-1), 1),
        ];
        c.resize(6, LaurentPoly::zero());
        let inv = BiSeries::from_polys(c, Some(3)).inv().unwrap();
        for k in 0..6 {
            let expect = if k <= 3 { rat(1) } else { rat(0) };
            assert_eq!(inv.coeff(k).coeff(k as i64), expect);
        }
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        (-3i64..3, proptest::collection::vec(-5i64..5, 0..4))
            .prop_map(|(lo, c)| LaurentPoly::from_coeffs(lo, c.into_iter().map(rat).collect()))
    }

    fn arb_bis() -> impl Strategy<Value = BiSeries> {
        proptest::collection::vec(arb_poly(), 5).prop_map(|c| BiSeries::from_polys(c, None))
    }

    proptest! {
        #[test]
        fn extract_of_product_is_convolution(a in arb_bis(), b in arb_bis()) {
            let p = &a * &b;
            let mut acc = Series::zero(5);
            for k in -12i64..=12 {
                acc = &acc + &(&a.extract(k) * &b.extract(-k));
            }
            prop_assert_eq!(p.extract(0), acc);
        }

        #[test]
        fn at_one_is_ring_map(a in arb_bis(), b in arb_bis()) {
            prop_assert_eq!((&a * &b).at_one(), &a.at_one() * &b.at_one());
        }
    }
}
