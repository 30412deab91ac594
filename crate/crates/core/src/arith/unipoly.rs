use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat, Rat, Series};
use crate::error::{Error, Result};

/// Dense univariate polynomial over ℚ (variable printed as `X`), no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    c: Vec<Rat>,
}

impl UniPoly {
    pub fn from_coeffs(mut c: Vec<Rat>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| rat(x)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(k: Rat) -> Self {
        Self::from_coeffs(vec![k])
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// `k · X^e`.
    pub fn monomial(k: Rat, e: usize) -> Self {
        let mut c = vec![Rat::zero(); e + 1];
        c[e] = k;
        Self::from_coeffs(c)
    }

    /// `1 − X^e`.
    pub fn one_minus_x_pow(e: usize) -> Self {
        &Self::one() - &Self::monomial(Rat::one(), e)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.c.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn lc(&self) -> Option<&Rat> {
        self.c.last()
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::from_coeffs(self.c.iter().map(|x| x * k).collect())
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut b = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    /// Euclidean division.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByNonUnit)?;
        let lc_inv = d.c[dd].recip();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let t = &r[i + dd] * &lc_inv;
            if t.is_zero() {
                continue;
            }
            for (j, dc) in d.c.iter().enumerate() {
                r[i + j] -= &t * dc;
            }
            q[i] = t;
        }
        r.truncate(dd);
        Ok((Self::from_coeffs(q), Self::from_coeffs(r)))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.c.iter().rev().fold(Rat::zero(), |acc, k| acc * x + k)
    }

    pub fn eval_series(&self, x: &Series) -> Series {
        let n = x.order();
        let mut acc = Series::zero(n);
        for k in self.c.iter().rev() {
            acc = &acc * x;
            let mut c = acc.into_coeffs();
            if n > 0 {
                c[0] += k;
            }
            acc = Series::from_coeffs(c);
        }
        acc
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.c.len().max(o.c.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.c.len().max(o.c.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let n = self.c.len() + o.c.len() - 1;
        let mut a = self.c.clone();
        a.resize(n, Rat::zero());
        let mut b = o.c.clone();
        b.resize(n, Rat::zero());
        UniPoly::from_coeffs(super::series::cauchy(&a, &b, n))
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, &Rat)> = self
            .c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, x)| !x.is_zero())
            .collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, x)) in terms.into_iter().enumerate() {
            if k == 0 {
                if x.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if x.is_negative() { "-" } else { "+" })?;
            }
            let a = x.abs();
            match (e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "X")?,
                (1, false) => write!(f, "{a}*X")?,
                (_, true) => write!(f, "X^{e}")?,
                (_, false) => write!(f, "{a}*X^{e}")?,
            }
        }
        Ok(())
    }
}

/// Univariate rational function kept in lowest terms with a monic denominator,
/// so structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniRational {
    num: UniPoly,
    den: UniPoly,
}

impl UniRational {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByNonUnit);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(UniPoly::zero()));
        }
        let g = num.gcd(&den);
        let (n, _) = num.divrem(&g)?;
        let (d, _) = den.divrem(&g)?;
        let l = d.lc().expect("nonzero").recip();
        Ok(UniRational {
            num: n.scale(&l),
            den: d.scale(&l),
        })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        UniRational {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(k: Rat) -> Self {
        Self::from_poly(UniPoly::constant(k))
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let e = k.unsigned_abs() as u32;
        let r = UniRational {
            num: self.num.pow(e),
            den: self.den.pow(e),
        };
        if k < 0 {
            r.recip()
        } else {
            Ok(r)
        }
    }

    /// Substitutes a series for `X`; the denominator must become invertible
    /// after valuation cancellation.
    pub fn eval_series(&self, x: &Series) -> Result<Series> {
        self.num.eval_series(x).div(&self.den.eval_series(x))
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByNonUnit);
        }
        Ok(self.num.eval(x) / d)
    }
}

impl<'a> Add<&'a UniRational> for &'a UniRational {
    type Output = UniRational;
    fn add(self, o: &UniRational) -> UniRational {
        UniRational::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
        .expect("nonzero denominators")
    }
}

impl<'a> Sub<&'a UniRational> for &'a UniRational {
    type Output = UniRational;
    fn sub(self, o: &UniRational) -> UniRational {
        self + &(-o)
    }
}

impl<'a> Mul<&'a UniRational> for &'a UniRational {
    type Output = UniRational;
    fn mul(self, o: &UniRational) -> UniRational {
        UniRational::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero denominators")
    }
}

impl Neg for &UniRational {
    type Output = UniRational;
    fn neg(self) -> UniRational {
        UniRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for UniRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == UniPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]);
        let (q, r) = a.divrem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(p(&[1, 0, -1]).gcd(&p(&[1, -2, 1])), p(&[-1, 1]));
    }

    #[test]
    fn normalization_gives_canonical_form() {
        let a = UniRational::new(p(&[1, 0, -1]), p(&[2, -2])).unwrap();
        assert_eq!(
            a,
            UniRational::from_poly(UniPoly::from_coeffs(vec![ratio(1, 2), ratio(1, 2)]))
        );
        assert_eq!(a.to_string(), "1/2*X + 1/2");
    }

    #[test]
    fn series_substitution() {
        let f = UniRational::new(p(&[1]), p(&[1, -1])).unwrap();
        let x = Series::from_ints(&[0, 1, 0, 0]);
        assert_eq!(f.eval_series(&x).unwrap(), Series::from_ints(&[1, 1, 1, 1]));
    }

    fn arb() -> impl Strategy<Value = UniPoly> {
        proptest::collection::vec(-5i64..5, 1..5).prop_map(|c| p(&c))
    }

    proptest! {
        #[test]
        fn field_laws(a in arb(), b in arb(), c in arb()) {
            prop_assume!(!b.is_zero() && !c.is_zero());
            let x = UniRational::new(a.clone(), b.clone()).unwrap();
            let y = UniRational::new(c.clone(), b.clone()).unwrap();
            let s = &x + &y;
            prop_assert_eq!(s, UniRational::new(&a + &c, b.clone()).unwrap());
            let q = x.div(&y).unwrap();
            prop_assert_eq!(&q * &y, x);
        }

        #[test]
        fn divrem_reconstructs(a in arb(), b in arb()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
        }
    }
}
