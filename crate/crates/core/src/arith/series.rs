use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rat, Op, Rat};
use crate::error::{Error, Result};

/// Power series in `z` known modulo `z^order`.
///
/// Binary operations truncate to the smaller order; nothing ever extends
/// precision silently.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    c: Vec<Rat>,
}

impl Series {
    pub fn from_coeffs(c: Vec<Rat>) -> Self {
        Series { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Series {
            c: c.iter().map(|&x| rat(x)).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            c: vec![Rat::zero(); order],
        }
    }

    pub fn constant(v: Rat, order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.c[0] = v;
        }
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rat::one(), order)
    }

    /// `coef · z^k` to the given order.
    pub fn monomial(coef: Rat, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.c[k] = coef;
        }
        s
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        Self::monomial(Rat::one(), 1, order)
    }

    /// `1/(1 - a z)`.
    pub fn geometric(a: Rat, order: usize) -> Self {
        let mut c = Vec::with_capacity(order);
        let mut p = Rat::one();
        for _ in 0..order {
            c.push(p.clone());
            p *= &a;
        }
        Series { c }
    }

    pub fn order(&self) -> usize {
        self.c.len()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.c
    }

    /// `[z^n]`, or `None` beyond the known order.
    pub fn get(&self, n: usize) -> Option<&Rat> {
        self.c.get(n)
    }

    /// Zero-extends to `order`; only for iterates whose tail is recomputed (Newton, Hensel).
    pub fn padded(&self, order: usize) -> Self {
        let mut c = self.c.clone();
        c.resize(order.max(c.len()), Rat::zero());
        Series { c }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series {
            c: self.c[..order.min(self.order())].to_vec(),
        }
    }

    /// Index of the first nonzero known coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Series {
            c: self.c.iter().map(|x| x * k).collect(),
        }
    }

    /// Multiplies by `z^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut c = vec![Rat::zero(); n];
        if k < n {
            c[k..].clone_from_slice(&self.c[..n - k]);
        }
        Series { c }
    }

    /// Divides by `z^k`; the first `k` coefficients must vanish. The order shrinks by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.c.iter().take(k).any(|x| !x.is_zero()) || k > self.order() {
            return Err(Error::DivisionByNonUnit);
        }
        Ok(Series {
            c: self.c[k..].to_vec(),
        })
    }

    /// Substitutes `z -> a z`.
    pub fn dilate(&self, a: &Rat) -> Self {
        let mut p = Rat::one();
        let mut c = Vec::with_capacity(self.order());
        for x in &self.c {
            c.push(x * &p);
            p *= a;
        }
        Series { c }
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return self.clone();
        }
        Series {
            c: (1..n).map(|i| &self.c[i] * rat(i as i64)).collect(),
        }
    }

    /// Agreement on the common known prefix.
    pub fn agrees(&self, other: &Series) -> bool {
        self.first_mismatch(other).is_none()
    }

    pub fn first_mismatch(&self, other: &Series) -> Option<usize> {
        self.c.iter().zip(&other.c).position(|(a, b)| a != b)
    }

    pub fn is_integral(&self) -> bool {
        self.c.iter().all(|x| x.is_integer())
    }

    /// Integer coefficients, or the index of the first non-integer one.
    pub fn to_integers(&self) -> std::result::Result<Vec<BigInt>, usize> {
        self.c
            .iter()
            .enumerate()
            .map(|(i, x)| {
                if x.is_integer() {
                    Ok(x.to_integer())
                } else {
                    Err(i)
                }
            })
            .collect()
    }

    pub fn arith(&self, other: &Series, op: Op) -> Series {
        match op {
            Op::Add => self + other,
            Op::Sub => self - other,
            Op::Mul => self * other,
        }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inv(&self) -> Result<Series> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        if self.c[0].is_zero() {
            return Err(Error::DivisionByNonUnit);
        }
        let a0inv = self.c[0].recip();
        let mut b: Vec<Rat> = Vec::with_capacity(n);
        b.push(a0inv.clone());
        for k in 1..n {
            let mut acc = Rat::zero();
            for i in 1..=k {
                if !self.c[i].is_zero() {
                    acc += &self.c[i] * &b[k - i];
                }
            }
            b.push(-(acc * &a0inv));
        }
        Ok(Series { c: b })
    }

    /// `self / other`, cancelling a common power of `z` when `other` is not a unit.
    pub fn div(&self, other: &Series) -> Result<Series> {
        let v = other.valuation().ok_or(Error::DivisionByNonUnit)?;
        let a = self.truncate(other.order()).shift_down(v)?;
        let b = other.shift_down(v)?;
        Ok(&a * &b.inv()?)
    }

    /// Square root with constant term `+1`; requires `[z^0] = 1`.
    pub fn sqrt(&self) -> Result<Series> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        if !self.c[0].is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let half = Rat::new(BigInt::one(), BigInt::from(2));
        let mut s: Vec<Rat> = Vec::with_capacity(n);
        s.push(Rat::one());
        for k in 1..n {
            let mut acc = self.c[k].clone();
            for i in 1..k {
                acc -= &s[i] * &s[k - i];
            }
            s.push(acc * &half);
        }
        Ok(Series { c: s })
    }

    /// Integer power by repeated squaring; negative powers invert first.
    pub fn pow(&self, k: i64) -> Result<Series> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Series::one(self.order());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// `self(inner(z))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if inner.get(0).is_some_and(|x| !x.is_zero()) {
            return Err(Error::Invalid("inner series must vanish at 0".into()));
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Series::zero(n);
        for a in self.c[..n].iter().rev() {
            acc = &acc * &inner;
            acc.c[0] += a;
        }
        Ok(acc)
    }

    /// Evaluates a polynomial with the given coefficients (low degree first) at `self`.
    pub fn horner(&self, coeffs: &[Series]) -> Series {
        let mut acc = Series::zero(self.order());
        for a in coeffs.iter().rev() {
            acc = &(&acc * self) + a;
        }
        acc
    }
}

/// Clears denominators: returns integer numerators and the common denominator.
fn integerize(c: &[Rat]) -> (Vec<BigInt>, BigInt) {
    let mut l = BigInt::one();
    for x in c {
        if !x.denom().is_one() {
            l = l.lcm(x.denom());
        }
    }
    let nums = c
        .iter()
        .map(|x| {
            if x.denom().is_one() {
                x.numer() * &l
            } else {
                x.numer() * (&l / x.denom())
            }
        })
        .collect();
    (nums, l)
}

/// Truncated Cauchy product of two coefficient slices over a common denominator.
pub(crate) fn cauchy(a: &[Rat], b: &[Rat], n: usize) -> Vec<Rat> {
    let n = n.min(a.len()).min(b.len());
    let (an, ad) = integerize(&a[..n]);
    let (bn, bd) = integerize(&b[..n]);
    let den = ad * bd;
    let bnz: Vec<usize> = (0..n).filter(|&j| !bn[j].is_zero()).collect();
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in an.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for &j in &bnz {
            if i + j >= n {
                break;
            }
            out[i + j] += x * &bn[j];
        }
    }
    out.into_iter()
        .map(|x| {
            if x.is_zero() {
                Rat::zero()
            } else {
                Rat::new(x, den.clone())
            }
        })
        .collect()
}

impl<'a> Add<&'a Series> for &'a Series {
    type Output = Series;
    fn add(self, o: &Series) -> Series {
        let n = self.order().min(o.order());
        Series {
            c: (0..n).map(|i| &self.c[i] + &o.c[i]).collect(),
        }
    }
}

impl<'a> Sub<&'a Series> for &'a Series {
    type Output = Series;
    fn sub(self, o: &Series) -> Series {
        let n = self.order().min(o.order());
        Series {
            c: (0..n).map(|i| &self.c[i] - &o.c[i]).collect(),
        }
    }
}

impl<'a> Mul<&'a Series> for &'a Series {
    type Output = Series;
    fn mul(self, o: &Series) -> Series {
        let n = self.order().min(o.order());
        Series {
            c: cauchy(&self.c, &o.c, n),
        }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Series> for Series {
            type Output = Series;
            fn $m(self, o: Series) -> Series {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Series> for Series {
            type Output = Series;
            fn $m(self, o: &Series) -> Series {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Series> for &'a Series {
            type Output = Series;
            fn $m(self, o: Series) -> Series {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let sign = if x.is_negative() { "-" } else { "+" };
            if first {
                if x.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = x.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{a}*z")?,
                (_, true) => write!(f, "z^{i}")?,
                (_, false) => write!(f, "{a}*z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order())
    }
}
