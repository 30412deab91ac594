use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Rat, Series, UniPoly};
use crate::error::{Error, Result};

/// The cyclotomic field `ℚ(ζ_c) = ℚ[x]/Φ_c(x)`.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloField {
    c: usize,
    phi: UniPoly,
    /// `ζ^k` in the power basis for `k < 2φ(c) − 1`.
    zpow: Vec<Vec<Rat>>,
}

/// `Φ_c` by dividing `x^c − 1` by `Φ_k` for every proper divisor `k`.
pub fn cyclotomic_poly(c: usize) -> UniPoly {
    assert!(c >= 1, "cyclotomic index must be positive");
    let mut p = &UniPoly::monomial(Rat::one(), c) - &UniPoly::one();
    for k in 1..c {
        if c % k == 0 {
            p = p.divrem(&cyclotomic_poly(k)).expect("nonzero divisor").0;
        }
    }
    p
}

impl CycloField {
    pub fn new(c: usize) -> Arc<Self> {
        let phi = cyclotomic_poly(c);
        let deg = phi.degree().unwrap_or(0);
        let zpow = (0..(2 * deg).saturating_sub(1))
            .map(|k| {
                let r = UniPoly::monomial(Rat::one(), k)
                    .divrem(&phi)
                    .expect("nonzero modulus")
                    .1;
                (0..deg).map(|i| r.coeff(i)).collect()
            })
            .collect();
        Arc::new(CycloField { c, phi, zpow })
    }

    pub fn c(&self) -> usize {
        self.c
    }

    /// `[ℚ(ζ_c) : ℚ] = φ(c)`.
    pub fn degree(&self) -> usize {
        self.phi.degree().unwrap_or(0)
    }

    /// Reduces an unreduced product of length `2φ(c) − 1`.
    fn reduce_raw(&self, raw: Vec<Rat>) -> Vec<Rat> {
        let deg = self.degree();
        let mut out: Vec<Rat> = raw.iter().take(deg).cloned().collect();
        out.resize(deg, Rat::zero());
        for (k, x) in raw.iter().enumerate().skip(deg) {
            if !x.is_zero() {
                for (o, z) in out.iter_mut().zip(&self.zpow[k]) {
                    if !z.is_zero() {
                        *o += x * z;
                    }
                }
            }
        }
        out
    }

    fn reduce(&self, p: &UniPoly) -> Vec<Rat> {
        let r = p.divrem(&self.phi).expect("nonzero modulus").1;
        (0..self.degree()).map(|k| r.coeff(k)).collect()
    }
}

/// Element of a [`CycloField`], stored in the power basis `1, ζ, …, ζ^{φ(c)−1}`.
#[derive(Clone, Debug)]
pub struct Cyc {
    field: Arc<CycloField>,
    v: Vec<Rat>,
}

impl PartialEq for Cyc {
    fn eq(&self, o: &Self) -> bool {
        self.field.c == o.field.c && self.v == o.v
    }
}

impl Eq for Cyc {}

impl Cyc {
    pub fn from_rat(field: &Arc<CycloField>, x: Rat) -> Self {
        let mut v = vec![Rat::zero(); field.degree()];
        v[0] = x;
        Cyc {
            field: field.clone(),
            v,
        }
    }

    pub fn zero(field: &Arc<CycloField>) -> Self {
        Self::from_rat(field, Rat::zero())
    }

    pub fn one(field: &Arc<CycloField>) -> Self {
        Self::from_rat(field, Rat::one())
    }

    /// `ζ^k`.
    pub fn zeta_pow(field: &Arc<CycloField>, k: i64) -> Self {
        let e = k.mod_floor(&(field.c as i64)) as usize;
        Cyc {
            field: field.clone(),
            v: field.reduce(&UniPoly::monomial(Rat::one(), e)),
        }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.v.iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `ℚ`.
    pub fn as_rat(&self) -> Option<&Rat> {
        self.v[1..].iter().all(Zero::is_zero).then(|| &self.v[0])
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Cyc {
            field: self.field.clone(),
            v: self.v.iter().map(|x| x * k).collect(),
        }
    }

    /// The Galois automorphism `ζ ↦ ζ^k`, `gcd(k, c) = 1`.
    fn conjugate(&self, k: usize) -> Self {
        let mut p = UniPoly::zero();
        for (i, x) in self.v.iter().enumerate() {
            p = &p + &UniPoly::monomial(x.clone(), i * k);
        }
        Cyc {
            field: self.field.clone(),
            v: self.field.reduce(&p),
        }
    }

    /// Inverse via the product of the non-trivial conjugates over the norm.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByNonUnit);
        }
        let c = self.field.c;
        let mut others = Cyc::one(&self.field);
        for k in 2..=c.max(2) {
            if k < c && k.gcd(&c) == 1 {
                others = &others * &self.conjugate(k);
            }
        }
        let norm = (self * &others)
            .as_rat()
            .cloned()
            .expect("the norm is rational");
        Ok(others.scale(&norm.recip()))
    }

    fn poly(&self) -> UniPoly {
        UniPoly::from_coeffs(self.v.clone())
    }
}

impl<'a> Add<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn add(self, o: &Cyc) -> Cyc {
        Cyc {
            field: self.field.clone(),
            v: self.v.iter().zip(&o.v).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn sub(self, o: &Cyc) -> Cyc {
        Cyc {
            field: self.field.clone(),
            v: self.v.iter().zip(&o.v).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn mul(self, o: &Cyc) -> Cyc {
        if self.field.degree() == 1 {
            return Cyc {
                field: self.field.clone(),
                v: vec![&self.v[0] * &o.v[0]],
            };
        }
        let mut raw = vec![Rat::zero(); 2 * self.v.len() - 1];
        mul_acc(&mut raw, &self.v, &o.v);
        Cyc {
            field: self.field.clone(),
            v: self.field.reduce_raw(raw),
        }
    }
}

/// `acc += a·b` as unreduced polynomials in `ζ`.
fn mul_acc(acc: &mut [Rat], a: &[Rat], b: &[Rat]) {
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                acc[i + j] += x * y;
            }
        }
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc {
            field: self.field.clone(),
            v: self.v.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly())
    }
}

/// Laurent series `Σ a_k s^k` over `ℚ(ζ_c)`, known exactly modulo `s^prec`.
#[derive(Clone, Debug)]
pub struct CycSeries {
    field: Arc<CycloField>,
    /// Exponent of `coeffs[0]`.
    val: i64,
    coeffs: Vec<Cyc>,
}

impl CycSeries {
    /// Coefficients `c[k]` of `s^{val+k}`, known up to (excluding) `s^{val + c.len()}`.
    pub fn new(field: &Arc<CycloField>, val: i64, coeffs: Vec<Cyc>) -> Self {
        let mut s = CycSeries {
            field: field.clone(),
            val,
            coeffs,
        };
        s.normalize();
        s
    }

    pub fn zero(field: &Arc<CycloField>, prec: i64) -> Self {
        CycSeries {
            field: field.clone(),
            val: prec,
            coeffs: vec![],
        }
    }

    pub fn constant(field: &Arc<CycloField>, x: Cyc, prec: i64) -> Self {
        Self::monomial(field, x, 0, prec)
    }

    pub fn monomial(field: &Arc<CycloField>, x: Cyc, e: i64, prec: i64) -> Self {
        if e >= prec {
            return Self::zero(field, prec);
        }
        let mut c = vec![Cyc::zero(field); (prec - e) as usize];
        c[0] = x;
        Self::new(field, e, c)
    }

    /// A rational power series in `s`, with `s^k` stored at exponent `k·stride`.
    pub fn from_series(field: &Arc<CycloField>, s: &Series, stride: usize) -> Self {
        let n = s.order() * stride;
        let mut c = vec![Cyc::zero(field); n];
        for (k, x) in s.coeffs().iter().enumerate() {
            c[k * stride] = Cyc::from_rat(field, x.clone());
        }
        Self::new(field, 0, c)
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|x| x.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.val += lead as i64;
        }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// Absolute precision: the series is known modulo `s^prec`.
    pub fn prec(&self) -> i64 {
        self.val + self.coeffs.len() as i64
    }

    /// Exponent of the first nonzero known coefficient (equals `prec` for zero).
    pub fn valuation(&self) -> i64 {
        self.val
    }

    /// Zero modulo `s^prec`.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> Option<Cyc> {
        if e >= self.prec() {
            None
        } else if e < self.val {
            Some(Cyc::zero(&self.field))
        } else {
            Some(self.coeffs[(e - self.val) as usize].clone())
        }
    }

    pub fn truncate(&self, prec: i64) -> Self {
        if prec >= self.prec() {
            return self.clone();
        }
        if prec <= self.val {
            return Self::zero(&self.field, prec);
        }
        Self::new(
            &self.field,
            self.val,
            self.coeffs[..(prec - self.val) as usize].to_vec(),
        )
    }

    pub fn scale(&self, k: &Cyc) -> Self {
        Self::new(
            &self.field,
            self.val,
            self.coeffs.iter().map(|x| x * k).collect(),
        )
    }

    /// `f(ζ^k s)`.
    pub fn twist(&self, k: i64) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, x)| x * &Cyc::zeta_pow(&self.field, k * (self.val + i as i64)))
            .collect();
        Self::new(&self.field, self.val, c)
    }

    /// Multiplicative inverse; the leading known coefficient must be nonzero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByNonUnit);
        }
        let n = self.coeffs.len();
        let a0 = self.coeffs[0].inv()?;
        let mut b: Vec<Cyc> = Vec::with_capacity(n);
        b.push(a0.clone());
        for k in 1..n {
            let mut raw = vec![Rat::zero(); 2 * a0.v.len() - 1];
            for i in 1..=k {
                mul_acc(&mut raw, &self.coeffs[i].v, &b[k - i].v);
            }
            let acc = Cyc {
                field: self.field.clone(),
                v: self.field.reduce_raw(raw),
            };
            b.push(&(-&acc) * &a0);
        }
        Ok(Self::new(&self.field, -self.val, b))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k == 0 {
            let rel = self.prec() - self.val;
            return Ok(Self::constant(&self.field, Cyc::one(&self.field), rel));
        }
        let mut b = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc: Option<Self> = None;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => b.clone(),
                    Some(a) => &a * &b,
                });
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc.expect("k != 0"))
    }

    fn combine(&self, o: &Self, sign: bool) -> Self {
        let val = self.val.min(o.val);
        let prec = self.prec().min(o.prec());
        if prec <= val {
            return Self::zero(&self.field, prec);
        }
        let c = (val..prec)
            .map(|e| {
                let a = self.coeff(e).expect("within precision");
                let b = o.coeff(e).expect("within precision");
                if sign {
                    &a + &b
                } else {
                    &a - &b
                }
            })
            .collect();
        Self::new(&self.field, val, c)
    }
}

impl<'a> Add<&'a CycSeries> for &'a CycSeries {
    type Output = CycSeries;
    fn add(self, o: &CycSeries) -> CycSeries {
        self.combine(o, true)
    }
}

impl<'a> Sub<&'a CycSeries> for &'a CycSeries {
    type Output = CycSeries;
    fn sub(self, o: &CycSeries) -> CycSeries {
        self.combine(o, false)
    }
}

impl<'a> Mul<&'a CycSeries> for &'a CycSeries {
    type Output = CycSeries;
    fn mul(self, o: &CycSeries) -> CycSeries {
        let val = self.val + o.val;
        let prec = (self.prec() + o.val).min(o.prec() + self.val);
        if prec <= val {
            return CycSeries::zero(&self.field, prec);
        }
        let n = (prec - val) as usize;
        let deg = self.field.degree();
        let mut raw = vec![vec![Rat::zero(); 2 * deg - 1]; n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    mul_acc(&mut raw[i + j], &a.v, &b.v);
                }
            }
        }
        let c = raw
            .into_iter()
            .map(|r| Cyc {
                field: self.field.clone(),
                v: self.field.reduce_raw(r),
            })
            .collect();
        CycSeries::new(&self.field, val, c)
    }
}

impl Neg for &CycSeries {
    type Output = CycSeries;
    fn neg(self) -> CycSeries {
        CycSeries::new(
            &self.field,
            self.val,
            self.coeffs.iter().map(|x| -x).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), UniPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), UniPoly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), UniPoly::from_ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), UniPoly::from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), UniPoly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(5).degree(), Some(4));
    }

    #[test]
    fn roots_of_unity() {
        for c in 1..=6 {
            let f = CycloField::new(c);
            let z = Cyc::zeta_pow(&f, 1);
            let mut p = Cyc::one(&f);
            let mut sum = Cyc::zero(&f);
            for _ in 0..c {
                sum = &sum + &p;
                p = &p * &z;
            }
            assert_eq!(p, Cyc::one(&f), "c={c}");
            if c > 1 {
                assert!(sum.is_zero(), "c={c}");
            }
        }
    }

    #[test]
    fn field_inverse() {
        for c in [3, 5, 7, 8] {
            let f = CycloField::new(c);
            let a = &(&Cyc::from_rat(&f, rat(2)) + &Cyc::zeta_pow(&f, 1))
                + &Cyc::zeta_pow(&f, 2).scale(&rat(-3));
            assert_eq!(&a * &a.inv().unwrap(), Cyc::one(&f), "c={c}");
        }
    }

    #[test]
    fn laurent_inverse_and_precision() {
        let f = CycloField::new(3);
        // s^{-1}(1 + ζ s)
        let z = Cyc::zeta_pow(&f, 1);
        let a = CycSeries::new(
            &f,
            -1,
            vec![
                Cyc::one(&f),
                z.clone(),
                Cyc::zero(&f),
                Cyc::zero(&f),
                Cyc::zero(&f),
            ],
        );
        assert_eq!(a.prec(), 4);
        let b = a.inv().unwrap();
        assert_eq!(b.valuation(), 1);
        assert_eq!(b.prec(), 6);
        let one = &a * &b;
        assert_eq!(one.valuation(), 0);
        assert_eq!(one.coeff(0), Some(Cyc::one(&f)));
        assert!((&one - &CycSeries::constant(&f, Cyc::one(&f), 20)).is_zero());
        assert_eq!(b.coeff(2), Some(-&z));
    }

    #[test]
    fn twist_of_geometric() {
        let f = CycloField::new(2);
        let g = CycSeries::from_series(&f, &Series::geometric(rat(1), 6), 1);
        let t = g.twist(1);
        assert_eq!(t.coeff(3), Some(Cyc::from_rat(&f, rat(-1))));
        assert_eq!(t.coeff(4), Some(Cyc::one(&f)));
    }
}
