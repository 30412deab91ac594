use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::{MultiPoly, Rat, Series};
use crate::error::{Error, Result};

/// Quotient of two [`MultiPoly`]s; never gcd-reduced, compared by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Invalid("zero denominator".into()));
        }
        if num.vars() != den.vars() {
            return Err(Error::VariableMismatch(
                num.vars().to_vec(),
                den.vars().to_vec(),
            ));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let vars: Vec<&str> = p.vars().iter().map(String::as_str).collect();
        let den = MultiPoly::one(&vars);
        RationalFunction { num: p, den }
    }

    pub fn constant(vars: &[&str], c: Rat) -> Self {
        Self::from_poly(MultiPoly::constant(vars, c))
    }

    pub fn var(vars: &[&str], name: &str) -> Self {
        Self::from_poly(MultiPoly::var(vars, name))
    }

    /// `coef · Π var_i^{e_i}` with possibly negative exponents.
    pub fn monomial(vars: &[&str], coef: Rat, exps: &[i64]) -> Self {
        let pos: Vec<u32> = exps.iter().map(|&e| e.max(0) as u32).collect();
        let neg: Vec<u32> = exps.iter().map(|&e| (-e).max(0) as u32).collect();
        RationalFunction {
            num: MultiPoly::monomial(vars, coef, &pos),
            den: MultiPoly::monomial(vars, Rat::one(), &neg),
        }
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn vars(&self) -> &[String] {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let e = k.unsigned_abs() as u32;
        let r = RationalFunction {
            num: self.num.pow(e),
            den: self.den.pow(e),
        };
        if k < 0 {
            r.recip()
        } else {
            Ok(r)
        }
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.recip()?)
    }

    /// `num(a)·den(b) − num(b)·den(a)`.
    pub fn cross_residual(&self, o: &Self) -> Result<MultiPoly> {
        let l = self.num.arith(&o.den, super::Op::Mul)?;
        let r = o.num.arith(&self.den, super::Op::Mul)?;
        l.arith(&r, super::Op::Sub)
    }

    /// Exact identity test by cross-multiplication.
    pub fn rf_equal(&self, o: &Self) -> Result<bool> {
        Ok(self.cross_residual(o)?.is_zero())
    }

    /// Substitutes series for all variables and divides (valuations may cancel).
    pub fn eval_series(&self, assign: &HashMap<String, Series>) -> Result<Series> {
        let n = self.num.eval_series(assign)?;
        let d = self.den.eval_series(assign)?;
        n.div(&d)
    }

    pub fn eval(&self, point: &HashMap<String, Rat>) -> Result<Rat> {
        let d = self.den.eval(point)?;
        if d == Rat::from_integer(0.into()) {
            return Err(Error::DivisionByNonUnit);
        }
        Ok(self.num.eval(point)? / d)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction {
                num: &self.num + &o.num,
                den: self.den.clone(),
            };
        }
        RationalFunction {
            num: &(&self.num * &o.den) + &(&o.num * &self.den),
            den: &self.den * &o.den,
        }
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: &self.num * &o.num,
            den: &self.den * &o.den,
        }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    const V: &[&str] = &["X"];

    fn p(c: &[i64]) -> MultiPoly {
        MultiPoly::from_coeffs(V, "X", c)
    }

    #[test]
    fn cross_multiplication_examples() {
        let a = RationalFunction::new(p(&[0, 1]), p(&[0, 0, 1])).unwrap();
        let b = RationalFunction::new(p(&[1]), p(&[0, 1])).unwrap();
        assert!(a.rf_equal(&b).unwrap());
        let c = RationalFunction::new(p(&[1, 0, -1]), p(&[1, -1])).unwrap();
        assert!(c
            .rf_equal(&RationalFunction::from_poly(p(&[1, 1])))
            .unwrap());
        assert!(!c.rf_equal(&b).unwrap());
    }

    #[test]
    fn negative_monomial() {
        let m = RationalFunction::monomial(V, rat(3), &[-2]);
        let x2 = RationalFunction::monomial(V, rat(1), &[2]);
        assert!((&m * &x2)
            .rf_equal(&RationalFunction::constant(V, rat(3)))
            .unwrap());
    }

    #[test]
    fn series_substitution() {
        let f = RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        let mut m = HashMap::new();
        m.insert("X".into(), Series::from_ints(&[0, 1, 0, 0]));
        assert_eq!(f.eval_series(&m).unwrap(), Series::from_ints(&[1, 1, 1, 1]));
        let motz = Series::from_ints(&[1, 1, 2, 4, 9]);
        m.insert("X".into(), motz.clone());
        assert_eq!(RationalFunction::var(V, "X").eval_series(&m).unwrap(), motz);
    }

    #[test]
    fn equivalence_agrees_with_sampling() {
        let f = RationalFunction::new(p(&[1, 0, -1]), p(&[1, -1])).unwrap();
        let g = RationalFunction::from_poly(p(&[1, 1]));
        for k in [ratio(1, 3), ratio(-2, 5), rat(7)] {
            let pt = HashMap::from([("X".to_string(), k)]);
            assert_eq!(f.eval(&pt).unwrap(), g.eval(&pt).unwrap());
        }
    }
}
