use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rat, Op, Rat, Series};
use crate::error::{Error, Result};

/// Sparse polynomial over ℚ in an ordered list of named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    fn zero_like(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: Rat) -> Self {
        let mut p = Self::zero(vars);
        p.insert(vec![0; vars.len()], c);
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, Rat::one())
    }

    /// `coef · Π var_i^{e_i}`.
    pub fn monomial(vars: &[&str], coef: Rat, exps: &[u32]) -> Self {
        assert_eq!(vars.len(), exps.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        p.insert(exps.to_vec(), coef);
        p
    }

    /// The variable `name` itself; panics if it is not in `vars`.
    pub fn var(vars: &[&str], name: &str) -> Self {
        let i = vars
            .iter()
            .position(|v| *v == name)
            .unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, Rat::one(), &e)
    }

    /// Univariate-in-`name` polynomial from integer coefficients (low degree first).
    pub fn from_coeffs(vars: &[&str], name: &str, c: &[i64]) -> Self {
        let x = Self::var(vars, name);
        let mut acc = Self::zero(vars);
        let mut p = Self::one(vars);
        for &k in c {
            if k != 0 {
                acc = &acc + &p.scale(&rat(k));
            }
            p = &p * &x;
        }
        acc
    }

    fn insert(&mut self, e: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.vars == o.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch(self.vars.clone(), o.vars.clone()))
        }
    }

    pub fn arith(&self, o: &Self, op: Op) -> Result<Self> {
        self.check(o)?;
        Ok(match op {
            Op::Add => self.combine(o, true),
            Op::Sub => self.combine(o, false),
            Op::Mul => self.mul_unchecked(o),
        })
    }

    fn combine(&self, o: &Self, add: bool) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.insert(e.clone(), if add { c.clone() } else { -c });
        }
        r
    }

    /// Product computed over a common denominator with integer accumulation.
    fn mul_unchecked(&self, o: &Self) -> Self {
        let (a, ad) = integerize(&self.terms);
        let (b, bd) = integerize(&o.terms);
        let den = ad * bd;
        let mut acc: HashMap<Vec<u32>, BigInt> = HashMap::with_capacity(a.len() * b.len() / 2 + 1);
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Vec<u32> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        let mut r = self.zero_like();
        for (e, c) in acc {
            if !c.is_zero() {
                r.terms.insert(e, Rat::new(c, den.clone()));
            }
        }
        r
    }

    pub fn scale(&self, k: &Rat) -> Self {
        let mut r = self.zero_like();
        if !k.is_zero() {
            for (e, c) in &self.terms {
                r.terms.insert(e.clone(), c * k);
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::from([(vec![0; self.vars.len()], Rat::one())]),
        };
        let mut b = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul_unchecked(&b);
            }
        }
        acc
    }

    /// Total degree in the named variable.
    pub fn degree_in(&self, name: &str) -> Option<u32> {
        let i = self.vars.iter().position(|v| v == name)?;
        self.terms.keys().map(|e| e[i]).max()
    }

    /// Substitutes a truncated series for every variable.
    pub fn eval_series(&self, assign: &HashMap<String, Series>) -> Result<Series> {
        let mut vals = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            vals.push(
                assign
                    .get(v)
                    .ok_or_else(|| Error::UnassignedVariable(v.clone()))?,
            );
        }
        let order = vals.iter().map(|s| s.order()).min().unwrap_or(0);
        let mut powers: Vec<Vec<Series>> = vals
            .iter()
            .map(|s| vec![Series::one(order), s.truncate(order)])
            .collect();
        let mut acc = Series::zero(order);
        for (e, c) in &self.terms {
            let mut t = Series::constant(c.clone(), order);
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &powers[i][1];
                    powers[i].push(next);
                }
                t = &t * &powers[i][k as usize];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Evaluates at rational points.
    pub fn eval(&self, point: &HashMap<String, Rat>) -> Result<Rat> {
        let mut vals = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            vals.push(
                point
                    .get(v)
                    .ok_or_else(|| Error::UnassignedVariable(v.clone()))?,
            );
        }
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in vals.iter().zip(e) {
                t *= num_traits::pow::pow((*x).clone(), k as usize);
            }
            acc += t;
        }
        Ok(acc)
    }
}

fn integerize(t: &BTreeMap<Vec<u32>, Rat>) -> (Vec<(&Vec<u32>, BigInt)>, BigInt) {
    let mut l = BigInt::one();
    for c in t.values() {
        if !c.denom().is_one() {
            l = l.lcm(c.denom());
        }
    }
    let v = t
        .iter()
        .map(|(e, c)| (e, c.numer() * (&l / c.denom())))
        .collect();
    (v, l)
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    /// Panics on mismatched variable lists; use [`MultiPoly::arith`] to get an error instead.
    fn add(self, o: &MultiPoly) -> MultiPoly {
        self.arith(o, Op::Add).expect("variable lists")
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        self.arith(o, Op::Sub).expect("variable lists")
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        self.arith(o, Op::Mul).expect("variable lists")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&rat(-1))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let a = c.abs();
            let mono: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(k, _)| **k > 0)
                .map(|(k, v)| {
                    if *k == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{k}")
                    }
                })
                .collect();
            match (mono.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{a}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{a}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}
