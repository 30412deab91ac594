use num_traits::One;

use super::{DaryFamily, DaryKind};
use crate::arith::{rat, MultiPoly, Rat, RationalFunction};
use crate::error::Result;

fn x_pow(vars: &[&str], k: u32) -> MultiPoly {
    let mut e = vec![0; vars.len()];
    e[vars
        .iter()
        .position(|v| *v == "X")
        .expect("X is a variable")] = k;
    MultiPoly::monomial(vars, Rat::one(), &e)
}

/// `(num, den)` of `Z` with `1 = Z Σ_o X^o`.
fn z_big(fam: &DaryFamily, vars: &[&str]) -> (MultiPoly, MultiPoly) {
    let d = fam.d as u32;
    let one = MultiPoly::one(vars);
    match fam.kind {
        DaryKind::Odd => (
            &x_pow(vars, d) * &(&one - &x_pow(vars, 1)),
            &one - &x_pow(vars, 2 * d + 1),
        ),
        DaryKind::Even => (
            &x_pow(vars, 2 * d - 1) * &(&one - &x_pow(vars, 2)),
            &one - &x_pow(vars, 4 * d),
        ),
    }
}

/// `(T, z)` as rational functions of `vars` (which must contain `X`):
/// `T = 1/(1 − Z)`, `z = Z(1 − Z)^{arity−1}`.
fn parametrization_in(fam: &DaryFamily, vars: &[&str]) -> (RationalFunction, RationalFunction) {
    let (n, d) = z_big(fam, vars);
    let diff = &d - &n;
    let t = RationalFunction::new(d.clone(), diff.clone()).expect("nonzero denominator");
    let a = fam.arity() as u32;
    let z = RationalFunction::new(&n * &diff.pow(a - 1), d.pow(a)).expect("nonzero denominator");
    (t, z)
}

/// Exact parametrization `(T(X), z(X))` by the small branch `X`: substituting
/// both satisfies `T = 1 + zT^arity` and the characteristic equation identically.
pub fn dary_rational_parametrization(fam: &DaryFamily) -> (RationalFunction, RationalFunction) {
    parametrization_in(fam, &["X"])
}

/// The one-parameter solution `T_j = T·Π(1 − λYX^{u})/Π(1 − λYX^{v})` with
/// `Y = X^j`, so that one identity in `(X, Y, λ)` covers every `j`.
#[derive(Clone, Debug)]
pub struct OneParamSolution {
    pub family: DaryFamily,
    vars: Vec<&'static str>,
    pub t: RationalFunction,
    pub z: RationalFunction,
    lambda: RationalFunction,
    /// Numerator exponents, then denominator exponents, at `j = 0`.
    pub exponents: [i64; 4],
}

impl OneParamSolution {
    /// `lambda = None` keeps `λ` symbolic as the variable `L`.
    pub fn new(fam: &DaryFamily, lambda: Option<Rat>) -> Self {
        let vars: Vec<&'static str> = match lambda {
            None => vec!["X", "Y", "L"],
            Some(_) => vec!["X", "Y"],
        };
        let (t, z) = parametrization_in(fam, &vars);
        let lambda = match lambda {
            None => RationalFunction::var(&vars, "L"),
            Some(l) => RationalFunction::constant(&vars, l),
        };
        let d = fam.d as i64;
        let exponents = match fam.kind {
            DaryKind::Odd => [d + 1, 2 * d + 3, d + 2, 2 * d + 2],
            DaryKind::Even => [d + 1, 3 * d + 4, d + 3, 3 * d + 2],
        };
        OneParamSolution {
            family: *fam,
            vars,
            t,
            z,
            lambda,
            exponents,
        }
    }

    pub fn vars(&self) -> &[&'static str] {
        &self.vars
    }

    fn one_minus(&self, k: i64) -> RationalFunction {
        let mut e = vec![0; self.vars.len()];
        e[0] = k;
        e[1] = 1;
        let m = RationalFunction::monomial(&self.vars, rat(1), &e);
        &RationalFunction::constant(&self.vars, rat(1)) - &(&self.lambda * &m)
    }

    /// `T_{j+o}/T`, i.e. the product formula with `Y ↦ Y X^o`.
    pub fn factor(&self, o: i64) -> RationalFunction {
        let [a, b, c, d] = self.exponents.map(|e| e + o);
        let num = &self.one_minus(a) * &self.one_minus(b);
        let den = &self.one_minus(c) * &self.one_minus(d);
        num.div(&den).expect("nonzero denominator")
    }

    /// `T_{j+o}`.
    pub fn row(&self, o: i64) -> RationalFunction {
        &self.t * &self.factor(o)
    }
}

/// The one-parameter solution with symbolic `λ` and `Y = X^j`.
pub fn lemma_one_param_solution(fam: &DaryFamily) -> OneParamSolution {
    OneParamSolution::new(fam, None)
}

/// Numerator of `T_j − 1 − z Π_o T_{j+o}` after substituting the one-parameter
/// solution and the rational parametrization; zero iff the identity holds.
pub fn one_param_residual(fam: &DaryFamily) -> Result<MultiPoly> {
    let s = lemma_one_param_solution(fam);
    let mut prod = RationalFunction::constant(s.vars(), rat(1));
    for o in fam.offsets() {
        prod = &prod * &s.row(o);
    }
    let rhs = &RationalFunction::constant(s.vars(), rat(1)) + &(&s.z * &prod);
    s.row(0).cross_residual(&rhs)
}

/// Exact proof, for all `j` and all `λ`, that the one-parameter solution
/// satisfies the recurrence.
pub fn verify_one_param(fam: &DaryFamily) -> Result<bool> {
    Ok(one_param_residual(fam)?.is_zero())
}

#[cfg(test)]
mod tests {
    use std::collections::HashMap;

    use super::*;
    use crate::arith::Series;
    use crate::dary::{dary_T, dary_char_factor};

    #[test]
    fn ternary_parametrization() {
        let (t, z) = dary_rational_parametrization(&DaryFamily::odd(1));
        let expect = RationalFunction::new(
            MultiPoly::from_coeffs(&["X"], "X", &[1, 1, 1]),
            MultiPoly::from_coeffs(&["X"], "X", &[1, 0, 1]),
        )
        .unwrap();
        assert!(t.rf_equal(&expect).unwrap());
        // T − 1 − zT³ = 0
        let v = ["X"];
        let one = RationalFunction::constant(&v, rat(1));
        let r = &(&t - &one) - &(&z * &t.pow(3).unwrap());
        assert!(r.is_zero());
    }

    #[test]
    fn parametrization_identities() {
        for f in [
            DaryFamily::odd(1),
            DaryFamily::odd(2),
            DaryFamily::even(1),
            DaryFamily::even(2),
            DaryFamily::even(3),
        ] {
            let (t, z) = dary_rational_parametrization(&f);
            let v = ["X"];
            let one = RationalFunction::constant(&v, rat(1));
            let lhs = &t - &one;
            let rhs = &z * &t.pow(f.arity() as i64).unwrap();
            assert!(lhs.rf_equal(&rhs).unwrap(), "{f}");
            // characteristic equation: 1 = zT^{a−1} Σ X^o
            let mut s = RationalFunction::constant(&v, rat(0));
            for o in f.offsets() {
                s = &s + &RationalFunction::monomial(&v, rat(1), &[o]);
            }
            let zz = &z * &t.pow(f.arity() as i64 - 1).unwrap();
            assert!((&zz * &s).rf_equal(&one).unwrap(), "{f}");
        }
    }

    #[test]
    fn parametrization_matches_series_for_single_branch() {
        for f in [DaryFamily::odd(1), DaryFamily::even(1)] {
            let n = 30;
            let x = dary_char_factor(&f, n).unwrap().elementary[0].clone();
            let (t, _) = dary_rational_parametrization(&f);
            let m: HashMap<String, Series> = [("X".to_string(), x)].into();
            assert_eq!(t.eval_series(&m).unwrap(), dary_T(&f, n), "{f}");
        }
    }

    #[test]
    fn exponent_patterns() {
        assert_eq!(
            lemma_one_param_solution(&DaryFamily::odd(1)).exponents,
            [2, 5, 3, 4]
        );
        assert_eq!(
            lemma_one_param_solution(&DaryFamily::even(1)).exponents,
            [2, 7, 4, 5]
        );
    }

    #[test]
    fn lambda_zero_is_trivial() {
        let s = OneParamSolution::new(&DaryFamily::odd(2), Some(rat(0)));
        assert!(s.row(3).rf_equal(&s.t).unwrap());
    }

    #[test]
    fn one_param_identity_small() {
        assert!(verify_one_param(&DaryFamily::odd(1)).unwrap());
        assert!(verify_one_param(&DaryFamily::even(1)).unwrap());
    }

    #[test]
    fn wrong_exponents_are_caught() {
        let mut s = lemma_one_param_solution(&DaryFamily::odd(1));
        s.exponents[1] += 1;
        let mut prod = RationalFunction::constant(s.vars(), rat(1));
        for o in s.family.offsets() {
            prod = &prod * &s.row(o);
        }
        let rhs = &RationalFunction::constant(s.vars(), rat(1)) + &(&s.z * &prod);
        assert!(!s.row(0).rf_equal(&rhs).unwrap());
    }
}
