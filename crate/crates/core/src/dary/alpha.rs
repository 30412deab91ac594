use super::{DaryFamily, DaryKind};
use crate::arith::{rat, UniPoly, UniRational};
use crate::error::Result;

fn xp(k: i64) -> UniRational {
    let m = UniPoly::monomial(rat(1), k.unsigned_abs() as usize);
    if k >= 0 {
        UniRational::from_poly(m)
    } else {
        UniRational::new(UniPoly::one(), m).expect("nonzero monomial")
    }
}

fn one_minus(e: usize) -> UniPoly {
    UniPoly::one_minus_x_pow(e)
}

/// Closed one-branch coefficients `α_1..α_{n_max}` with `α_1 = 1`, as rational functions of `X`.
pub fn one_param_alpha_closed(fam: &DaryFamily, n_max: usize) -> Result<Vec<UniRational>> {
    let d = fam.d;
    (1..=n_max)
        .map(|n| {
            let (lead, top, first, a, b) = match fam.kind {
                DaryKind::Odd => (n - 1, n * d, d, 1, d + 1),
                DaryKind::Even => (2 * (n - 1), n * (2 * d - 1), 2 * d - 1, 2, 2 * d + 1),
            };
            let num = &UniPoly::monomial(rat(1), lead) * &one_minus(top);
            let k = (n - 1) as u32;
            let den = &(&one_minus(first) * &one_minus(a).pow(k)) * &one_minus(b).pow(k);
            UniRational::new(num, den)
        })
        .collect()
}

/// Closed and recurrence values of the one-branch coefficients, `α_1 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneParamAlpha {
    pub family: DaryFamily,
    pub closed: Vec<UniRational>,
    pub recurrence: Vec<UniRational>,
}

impl OneParamAlpha {
    /// First `n` (1-based) where the two disagree.
    pub fn first_mismatch(&self) -> Option<usize> {
        self.closed
            .iter()
            .zip(&self.recurrence)
            .position(|(a, b)| a != b)
            .map(|i| i + 1)
    }

    pub fn agree(&self) -> bool {
        self.first_mismatch().is_none()
    }
}

/// Solves the single-branch recurrence
/// `α_n (Σ_o X^{on} − Σ_o X^o) = [w^n] Π_o (1 − Σ_{g<n} α_g X^{og} w^g)`,
/// which encodes the alternating sum over subsets of offsets and ordered
/// compositions of `n` into at least two parts.
fn one_param_recurrence(fam: &DaryFamily, n_max: usize) -> Result<Vec<UniRational>> {
    let offs = fam.offsets();
    let zero = UniRational::constant(rat(0));
    let base = offs.iter().fold(zero.clone(), |acc, &o| &acc + &xp(o));
    let mut a: Vec<UniRational> = vec![UniRational::constant(rat(1))];
    for n in 2..=n_max {
        let mut prod: Vec<UniRational> = vec![zero.clone(); n + 1];
        prod[0] = UniRational::constant(rat(1));
        for &o in &offs {
            let mut next = prod.clone();
            for g in 1..n {
                let f = &a[g - 1] * &xp(o * g as i64);
                for i in 0..=n - g {
                    if !prod[i].is_zero() {
                        next[i + g] = &next[i + g] - &(&prod[i] * &f);
                    }
                }
            }
            prod = next;
        }
        let shifted = offs
            .iter()
            .fold(zero.clone(), |acc, &o| &acc + &xp(o * n as i64));
        a.push(prod[n].div(&(&shifted - &base))?);
    }
    Ok(a)
}

/// Closed one-parameter α-coefficients and their independent recomputation
/// from the single-branch recurrence.
pub fn dary_alpha_one_param(fam: &DaryFamily, n_max: usize) -> Result<OneParamAlpha> {
    Ok(OneParamAlpha {
        family: *fam,
        closed: one_param_alpha_closed(fam, n_max)?,
        recurrence: one_param_recurrence(fam, n_max)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_coefficient_is_one() {
        for f in [DaryFamily::odd(1), DaryFamily::even(3)] {
            let r = dary_alpha_one_param(&f, 1).unwrap();
            assert_eq!(r.closed[0], UniRational::constant(rat(1)));
            assert!(r.agree());
        }
    }

    #[test]
    fn ternary_agrees() {
        let r = dary_alpha_one_param(&DaryFamily::odd(1), 8).unwrap();
        assert_eq!(r.first_mismatch(), None);
    }

    #[test]
    fn quaternary_agrees() {
        assert!(dary_alpha_one_param(&DaryFamily::even(2), 6)
            .unwrap()
            .agree());
    }

    #[test]
    fn binary_case_is_plane_trees_ratio() {
        // even d = 1: α_n = X^{2(n−1)}(1 − X^n)/((1 − X)(1 − X²)^{n−1}(1 − X³)^{n−1})
        let c = one_param_alpha_closed(&DaryFamily::even(1), 2).unwrap();
        let expect = UniRational::new(
            &UniPoly::monomial(rat(1), 2) * &one_minus(2),
            &(&one_minus(1) * &one_minus(2)) * &one_minus(3),
        )
        .unwrap();
        assert_eq!(c[1], expect);
    }
}
