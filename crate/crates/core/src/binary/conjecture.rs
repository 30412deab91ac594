use super::{binary_T, binary_X, binary_alpha, AlphaMode, BinaryWeights};
use crate::arith::{rat, Rat, Series, UniPoly};
use crate::error::Result;

/// `p_1 … p_{n_max}` from `p_1 = p_2 = 1`, `p_3 = X⁴ + 2X³ + 2X + 1`,
/// `p_{2n} = p_{2n−1} − 2X² p_{2n−2}`, `p_{2n+1} = p_{n+2} p_{n+1} − 4X⁴ p_n p_{n−1}`.
pub fn conjecture_p(n_max: usize) -> Vec<UniPoly> {
    let mut p: Vec<UniPoly> = vec![UniPoly::zero()];
    for m in 1..=n_max {
        let next = match m {
            1 | 2 => UniPoly::one(),
            3 => UniPoly::from_ints(&[1, 2, 0, 2, 1]),
            _ if m % 2 == 0 => &p[m - 1] - &(&UniPoly::monomial(rat(2), 2) * &p[m - 2]),
            _ => {
                let k = (m - 1) / 2;
                &(&p[k + 2] * &p[k + 1]) - &(&(&UniPoly::monomial(rat(4), 4) * &p[k]) * &p[k - 1])
            }
        };
        p.push(next);
    }
    p.remove(0);
    p
}

/// Per-`n` comparison of the α recurrence with the conjectured closed form at
/// `w = (v1, v2, 1, 0, 1)`. Agreement at finite order is evidence, not proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub order: usize,
    pub agreement: Vec<(usize, bool)>,
}

impl ConjectureReport {
    pub fn consistent(&self) -> bool {
        self.agreement.iter().all(|a| a.1)
    }

    pub fn status(&self) -> &'static str {
        if self.consistent() {
            "conjecture-consistent"
        } else {
            "conjecture-inconsistent"
        }
    }
}

pub fn conjecture_check(
    v1: &Rat,
    v2: &Rat,
    n_max: usize,
    order: usize,
) -> Result<ConjectureReport> {
    let w = BinaryWeights::new(v1.clone(), v2.clone(), rat(1), rat(0), rat(1))?;
    let rec = binary_alpha(&w, AlphaMode::Recurrence, n_max, order)?;
    let t = binary_T(&w, order);
    let x = binary_X(&w, order)?;
    let one = Series::one(order);
    let c = &Series::constant(v1.clone(), order).div(&t)? + &Series::constant(rat(2), order);
    let p = conjecture_p(n_max);
    let mut agreement = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let f = ((n - 1) / 2) as i64;
        let num = &x.pow(n as i64 - 1)? * &p[n - 1].eval_series(&x);
        let den = &(&(&c.pow(n as i64 - 1)? * &(&one - &x).pow(2 * n as i64 - 2)?)
            * &(&one + &x).pow(2 * f)?)
            * &(&one + &(&x * &x)).pow(f)?;
        agreement.push((n, num.div(&den)? == *rec.get(n)));
    }
    Ok(ConjectureReport { order, agreement })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_polynomials() {
        let p = conjecture_p(4);
        assert_eq!(p[0], UniPoly::one());
        assert_eq!(p[1], UniPoly::one());
        assert_eq!(p[2], UniPoly::from_ints(&[1, 2, 0, 2, 1]));
        assert_eq!(p[3], UniPoly::from_ints(&[1, 2, -2, 2, 1]));
    }

    #[test]
    fn consistent_at_low_order() {
        let r = conjecture_check(&rat(0), &rat(0), 6, 20).unwrap();
        assert_eq!(r.status(), "conjecture-consistent");
        let r = conjecture_check(&rat(1), &rat(2), 5, 15).unwrap();
        assert!(r.consistent());
    }
}
