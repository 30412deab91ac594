use num_traits::Zero;

use super::{binary_T, binary_X, one_minus_pow, BinaryWeights};
use crate::arith::{rat, BiSeries, Rat, Series, UniPoly, UniRational};
use crate::error::{Error, Result};

/// How the α coefficients were produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlphaMode {
    Recurrence,
    Lemma1,
    W3Only,
}

/// `α_1 … α_{n_max}` as `z`-series, normalized by `α_1 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTable {
    pub mode: AlphaMode,
    pub values: Vec<Series>,
}

impl AlphaTable {
    /// `α_n` (1-based).
    pub fn get(&self, n: usize) -> &Series {
        &self.values[n - 1]
    }
}

fn powers(x: &Series, k: usize) -> Vec<Series> {
    let mut p = vec![Series::one(x.order())];
    for i in 1..=k {
        let next = &p[i - 1] * x;
        p.push(next);
    }
    p
}

/// `v1/T + w1 + w3`.
fn c_series(w: &BinaryWeights, t: &Series) -> Result<Series> {
    let n = t.order();
    let c = &Series::constant(w.v1.clone(), n).div(t)? + &Series::constant(&w.w1 + &w.w3, n);
    if c.get(0).map_or(true, Zero::is_zero) {
        return Err(Error::DegenerateWeights("v1 + w1 + w3 = 0".into()));
    }
    Ok(c)
}

/// α-table of the one-parameter expansion `ρ_j = Σ α_n X^{jn}` for `T_j = T(1 − ρ_j)`.
pub fn binary_alpha(
    w: &BinaryWeights,
    mode: AlphaMode,
    n_max: usize,
    order: usize,
) -> Result<AlphaTable> {
    if w.w1.is_zero() && w.w2.is_zero() && w.w3.is_zero() {
        return Err(Error::DegenerateWeights("w1 = w2 = w3 = 0".into()));
    }
    let x = binary_X(w, order)?;
    let t = binary_T(w, order);
    let values = match mode {
        AlphaMode::Recurrence => alpha_recurrence(w, &t, &x, n_max)?,
        AlphaMode::Lemma1 => {
            w.check_lemma_domain()?;
            let xp = powers(&x, 2);
            let k = &xp[1].scale(&w.w1) + &(&(&xp[0] + &xp[1]) + &xp[2]).scale(&w.w2);
            let c = c_series(w, &t)?;
            let ratio = (&k * &x)
                .div(&(&(&c * &(&xp[0] - &xp[1]).pow(2)?) * &(&(&xp[0] + &xp[1]) + &xp[2])))?;
            let ratio = &ratio * &(&xp[0] + &xp[1]).inv()?;
            let inv1mx = (&xp[0] - &xp[1]).inv()?;
            (1..=n_max)
                .map(|n| Ok(&(&ratio.pow(n as i64 - 1)? * &one_minus_pow(&x, n as i64)) * &inv1mx))
                .collect::<Result<_>>()?
        }
        AlphaMode::W3Only => {
            if !(w.w1.is_zero() && w.w2.is_zero()) {
                return Err(Error::DegenerateWeights(
                    "closed form needs w1 = w2 = 0".into(),
                ));
            }
            let xp = powers(&x, 2);
            let c = c_series(w, &t)?;
            let ratio = x
                .scale(&w.w3)
                .div(&(&(&c * &(&xp[0] - &xp[1]).pow(2)?) * &(&(&xp[0] + &xp[1]) + &xp[2])))?;
            let tail = (&(&xp[0] - &xp[1]) * &(&xp[0] + &xp[1])).inv()?;
            (1..=n_max)
                .map(|n| {
                    Ok(&(&ratio.pow(n as i64 - 1)? * &one_minus_pow(&x, 2 * n as i64)) * &tail)
                })
                .collect::<Result<_>>()?
        }
    };
    Ok(AlphaTable { mode, values })
}

/// `α_m c (1 − X^{m−1})(1 − X^{m+1}) = Σ α_i α_{m−i} (w1 X^{2m−2i} + w2 X^m + w3 (X^{m−i} + X^{m+i}))`.
fn alpha_recurrence(
    w: &BinaryWeights,
    t: &Series,
    x: &Series,
    n_max: usize,
) -> Result<Vec<Series>> {
    let n = x.order();
    let c = c_series(w, t)?;
    let xp = powers(x, 2 * n_max + 1);
    let mut a: Vec<Series> = Vec::with_capacity(n_max);
    for m in 1..=n_max {
        if m == 1 {
            a.push(Series::one(n));
            continue;
        }
        let mut rhs = Series::zero(n);
        for i in 1..m {
            let k = &(&xp[2 * m - 2 * i].scale(&w.w1) + &xp[m].scale(&w.w2))
                + &(&xp[m - i] + &xp[m + i]).scale(&w.w3);
            rhs = &rhs + &(&(&a[i - 1] * &a[m - i - 1]) * &k);
        }
        let den = &(&c * &(&xp[0] - &xp[m - 1])) * &(&xp[0] - &xp[m + 1]);
        a.push(rhs.div(&den)?);
    }
    Ok(a)
}

fn xpoly(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c)
}

/// `β_n = α_n (v1/T + w1 + w3)^{n−1}` as exact rational functions of `X` (they do
/// not depend on `v1`, `v2`), from the recurrence.
pub fn beta_recurrence(w: &BinaryWeights, n_max: usize) -> Result<Vec<UniRational>> {
    let xk = |k: usize| UniPoly::monomial(rat(1), k);
    let mut b: Vec<UniRational> = Vec::with_capacity(n_max);
    for m in 1..=n_max {
        if m == 1 {
            b.push(UniRational::constant(rat(1)));
            continue;
        }
        let mut rhs = UniRational::constant(Rat::zero());
        for i in 1..m {
            let k = &(&xk(2 * m - 2 * i).scale(&w.w1) + &xk(m).scale(&w.w2))
                + &(&xk(m - i) + &xk(m + i)).scale(&w.w3);
            rhs = &rhs + &(&(&b[i - 1] * &b[m - i - 1]) * &UniRational::from_poly(k));
        }
        let den = &UniPoly::one_minus_x_pow(m - 1) * &UniPoly::one_minus_x_pow(m + 1);
        b.push(rhs.div(&UniRational::from_poly(den))?);
    }
    Ok(b)
}

/// Closed `β_n` on the domain `w2 = w3`:
/// `X^{n−1}(w1X + w2(1+X+X²))^{n−1}(1−X^n) / ((1−X)^{2n−1}(1+X+X²)^{n−1}(1+X)^{n−1})`.
pub fn beta_lemma1(w: &BinaryWeights, n_max: usize) -> Result<Vec<UniRational>> {
    w.check_lemma_domain()?;
    let k = &xpoly(&[0, 1]).scale(&w.w1) + &xpoly(&[1, 1, 1]).scale(&w.w2);
    (1..=n_max)
        .map(|n| {
            let e = (n - 1) as u32;
            let num =
                &(&UniPoly::monomial(rat(1), n - 1) * &k.pow(e)) * &UniPoly::one_minus_x_pow(n);
            let den = &(&xpoly(&[1, -1]).pow(2 * n as u32 - 1) * &xpoly(&[1, 1, 1]).pow(e))
                * &xpoly(&[1, 1]).pow(e);
            UniRational::new(num, den)
        })
        .collect()
}

/// Closed `β_n` for `w1 = w2 = 0`:
/// `X^{n−1} w3^{n−1} (1−X^{2n}) / ((1−X)^{2n−1}(1+X+X²)^{n−1}(1+X))`.
pub fn beta_w3_only(w: &BinaryWeights, n_max: usize) -> Result<Vec<UniRational>> {
    if !(w.w1.is_zero() && w.w2.is_zero()) || w.w3.is_zero() {
        return Err(Error::DegenerateWeights(
            "closed form needs w1 = w2 = 0 < w3".into(),
        ));
    }
    (1..=n_max)
        .map(|n| {
            let e = (n - 1) as u32;
            let num = UniPoly::monomial(num_traits::pow(w.w3.clone(), n - 1), n - 1);
            let num = &num * &UniPoly::one_minus_x_pow(2 * n);
            let den = &(&xpoly(&[1, -1]).pow(2 * n as u32 - 1) * &xpoly(&[1, 1, 1]).pow(e))
                * &xpoly(&[1, 1]);
            UniRational::new(num, den)
        })
        .collect()
}

/// Residual of the full (unlinearized) recurrence for `T_j = T(1 − Σ α_n Y^n)`
/// with `Y = X^j`, as a series in `z` and the marker `Y`, truncated at the
/// marker degree `alphas.len()`. The marker is rescaled by `X` so that all
/// exponents of `X` stay non-negative.
pub fn graded_residual(w: &BinaryWeights, alphas: &[Series], order: usize) -> Result<BiSeries> {
    let cap = Some(alphas.len() as i64);
    let t = binary_T(w, order);
    let x = binary_X(w, order)?;
    let tj = |o: i64| -> Result<BiSeries> {
        let mut rho = BiSeries::zero(order, cap);
        for (i, a) in alphas.iter().enumerate() {
            let n = i as i64 + 1;
            let s = a * &x.pow((o + 1) * n)?;
            rho = &rho + &BiSeries::from_series_at(&s, n, cap);
        }
        Ok((&BiSeries::one(order, cap) - &rho).mul_series(&t))
    };
    let (lo, mid, hi) = (tj(-1)?, tj(0)?, tj(1)?);
    let z = |k: &Rat| Series::z(order).scale(k);
    let unary = &(&lo + &hi).mul_series(&z(&w.v1)) + &mid.mul_series(&z(&w.v2));
    let pairs = &(&(&lo * &hi).mul_series(&z(&w.w1)) + &(&mid * &mid).mul_series(&z(&w.w2)))
        + &(&mid * &(&lo + &hi)).mul_series(&z(&w.w3));
    Ok(&(&(&mid - &BiSeries::one(order, cap)) - &unary) - &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma_matches_recurrence_small() {
        for v in [
            [0, 0, 1, 0, 0],
            [1, 2, 1, 0, 0],
            [0, 1, 0, 1, 1],
            [2, 0, 1, 2, 2],
        ] {
            let w = BinaryWeights::ints(v);
            let r = binary_alpha(&w, AlphaMode::Recurrence, 6, 20).unwrap();
            let l = binary_alpha(&w, AlphaMode::Lemma1, 6, 20).unwrap();
            assert_eq!(r.values, l.values, "{v:?}");
            assert_eq!(r.get(1), &Series::one(20));
        }
    }

    #[test]
    fn w3_only_matches_recurrence() {
        for v in [[0, 0, 0, 0, 1], [1, 1, 0, 0, 2]] {
            let w = BinaryWeights::ints(v);
            let r = binary_alpha(&w, AlphaMode::Recurrence, 5, 20).unwrap();
            let c = binary_alpha(&w, AlphaMode::W3Only, 5, 20).unwrap();
            assert_eq!(r.values, c.values);
        }
    }

    #[test]
    fn rational_forms_agree() {
        let w = BinaryWeights::ints([0, 0, 2, 1, 1]);
        assert_eq!(beta_recurrence(&w, 8).unwrap(), beta_lemma1(&w, 8).unwrap());
        let w = BinaryWeights::ints([0, 0, 0, 0, 3]);
        assert_eq!(
            beta_recurrence(&w, 8).unwrap(),
            beta_w3_only(&w, 8).unwrap()
        );
    }

    #[test]
    fn recurrence_solves_the_unlinearized_equation() {
        for v in [[0, 0, 1, 0, 0], [1, 1, 1, 2, 1], [1, 0, 1, 0, 1]] {
            let w = BinaryWeights::ints(v);
            let a = binary_alpha(&w, AlphaMode::Recurrence, 5, 15).unwrap();
            assert!(
                graded_residual(&w, &a.values, 15).unwrap().is_zero(),
                "{v:?}"
            );
        }
    }

    #[test]
    fn domain_errors() {
        let w = BinaryWeights::ints([0, 0, 1, 0, 1]);
        assert!(matches!(
            binary_alpha(&w, AlphaMode::Lemma1, 3, 5),
            Err(Error::DegenerateWeights(_))
        ));
        assert!(matches!(
            binary_alpha(&w, AlphaMode::W3Only, 3, 5),
            Err(Error::DegenerateWeights(_))
        ));
        let z = BinaryWeights::ints([1, 0, 0, 0, 0]);
        assert!(binary_alpha(&z, AlphaMode::Recurrence, 3, 5).is_err());
    }
}
