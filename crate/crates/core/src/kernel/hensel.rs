use num_traits::{One, Zero};

use super::SeriesPoly;
use crate::arith::{Rat, Series};
use crate::error::{Error, Result};
use crate::paths::StepSet;

/// The monic degree-`c` factor `Π (X − X_ℓ)` over the small branches, stored as
/// its signed elementary symmetric functions: `A = X^c − e_1 X^{c−1} + e_2 X^{c−2} − …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallFactor {
    pub c: usize,
    /// `e[k-1] = e_k`.
    pub elementary: Vec<Series>,
}

impl SmallFactor {
    pub fn order(&self) -> usize {
        self.elementary.first().map_or(0, Series::order)
    }

    /// `A(X)` as a polynomial with series coefficients.
    pub fn as_poly(&self) -> SeriesPoly {
        let n = self.order();
        let mut c = vec![Series::zero(n); self.c + 1];
        c[self.c] = Series::one(n);
        for (k, e) in self.elementary.iter().enumerate() {
            let k = k + 1;
            c[self.c - k] = if k % 2 == 0 { e.clone() } else { -e };
        }
        SeriesPoly::new(c)
    }

    /// `Π_ℓ (1 − X_ℓ) = A(1)`.
    pub fn prod_one_minus(&self) -> Series {
        let mut acc = Series::one(self.order());
        for (k, e) in self.elementary.iter().enumerate() {
            acc = if k % 2 == 0 { &acc - e } else { &acc + e };
        }
        acc
    }
}

/// `X^c − Z X^c P(X)` for the step set, with `Z` an arbitrary series.
pub fn characteristic_poly(steps: &StepSet, zser: &Series) -> SeriesPoly {
    let n = zser.order();
    let (c, d) = (steps.c() as i64, steps.d() as i64);
    let mut coeffs = vec![Series::zero(n); (c + d.max(0) + 1) as usize];
    coeffs[c as usize] = Series::one(n);
    for (b, w) in steps.steps() {
        let k = (c + b) as usize;
        coeffs[k] = &coeffs[k] - &zser.scale(w);
    }
    SeriesPoly::new(coeffs)
}

/// Small factor of `X^c − zX^cP(X)` for a lattice step set.
pub fn hensel_small_factor(steps: &StepSet, order: usize) -> Result<SmallFactor> {
    if steps.c() == 0 || steps.d() == 0 {
        return Err(Error::DegenerateStepSet);
    }
    let f = characteristic_poly(steps, &Series::z(order));
    small_factor(&f, steps.c()).map(|(a, _)| a)
}

/// Factors `f = A·B` modulo `z^order` where `f ≡ X^c·g₀(X)` at `z = 0` with
/// `g₀(0) ≠ 0`; `A` is monic of degree `c` reducing to `X^c`. Uses quadratic
/// Hensel lifting with cofactor updates from the coprime pair `(X^c, g₀)`.
pub fn small_factor(f: &SeriesPoly, c: usize) -> Result<(SmallFactor, SeriesPoly)> {
    let n = f.order();
    let f0 = f.at_origin();
    if f0.len() <= c || f0[..c].iter().any(|x| !x.is_zero()) || f0[c].is_zero() {
        return Err(Error::DegenerateCharacteristic);
    }
    let g0: Vec<Rat> = f0[c..].to_vec();
    // s = g0^{-1} mod X^c, t = (1 − s·g0) / X^c, so s·g0 + t·X^c = 1.
    let mut s0 = vec![Rat::zero(); c];
    let inv0 = g0[0].recip();
    for k in 0..c {
        let mut acc = if k == 0 { Rat::one() } else { Rat::zero() };
        for i in 1..=k.min(g0.len() - 1) {
            acc -= &g0[i] * &s0[k - i];
        }
        s0[k] = acc * &inv0;
    }
    let mut sg = vec![Rat::zero(); c + g0.len()];
    for (i, a) in s0.iter().enumerate() {
        for (j, b) in g0.iter().enumerate() {
            sg[i + j] += a * b;
        }
    }
    let t0: Vec<Rat> = sg[c..].iter().map(|x| -x).collect();

    let mut h = SeriesPoly::from_rats(&monomial(c), 1);
    let mut g = SeriesPoly::from_rats(&g0, 1);
    let mut s = SeriesPoly::from_rats(&s0, 1);
    let mut t = SeriesPoly::from_rats(&t0, 1);
    let one = |p: usize| SeriesPoly::from_rats(&[Rat::one()], p);
    let mut p = 1;
    while p < n {
        p = (2 * p).min(n);
        let (gp, hp, sp, tp) = (g.padded(p), h.padded(p), s.padded(p), t.padded(p));
        let fp = f.truncate(p);
        let e = fp.sub(&gp.mul(&hp));
        let (q, r) = sp.mul(&e).divrem_monic(&hp);
        let g_new = gp.add(&tp.mul(&e)).add(&q.mul(&gp));
        let h_new = hp.add(&r);
        let b = sp.mul(&g_new).add(&tp.mul(&h_new)).sub(&one(p));
        let (cq, dr) = sp.mul(&b).divrem_monic(&h_new);
        s = sp.sub(&dr);
        t = tp.sub(&tp.mul(&b)).sub(&cq.mul(&g_new));
        g = g_new;
        h = h_new;
    }
    let h = h.padded(n);
    let elementary = (1..=c)
        .map(|k| {
            let x = h.coeff(c - k);
            if k % 2 == 0 {
                x
            } else {
                -x
            }
        })
        .collect();
    Ok((SmallFactor { c, elementary }, g.padded(n)))
}

fn monomial(c: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); c + 1];
    v[c] = Rat::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::paths::StepSet;

    #[test]
    fn dyck_branch() {
        let sf = hensel_small_factor(&StepSet::dyck(), 9).unwrap();
        assert_eq!(sf.c, 1);
        assert_eq!(
            sf.elementary[0],
            Series::from_ints(&[0, 1, 0, 1, 0, 2, 0, 5, 0])
        );
        // agrees with (1 − sqrt(1 − 4z²)) / (2z)
        let n = 10;
        let r = Series::from_ints(&[1, 0, -4, 0, 0, 0, 0, 0, 0, 0])
            .sqrt()
            .unwrap();
        let x = (&Series::one(n) - &r)
            .div(&Series::monomial(rat(2), 1, n))
            .unwrap();
        assert_eq!(x.truncate(9), sf.elementary[0]);
    }

    #[test]
    fn motzkin_branch() {
        let sf = hensel_small_factor(&StepSet::motzkin(), 6).unwrap();
        assert_eq!(sf.elementary[0], Series::from_ints(&[0, 1, 1, 2, 4, 9]));
    }

    #[test]
    fn puiseux_pair_has_series_symmetric_functions() {
        let steps = StepSet::parse("-2:1,1:1").unwrap();
        let n = 30;
        let f = characteristic_poly(&steps, &Series::z(n));
        let (a, b) = small_factor(&f, 2).unwrap();
        assert_eq!(a.c, 2);
        assert!(a.elementary.iter().all(|e| e.get(0).unwrap().is_zero()));
        assert_eq!(a.as_poly().mul(&b), f);
    }

    #[test]
    fn reconstruction_for_mixed_weights() {
        let steps = StepSet::parse("-2:1,-1:2,1:1,3:1").unwrap();
        let n = 25;
        let f = characteristic_poly(&steps, &Series::z(n));
        let (a, b) = small_factor(&f, 2).unwrap();
        assert_eq!(a.as_poly().mul(&b), f);
    }

    #[test]
    fn degenerate_sets() {
        let up = StepSet::parse("1:1,2:1").unwrap();
        assert!(matches!(
            hensel_small_factor(&up, 5),
            Err(Error::DegenerateStepSet)
        ));
    }
}
