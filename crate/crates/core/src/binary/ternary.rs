use super::{one_minus_pow, AlphaMode, AlphaTable};
use crate::arith::{rat, BiSeries, Rat, Series};
use crate::error::Result;
use crate::kernel::{newton_solve, SeriesPoly};

/// `T = 1 + z(2v1 + v2)T + zT³`.
pub fn ternary_T(v1: &Rat, v2: &Rat, order: usize) -> Series {
    let z = Series::z(order);
    let eq = SeriesPoly::new(vec![
        Series::one(order),
        &z.scale(&(v1 * rat(2) + v2)) - &Series::one(order),
        Series::zero(order),
        z,
    ]);
    newton_solve(&eq, &rat(1)).expect("simple root at the origin")
}

/// Small root of `1 = z(v1(1/X + X) + v2) + zT²(1/X + 1 + X)`.
pub fn ternary_X(v1: &Rat, v2: &Rat, order: usize) -> Series {
    let t = ternary_T(v1, v2, order);
    let z = Series::z(order);
    let t2 = &t * &t;
    let a = &z * &(&t2 + &Series::constant(v1.clone(), order));
    let b = &z * &(&t2 + &Series::constant(v2.clone(), order));
    let eq = SeriesPoly::new(vec![a.clone(), &b - &Series::one(order), a]);
    newton_solve(&eq, &rat(0)).expect("simple root at the origin")
}

/// α-table for `T_j = T(1 − Σ α_n X^{jn})` from
/// `α_m c (1−X^{m−1})(1−X^{m+1}) = Σ α_iα_{m−i}(X^{2m−2i} + X^{m−i} + X^{m+i}) − Σ α_{i1}α_{i2}α_{i3} X^{m+i3−i1}`
/// with `c = v1/T² + 1` and `α_1 = 1`.
pub fn ternary_alpha(v1: &Rat, v2: &Rat, n_max: usize, order: usize) -> Result<AlphaTable> {
    let t = ternary_T(v1, v2, order);
    let x = ternary_X(v1, v2, order);
    let c = &Series::constant(v1.clone(), order).div(&(&t * &t))? + &Series::one(order);
    let mut xp = vec![Series::one(order)];
    for k in 1..=3 * n_max {
        let next = &xp[k - 1] * &x;
        xp.push(next);
    }
    let mut a: Vec<Series> = Vec::with_capacity(n_max);
    for m in 1..=n_max {
        if m == 1 {
            a.push(Series::one(order));
            continue;
        }
        let mut rhs = Series::zero(order);
        for i in 1..m {
            let k = &(&xp[2 * m - 2 * i] + &xp[m - i]) + &xp[m + i];
            rhs = &rhs + &(&(&a[i - 1] * &a[m - i - 1]) * &k);
        }
        for i1 in 1..m {
            for i3 in 1..m {
                if i1 + i3 >= m {
                    continue;
                }
                let i2 = m - i1 - i3;
                let term = &(&(&a[i1 - 1] * &a[i2 - 1]) * &a[i3 - 1]) * &xp[m + i3 - i1];
                rhs = &rhs - &term;
            }
        }
        let den = &(&c * &one_minus_pow(&x, m as i64 - 1)) * &one_minus_pow(&x, m as i64 + 1);
        a.push(rhs.div(&den)?);
    }
    Ok(AlphaTable {
        mode: AlphaMode::Recurrence,
        values: a,
    })
}

/// Residual of `T_j = 1 + z(v1(T_{j−1} + T_{j+1}) + v2T_j) + zT_{j−1}T_jT_{j+1}` for
/// `T_{j+o} = T(1 − Σ α_n X^{(o+1)n} Y^n)`, truncated at `Y^{alphas.len()}`.
pub fn ternary_residual(v1: &Rat, v2: &Rat, alphas: &[Series], order: usize) -> Result<BiSeries> {
    let cap = Some(alphas.len() as i64);
    let t = ternary_T(v1, v2, order);
    let x = ternary_X(v1, v2, order);
    let tj = |o: i64| -> Result<BiSeries> {
        let mut rho = BiSeries::zero(order, cap);
        for (i, a) in alphas.iter().enumerate() {
            let n = i as i64 + 1;
            rho = &rho + &BiSeries::from_series_at(&(a * &x.pow((o + 1) * n)?), n, cap);
        }
        Ok((&BiSeries::one(order, cap) - &rho).mul_series(&t))
    };
    let (lo, mid, hi) = (tj(-1)?, tj(0)?, tj(1)?);
    let z = Series::z(order);
    let unary = &(&lo + &hi).mul_series(&z.scale(v1)) + &mid.mul_series(&z.scale(v2));
    let triple = (&(&lo * &mid) * &hi).mul_series(&z);
    Ok(&(&(&mid - &BiSeries::one(order, cap)) - &unary) - &triple)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ternary_series() {
        assert_eq!(
            ternary_T(&rat(0), &rat(0), 5),
            Series::from_ints(&[1, 1, 3, 12, 55])
        );
        // X = (1 + X + X²)/(1 + X²) composed relation: check the characteristic equation directly
        let (v1, v2) = (rat(1), rat(2));
        let n = 20;
        let t = ternary_T(&v1, &v2, n);
        let x = ternary_X(&v1, &v2, n);
        let z = Series::z(n);
        let t2 = &t * &t;
        let lhs = &x;
        let rhs = &(&z * &(&(&Series::one(n) + &(&x * &x)).scale(&v1) + &x.scale(&v2)))
            + &(&(&z * &t2) * &(&(&Series::one(n) + &x) + &(&x * &x)));
        assert_eq!(*lhs, rhs);
    }

    #[test]
    fn alpha_solves_the_full_recurrence() {
        for (a, b) in [(0, 0), (1, 0), (1, 3)] {
            let (v1, v2) = (rat(a), rat(b));
            let al = ternary_alpha(&v1, &v2, 5, 14).unwrap();
            assert!(
                ternary_residual(&v1, &v2, &al.values, 14)
                    .unwrap()
                    .is_zero(),
                "v=({a},{b})"
            );
        }
    }

    #[test]
    fn printed_sign_fails_the_residual() {
        // flipping the cubic sum breaks the full recurrence from α_3 on
        let (v1, v2) = (rat(0), rat(0));
        let mut al = ternary_alpha(&v1, &v2, 3, 12).unwrap().values;
        let x = ternary_X(&v1, &v2, 12);
        let den = &one_minus_pow(&x, 2) * &one_minus_pow(&x, 4);
        // α_3 gains 2·α_1³ X^3 / den
        al[2] = &al[2] + &x.pow(3).unwrap().scale(&rat(2)).div(&den).unwrap();
        assert!(!ternary_residual(&v1, &v2, &al, 12).unwrap().is_zero());
    }
}
