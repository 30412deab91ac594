use super::oracle::MAX_ORACLE_SIZE;
use super::{mul_xpow, one_minus_pow};
use crate::arith::{rat, BiSeries, Rat, Series};
use crate::error::{Error, Result};
use crate::kernel::{newton_solve, SeriesPoly};

/// `T = 1 + z(v1+v2)T + zT²`.
pub fn height_T(v1: &Rat, v2: &Rat, order: usize) -> Series {
    let z = Series::z(order);
    let eq = SeriesPoly::new(vec![
        Series::one(order),
        &z.scale(&(v1 + v2)) - &Series::one(order),
        z.clone(),
    ]);
    newton_solve(&eq, &rat(1)).expect("simple root at the origin")
}

/// `X = z(v1 + T) / (1 − z(v2 + T))`.
pub fn height_X(v1: &Rat, v2: &Rat, order: usize) -> Series {
    let t = height_T(v1, v2, order);
    let z = Series::z(order);
    let num = &z * &(&t + &Series::constant(v1.clone(), order));
    let den = &Series::one(order) - &(&z * &(&t + &Series::constant(v2.clone(), order)));
    num.div(&den).expect("unit denominator")
}

/// Rows `T_0 = 1, T_1, …, T_{j_max}` of `T_j = 1 + z(v1T_{j−1} + v2T_j) + zT_{j−1}T_j`.
pub fn height_table(v1: &Rat, v2: &Rat, j_max: usize, order: usize) -> Vec<Series> {
    let mut rows = vec![Series::one(order)];
    for _ in 1..=j_max {
        let prev = rows.last().unwrap().coeffs().to_vec();
        let mut c: Vec<Rat> = Vec::with_capacity(order);
        for n in 0..order {
            let v = if n == 0 {
                rat(1)
            } else {
                let mut acc = v1 * &prev[n - 1] + v2 * &c[n - 1];
                for k in 0..n {
                    acc += &prev[k] * &c[n - 1 - k];
                }
                acc
            };
            c.push(v);
        }
        rows.push(Series::from_coeffs(c));
    }
    rows
}

/// `T (1 − (v1/T + 1)(1 − X) λ X^j / (1 − λX^{j+1}))`.
pub fn height_Tj(v1: &Rat, v2: &Rat, lambda: &Series, j: i64, order: usize) -> Result<Series> {
    let inner = order + 2 + 2 * j.unsigned_abs() as usize;
    let lam = lambda.truncate(inner);
    let n = lam.order();
    let t = height_T(v1, v2, n);
    let x = height_X(v1, v2, n);
    let k = &(&Series::constant(v1.clone(), n).div(&t)? + &Series::one(n)) * &one_minus_pow(&x, 1);
    let top = mul_xpow(&(&k * &lam), &x, j)?;
    let frac = top.div(&(&Series::one(n) - &mul_xpow(&lam, &x, j + 1)?))?;
    let m = frac.order().min(order);
    Ok((&t.truncate(m) * &(&Series::one(m) - &frac.truncate(m))).truncate(order))
}

/// [`height_Tj`] with `λ = μ X^shift` symbolic in the marker `μ`, truncated above `μ^cap`.
pub fn height_Tj_symbolic(
    v1: &Rat,
    v2: &Rat,
    shift: i64,
    j: i64,
    order: usize,
    cap: i64,
) -> Result<BiSeries> {
    if shift + j < 0 {
        return Err(Error::Invalid(format!(
            "shift {shift} too small for j = {j}"
        )));
    }
    let t = height_T(v1, v2, order);
    let x = height_X(v1, v2, order);
    let k = &(&Series::constant(v1.clone(), order).div(&t)? + &Series::one(order))
        * &one_minus_pow(&x, 1);
    let top = &k * &x.pow(shift + j)?;
    let a = x.pow(shift + j + 1)?;
    let mut rho = BiSeries::zero(order, Some(cap));
    let mut p = top;
    for e in 1..=cap {
        rho = &rho + &BiSeries::from_series_at(&p, e, Some(cap));
        p = &p * &a;
    }
    Ok((&BiSeries::one(order, Some(cap)) - &rho).mul_series(&t))
}

/// Plane trees of height `≤ j` by edges: `T (1 − X^{j+1}) / (1 − X^{j+2})`, `X = T − 1`.
pub fn height_plane_trees(j: usize, order: usize) -> Series {
    let t = height_T(&rat(0), &rat(0), order);
    let x = &t - &Series::one(order);
    (&t * &one_minus_pow(&x, j as i64 + 1))
        .div(&one_minus_pow(&x, j as i64 + 2))
        .expect("unit denominator")
}

/// Counts of plane trees with `n ≤ n_max` edges and height `≤ j`, by listing
/// every Dyck path of semilength `n` and measuring its height.
pub fn height_oracle(j: usize, n_max: usize) -> Result<Vec<Rat>> {
    if n_max > MAX_ORACLE_SIZE {
        return Err(Error::SizeTooLarge(n_max, MAX_ORACLE_SIZE));
    }
    fn walk(up: usize, down: usize, h: usize, top: usize, n: usize, out: &mut Vec<usize>) {
        if up == n && down == n {
            out.push(top);
            return;
        }
        if up < n {
            walk(up + 1, down, h + 1, top.max(h + 1), n, out);
        }
        if down < up {
            walk(up, down + 1, h - 1, top, n, out);
        }
    }
    (0..=n_max)
        .map(|n| {
            let mut heights = Vec::new();
            walk(0, 0, 0, 0, n, &mut heights);
            Ok(rat(heights.iter().filter(|&&h| h <= j).count() as i64))
        })
        .collect()
}

/// `α_m (v1/T + 1)(1 − X^{m−1}) = Σ_{i<m} α_i α_{m−i} X^{m−i}` with `α_1 = 1`.
pub fn height_alpha_recurrence(
    v1: &Rat,
    v2: &Rat,
    n_max: usize,
    order: usize,
) -> Result<Vec<Series>> {
    let t = height_T(v1, v2, order);
    let x = height_X(v1, v2, order);
    let c = &Series::constant(v1.clone(), order).div(&t)? + &Series::one(order);
    let mut a: Vec<Series> = Vec::with_capacity(n_max);
    for m in 1..=n_max {
        if m == 1 {
            a.push(Series::one(order));
            continue;
        }
        let mut rhs = Series::zero(order);
        for i in 1..m {
            rhs = &rhs + &(&(&a[i - 1] * &a[m - i - 1]) * &x.pow((m - i) as i64)?);
        }
        a.push(rhs.div(&(&c * &one_minus_pow(&x, m as i64 - 1)))?);
    }
    Ok(a)
}

/// `α_n = X^{n−1} / ((v1/T + 1)^{n−1}(1 − X)^{n−1})`.
pub fn height_alpha_closed(v1: &Rat, v2: &Rat, n_max: usize, order: usize) -> Result<Vec<Series>> {
    let t = height_T(v1, v2, order);
    let x = height_X(v1, v2, order);
    let c = &Series::constant(v1.clone(), order).div(&t)? + &Series::one(order);
    let r = x.div(&(&c * &one_minus_pow(&x, 1)))?;
    (0..n_max).map(|k| r.pow(k as i64)).collect()
}
