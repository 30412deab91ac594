use super::{binary_T, binary_X, mul_xpow, one_minus_pow, BinaryWeights, Boundary};
use crate::arith::{rat, BiSeries, Series};
use crate::error::{Error, Result};
use crate::kernel::{newton_solve, SeriesPoly};

/// Extra precision consumed by cancelling powers of `X`.
const MARGIN: usize = 4;

struct Parts {
    t: Series,
    x: Series,
    /// `N = (v1/T + w1 + w2)(1 − X²)(1 − X³)`
    num: Series,
    /// `E = w1 X + w2 (1 + X + X²)`
    den: Series,
}

impl Parts {
    fn new(w: &BinaryWeights, order: usize) -> Result<Self> {
        w.check_lemma_domain()?;
        let t = binary_T(w, order);
        let x = binary_X(w, order)?;
        let one = Series::one(order);
        let c = &Series::constant(w.v1.clone(), order).div(&t)?
            + &Series::constant(&w.w1 + &w.w2, order);
        let num = &(&c * &one_minus_pow(&x, 2)) * &one_minus_pow(&x, 3);
        let den = &x.scale(&w.w1) + &(&(&one + &x) + &(&x * &x)).scale(&w.w2);
        Ok(Parts { t, x, num, den })
    }

    /// `C·X = N X / E`, always a power series.
    fn cx(&self) -> Result<Series> {
        (&self.num * &self.x).div(&self.den)
    }
}

/// `T_j = T (1 − C λ X^j / ((1 − λX^{j+1})(1 − λX^{j+2})))` for a series `λ`, with
/// `C = (v1/T + w1 + w2)(1 − X²)(1 − X³) / (w1X + w2(1+X+X²))`.
pub fn binary_Tj_closed(
    w: &BinaryWeights,
    lambda: &Series,
    j: i64,
    order: usize,
) -> Result<Series> {
    let inner = order + MARGIN + 2 * j.unsigned_abs() as usize;
    let p = Parts::new(w, inner)?;
    let lam = lambda.truncate(inner);
    let n = lam.order();
    let (t, x) = (p.t.truncate(n), p.x.truncate(n));
    let one = Series::one(n);
    let top = mul_xpow(&(&p.cx()?.truncate(n) * &lam), &x, j - 1)?;
    let d1 = &one - &mul_xpow(&lam, &x, j + 1)?;
    let d2 = &one - &mul_xpow(&lam, &x, j + 2)?;
    let frac = top.div(&(&d1 * &d2))?;
    let m = frac.order().min(order);
    Ok((&t.truncate(m) * &(&Series::one(m) - &frac.truncate(m))).truncate(order))
}

/// `Σ_{k=0}^{cap} μ^k a^k`.
fn geometric_marker(a: &Series, cap: i64) -> BiSeries {
    let mut acc = BiSeries::zero(a.order(), Some(cap));
    let mut p = Series::one(a.order());
    for k in 0..=cap {
        acc = &acc + &BiSeries::from_series_at(&p, k, Some(cap));
        p = &p * a;
    }
    acc
}

/// `T_j` with the free parameter `λ = μ X^shift` kept symbolic in the marker `μ`,
/// truncated above `μ^cap`.
pub fn binary_Tj_symbolic(
    w: &BinaryWeights,
    shift: i64,
    j: i64,
    order: usize,
    cap: i64,
) -> Result<BiSeries> {
    if shift + j - 1 < 0 || shift + j + 1 < 0 {
        return Err(Error::Invalid(format!(
            "shift {shift} too small for j = {j}"
        )));
    }
    let inner = order + MARGIN;
    let p = Parts::new(w, inner)?;
    let x = &p.x;
    let top = &p.cx()? * &x.pow(shift + j - 1)?;
    let g = &geometric_marker(&x.pow(shift + j + 1)?, cap)
        * &geometric_marker(&x.pow(shift + j + 2)?, cap);
    let rho = (&BiSeries::from_series_at(&top, 1, Some(cap)) * &g).truncate(order);
    Ok((&BiSeries::one(order, Some(cap)) - &rho).mul_series(&p.t.truncate(order)))
}

/// Residual of the `T_j` recurrence at `j` for the symbolic one-parameter
/// solution; zero means the recurrence holds for every `λ` up to `μ^cap`.
pub fn binary_Tj_residual(w: &BinaryWeights, j: i64, order: usize, cap: i64) -> Result<BiSeries> {
    let shift = (2 - j).max(0);
    let row = |k: i64| binary_Tj_symbolic(w, shift, k, order, cap);
    let (lo, mid, hi) = (row(j - 1)?, row(j)?, row(j + 1)?);
    let z = |k: &crate::arith::Rat| Series::z(order).scale(k);
    let unary = &(&lo + &hi).mul_series(&z(&w.v1)) + &mid.mul_series(&z(&w.v2));
    let pairs = &(&(&lo * &hi).mul_series(&z(&w.w1)) + &(&mid * &mid).mul_series(&z(&w.w2)))
        + &(&mid * &(&lo + &hi)).mul_series(&z(&w.w3));
    Ok(&(&(&mid - &BiSeries::one(order, Some(cap))) - &unary) - &pairs)
}

/// The power-series root `λ` of `T_{−1}(λ) = boundary`, i.e. of
/// `(T − b) X E (1 − λ)(1 − λX) − T N λ = 0`. The other root has a pole at
/// `z = 0` because the `λ²` coefficient vanishes there; Newton iteration from
/// `λ(0) = 0` selects the power-series branch, which is then substituted back.
pub fn adapt_lambda(w: &BinaryWeights, boundary: Boundary, order: usize) -> Result<Series> {
    let inner = order + MARGIN + 2;
    let p = Parts::new(w, inner)?;
    let b = Series::constant(boundary.value(), inner);
    let base = &(&(&p.t - &b) * &p.x) * &p.den;
    let c0 = base.clone();
    let c1 = &(-(&base * &(&Series::one(inner) + &p.x))) - &(&p.t * &p.num);
    let c2 = &base * &p.x;
    let eq = SeriesPoly::new(vec![c0, c1, c2]);
    let lam = newton_solve(&eq, &rat(0)).map_err(|_| Error::NoPowerSeriesBranch)?;
    let back = binary_Tj_closed(w, &lam, -1, order)?;
    if back != Series::constant(boundary.value(), order) {
        return Err(Error::NoPowerSeriesBranch);
    }
    Ok(lam.truncate(order))
}

/// `T (1 − X^{j+2})(1 − X^{j+7}) / ((1 − X^{j+4})(1 − X^{j+5}))` for binary trees, `j ≥ −1`.
pub fn corollary_binary(j: i64, order: usize) -> Result<Series> {
    product_form(
        &BinaryWeights::ints([0, 0, 1, 0, 0]),
        [j + 2, j + 7],
        [j + 4, j + 5],
        order,
    )
}

/// `T (1 − X^{j+1})(1 − X^{j+4}) / ((1 − X^{j+2})(1 − X^{j+3}))` for planar trees, `j ≥ −1`.
pub fn corollary_planar(j: i64, order: usize) -> Result<Series> {
    product_form(
        &BinaryWeights::ints([0, 0, 0, 1, 1]),
        [j + 1, j + 4],
        [j + 2, j + 3],
        order,
    )
}

fn product_form(w: &BinaryWeights, up: [i64; 2], down: [i64; 2], order: usize) -> Result<Series> {
    if up.iter().chain(&down).any(|&e| e < 0) {
        return Err(Error::Invalid("negative exponent".into()));
    }
    let t = binary_T(w, order);
    let x = binary_X(w, order)?;
    let num = &(&t * &one_minus_pow(&x, up[0])) * &one_minus_pow(&x, up[1]);
    num.div(&(&one_minus_pow(&x, down[0]) * &one_minus_pow(&x, down[1])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary::binary_Tj_table;

    #[test]
    fn lambda_zero_gives_t() {
        let w = BinaryWeights::ints([1, 0, 1, 2, 2]);
        let t = binary_Tj_closed(&w, &Series::zero(12), 3, 12).unwrap();
        assert_eq!(t, binary_T(&w, 12));
    }

    #[test]
    fn adapted_lambdas() {
        let n = 20;
        let bin = BinaryWeights::ints([0, 0, 1, 0, 0]);
        let x = binary_X(&bin, n).unwrap();
        assert_eq!(
            adapt_lambda(&bin, Boundary::One, n).unwrap(),
            x.pow(3).unwrap()
        );
        let pl = BinaryWeights::ints([0, 0, 0, 1, 1]);
        let x = binary_X(&pl, n).unwrap();
        assert_eq!(adapt_lambda(&pl, Boundary::Zero, n).unwrap(), x);
    }

    #[test]
    fn corollaries_against_table() {
        let n = 15;
        let bin = binary_Tj_table(&BinaryWeights::ints([0, 0, 1, 0, 0]), Boundary::One, 4, n);
        let pl = binary_Tj_table(&BinaryWeights::ints([0, 0, 0, 1, 1]), Boundary::Zero, 4, n);
        for j in -1..=4i64 {
            assert_eq!(
                corollary_binary(j, n).unwrap(),
                bin[(j + 1) as usize],
                "binary j={j}"
            );
            assert_eq!(
                corollary_planar(j, n).unwrap(),
                pl[(j + 1) as usize],
                "planar j={j}"
            );
        }
    }

    #[test]
    fn symbolic_solution_satisfies_recurrence() {
        for v in [[0, 0, 1, 0, 0], [1, 2, 1, 1, 1], [0, 1, 0, 1, 1]] {
            let w = BinaryWeights::ints(v);
            for j in [-1, 0, 3] {
                assert!(
                    binary_Tj_residual(&w, j, 12, 6).unwrap().is_zero(),
                    "{v:?} j={j}"
                );
            }
        }
    }

    #[test]
    fn adaptation_for_general_weights_reaches_the_table() {
        let w = BinaryWeights::ints([1, 1, 1, 2, 2]);
        let n = 12;
        let lam = adapt_lambda(&w, Boundary::One, n + 4).unwrap();
        let tab = binary_Tj_table(&w, Boundary::One, 3, n);
        for j in -1..=3i64 {
            assert_eq!(
                binary_Tj_closed(&w, &lam, j, n).unwrap(),
                tab[(j + 1) as usize],
                "j={j}"
            );
        }
    }
}
