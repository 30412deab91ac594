use super::SmallFactor;
use crate::arith::Series;

/// `h_0 … h_{f_max}` of the small branches, from `h_f = Σ_k (−1)^{k−1} e_k h_{f−k}`.
pub fn complete_homogeneous(sf: &SmallFactor, f_max: usize) -> Vec<Series> {
    let n = sf.order();
    let mut h = vec![Series::one(n)];
    for f in 1..=f_max {
        let mut acc = Series::zero(n);
        for k in 1..=f.min(sf.c) {
            let t = &sf.elementary[k - 1] * &h[f - k];
            acc = if k % 2 == 1 { &acc + &t } else { &acc - &t };
        }
        h.push(acc);
    }
    h
}

/// Power sums `p_1 … p_{k_max}` via `p_k = Σ_{i<k} (−1)^{i−1} e_i p_{k−i} + (−1)^{k−1} k e_k`.
pub fn power_sums(sf: &SmallFactor, k_max: usize) -> Vec<Series> {
    let n = sf.order();
    let mut p: Vec<Series> = vec![Series::zero(n)];
    for k in 1..=k_max {
        let mut acc = Series::zero(n);
        for i in 1..k.min(sf.c + 1) {
            let t = &sf.elementary[i - 1] * &p[k - i];
            acc = if i % 2 == 1 { &acc + &t } else { &acc - &t };
        }
        if k <= sf.c {
            let t = sf.elementary[k - 1].scale(&crate::arith::rat(k as i64));
            acc = if k % 2 == 1 { &acc + &t } else { &acc - &t };
        }
        p.push(acc);
    }
    p.remove(0);
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, BiSeries};
    use crate::kernel::{characteristic_poly, hensel_small_factor, small_factor};
    use crate::paths::StepSet;

    #[test]
    fn single_branch_powers() {
        let sf = hensel_small_factor(&StepSet::motzkin(), 12).unwrap();
        let h = complete_homogeneous(&sf, 5);
        let x = &sf.elementary[0];
        for (f, hf) in h.iter().enumerate() {
            assert_eq!(*hf, x.pow(f as i64).unwrap());
        }
        assert_eq!(power_sums(&sf, 3)[2], x.pow(3).unwrap());
    }

    #[test]
    fn h1_is_e1() {
        let steps = StepSet::parse("-3:1,-1:1,2:1").unwrap();
        let sf = hensel_small_factor(&steps, 10).unwrap();
        let h = complete_homogeneous(&sf, 1);
        assert_eq!(h[1], sf.elementary[0]);
    }

    #[test]
    fn generating_identity_in_two_variables() {
        // Σ h_f t^f · Π (1 − X_ℓ t) = 1, with t as a marker of degree ≤ 20.
        let steps = StepSet::parse("-2:1,2:1").unwrap();
        let n = 20;
        let sf = hensel_small_factor(&steps, n).unwrap();
        let h = complete_homogeneous(&sf, n);
        let mut hs = BiSeries::zero(n, None);
        for (f, hf) in h.iter().enumerate() {
            hs = &hs + &BiSeries::from_series_at(hf, f as i64, None);
        }
        let mut prod = BiSeries::one(n, None);
        for (k, e) in sf.elementary.iter().enumerate() {
            let term = BiSeries::from_series_at(e, k as i64 + 1, None);
            prod = if k % 2 == 0 {
                &prod - &term
            } else {
                &prod + &term
            };
        }
        let r = &hs * &prod;
        for d in 0..=n as i64 {
            let s = r.extract(d);
            let expect = if d == 0 {
                Series::one(n)
            } else {
                Series::zero(n)
            };
            assert_eq!(s, expect, "t^{d}");
        }
    }

    #[test]
    fn power_sums_match_newton_identity_for_reconstruction() {
        let steps = StepSet::parse("-2:1,-1:1,1:1").unwrap();
        let n = 15;
        let f = characteristic_poly(&steps, &Series::z(n));
        let (a, _) = small_factor(&f, 2).unwrap();
        let p = power_sums(&a, 2);
        // p_2 = e_1² − 2 e_2
        let e1 = &a.elementary[0];
        let e2 = &a.elementary[1];
        assert_eq!(p[1], &(e1 * e1) - &e2.scale(&rat(2)));
        assert_eq!(p[0], *e1);
    }
}
