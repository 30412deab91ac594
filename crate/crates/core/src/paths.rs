//! One-dimensional weighted lattice paths on the half line: meanders and
//! excursions from the small branches of the kernel, plus a direct DP oracle.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{parse_rat, rat, BiSeries, LaurentPoly, Rat, Series};
use crate::error::{Error, Result};
use crate::kernel::{complete_homogeneous, hensel_small_factor};

/// Weighted step set `{(b_ℓ, w_ℓ)}` with distinct jumps, sorted by jump.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepSet {
    steps: Vec<(i64, Rat)>,
}

impl StepSet {
    pub fn new(mut steps: Vec<(i64, Rat)>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::Invalid("empty step set".into()));
        }
        steps.sort_by_key(|s| s.0);
        if steps.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Invalid("repeated jump".into()));
        }
        if steps.iter().any(|s| !s.1.is_positive()) {
            return Err(Error::Invalid("weights must be positive".into()));
        }
        Ok(StepSet { steps })
    }

    /// Parses `"b:w,b:w,..."`; a bare `b` has weight 1.
    pub fn parse(s: &str) -> Result<Self> {
        let mut v = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (b, w) = match part.split_once(':') {
                Some((b, w)) => (b.trim(), parse_rat(w.trim())?),
                None => (part, Rat::one()),
            };
            let b = b
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("jump {b:?}: {e}")))?;
            v.push((b, w));
        }
        Self::new(v)
    }

    pub fn dyck() -> Self {
        Self::new(vec![(-1, rat(1)), (1, rat(1))]).unwrap()
    }

    pub fn motzkin() -> Self {
        Self::new(vec![(-1, rat(1)), (0, rat(1)), (1, rat(1))]).unwrap()
    }

    pub fn steps(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.steps.iter().map(|(b, w)| (*b, w))
    }

    /// Largest downward jump (0 if none).
    pub fn c(&self) -> usize {
        (-self.steps[0].0).max(0) as usize
    }

    /// Largest upward jump (0 if none).
    pub fn d(&self) -> usize {
        self.steps[self.steps.len() - 1].0.max(0) as usize
    }

    /// `P(1)`, the total step weight.
    pub fn total_weight(&self) -> Rat {
        self.steps.iter().map(|s| &s.1).sum()
    }

    /// `P(v)` as a Laurent polynomial.
    pub fn laurent(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (b, w) in self.steps() {
            p = &p + &LaurentPoly::monomial(w.clone(), b);
        }
        p
    }
}

impl fmt::Display for StepSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|(b, w)| format!("{b}:{w}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `1 / (1 − zP(1))`.
pub fn walks_total(s: &StepSet, order: usize) -> Series {
    Series::geometric(s.total_weight(), order)
}

/// Meanders from level `j`; `marked` carries the absolute final level in the marker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeanderGF {
    pub start_level: usize,
    pub plain: Series,
    pub marked: BiSeries,
}

/// `Σ_n z^n P(v)^n`.
fn free_walks_marked(s: &StepSet, order: usize) -> BiSeries {
    let p = s.laurent();
    let mut c = Vec::with_capacity(order);
    let mut acc = LaurentPoly::constant(Rat::one());
    for _ in 0..order {
        c.push(acc.clone());
        acc = &acc * &p;
    }
    BiSeries::from_polys(c, None)
}

/// `T_j = (1/(1 − zP(1))) Σ_{f ≤ j} h_f · Π(1 − X_ℓ)`, with the endpoint-marked
/// variant `v^j (1/(1 − zP(v))) Σ_{f ≤ j} h_f v^{−f} · Π(1 − X_ℓ/v)`.
pub fn meander_gf(s: &StepSet, j: usize, order: usize) -> Result<MeanderGF> {
    let sf = hensel_small_factor(s, order)?;
    let h = complete_homogeneous(&sf, j);
    let hsum = h.iter().fold(Series::zero(order), |a, b| &a + b);
    let plain = &(&walks_total(s, order) * &hsum) * &sf.prod_one_minus();

    let mut hv = BiSeries::zero(order, None);
    for (f, hf) in h.iter().enumerate() {
        hv = &hv + &BiSeries::from_series_at(hf, -(f as i64), None);
    }
    // v^{−c} A(v) = Σ_k (−1)^k e_k v^{−k}
    let mut av = BiSeries::one(order, None);
    for (k, e) in sf.elementary.iter().enumerate() {
        let t = BiSeries::from_series_at(e, -(k as i64 + 1), None);
        av = if k % 2 == 0 { &av - &t } else { &av + &t };
    }
    let marked = (&(&free_walks_marked(s, order) * &hv) * &av).shift_marker(j as i64);
    Ok(MeanderGF {
        start_level: j,
        plain,
        marked,
    })
}

/// Paths from level `j` back to level `j` staying non-negative: `[v^j] T_j(z, v)`.
pub fn excursion_gf(s: &StepSet, j: usize, order: usize) -> Result<Series> {
    Ok(meander_gf(s, j, order)?.marked.extract(j as i64))
}

/// Direct count: `counts[n][k]` is the weight of `n`-step paths from `j` to `k`
/// that never go below 0. Returns the row sums and the table.
pub fn meander_dp(s: &StepSet, j: usize, order: usize) -> (Vec<Rat>, Vec<Vec<Rat>>) {
    let width = |n: usize| j + n * s.d() + 1;
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(order);
    if order == 0 {
        return (vec![], rows);
    }
    let mut first = vec![Rat::zero(); width(0)];
    first[j] = Rat::one();
    rows.push(first);
    for n in 1..order {
        let prev = &rows[n - 1];
        let mut next = vec![Rat::zero(); width(n)];
        for (k, x) in prev.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, w) in s.steps() {
                let t = k as i64 + b;
                if t >= 0 {
                    next[t as usize] += x * w;
                }
            }
        }
        rows.push(next);
    }
    let plain = rows.iter().map(|r| r.iter().sum()).collect();
    (plain, rows)
}

/// First `(j, n)` where the closed form disagrees with the DP, in either the
/// plain series, the marked series at `v = 1`, or any endpoint column.
pub fn meander_mismatch(s: &StepSet, j_max: usize, order: usize) -> Result<Option<(usize, usize)>> {
    for j in 0..=j_max {
        let g = meander_gf(s, j, order)?;
        let (plain, table) = meander_dp(s, j, order);
        let at1 = g.marked.at_one();
        for n in 0..order {
            if g.plain.coeffs()[n] != plain[n] || at1.coeffs()[n] != plain[n] {
                return Ok(Some((j, n)));
            }
            let poly = g.marked.coeff(n);
            if poly.lo().is_some_and(|l| l < 0) {
                return Ok(Some((j, n)));
            }
            for (k, x) in table[n].iter().enumerate() {
                if poly.coeff(k as i64) != *x {
                    return Ok(Some((j, n)));
                }
            }
            if poly.hi().is_some_and(|h| h as usize >= table[n].len()) {
                return Ok(Some((j, n)));
            }
        }
    }
    Ok(None)
}

/// Closed form equals the DP for every start level `j ≤ j_max`.
pub fn verify_meander_theorem(s: &StepSet, j_max: usize, order: usize) -> Result<bool> {
    Ok(meander_mismatch(s, j_max, order)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn parsing() {
        let s = StepSet::parse("1:3, -1:2").unwrap();
        assert_eq!((s.c(), s.d()), (1, 1));
        assert_eq!(s.total_weight(), rat(5));
        assert_eq!(s.to_string(), "-1:2,1:3");
        assert_eq!(
            StepSet::parse("-2,1:1/2").unwrap().total_weight(),
            ratio(3, 2)
        );
        assert!(StepSet::parse("1:1,1:2").is_err());
        assert!(StepSet::parse("1:0").is_err());
        assert!(StepSet::parse("x:1").is_err());
    }

    #[test]
    fn totals() {
        assert_eq!(
            walks_total(&StepSet::dyck(), 4),
            Series::from_ints(&[1, 2, 4, 8])
        );
        assert_eq!(
            walks_total(&StepSet::motzkin(), 3),
            Series::from_ints(&[1, 3, 9])
        );
        let w = StepSet::parse("-1:2,1:3").unwrap();
        assert_eq!(walks_total(&w, 3), Series::from_ints(&[1, 5, 25]));
    }

    #[test]
    fn dyck_meanders_and_excursions() {
        let g = meander_gf(&StepSet::dyck(), 0, 7).unwrap();
        assert_eq!(g.plain, Series::from_ints(&[1, 1, 2, 3, 6, 10, 20]));
        let e = excursion_gf(&StepSet::dyck(), 0, 9).unwrap();
        assert_eq!(e, Series::from_ints(&[1, 0, 1, 0, 2, 0, 5, 0, 14]));
        let far = meander_gf(&StepSet::dyck(), 12, 12).unwrap();
        assert_eq!(far.plain, walks_total(&StepSet::dyck(), 12));
    }

    #[test]
    fn motzkin_excursions() {
        let e = excursion_gf(&StepSet::motzkin(), 0, 7).unwrap();
        assert_eq!(e, Series::from_ints(&[1, 1, 2, 4, 9, 21, 51]));
        let g = meander_gf(&StepSet::motzkin(), 0, 3).unwrap();
        assert_eq!(g.plain.coeffs()[1], rat(2));
    }

    #[test]
    fn long_down_step() {
        let s = StepSet::parse("-2:1,1:1").unwrap();
        let e = excursion_gf(&s, 0, 4).unwrap();
        assert_eq!(e.coeffs()[3], rat(1));
    }

    #[test]
    fn dp_basics() {
        let s = StepSet::parse("-1:2,0:1/2,1:3").unwrap();
        let (plain, table) = meander_dp(&s, 0, 3);
        assert_eq!(plain[0], rat(1));
        assert_eq!(plain[1], ratio(7, 2));
        assert_eq!(table[0][0], rat(1));
    }

    #[test]
    fn theorem_small_cases() {
        assert!(verify_meander_theorem(&StepSet::dyck(), 5, 20).unwrap());
        assert!(verify_meander_theorem(&StepSet::motzkin(), 3, 15).unwrap());
        let s = StepSet::parse("-2:1,-1:2,1:1,3:1").unwrap();
        assert!(verify_meander_theorem(&s, 3, 12).unwrap());
    }

    #[test]
    fn degenerate() {
        let up = StepSet::parse("0:1,1:1").unwrap();
        assert!(matches!(
            meander_gf(&up, 0, 4),
            Err(Error::DegenerateStepSet)
        ));
    }
}
