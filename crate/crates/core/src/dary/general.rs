use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::{dary_char_factor, one_param_alpha_closed, DaryFamily, DaryKind};
use crate::arith::{rat, Cyc, CycSeries, CycloField, Rat, Series, UniPoly};
use crate::error::Result;
use crate::kernel::{newton_solve, SeriesPoly, SmallFactor};

/// The `c` small branches `X_ℓ(s) = X_1(ζ^{ℓ−1}s)` as Laurent series in
/// `s = Z^{1/c}` over `ℚ(ζ_c)`, where `Z = zT^{arity−1}`.
#[derive(Clone, Debug)]
pub struct Branches {
    pub family: DaryFamily,
    pub field: Arc<CycloField>,
    pub x: Vec<CycSeries>,
    /// `Z = s^c`.
    pub zbig: CycSeries,
}

/// Branches known modulo `s^{prec+1}`. `X = sY` with `Y^c = Q(sY)`, `Q(X) = Σ_o X^{o+c}`,
/// and `Y(0) = 1` is a simple root, so `Y` has rational coefficients.
pub fn small_branches(fam: &DaryFamily, prec: usize) -> Result<Branches> {
    let c = fam.c();
    let field = CycloField::new(c);
    let deg = c + fam.max_offset();
    let mut coeffs = vec![Series::zero(prec); deg + 1];
    for o in fam.offsets() {
        let k = (o + c as i64) as usize;
        coeffs[k] = &coeffs[k] - &Series::monomial(rat(1), k, prec);
    }
    coeffs[c] = &coeffs[c] + &Series::one(prec);
    let y = newton_solve(&SeriesPoly::new(coeffs), &rat(1))?;
    let x1 = CycSeries::new(
        &field,
        1,
        y.coeffs()
            .iter()
            .map(|v| Cyc::from_rat(&field, v.clone()))
            .collect(),
    );
    let x = (0..c as i64).map(|l| x1.twist(l)).collect();
    let zbig = CycSeries::monomial(&field, Cyc::one(&field), c as i64, prec as i64 + c as i64);
    Ok(Branches {
        family: *fam,
        field,
        x,
        zbig,
    })
}

/// `Π_ℓ (X − X_ℓ)` expanded: `e_1..e_c` of the branches.
fn branch_elementary(b: &Branches) -> Vec<CycSeries> {
    let p = b.zbig.prec();
    let one = CycSeries::constant(&b.field, Cyc::one(&b.field), p);
    let mut e = vec![one];
    for x in &b.x {
        let mut next = e.clone();
        next.push(&e[e.len() - 1] * x);
        for k in (1..e.len()).rev() {
            next[k] = &e[k] + &(&e[k - 1] * x);
        }
        e = next;
    }
    e.remove(0);
    e
}

/// A `z`-series re-expanded in `s`, via `z = Z(1 − Z)^{arity−1}` and `Z = s^c`.
fn z_series_in_s(fam: &DaryFamily, field: &Arc<CycloField>, f: &Series) -> Result<CycSeries> {
    let n = f.order();
    let zz = Series::z(n);
    let z_of_zz = &zz * &(&Series::one(n) - &zz).pow(fam.arity() as i64 - 1)?;
    Ok(CycSeries::from_series(
        field,
        &f.compose(&z_of_zz)?,
        fam.c(),
    ))
}

impl Branches {
    /// The branches' elementary symmetric functions coincide with those of
    /// the Hensel small factor (computed independently in `z`).
    pub fn matches_small_factor(&self, sf: &SmallFactor) -> Result<bool> {
        let ours = branch_elementary(self);
        for (k, e) in sf.elementary.iter().enumerate() {
            let theirs = z_series_in_s(&self.family, &self.field, e)?;
            let diff = &ours[k] - &theirs;
            if !diff.is_zero() || diff.prec() < self.family.c() as i64 {
                return Ok(false);
            }
            if (0..diff.prec()).any(|i| ours[k].coeff(i).is_some_and(|x| x.as_rat().is_none())) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Initial value `α_{e_ℓ}` of a branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Seed {
    /// A fixed power series in `z`.
    Value(Series),
    /// `λ X^{d+1}(1−X)(1−X^{d+1})` (odd kind) or `λ X^{d+1}(1−X²)(1−X^{2d+1})`
    /// (even kind), with `X` the branch itself.
    Lemma(Rat),
}

/// How the pure-direction coefficients `α_{n e_ℓ}` are obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PureMode {
    /// The one-branch closed form.
    Closed,
    /// The same multi-index recurrence as the mixed coefficients.
    Recurrence,
}

/// Coefficients `α_n` for `1 ≤ |n| ≤ bound` of `ρ_j = Σ α_n X^{jn}`.
#[derive(Clone, Debug)]
pub struct MultiAlphaTable {
    pub family: DaryFamily,
    pub bound: usize,
    pub mode: PureMode,
    pub entries: BTreeMap<Vec<u32>, CycSeries>,
}

impl MultiAlphaTable {
    pub fn get(&self, n: &[u32]) -> Option<&CycSeries> {
        self.entries.get(n)
    }
}

/// Cache of branch powers `X_ℓ^k`, `k ∈ ℤ`.
struct Powers<'a> {
    b: &'a Branches,
    cache: HashMap<(usize, i64), CycSeries>,
}

impl<'a> Powers<'a> {
    fn new(b: &'a Branches) -> Self {
        Powers {
            b,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, l: usize, k: i64) -> Result<CycSeries> {
        if let Some(v) = self.cache.get(&(l, k)) {
            return Ok(v.clone());
        }
        let v = self.b.x[l].pow(k)?;
        self.cache.insert((l, k), v.clone());
        Ok(v)
    }

    /// `X^{k·n} = Π_ℓ X_ℓ^{k n_ℓ}`.
    fn multi(&mut self, k: i64, n: &[u32]) -> Result<CycSeries> {
        let mut acc: Option<CycSeries> = None;
        for (l, &e) in n.iter().enumerate() {
            if e > 0 {
                let p = self.get(l, k * e as i64)?;
                acc = Some(match acc {
                    None => p,
                    Some(a) => &a * &p,
                });
            }
        }
        Ok(acc.expect("nonzero multi-index"))
    }
}

fn multi_indices(c: usize, bound: usize) -> Vec<Vec<u32>> {
    let mut out = vec![];
    fn rec(c: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == c {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(c, left - k, cur, out);
            cur.pop();
        }
    }
    rec(c, bound as u32, &mut vec![], &mut out);
    out.retain(|n| n.iter().any(|&x| x > 0));
    out.sort_by_key(|n| (n.iter().sum::<u32>(), n.clone()));
    out
}

fn eval_uni(p: &UniPoly, x: &CycSeries) -> CycSeries {
    let f = x.field();
    let mut acc = CycSeries::zero(f, x.prec().max(0) + 1);
    for a in p.coeffs().iter().rev() {
        acc = &(&acc * x) + &CycSeries::constant(f, Cyc::from_rat(f, a.clone()), x.prec().max(1));
    }
    acc
}

fn seed_value(b: &Branches, l: usize, seed: &Seed) -> Result<CycSeries> {
    match seed {
        Seed::Value(s) => z_series_in_s(&b.family, &b.field, s),
        Seed::Lemma(lam) => {
            let d = b.family.d as i64;
            let x = &b.x[l];
            let p = x.prec();
            let one = CycSeries::constant(&b.field, Cyc::one(&b.field), p);
            let (u, v) = match b.family.kind {
                DaryKind::Odd => (1, d + 1),
                DaryKind::Even => (2, 2 * d + 1),
            };
            let f = &(&x.pow(d + 1)? * &(&one - &x.pow(u)?)) * &(&one - &x.pow(v)?);
            Ok(f.scale(&Cyc::from_rat(&b.field, lam.clone())))
        }
    }
}

/// Fills every multi-index `1 ≤ |n| ≤ bound` from the seeds: mixed indices (and
/// pure ones in [`PureMode::Recurrence`]) by
/// `α_n (1 − Z Σ_o X^{on}) = −Z [w^n] Π_o (1 − Σ_{g≠n} α_g X^{og} w^g)`.
pub fn alpha_table(
    b: &Branches,
    bound: usize,
    seeds: &[Seed],
    mode: PureMode,
) -> Result<MultiAlphaTable> {
    let fam = b.family;
    let c = fam.c();
    if seeds.len() != c {
        return Err(crate::error::Error::Invalid(format!(
            "{c} seeds required, got {}",
            seeds.len()
        )));
    }
    let offs = fam.offsets();
    let closed = one_param_alpha_closed(&fam, bound)?;
    let mut pw = Powers::new(b);
    let mut entries: BTreeMap<Vec<u32>, CycSeries> = BTreeMap::new();
    let p = b.zbig.prec();
    let zero = CycSeries::zero(&b.field, p);
    // terms[k][g] = α_g X^{o_k g}; partial[k][m] = [w^m] Π_{i≤k} (1 − Σ_g terms[i][g] w^g).
    let mut terms: Vec<BTreeMap<Vec<u32>, CycSeries>> = vec![BTreeMap::new(); offs.len()];
    let mut partial: Vec<BTreeMap<Vec<u32>, CycSeries>> = vec![BTreeMap::new(); offs.len()];
    for n in multi_indices(c, bound) {
        let size: u32 = n.iter().sum();
        let support: Vec<usize> = (0..c).filter(|&l| n[l] > 0).collect();
        // [w^n] of the partial products with α_n itself still zero
        let proper: Vec<Vec<u32>> = entries
            .keys()
            .filter(|g| g.iter().zip(&n).all(|(a, b)| a <= b) && **g != n)
            .cloned()
            .collect();
        for k in 0..offs.len() {
            let mut acc = zero.clone();
            if k > 0 {
                acc = partial[k - 1][&n].clone();
                for g in &proper {
                    let m: Vec<u32> = n.iter().zip(g).map(|(x, y)| x - y).collect();
                    acc = &acc - &(&partial[k - 1][&m] * &terms[k][g]);
                }
            }
            partial[k].insert(n.clone(), acc);
        }
        let powers: Vec<CycSeries> = offs
            .iter()
            .map(|&o| pw.multi(o, &n))
            .collect::<Result<_>>()?;
        let alpha = if size == 1 {
            let l = support[0];
            seed_value(b, l, &seeds[l])?
        } else if support.len() == 1 && mode == PureMode::Closed {
            let l = support[0];
            let k = n[l] as usize;
            let mut e = n.clone();
            e[l] = 1;
            &eval_uni(closed[k - 1].num(), &b.x[l]).div(&eval_uni(closed[k - 1].den(), &b.x[l]))?
                * &entries[&e].pow(k as i64)?
        } else {
            let q = &partial[offs.len() - 1][&n];
            let s = powers.iter().fold(zero.clone(), |a, x| &a + x);
            let den = &CycSeries::constant(&b.field, Cyc::one(&b.field), p) - &(&b.zbig * &s);
            (-&(&b.zbig * q)).div(&den)?
        };
        let mut lin = zero.clone();
        for (k, x) in powers.iter().enumerate() {
            let t = &alpha * x;
            lin = &lin + &t;
            let slot = partial[k].get_mut(&n).expect("inserted above");
            *slot = &*slot - &lin;
            terms[k].insert(n.clone(), t);
        }
        entries.insert(n, alpha);
    }
    Ok(MultiAlphaTable {
        family: fam,
        bound,
        mode,
        entries,
    })
}

/// Builds branches at `s`-precision `c·order + margin` and fills the table.
pub fn dary_alpha_general(
    fam: &DaryFamily,
    bound: usize,
    seeds: &[Seed],
    mode: PureMode,
    order: usize,
) -> Result<MultiAlphaTable> {
    let b = small_branches(fam, fam.c() * order + margin(fam, bound))?;
    alpha_table(&b, bound, seeds, mode)
}

fn margin(fam: &DaryFamily, bound: usize) -> usize {
    2 * fam.max_offset() * bound + 4
}

/// `Σ_{|n|=k} α_n X^{shift·n}` for `k = 0..=bound`.
fn graded_rho(t: &MultiAlphaTable, pw: &mut Powers, shift: i64) -> Result<Vec<CycSeries>> {
    let f = pw.b.field.clone();
    let p = pw.b.zbig.prec();
    let mut out = vec![CycSeries::zero(&f, p); t.bound + 1];
    for (n, a) in &t.entries {
        let k = n.iter().sum::<u32>() as usize;
        let term = if shift == 0 {
            a.clone()
        } else {
            a * &pw.multi(shift, n)?
        };
        out[k] = &out[k] + &term;
    }
    Ok(out)
}

/// Residual of `ρ_j = Z(1 − Π_o(1 − ρ_{j+o}))`, graded by `|n|`, for each `k ≤ bound`.
fn main_equation_residual(b: &Branches, t: &MultiAlphaTable, j: i64) -> Result<Vec<CycSeries>> {
    let mut pw = Powers::new(b);
    let p = b.zbig.prec();
    let one = CycSeries::constant(&b.field, Cyc::one(&b.field), p);
    let mut prod = vec![CycSeries::zero(&b.field, p); t.bound + 1];
    prod[0] = one.clone();
    for o in b.family.offsets() {
        let r = graded_rho(t, &mut pw, j + o)?;
        let mut next = prod.clone();
        for i in 0..=t.bound {
            for k in 1..=t.bound - i {
                next[i + k] = &next[i + k] - &(&prod[i] * &r[k]);
            }
        }
        prod = next;
    }
    let rho = graded_rho(t, &mut pw, j)?;
    Ok((1..=t.bound)
        .map(|k| &rho[k] + &(&b.zbig * &prod[k]))
        .collect())
}

/// Outcome of the multi-branch verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropReport {
    pub family: DaryFamily,
    pub bound: usize,
    pub order: usize,
    /// Branch elementary symmetric functions equal the Hensel small factor's.
    pub branches_match: bool,
    /// Pure-direction closed forms equal the recurrence values on every branch.
    pub closed_pure_ok: bool,
    /// Every graded residual of the main equation vanishes.
    pub residual_zero: bool,
    /// Smallest `s`-precision among the checked series (target `c·order`).
    pub precision: i64,
    /// First failing `(j, |n|)`, if any.
    pub first_failure: Option<(i64, usize)>,
}

impl PropReport {
    pub fn holds(&self) -> bool {
        self.branches_match
            && self.closed_pure_ok
            && self.residual_zero
            && self.precision >= (self.family.c() * self.order) as i64
    }
}

/// Builds `ρ_j` from seeded branches (closed pure directions, recurrence for
/// mixed indices) and checks the main equation modulo `z^order` for
/// multi-degrees up to `bound` and several `j`.
pub fn verify_prop_main_equation(
    fam: &DaryFamily,
    bound: usize,
    order: usize,
) -> Result<PropReport> {
    let c = fam.c();
    let target = (c * order) as i64;
    let seeds: Vec<Seed> = (0..c).map(|l| Seed::Lemma(rat(l as i64 + 1))).collect();
    let mut extra = margin(fam, bound);
    let sf = dary_char_factor(fam, order + 1)?;
    let mut report = None;
    for _ in 0..4 {
        let b = small_branches(fam, c * order + extra)?;
        let closed = alpha_table(&b, bound, &seeds, PureMode::Closed)?;
        let rec = alpha_table(&b, bound, &seeds, PureMode::Recurrence)?;
        let mut precision = i64::MAX;
        let mut closed_pure_ok = true;
        for (n, a) in &closed.entries {
            let diff = a - &rec.entries[n];
            precision = precision.min(diff.prec());
            closed_pure_ok &= diff.is_zero();
        }
        let mut residual_zero = true;
        let mut first_failure = None;
        for j in [0, 1, 3] {
            for (k, r) in main_equation_residual(&b, &closed, j)?
                .into_iter()
                .enumerate()
            {
                precision = precision.min(r.prec());
                if !r.is_zero() && first_failure.is_none() {
                    residual_zero = false;
                    first_failure = Some((j, k + 1));
                }
            }
        }
        let r = PropReport {
            family: *fam,
            bound,
            order,
            branches_match: b.matches_small_factor(&sf)?,
            closed_pure_ok,
            residual_zero,
            precision,
            first_failure,
        };
        let done = precision >= target;
        report = Some(r);
        if done {
            break;
        }
        extra *= 2;
    }
    Ok(report.expect("at least one attempt"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indices() {
        let m = multi_indices(2, 2);
        assert_eq!(
            m,
            vec![vec![0, 1], vec![1, 0], vec![0, 2], vec![1, 1], vec![2, 0]]
        );
    }

    #[test]
    fn branches_solve_the_characteristic_equation() {
        for f in [DaryFamily::odd(2), DaryFamily::even(2)] {
            let b = small_branches(&f, 20).unwrap();
            for x in &b.x {
                let mut s = CycSeries::zero(&b.field, 100);
                for o in f.offsets() {
                    s = &s + &x.pow(o).unwrap();
                }
                let r = &(&b.zbig * &s) - &CycSeries::constant(&b.field, Cyc::one(&b.field), 100);
                assert!(r.is_zero(), "{f}");
                assert!(r.prec() >= 10);
            }
        }
    }

    #[test]
    fn branches_match_hensel_factor() {
        for f in [DaryFamily::odd(1), DaryFamily::odd(2), DaryFamily::even(2)] {
            let b = small_branches(&f, 24).unwrap();
            let sf = dary_char_factor(&f, 8).unwrap();
            assert!(b.matches_small_factor(&sf).unwrap(), "{f}");
        }
    }

    #[test]
    fn single_branch_reduces_to_one_param() {
        let f = DaryFamily::odd(1);
        let b = small_branches(&f, 30).unwrap();
        let t = alpha_table(&b, 5, &[Seed::Value(Series::one(30))], PureMode::Recurrence).unwrap();
        let closed = one_param_alpha_closed(&f, 5).unwrap();
        for k in 1..=5usize {
            let v = eval_uni(closed[k - 1].num(), &b.x[0])
                .div(&eval_uni(closed[k - 1].den(), &b.x[0]))
                .unwrap();
            let d = &v - t.get(&[k as u32]).unwrap();
            assert!(d.is_zero(), "k={k}");
            assert!(d.prec() >= 15);
        }
    }

    #[test]
    fn seeds_are_kept() {
        let f = DaryFamily::odd(2);
        let s = Series::from_ints(&[2, 1, 0, 5]);
        let t = dary_alpha_general(
            &f,
            2,
            &[Seed::Value(s.clone()), Seed::Lemma(rat(3))],
            PureMode::Closed,
            5,
        )
        .unwrap();
        let b = small_branches(&f, 5).unwrap();
        let e = z_series_in_s(&f, &b.field, &s).unwrap();
        assert!((&e - t.get(&[1, 0]).unwrap()).is_zero());
    }

    #[test]
    fn prop_single_branch() {
        for f in [DaryFamily::odd(1), DaryFamily::even(1)] {
            let r = verify_prop_main_equation(&f, 4, 12).unwrap();
            assert!(r.holds(), "{r:?}");
        }
    }

    #[test]
    fn tampered_coefficient_breaks_the_residual() {
        let f = DaryFamily::odd(2);
        let b = small_branches(&f, 40).unwrap();
        let seeds = [Seed::Lemma(rat(1)), Seed::Lemma(rat(2))];
        let mut t = alpha_table(&b, 2, &seeds, PureMode::Closed).unwrap();
        assert!(main_equation_residual(&b, &t, 1)
            .unwrap()
            .iter()
            .all(CycSeries::is_zero));
        let key = vec![1, 1];
        let bumped = &t.entries[&key] + &t.entries[&vec![0, 2]];
        t.entries.insert(key, bumped);
        assert!(!main_equation_residual(&b, &t, 1).unwrap()[1].is_zero());
    }

    #[test]
    fn prop_two_branches() {
        let r = verify_prop_main_equation(&DaryFamily::odd(2), 2, 8).unwrap();
        assert!(r.holds(), "{r:?}");
    }
}
