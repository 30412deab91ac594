use std::fmt;
use std::str::FromStr;

use super::oeis::{fixtures, named_weight_vectors, oeis_match_in};
use super::report::Status;
use crate::arith::{rat, ratio, Rat, RationalFunction, Series, UniPoly};
use crate::binary::{
    adapt_lambda, beta_lemma1, beta_recurrence, beta_w3_only, binary_T, binary_T_of_X,
    binary_Tj_closed, binary_Tj_residual, binary_Tj_table, binary_X, binary_alpha,
    binary_char_residual, binary_oracle_table, conjecture_check, conjecture_p, corollary_binary,
    corollary_planar, height_oracle, height_plane_trees, ternary_alpha, ternary_residual,
    AlphaMode, BinaryWeights, Boundary,
};
use crate::dary::{
    dary_Tj_table, dary_alpha_one_param, dary_char_factor, dary_oracle_table, verify_one_param,
    verify_prop_main_equation, DaryFamily, OneParamSolution,
};
use crate::error::{Error, Result};
use crate::kernel::{characteristic_poly, fuss_catalan, newton_solve, small_factor, tree_equation};
use crate::paths::{excursion_gf, meander_mismatch, StepSet};
use crate::walkers::{
    lockstep_adapt, lockstep_refined, quarterplane_dp, quarterplane_gf, quarterplane_mismatch,
    randomturn_gf, randomturn_origin_radical, walker_closed, walker_dp, walker_mismatch,
    QuarterPlaneModel, Steps, WalkerBoundary, WalkerModel, WalkerX,
};

/// Groups of checks selectable on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Kernel,
    Binary,
    Conjecture,
    Dary,
    Paths,
    Walkers,
    Oeis,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Kernel,
        Suite::Binary,
        Suite::Conjecture,
        Suite::Dary,
        Suite::Paths,
        Suite::Walkers,
        Suite::Oeis,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Kernel => "kernel",
            Suite::Binary => "binary",
            Suite::Conjecture => "conjecture",
            Suite::Dary => "dary",
            Suite::Paths => "paths",
            Suite::Walkers => "walkers",
            Suite::Oeis => "oeis",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Run-time parameters shared by all checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Ctx {
    /// Replaces every check's default truncation order.
    pub order: Option<usize>,
}

impl Ctx {
    pub fn order(&self, default: usize) -> usize {
        self.order.unwrap_or(default)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub detail: String,
}

impl Outcome {
    fn check(ok: bool, detail: impl Into<String>) -> Self {
        Outcome {
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }
}

/// A registered check.
#[derive(Clone, Copy)]
pub struct CheckDef {
    pub id: &'static str,
    pub suite: Suite,
    pub claim: &'static str,
    pub run: fn(&Ctx) -> Result<Outcome>,
}

impl fmt::Debug for CheckDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.id, self.suite)
    }
}

/// Acceptance criteria in order: check id and time budget in seconds.
pub const ACCEPTANCE: [(&str, u64); 12] = [
    ("kernel.fuss-catalan", 10),
    ("binary.corollaries", 5),
    ("binary.oracle", 60),
    ("binary.alpha-closed-forms", 10),
    ("conjecture.alpha", 30),
    ("binary.height", 10),
    ("dary.one-param", 30),
    ("dary.main-equation", 60),
    ("paths.meanders", 60),
    ("walkers.lock-step", 120),
    ("walkers.random-turn-quarter-plane", 60),
    ("oeis.fixtures", 10),
];

/// Every check, sorted by id.
pub fn registry() -> Vec<CheckDef> {
    let mut v = vec![
        CheckDef {
            id: "kernel.fuss-catalan",
            suite: Suite::Kernel,
            claim: "Newton solution of T = 1 + zT^d has Fuss-Catalan coefficients",
            run: fuss_catalan_check,
        },
        CheckDef {
            id: "kernel.small-factor",
            suite: Suite::Kernel,
            claim: "small factor times cofactor is the characteristic polynomial; e_k vanish at 0",
            run: small_factor_check,
        },
        CheckDef {
            id: "binary.residuals",
            suite: Suite::Binary,
            claim: "T and X solve their equations; T expressed through X reproduces T",
            run: binary_residuals_check,
        },
        CheckDef {
            id: "binary.one-param",
            suite: Suite::Binary,
            claim: "the one-parameter family solves the bounded-label recurrence for symbolic lambda",
            run: one_param_check_binary,
        },
        CheckDef {
            id: "binary.corollaries",
            suite: Suite::Binary,
            claim: "adapted one-parameter solution equals the binary and planar product forms",
            run: corollaries_check,
        },
        CheckDef {
            id: "binary.oracle",
            suite: Suite::Binary,
            claim: "bounded-label recurrence table equals exhaustive tree enumeration",
            run: binary_oracle_check,
        },
        CheckDef {
            id: "binary.alpha-closed-forms",
            suite: Suite::Binary,
            claim: "closed alpha coefficients (w2 = w3 domain, w3-only case) equal the alpha recurrence",
            run: alpha_closed_check,
        },
        CheckDef {
            id: "binary.alpha-exact",
            suite: Suite::Binary,
            claim: "closed alpha coefficients equal the alpha recurrence as rational functions of X",
            run: alpha_exact_check,
        },
        CheckDef {
            id: "binary.ternary",
            suite: Suite::Binary,
            claim: "ternary alpha coefficients solve the full recurrence",
            run: ternary_check,
        },
        CheckDef {
            id: "binary.height",
            suite: Suite::Binary,
            claim: "T(1 - X^{j+1})/(1 - X^{j+2}) counts plane trees of bounded height",
            run: height_check,
        },
        CheckDef {
            id: "binary.limit",
            suite: Suite::Binary,
            claim: "[z^n]T_j stabilizes to [z^n]T once j >= n",
            run: binary_limit_check,
        },
        CheckDef {
            id: "conjecture.alpha",
            suite: Suite::Conjecture,
            claim: "conjectured p_n closed form for alpha_n at w = (v1, v2, 1, 0, 1)",
            run: conjecture_run,
        },
        CheckDef {
            id: "dary.oracle",
            suite: Suite::Dary,
            claim: "d-ary bounded-label table equals exhaustive enumeration",
            run: dary_oracle_check,
        },
        CheckDef {
            id: "dary.one-param",
            suite: Suite::Dary,
            claim: "one-parameter solution is an exact identity in Q(X, lambda, Y)",
            run: one_param_check,
        },
        CheckDef {
            id: "dary.one-param-alpha",
            suite: Suite::Dary,
            claim: "closed one-branch alpha coefficients equal the single-branch recurrence",
            run: one_param_alpha_check,
        },
        CheckDef {
            id: "dary.char-factor",
            suite: Suite::Dary,
            claim: "small-factor elementary symmetric functions have positive valuation",
            run: dary_char_factor_check,
        },
        CheckDef {
            id: "dary.main-equation",
            suite: Suite::Dary,
            claim: "multi-branch alpha expansion solves the main equation",
            run: main_equation_check,
        },
        CheckDef {
            id: "paths.meanders",
            suite: Suite::Paths,
            claim: "meander closed form equals the DP; excursions give Catalan and Motzkin numbers",
            run: meanders_check,
        },
        CheckDef {
            id: "walkers.lock-step",
            suite: Suite::Walkers,
            claim: "lock-step closed forms (vicious, osculating, up-down, refined) equal the three-walker DP",
            run: lock_step_check,
        },
        CheckDef {
            id: "walkers.random-turn-quarter-plane",
            suite: Suite::Walkers,
            claim: "random-turn and quarter-plane closed forms equal their DPs",
            run: random_turn_check,
        },
        CheckDef {
            id: "walkers.x-residuals",
            suite: Suite::Walkers,
            claim: "every walker X solves its quadratic",
            run: walker_x_check,
        },
        CheckDef {
            id: "oeis.fixtures",
            suite: Suite::Oeis,
            claim: "named weight vectors reproduce the bundled sequences",
            run: oeis_check,
        },
    ];
    v.sort_by_key(|c| c.id);
    v
}

fn fuss_catalan_check(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(201);
    for d in 2..=5usize {
        let t = newton_solve(&tree_equation(d, n), &rat(1))?;
        if let Some(k) = (0..n).find(|&k| t.coeffs()[k] != fuss_catalan(k as u64, d as u64)) {
            return Ok(Outcome::check(false, format!("d={d}: mismatch at n={k}")));
        }
    }
    Ok(Outcome::check(true, format!("d=2..5, n<{n}")))
}

fn small_factor_check(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(20);
    for s in ["-1:1,1:1", "-2:1,-1:2,1:1,3:1", "-3:1,0:1/2,2:1"] {
        let steps = StepSet::parse(s)?;
        let z = Series::z(n);
        let f = characteristic_poly(&steps, &z);
        let (a, b) = small_factor(&f, steps.c())?;
        let (_, rem) = f.divrem_monic(&a.as_poly());
        let ok = a.as_poly().mul(&b).sub(&f).is_zero()
            && rem.is_zero()
            && a.elementary
                .iter()
                .all(|e| e.valuation().map_or(true, |v| v >= 1));
        if !ok {
            return Ok(Outcome::check(false, format!("steps {s}")));
        }
    }
    Ok(Outcome::check(true, format!("3 step sets, order {n}")))
}

fn binary_residuals_check(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(40);
    for v in [
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 1],
        [1, 1, 1, 1, 1],
        [1, 0, 0, 0, 1],
    ] {
        let w = BinaryWeights::ints(v);
        let t = binary_T(&w, n);
        let x = binary_X(&w, n)?;
        let t_res = &(&t - &Series::one(n))
            - &(&Series::z(n) * &(&t.scale(&w.unary()) + &(&t * &t).scale(&w.binary())));
        if !t_res.is_zero()
            || !binary_char_residual(&w, &t, &x).is_zero()
            || binary_T_of_X(&w, &x)? != t
        {
            return Ok(Outcome::check(false, format!("weights {v:?}, order {n}")));
        }
    }
    Ok(Outcome::check(true, format!("4 weight vectors, order {n}")))
}

fn one_param_check_binary(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(20);
    for v in [[0, 0, 1, 0, 0], [0, 0, 0, 1, 1], [1, 2, 1, 1, 1]] {
        let w = BinaryWeights::ints(v);
        for j in -1..=6i64 {
            if !binary_Tj_residual(&w, j, n, 8)?.is_zero() {
                return Ok(Outcome::check(
                    false,
                    format!("weights {v:?}, j={j}, order {n}, lambda-degree 8"),
                ));
            }
        }
    }
    Ok(Outcome::check(
        true,
        format!("3 weight vectors, j=-1..6, order {n}, lambda-degree 8"),
    ))
}

fn corollaries_check(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(40);
    type Product = fn(i64, usize) -> Result<Series>;
    let cases: [(BinaryWeights, Boundary, Product, &str); 2] = [
        (
            BinaryWeights::ints([0, 0, 1, 0, 0]),
            Boundary::One,
            corollary_binary,
            "binary",
        ),
        (
            BinaryWeights::ints([0, 0, 0, 1, 1]),
            Boundary::Zero,
            corollary_planar,
            "planar",
        ),
    ];
    for (w, b, product, name) in cases {
        // λ carries negative powers of X, so it needs a few extra terms
        let lam = adapt_lambda(&w, b, n + 4)?;
        let table = binary_Tj_table(&w, b, 6, n);
        for j in -1..=6i64 {
            let closed = binary_Tj_closed(&w, &lam, j, n)?;
            let p = product(j, n)?;
            if closed != p || table[(j + 1) as usize] != p {
                return Ok(Outcome::check(false, format!("{name}, j={j}, order {n}")));
            }
        }
    }
    Ok(Outcome::check(
        true,
        format!("binary and planar, j=-1..6, order {n}"),
    ))
}

fn binary_oracle_check(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(9).min(9) - 1;
    for v in [
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 1],
        [0, 0, 0, 0, 1],
        [1, 0, 1, 0, 0],
    ] {
        let w = BinaryWeights::ints(v);
        for b in [Boundary::One, Boundary::Zero] {
            let oracle = binary_oracle_table(&w, b, 5, n)?;
            let table = binary_Tj_table(&w, b, 4, n + 1);
            for (r, row) in table.iter().enumerate() {
                if row.coeffs() != &oracle[r][..] {
                    return Ok(Outcome::check(
                        false,
                        format!("weights {v:?}, boundary {b:?}, j={}, n<={n}", r as i64 - 1),
                    ));
                }
            }
        }
    }
    Ok(Outcome::check(
        true,
        format!("4 weight vectors, both boundaries, j=-1..4, n<={n}"),
    ))
}

fn alpha_closed_check(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(30);
    let m = 12;
    let mut checked = 0;
    for (v, mode) in [
        (["0", "0", "0", "1", "1"], AlphaMode::Lemma1),
        (["1", "1", "1", "1", "1"], AlphaMode::Lemma1),
        (["1/2", "2", "1", "1/3", "1/3"], AlphaMode::Lemma1),
        (["0", "0", "0", "0", "1"], AlphaMode::W3Only),
        (["1", "2", "0", "0", "1/2"], AlphaMode::W3Only),
    ] {
        let w: BinaryWeights = v.join(",").parse()?;
        let rec = binary_alpha(&w, AlphaMode::Recurrence, m, n)?;
        let closed = binary_alpha(&w, mode, m, n)?;
        if let Some(k) = (1..=m).find(|&k| rec.get(k) != closed.get(k)) {
            return Ok(Outcome::check(
                false,
                format!("weights {v:?} {mode:?}: alpha_{k} differs at order {n}"),
            ));
        }
        checked += 1;
    }
    Ok(Outcome::check(
        true,
        format!("{checked} weight vectors, n<={m}, order {n}"),
    ))
}

fn alpha_exact_check(ctx: &Ctx) -> Result<Outcome> {
    let m = ctx.order(8).min(8);
    for (v, mode) in [
        ("0,0,0,1,1", AlphaMode::Lemma1),
        ("1/2,2,1,1/3,1/3", AlphaMode::Lemma1),
        ("1,2,0,0,1/2", AlphaMode::W3Only),
    ] {
        let w: BinaryWeights = v.parse()?;
        let exact = match mode {
            AlphaMode::Lemma1 => beta_lemma1(&w, m)?,
            _ => beta_w3_only(&w, m)?,
        };
        if beta_recurrence(&w, m)? != exact {
            return Ok(Outcome::check(
                false,
                format!("weights {v} {mode:?}, n<={m}"),
            ));
        }
    }
    Ok(Outcome::check(
        true,
        format!("3 weight vectors, n<={m}, rational functions of X"),
    ))
}

fn ternary_check(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(20);
    for (v1, v2) in [(rat(0), rat(0)), (rat(1), ratio(1, 2))] {
        let a = ternary_alpha(&v1, &v2, 6, n)?;
        if !ternary_residual(&v1, &v2, &a.values, n)?.is_zero() {
            return Ok(Outcome::check(false, format!("v=({v1},{v2}), order {n}")));
        }
    }
    Ok(Outcome::check(
        true,
        format!("2 weight pairs, n<=6, order {n}"),
    ))
}

fn height_check(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(9).min(9) - 1;
    for j in 0..=5usize {
        let closed = height_plane_trees(j, n + 1);
        if closed.coeffs() != &height_oracle(j, n)?[..] {
            return Ok(Outcome::check(false, format!("j={j}, n<={n}")));
        }
    }
    Ok(Outcome::check(true, format!("j=0..5, n<={n}")))
}

fn binary_limit_check(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(12);
    let w = BinaryWeights::ints([1, 1, 1, 1, 1]);
    let t = binary_T(&w, n);
    let table = binary_Tj_table(&w, Boundary::One, n, n);
    for k in 0..n {
        if table[k + 1].coeffs()[k] != t.coeffs()[k] {
            return Ok(Outcome::check(false, format!("n={k}, j={k}")));
        }
    }
    Ok(Outcome::check(true, format!("unit weights, n<{n}")))
}

fn conjecture_run(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(40);
    let m = 10;
    let p = conjecture_p(3);
    let initial = p[0] == UniPoly::one()
        && p[1] == UniPoly::one()
        && p[2] == UniPoly::from_ints(&[1, 2, 0, 2, 1]);
    if !initial {
        return Ok(Outcome::check(false, "initial polynomials p_1..p_3"));
    }
    for (v1, v2) in [(rat(0), rat(0)), (rat(1), rat(1)), (ratio(1, 2), rat(3))] {
        let r = conjecture_check(&v1, &v2, m, n)?;
        if let Some((k, _)) = r.agreement.iter().find(|a| !a.1) {
            return Ok(Outcome::check(
                false,
                format!("v=({v1},{v2}): alpha_{k} differs at order {n}"),
            ));
        }
    }
    Ok(Outcome {
        status: Status::ConjectureConsistent,
        detail: format!("p_1..p_3 as given; 3 weight pairs, n<={m}, order {n}"),
    })
}

fn dary_oracle_check(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(8).min(8) - 1;
    for f in [
        DaryFamily::odd(1),
        DaryFamily::odd(2),
        DaryFamily::even(1),
        DaryFamily::even(2),
    ] {
        let oracle = dary_oracle_table(&f, 3, n)?;
        let table = dary_Tj_table(&f, 3, n + 1);
        for (r, row) in table.iter().enumerate() {
            if row.coeffs() != &oracle[r][..] {
                return Ok(Outcome::check(
                    false,
                    format!("{f}, j={}, n<={n}", r as i64 - f.c() as i64),
                ));
            }
        }
    }
    Ok(Outcome::check(
        true,
        format!("odd/even d=1,2, j<=3, n<={n}"),
    ))
}

fn one_param_check(_: &Ctx) -> Result<Outcome> {
    let fams = [
        DaryFamily::odd(1),
        DaryFamily::odd(2),
        DaryFamily::even(1),
        DaryFamily::even(2),
        DaryFamily::even(3),
    ];
    for f in fams {
        if !verify_one_param(&f)? {
            return Ok(Outcome::check(false, format!("{f}")));
        }
    }
    // even d = 1 at lambda = 1 is the binary product form
    let s = OneParamSolution::new(&DaryFamily::even(1), Some(rat(1)));
    let v = s.vars();
    let f = |e: i64| {
        &RationalFunction::constant(v, rat(1)) - &RationalFunction::monomial(v, rat(1), &[e, 1])
    };
    let expect = (&f(2) * &f(7)).div(&(&f(4) * &f(5)))?;
    if !s.factor(0).rf_equal(&expect)? {
        return Ok(Outcome::check(
            false,
            "even:1 specialization differs from the binary product form",
        ));
    }
    Ok(Outcome::check(
        true,
        "odd d=1,2 and even d=1,2,3, exact; even:1 specialization",
    ))
}

fn one_param_alpha_check(ctx: &Ctx) -> Result<Outcome> {
    let m = ctx.order(10).min(10);
    for (f, cap) in [(DaryFamily::odd(1), m), (DaryFamily::even(2), m.min(7))] {
        let r = dary_alpha_one_param(&f, cap)?;
        if let Some(k) = r.first_mismatch() {
            return Ok(Outcome::check(false, format!("{f}: alpha_{k}")));
        }
    }
    Ok(Outcome::check(
        true,
        format!("odd:1 n<={m}, even:2 n<={}, exact", m.min(7)),
    ))
}

fn dary_char_factor_check(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(12);
    for f in [DaryFamily::odd(2), DaryFamily::even(2), DaryFamily::even(3)] {
        let a = dary_char_factor(&f, n)?;
        if a.c != f.c()
            || a.elementary
                .iter()
                .any(|e| e.valuation().is_some_and(|v| v == 0))
        {
            return Ok(Outcome::check(false, format!("{f}, order {n}")));
        }
    }
    Ok(Outcome::check(
        true,
        format!("odd:2, even:2, even:3, order {n}"),
    ))
}

fn main_equation_check(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(15);
    let mut parts = vec![];
    for f in [DaryFamily::odd(2), DaryFamily::even(2)] {
        let r = verify_prop_main_equation(&f, 3, n)?;
        if !r.holds() {
            return Ok(Outcome::check(false, format!("{r:?}")));
        }
        parts.push(format!("{f}: s-precision {}", r.precision));
    }
    Ok(Outcome::check(
        true,
        format!("multi-degree<=3, order {n}; {}", parts.join(", ")),
    ))
}

fn meanders_check(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(40);
    let sets = [
        "-1:1,1:1",
        "-1:1,0:1,1:1",
        "-1:2,0:1/2,1:3",
        "-2:1,1:1",
        "-1:1,2:1",
        "-3:1,-1:2,1:1,2:1/3",
        "-2:1/2,3:2",
        "-1:1,3:1",
    ];
    for s in sets {
        let steps = StepSet::parse(s)?;
        let order = if steps.c() + steps.d() > 3 {
            n.min(25)
        } else {
            n
        };
        if let Some((j, k)) = meander_mismatch(&steps, 5, order)? {
            return Ok(Outcome::check(
                false,
                format!("steps {s}: j={j}, n={k}, order {order}"),
            ));
        }
    }
    let dyck = excursion_gf(&StepSet::dyck(), 0, 13)?;
    let motz = excursion_gf(&StepSet::motzkin(), 0, 7)?;
    let ok = dyck == Series::from_ints(&[1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42, 0, 132])
        && motz == Series::from_ints(&[1, 1, 2, 4, 9, 21, 51]);
    Ok(Outcome::check(
        ok,
        format!(
            "{} step sets, j<=5, order {n} (25 when c+d>3); excursions",
            sets.len()
        ),
    ))
}

fn lock_step_check(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(21);
    for b in [
        WalkerBoundary::Vicious,
        WalkerBoundary::Osculating,
        WalkerBoundary::Updown,
    ] {
        lockstep_adapt(b, n)?;
        let m = WalkerModel::lock_step(b);
        if let Some((i, j, k)) = walker_mismatch(&m, 4, n)? {
            return Ok(Outcome::check(
                false,
                format!("{m}: (i,j)=({i},{j}), n={k}"),
            ));
        }
        for (u, w) in [(0, 0), (1, 0), (1, 1)].into_iter().filter(|c| {
            matches!(
                (c, b),
                ((0, 0), WalkerBoundary::Vicious)
                    | ((1, 0), WalkerBoundary::Osculating)
                    | ((1, 1), WalkerBoundary::Updown)
            )
        }) {
            for (i, j) in [(0, 1), (1, 0), (2, 3), (4, 4)] {
                if lockstep_refined(&rat(u), &rat(w), i, j, n)? != walker_closed(&m, i, j, n)? {
                    return Ok(Outcome::check(
                        false,
                        format!("refined corner (u,w)=({u},{w}) at ({i},{j})"),
                    ));
                }
            }
        }
    }
    for (u, w) in [(ratio(1, 2), ratio(1, 3)), (rat(2), ratio(3, 4))] {
        let m = WalkerModel::refined(u, w);
        if let Some((i, j, k)) = walker_mismatch(&m, 4, n)? {
            return Ok(Outcome::check(
                false,
                format!("{m}: (i,j)=({i},{j}), n={k}"),
            ));
        }
    }
    for m in WalkerModel::all() {
        for (i, j) in [(0, 3), (1, 2), (2, 4)] {
            if walker_dp(&m, i, j, n) != walker_dp(&m, j, i, n)
                || walker_closed(&m, i, j, n)?.series != walker_closed(&m, j, i, n)?.series
            {
                return Ok(Outcome::check(
                    false,
                    format!("{m}: asymmetric at ({i},{j})"),
                ));
            }
        }
    }
    Ok(Outcome::check(
        true,
        format!(
            "vicious, osculating, up-down, refined at 2 samples; i,j<=4, n<{n}; corners; symmetry"
        ),
    ))
}

fn random_turn_check(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(21);
    for m in WalkerModel::all()
        .into_iter()
        .filter(|m| m.steps == Steps::Motzkin || m.mode != crate::walkers::Mode::LockStep)
    {
        if let Some((i, j, k)) = walker_mismatch(&m, 4, n)? {
            return Ok(Outcome::check(
                false,
                format!("{m}: (i,j)=({i},{j}), n={k}"),
            ));
        }
    }
    for steps in [Steps::Dyck, Steps::Motzkin] {
        let o = randomturn_gf(steps, WalkerBoundary::Osculating, 0, 0, n)?.series;
        if o != randomturn_origin_radical(steps, n)? {
            return Ok(Outcome::check(
                false,
                format!("{steps:?} osculating (0,0) radical form"),
            ));
        }
    }
    for q in [QuarterPlaneModel::S1, QuarterPlaneModel::S2] {
        if let Some((i, j, k)) = quarterplane_mismatch(q, 4, n) {
            return Ok(Outcome::check(
                false,
                format!("{q:?}: (i,j)=({i},{j}), n={k}"),
            ));
        }
    }
    let motzkin: Vec<Rat> = [1, 1, 2, 4, 9, 21].map(rat).to_vec();
    if quarterplane_dp(QuarterPlaneModel::S1, 0, 0, 6) != motzkin {
        return Ok(Outcome::check(
            false,
            "S1 from the origin is not 1,1,2,4,9,21",
        ));
    }
    let osc = WalkerModel::random_turn(Steps::Dyck, WalkerBoundary::Osculating)?;
    for (i, j) in [(0, 0), (1, 3), (4, 2)] {
        let s1 = quarterplane_gf(QuarterPlaneModel::S1, i, j, n);
        let s2 = quarterplane_gf(QuarterPlaneModel::S2, i, j, n);
        if s2 != s1.dilate(&rat(2)) || s2 != walker_closed(&osc, i, j, n)?.series {
            return Ok(Outcome::check(
                false,
                format!("S2 equivalences at ({i},{j})"),
            ));
        }
    }
    Ok(Outcome::check(
        true,
        format!("random-turn Dyck/Motzkin, S1, S2; i,j<=4, n<{n}; radical forms; S2 = S1(2z) = osculating Dyck"),
    ))
}

fn walker_x_check(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(40);
    let xs = [
        WalkerX::lock_step(&rat(2), n),
        WalkerX::lock_step(&ratio(3, 5), n),
        WalkerX::random_turn(Steps::Dyck, n),
        WalkerX::random_turn(Steps::Motzkin, n),
        WalkerX::quarter_plane(QuarterPlaneModel::S1, n),
        WalkerX::quarter_plane(QuarterPlaneModel::S2, n),
    ];
    let ok = xs
        .iter()
        .all(|x| x.residual().is_zero() && x.series.coeffs()[0] == rat(0));
    Ok(Outcome::check(
        ok,
        format!("{} definitions, order {n}", xs.len()),
    ))
}

fn oeis_check(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.order(16).max(13);
    let fx = fixtures();
    for (id, w) in named_weight_vectors() {
        let got = oeis_match_in(&binary_T(&w, n), 12, &fx)?;
        if got != [id] {
            return Ok(Outcome::check(
                false,
                format!("{id}: matched {got:?} at order {n}"),
            ));
        }
    }
    Ok(Outcome::check(
        true,
        format!("7 sequences, {n} terms, offline"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_acceptance_is_registered() {
        let r = registry();
        let mut ids: Vec<_> = r.iter().map(|c| c.id).collect();
        ids.dedup();
        assert_eq!(ids.len(), r.len());
        for (id, _) in ACCEPTANCE {
            assert!(ids.contains(&id), "{id}");
        }
        for s in Suite::ALL {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
            assert!(r.iter().any(|c| c.suite == s));
        }
    }

    #[test]
    fn conjecture_is_never_pass() {
        let o = conjecture_run(&Ctx { order: Some(12) }).unwrap();
        assert_eq!(o.status, Status::ConjectureConsistent);
    }
}
