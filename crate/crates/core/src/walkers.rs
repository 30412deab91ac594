//! Three non-crossing walkers (lock-step and random-turn; vicious, osculating
//! and up-down; the `(u, w)`-refined lock-step model) and two quarter-plane
//! walk models, each with a closed form and a direct DP oracle.
//!
//! Gaps are measured bottom-up: `i` between walkers 1 and 2, `j` between
//! walkers 2 and 3. Lock-step gaps are in units of two levels.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::arith::{rat, Rat, Series};
use crate::error::{Error, Result};
use crate::kernel::{newton_solve, SeriesPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// All three walkers move at every time step.
    LockStep,
    /// Exactly one walker moves at every time step.
    RandomTurn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Steps {
    /// `±1`.
    Dyck,
    /// `±1` and `0`.
    Motzkin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WalkerBoundary {
    /// Walkers never meet.
    Vicious,
    /// Walkers may meet but never share an edge.
    Osculating,
    /// Walkers 1, 2 may share down steps and walkers 2, 3 up steps (lock-step only).
    Updown,
}

/// A three-walker model. `marks = Some((u, w))` selects the refined lock-step
/// model: weight `u` per pair in contact at every time (including time 0) and
/// `w` per shared edge, with up-down sharing rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkerModel {
    pub mode: Mode,
    pub steps: Steps,
    pub boundary: WalkerBoundary,
    pub marks: Option<(Rat, Rat)>,
}

impl WalkerModel {
    pub fn new(mode: Mode, steps: Steps, boundary: WalkerBoundary) -> Result<Self> {
        match (mode, steps, boundary) {
            (Mode::LockStep, Steps::Motzkin, _) => {
                Err(Error::Invalid("lock-step walkers use Dyck steps".into()))
            }
            (Mode::RandomTurn, _, WalkerBoundary::Updown) => Err(Error::Invalid(
                "up-down walkers are defined for lock-step only".into(),
            )),
            _ => Ok(WalkerModel {
                mode,
                steps,
                boundary,
                marks: None,
            }),
        }
    }

    pub fn lock_step(boundary: WalkerBoundary) -> Self {
        Self::new(Mode::LockStep, Steps::Dyck, boundary).expect("valid lock-step model")
    }

    pub fn random_turn(steps: Steps, boundary: WalkerBoundary) -> Result<Self> {
        Self::new(Mode::RandomTurn, steps, boundary)
    }

    pub fn refined(u: Rat, w: Rat) -> Self {
        WalkerModel {
            mode: Mode::LockStep,
            steps: Steps::Dyck,
            boundary: WalkerBoundary::Updown,
            marks: Some((u, w)),
        }
    }

    /// Contact and shared-edge weights of the lock-step DP.
    fn lock_step_marks(&self) -> (Rat, Rat) {
        match (&self.marks, self.boundary) {
            (Some((u, w)), _) => (u.clone(), w.clone()),
            (None, WalkerBoundary::Vicious) => (rat(0), rat(0)),
            (None, WalkerBoundary::Osculating) => (rat(1), rat(0)),
            (None, WalkerBoundary::Updown) => (rat(1), rat(1)),
        }
    }

    /// Every implemented model (refined models excluded).
    pub fn all() -> Vec<WalkerModel> {
        use WalkerBoundary::*;
        vec![
            Self::lock_step(Vicious),
            Self::lock_step(Osculating),
            Self::lock_step(Updown),
            Self::new(Mode::RandomTurn, Steps::Dyck, Vicious).unwrap(),
            Self::new(Mode::RandomTurn, Steps::Dyck, Osculating).unwrap(),
            Self::new(Mode::RandomTurn, Steps::Motzkin, Vicious).unwrap(),
            Self::new(Mode::RandomTurn, Steps::Motzkin, Osculating).unwrap(),
        ]
    }

    /// Whether the closed form is claimed at `(i, j)`. The boundary equations
    /// only involve stars with a single zero gap, so `(0, 0)` is determined for
    /// neither the lock-step osculating model (where no move is possible) nor
    /// the refined model (whose formula gives `(u + u²)/2` at length 0).
    pub fn closed_form_domain(&self, i: usize, j: usize) -> bool {
        let origin_free = self.marks.is_some() || self.boundary == WalkerBoundary::Osculating;
        !(self.mode == Mode::LockStep && origin_free && i == 0 && j == 0)
    }
}

impl fmt::Display for WalkerModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, s) = (self.mode, self.steps);
        match &self.marks {
            Some((u, w)) => write!(f, "{m}-{s}-refined(u={u},w={w})"),
            None => write!(f, "{m}-{s}-{}", self.boundary),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::LockStep => "lockstep",
            Mode::RandomTurn => "randomturn",
        })
    }
}

impl fmt::Display for Steps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Steps::Dyck => "dyck",
            Steps::Motzkin => "motzkin",
        })
    }
}

impl fmt::Display for WalkerBoundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WalkerBoundary::Vicious => "vicious",
            WalkerBoundary::Osculating => "osculating",
            WalkerBoundary::Updown => "updown",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace(['-', '_'], "").as_str() {
            "lockstep" => Ok(Mode::LockStep),
            "randomturn" => Ok(Mode::RandomTurn),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

impl FromStr for Steps {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dyck" => Ok(Steps::Dyck),
            "motzkin" => Ok(Steps::Motzkin),
            _ => Err(Error::Parse(format!("unknown steps {s:?}"))),
        }
    }
}

impl FromStr for WalkerBoundary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace(['-', '_'], "").as_str() {
            "vicious" => Ok(WalkerBoundary::Vicious),
            "osculating" => Ok(WalkerBoundary::Osculating),
            "updown" => Ok(WalkerBoundary::Updown),
            _ => Err(Error::Parse(format!("unknown boundary {s:?}"))),
        }
    }
}

/// Length generating function of `(i, j)`-stars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarGF {
    pub i: usize,
    pub j: usize,
    pub series: Series,
}

/// The two quarter-plane step sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuarterPlaneModel {
    /// `{(−1,0), (0,1), (1,−1)}`.
    S1,
    /// `{(−1,0), (0,1), (1,0), (0,−1), (−1,1), (1,−1)}`.
    S2,
}

impl QuarterPlaneModel {
    pub fn steps(&self) -> &'static [(i64, i64)] {
        match self {
            QuarterPlaneModel::S1 => &[(-1, 0), (0, 1), (1, -1)],
            QuarterPlaneModel::S2 => &[(-1, 0), (0, 1), (1, 0), (0, -1), (-1, 1), (1, -1)],
        }
    }
}

impl FromStr for QuarterPlaneModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s1" => Ok(QuarterPlaneModel::S1),
            "s2" => Ok(QuarterPlaneModel::S2),
            _ => Err(Error::Parse(format!("unknown quarter-plane model {s:?}"))),
        }
    }
}

/// The small root of `X = z(a + bX + cX²)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkerX {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub series: Series,
}

impl WalkerX {
    pub fn new(a: Rat, b: Rat, c: Rat, order: usize) -> Self {
        let z = Series::z(order);
        let eq = SeriesPoly::new(vec![
            z.scale(&a),
            &z.scale(&b) - &Series::one(order),
            z.scale(&c),
        ]);
        let series = newton_solve(&eq, &Rat::zero()).expect("simple root at the origin");
        WalkerX { a, b, c, series }
    }

    /// Lock-step: `X = z(2 + (2+w)X + 2X²)`.
    pub fn lock_step(w: &Rat, order: usize) -> Self {
        Self::new(rat(2), w + rat(2), rat(2), order)
    }

    /// Random-turn Dyck `X = 2z(1+X+X²)` or Motzkin `X = z(2+5X+2X²)`.
    pub fn random_turn(steps: Steps, order: usize) -> Self {
        match steps {
            Steps::Dyck => Self::new(rat(2), rat(2), rat(2), order),
            Steps::Motzkin => Self::new(rat(2), rat(5), rat(2), order),
        }
    }

    /// `X₁ = z(1+X₁+X₁²)` or `X₂ = 2z(1+X₂+X₂²)`.
    pub fn quarter_plane(m: QuarterPlaneModel, order: usize) -> Self {
        match m {
            QuarterPlaneModel::S1 => Self::new(rat(1), rat(1), rat(1), order),
            QuarterPlaneModel::S2 => Self::new(rat(2), rat(2), rat(2), order),
        }
    }

    /// `X − z(a + bX + cX²)`.
    pub fn residual(&self) -> Series {
        let n = self.series.order();
        let x = &self.series;
        let rhs =
            &(&Series::constant(self.a.clone(), n) + &x.scale(&self.b)) + &(x * x).scale(&self.c);
        x - &(&Series::z(n) * &rhs)
    }
}

/// `T = 1/(1 − z(w+6))`.
fn lock_step_total(w: &Rat, order: usize) -> Series {
    Series::geometric(w + rat(6), order)
}

/// `T(1 − αX^i − βX^j − γX^{i+j})` with `T = 1/(1 − z(w+6))`: for any `α, β, γ`
/// a solution of the interior lock-step recurrence with diagonal weight `w`.
pub fn lockstep_general(
    w: &Rat,
    i: usize,
    j: usize,
    coeffs: &(Series, Series, Series),
    order: usize,
) -> StarGF {
    let x = WalkerX::lock_step(w, order).series;
    let (a, b, g) = coeffs;
    let xi = x.pow(i as i64).expect("non-negative power");
    let xj = x.pow(j as i64).expect("non-negative power");
    let inner = &(&(&Series::one(order) - &(a * &xi)) - &(b * &xj)) - &(g * &(&xi * &xj));
    StarGF {
        i,
        j,
        series: &lock_step_total(w, order) * &inner,
    }
}

/// Residual of the interior recurrence `T_{i,j} = 1 + z(wT_{i,j} + six neighbours)`
/// at `(i, j)`, for a family given as a function of the gaps.
pub fn lockstep_interior_residual(
    w: &Rat,
    t: impl Fn(usize, usize) -> Series,
    i: usize,
    j: usize,
) -> Series {
    let c = t(i, j);
    let n = c.order();
    let nb = [
        t(i + 1, j),
        t(i, j + 1),
        t(i - 1, j + 1),
        t(i, j - 1),
        t(i + 1, j - 1),
        t(i - 1, j),
    ];
    let sum = nb.iter().fold(c.scale(w), |a, b| &a + b);
    &(&c - &Series::one(n)) - &(&Series::z(n) * &sum)
}

/// `(α, β, γ)` for `w = 2` under each boundary, checked against the boundary
/// equations for gaps up to 5.
pub fn lockstep_adapt(boundary: WalkerBoundary, order: usize) -> Result<(Series, Series, Series)> {
    let x = WalkerX::lock_step(&rat(2), order).series;
    let one = Series::one(order);
    let coeffs = match boundary {
        WalkerBoundary::Vicious => (one.clone(), one.clone(), -&one),
        WalkerBoundary::Osculating => {
            let a = x.scale(&rat(3)).div(&(&one + &x.scale(&rat(2))))?;
            let g = -&x
                .scale(&rat(3))
                .div(&(&x + &Series::constant(rat(2), order)))?;
            (a.clone(), a, g)
        }
        WalkerBoundary::Updown => {
            let a = x.scale(&rat(2)).div(&(&one + &x))?;
            (a.clone(), a, -&x)
        }
    };
    check_lock_step_boundary(boundary, &coeffs, order)?;
    Ok(coeffs)
}

fn check_lock_step_boundary(
    boundary: WalkerBoundary,
    coeffs: &(Series, Series, Series),
    order: usize,
) -> Result<()> {
    let t = |i: usize, j: usize| lockstep_general(&rat(2), i, j, coeffs, order).series;
    let z = Series::z(order);
    let one = Series::one(order);
    for k in 0..=5usize {
        // both gap orientations: (0, k) and (k, 0)
        for (name, zero_first) in [("T_{0,j}", true), ("T_{i,0}", false)] {
            let at = |a: usize, b: usize| if zero_first { t(a, b) } else { t(b, a) };
            let lhs = at(0, k);
            let rhs = match boundary {
                WalkerBoundary::Vicious => Series::zero(order),
                _ if k == 0 => continue,
                WalkerBoundary::Osculating => &one + &(&z * &(&at(1, k) + &at(1, k - 1))),
                WalkerBoundary::Updown => {
                    let s = &(&(&at(0, k) + &at(0, k + 1)) + &at(1, k)) + &at(1, k - 1);
                    &one + &(&z * &s)
                }
            };
            if lhs != rhs {
                return Err(Error::BoundaryCheckFailed(format!(
                    "{boundary} {name} at gap {k}"
                )));
            }
        }
    }
    Ok(())
}

/// The `(u, w)`-refined lock-step stars:
/// `T(1 − α(X^i + X^j) + α·(2(1+X) − u(1+wX))/(2(1+X) − uX(1+w))·X^{i+j})`,
/// `α = ((1+X)² − u(1 − X + X² + wX))/((1+X)² − uX(w+X))`, `X = 2z(1+X)²`.
pub fn lockstep_refined(u: &Rat, w: &Rat, i: usize, j: usize, order: usize) -> Result<StarGF> {
    let x = WalkerX::lock_step(&rat(2), order).series;
    let n = order;
    let one = Series::one(n);
    let c = |v: Rat| Series::constant(v, n);
    let opx = &one + &x;
    let opx2 = &opx * &opx;
    let x2 = &x * &x;
    let a_num = &opx2 - &(&(&(&one - &x) + &x2) + &x.scale(w)).scale(u);
    let a_den = &opx2 - &(&x * &(&c(w.clone()) + &x)).scale(u);
    let alpha = a_num.div(&a_den)?;
    let r_num = &opx.scale(&rat(2)) - &(&one + &x.scale(w)).scale(u);
    let r_den = &opx.scale(&rat(2)) - &x.scale(&(u * (w + rat(1))));
    let ratio = r_num.div(&r_den)?;
    let xi = x.pow(i as i64)?;
    let xj = x.pow(j as i64)?;
    let inner = &(&one - &(&alpha * &(&xi + &xj))) + &(&(&alpha * &ratio) * &(&xi * &xj));
    Ok(StarGF {
        i,
        j,
        series: &lock_step_total(&rat(2), n) * &inner,
    })
}

/// Random-turn stars: vicious `(1 − X^i)(1 − X^j)/(1 − kz)` with `k = 6` (Dyck)
/// or `9` (Motzkin); osculating stars are the vicious ones shifted by one.
pub fn randomturn_gf(
    steps: Steps,
    boundary: WalkerBoundary,
    i: usize,
    j: usize,
    order: usize,
) -> Result<StarGF> {
    let shift = match boundary {
        WalkerBoundary::Vicious => 0,
        WalkerBoundary::Osculating => 1,
        WalkerBoundary::Updown => {
            return Err(Error::Invalid(
                "up-down walkers are defined for lock-step only".into(),
            ))
        }
    };
    let x = WalkerX::random_turn(steps, order).series;
    let k = match steps {
        Steps::Dyck => rat(6),
        Steps::Motzkin => rat(9),
    };
    let one = Series::one(order);
    let f = &(&one - &x.pow((i + shift) as i64)?) * &(&one - &x.pow((j + shift) as i64)?);
    Ok(StarGF {
        i,
        j,
        series: &Series::geometric(k, order) * &f,
    })
}

/// The radical forms displayed for random-turn osculating `(0, 0)` stars:
/// `(1 − 2z − √((1+2z)(1−6z)))/(8z²)` (Dyck) and
/// `(1 − 5z − √((1−z)(1−9z)))/(8z²)` (Motzkin).
pub fn randomturn_origin_radical(steps: Steps, order: usize) -> Result<Series> {
    let n = order + 2;
    let lin = |a: i64, b: i64| Series::from_coeffs(vec![rat(a), rat(b)]).padded(n);
    let (p, r) = match steps {
        Steps::Dyck => (lin(1, -2), &lin(1, 2) * &lin(1, -6)),
        Steps::Motzkin => (lin(1, -5), &lin(1, -1) * &lin(1, -9)),
    };
    let num = &p - &r.sqrt()?;
    Ok(num
        .shift_down(2)?
        .scale(&Rat::new(1.into(), 8.into()))
        .truncate(order))
}

/// Closed form for any model: lock-step via [`lockstep_adapt`] or
/// [`lockstep_refined`], random-turn via [`randomturn_gf`].
pub fn walker_closed(model: &WalkerModel, i: usize, j: usize, order: usize) -> Result<StarGF> {
    match (model.mode, &model.marks) {
        (Mode::LockStep, Some((u, w))) => lockstep_refined(u, w, i, j, order),
        (Mode::LockStep, None) => Ok(lockstep_general(
            &rat(2),
            i,
            j,
            &lockstep_adapt(model.boundary, order)?,
            order,
        )),
        (Mode::RandomTurn, _) => randomturn_gf(model.steps, model.boundary, i, j, order),
    }
}

/// Non-crossing lock-step moves `(Δi, Δj, weight)` out of gap state `(i, j)`,
/// shared edges weighted by `w`.
fn lock_step_moves(i: usize, j: usize, w: &Rat) -> Vec<(i64, i64, Rat)> {
    let mut out = vec![];
    for s1 in [-1i64, 1] {
        for s2 in [-1i64, 1] {
            for s3 in [-1i64, 1] {
                let (di, dj) = ((s2 - s1) / 2, (s3 - s2) / 2);
                if i as i64 + di < 0 || j as i64 + dj < 0 {
                    continue;
                }
                let mut weight = Rat::one();
                // walkers 1, 2 in contact taking the same step share an edge: allowed only downwards
                if i == 0 && s1 == s2 {
                    if s1 > 0 {
                        continue;
                    }
                    weight *= w;
                }
                // walkers 2, 3: shared edges only upwards
                if j == 0 && s2 == s3 {
                    if s2 < 0 {
                        continue;
                    }
                    weight *= w;
                }
                out.push((di, dj, weight));
            }
        }
    }
    out
}

fn random_turn_moves(steps: Steps) -> Vec<(i64, i64)> {
    let sizes: &[i64] = match steps {
        Steps::Dyck => &[-1, 1],
        Steps::Motzkin => &[-1, 0, 1],
    };
    let mut out = vec![];
    for &s in sizes {
        out.push((-s, 0)); // walker 1
        out.push((s, -s)); // walker 2
        out.push((0, s)); // walker 3
    }
    out
}

/// Weighted count of walks of length `0..order` from `(i, j)`, by forward DP
/// over gap states. `step` lists the moves out of a state with their weights,
/// and `visit` is the weight of being at a state.
fn grid_dp(
    i: usize,
    j: usize,
    order: usize,
    step: impl Fn(usize, usize) -> Vec<(i64, i64, Rat)>,
    visit: impl Fn(usize, usize) -> Rat,
) -> Vec<Rat> {
    let side = i.max(j) + order + 2;
    let mut cur = vec![vec![Rat::zero(); side]; side];
    cur[i][j] = visit(i, j);
    let mut out = Vec::with_capacity(order);
    for n in 0..order {
        out.push(cur.iter().flatten().sum());
        if n + 1 == order {
            break;
        }
        let mut next = vec![vec![Rat::zero(); side]; side];
        for (a, row) in cur.iter().enumerate() {
            for (b, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (da, db, wt) in step(a, b) {
                    let (na, nb) = ((a as i64 + da) as usize, (b as i64 + db) as usize);
                    let v = visit(na, nb);
                    if !v.is_zero() && !wt.is_zero() {
                        next[na][nb] += x * &wt * v;
                    }
                }
            }
        }
        cur = next;
    }
    out
}

/// Direct count of `(i, j)`-star configurations of lengths `0..order`.
pub fn walker_dp(model: &WalkerModel, i: usize, j: usize, order: usize) -> Vec<Rat> {
    match model.mode {
        Mode::LockStep => {
            let (u, w) = model.lock_step_marks();
            let visit = |a: usize, b: usize| {
                let contacts = (a == 0) as i32 + (b == 0) as i32;
                num_traits::pow(u.clone(), contacts as usize)
            };
            grid_dp(i, j, order, |a, b| lock_step_moves(a, b, &w), visit)
        }
        Mode::RandomTurn => {
            let min_gap = match model.boundary {
                WalkerBoundary::Vicious => 1,
                _ => 0,
            };
            let moves: Vec<(i64, i64, Rat)> = random_turn_moves(model.steps)
                .into_iter()
                .map(|(a, b)| (a, b, Rat::one()))
                .collect();
            let step = |a: usize, b: usize| {
                moves
                    .iter()
                    .filter(|(da, db, _)| a as i64 + da >= 0 && b as i64 + db >= 0)
                    .cloned()
                    .collect()
            };
            let visit = |a: usize, b: usize| {
                if a >= min_gap && b >= min_gap {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            };
            grid_dp(i, j, order, step, visit)
        }
    }
}

/// `(1 − X₁^{i+1})(1 − X₁^{j+1})/(1 − 3z)` for S1, and the same shape with
/// `X₂` and `1/(1 − 6z)` for S2.
pub fn quarterplane_gf(model: QuarterPlaneModel, i: usize, j: usize, order: usize) -> Series {
    let x = WalkerX::quarter_plane(model, order).series;
    let k = match model {
        QuarterPlaneModel::S1 => rat(3),
        QuarterPlaneModel::S2 => rat(6),
    };
    let one = Series::one(order);
    let f = &(&one - &x.pow(i as i64 + 1).expect("power"))
        * &(&one - &x.pow(j as i64 + 1).expect("power"));
    &Series::geometric(k, order) * &f
}

/// Direct count of walks of lengths `0..order` from `(i, j)` staying in the quarter plane.
pub fn quarterplane_dp(model: QuarterPlaneModel, i: usize, j: usize, order: usize) -> Vec<Rat> {
    let steps = model.steps();
    let step = |a: usize, b: usize| {
        steps
            .iter()
            .filter(|(da, db)| a as i64 + da >= 0 && b as i64 + db >= 0)
            .map(|&(da, db)| (da, db, Rat::one()))
            .collect()
    };
    grid_dp(i, j, order, step, |_, _| Rat::one())
}

/// First `(i, j, n)` with `i, j ≤ ij_max` (inside the closed form's domain)
/// where closed form and DP differ.
pub fn walker_mismatch(
    model: &WalkerModel,
    ij_max: usize,
    order: usize,
) -> Result<Option<(usize, usize, usize)>> {
    for i in 0..=ij_max {
        for j in 0..=ij_max {
            if !model.closed_form_domain(i, j) {
                continue;
            }
            let c = walker_closed(model, i, j, order)?.series;
            let d = walker_dp(model, i, j, order);
            if let Some(n) = c.coeffs().iter().zip(&d).position(|(a, b)| a != b) {
                return Ok(Some((i, j, n)));
            }
        }
    }
    Ok(None)
}

/// First `(i, j, n)` where the quarter-plane closed form and DP differ.
pub fn quarterplane_mismatch(
    model: QuarterPlaneModel,
    ij_max: usize,
    order: usize,
) -> Option<(usize, usize, usize)> {
    for i in 0..=ij_max {
        for j in 0..=ij_max {
            let c = quarterplane_gf(model, i, j, order);
            let d = quarterplane_dp(model, i, j, order);
            if let Some(n) = c.coeffs().iter().zip(&d).position(|(a, b)| a != b) {
                return Some((i, j, n));
            }
        }
    }
    None
}
