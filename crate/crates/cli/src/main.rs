//! `embtree`: generating functions for embedded trees, lattice paths and
//! walker systems, the verification campaign, and OEIS cross-referencing.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use embtree::arith::{parse_rat, Series};
use embtree::binary::{binary_T, binary_Tj_table, BinaryWeights, Boundary};
use embtree::dary::{dary_T, dary_Tj_table, DaryFamily};
use embtree::harness::{
    cache_key, export_series, fixtures, import_series, oeis_fetch, oeis_match, run_campaign,
    CampaignConfig, Format, SeriesCache, Suite,
};
use embtree::paths::{meander_dp, meander_gf, StepSet};
use embtree::walkers::{
    quarterplane_dp, quarterplane_gf, walker_closed, walker_dp, Mode, QuarterPlaneModel, Steps,
    WalkerBoundary, WalkerModel,
};

#[derive(Parser)]
#[command(
    name = "embtree",
    version,
    about = "Exact generating functions for embedded trees, paths and walkers"
)]
struct Cli {
    /// Truncation order: series are exact modulo z^ORDER.
    #[arg(long, global = true, default_value_t = 30, env = "EMBTREE_ORDER")]
    order: usize,
    /// Output format for series and reports.
    #[arg(long, global = true, default_value = "json", env = "EMBTREE_FORMAT")]
    format: Format,
    /// Directory of the advisory series cache.
    #[arg(long, global = true, env = "EMBTREE_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Accepted for compatibility; every computation is deterministic.
    #[arg(long, global = true, env = "EMBTREE_SEED")]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Embedded binary trees: T (no --j) or T_j, the labels bounded below by -j.
    Trees(TreesArgs),
    /// Naturally embedded (2d+1)-ary and 2d-ary trees.
    Dary(DaryArgs),
    /// Meanders (or excursions) of a step set started at a level.
    Paths(PathsArgs),
    /// Three-walker systems and quarter-plane walks from gaps (i, j).
    Walkers(WalkersArgs),
    /// Runs the verification campaign; exits nonzero if a check fails.
    Verify(VerifyArgs),
    /// Matches a series against the bundled OEIS fixtures, or fetches a b-file.
    Oeis(OeisArgs),
}

#[derive(Args)]
struct TreesArgs {
    /// Weights v1,v2,w1,w2,w3 as exact rationals.
    #[arg(long, default_value = "0,0,1,0,0", env = "EMBTREE_WEIGHTS")]
    weights: BinaryWeights,
    /// Label bound; omit for the unbounded series T.
    #[arg(long, allow_hyphen_values = true)]
    j: Option<i64>,
    /// Value of T_{-2}: 1 or 0.
    #[arg(long, default_value = "1")]
    boundary: Boundary,
}

#[derive(Args)]
struct DaryArgs {
    /// `odd` (arity 2d+1) or `even` (arity 2d).
    #[arg(long, default_value = "odd")]
    kind: String,
    #[arg(long, default_value_t = 1)]
    d: usize,
    /// Label bound; omit for the unbounded series T.
    #[arg(long)]
    j: Option<usize>,
}

#[derive(Args)]
struct PathsArgs {
    /// Step set as "jump:weight,...".
    #[arg(
        long,
        default_value = "-1:1,1:1",
        allow_hyphen_values = true,
        env = "EMBTREE_STEPS"
    )]
    steps: String,
    /// Starting level.
    #[arg(long, default_value_t = 0)]
    level: usize,
    /// Only paths returning to the starting level.
    #[arg(long)]
    excursions: bool,
    /// One series per final level instead of the total.
    #[arg(long, conflicts_with = "excursions")]
    mark_endpoint: bool,
    /// Count by dynamic programming instead of the closed form.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct WalkersArgs {
    /// `lockstep` or `randomturn`.
    #[arg(long, default_value = "lockstep")]
    mode: Mode,
    /// `dyck` or `motzkin`.
    #[arg(long, default_value = "dyck")]
    steps: Steps,
    /// `vicious`, `osculating` or `updown`.
    #[arg(long, default_value = "vicious")]
    boundary: WalkerBoundary,
    /// Gap between the lower two walkers.
    #[arg(long, default_value_t = 1)]
    i: usize,
    /// Gap between the upper two walkers.
    #[arg(long, default_value_t = 1)]
    j: usize,
    /// Contact weight of the refined lock-step model (requires --w).
    #[arg(long, requires = "w")]
    u: Option<String>,
    /// Shared-edge weight of the refined lock-step model (requires --u).
    #[arg(long, requires = "u")]
    w: Option<String>,
    /// Quarter-plane model `s1` or `s2` instead of a walker system.
    #[arg(long)]
    quarter_plane: Option<QuarterPlaneModel>,
    /// Count by dynamic programming instead of the closed form.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run (comma separated); default all.
    #[arg(long, value_delimiter = ',')]
    suite: Vec<Suite>,
    /// Check ids to run (comma separated).
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Worker threads.
    #[arg(long, env = "EMBTREE_JOBS")]
    jobs: Option<usize>,
    /// Key-value campaign file; command-line flags override it.
    #[arg(long, env = "EMBTREE_CONFIG")]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct OeisArgs {
    /// Series file in the selected --format, or `-` for stdin.
    #[arg(long = "match", value_name = "FILE", conflicts_with = "fetch")]
    match_file: Option<String>,
    /// Minimum number of agreeing terms.
    #[arg(long, default_value_t = 12)]
    min_terms: usize,
    /// A-number whose b-file to download (needs --online).
    #[arg(long, value_name = "ID")]
    fetch: Option<String>,
    /// Allow network access.
    #[arg(long, conflicts_with = "offline")]
    online: bool,
    /// Stay offline (the default).
    #[arg(long)]
    offline: bool,
    /// List the bundled fixtures.
    #[arg(long)]
    list: bool,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(bytes: &[u8]) -> Result<()> {
    let mut out = io::stdout().lock();
    out.write_all(bytes)?;
    out.flush()?;
    Ok(())
}

fn cached(
    cli: &Cli,
    module: &str,
    op: &str,
    params: &[(&str, String)],
    f: impl FnOnce() -> Result<Series>,
) -> Result<Series> {
    match &cli.cache_dir {
        None => f(),
        Some(dir) => {
            let key = cache_key(module, op, params, cli.order);
            let cache = SeriesCache::new(dir);
            if let Some(s) = cache.get(&key)? {
                return Ok(s);
            }
            let s = f()?;
            cache.put(&key, &s)?;
            Ok(s)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let n = cli.order;
    let series = match &cli.command {
        Command::Trees(a) => {
            let params = [
                ("weights", a.weights.to_string()),
                ("j", format!("{:?}", a.j)),
                ("boundary", format!("{:?}", a.boundary)),
            ];
            cached(&cli, "binary", "T_j", &params, || {
                Ok(match a.j {
                    None => binary_T(&a.weights, n),
                    Some(j) if j < -1 => bail!("--j must be at least -1"),
                    Some(j) => binary_Tj_table(&a.weights, a.boundary, j.max(0) as usize, n)
                        .swap_remove((j + 1) as usize),
                })
            })?
        }
        Command::Dary(a) => {
            let fam: DaryFamily = format!("{}:{}", a.kind, a.d).parse()?;
            let params = [("family", fam.to_string()), ("j", format!("{:?}", a.j))];
            cached(&cli, "dary", "T_j", &params, || {
                Ok(match a.j {
                    None => dary_T(&fam, n),
                    Some(j) => dary_Tj_table(&fam, j, n).swap_remove(j + fam.c()),
                })
            })?
        }
        Command::Paths(a) => return paths(&cli, a),
        Command::Walkers(a) => {
            let params = [
                ("mode", a.mode.to_string()),
                ("steps", a.steps.to_string()),
                ("boundary", a.boundary.to_string()),
                ("i", a.i.to_string()),
                ("j", a.j.to_string()),
                ("u", format!("{:?}", a.u)),
                ("w", format!("{:?}", a.w)),
                ("quarter_plane", format!("{:?}", a.quarter_plane)),
                ("oracle", a.oracle.to_string()),
            ];
            cached(&cli, "walkers", "gf", &params, || walkers(a, n))?
        }
        Command::Verify(a) => return verify(&cli, a),
        Command::Oeis(a) => return oeis(&cli, a),
    };
    emit(&export_series(&series, cli.format))?;
    Ok(ExitCode::SUCCESS)
}

fn paths(cli: &Cli, a: &PathsArgs) -> Result<ExitCode> {
    let s = StepSet::parse(&a.steps)?;
    let n = cli.order;
    if a.mark_endpoint {
        let rows: Vec<(i64, Series)> = if a.oracle {
            let (_, table) = meander_dp(&s, a.level, n);
            let width = table.iter().map(Vec::len).max().unwrap_or(0);
            (0..width)
                .map(|k| {
                    let c = table
                        .iter()
                        .map(|r| r.get(k).cloned().unwrap_or_default())
                        .collect();
                    (k as i64, Series::from_coeffs(c))
                })
                .collect()
        } else {
            let m = meander_gf(&s, a.level, n)?;
            let hi = (a.level + n.saturating_sub(1) * s.d()) as i64;
            (0..=hi).map(|k| (k, m.marked.extract(k))).collect()
        };
        let rows: Vec<_> = rows.into_iter().filter(|(_, r)| !r.is_zero()).collect();
        let out = match cli.format {
            Format::Json => {
                let levels: serde_json::Map<String, serde_json::Value> = rows
                    .iter()
                    .map(|(k, r)| {
                        Ok((
                            k.to_string(),
                            serde_json::from_slice(&export_series(r, Format::Json))?,
                        ))
                    })
                    .collect::<Result<_>>()?;
                let v = serde_json::json!({ "order": n, "start_level": a.level, "final_levels": levels });
                format!("{v}\n")
            }
            Format::Csv => {
                let mut out = String::from("level,n,numerator,denominator\n");
                for (k, r) in &rows {
                    for (i, c) in r.coeffs().iter().enumerate() {
                        out.push_str(&format!("{k},{i},{},{}\n", c.numer(), c.denom()));
                    }
                }
                out
            }
        };
        emit(out.as_bytes())?;
        return Ok(ExitCode::SUCCESS);
    }
    let params = [
        ("steps", s.to_string()),
        ("level", a.level.to_string()),
        ("excursions", a.excursions.to_string()),
        ("oracle", a.oracle.to_string()),
    ];
    let series = cached(cli, "paths", "meander", &params, || {
        Ok(match (a.excursions, a.oracle) {
            (false, false) => meander_gf(&s, a.level, n)?.plain,
            (true, false) => meander_gf(&s, a.level, n)?.marked.extract(a.level as i64),
            (false, true) => Series::from_coeffs(meander_dp(&s, a.level, n).0),
            (true, true) => Series::from_coeffs(
                meander_dp(&s, a.level, n)
                    .1
                    .iter()
                    .map(|r| r.get(a.level).cloned().unwrap_or_default())
                    .collect(),
            ),
        })
    })?;
    emit(&export_series(&series, cli.format))?;
    Ok(ExitCode::SUCCESS)
}

fn walkers(a: &WalkersArgs, n: usize) -> Result<Series> {
    if let Some(q) = a.quarter_plane {
        return Ok(if a.oracle {
            Series::from_coeffs(quarterplane_dp(q, a.i, a.j, n))
        } else {
            quarterplane_gf(q, a.i, a.j, n)
        });
    }
    let model = match (&a.u, &a.w) {
        (Some(u), Some(w)) => {
            if a.mode != Mode::LockStep || a.steps != Steps::Dyck {
                bail!("--u/--w refine the lock-step Dyck model only");
            }
            WalkerModel::refined(parse_rat(u)?, parse_rat(w)?)
        }
        _ => WalkerModel::new(a.mode, a.steps, a.boundary)?,
    };
    if a.oracle {
        return Ok(Series::from_coeffs(walker_dp(&model, a.i, a.j, n)));
    }
    if !model.closed_form_domain(a.i, a.j) {
        bail!(
            "the closed form does not apply to {model} at (i, j) = ({}, {}); use --oracle",
            a.i,
            a.j
        );
    }
    Ok(walker_closed(&model, a.i, a.j, n)?.series)
}

fn verify(cli: &Cli, a: &VerifyArgs) -> Result<ExitCode> {
    let mut cfg = match &a.config {
        Some(p) => CampaignConfig::parse(
            &std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        )?,
        None => CampaignConfig::default(),
    };
    if !a.suite.is_empty() {
        cfg.suites = a.suite.clone();
    }
    if !a.only.is_empty() {
        cfg.only = a.only.clone();
    }
    if let Some(j) = a.jobs {
        cfg.jobs = j.max(1);
    }
    // --order applies only when given explicitly (or through the environment)
    if std::env::args().any(|x| x == "--order" || x.starts_with("--order="))
        || std::env::var_os("EMBTREE_ORDER").is_some()
    {
        cfg.order = Some(cli.order);
    }
    let report = run_campaign(&cfg)?;
    let body = match cli.format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
    };
    emit(body.as_bytes())?;
    eprintln!("{report}");
    Ok(if report.failed() {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

fn oeis(cli: &Cli, a: &OeisArgs) -> Result<ExitCode> {
    if a.list {
        for r in fixtures() {
            let head: Vec<String> = r.terms.iter().take(8).map(ToString::to_string).collect();
            println!("{} {} ...", r.id, head.join(","));
        }
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(id) = &a.fetch {
        let r = oeis_fetch(id, a.online)?;
        let mut out = String::new();
        for (i, t) in r.terms.iter().enumerate() {
            out.push_str(&format!("{i} {t}\n"));
        }
        emit(out.as_bytes())?;
        return Ok(ExitCode::SUCCESS);
    }
    let Some(path) = &a.match_file else {
        bail!("one of --match, --fetch or --list is required");
    };
    let mut bytes = vec![];
    if path == "-" {
        io::stdin().read_to_end(&mut bytes)?;
    } else {
        bytes = std::fs::read(path).with_context(|| format!("reading {path}"))?;
    }
    let s = import_series(&bytes, cli.format)?;
    let ids = oeis_match(&s, a.min_terms)?;
    for id in &ids {
        println!("{id}");
    }
    Ok(if ids.is_empty() {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}
