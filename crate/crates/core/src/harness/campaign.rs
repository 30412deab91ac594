use std::time::Instant;

use rayon::prelude::*;

use super::checks::{registry, CheckDef, Ctx, Suite};
use super::report::{CheckResult, Status, VerificationReport};
use crate::error::{Error, Result};

/// Which checks to run and how.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignConfig {
    /// Empty selects every suite.
    pub suites: Vec<Suite>,
    /// Check ids; when non-empty, only these run.
    pub only: Vec<String>,
    pub order: Option<usize>,
    pub jobs: usize,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            suites: vec![],
            only: vec![],
            order: None,
            jobs: 1,
        }
    }
}

fn list(v: &str) -> impl Iterator<Item = &str> {
    v.split(',').map(str::trim).filter(|s| !s.is_empty())
}

impl CampaignConfig {
    /// Parses `key = value` lines (`suites`, `only`, `order`, `jobs`); `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = CampaignConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |field: &str, msg: String| Error::ConfigParse {
                line: i + 1,
                field: field.to_string(),
                msg,
            };
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| err("", "expected key = value".into()))?;
            let (k, v) = (k.trim(), v.trim());
            match k {
                "suites" => {
                    cfg.suites = list(v)
                        .map(str::parse)
                        .collect::<Result<_>>()
                        .map_err(|e| err(k, e.to_string()))?
                }
                "only" => cfg.only = list(v).map(String::from).collect(),
                "order" => cfg.order = Some(v.parse().map_err(|e| err(k, format!("{e}")))?),
                "jobs" => {
                    cfg.jobs = v.parse().map_err(|e| err(k, format!("{e}")))?;
                    if cfg.jobs == 0 {
                        return Err(err(k, "must be positive".into()));
                    }
                }
                _ => return Err(err(k, "unknown field".into())),
            }
        }
        Ok(cfg)
    }

    /// The registered checks this configuration selects, or an error naming an unknown id.
    pub fn select(&self) -> Result<Vec<CheckDef>> {
        let all = registry();
        for id in &self.only {
            if !all.iter().any(|c| c.id == id) {
                return Err(Error::Invalid(format!("unknown check {id:?}")));
            }
        }
        Ok(all
            .into_iter()
            .filter(|c| self.suites.is_empty() || self.suites.contains(&c.suite))
            .filter(|c| self.only.is_empty() || self.only.iter().any(|id| id == c.id))
            .collect())
    }
}

/// Command line that re-runs a single check.
pub fn reproducer(id: &str, order: Option<usize>) -> String {
    match order {
        Some(n) => format!("embtree verify --only {id} --order {n}"),
        None => format!("embtree verify --only {id}"),
    }
}

/// Runs one check; an error inside the check is reported as a failure.
pub fn run_check(def: &CheckDef, ctx: &Ctx) -> CheckResult {
    let start = Instant::now();
    let (status, detail) = match (def.run)(ctx) {
        Ok(o) => (o.status, o.detail),
        Err(e) => (Status::Fail, format!("error: {e}")),
    };
    CheckResult {
        id: def.id.to_string(),
        claim: def.claim.to_string(),
        status,
        detail,
        reproducer: reproducer(def.id, ctx.order),
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}

/// Runs the selected checks on `jobs` worker threads. The report is sorted by
/// id, so its content (apart from timings) does not depend on `jobs`.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<VerificationReport> {
    let defs = cfg.select()?;
    let ctx = Ctx { order: cfg.order };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
    let results = pool.install(|| defs.par_iter().map(|d| run_check(d, &ctx)).collect());
    Ok(VerificationReport::new(results))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_config() {
        let c = CampaignConfig::parse(
            "# campaign\nsuites = kernel, oeis\norder=12\njobs = 3\n\nonly = kernel.fuss-catalan",
        )
        .unwrap();
        assert_eq!(c.suites, vec![Suite::Kernel, Suite::Oeis]);
        assert_eq!(c.order, Some(12));
        assert_eq!(c.jobs, 3);
        assert_eq!(c.select().unwrap().len(), 1);
    }

    #[test]
    fn config_errors_name_line_and_field() {
        match CampaignConfig::parse("order = 3\njobs = x") {
            Err(Error::ConfigParse { line, field, .. }) => {
                assert_eq!((line, field.as_str()), (2, "jobs"))
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            CampaignConfig::parse("colour = red"),
            Err(Error::ConfigParse { line: 1, .. })
        ));
        assert!(CampaignConfig::parse("suites = trees").is_err());
        assert!(CampaignConfig::parse("jobs = 0").is_err());
        let c = CampaignConfig {
            only: vec!["nope".into()],
            ..Default::default()
        };
        assert!(c.select().is_err());
    }

    #[test]
    fn small_campaign_runs() {
        let cfg = CampaignConfig {
            suites: vec![Suite::Kernel],
            order: Some(30),
            jobs: 2,
            ..Default::default()
        };
        let r = run_campaign(&cfg).unwrap();
        assert_eq!(r.checks.len(), 2);
        assert!(!r.failed(), "{r}");
        assert_eq!(
            r.checks[0].reproducer,
            "embtree verify --only kernel.fuss-catalan --order 30"
        );
    }
}
