//! Verification campaign, OEIS fixtures and client, series export, and an
//! on-disk series cache.

mod cache;
mod campaign;
mod checks;
mod export;
mod oeis;
mod report;

pub use cache::{cache_key, SeriesCache};
pub use campaign::{reproducer, run_campaign, run_check, CampaignConfig};
pub use checks::{registry, CheckDef, Ctx, Outcome, Suite, ACCEPTANCE};
pub use export::{export_series, import_series, Format};
pub use oeis::{
    fixture, fixtures, named_weight_vectors, oeis_fetch, oeis_match, oeis_match_in, parse_bfile,
    OeisRecord, OeisSource,
};
pub use report::{CheckResult, Status, VerificationReport};
