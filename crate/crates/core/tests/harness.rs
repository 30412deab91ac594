use embtree::arith::{Rat, Series};
use embtree::harness::*;
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn report_is_independent_of_parallelism() {
    let cfg = |jobs| CampaignConfig {
        suites: vec![Suite::Kernel, Suite::Binary, Suite::Oeis],
        order: Some(12),
        jobs,
        ..Default::default()
    };
    let a = run_campaign(&cfg(1)).unwrap();
    let b = run_campaign(&cfg(4)).unwrap();
    assert_eq!(a.canonical(), b.canonical());
    assert_eq!(a.canonical().to_json(), b.canonical().to_json());
    assert!(!a.failed(), "{a}");
}

#[test]
fn suite_filter_selects_only_that_suite() {
    let cfg = CampaignConfig {
        suites: vec![Suite::Walkers],
        ..Default::default()
    };
    let ids: Vec<_> = cfg.select().unwrap().iter().map(|c| c.id).collect();
    assert!(!ids.is_empty());
    assert!(ids.iter().all(|id| id.starts_with("walkers.")));
}

fn series() -> impl Strategy<Value = Series> {
    prop::collection::vec(
        (-10_i64.pow(12)..10_i64.pow(12), 1_i64..10_i64.pow(6)),
        0..12,
    )
    .prop_map(|v| {
        Series::from_coeffs(
            v.into_iter()
                .map(|(p, q)| Rat::new(BigInt::from(p), BigInt::from(q)))
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn export_round_trip(s in series()) {
        for f in [Format::Json, Format::Csv] {
            prop_assert_eq!(import_series(&export_series(&s, f), f).unwrap(), s.clone());
        }
    }
}
