use embtree::arith::{rat, ratio};
use embtree::walkers::*;

#[test]
fn every_model_matches_its_dp() {
    for m in WalkerModel::all() {
        assert_eq!(walker_mismatch(&m, 4, 21).unwrap(), None, "{m}");
    }
}

#[test]
fn refined_model_matches_dp_at_rational_marks() {
    for (u, w) in [
        (ratio(1, 2), ratio(1, 3)),
        (rat(3), rat(0)),
        (ratio(-1, 2), rat(2)),
    ] {
        let m = WalkerModel::refined(u, w);
        assert_eq!(walker_mismatch(&m, 3, 16).unwrap(), None, "{m}");
    }
}

#[test]
fn gaps_are_symmetric() {
    for m in WalkerModel::all() {
        for i in 0..=4 {
            for j in 0..i {
                assert_eq!(
                    walker_dp(&m, i, j, 14),
                    walker_dp(&m, j, i, 14),
                    "{m} ({i},{j})"
                );
            }
        }
    }
}

#[test]
fn quarter_plane_models() {
    for q in [QuarterPlaneModel::S1, QuarterPlaneModel::S2] {
        assert_eq!(quarterplane_mismatch(q, 4, 21), None, "{q:?}");
    }
    let s1 = quarterplane_gf(QuarterPlaneModel::S1, 2, 1, 15);
    assert_eq!(
        quarterplane_gf(QuarterPlaneModel::S2, 2, 1, 15),
        s1.dilate(&rat(2))
    );
}
