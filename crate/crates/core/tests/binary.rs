use embtree::arith::Series;
use embtree::binary::*;

fn table_rows(
    w: &BinaryWeights,
    b: Boundary,
    j_max: usize,
    n: usize,
) -> Vec<Vec<embtree::arith::Rat>> {
    binary_Tj_table(w, b, j_max, n + 1)
        .iter()
        .map(|s| s.coeffs().to_vec())
        .collect()
}

#[test]
fn oracle_matches_table_for_unit_weights() {
    let n = 6;
    for v in [
        [0, 0, 1, 0, 0],
        [1, 0, 1, 0, 0],
        [0, 1, 1, 0, 0],
        [0, 0, 0, 1, 1],
        [1, 1, 1, 1, 1],
    ] {
        let w = BinaryWeights::ints(v);
        for b in [Boundary::One, Boundary::Zero] {
            let o = binary_oracle_table(&w, b, 3, n).unwrap();
            let t = table_rows(&w, b, 3, n);
            assert_eq!(o, t, "{v:?} {b:?}");
        }
    }
}

#[test]
fn oracle_matches_table_for_rational_weights() {
    let w: BinaryWeights = "1/2,2,1,1/3,3/4".parse().unwrap();
    let o = binary_oracle_table(&w, Boundary::One, 2, 5).unwrap();
    assert_eq!(o, table_rows(&w, Boundary::One, 2, 5));
}

#[test]
fn corollaries_match_oracle() {
    let n = 8;
    let o =
        binary_oracle_table(&BinaryWeights::ints([0, 0, 1, 0, 0]), Boundary::One, 3, n).unwrap();
    for j in -1..=3i64 {
        assert_eq!(
            corollary_binary(j, n + 1).unwrap().coeffs(),
            &o[(j + 1) as usize][..]
        );
    }
    let o =
        binary_oracle_table(&BinaryWeights::ints([0, 0, 0, 1, 1]), Boundary::Zero, 3, n).unwrap();
    for j in -1..=3i64 {
        assert_eq!(
            corollary_planar(j, n + 1).unwrap().coeffs(),
            &o[(j + 1) as usize][..]
        );
    }
}

#[test]
fn limit_is_the_total_series() {
    let w = BinaryWeights::ints([1, 1, 1, 0, 1]);
    let tab = binary_Tj_table(&w, Boundary::One, 12, 10);
    assert_eq!(*tab.last().unwrap(), binary_T(&w, 10));
    assert_eq!(tab[0], Series::one(10));
}

#[test]
fn oracle_matches_table_for_w3_only() {
    let w = BinaryWeights::ints([0, 0, 0, 0, 1]);
    for b in [Boundary::One, Boundary::Zero] {
        let o = binary_oracle_table(&w, b, 4, 8).unwrap();
        assert_eq!(o, table_rows(&w, b, 4, 8), "{b:?}");
    }
}
