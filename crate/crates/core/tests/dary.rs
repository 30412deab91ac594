use embtree::arith::{rat, RationalFunction};
use embtree::dary::*;

#[test]
fn oracle_matches_table() {
    let n = 6;
    for f in [
        DaryFamily::odd(1),
        DaryFamily::odd(2),
        DaryFamily::even(1),
        DaryFamily::even(2),
    ] {
        let o = dary_oracle_table(&f, 3, n).unwrap();
        let t: Vec<_> = dary_Tj_table(&f, 3, n + 1)
            .iter()
            .map(|s| s.coeffs().to_vec())
            .collect();
        assert_eq!(o, t, "{f}");
    }
}

#[test]
fn brute_force_row_agrees_with_table() {
    let f = DaryFamily::even(2);
    let t = dary_Tj_table(&f, 2, 6);
    for j in -3..=2i64 {
        assert_eq!(
            brute_force_dary(&f, j, 5).unwrap(),
            t[(j + 3) as usize].coeffs(),
            "j={j}"
        );
    }
}

#[test]
fn one_parameter_solutions_are_exact() {
    for f in [
        DaryFamily::odd(1),
        DaryFamily::odd(2),
        DaryFamily::even(1),
        DaryFamily::even(2),
        DaryFamily::even(3),
    ] {
        assert!(verify_one_param(&f).unwrap(), "{f}");
    }
}

#[test]
fn even_one_at_unit_lambda_is_the_binary_product() {
    let s = OneParamSolution::new(&DaryFamily::even(1), Some(rat(1)));
    let v = s.vars();
    let f = |e: i64| {
        &RationalFunction::constant(v, rat(1)) - &RationalFunction::monomial(v, rat(1), &[e, 1])
    };
    let expect = (&f(2) * &f(7)).div(&(&f(4) * &f(5))).unwrap();
    assert!(s.factor(0).rf_equal(&expect).unwrap());
}

#[test]
fn one_branch_alpha_closed_form() {
    assert!(dary_alpha_one_param(&DaryFamily::odd(1), 10)
        .unwrap()
        .agree());
    assert!(dary_alpha_one_param(&DaryFamily::odd(2), 6)
        .unwrap()
        .agree());
    assert!(dary_alpha_one_param(&DaryFamily::even(2), 6)
        .unwrap()
        .agree());
}

#[test]
fn main_equation_two_branches() {
    let r = verify_prop_main_equation(&DaryFamily::odd(2), 2, 10).unwrap();
    assert!(r.holds(), "{r:?}");
    let r = verify_prop_main_equation(&DaryFamily::even(2), 2, 8).unwrap();
    assert!(r.holds(), "{r:?}");
}
