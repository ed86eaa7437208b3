use crankmex::bijections::run_suite;

fn assert_suite(name: &str, j: u32, max_weight: u32) {
    let report = run_suite(name, j, max_weight).unwrap();
    assert!(report.passed(), "{report:#?}");
}

#[test]
fn franklin_to_weight_30() {
    assert_suite("franklin", 0, 30);
}

#[test]
fn first_cancellation_to_weight_14() {
    for j in 0..=3 {
        assert_suite("first_cancellation", j, 14);
    }
}

#[test]
fn second_cancellation_to_weight_14() {
    for j in 0..=3 {
        assert_suite("second_cancellation", j, 14);
    }
}

#[test]
fn cor36_to_weight_16() {
    assert_suite("cor36", 0, 16);
}

#[test]
fn cor38_to_weight_20() {
    assert_suite("cor38", 0, 20);
}

#[test]
fn frobenius_maps_to_weight_25() {
    assert_suite("crank0", 0, 25);
    for j in 0..=4 {
        assert_suite("crank_le_neg_j", j, 25);
    }
}
