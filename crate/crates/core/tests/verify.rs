use numsg::verify::{
    check_bijection_frobenius, check_bijection_genus, check_corollary_t1, run_all, VerifyConfig,
};

#[test]
fn fast_configuration_passes() {
    let results = run_all(&VerifyConfig::fast());
    assert!(results.len() >= 20);
    for r in &results {
        assert!(r.passed(), "{}\n{:?}", r.summary_line(), r.failures);
        assert!(r.cases > 0, "{}", r.summary_line());
    }
}

#[test]
fn bijection_ranges_are_validated() {
    let err = check_bijection_frobenius(2, 2..=10)
        .unwrap_err()
        .to_string();
    assert!(err.contains("4·alpha - 6"), "{err}");
    let err = check_bijection_genus(3, 7..=10).unwrap_err().to_string();
    assert!(err.contains("3·alpha - 1"), "{err}");
    let err = check_corollary_t1(0, 3..=10).unwrap_err().to_string();
    assert!(err.contains("beta"), "{err}");
}
