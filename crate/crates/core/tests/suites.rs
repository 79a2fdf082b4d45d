use crw_spectra::verify::{run_suite, Suite, VerifyOptions};

#[test]
fn every_suite_passes_on_the_standard_family() {
    let reports = run_suite(Suite::All, &VerifyOptions::default()).unwrap();
    let failing: Vec<String> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{} {} {:e} {:?}", r.identity, r.graph, r.max_rel_dev, r.note))
        .collect();
    assert!(failing.is_empty(), "{failing:#?}");
}

#[test]
fn reports_are_deterministic_and_sorted() {
    let opts = VerifyOptions::default();
    let a = run_suite(Suite::Zeta, &opts).unwrap();
    let b = run_suite(Suite::Zeta, &opts).unwrap();
    assert_eq!(a, b);
    assert!(a
        .windows(2)
        .all(|w| (&w[0].identity, &w[0].graph) <= (&w[1].identity, &w[1].graph)));
    assert_eq!(a.len(), 2 * 17);
}

#[test]
fn other_seed_changes_points_but_still_passes() {
    let opts = VerifyOptions {
        seed: 7,
        ..VerifyOptions::default()
    };
    let a = run_suite(Suite::Crw, &opts).unwrap();
    assert!(a.iter().all(|r| r.pass));
    let b = run_suite(Suite::Crw, &VerifyOptions::default()).unwrap();
    assert_ne!(a, b);
}
