use std::collections::BTreeSet;

use greg_core::polyseq::Family;
use greg_core::verify::{run_suite, Budget, Config, Mutation, CHECKS};

#[test]
fn default_suite_passes() {
    let r = run_suite(&Config::default()).unwrap();
    println!("{}", r.to_text());
    assert!(r.all_passed());
    assert_eq!(r.reports.len(), CHECKS.len());
    assert_eq!(r.summary.skipped, 0);
    let names: Vec<&str> = r.reports.iter().map(|c| c.name.as_str()).collect();
    let listed: Vec<&str> = CHECKS.iter().map(|c| c.0).collect();
    assert_eq!(names, listed);
}

#[test]
fn corrupted_g3_fails_only_g_checks() {
    let config = Config {
        mutation: Some(Mutation {
            family: Family::G,
            n: 3,
        }),
        ..Config::default()
    };
    let r = run_suite(&config).unwrap();
    let failed: BTreeSet<&str> = r
        .reports
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.as_str())
        .collect();
    let g_dependent: BTreeSet<&str> = [
        "golden_G",
        "golden_G_shift",
        "degrees_leading_constants",
        "shifted_positivity",
        "shifted_recursion_G",
        "interconversion_GH",
        "reciprocity_PG",
        "p_positive_unimodal",
        "q_specializations",
        "def_identity_G",
        "def_identity_P",
        "egf_theorem",
        "gh_functional",
        "census_unl_rooted",
        "census_unl_relaxed",
        "census_imp_rooted",
        "bernstein_signs",
        "derivative_vs_finite_difference",
    ]
    .into();
    assert!(failed.is_subset(&g_dependent), "{failed:?}");
    for must in [
        "golden_G",
        "golden_G_shift",
        "shifted_recursion_G",
        "interconversion_GH",
        "q_specializations",
        "def_identity_G",
        "egf_theorem",
        "census_unl_rooted",
        "census_imp_rooted",
    ] {
        assert!(failed.contains(must), "{must} should fail: {failed:?}");
    }
    for c in r.reports.iter().filter(|c| !c.passed) {
        assert!(c.witness.is_some(), "{} has no witness", c.name);
    }
}

#[test]
fn json_is_deterministic_across_worker_counts() {
    let config = |jobs| Config {
        budget: Budget::minimal().with_n_max(3),
        jobs,
        ..Config::default()
    };
    let a = run_suite(&config(1)).unwrap().to_json();
    let b = run_suite(&config(4)).unwrap().to_json();
    let c = run_suite(&config(4)).unwrap().to_json();
    assert_eq!(a, b);
    assert_eq!(b, c);
}

#[test]
fn selection_keeps_suite_order() {
    let config = Config {
        only: Some(vec!["halfplane".into(), "golden_H".into()]),
        ..Config::default()
    };
    let r = run_suite(&config).unwrap();
    let names: Vec<&str> = r.reports.iter().map(|c| c.name.as_str()).collect();
    assert_eq!(names, ["golden_H", "halfplane"]);
    assert_eq!(r.reports[1].params["passed"], "1000/1000");
}
