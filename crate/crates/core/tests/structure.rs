use qproj::cotangent::CalculusConfig;
use qproj::holomorphic::{Decomposition, Status};
use qproj::verify::{run_suite, Context, Suite};
use std::sync::OnceLock;

fn ctx() -> &'static Context {
    static CTX: OnceLock<Context> = OnceLock::new();
    CTX.get_or_init(|| Context::construct(CalculusConfig::new(2)).unwrap())
}

#[test]
fn every_suite_has_no_failures_for_cp1() {
    let dec = Decomposition::canonical(2);
    for suite in Suite::ALL {
        for e in run_suite(ctx(), suite, &dec).unwrap() {
            assert_ne!(e.status, Status::Fail, "{suite}: {} {:?}", e.check, e.witnesses);
        }
    }
}

#[test]
fn swapped_decomposition_is_rejected_with_witnesses() {
    let entries = run_suite(ctx(), Suite::Acs, &Decomposition::swapped(2)).unwrap();
    let failed: Vec<_> = entries.iter().filter(|e| e.status == Status::Fail).collect();
    assert!(failed.iter().any(|e| e.check == "homogeneity"));
    assert!(failed.iter().all(|e| !e.witnesses.is_empty()));
}

#[test]
fn canonical_decomposition_is_direct() {
    for n in 2..=4 {
        assert!(Decomposition::canonical(n).is_direct_sum());
        assert!(Decomposition::swapped(n).is_direct_sum());
    }
}

#[test]
fn suite_names_parse() {
    for suite in Suite::ALL {
        assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
    }
}
