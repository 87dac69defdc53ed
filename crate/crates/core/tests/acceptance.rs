//! Acceptance criteria, one PASS/FAIL line each. All comparisons are exact.
//!
//! Criteria 6 and 7 compare against printed formulas that disagree with the
//! computed structure; their FAIL lines carry the derived values. Any other
//! FAIL makes this target exit non-zero.

use qproj::cotangent::CalculusConfig;
use qproj::holomorphic::{CheckEntry, Decomposition, Status, VerificationReport};
use qproj::verify::{run_suite, verify, Context, Suite};
use std::time::{Duration, Instant};

const EXPECTED_FAILURES: [usize; 2] = [6, 7];

struct Run {
    report: VerificationReport,
    swapped: Vec<CheckEntry>,
    hopf_time: Duration,
    total_time: Duration,
    json: String,
}

fn run(n: usize) -> Run {
    let start = Instant::now();
    let ctx = Context::construct(CalculusConfig::new(n)).expect("construction");
    let dec = Decomposition::canonical(n);
    let t = Instant::now();
    let hopf = run_suite(&ctx, Suite::Hopf, &dec).expect("hopf suite");
    let hopf_time = t.elapsed();
    let mut report = verify(&ctx, &Suite::ALL[1..], &dec).expect("verification");
    report.suites.insert(0, Suite::Hopf.name().to_string());
    let mut entries = hopf;
    entries.append(&mut report.entries);
    report.entries = entries;
    let total_time = start.elapsed();
    let swapped = run_suite(&ctx, Suite::Acs, &Decomposition::swapped(n)).expect("acs suite");
    let json = report.to_json().to_string();
    Run { report, swapped, hopf_time, total_time, json }
}

fn entry<'a>(r: &'a VerificationReport, name: &str) -> &'a CheckEntry {
    r.entries.iter().find(|e| e.check == name).unwrap_or_else(|| panic!("missing check {name}"))
}

fn all_pass(runs: &[(usize, &Run)], names: &[&str]) -> (bool, String) {
    let mut bad = Vec::new();
    for (n, r) in runs {
        for name in names {
            let e = entry(&r.report, name);
            if e.status != Status::Pass {
                bad.push(format!("N={n} {name}: {}", e.witnesses.first().cloned().unwrap_or_default()));
            }
        }
    }
    (bad.is_empty(), bad.join("; "))
}

fn main() {
    let r2 = run(2);
    let r3 = run(3);
    let runs = [(2, &r2), (3, &r3)];
    let mut results: Vec<(usize, bool, String)> = Vec::new();

    // Hopf axioms on both algebras for each N, with the runtime bounds.
    let mut bad = Vec::new();
    for (n, r) in &runs {
        for e in r.report.entries.iter().filter(|e| e.check.starts_with("hopf_axioms")) {
            if e.status != Status::Pass {
                bad.push(format!("N={n} {}", e.check));
            }
        }
    }
    let time_ok = r2.hopf_time < Duration::from_secs(60) && r3.hopf_time < Duration::from_secs(600);
    results.push((
        1,
        bad.is_empty() && time_ok,
        format!("hopf suite {:.2?} (N=2), {:.2?} (N=3) {}", r2.hopf_time, r3.hopf_time, bad.join("; ")),
    ));

    let (ok, why) = all_pass(&runs, &["determinant_central_grouplike"]);
    results.push((2, ok, why));

    let (ok, why) = all_pass(&runs, &["qybe_and_r_form"]);
    results.push((3, ok, why));

    let (ok, why) = all_pass(&runs, &["z_coinvariant"]);
    results.push((4, ok, why));

    let (ok, why) = all_pass(&runs, &["lambda_dimension", "table_model_agreement", "printed_action_table"]);
    let dims: Vec<String> =
        runs.iter().map(|(n, r)| format!("N={n}: dim {}", entry(&r.report, "lambda_dimension").dimensions["Lambda^1"])).collect();
    results.push((5, ok, format!("{} {why}", dims.join(", "))));

    let (ok, _) = all_pass(&runs, &["z_classes"]);
    let derived: Vec<String> = runs
        .iter()
        .flat_map(|(n, r)| entry(&r.report, "z_classes").coefficients.iter().map(move |(k, v)| format!("N={n} {k} = {v}")))
        .collect();
    results.push((6, ok, format!("derived {}", derived.join(", "))));

    let mut notes = Vec::new();
    let mut ok = true;
    for (n, r) in &runs {
        let e = entry(&r.report, "i2");
        let dim = e.dimensions["I2"];
        notes.push(format!("N={n}: dim I2 = {dim} ({:?})", e.status));
        ok &= e.status == Status::Pass;
    }
    let w = entry(&r2.report, "woronowicz_cp1");
    notes.push(format!("Woronowicz coefficients {:?}", w.status));
    ok &= w.status == Status::Pass;
    results.push((7, ok, notes.join(", ")));

    let (ok, _) = all_pass(&runs, &["vk_dimensions"]);
    let dims: Vec<String> =
        runs.iter().map(|(n, r)| format!("N={n}: {:?}", entry(&r.report, "vk_dimensions").dimensions.values().collect::<Vec<_>>())).collect();
    results.push((8, ok, dims.join(", ")));

    let (ok, why) = all_pass(&runs, &["homogeneity", "wedge_isomorphisms", "star_condition", "decomposition_subcomodules"]);
    let negative = runs.iter().all(|(_, r)| {
        let h = r.swapped.iter().find(|e| e.check == "homogeneity").expect("homogeneity");
        h.status == Status::Fail && !h.witnesses.is_empty()
    });
    let comps: Vec<String> = runs
        .iter()
        .map(|(n, r)| {
            let d = &entry(&r.report, "homogeneity").dimensions;
            format!("N={n}: {}/{}/{}", d["I2(2,0)"], d["I2(1,1)"], d["I2(0,2)"])
        })
        .collect();
    results.push((9, ok && negative, format!("{}; swapped control fails: {negative} {why}", comps.join(", "))));

    let (ok, why) = all_pass(&runs, &["integrability", "integrability_antiholomorphic", "dolbeault"]);
    results.push((10, ok, why));

    let (ok, why) = all_pass(&runs, &["top_form", "holomorphic_prolongation"]);
    let powers: Vec<String> = runs
        .iter()
        .map(|(n, r)| {
            format!("N={n}: e+ wedge det^{}", entry(&r.report, "top_form").coefficients.get("holomorphic det power").cloned().unwrap_or_default())
        })
        .collect();
    results.push((11, ok, format!("{} {why}", powers.join(", "))));

    let (ok, why) = all_pass(&runs, &["classical_limit"]);
    results.push((12, ok, why));

    let r2b = run(2);
    let r3b = run(3);
    let same = r2.json == r2b.json && r3.json == r3b.json;
    let fast = r2.total_time < Duration::from_secs(60) && r3.total_time < Duration::from_secs(900);
    results.push((
        13,
        same && fast,
        format!("verify all {:.1?} (N=2), {:.1?} (N=3); byte-identical reruns: {same}", r2.total_time, r3.total_time),
    ));

    let mut unexpected = Vec::new();
    for (k, ok, detail) in &results {
        println!("criterion {k:>2}: {} {detail}", if *ok { "PASS" } else { "FAIL" });
        if !ok && !EXPECTED_FAILURES.contains(k) {
            unexpected.push(*k);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
