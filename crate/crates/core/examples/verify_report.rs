//! Runs every suite for CP^1 and prints the Markdown report.
use qproj::cotangent::CalculusConfig;
use qproj::holomorphic::Decomposition;
use qproj::verify::{summary, verify, Context, Suite};

fn main() {
    let ctx = Context::construct(CalculusConfig::new(2)).expect("construction");
    let report = verify(&ctx, &Suite::ALL, &Decomposition::canonical(2)).expect("verification");
    println!("{}", report.to_markdown());
    let (pass, fail, mismatch) = summary(&report);
    println!("{pass} passed, {fail} failed, {mismatch} differ from printed formulas");
}
