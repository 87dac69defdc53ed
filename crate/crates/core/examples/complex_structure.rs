//! Almost complex structure checks on CP^2 for the canonical and the swapped decomposition.
use qproj::holomorphic::Decomposition;
use qproj::cotangent::CalculusConfig;
use qproj::verify::{run_suite, Context, Suite};

fn main() {
    let ctx = Context::construct(CalculusConfig::new(3)).expect("construction");
    for dec in [Decomposition::canonical(3), Decomposition::swapped(3)] {
        println!("decomposition {}", dec.name);
        for suite in [Suite::Acs, Suite::Integrability] {
            for e in run_suite(&ctx, suite, &dec).expect("suite") {
                println!("  {:<32} {:<6} {:?}", e.check, e.status.label(), e.dimensions);
                for w in e.witnesses.iter().take(2) {
                    println!("      {w}");
                }
            }
        }
    }
}
