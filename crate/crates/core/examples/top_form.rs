//! Coaction on the top holomorphic and antiholomorphic wedges, and the holomorphic prolongation.
use qproj::cotangent::CalculusConfig;
use qproj::holomorphic::{check_holomorphic_prolongation, top_form_coaction};
use qproj::verify::Context;

fn main() {
    for n in [2, 3] {
        let ctx = Context::construct(CalculusConfig::new(n)).expect("construction");
        for holo in [true, false] {
            let t = top_form_coaction(&ctx.calc, &ctx.ext, holo).expect("coaction");
            println!(
                "N = {n}, {}: coefficient {}, det power {:?}",
                if holo { "e+ wedge" } else { "e- wedge" },
                t.coefficient,
                t.det_power
            );
        }
        let e = check_holomorphic_prolongation(&ctx.calc, &ctx.ext).expect("prolongation");
        println!("N = {n}: {} {} {:?}", e.check, e.status.label(), e.dimensions);
    }
}
