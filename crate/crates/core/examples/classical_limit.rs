//! Specialises I^2 at q = 1 and compares with the symmetric tensors.
use qproj::cotangent::CalculusConfig;
use qproj::linalg::SubspaceBasis;
use qproj::prolong::{format_tensor, specialize, symmetric_tensors};
use qproj::qscalar::Rat;
use qproj::verify::Context;

fn main() {
    let ctx = Context::construct(CalculusConfig::new(3)).expect("construction");
    let d = ctx.calc.basis.v_dim();
    for q0 in [Rat::from_integer(1.into()), Rat::new(2.into(), 1.into())] {
        let rows: Vec<_> = ctx.i2.rows.iter().map(|r| specialize(r, &q0).expect("no pole")).collect();
        let span = SubspaceBasis::span(d * d, rows.iter());
        println!("q = {q0}: dim {}, symmetric: {}", span.dim(), span == symmetric_tensors(d));
        if q0 == Rat::from_integer(2.into()) {
            println!("  first row: {}", format_tensor(&ctx.calc.basis, 2, &span.rows[0]));
        }
    }
}
