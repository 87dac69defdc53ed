//! The relation space I^2 of the maximal prolongation and the dimensions of V^k.
use qproj::cotangent::{Calculus, CalculusConfig};
use qproj::prolong::{format_tensor, i2_from_generators, wedge_label, ExteriorAlgebra};

fn main() {
    for n in [2, 3] {
        let calc = Calculus::construct(CalculusConfig::new(n)).expect("construction");
        let i2 = i2_from_generators(&calc, &calc.cp_ideal_generators()).expect("relations");
        println!("N = {n}: dim I^2 = {}", i2.dim());
        for r in &i2.rows {
            println!("  {}", format_tensor(&calc.basis, 2, r));
        }
        let ext = ExteriorAlgebra::of_v(n, i2).expect("exterior algebra");
        println!("  dim V^k = {:?}", ext.dims());
        let v2: Vec<String> = ext.powers[2].labels.iter().map(|t| wedge_label(&calc.basis, t)).collect();
        println!("  V^2 basis: {}", v2.join(", "));
    }
}
