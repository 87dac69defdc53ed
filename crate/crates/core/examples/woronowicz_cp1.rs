//! The three-dimensional calculus on C_q[SU_2] reproduces I^2 of CP^1.
use qproj::cotangent::{Calculus, CalculusConfig};
use qproj::linalg::SubspaceBasis;
use qproj::prolong::{format_tensor, i2_cp1_reference, Woronowicz};

fn main() {
    let calc = Calculus::construct(CalculusConfig::new(2)).expect("construction");
    let w = Woronowicz::build(&calc.gsys, 3).expect("quotient");
    println!("quotient dimension {}", w.model.quotient_dim);
    let images = w.generator_images().expect("relation tensors");
    for (name, v) in &images {
        println!("{name} -> {}", format_tensor(&calc.basis, 2, v));
    }
    let span = SubspaceBasis::span(4, images.iter().map(|(_, v)| v));
    println!("span equals the reference I^2: {}", span == i2_cp1_reference());
}
