//! Classes in Lambda^1 of the z-generators and of antipodes of generators.
use qproj::cotangent::{format_vector, Calculus, CalculusConfig};
use qproj::ncpoly::NCPoly;

fn main() {
    for n in [2, 3] {
        let calc = Calculus::construct(CalculusConfig::new(n)).expect("construction");
        let b = calc.basis;
        println!("N = {n}: dim Lambda^1 = {}, dim V = {}", b.dim(), b.v_dim());
        for i in 2..=n {
            let show = |f: &NCPoly| format_vector(&b, &calc.lambda_coset(f).expect("class"));
            println!("  [z{i}1] = {}", show(&calc.z(i, 1)));
            println!("  [z1{i}] = {}", show(&calc.z(1, i)));
            println!("  [S(u{i}1)] = {}", format_vector(&b, &calc.table.coset_plus(&NCPoly::u(calc.g, i, 1).antipode())));
            println!("  [S(u1{i})] = {}", format_vector(&b, &calc.table.coset_plus(&NCPoly::u(calc.g, 1, i).antipode())));
        }
    }
}
