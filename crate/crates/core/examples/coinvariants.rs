//! The generators z_ij of C_q[CP^2] are coinvariant under the U(2) coaction; u12 is not.
use qproj::cotangent::{alpha, is_coinvariant, z};
use qproj::ncpoly::{Algebra, NCPoly};
use qproj::rewrite::RewriteSystem;

fn main() {
    let (g, h) = (Algebra::G(3), Algebra::H(3));
    let gsys = RewriteSystem::build_default(g).expect("completion");
    let hsys = RewriteSystem::build_default(h).expect("completion");
    for i in 1..=3 {
        for j in 1..=3 {
            println!("z{i}{j} coinvariant: {}", is_coinvariant(&gsys, &hsys, &z(g, i, j)));
        }
    }
    println!("u12 coinvariant: {}", is_coinvariant(&gsys, &hsys, &NCPoly::u(g, 1, 2)));
    println!("alpha(u11) = {}", alpha(g, &NCPoly::u(g, 1, 1)));
    println!("alpha(u23) = {}", alpha(g, &NCPoly::u(g, 2, 3)));
}
