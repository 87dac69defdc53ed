//! The coquasi-triangular form on generators, QYBE, and the kernel of the quantum Killing map.
use qproj::ncpoly::{Algebra, NCPoly};
use qproj::rewrite::RewriteSystem;
use qproj::rform::{check_qybe, RForm};

fn main() {
    let g = Algebra::G(2);
    let r = RForm::new(g);
    for (i, j, k, l) in [(1, 1, 1, 1), (1, 1, 2, 2), (1, 2, 2, 1), (2, 1, 1, 2)] {
        println!("r(u{i}{j}, u{k}{l}) = {}", r.eval(&NCPoly::u(g, i, j), &NCPoly::u(g, k, l)));
    }
    println!("QYBE N=2: {}, N=3: {}", check_qybe(2), check_qybe(3));
    let sys = RewriteSystem::build_default(g).expect("completion");
    let ker = r.ker_q_basis(&sys, 2);
    println!("ker Q in degree <= 2 has {} basis elements", ker.len());
    for f in ker {
        println!("  {f}");
    }
}
